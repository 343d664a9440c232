#include "duality/semicharacter.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace duality;

namespace {

std::shared_ptr<const LengthReport> ball(const Group& g, const WeightFunction& w, std::int64_t radius) {
  return std::make_shared<const LengthReport>(exploreBall(g, g.standardGenerators(), w, radius));
}

std::shared_ptr<const LengthReport> unitBall(const Group& g, std::int64_t radius) {
  return ball(g, WeightFunction::uniform(g.standardGenerators().size()), radius);
}

/// Random grammar tree on g. Length leaves use radius 4 * maxWeight so every
/// leaf is defined on the unit-weight ball of radius 2 and its products.
Semicharacter randomTree(const Group& g, std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth == 0 ? 1 : 6);
  std::uniform_real_distribution<double> c(1.0, 3.0);
  const auto n = g.standardGenerators().size();
  switch (pick(rng)) {
    case 0: return Semicharacter::constant(g, c(rng));
    case 1: {
      std::vector<Rational> w;
      std::uniform_int_distribution<int> wi(1, 2);
      int maxW = 1;
      for (std::size_t k = 0; k < n; ++k) {
        w.emplace_back(wi(rng));
        maxW = std::max(maxW, static_cast<int>(boost::multiprecision::numerator(w.back())));
      }
      return Semicharacter::expLength(ball(g, WeightFunction::of(w), 4 * maxW));
    }
    case 2: return Semicharacter::sum(randomTree(g, rng, depth - 1), randomTree(g, rng, depth - 1));
    case 3: return Semicharacter::product(randomTree(g, rng, depth - 1), randomTree(g, rng, depth - 1));
    case 4: return Semicharacter::max(randomTree(g, rng, depth - 1), randomTree(g, rng, depth - 1));
    case 5: return Semicharacter::scale(c(rng), randomTree(g, rng, depth - 1));
    default: return Semicharacter::inverse(randomTree(g, rng, depth - 1));
  }
}

}  // namespace

TEST(Semicharacter, ConstantAndLengthExamples) {
  const Group z = Group::make(GroupSpec::freeAbelian(1));
  EXPECT_EQ(Semicharacter::constant(z, 1.0)(z.element({17})), 1.0);
  EXPECT_THROW((void)Semicharacter::constant(z, 0.5), std::invalid_argument);
  const auto f = Semicharacter::expLength(unitBall(z, 5));
  EXPECT_DOUBLE_EQ(f(z.element({3})), std::exp(3.0));
  EXPECT_THROW((void)f(z.element({6})), std::out_of_range);
  EXPECT_FALSE(f.evaluableAt(z.element({6})));
}

TEST(Semicharacter, BoxExample) {
  const Group z = Group::make(GroupSpec::freeAbelian(1));
  const auto f = Semicharacter::expLength(unitBall(z, 5));
  const auto b = Semicharacter::box(f, f);
  const Group& zz = b.domain();
  EXPECT_DOUBLE_EQ(b(zz.pair(z.element({2}), z.element({3}))), std::exp(2.0) * std::exp(3.0));
  EXPECT_NEAR(b(zz.pair(z.element({2}), z.element({3}))), std::exp(5.0), 1e-12 * std::exp(5.0));
}

TEST(Semicharacter, DiagonalOfBoxDoublesTheLength) {
  const Group z2 = Group::make(GroupSpec::freeAbelian(2));
  const auto f = Semicharacter::expLength(unitBall(z2, 4));
  const auto d = Semicharacter::diagonal(Semicharacter::box(f, f));
  const auto b = unitBall(z2, 4);
  for (const auto& x : b->elements) EXPECT_DOUBLE_EQ(d(x), f(x) * f(x));
  EXPECT_THROW((void)Semicharacter::diagonal(f), std::invalid_argument);
}

TEST(Semicharacter, InverseReadsTheInverse) {
  const Group z = Group::make(GroupSpec::freeAbelian(1));
  const auto f = Semicharacter::expLength(ball(z, WeightFunction::enumeration(2), 10));
  const auto fi = Semicharacter::inverse(f);
  EXPECT_DOUBLE_EQ(fi(z.element({2})), std::exp(4.0));
  EXPECT_DOUBLE_EQ(fi(z.element({-2})), std::exp(2.0));
}

TEST(Semicharacter, MixedDomainsAreRejected) {
  const Group z = Group::make(GroupSpec::freeAbelian(1));
  const Group f2 = Group::make(GroupSpec::free(2));
  EXPECT_THROW((void)Semicharacter::sum(Semicharacter::constant(z, 1), Semicharacter::constant(f2, 1)),
               std::invalid_argument);
}

TEST(Semicharacter, BadTableIsCaughtBySampling) {
  const Group z = Group::make(GroupSpec::freeAbelian(1));
  std::unordered_map<std::string, double> values;
  for (std::int64_t n = -2; n <= 2; ++n) values[z.key(z.element({n}))] = n == 2 ? 5.0 : 1.0;
  const auto t = Semicharacter::table(z, values);
  std::vector<Element> pts;
  for (std::int64_t n = -2; n <= 2; ++n) pts.push_back(z.element({n}));
  const auto r = semicharacterCheck(t, pts, 100);
  EXPECT_FALSE(r.report.at("submultiplicative").pass);  // f(1 + 1) = 5 > f(1) f(1) = 1
  EXPECT_TRUE(r.report.at("at_least_one").pass);
  EXPECT_THROW((void)Semicharacter::table(z, {{z.key(z.identity()), 0.5}}), std::invalid_argument);
}

TEST(Majorize, ConstantOneGivesZeroWeights) {
  const Group z = Group::make(GroupSpec::freeAbelian(1));
  const auto S = z.standardGenerators();
  const auto w = majorize(Semicharacter::constant(z, 1.0), S);
  for (const auto& x : w.weights) EXPECT_EQ(x, 0);
  const auto r = exploreBall(z, S, w, 3, 40);
  for (std::size_t i = 0; i < r.size(); ++i) EXPECT_EQ(std::exp(r.lengthValue(i)), 1.0);
}

TEST(Majorize, PowerOfTwoOnTheLine) {
  const Group z = Group::make(GroupSpec::freeAbelian(1));
  const auto S = z.standardGenerators();
  std::unordered_map<std::string, double> values;
  for (std::int64_t n = -10; n <= 10; ++n) values[z.key(z.element({n}))] = std::ldexp(1.0, static_cast<int>(std::abs(n)));
  const auto f = Semicharacter::table(z, values);
  const auto w = majorize(f, S);
  for (const auto& x : w.weights) {
    EXPECT_GE(toDouble(x), std::log(2.0));
    EXPECT_LE(toDouble(x) - std::log(2.0), 2e-12);
  }
  const auto r = exploreBall(z, S, w, 8);
  for (std::int64_t n = -10; n <= 10; ++n) {
    const auto l = r.length(z.element({n}));
    ASSERT_TRUE(l.has_value());
    const double bound = std::exp(toDouble(*l));
    const double fn = f(z.element({n}));
    EXPECT_LE(fn, bound);
    EXPECT_LE(bound / fn - 1.0, 1e-10);  // equality up to the rounding grid
  }
}

TEST(Majorize, SelfMajorizationOnHeisenberg) {
  const Group h = Group::make(GroupSpec::heisenberg());
  const auto S = h.standardGenerators();
  const auto f = Semicharacter::expLength(unitBall(h, 6));
  const auto w = majorize(f, S);
  for (const auto& x : w.weights) EXPECT_NEAR(toDouble(x), 1.0, 2e-12);
  const auto r = exploreBall(h, S, w, 5);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double fx = f(r.elements[i]);
    EXPECT_LE(fx, std::exp(r.lengthValue(i)));
    EXPECT_LE(std::exp(r.lengthValue(i)) / fx - 1.0, 1e-10);
  }
}

TEST(SemicharacterProperty, GrammarTreesAreSubmultiplicative) {
  std::mt19937_64 rng(2718);
  for (const auto& spec : {GroupSpec::freeAbelian(2), GroupSpec::free(2), GroupSpec::heisenberg()}) {
    const Group g = Group::make(spec);
    const auto pts = unitBall(g, 2)->elements;
    for (int t = 0; t < 40; ++t) {
      const auto f = randomTree(g, rng, 3);
      const auto r = semicharacterCheck(f, pts, 3000, static_cast<std::uint64_t>(t));
      ASSERT_TRUE(r.report.allPass()) << f.describe() << " on " << spec.describe();
      ASSERT_EQ(r.skipped, 0) << f.describe();
    }
  }
}

TEST(SemicharacterProperty, BoxAndDiagonalStaySubmultiplicative) {
  std::mt19937_64 rng(99);
  const Group z = Group::make(GroupSpec::freeAbelian(1));
  for (int t = 0; t < 20; ++t) {
    const auto f = randomTree(z, rng, 2), g = randomTree(z, rng, 2);
    const auto b = Semicharacter::box(f, g);
    std::vector<Element> pts;
    for (std::int64_t i = -2; i <= 2; ++i)
      for (std::int64_t j = -2; j <= 2; ++j) pts.push_back(b.domain().pair(z.element({i}), z.element({j})));
    ASSERT_TRUE(semicharacterCheck(b, pts, 5000).report.allPass()) << b.describe();
    std::vector<Element> line;
    for (std::int64_t i = -2; i <= 2; ++i) line.push_back(z.element({i}));
    const auto d = Semicharacter::diagonal(Semicharacter::box(f, f));
    ASSERT_TRUE(semicharacterCheck(d, line, 5000).report.allPass()) << d.describe();
  }
}
