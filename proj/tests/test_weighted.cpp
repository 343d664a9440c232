#include "duality/properties.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace duality;

namespace {

const Group& line() {
  static const Group z = Group::make(GroupSpec::freeAbelian(1));
  return z;
}

Element n(std::int64_t k) { return line().element({k}); }

std::shared_ptr<const LengthReport> ball(const Group& g, const WeightFunction& w, std::int64_t radius) {
  return std::make_shared<const LengthReport>(exploreBall(g, g.standardGenerators(), w, radius));
}

/// e^{|n|} on the line, up to |n| = 20.
Semicharacter expAbs() { return Semicharacter::expLength(ball(line(), WeightFunction::uniform(2), 20)); }

/// b^{|n|} for n >= 0 and c^{|n|} for n < 0, as a table on |n| <= 20. This is
/// e^{l} for the length with weights (log b, log c), so it is submultiplicative.
Semicharacter powerTable(double b, double c) {
  std::unordered_map<std::string, double> v;
  for (std::int64_t k = -20; k <= 20; ++k) v[line().key(n(k))] = std::pow(k >= 0 ? b : c, static_cast<double>(std::abs(k)));
  return Semicharacter::table(line(), v);
}

WeightedVector vec(std::initializer_list<std::pair<std::int64_t, Complex>> terms) {
  WeightedVector v(line());
  for (const auto& [k, c] : terms) v.add(n(k), c);
  return v;
}

}  // namespace

TEST(Weighted, SeminormExamples) {
  const auto f = expAbs();
  const double e = std::exp(1.0);
  EXPECT_DOUBLE_EQ(seminorm(vec({{-2, 1.0}, {1, 3.0}}), f), e * e + 3 * e);
  EXPECT_EQ(seminorm(WeightedVector(line()), f), 0.0);
  for (std::int64_t k = -5; k <= 5; ++k) EXPECT_EQ(seminorm(WeightedVector::delta(line(), n(k)), f), f(n(k)));
  EXPECT_THROW((void)seminorm(vec({{21, 1.0}}), f), std::out_of_range);
}

TEST(Weighted, ConvolutionExamples) {
  const auto a = vec({{1, 1.0}, {-1, 1.0}});
  const auto sq = convolve(a, a);
  EXPECT_EQ(sq.supportSize(), 3U);
  EXPECT_EQ(sq.get(n(2)), Complex(1.0));
  EXPECT_EQ(sq.get(n(0)), Complex(2.0));
  EXPECT_EQ(sq.get(n(-2)), Complex(1.0));
  const auto one = WeightedVector::delta(line(), n(0));
  const auto b = vec({{3, Complex(1, 2)}, {-4, 0.5}});
  EXPECT_EQ(convolve(b, one).terms(), b.terms());

  const Group s3 = Group::make(GroupSpec::symmetric(3));
  for (const auto& s : s3.enumerate())
    for (const auto& t : s3.enumerate()) {
      const auto p = convolve(WeightedVector::delta(s3, s), WeightedVector::delta(s3, t));
      ASSERT_EQ(p.supportSize(), 1U);
      EXPECT_EQ(p.get(s3.mul(s, t)), Complex(1.0));
    }
  const Group f2 = Group::make(GroupSpec::free(2));
  EXPECT_THROW((void)convolve(a, WeightedVector::delta(f2, f2.identity())), std::invalid_argument);
}

TEST(Weighted, ConvolutionCancelsExactZeros) {
  const auto a = vec({{1, 1.0}, {-1, -1.0}});
  const auto sq = convolve(a, a);  // 1_2 - 2 1_0 + 1_-2
  EXPECT_EQ(sq.get(n(0)), Complex(-2.0));
  const auto c = convolve(vec({{1, 1.0}, {0, 1.0}}), vec({{0, 1.0}, {-1, -1.0}}));  // 1_1 + 1_0 - 1_0 - 1_-1
  EXPECT_EQ(c.supportSize(), 2U);
  EXPECT_EQ(c.get(n(0)), Complex(0.0));
}

TEST(Weighted, ProjectionExamples) {
  const auto f = expAbs();
  const auto a = vec({{1, 1.0}, {3, 2.0}});
  EXPECT_EQ(project(a, {n(1), n(3), n(7)}).terms(), a.terms());
  EXPECT_TRUE(project(a, {}).isZero());
  EXPECT_DOUBLE_EQ(seminorm(a.minus(project(a, {n(1)})), f), 2.0 * f(n(3)));
}

TEST(Weighted, PairingExamples) {
  const FunctionTable u{{line().key(n(4)), 3.0}, {line().key(n(5)), -1.0}};
  EXPECT_EQ(pairing(vec({{4, 1.0}, {5, 2.0}}), u), Complex(1.0));
  EXPECT_EQ(pairing(WeightedVector::delta(line(), n(4)), u), Complex(3.0));
  EXPECT_EQ(pairing(vec({{4, 1.0}}), FunctionTable{{line().key(n(4)), 0.0}}), Complex(0.0));
  EXPECT_THROW((void)pairing(vec({{6, 1.0}}), u), std::invalid_argument);
}

TEST(Weighted, ExtremizerExamples) {
  const auto f = expAbs();
  const auto d = dualNormExtremizer(WeightedVector::delta(line(), n(2)), f);
  EXPECT_EQ(d.u.at(line().key(n(2))), Complex(f(n(2))));
  EXPECT_EQ(d.value, f(n(2)));

  const auto pos = dualNormExtremizer(vec({{1, 2.0}, {-3, 0.5}}), f);
  EXPECT_EQ(pos.u.at(line().key(n(1))), Complex(f(n(1))));
  EXPECT_DOUBLE_EQ(pos.value, 2.0 * f(n(1)) + 0.5 * f(n(-3)));

  const auto ph = dualNormExtremizer(vec({{1, Complex(0, 1)}}), f);
  const Complex u = ph.u.at(line().key(n(1)));
  EXPECT_NEAR(std::abs(u - Complex(0, -f(n(1)))), 0.0, 1e-15);
  EXPECT_NEAR(ph.value, f(n(1)), 1e-15);
}

TEST(Weighted, PolarOfConstantOneIsTheL1Ball) {
  const auto one = Semicharacter::constant(line(), 1.0);
  EXPECT_TRUE(polarMembership(vec({{1, 0.5}, {2, Complex(0, 0.5)}}), one));
  EXPECT_FALSE(polarMembership(vec({{1, 0.5}, {2, 0.6}}), one));
  EXPECT_TRUE(polarMembership(WeightedVector(line()), expAbs()));
}

TEST(Weighted, BipolarIsTheRectangle) {
  const auto f = expAbs();
  const std::vector<Element> region{n(-1), n(0), n(2)};
  FunctionTable in{{line().key(n(-1)), f(n(-1))}, {line().key(n(2)), Complex(0, -f(n(2)))}};
  EXPECT_TRUE(inRectangle(line(), region, in, f));
  EXPECT_TRUE(inBipolar(line(), region, in, f));
  in[line().key(n(0))] = 1.5;
  EXPECT_FALSE(inRectangle(line(), region, in, f));
  EXPECT_FALSE(inBipolar(line(), region, in, f));
}

TEST(Decomposition, SpecExampleOnOneAndTwo) {
  // min(e^|n|, 2^|n|) = 2^|n|, so everything lands on the g side
  const auto f = expAbs(), g = powerTable(2.0, 2.0);
  const auto alpha = vec({{1, 0.25}, {2, 0.125}});
  const auto d = absconvDecompose(alpha, f, g);
  ASSERT_TRUE(d.feasible);
  EXPECT_DOUBLE_EQ(d.normMin, 1.0);
  EXPECT_TRUE(d.checks.allPass());
  EXPECT_EQ(d.lambda, 0.0);
  EXPECT_TRUE(d.beta.isZero());
  EXPECT_DOUBLE_EQ(seminorm(d.gamma, g), 1.0);
}

TEST(Decomposition, SplitAcrossBothSides) {
  // g = 2^n on n >= 0 and 3^|n| on n < 0: the minimum is g at 2 and f at -1
  const auto f = expAbs(), g = powerTable(2.0, 3.0);
  const double e = std::exp(1.0);
  const auto alpha = vec({{-1, 1.0 / (2.0 * e)}, {2, 0.125}});
  const auto d = absconvDecompose(alpha, f, g);
  ASSERT_TRUE(d.feasible);
  EXPECT_NEAR(d.normMin, 1.0, 1e-15);
  EXPECT_NEAR(d.lambda, 0.5, 1e-15);
  EXPECT_NEAR(std::abs(d.beta.get(n(-1)) - 1.0 / e), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(d.gamma.get(n(2)) - 0.25), 0.0, 1e-15);
  EXPECT_NEAR(seminorm(d.beta, f), 1.0, 1e-15);
  EXPECT_NEAR(seminorm(d.gamma, g), 1.0, 1e-15);
  EXPECT_TRUE(d.checks.allPass());
}

TEST(Decomposition, ZeroAndInfeasible) {
  const auto f = expAbs(), g = powerTable(2.0, 2.0);
  const auto z = absconvDecompose(WeightedVector(line()), f, g);
  EXPECT_TRUE(z.feasible);
  EXPECT_TRUE(z.checks.allPass());
  const auto over = absconvDecompose(vec({{1, 0.75}}), f, g);
  EXPECT_FALSE(over.feasible);
  EXPECT_DOUBLE_EQ(over.normMin, 1.5);
}

TEST(Weighted, NonSubmultiplicativeWeightIsVisible) {
  std::unordered_map<std::string, double> v;
  for (std::int64_t k = -4; k <= 4; ++k) v[line().key(n(k))] = k == 2 ? 5.0 : 1.0;
  const auto bad = Semicharacter::table(line(), v);
  const auto a = WeightedVector::delta(line(), n(1));
  EXPECT_GT(seminorm(convolve(a, a), bad), seminorm(a, bad) * seminorm(a, bad));
}

TEST(WeightedProperty, ThousandTrialsOnFreeGroup) {
  const Group f2 = Group::make(GroupSpec::free(2));
  const auto unit = ball(f2, WeightFunction::uniform(4), 4);
  const auto f = Semicharacter::expLength(ball(f2, WeightFunction::of({1, 2, 1, 2}), 8));
  const auto g = Semicharacter::scale(2.0, Semicharacter::expLength(ball(f2, WeightFunction::of({2, 1, 2, 1}), 8)));
  const auto r = weightedPropertySuite(*unit, f, g, 1000, 17);
  EXPECT_TRUE(r.allPass());
  EXPECT_EQ(r.entries.size(), 12U);
  for (const auto& e : r.entries) EXPECT_GT(e.cases, 0) << e.name;
  EXPECT_EQ(r.at("decomposition_infeasible_detected").cases, 100);
  EXPECT_EQ(r.at("decomposition_sound").cases, 900);
  EXPECT_LE(r.at("extremizer_attains_norm").worstResidual, 1e-12 * 1e3);
}

TEST(WeightedProperty, ThousandTrialsOnHeisenbergAndLattice) {
  for (const auto& spec : {GroupSpec::heisenberg(), GroupSpec::freeAbelian(2)}) {
    const Group g = Group::make(spec);
    const auto S = g.standardGenerators();
    const auto unit = ball(g, WeightFunction::uniform(S.size()), 4);
    const auto f = Semicharacter::expLength(ball(g, WeightFunction::enumeration(S.size()), 16));
    const auto h = Semicharacter::max(Semicharacter::constant(g, 2.0), Semicharacter::expLength(unit));
    const auto r = weightedPropertySuite(*unit, f, h, 1000, 3);
    EXPECT_TRUE(r.allPass()) << spec.describe();
  }
}

TEST(WeightedProperty, BadWeightFailsTheSuite) {
  std::unordered_map<std::string, double> v;
  for (std::int64_t k = -4; k <= 4; ++k) v[line().key(n(k))] = k == 2 ? 5.0 : 1.0;
  const auto bad = Semicharacter::table(line(), v);
  const auto unit = ball(line(), WeightFunction::uniform(2), 2);
  const auto r = weightedPropertySuite(*unit, bad, bad, 1000, 5);
  EXPECT_FALSE(r.at("convolution_submultiplicative").pass);
  EXPECT_FALSE(r.at("convolution_submultiplicative").witness.empty());
}
