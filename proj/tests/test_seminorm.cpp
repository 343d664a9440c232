#include "duality/properties.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace duality;

namespace {

std::shared_ptr<const LengthReport> unitBall(const Group& g, std::int64_t radius) {
  return std::make_shared<const LengthReport>(
      exploreBall(g, g.standardGenerators(), WeightFunction::uniform(g.standardGenerators().size()), radius));
}

}  // namespace

TEST(Seminorm, ConstructionRules) {
  const Group z = Group::make(GroupSpec::freeAbelian(1));
  const auto a = z.element({1}), b = z.element({-1});
  EXPECT_THROW(SubmultiplicativeSeminorm(z, {a}, {1.0}, 0.5), std::invalid_argument);
  EXPECT_THROW(SubmultiplicativeSeminorm(z, {a}, {0.9}, 1.0), std::invalid_argument);
  EXPECT_THROW(SubmultiplicativeSeminorm(z, {a, a}, {1.0, 1.0}, 1.0), std::invalid_argument);
  EXPECT_THROW(SubmultiplicativeSeminorm(z, {a, b}, {1.0}, 1.0), std::invalid_argument);
}

TEST(Seminorm, IdentityOnly) {
  const Group z = Group::make(GroupSpec::freeAbelian(1));
  const SubmultiplicativeSeminorm q(z, {z.identity()}, {1.0}, 1.0);
  EXPECT_EQ(q.atIndicator(z.identity()), 1.0);
  const auto ball = unitBall(z, 3);
  EXPECT_TRUE(seminormSupportCheck(q, ball->elements, 200).allPass());
  const auto s = summabilityCheck(q, Semicharacter::constant(z, 1.0), *ball);
  EXPECT_EQ(s.sum, 1.0);
  EXPECT_TRUE(s.report.allPass());
}

TEST(Seminorm, TwoPointSupport) {
  const Group z2 = Group::make(GroupSpec::freeAbelian(2));
  const auto a = z2.element({1, 0}), b = z2.element({0, 1});
  const SubmultiplicativeSeminorm q(z2, {a, b}, {1.0, 1.0}, 2.0);
  EXPECT_EQ(q.atIndicator(a), 2.0);
  EXPECT_EQ(q.atIndicator(b), 2.0);
  EXPECT_EQ(q.atIndicator(z2.identity()), 0.0);
  const auto ball = unitBall(z2, 3);
  const auto r = seminormSupportCheck(q, ball->elements, 200, 1);
  EXPECT_TRUE(r.allPass());
  EXPECT_EQ(r.at("submultiplicative").cases, 200);
  // a universe missing b cannot reproduce the support
  EXPECT_FALSE(seminormSupportCheck(q, {a, z2.identity()}, 10).at("support_is_K").pass);
}

TEST(Seminorm, DominationExamples) {
  const Group z = Group::make(GroupSpec::freeAbelian(1));
  const auto a = z.element({2}), b = z.element({-3});
  const SubmultiplicativeSeminorm q(z, {a, b}, {1.5, 2.5}, 1.2);
  const auto d = dominationCheck(q, 200, 4);
  EXPECT_TRUE(d.report.allPass());
  EXPECT_DOUBLE_EQ(d.constant, 1.2 * 1.5 + 1.2 * 2.5);
  EXPECT_EQ(d.report.at("domination").cases, 203);  // zero table, two indicators, 200 samples
  EXPECT_GE(d.minSlack, 0.0);
  EXPECT_LE(d.maxRatio, 1.0);
  // max_K w |u| <= sum_K w max_K |u|, with equality only for one-point K
  const SubmultiplicativeSeminorm single(z, {a}, {2.0}, 1.0);
  EXPECT_DOUBLE_EQ(dominationCheck(single, 50).maxRatio, 1.0);
}

TEST(Seminorm, SummabilitySinglePoint) {
  const Group z = Group::make(GroupSpec::freeAbelian(1));
  const auto ball = unitBall(z, 4);
  const auto f = Semicharacter::expLength(ball);
  const auto a = z.element({1});
  const SubmultiplicativeSeminorm q(z, {a}, {1.0}, 2.0);
  const auto s = summabilityCheck(q, f, *ball);
  EXPECT_DOUBLE_EQ(s.sum, 2.0 * std::exp(1.0));
  // B = f(a) e^{l(a)} q(1_a) = 2 e^2; partial = 1 + 2 (e^-1 + ... + e^-4)
  EXPECT_DOUBLE_EQ(s.B, 2.0 * std::exp(2.0));
  double partial = 1.0;
  for (int k = 1; k <= 4; ++k) partial += 2.0 * std::exp(-k);
  EXPECT_NEAR(s.partial, partial, 1e-15);
  EXPECT_TRUE(s.report.allPass());
}

TEST(Seminorm, SupportOutsideBallIsReported) {
  const Group z = Group::make(GroupSpec::freeAbelian(1));
  const auto ball = unitBall(z, 2);
  const SubmultiplicativeSeminorm q(z, {z.element({5})}, {1.0}, 1.0);
  EXPECT_FALSE(summabilityCheck(q, Semicharacter::constant(z, 1.0), *ball).report.at("support_in_ball").pass);
}

TEST(SeminormProperty, TwentySeminormsTwoHundredTables) {
  for (const auto& spec : {GroupSpec::freeAbelian(2), GroupSpec::free(2), GroupSpec::heisenberg()}) {
    const Group g = Group::make(spec);
    const auto ball = unitBall(g, 4);
    const auto res = seminormPropertySuite(*ball, Semicharacter::expLength(ball), 20, 200, 11);
    EXPECT_TRUE(res.report.allPass()) << spec.describe();
    EXPECT_EQ(res.seminorms.size(), 20U);
    EXPECT_GE(res.report.at("submultiplicative").cases, 20 * 200);
    EXPECT_GE(res.report.at("domination").cases, 20 * 202);
    // one-point supports make both sides C w(x), computed by different sums
    for (const auto& s : res.seminorms)
      EXPECT_GE(s["min_slack"].get<double>(), -1e-12 * s["domination_constant"].get<double>());
  }
}
