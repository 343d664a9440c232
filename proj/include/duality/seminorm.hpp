#pragma once

#include "duality/weighted.hpp"

namespace duality {

/// q(u) = C max_{x in K} w(x) |u(x)| on functions G -> C. With C >= 1 and
/// w >= 1 on the finite set K, q is submultiplicative for the pointwise
/// product.
class SubmultiplicativeSeminorm {
 public:
  SubmultiplicativeSeminorm(Group g, std::vector<Element> support, std::vector<double> weights, double C)
      : group_(std::move(g)), support_(std::move(support)), weights_(std::move(weights)), C_(C) {
    if (support_.size() != weights_.size()) throw std::invalid_argument("support and weights differ in length");
    if (!(C_ >= 1.0)) throw std::invalid_argument("seminorm scale C must be >= 1");
    for (std::size_t i = 0; i < support_.size(); ++i) {
      group_.validate(support_[i]);
      if (!(weights_[i] >= 1.0)) throw std::invalid_argument("seminorm weights must be >= 1");
      if (!index_.emplace(group_.key(support_[i]), i).second) {
        throw std::invalid_argument("duplicate support point " + group_.format(support_[i]));
      }
    }
  }

  [[nodiscard]] const Group& group() const { return group_; }
  [[nodiscard]] const std::vector<Element>& support() const { return support_; }
  [[nodiscard]] double scale() const { return C_; }
  [[nodiscard]] double weight(std::size_t i) const { return weights_[i]; }

  [[nodiscard]] double operator()(const FunctionTable& u) const {
    double m = 0.0;
    for (std::size_t i = 0; i < support_.size(); ++i) {
      auto it = u.find(group_.key(support_[i]));
      if (it != u.end()) m = std::max(m, weights_[i] * std::abs(it->second));
    }
    return C_ * m;
  }

  /// q(1_x): C w(x) on K, 0 elsewhere.
  [[nodiscard]] double atIndicator(const Element& x) const {
    auto it = index_.find(group_.key(x));
    return it == index_.end() ? 0.0 : C_ * weights_[it->second];
  }

 private:
  Group group_;
  std::vector<Element> support_;
  std::vector<double> weights_;
  double C_;
  std::unordered_map<std::string, std::size_t> index_;
};

namespace detail {

inline FunctionTable randomTable(const Group& g, const std::vector<Element>& pts, std::mt19937_64& rng,
                                 double radius = 1.0) {
  std::uniform_real_distribution<double> u(-radius, radius);
  FunctionTable t;
  for (const auto& x : pts) {
    const double re = u(rng), im = u(rng);
    t[g.key(x)] = Complex(re, im);
  }
  return t;
}

}  // namespace detail

/// supp(q) = K over `universe` (which should contain K), q(1_x) >= 1 and
/// q(1_x) <= q(1_x)^2 on K, and sampled q(uv) <= q(u) q(v).
inline CheckReport seminormSupportCheck(const SubmultiplicativeSeminorm& q, const std::vector<Element>& universe,
                                        std::size_t samples, std::uint64_t seed = 0) {
  const Group& g = q.group();
  CheckReport r;
  auto& supp = r.add("support_is_K");
  std::set<std::string> found;
  for (const auto& x : universe)
    if (q.atIndicator(x) != 0.0) found.insert(g.key(x));
  std::set<std::string> expected;
  for (const auto& x : q.support()) expected.insert(g.key(x));
  supp.observe(found == expected, 0.0, [&] {
    return "found " + std::to_string(found.size()) + " support points, expected " + std::to_string(expected.size());
  });

  auto& atLeastOne = r.add("indicator_at_least_one");
  auto& idem = r.add("indicator_idempotent_bound");
  for (const auto& x : q.support()) {
    const double v = q.atIndicator(x);
    atLeastOne.observe(v >= 1.0, std::max(0.0, 1.0 - v), [&] { return g.format(x); });
    idem.observe(leqRel(v, v * v), std::max(0.0, v - v * v), [&] { return g.format(x); });
  }

  auto& sub = r.add("submultiplicative");
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto u = detail::randomTable(g, q.support(), rng, 3.0);
    const auto v = detail::randomTable(g, q.support(), rng, 3.0);
    FunctionTable uv;
    for (const auto& [k, a] : u) uv[k] = a * v.at(k);
    const double lhs = q(uv), rhs = q(u) * q(v);
    sub.observe(leqRel(lhs, rhs), std::max(0.0, lhs - rhs), [&] { return "trial " + std::to_string(s); });
  }
  return r;
}

struct DominationResult {
  CheckReport report;
  double constant = 0.0;  // sum_{x in K} q(1_x)
  double minSlack = 0.0;  // smallest rhs - lhs seen
  double maxRatio = 0.0;  // largest lhs / rhs seen
};

/// q(u) <= (sum_{x in K} q(1_x)) max_{x in K} |u(x)| on sampled tables, plus
/// the indicators and the zero table.
inline DominationResult dominationCheck(const SubmultiplicativeSeminorm& q, std::size_t samples,
                                        std::uint64_t seed = 0) {
  const Group& g = q.group();
  DominationResult out;
  for (const auto& x : q.support()) out.constant += q.atIndicator(x);
  out.minSlack = std::numeric_limits<double>::infinity();
  auto& entry = out.report.add("domination");
  auto check = [&](const FunctionTable& u, const std::function<std::string()>& where) {
    double m = 0.0;
    for (const auto& x : q.support()) {
      auto it = u.find(g.key(x));
      if (it != u.end()) m = std::max(m, std::abs(it->second));
    }
    const double lhs = q(u), rhs = out.constant * m;
    out.minSlack = std::min(out.minSlack, rhs - lhs);
    if (rhs > 0.0) out.maxRatio = std::max(out.maxRatio, lhs / rhs);
    entry.observe(leqRel(lhs, rhs), std::max(0.0, lhs - rhs), where);
  };
  check(FunctionTable{}, [] { return std::string("zero table"); });
  for (const auto& x : q.support())
    check(FunctionTable{{g.key(x), Complex(1.0)}}, [&] { return "1_" + g.format(x); });
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s)
    check(detail::randomTable(g, q.support(), rng), [&] { return "trial " + std::to_string(s); });
  return out;
}

struct SeminormSummability {
  double sum = 0.0;      // sum_{x in K} f(x) q(1_x)
  double B = 0.0;        // max_{x in K} f(x) e^{l_F(x)} q(1_x)
  double partial = 0.0;  // sum of e^{-l_F} over the explored ball
  CheckReport report;
};

/// The finite sum sum_x f(x) q(1_x) against the bound route
/// sum <= B * sum_x e^{-l_F(x)}, both read from the same report. K must lie
/// in the explored ball.
inline SeminormSummability summabilityCheck(const SubmultiplicativeSeminorm& q, const Semicharacter& f,
                                            const LengthReport& rep) {
  SeminormSummability out;
  auto& inBall = out.report.add("support_in_ball");
  for (const auto& x : q.support()) {
    auto i = rep.find(x);
    inBall.observe(i.has_value(), 0.0, [&] { return q.group().format(x); });
    if (!i) continue;
    const double qx = q.atIndicator(x), fx = f(x);
    out.sum += fx * qx;
    out.B = std::max(out.B, fx * std::exp(rep.lengthValue(*i)) * qx);
  }
  for (std::size_t i = 0; i < rep.size(); ++i) out.partial += std::exp(-rep.lengthValue(i));
  auto& route = out.report.add("sum_le_bound_route");
  const double rhs = out.B * out.partial;
  route.observe(leqRel(out.sum, rhs), std::max(0.0, out.sum - rhs),
                [&] { return std::to_string(out.sum) + " vs " + std::to_string(rhs); });
  return out;
}

}  // namespace duality
