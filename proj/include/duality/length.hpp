#pragma once

#include "duality/checked.hpp"
#include "duality/group.hpp"
#include "duality/rational.hpp"
#include "duality/report.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <unordered_map>

namespace duality {

inline constexpr std::size_t kDefaultElementCap = 1'000'000;
inline constexpr std::int64_t kDefaultRadius = 14;

/// Generator weights F : S -> Q, indexed like the generating set. Zero is
/// allowed (majorizing the constant semicharacter 1 gives F = 0); negative
/// weights are not.
struct WeightFunction {
  std::vector<Rational> weights;
  bool enumerated = false;

  static WeightFunction uniform(std::size_t n, const Rational& w = Rational(1)) {
    return WeightFunction{std::vector<Rational>(n, w), false};
  }
  /// a_k gets weight k (1-based).
  static WeightFunction enumeration(std::size_t n) {
    WeightFunction f;
    for (std::size_t k = 1; k <= n; ++k) f.weights.emplace_back(static_cast<long long>(k));
    f.enumerated = true;
    return f;
  }
  static WeightFunction of(std::vector<Rational> w) { return WeightFunction{std::move(w), false}; }

  [[nodiscard]] std::size_t size() const { return weights.size(); }

  void validate(std::size_t generators) const {
    if (weights.size() != generators) {
      throw std::invalid_argument("weight count " + std::to_string(weights.size()) + " != generator count " +
                                  std::to_string(generators));
    }
    for (const auto& w : weights)
      if (w < 0) throw std::invalid_argument("weights must be >= 0, got " + toString(w));
    if (enumerated && !(isPositiveInteger() && isInjective())) {
      throw std::invalid_argument("enumerated weights must be distinct positive integers");
    }
  }

  [[nodiscard]] bool isPositiveInteger() const {
    return std::all_of(weights.begin(), weights.end(), [](const Rational& w) { return w > 0 && duality::isInteger(w); });
  }
  [[nodiscard]] bool isInteger() const {
    return std::all_of(weights.begin(), weights.end(), [](const Rational& w) { return duality::isInteger(w); });
  }
  [[nodiscard]] bool isInjective() const {
    std::set<Rational> seen(weights.begin(), weights.end());
    return seen.size() == weights.size();
  }

  /// Least common denominator of the weights.
  [[nodiscard]] std::int64_t commonDenominator() const {
    std::int64_t d = 1;
    for (const auto& w : weights) {
      const auto den = boost::multiprecision::denominator(w);
      if (den > BigInt(std::numeric_limits<std::int64_t>::max())) throw std::overflow_error("weight denominator too large");
      const auto di = den.convert_to<std::int64_t>();
      d = checked::mul(d / std::gcd(d, di), di);
    }
    return d;
  }
};

/// Result of weighted Cayley-graph exploration. Lengths are stored as
/// integers scaled by the common denominator of the weights, in the order the
/// search settled them: ascending length, ties by canonical key.
struct LengthReport {
  Group group;
  GeneratorSet generators;
  WeightFunction weights;
  Rational radius;
  std::size_t elementCap = kDefaultElementCap;
  bool truncated = false;
  std::int64_t scale = 1;
  std::int64_t scaledRadius = 0;
  /// Smallest unsettled cost when the cap stopped the search.
  std::optional<std::int64_t> frontierMin;

  std::vector<Element> elements;
  std::vector<std::int64_t> costs;
  std::unordered_map<std::string, std::size_t> index;

  [[nodiscard]] std::size_t size() const { return elements.size(); }

  [[nodiscard]] std::optional<std::size_t> find(const Element& x) const {
    auto it = index.find(group.key(x));
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
  [[nodiscard]] std::optional<Rational> length(const Element& x) const {
    auto i = find(x);
    if (!i) return std::nullopt;
    return lengthAt(*i);
  }
  [[nodiscard]] Rational lengthAt(std::size_t i) const { return makeRational(costs[i], scale); }
  [[nodiscard]] double lengthValue(std::size_t i) const {
    return static_cast<double>(costs[i]) / static_cast<double>(scale);
  }

  /// A level (scaled) is complete when every element of that length has
  /// been settled.
  [[nodiscard]] bool levelComplete(std::int64_t scaledCost) const {
    if (truncated) return frontierMin && scaledCost < *frontierMin;
    return scaledCost <= scaledRadius;
  }
  [[nodiscard]] bool isFinal(std::size_t i) const { return levelComplete(costs[i]); }

  /// Level (scaled cost) -> indices of elements at that length.
  [[nodiscard]] std::map<std::int64_t, std::vector<std::size_t>> spheres() const {
    std::map<std::int64_t, std::vector<std::size_t>> s;
    for (std::size_t i = 0; i < costs.size(); ++i) s[costs[i]].push_back(i);
    return s;
  }

  /// Largest integer level n such that every level <= n is complete; the
  /// report must use integer weights.
  [[nodiscard]] std::int64_t completeIntegerLevels() const {
    if (scale != 1) throw std::invalid_argument("integer levels need integer weights");
    if (!truncated) return scaledRadius;
    if (!frontierMin) return -1;
    return *frontierMin - 1;
  }
};

/// Uniform-cost search from the identity over right multiplication by S.
/// Every element with length <= radius is settled unless elementCap elements
/// were settled first, in which case the report is marked truncated.
inline LengthReport exploreBall(const Group& g, const GeneratorSet& S, const WeightFunction& F, const Rational& radius,
                                std::size_t elementCap = kDefaultElementCap) {
  F.validate(S.size());
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  if (elementCap == 0) throw std::invalid_argument("elementCap must be >= 1");
  LengthReport r{g, S, F, radius, elementCap};
  r.scale = F.commonDenominator();
  std::vector<std::int64_t> w;
  for (const auto& x : F.weights) {
    const Rational scaled = x * r.scale;
    w.push_back(boost::multiprecision::numerator(scaled).convert_to<std::int64_t>());
  }
  {
    const Rational sr = radius * r.scale;
    const BigInt fl = boost::multiprecision::numerator(sr) / boost::multiprecision::denominator(sr);
    if (fl > BigInt(std::numeric_limits<std::int64_t>::max())) throw std::overflow_error("radius too large");
    r.scaledRadius = fl.convert_to<std::int64_t>();
  }

  using Entry = std::tuple<std::int64_t, std::string, Element>;
  auto cmp = [](const Entry& a, const Entry& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
    return std::get<1>(a) > std::get<1>(b);
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> pq(cmp);
  std::unordered_map<std::string, std::int64_t> best;
  const Element e = g.identity();
  best.emplace(g.key(e), 0);
  pq.emplace(0, g.key(e), e);

  while (!pq.empty()) {
    auto [cost, key, x] = pq.top();
    if (r.index.count(key) || best.at(key) < cost) {
      pq.pop();
      continue;
    }
    if (cost > r.scaledRadius) break;
    if (r.elements.size() == elementCap) {
      r.truncated = true;
      r.frontierMin = cost;
      break;
    }
    pq.pop();
    r.index.emplace(key, r.elements.size());
    r.elements.push_back(x);
    r.costs.push_back(cost);
    for (std::size_t i = 0; i < S.size(); ++i) {
      const std::int64_t c = checked::add(cost, w[i]);
      if (c > r.scaledRadius) continue;
      Element y = g.mul(x, S.elements[i]);
      std::string k = g.key(y);
      auto it = best.find(k);
      if (it != best.end() && it->second <= c) continue;
      best[k] = c;
      pq.emplace(c, std::move(k), std::move(y));
    }
  }
  return r;
}

struct SubadditivityResult {
  CheckReport report;
  long long checked = 0;
  long long skipped = 0;
};

/// l(xy) <= l(x) + l(y), and its exponential form, over pairs of recorded
/// elements: exhaustive when size^2 <= samples, otherwise `samples` seeded
/// random pairs. Pairs whose product was not recorded are skipped, except
/// that an untruncated ball must contain xy whenever l(x) + l(y) <= radius.
inline SubadditivityResult subadditivityCheck(const LengthReport& rep, std::size_t samples, std::uint64_t seed = 0) {
  SubadditivityResult out;
  auto& sub = out.report.add("subadditive");
  auto& expSub = out.report.add("exp_submultiplicative");
  const auto& g = rep.group;
  auto visit = [&](std::size_t i, std::size_t j) {
    const Element xy = g.mul(rep.elements[i], rep.elements[j]);
    const std::int64_t bound = checked::add(rep.costs[i], rep.costs[j]);
    auto k = rep.find(xy);
    auto where = [&] { return g.format(rep.elements[i]) + " * " + g.format(rep.elements[j]); };
    if (!k) {
      if (!rep.truncated && bound <= rep.scaledRadius) {
        sub.observe(false, 0.0, [&] { return where() + " missing from the ball"; });
        ++out.checked;
      } else {
        ++out.skipped;
      }
      return;
    }
    ++out.checked;
    sub.observe(rep.costs[*k] <= bound, 0.0, where);
    const double lhs = std::exp(rep.lengthValue(*k));
    const double rhs = std::exp(rep.lengthValue(i)) * std::exp(rep.lengthValue(j));
    expSub.observe(leqRel(lhs, rhs), std::max(0.0, (lhs - rhs) / rhs), where);
  };
  const std::size_t n = rep.size();
  if (n * n <= samples) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) visit(i, j);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < samples; ++s) {
      const std::size_t i = pick(rng);
      visit(i, pick(rng));
    }
  }
  return out;
}

}  // namespace duality
