#pragma once

#include "duality/seminorm.hpp"

#include <nlohmann/json.hpp>

namespace duality {

/// Folds the entries of `from` into same-named entries of `into`, keeping
/// the first failure (or the largest residual) as witness.
inline void absorb(CheckReport& into, const CheckReport& from, const std::string& prefix = "") {
  for (const auto& e : from.entries) {
    const std::string name = prefix + e.name;
    auto it = std::find_if(into.entries.begin(), into.entries.end(), [&](const CheckEntry& x) { return x.name == name; });
    if (it == into.entries.end()) {
      CheckEntry copy = e;
      copy.name = name;
      into.entries.push_back(std::move(copy));
      continue;
    }
    it->cases += e.cases;
    if (!e.pass && it->pass) {
      it->pass = false;
      it->worstResidual = e.worstResidual;
      it->witness = e.witness;
    } else if (e.pass == it->pass && e.worstResidual > it->worstResidual) {
      it->worstResidual = e.worstResidual;
      it->witness = e.witness;
    }
  }
}

namespace detail {

inline WeightedVector randomVector(const Group& g, const std::vector<Element>& pool, std::mt19937_64& rng,
                                   std::size_t maxSupport = 6) {
  std::uniform_int_distribution<std::size_t> size(1, std::min(maxSupport, pool.size()));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  WeightedVector v(g);
  const std::size_t n = size(rng);
  while (v.supportSize() < n) {
    const Complex c(coord(rng), coord(rng));
    if (c != Complex(0.0)) v.set(pool[pick(rng)], c);
  }
  return v;
}

inline Complex randomPhase(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  return std::polar(1.0, angle(rng));
}

}  // namespace detail

/// Seeded property trials for the weighted convolution algebra on a ball
/// explored with unit weights: supports are drawn from the half-radius ball
/// so every product stays inside. f and g must be evaluable on the ball.
inline CheckReport weightedPropertySuite(const LengthReport& ball, const Semicharacter& f, const Semicharacter& g,
                                         std::size_t trials, std::uint64_t seed) {
  const Group& G = ball.group;
  std::vector<Element> inner;
  const double half = toDouble(ball.radius) / 2.0;
  for (std::size_t i = 0; i < ball.size(); ++i)
    if (ball.lengthValue(i) <= half) inner.push_back(ball.elements[i]);
  if (inner.empty()) throw std::invalid_argument("ball too small for the weighted suite");

  CheckReport r;
  auto entry = [&](const std::string& name) -> CheckEntry& {
    for (auto& e : r.entries)
      if (e.name == name) return e;
    return r.add(name);
  };
  for (const char* n : {"convolution_submultiplicative", "projection_contraction", "projection_identity_on_support",
                        "projection_remainder_monotone", "extremizer_attains_norm", "extremizer_in_rectangle",
                        "rectangle_members_bounded", "polar_matches_extremizer", "bipolar_agrees_with_rectangle",
                        "rectangle_intersection_is_min", "decomposition_sound", "decomposition_infeasible_detected"})
    r.add(n);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto trial = [t] { return "trial " + std::to_string(t); };
    const auto alpha = detail::randomVector(G, inner, rng);
    const auto beta = detail::randomVector(G, inner, rng);
    const double na = seminorm(alpha, f);

    {
      const double lhs = seminorm(convolve(alpha, beta), f), rhs = na * seminorm(beta, f);
      entry("convolution_submultiplicative").observe(leqRel(lhs, rhs), std::max(0.0, lhs - rhs), trial);
    }

    {
      auto supp = alpha.support();
      std::shuffle(supp.begin(), supp.end(), rng);
      std::vector<Element> region;
      double prev = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k <= supp.size(); ++k) {
        if (k > 0) region.push_back(supp[k - 1]);
        const auto p = project(alpha, region);
        const double np = seminorm(p, f), rest = seminorm(alpha.minus(p), f);
        entry("projection_contraction").observe(leqRel(np, na), std::max(0.0, np - na), trial);
        entry("projection_remainder_monotone").observe(leqRel(rest, prev), std::max(0.0, rest - prev), trial);
        prev = rest;
      }
      const double full = seminorm(alpha.minus(project(alpha, supp)), f);
      entry("projection_identity_on_support").observe(full == 0.0, full, trial);
    }

    {
      const auto ext = dualNormExtremizer(alpha, f);
      const Complex exact = pairing(alpha, ext.u);
      const double res = std::abs(exact - Complex(na));
      entry("extremizer_attains_norm").observe(res <= kRelativeTolerance * std::max(1.0, na), res, trial);
      entry("extremizer_in_rectangle").observe(inRectangle(G, alpha.support(), ext.u, f), 0.0, trial);
      FunctionTable member;
      for (const auto& x : alpha.support()) member[G.key(x)] = unit(rng) * f(x) * detail::randomPhase(rng);
      const double v = std::abs(pairing(alpha, member));
      entry("rectangle_members_bounded").observe(leqRel(v, na), std::max(0.0, v - na), trial);
      const auto scaled = alpha.scaled(2.0 * unit(rng) / na);
      entry("polar_matches_extremizer")
          .observe(polarMembership(scaled, f) == leqRel(dualNormExtremizer(scaled, f).value, 1.0), 0.0, trial);
    }

    {
      FunctionTable u;
      std::vector<Element> region;
      const auto probe = detail::randomVector(G, inner, rng);
      for (const auto& x : probe.support()) {
        region.push_back(x);
        u[G.key(x)] = 1.5 * unit(rng) * f(x) * detail::randomPhase(rng);
      }
      entry("bipolar_agrees_with_rectangle")
          .observe(inRectangle(G, region, u, f) == inBipolar(G, region, u, f), 0.0, trial);
      bool underMin = true;
      for (const auto& x : region) underMin = underMin && leqRel(std::abs(u.at(G.key(x))), std::min(f(x), g(x)));
      const bool both = inRectangle(G, region, u, f) && inRectangle(G, region, u, g);
      entry("rectangle_intersection_is_min").observe(both == underMin, 0.0, trial);
    }

    {
      double nmin = 0.0;
      for (const auto& [x, c] : alpha.terms()) nmin += std::abs(c) * std::min(f(x), g(x));
      const bool over = t % 10 == 9;
      const double target = over ? 1.01 + unit(rng) : 1.0 - unit(rng);
      const auto d = absconvDecompose(alpha.scaled(target / nmin), f, g);
      if (over) {
        entry("decomposition_infeasible_detected").observe(!d.feasible, 0.0, trial);
      } else {
        const bool ok = d.feasible && d.checks.allPass();
        entry("decomposition_sound").observe(ok, d.checks.worstResidual(), [&] {
          if (ok) return trial();
          return trial() + (d.feasible ? std::string(": witness failed re-verification") : std::string(": infeasible"));
        });
      }
    }
  }
  return r;
}

struct SeminormSuiteResult {
  CheckReport report;
  nlohmann::json seminorms = nlohmann::json::array();
};

/// Builds `count` seminorms q = C max_K w |.| with random K inside the ball,
/// w in [1, 3] and C in [1, 2], and runs the support, domination and
/// summability checks with `samples` tables each.
inline SeminormSuiteResult seminormPropertySuite(const LengthReport& ball, const Semicharacter& f, std::size_t count,
                                                 std::size_t samples, std::uint64_t seed) {
  const Group& G = ball.group;
  SeminormSuiteResult out;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> wdist(1.0, 3.0), cdist(1.0, 2.0);
  std::vector<std::size_t> order(ball.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = 0; i < count; ++i) {
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_int_distribution<std::size_t> ksize(1, std::min<std::size_t>(8, ball.size()));
    const std::size_t k = ksize(rng);
    std::vector<Element> K;
    std::vector<double> w;
    for (std::size_t j = 0; j < k; ++j) {
      K.push_back(ball.elements[order[j]]);
      w.push_back(wdist(rng));
    }
    const double C = cdist(rng);
    SubmultiplicativeSeminorm q(G, K, w, C);
    absorb(out.report, seminormSupportCheck(q, ball.elements, samples, seed + i));
    const auto dom = dominationCheck(q, samples, seed + i);
    absorb(out.report, dom.report);
    const auto sum = summabilityCheck(q, f, ball);
    absorb(out.report, sum.report);
    out.seminorms.push_back({{"support_size", k},
                             {"C", C},
                             {"domination_constant", dom.constant},
                             {"min_slack", dom.minSlack},
                             {"max_ratio", dom.maxRatio},
                             {"sum", sum.sum},
                             {"B", sum.B},
                             {"partial", sum.partial}});
  }
  return out;
}

}  // namespace duality
