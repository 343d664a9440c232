#pragma once

#include "duality/semicharacter.hpp"

#include <complex>

namespace duality {

using Complex = std::complex<double>;

/// Finitely supported function G -> C, the truncated model of O*(G).
/// Coefficients are keyed by canonical element key; exact zeros are never
/// stored.
class WeightedVector {
 public:
  explicit WeightedVector(Group g) : group_(std::move(g)) {}

  static WeightedVector delta(const Group& g, const Element& t, Complex c = 1.0) {
    WeightedVector v(g);
    v.set(t, c);
    return v;
  }

  [[nodiscard]] const Group& group() const { return group_; }
  [[nodiscard]] std::size_t supportSize() const { return coeffs_.size(); }
  [[nodiscard]] bool isZero() const { return coeffs_.empty(); }

  void set(const Element& t, Complex c) {
    group_.validate(t);
    auto k = group_.key(t);
    if (c == Complex(0.0)) {
      coeffs_.erase(k);
    } else {
      coeffs_[k] = {t, c};
    }
  }
  void add(const Element& t, Complex c) { set(t, get(t) + c); }

  [[nodiscard]] Complex get(const Element& t) const {
    auto it = coeffs_.find(group_.key(t));
    return it == coeffs_.end() ? Complex(0.0) : it->second.second;
  }

  /// (element, coefficient) pairs in canonical key order.
  [[nodiscard]] std::vector<std::pair<Element, Complex>> terms() const {
    std::vector<std::pair<Element, Complex>> out;
    out.reserve(coeffs_.size());
    for (const auto& [k, v] : coeffs_) out.push_back(v);
    return out;
  }
  [[nodiscard]] std::vector<Element> support() const {
    std::vector<Element> out;
    for (const auto& [k, v] : coeffs_) out.push_back(v.first);
    return out;
  }

  [[nodiscard]] WeightedVector scaled(Complex c) const {
    WeightedVector r(group_);
    for (const auto& [k, v] : coeffs_) r.set(v.first, c * v.second);
    return r;
  }
  [[nodiscard]] WeightedVector plus(const WeightedVector& other) const {
    WeightedVector r = *this;
    for (const auto& [k, v] : other.coeffs_) r.add(v.first, v.second);
    return r;
  }
  [[nodiscard]] WeightedVector minus(const WeightedVector& other) const { return plus(other.scaled(-1.0)); }

 private:
  Group group_;
  std::map<std::string, std::pair<Element, Complex>> coeffs_;
};

/// A function table u : (part of) G -> C keyed by canonical key.
using FunctionTable = std::unordered_map<std::string, Complex>;

/// ||alpha||_f = sum_t |alpha(t)| f(t).
inline double seminorm(const WeightedVector& alpha, const Semicharacter& f) {
  double s = 0.0;
  for (const auto& [t, c] : alpha.terms()) s += std::abs(c) * f(t);
  return s;
}

/// (alpha * beta)(t) = sum_{rs = t} alpha(r) beta(s).
inline WeightedVector convolve(const WeightedVector& alpha, const WeightedVector& beta) {
  if (alpha.group().spec().describe() != beta.group().spec().describe()) {
    throw std::invalid_argument("convolution of vectors on different groups");
  }
  const Group& g = alpha.group();
  WeightedVector r(g);
  for (const auto& [s, a] : alpha.terms())
    for (const auto& [t, b] : beta.terms()) r.add(g.mul(s, t), a * b);
  return r;
}

/// pi_N(alpha) = sum_{t in N} alpha(t) 1_t.
inline WeightedVector project(const WeightedVector& alpha, const std::vector<Element>& region) {
  const Group& g = alpha.group();
  std::set<std::string> keys;
  for (const auto& t : region) keys.insert(g.key(t));
  WeightedVector r(g);
  for (const auto& [t, c] : alpha.terms())
    if (keys.count(g.key(t))) r.set(t, c);
  return r;
}

/// <alpha, u> = sum_t alpha(t) u(t); u must cover supp(alpha).
inline Complex pairing(const WeightedVector& alpha, const FunctionTable& u) {
  Complex s = 0.0;
  for (const auto& [t, c] : alpha.terms()) {
    auto it = u.find(alpha.group().key(t));
    if (it == u.end()) throw std::invalid_argument("u has no value at " + alpha.group().format(t));
    s += c * it->second;
  }
  return s;
}

struct Extremizer {
  FunctionTable u;
  double value = 0.0;
};

/// u(t) = f(t) conj(alpha(t)) / |alpha(t)| on supp(alpha): a member of the
/// rectangle with <alpha, u> = ||alpha||_f.
inline Extremizer dualNormExtremizer(const WeightedVector& alpha, const Semicharacter& f) {
  Extremizer e;
  for (const auto& [t, c] : alpha.terms()) {
    e.u[alpha.group().key(t)] = f(t) * std::conj(c) / std::abs(c);
  }
  e.value = pairing(alpha, e.u).real();
  return e;
}

/// u in f^rect: |u(t)| <= f(t) at every tabulated point.
inline bool inRectangle(const Group& g, const std::vector<Element>& region, const FunctionTable& u,
                        const Semicharacter& f) {
  for (const auto& t : region) {
    auto it = u.find(g.key(t));
    const double v = it == u.end() ? 0.0 : std::abs(it->second);
    if (!leqRel(v, f(t))) return false;
  }
  return true;
}

/// alpha in (f^rect)°: sup over the rectangle of |<alpha, u>| <= 1, which is
/// ||alpha||_f <= 1.
inline bool polarMembership(const WeightedVector& alpha, const Semicharacter& f) {
  return leqRel(seminorm(alpha, f), 1.0);
}

/// u in (f^rect)°° on a finite region, computed through the polar: the
/// extreme points of the polar ball are phase * delta^t / f(t), so the
/// supremum of |<alpha, u>| over the polar is max_t |u(t)| / f(t).
inline bool inBipolar(const Group& g, const std::vector<Element>& region, const FunctionTable& u,
                      const Semicharacter& f) {
  double sup = 0.0;
  for (const auto& t : region) {
    auto it = u.find(g.key(t));
    if (it == u.end()) continue;
    const auto probe = WeightedVector::delta(g, t, 1.0 / f(t));
    sup = std::max(sup, std::abs(pairing(probe, u)));
  }
  return leqRel(sup, 1.0);
}

struct Decomposition {
  bool feasible = false;
  double normMin = 0.0;  // ||alpha||_{min(f,g)}
  double lambda = 0.0;
  WeightedVector beta;
  WeightedVector gamma;
  CheckReport checks;
};

/// For ||alpha||_{min(f,g)} <= 1, writes alpha = lambda beta + (1 - lambda) gamma
/// with ||beta||_f <= 1 and ||gamma||_g <= 1 by sending each coordinate to
/// whichever of f, g is smaller there. The witness is re-verified: both
/// norms are recomputed and the recombination is compared coefficientwise.
inline Decomposition absconvDecompose(const WeightedVector& alpha, const Semicharacter& f, const Semicharacter& g) {
  const Group& G = alpha.group();
  Decomposition d{false, 0.0, 0.0, WeightedVector(G), WeightedVector(G), {}};
  WeightedVector af(G), ag(G);
  for (const auto& [t, c] : alpha.terms()) {
    const double ft = f(t), gt = g(t);
    d.normMin += std::abs(c) * std::min(ft, gt);
    (ft <= gt ? af : ag).set(t, c);
  }
  if (!leqRel(d.normMin, 1.0)) return d;
  d.feasible = true;
  const double a = seminorm(af, f), b = seminorm(ag, g);
  if (a + b == 0.0) {
    d.lambda = 1.0;
  } else {
    d.lambda = a / (a + b);
    if (d.lambda > 0.0) d.beta = af.scaled(1.0 / d.lambda);
    if (d.lambda < 1.0) d.gamma = ag.scaled(1.0 / (1.0 - d.lambda));
  }

  auto& betaNorm = d.checks.add("beta_in_f_polar");
  const double nb = seminorm(d.beta, f);
  betaNorm.observe(leqRel(nb, 1.0), std::max(0.0, nb - 1.0), [&] { return "||beta||_f = " + std::to_string(nb); });
  auto& gammaNorm = d.checks.add("gamma_in_g_polar");
  const double ng = seminorm(d.gamma, g);
  gammaNorm.observe(leqRel(ng, 1.0), std::max(0.0, ng - 1.0), [&] { return "||gamma||_g = " + std::to_string(ng); });
  auto& recombine = d.checks.add("recombines_to_alpha");
  const auto back = d.beta.scaled(d.lambda).plus(d.gamma.scaled(1.0 - d.lambda));
  auto points = back.support();
  for (const auto& t : alpha.support()) points.push_back(t);
  for (const auto& t : points) {
    const Complex x = back.get(t), y = alpha.get(t);
    const double res = std::abs(x - y);
    recombine.observe(res <= kRelativeTolerance * std::max({1.0, std::abs(x), std::abs(y)}), res,
                      [&] { return G.format(t); });
  }
  return d;
}

}  // namespace duality
