#pragma once

#include "duality/rational.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace duality {

// Scalar backends. A field object carries its runtime parameters (tolerance,
// cyclotomic order) and performs all arithmetic on its value_type; the Hopf
// machinery is written once against this interface.

/// Complex doubles; equality means distance <= tolerance.
class ComplexField {
 public:
  using value_type = std::complex<double>;
  static constexpr bool exact = false;

  explicit ComplexField(double tolerance = 1e-9) : tolerance_(tolerance) {}

  [[nodiscard]] double tolerance() const { return tolerance_; }
  [[nodiscard]] std::string name() const { return "float"; }

  [[nodiscard]] value_type zero() const { return {0.0, 0.0}; }
  [[nodiscard]] value_type one() const { return {1.0, 0.0}; }
  [[nodiscard]] value_type fromInt(std::int64_t v) const { return {static_cast<double>(v), 0.0}; }
  [[nodiscard]] value_type fromRational(const Rational& r) const { return {toDouble(r), 0.0}; }

  [[nodiscard]] value_type add(const value_type& a, const value_type& b) const { return a + b; }
  [[nodiscard]] value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  [[nodiscard]] value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  [[nodiscard]] value_type neg(const value_type& a) const { return -a; }
  [[nodiscard]] value_type conj(const value_type& a) const { return std::conj(a); }
  [[nodiscard]] value_type inv(const value_type& a) const {
    if (std::abs(a) == 0.0) throw std::domain_error("division by zero");
    return 1.0 / a;
  }

  /// zeta_n^k with exact values at multiples of a quarter turn.
  [[nodiscard]] value_type rootOfUnity(std::int64_t n, std::int64_t k) const {
    if (n <= 0) throw std::invalid_argument("root of unity order must be positive");
    k %= n;
    if (k < 0) k += n;
    if ((4 * k) % n == 0) {
      switch ((4 * k) / n) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
      }
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
  }

  [[nodiscard]] bool supportsRootOfUnity(std::int64_t /*n*/) const { return true; }

  [[nodiscard]] bool isZero(const value_type& a) const { return std::abs(a) <= tolerance_; }
  [[nodiscard]] bool eq(const value_type& a, const value_type& b) const { return std::abs(a - b) <= tolerance_; }
  [[nodiscard]] double residual(const value_type& a, const value_type& b) const { return std::abs(a - b); }
  [[nodiscard]] double magnitude(const value_type& a) const { return std::abs(a); }
  [[nodiscard]] std::complex<double> embed(const value_type& a) const { return a; }

  [[nodiscard]] std::string str(const value_type& a) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", a.real(), a.imag());
    return buf;
  }

 private:
  double tolerance_;
};

namespace poly {

using Poly = std::vector<Rational>;  // coefficients, lowest degree first

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

/// Quotient and remainder of a by a nonzero b.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  Poly bb = b;
  trim(bb);
  if (bb.empty()) throw std::domain_error("polynomial division by zero");
  trim(a);
  if (a.size() < bb.size()) return {Poly{}, a};
  Poly q(a.size() - bb.size() + 1, Rational(0));
  const Rational lead = bb.back();
  while (a.size() >= bb.size()) {
    std::size_t shift = a.size() - bb.size();
    Rational c = a.back() / lead;
    q[shift] = c;
    for (std::size_t i = 0; i < bb.size(); ++i) a[shift + i] -= c * bb[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

/// N-th cyclotomic polynomial: (x^N - 1) divided by Phi_d for every proper divisor d.
inline Poly cyclotomic(int n) {
  Poly p(static_cast<std::size_t>(n) + 1, Rational(0));
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = divmod(p, cyclotomic(d));
    if (!r.empty()) throw std::logic_error("cyclotomic division left a remainder");
    p = q;
  }
  return p;
}

/// Inverse of a modulo m by the extended Euclidean algorithm.
inline Poly inverseMod(const Poly& a, const Poly& m) {
  Poly r0 = m, r1 = a;
  trim(r1);
  if (r1.empty()) throw std::domain_error("inverse of zero");
  Poly s0{}, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    Poly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant gcd when a is a unit modulo m
  if (r0.size() != 1) throw std::domain_error("element is not invertible modulo the cyclotomic polynomial");
  for (auto& c : s0) c /= r0[0];
  return divmod(s0, m).second;
}

}  // namespace poly

/// Exact arithmetic in Q(zeta_N), elements stored as rational coefficient
/// vectors of length phi(N) in the power basis, reduced modulo Phi_N.
class CyclotomicField {
 public:
  using value_type = std::vector<Rational>;
  static constexpr bool exact = true;

  explicit CyclotomicField(int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    modulus_ = poly::cyclotomic(order);
    degree_ = modulus_.size() - 1;
    // x^k mod Phi_N for k < max(N, 2*degree - 1)
    std::size_t need = std::max<std::size_t>(static_cast<std::size_t>(order), 2 * degree_);
    powers_.reserve(need);
    for (std::size_t k = 0; k < need; ++k) {
      poly::Poly mono(k + 1, Rational(0));
      mono[k] = 1;
      powers_.push_back(pad(poly::divmod(mono, modulus_).second));
    }
  }

  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] std::size_t degree() const { return degree_; }
  [[nodiscard]] std::string name() const { return "cyclotomic(" + std::to_string(order_) + ")"; }
  [[nodiscard]] const poly::Poly& modulus() const { return modulus_; }

  [[nodiscard]] value_type zero() const { return value_type(degree_, Rational(0)); }
  [[nodiscard]] value_type one() const { return fromInt(1); }
  [[nodiscard]] value_type fromInt(std::int64_t v) const {
    value_type r = zero();
    r[0] = v;
    return r;
  }
  [[nodiscard]] value_type fromRational(const Rational& q) const {
    value_type r = zero();
    r[0] = q;
    return r;
  }

  [[nodiscard]] value_type add(const value_type& a, const value_type& b) const {
    value_type r = a;
    for (std::size_t i = 0; i < degree_; ++i) r[i] += b[i];
    return r;
  }
  [[nodiscard]] value_type sub(const value_type& a, const value_type& b) const {
    value_type r = a;
    for (std::size_t i = 0; i < degree_; ++i) r[i] -= b[i];
    return r;
  }
  [[nodiscard]] value_type neg(const value_type& a) const {
    value_type r = a;
    for (auto& c : r) c = -c;
    return r;
  }
  [[nodiscard]] value_type mul(const value_type& a, const value_type& b) const {
    std::vector<Rational> full(2 * degree_ - 1, Rational(0));
    for (std::size_t i = 0; i < degree_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < degree_; ++j) {
        if (b[j] != 0) full[i + j] += a[i] * b[j];
      }
    }
    return reduce(full);
  }
  [[nodiscard]] value_type inv(const value_type& a) const {
    if (isZero(a)) throw std::domain_error("division by zero");
    poly::Poly p(a.begin(), a.end());
    return pad(poly::inverseMod(p, modulus_));
  }
  /// Complex conjugation: zeta -> zeta^-1.
  [[nodiscard]] value_type conj(const value_type& a) const {
    value_type r = zero();
    for (std::size_t i = 0; i < degree_; ++i) {
      if (a[i] == 0) continue;
      std::size_t k = (static_cast<std::size_t>(order_) - i % static_cast<std::size_t>(order_)) %
                      static_cast<std::size_t>(order_);
      const auto& m = powers_[k];
      for (std::size_t j = 0; j < degree_; ++j) r[j] += a[i] * m[j];
    }
    return r;
  }

  /// True when a primitive n-th root of unity lies in Q(zeta_N).
  [[nodiscard]] bool supportsRootOfUnity(std::int64_t n) const {
    std::int64_t full = order_ % 2 == 0 ? order_ : 2 * static_cast<std::int64_t>(order_);
    return n > 0 && full % n == 0;
  }

  /// zeta_n^k, where zeta_n = exp(2 pi i / n).
  [[nodiscard]] value_type rootOfUnity(std::int64_t n, std::int64_t k) const {
    if (!supportsRootOfUnity(n)) {
      throw std::domain_error("Q(zeta_" + std::to_string(order_) + ") has no primitive " + std::to_string(n) +
                              "-th root of unity");
    }
    k %= n;
    if (k < 0) k += n;
    if (order_ % n == 0) return zetaPower(k * (order_ / n));
    // N odd and n | 2N: zeta_{2N} = -zeta_N^{(N+1)/2}
    std::int64_t twoN = 2 * static_cast<std::int64_t>(order_);
    std::int64_t m = k * (twoN / n) % twoN;
    value_type r = zetaPower((m % 2 == 0 ? m / 2 : m * (order_ + 1) / 2) % order_);
    return (m % 2 == 0) ? r : neg(r);
  }

  [[nodiscard]] bool isZero(const value_type& a) const {
    for (const auto& c : a)
      if (c != 0) return false;
    return true;
  }
  [[nodiscard]] bool eq(const value_type& a, const value_type& b) const { return a == b; }
  [[nodiscard]] std::complex<double> embed(const value_type& a) const {
    std::complex<double> z = 0.0;
    for (std::size_t i = 0; i < degree_; ++i) {
      if (a[i] == 0) continue;
      z += toDouble(a[i]) *
           std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(order_));
    }
    return z;
  }
  /// Exact zero when equal; otherwise the distance of complex embeddings,
  /// floored at the smallest positive double so a difference never reads 0.
  [[nodiscard]] double residual(const value_type& a, const value_type& b) const {
    if (a == b) return 0.0;
    return std::max(std::abs(embed(sub(a, b))), std::numeric_limits<double>::denorm_min());
  }
  [[nodiscard]] double magnitude(const value_type& a) const { return std::abs(embed(a)); }

  [[nodiscard]] std::string str(const value_type& a) const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i].str();
    os << ")";
    return os.str();
  }

 private:
  [[nodiscard]] value_type zetaPower(std::int64_t k) const {
    k %= order_;
    if (k < 0) k += order_;
    return powers_[static_cast<std::size_t>(k)];
  }

  [[nodiscard]] value_type pad(poly::Poly p) const {
    p.resize(degree_, Rational(0));
    return p;
  }

  [[nodiscard]] value_type reduce(const std::vector<Rational>& full) const {
    value_type r = zero();
    for (std::size_t k = 0; k < full.size(); ++k) {
      if (full[k] == 0) continue;
      if (k < degree_) {
        r[k] += full[k];
      } else {
        const auto& m = powers_[k];
        for (std::size_t j = 0; j < degree_; ++j) r[j] += full[k] * m[j];
      }
    }
    return r;
  }

  int order_;
  std::size_t degree_ = 0;
  poly::Poly modulus_;
  std::vector<value_type> powers_;
};

}  // namespace duality
