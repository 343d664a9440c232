#pragma once

#include "duality/hopf.hpp"

#include <deque>
#include <numeric>

namespace duality {

enum class GroupPartMode { ClosedForm, BruteForce };

inline constexpr std::size_t kMaxBruteForceDim = 64;

template <class Field>
struct GroupPart {
  std::vector<std::vector<typename Field::value_type>> elements;
  CheckReport checks;
};

namespace detail {

/// |v| small relative to scale; exact fields compare with zero exactly.
template <class Field>
bool nearZero(const Field& F, const typename Field::value_type& v, double scale) {
  if constexpr (Field::exact) {
    return F.isZero(v);
  } else {
    return F.magnitude(v) <= F.tolerance() * std::max(1.0, scale);
  }
}

/// Every root of unity the field contains, deduplicated, in a fixed order.
/// For the complex field the orders are capped at maxOrder.
template <class Field>
std::vector<typename Field::value_type> rootsOfUnity(const Field& F, std::int64_t maxOrder) {
  std::vector<typename Field::value_type> out;
  auto push = [&](const typename Field::value_type& z) {
    for (const auto& w : out)
      if (F.eq(w, z)) return;
    out.push_back(z);
  };
  if constexpr (Field::exact) {
    const std::int64_t full = F.order() % 2 == 0 ? F.order() : 2 * static_cast<std::int64_t>(F.order());
    for (std::int64_t k = 0; k < full; ++k) push(F.rootOfUnity(full, k));
  } else {
    for (std::int64_t n = 1; n <= maxOrder; ++n)
      for (std::int64_t k = 0; k < n; ++k)
        if (std::gcd(n, k) == 1 || (n == 1 && k == 0)) push(F.rootOfUnity(n, k));
  }
  return out;
}

/// Coefficients c with sum_i c_i vs[i] = target, or nullopt if target is
/// outside the span. Gaussian elimination with largest-magnitude pivots.
template <class Field>
std::optional<std::vector<typename Field::value_type>> solveInSpan(
    const Field& F, const std::vector<std::vector<typename Field::value_type>>& vs,
    const std::vector<typename Field::value_type>& target) {
  const std::size_t rows = target.size(), cols = vs.size();
  std::vector<std::vector<typename Field::value_type>> m(rows, std::vector<typename Field::value_type>(cols + 1));
  double scale = 0.0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m[r][c] = vs[c][r];
      scale = std::max(scale, F.magnitude(m[r][c]));
    }
    m[r][cols] = target[r];
    scale = std::max(scale, F.magnitude(target[r]));
  }
  std::vector<std::size_t> pivotCol;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t best = row;
    for (std::size_t r = row + 1; r < rows; ++r)
      if (F.magnitude(m[r][c]) > F.magnitude(m[best][c])) best = r;
    if (nearZero(F, m[best][c], scale)) continue;
    std::swap(m[row], m[best]);
    const auto inv = F.inv(m[row][c]);
    for (auto& v : m[row]) v = F.mul(v, inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || F.isZero(m[r][c])) continue;
      const auto factor = m[r][c];
      for (std::size_t k = c; k <= cols; ++k) m[r][k] = F.sub(m[r][k], F.mul(factor, m[row][k]));
    }
    pivotCol.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (!nearZero(F, m[r][cols], scale)) return std::nullopt;
  std::vector<typename Field::value_type> coeffs(cols, F.zero());
  for (std::size_t i = 0; i < pivotCol.size(); ++i) coeffs[pivotCol[i]] = m[i][cols];
  return coeffs;
}

inline std::int64_t elementOrder(const Group& g, const Element& x) {
  std::int64_t n = 1;
  for (Element y = x; y != g.identity(); y = g.mul(y, x)) ++n;
  return n;
}

/// Homomorphisms G -> roots of unity in F, as coordinate vectors over the
/// enumeration of G. Values are assigned on generators and propagated along
/// the Cayley graph; inconsistent or non-multiplicative assignments drop out.
template <class Field>
std::vector<std::vector<typename Field::value_type>> multiplicativeFunctions(const Group& g, const Field& F) {
  using V = typename Field::value_type;
  const auto elems = g.enumerate();
  const auto idx = indexByKey(g, elems);
  const auto gens = g.standardGenerators().elements;
  std::vector<std::vector<V>> choices;
  for (const auto& s : gens) {
    const std::int64_t o = elementOrder(g, s);
    std::vector<V> vals;
    for (std::int64_t k = 0; k < o; ++k) {
      const std::int64_t d = std::gcd(o, k == 0 ? o : k);
      if (F.supportsRootOfUnity(o / d)) vals.push_back(F.rootOfUnity(o / d, k / d));
    }
    choices.push_back(std::move(vals));
  }

  std::vector<std::vector<V>> out;
  std::vector<std::size_t> pick(gens.size(), 0);
  const std::size_t e = idx.at(g.key(g.identity()));
  while (true) {
    std::vector<std::optional<V>> u(elems.size());
    u[e] = F.one();
    std::deque<std::size_t> todo{e};
    bool ok = true;
    while (!todo.empty() && ok) {
      const std::size_t x = todo.front();
      todo.pop_front();
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        const std::size_t y = idx.at(g.key(g.mul(elems[x], gens[i])));
        const V val = F.mul(*u[x], choices[i][pick[i]]);
        if (!u[y]) {
          u[y] = val;
          todo.push_back(y);
        } else if (!F.eq(*u[y], val)) {
          ok = false;
        }
      }
    }
    if (ok) {
      for (std::size_t a = 0; a < elems.size() && ok; ++a)
        for (std::size_t b = 0; b < elems.size() && ok; ++b) {
          const std::size_t ab = idx.at(g.key(g.mul(elems[a], elems[b])));
          ok = F.eq(*u[ab], F.mul(*u[a], *u[b]));
        }
    }
    if (ok) {
      std::vector<V> vec;
      for (auto& v : u) vec.push_back(*v);
      out.push_back(std::move(vec));
    }
    std::size_t i = 0;
    for (; i < gens.size(); ++i) {
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
    }
    if (i == gens.size()) break;
  }
  return out;
}

/// Group-likes as characters of the dual algebra A = H*: a_p a_q =
/// sum_k c^k_{pq} a_k where c^k_{pq} is the (p,q) coefficient of kappa(e_k).
/// The candidate values for a_p are the roots, among 0 and the roots of
/// unity in the field, of the minimal polynomial of e^p in A; the system is
/// solved by backtracking over coordinates with equations checked as soon as
/// all their variables are assigned.
template <class Field>
std::vector<std::vector<typename Field::value_type>> bruteForceGroupLikes(const HopfAlgebra<Field>& h) {
  using V = typename Field::value_type;
  const auto& F = h.field();
  const std::size_t d = h.dim();
  const auto A = dualHopf(h);
  const auto roots = rootsOfUnity(F, static_cast<std::int64_t>(std::max<std::size_t>(d, 2)));

  std::vector<std::vector<V>> candidates(d);
  for (std::size_t p = 0; p < d; ++p) {
    std::vector<std::vector<V>> powers{A.unit()};
    std::vector<V> relation;
    for (std::size_t j = 1; j <= d + 1; ++j) {
      auto next = A.multiply(powers.back(), A.basis(p));
      if (auto c = solveInSpan(F, powers, next)) {
        // x^j - sum_i c_i x^i
        relation.assign(j + 1, F.zero());
        for (std::size_t i = 0; i < j; ++i) relation[i] = F.neg((*c)[i]);
        relation[j] = F.one();
        break;
      }
      powers.push_back(std::move(next));
    }
    if (relation.empty()) throw std::logic_error("minimal polynomial not found");
    double scale = 0.0;
    for (const auto& c : relation) scale += F.magnitude(c);
    auto consider = [&](const V& z) {
      V acc = F.zero();
      for (std::size_t i = relation.size(); i-- > 0;) acc = F.add(F.mul(acc, z), relation[i]);
      if (nearZero(F, acc, scale)) candidates[p].push_back(z);
    };
    consider(F.zero());
    for (const auto& z : roots) consider(z);
  }

  struct Equation {
    std::size_t p, q;
    std::vector<std::pair<std::size_t, V>> terms;
  };
  std::vector<std::vector<Equation>> byLastVar(d);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) {
      Equation eq{p, q, {}};
      std::size_t last = std::max(p, q);
      for (const auto& [k, c] : A.mulTerms(p, q)) {
        eq.terms.emplace_back(k, c);
        last = std::max(last, k);
      }
      byLastVar[last].push_back(std::move(eq));
    }

  std::vector<std::vector<V>> out;
  std::vector<V> a(d, F.zero());
  auto satisfied = [&](std::size_t var) {
    for (const auto& eq : byLastVar[var]) {
      V rhs = F.zero();
      for (const auto& [k, c] : eq.terms) rhs = F.add(rhs, F.mul(c, a[k]));
      if (!F.eq(F.mul(a[eq.p], a[eq.q]), rhs)) return false;
    }
    return true;
  };
  std::function<void(std::size_t)> search = [&](std::size_t var) {
    if (var == d) {
      if (std::any_of(a.begin(), a.end(), [&](const V& v) { return !F.isZero(v); })) out.push_back(a);
      return;
    }
    for (const auto& z : candidates[var]) {
      a[var] = z;
      if (satisfied(var)) search(var + 1);
    }
    a[var] = F.zero();
  };
  search(0);
  return out;
}

}  // namespace detail

/// The group part of h: all nonzero a with kappa(a) = a (x) a. Every result
/// is re-verified, and closure under the product is reported.
template <class Field>
GroupPart<Field> groupPart(const HopfAlgebra<Field>& h, GroupPartMode mode) {
  const auto& F = h.field();
  GroupPart<Field> out;
  if (mode == GroupPartMode::ClosedForm) {
    if (!h.group()) throw std::invalid_argument("closed-form group part needs an algebra built from a group");
    switch (h.origin()) {
      case HopfOrigin::GroupAlgebra:
        for (std::size_t i = 0; i < h.dim(); ++i) out.elements.push_back(h.basis(i));
        break;
      case HopfOrigin::FunctionAlgebra: out.elements = detail::multiplicativeFunctions(*h.group(), F); break;
      default: throw std::invalid_argument("closed-form group part needs an algebra built from a group");
    }
  } else {
    if (h.dim() > kMaxBruteForceDim) {
      throw std::invalid_argument("brute-force group part limited to dimension " + std::to_string(kMaxBruteForceDim));
    }
    out.elements = detail::bruteForceGroupLikes(h);
  }

  const std::size_t d = h.dim();
  auto describe = [&](const auto& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!F.isZero(v[i])) s += (s.empty() ? "" : " + ") + F.str(v[i]) + "*" + h.labels()[i];
    return s.empty() ? std::string("0") : s;
  };
  auto& grouplike = out.checks.add("grouplike");
  for (const auto& a : out.elements) {
    const auto lhs = h.comultiply(a);
    bool ok = true;
    double worst = 0.0;
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q) {
        const auto rhs = F.mul(a[p], a[q]);
        ok = ok && F.eq(lhs[p * d + q], rhs);
        worst = std::max(worst, F.residual(lhs[p * d + q], rhs));
      }
    grouplike.observe(ok, worst, [&] { return describe(a); });
  }
  auto& closed = out.checks.add("closed_under_product");
  auto find = [&](const auto& v) {
    for (std::size_t i = 0; i < out.elements.size(); ++i) {
      bool same = true;
      for (std::size_t k = 0; k < d && same; ++k) same = F.eq(out.elements[i][k], v[k]);
      if (same) return true;
    }
    return false;
  };
  for (const auto& a : out.elements)
    for (const auto& b : out.elements) {
      const auto ab = h.multiply(a, b);
      closed.observe(find(ab), 0.0, [&] { return describe(ab); });
    }
  return out;
}

}  // namespace duality
