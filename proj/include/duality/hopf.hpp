#pragma once

#include "duality/field.hpp"
#include "duality/group.hpp"
#include "duality/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace duality {

/// How a Hopf algebra was built; closed-form group-part extraction needs it.
enum class HopfOrigin { Generic, FunctionAlgebra, GroupAlgebra };

/// Finite-dimensional Hopf algebra given by structure tensors over a fixed
/// basis e_0..e_{d-1}:
///   e_i e_j   = sum_k mul(i,j)_k e_k
///   1         = sum_k unit_k e_k
///   kappa(e_i) = sum_{p,q} comul(i)_{p*d+q} e_p (x) e_q
///   eps(e_i)  = counit_i
///   sigma(e_i) = sum_k antipode(i)_k e_k
/// Tensors are sparse coordinate lists sorted by index.
template <class Field>
class HopfAlgebra {
 public:
  using Scalar = typename Field::value_type;
  using Vec = std::vector<Scalar>;
  using Sparse = std::vector<std::pair<std::size_t, Scalar>>;

  HopfAlgebra(Field field, std::vector<std::string> labels, std::vector<Sparse> mul, Vec unit,
              std::vector<Sparse> comul, Vec counit, std::vector<Sparse> antipode)
      : field_(std::move(field)),
        labels_(std::move(labels)),
        mul_(std::move(mul)),
        unit_(std::move(unit)),
        comul_(std::move(comul)),
        counit_(std::move(counit)),
        antipode_(std::move(antipode)) {
    const std::size_t d = labels_.size();
    if (mul_.size() != d * d || unit_.size() != d || comul_.size() != d || counit_.size() != d ||
        antipode_.size() != d) {
      throw std::invalid_argument("structure tensors are not total over the basis");
    }
    for (auto* family : {&mul_, &antipode_}) {
      for (auto& s : *family) normalize(s, d);
    }
    for (auto& s : comul_) normalize(s, d * d);
  }

  [[nodiscard]] std::size_t dim() const { return labels_.size(); }
  [[nodiscard]] const Field& field() const { return field_; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const Sparse& mulTerms(std::size_t i, std::size_t j) const { return mul_[i * dim() + j]; }
  [[nodiscard]] const Vec& unit() const { return unit_; }
  [[nodiscard]] const Sparse& comulTerms(std::size_t i) const { return comul_[i]; }
  [[nodiscard]] const Vec& counit() const { return counit_; }
  [[nodiscard]] const Sparse& antipodeTerms(std::size_t i) const { return antipode_[i]; }

  [[nodiscard]] HopfOrigin origin() const { return origin_; }
  [[nodiscard]] const std::optional<Group>& group() const { return group_; }
  void setOrigin(HopfOrigin o, std::optional<Group> g) {
    origin_ = o;
    group_ = std::move(g);
  }

  [[nodiscard]] Vec zeroVec(std::size_t n) const { return Vec(n, field_.zero()); }
  [[nodiscard]] Vec basis(std::size_t i) const {
    Vec v = zeroVec(dim());
    v[i] = field_.one();
    return v;
  }

  [[nodiscard]] Vec multiply(const Vec& a, const Vec& b) const {
    Vec r = zeroVec(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (field_.isZero(a[i])) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (field_.isZero(b[j])) continue;
        axpy(r, field_.mul(a[i], b[j]), mulTerms(i, j));
      }
    }
    return r;
  }

  /// Dense coefficients over the basis pairs, index p*dim+q.
  [[nodiscard]] Vec comultiply(const Vec& a) const {
    Vec r = zeroVec(dim() * dim());
    for (std::size_t i = 0; i < dim(); ++i)
      if (!field_.isZero(a[i])) axpy(r, a[i], comul_[i]);
    return r;
  }

  [[nodiscard]] Scalar counitOf(const Vec& a) const {
    Scalar s = field_.zero();
    for (std::size_t i = 0; i < dim(); ++i) s = field_.add(s, field_.mul(a[i], counit_[i]));
    return s;
  }

  [[nodiscard]] Vec antipodeOf(const Vec& a) const {
    Vec r = zeroVec(dim());
    for (std::size_t i = 0; i < dim(); ++i)
      if (!field_.isZero(a[i])) axpy(r, a[i], antipode_[i]);
    return r;
  }

  /// Copy with one multiplication coefficient replaced (negative controls).
  [[nodiscard]] HopfAlgebra withMulEntry(std::size_t i, std::size_t j, std::size_t k, Scalar value) const {
    HopfAlgebra h = *this;
    auto& terms = h.mul_[i * dim() + j];
    bool found = false;
    for (auto& [idx, c] : terms) {
      if (idx == k) {
        c = value;
        found = true;
      }
    }
    if (!found) terms.emplace_back(k, std::move(value));
    normalize(terms, dim());
    return h;
  }

  void axpy(Vec& acc, const Scalar& c, const Sparse& s) const {
    for (const auto& [idx, v] : s) acc[idx] = field_.add(acc[idx], field_.mul(c, v));
  }

 private:
  void normalize(Sparse& s, std::size_t bound) const {
    std::map<std::size_t, Scalar> merged;
    for (auto& [idx, v] : s) {
      if (idx >= bound) throw std::invalid_argument("structure tensor index out of range");
      auto it = merged.find(idx);
      if (it == merged.end()) {
        merged.emplace(idx, v);
      } else {
        it->second = field_.add(it->second, v);
      }
    }
    s.clear();
    for (auto& [idx, v] : merged)
      if (!field_.isZero(v)) s.emplace_back(idx, std::move(v));
  }

  Field field_;
  std::vector<std::string> labels_;
  std::vector<Sparse> mul_;
  Vec unit_;
  std::vector<Sparse> comul_;
  Vec counit_;
  std::vector<Sparse> antipode_;
  HopfOrigin origin_ = HopfOrigin::Generic;
  std::optional<Group> group_;
};

namespace detail {

inline std::unordered_map<std::string, std::size_t> indexByKey(const Group& g, const std::vector<Element>& elems) {
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < elems.size(); ++i) idx.emplace(g.key(elems[i]), i);
  return idx;
}

}  // namespace detail

/// C^G: functions on a finite group, basis of indicators 1_x.
template <class Field>
HopfAlgebra<Field> functionAlgebra(const Group& g, const Field& field) {
  if (!g.isFinite()) throw std::invalid_argument("functionAlgebra needs a finite group, got " + g.spec().describe());
  using H = HopfAlgebra<Field>;
  const auto elems = g.enumerate();
  const auto idx = detail::indexByKey(g, elems);
  const std::size_t d = elems.size();
  std::vector<std::string> labels;
  for (const auto& x : elems) labels.push_back("1_" + g.format(x));

  std::vector<typename H::Sparse> mul(d * d);
  for (std::size_t i = 0; i < d; ++i) mul[i * d + i] = {{i, field.one()}};
  typename H::Vec unit(d, field.one());

  std::vector<typename H::Sparse> comul(d);
  for (std::size_t s = 0; s < d; ++s) {
    const Element sInv = g.inv(elems[s]);
    for (std::size_t x = 0; x < d; ++x) {
      // s * t = x  <=>  t = s^-1 x
      std::size_t t = idx.at(g.key(g.mul(sInv, elems[x])));
      comul[x].emplace_back(s * d + t, field.one());
    }
  }
  typename H::Vec counit(d, field.zero());
  counit[idx.at(g.key(g.identity()))] = field.one();

  std::vector<typename H::Sparse> antipode(d);
  for (std::size_t x = 0; x < d; ++x) antipode[x] = {{idx.at(g.key(g.inv(elems[x]))), field.one()}};

  H h(field, std::move(labels), std::move(mul), std::move(unit), std::move(comul), std::move(counit),
      std::move(antipode));
  h.setOrigin(HopfOrigin::FunctionAlgebra, g);
  return h;
}

/// C_G: the group algebra, basis of point masses delta^t.
template <class Field>
HopfAlgebra<Field> groupAlgebra(const Group& g, const Field& field) {
  if (!g.isFinite()) throw std::invalid_argument("groupAlgebra needs a finite group, got " + g.spec().describe());
  using H = HopfAlgebra<Field>;
  const auto elems = g.enumerate();
  const auto idx = detail::indexByKey(g, elems);
  const std::size_t d = elems.size();
  std::vector<std::string> labels;
  for (const auto& x : elems) labels.push_back("delta^" + g.format(x));

  std::vector<typename H::Sparse> mul(d * d);
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t) mul[s * d + t] = {{idx.at(g.key(g.mul(elems[s], elems[t]))), field.one()}};
  const std::size_t e = idx.at(g.key(g.identity()));
  typename H::Vec unit(d, field.zero());
  unit[e] = field.one();

  std::vector<typename H::Sparse> comul(d);
  for (std::size_t t = 0; t < d; ++t) comul[t] = {{t * d + t, field.one()}};
  typename H::Vec counit(d, field.one());
  std::vector<typename H::Sparse> antipode(d);
  for (std::size_t t = 0; t < d; ++t) antipode[t] = {{idx.at(g.key(g.inv(elems[t]))), field.one()}};

  H h(field, std::move(labels), std::move(mul), std::move(unit), std::move(comul), std::move(counit),
      std::move(antipode));
  h.setOrigin(HopfOrigin::GroupAlgebra, g);
  return h;
}

/// The dual Hopf algebra on the dual basis: multiplication is the transpose of
/// the comultiplication and vice versa, unit and counit swap, the antipode is
/// transposed. The dual of C^G carries the origin of C_G and conversely.
template <class Field>
HopfAlgebra<Field> dualHopf(const HopfAlgebra<Field>& h) {
  using H = HopfAlgebra<Field>;
  const std::size_t d = h.dim();
  std::vector<std::string> labels;
  for (const auto& l : h.labels()) labels.push_back("dual(" + l + ")");

  std::vector<typename H::Sparse> mul(d * d);
  for (std::size_t k = 0; k < d; ++k)
    for (const auto& [pq, c] : h.comulTerms(k)) mul[pq].emplace_back(k, c);

  std::vector<typename H::Sparse> comul(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [k, c] : h.mulTerms(i, j)) comul[k].emplace_back(i * d + j, c);

  std::vector<typename H::Sparse> antipode(d);
  for (std::size_t i = 0; i < d; ++i)
    for (const auto& [k, c] : h.antipodeTerms(i)) antipode[k].emplace_back(i, c);

  H dual(h.field(), std::move(labels), std::move(mul), h.counit(), std::move(comul), h.unit(), std::move(antipode));
  switch (h.origin()) {
    case HopfOrigin::FunctionAlgebra: dual.setOrigin(HopfOrigin::GroupAlgebra, h.group()); break;
    case HopfOrigin::GroupAlgebra: dual.setOrigin(HopfOrigin::FunctionAlgebra, h.group()); break;
    default: break;
  }
  return dual;
}

/// Standard tensor product Hopf structure on basis pairs (i,j) -> i*dk + j.
template <class Field>
HopfAlgebra<Field> tensorHopf(const HopfAlgebra<Field>& h, const HopfAlgebra<Field>& k) {
  using H = HopfAlgebra<Field>;
  const std::size_t dh = h.dim(), dk = k.dim(), d = dh * dk;
  constexpr std::size_t kMaxTensorDim = 10000;
  if (d > kMaxTensorDim) {
    throw std::invalid_argument("tensor dimension " + std::to_string(d) + " exceeds cap " +
                                std::to_string(kMaxTensorDim));
  }
  const auto& F = h.field();
  std::vector<std::string> labels;
  for (const auto& a : h.labels())
    for (const auto& b : k.labels()) labels.push_back(a + "(x)" + b);

  std::vector<typename H::Sparse> mul(d * d);
  for (std::size_t a = 0; a < dh; ++a)
    for (std::size_t b = 0; b < dk; ++b)
      for (std::size_t c = 0; c < dh; ++c)
        for (std::size_t e = 0; e < dk; ++e) {
          auto& out = mul[(a * dk + b) * d + (c * dk + e)];
          for (const auto& [m, x] : h.mulTerms(a, c))
            for (const auto& [n, y] : k.mulTerms(b, e)) out.emplace_back(m * dk + n, F.mul(x, y));
        }

  typename H::Vec unit(d, F.zero()), counit(d, F.zero());
  for (std::size_t a = 0; a < dh; ++a)
    for (std::size_t b = 0; b < dk; ++b) {
      unit[a * dk + b] = F.mul(h.unit()[a], k.unit()[b]);
      counit[a * dk + b] = F.mul(h.counit()[a], k.counit()[b]);
    }

  // kappa(a (x) b) = sum (a1 (x) b1) (x) (a2 (x) b2)
  std::vector<typename H::Sparse> comul(d), antipode(d);
  for (std::size_t a = 0; a < dh; ++a)
    for (std::size_t b = 0; b < dk; ++b) {
      auto& out = comul[a * dk + b];
      for (const auto& [pq, x] : h.comulTerms(a)) {
        std::size_t a1 = pq / dh, a2 = pq % dh;
        for (const auto& [rs, y] : k.comulTerms(b)) {
          std::size_t b1 = rs / dk, b2 = rs % dk;
          out.emplace_back((a1 * dk + b1) * d + (a2 * dk + b2), F.mul(x, y));
        }
      }
      for (const auto& [m, x] : h.antipodeTerms(a))
        for (const auto& [n, y] : k.antipodeTerms(b)) antipode[a * dk + b].emplace_back(m * dk + n, F.mul(x, y));
    }
  return H(F, std::move(labels), std::move(mul), std::move(unit), std::move(comul), std::move(counit),
           std::move(antipode));
}

namespace detail {

template <class Field>
using Accum = std::map<std::size_t, typename Field::value_type>;

template <class Field>
void accumulate(const Field& F, Accum<Field>& acc, std::size_t idx, const typename Field::value_type& v) {
  auto it = acc.find(idx);
  if (it == acc.end()) {
    acc.emplace(idx, v);
  } else {
    it->second = F.add(it->second, v);
  }
}

/// Compares two sparse accumulators entrywise, feeding every coordinate that
/// appears in either side to the entry.
template <class Field>
void compare(const Field& F, CheckEntry& entry, const Accum<Field>& lhs, const Accum<Field>& rhs,
             const std::function<std::string()>& where) {
  const auto zero = F.zero();
  bool ok = true;
  double worst = 0.0;
  auto visit = [&](const typename Field::value_type& a, const typename Field::value_type& b) {
    if (!F.eq(a, b)) ok = false;
    worst = std::max(worst, F.residual(a, b));
  };
  for (const auto& [k, v] : lhs) {
    auto it = rhs.find(k);
    visit(v, it == rhs.end() ? zero : it->second);
  }
  for (const auto& [k, v] : rhs)
    if (!lhs.count(k)) visit(zero, v);
  entry.observe(ok, worst, where);
}

template <class Field>
Accum<Field> fromDense(const Field& F, const std::vector<typename Field::value_type>& v) {
  Accum<Field> a;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!F.isZero(v[i])) a.emplace(i, v[i]);
  return a;
}

template <class Field>
Accum<Field> fromSparse(const std::vector<std::pair<std::size_t, typename Field::value_type>>& s) {
  Accum<Field> a;
  for (const auto& [i, v] : s) a.emplace(i, v);
  return a;
}

}  // namespace detail

/// Checks every Hopf algebra axiom on basis elements; failures are entries
/// in the report, never exceptions.
template <class Field>
CheckReport checkHopfAxioms(const HopfAlgebra<Field>& h) {
  using detail::accumulate;
  using detail::compare;
  using Acc = detail::Accum<Field>;
  const auto& F = h.field();
  const std::size_t d = h.dim();
  const auto& lab = h.labels();
  CheckReport report;

  auto& assoc = report.add("associativity");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Acc lhs, rhs;
        for (const auto& [m, c] : h.mulTerms(i, j))
          for (const auto& [n, v] : h.mulTerms(m, k)) accumulate(F, lhs, n, F.mul(c, v));
        for (const auto& [m, c] : h.mulTerms(j, k))
          for (const auto& [n, v] : h.mulTerms(i, m)) accumulate(F, rhs, n, F.mul(c, v));
        compare(F, assoc, lhs, rhs, [&] { return "(" + lab[i] + "*" + lab[j] + ")*" + lab[k]; });
      }

  auto& unitLaw = report.add("unit");
  for (std::size_t i = 0; i < d; ++i) {
    Acc left, right;
    for (std::size_t u = 0; u < d; ++u) {
      if (F.isZero(h.unit()[u])) continue;
      for (const auto& [n, v] : h.mulTerms(u, i)) accumulate(F, left, n, F.mul(h.unit()[u], v));
      for (const auto& [n, v] : h.mulTerms(i, u)) accumulate(F, right, n, F.mul(h.unit()[u], v));
    }
    Acc ei{{i, F.one()}};
    compare(F, unitLaw, left, ei, [&] { return "1*" + lab[i]; });
    compare(F, unitLaw, right, ei, [&] { return lab[i] + "*1"; });
  }

  auto& coassoc = report.add("coassociativity");
  for (std::size_t i = 0; i < d; ++i) {
    Acc lhs, rhs;
    for (const auto& [ab, c] : h.comulTerms(i)) {
      std::size_t a = ab / d, b = ab % d;
      for (const auto& [pq, v] : h.comulTerms(a)) accumulate(F, lhs, pq * d + b, F.mul(c, v));
      for (const auto& [pq, v] : h.comulTerms(b)) accumulate(F, rhs, a * d * d + pq, F.mul(c, v));
    }
    compare(F, coassoc, lhs, rhs, [&] { return "kappa(" + lab[i] + ")"; });
  }

  auto& counitLaw = report.add("counit");
  for (std::size_t i = 0; i < d; ++i) {
    Acc left, right;
    for (const auto& [ab, c] : h.comulTerms(i)) {
      std::size_t a = ab / d, b = ab % d;
      accumulate(F, left, b, F.mul(c, h.counit()[a]));
      accumulate(F, right, a, F.mul(c, h.counit()[b]));
    }
    Acc ei{{i, F.one()}};
    compare(F, counitLaw, left, ei, [&] { return "(eps(x)id)kappa(" + lab[i] + ")"; });
    compare(F, counitLaw, right, ei, [&] { return "(id(x)eps)kappa(" + lab[i] + ")"; });
  }

  auto& comulAlg = report.add("comultiplication_is_algebra_map");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Acc lhs, rhs;
      for (const auto& [m, c] : h.mulTerms(i, j))
        for (const auto& [pq, v] : h.comulTerms(m)) accumulate(F, lhs, pq, F.mul(c, v));
      for (const auto& [ab, x] : h.comulTerms(i))
        for (const auto& [ce, y] : h.comulTerms(j)) {
          auto xy = F.mul(x, y);
          for (const auto& [p, u] : h.mulTerms(ab / d, ce / d))
            for (const auto& [q, w] : h.mulTerms(ab % d, ce % d)) accumulate(F, rhs, p * d + q, F.mul(xy, F.mul(u, w)));
        }
      compare(F, comulAlg, lhs, rhs, [&] { return "kappa(" + lab[i] + "*" + lab[j] + ")"; });
    }
  {
    Acc lhs, rhs;
    for (std::size_t u = 0; u < d; ++u) {
      if (F.isZero(h.unit()[u])) continue;
      for (const auto& [pq, v] : h.comulTerms(u)) accumulate(F, lhs, pq, F.mul(h.unit()[u], v));
      for (std::size_t w = 0; w < d; ++w)
        if (!F.isZero(h.unit()[w])) accumulate(F, rhs, u * d + w, F.mul(h.unit()[u], h.unit()[w]));
    }
    compare(F, comulAlg, lhs, rhs, [] { return std::string("kappa(1)"); });
  }

  auto& counitAlg = report.add("counit_is_algebra_map");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto lhs = F.zero();
      for (const auto& [m, c] : h.mulTerms(i, j)) lhs = F.add(lhs, F.mul(c, h.counit()[m]));
      auto rhs = F.mul(h.counit()[i], h.counit()[j]);
      counitAlg.observe(F.eq(lhs, rhs), F.residual(lhs, rhs), [&] { return "eps(" + lab[i] + "*" + lab[j] + ")"; });
    }
  {
    auto e1 = h.counitOf(h.unit());
    counitAlg.observe(F.eq(e1, F.one()), F.residual(e1, F.one()), [] { return std::string("eps(1)"); });
  }

  auto& anti = report.add("antipode");
  for (std::size_t i = 0; i < d; ++i) {
    Acc left, right, target;
    for (std::size_t u = 0; u < d; ++u)
      if (!F.isZero(h.unit()[u])) target.emplace(u, F.mul(h.counit()[i], h.unit()[u]));
    for (const auto& [ab, c] : h.comulTerms(i)) {
      std::size_t a = ab / d, b = ab % d;
      for (const auto& [sa, x] : h.antipodeTerms(a))
        for (const auto& [n, v] : h.mulTerms(sa, b)) accumulate(F, left, n, F.mul(c, F.mul(x, v)));
      for (const auto& [sb, x] : h.antipodeTerms(b))
        for (const auto& [n, v] : h.mulTerms(a, sb)) accumulate(F, right, n, F.mul(c, F.mul(x, v)));
    }
    compare(F, anti, left, target, [&] { return "mu(sigma(x)id)kappa(" + lab[i] + ")"; });
    compare(F, anti, right, target, [&] { return "mu(id(x)sigma)kappa(" + lab[i] + ")"; });
  }
  return report;
}

/// Compares the structure tensors of a and b under a basis bijection:
/// basis element i of a corresponds to basis element perm[i] of b.
template <class Field>
CheckReport compareStructure(const HopfAlgebra<Field>& a, const HopfAlgebra<Field>& b,
                             const std::vector<std::size_t>& perm) {
  using detail::compare;
  using Acc = detail::Accum<Field>;
  const auto& F = a.field();
  const std::size_t d = a.dim();
  CheckReport report;
  auto& dimEntry = report.add("dimension");
  dimEntry.observe(a.dim() == b.dim() && perm.size() == d, 0.0,
                   [&] { return std::to_string(a.dim()) + " vs " + std::to_string(b.dim()); });
  if (!dimEntry.pass) return report;

  auto mapSparse = [&](const auto& s, bool pairs) {
    Acc out;
    for (const auto& [idx, v] : s) {
      std::size_t m = pairs ? perm[idx / d] * d + perm[idx % d] : perm[idx];
      out.emplace(m, v);
    }
    return out;
  };
  auto mapDense = [&](const auto& v) {
    Acc out;
    for (std::size_t i = 0; i < d; ++i)
      if (!F.isZero(v[i])) out.emplace(perm[i], v[i]);
    return out;
  };

  auto& mul = report.add("multiplication");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      compare(F, mul, mapSparse(a.mulTerms(i, j), false), detail::fromSparse<Field>(b.mulTerms(perm[i], perm[j])),
              [&] { return a.labels()[i] + "*" + a.labels()[j]; });
  auto& unit = report.add("unit");
  compare(F, unit, mapDense(a.unit()), detail::fromDense(F, b.unit()), [] { return std::string("unit"); });
  auto& comul = report.add("comultiplication");
  for (std::size_t i = 0; i < d; ++i)
    compare(F, comul, mapSparse(a.comulTerms(i), true), detail::fromSparse<Field>(b.comulTerms(perm[i])),
            [&] { return "kappa(" + a.labels()[i] + ")"; });
  auto& counit = report.add("counit");
  compare(F, counit, mapDense(a.counit()), detail::fromDense(F, b.counit()), [] { return std::string("counit"); });
  auto& anti = report.add("antipode");
  for (std::size_t i = 0; i < d; ++i)
    compare(F, anti, mapSparse(a.antipodeTerms(i), false), detail::fromSparse<Field>(b.antipodeTerms(perm[i])),
            [&] { return "sigma(" + a.labels()[i] + ")"; });
  return report;
}

template <class Field>
CheckReport compareStructure(const HopfAlgebra<Field>& a, const HopfAlgebra<Field>& b) {
  std::vector<std::size_t> id(a.dim());
  std::iota(id.begin(), id.end(), std::size_t{0});
  return compareStructure(a, b, id);
}

/// Double dual against the original under the canonical identification
/// e_i -> evaluation at e_i, which in dual-basis coordinates is the identity.
template <class Field>
CheckReport checkBiduality(const HopfAlgebra<Field>& h) {
  return compareStructure(h, dualHopf(dualHopf(h)));
}

/// Isomorphism C_{GxH} ~ C_G (x) C_H under delta^(s,t) <-> delta^s (x) delta^t.
template <class Field>
CheckReport productIsoCheck(const Group& g, const Group& h, const Field& field) {
  if (!g.isFinite() || !h.isFinite()) throw std::invalid_argument("productIsoCheck needs finite groups");
  const auto dims = checked::mul(g.order(), h.order());
  if (dims > 10000) throw std::invalid_argument("dimension product " + std::to_string(dims) + " exceeds 10^4");
  Group gh = Group::product(g, h);
  auto lhs = groupAlgebra(gh, field);
  auto rhs = tensorHopf(groupAlgebra(g, field), groupAlgebra(h, field));
  // basis bijection computed from keys, not assumed from enumeration order
  const auto ge = g.enumerate(), he = h.enumerate(), ghe = gh.enumerate();
  const auto gi = detail::indexByKey(g, ge), hi = detail::indexByKey(h, he);
  std::vector<std::size_t> perm(ghe.size());
  for (std::size_t i = 0; i < ghe.size(); ++i) {
    auto [s, t] = gh.split(ghe[i]);
    perm[i] = gi.at(g.key(s)) * he.size() + hi.at(h.key(t));
  }
  return compareStructure(lhs, rhs, perm);
}

}  // namespace duality
