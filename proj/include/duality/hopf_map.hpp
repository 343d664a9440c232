#pragma once

#include "duality/hopf.hpp"

#include <memory>

namespace duality {

/// A linear map between two Hopf algebras over the same field, stored as a
/// dense matrix with rows indexed by the codomain basis and columns by the
/// domain basis (column j is the image of e_j).
template <class Field>
struct LinearMap {
  using Scalar = typename Field::value_type;
  using Matrix = std::vector<std::vector<Scalar>>;

  std::shared_ptr<const HopfAlgebra<Field>> domain;
  std::shared_ptr<const HopfAlgebra<Field>> codomain;
  Matrix matrix;

  LinearMap(std::shared_ptr<const HopfAlgebra<Field>> dom, std::shared_ptr<const HopfAlgebra<Field>> cod, Matrix m)
      : domain(std::move(dom)), codomain(std::move(cod)), matrix(std::move(m)) {
    if (matrix.size() != codomain->dim()) throw std::invalid_argument("matrix row count != codomain dimension");
    for (const auto& row : matrix)
      if (row.size() != domain->dim()) throw std::invalid_argument("matrix column count != domain dimension");
  }

  [[nodiscard]] const Field& field() const { return domain->field(); }

  [[nodiscard]] std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
    const auto& F = field();
    std::vector<Scalar> out(codomain->dim(), F.zero());
    for (std::size_t r = 0; r < out.size(); ++r)
      for (std::size_t c = 0; c < v.size(); ++c)
        if (!F.isZero(v[c]) && !F.isZero(matrix[r][c])) out[r] = F.add(out[r], F.mul(matrix[r][c], v[c]));
    return out;
  }

  [[nodiscard]] std::vector<Scalar> column(std::size_t j) const {
    std::vector<Scalar> out;
    out.reserve(matrix.size());
    for (const auto& row : matrix) out.push_back(row[j]);
    return out;
  }
};

namespace linalg {

template <class Field>
using Matrix = std::vector<std::vector<typename Field::value_type>>;

template <class Field>
Matrix<Field> multiply(const Field& F, const Matrix<Field>& a, const Matrix<Field>& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  Matrix<Field> r(n, std::vector<typename Field::value_type>(m, F.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (F.isZero(a[i][t])) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!F.isZero(b[t][j])) r[i][j] = F.add(r[i][j], F.mul(a[i][t], b[t][j]));
    }
  return r;
}

template <class Field>
Matrix<Field> transpose(const Matrix<Field>& a) {
  if (a.empty()) return {};
  Matrix<Field> t(a[0].size(), std::vector<typename Field::value_type>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

template <class Field>
Matrix<Field> conjugateTranspose(const Field& F, const Matrix<Field>& a) {
  auto t = transpose<Field>(a);
  for (auto& row : t)
    for (auto& v : row) v = F.conj(v);
  return t;
}

template <class Field>
Matrix<Field> identity(const Field& F, std::size_t n, typename Field::value_type diag) {
  Matrix<Field> r(n, std::vector<typename Field::value_type>(n, F.zero()));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = diag;
  return r;
}

template <class Field>
Matrix<Field> scale(const Field& F, const Matrix<Field>& a, const typename Field::value_type& c) {
  auto r = a;
  for (auto& row : r)
    for (auto& v : row) v = F.mul(c, v);
  return r;
}

/// Entrywise comparison as a report entry.
template <class Field>
void compareMatrices(const Field& F, CheckEntry& entry, const Matrix<Field>& a, const Matrix<Field>& b) {
  if (a.size() != b.size()) {
    entry.observe(false, 0.0, [] { return std::string("shape mismatch"); });
    return;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) {
      entry.observe(false, 0.0, [] { return std::string("shape mismatch"); });
      return;
    }
    for (std::size_t j = 0; j < a[i].size(); ++j)
      entry.observe(F.eq(a[i][j], b[i][j]), F.residual(a[i][j], b[i][j]),
                    [&] { return "entry(" + std::to_string(i) + "," + std::to_string(j) + ")"; });
  }
}

}  // namespace linalg

/// Verifies that phi is a Hopf algebra homomorphism: multiplicative, unital,
/// comultiplicative, counital, and commuting with the antipodes. Every
/// condition is checked on basis elements (pairs for multiplicativity).
template <class Field>
CheckReport checkHopfHom(const LinearMap<Field>& phi) {
  using detail::compare;
  using detail::fromDense;
  const auto& F = phi.field();
  const auto& dom = *phi.domain;
  const auto& cod = *phi.codomain;
  const std::size_t n = dom.dim(), m = cod.dim();
  const auto& lab = dom.labels();
  CheckReport report;

  std::vector<std::vector<typename Field::value_type>> images(n);
  for (std::size_t j = 0; j < n; ++j) images[j] = phi.column(j);

  auto& mult = report.add("multiplicative");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto lhsDom = dom.zeroVec(n);
      dom.axpy(lhsDom, F.one(), dom.mulTerms(i, j));
      compare(F, mult, fromDense(F, phi.apply(lhsDom)), fromDense(F, cod.multiply(images[i], images[j])),
              [&] { return "phi(" + lab[i] + "*" + lab[j] + ")"; });
    }

  auto& unital = report.add("unital");
  compare(F, unital, fromDense(F, phi.apply(dom.unit())), fromDense(F, cod.unit()),
          [] { return std::string("phi(1)"); });

  auto& comul = report.add("comultiplicative");
  for (std::size_t i = 0; i < n; ++i) {
    detail::Accum<Field> lhs;
    for (const auto& [ab, c] : dom.comulTerms(i)) {
      const auto& x = images[ab / n];
      const auto& y = images[ab % n];
      for (std::size_t p = 0; p < m; ++p) {
        if (F.isZero(x[p])) continue;
        auto cx = F.mul(c, x[p]);
        for (std::size_t q = 0; q < m; ++q)
          if (!F.isZero(y[q])) detail::accumulate(F, lhs, p * m + q, F.mul(cx, y[q]));
      }
    }
    compare(F, comul, lhs, fromDense(F, cod.comultiply(images[i])),
            [&] { return "(phi(x)phi)kappa(" + lab[i] + ")"; });
  }

  auto& counital = report.add("counital");
  for (std::size_t i = 0; i < n; ++i) {
    auto a = cod.counitOf(images[i]);
    const auto& b = dom.counit()[i];
    counital.observe(F.eq(a, b), F.residual(a, b), [&] { return "eps(phi(" + lab[i] + "))"; });
  }

  auto& anti = report.add("antipode");
  for (std::size_t i = 0; i < n; ++i) {
    auto sigmaDom = dom.zeroVec(n);
    dom.axpy(sigmaDom, F.one(), dom.antipodeTerms(i));
    compare(F, anti, fromDense(F, cod.antipodeOf(images[i])), fromDense(F, phi.apply(sigmaDom)),
            [&] { return "sigma(phi(" + lab[i] + "))"; });
  }
  return report;
}

/// The identity map of h.
template <class Field>
LinearMap<Field> identityMap(std::shared_ptr<const HopfAlgebra<Field>> h) {
  const auto& F = h->field();
  return LinearMap<Field>(h, h, linalg::identity(F, h->dim(), F.one()));
}

}  // namespace duality
