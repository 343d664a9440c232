#pragma once

#include "duality/hopf_map.hpp"

#include <optional>
#include <sstream>

namespace duality {

/// Pontryagin dual of a finite abelian group G = Z_{n_1} x ... x Z_{n_k}.
/// Characters are indexed by residue vectors m with
///   chi_m(x) = prod_i zeta_{n_i}^{m_i x_i},
/// so the character group is itself presented as a finite abelian group with
/// the same orders.
class CharacterGroup {
 public:
  explicit CharacterGroup(Group base) : base_(std::move(base)), chars_(base_) {
    if (base_.kind() != GroupKind::FiniteAbelian && base_.kind() != GroupKind::Trivial) {
      throw std::invalid_argument("dual group needs a finite abelian spec, got " + base_.spec().describe());
    }
  }

  [[nodiscard]] const Group& base() const { return base_; }
  /// The character group presented as a finite abelian group.
  [[nodiscard]] const Group& asGroup() const { return chars_; }
  [[nodiscard]] std::vector<Element> characters() const { return chars_.enumerate(); }
  [[nodiscard]] std::int64_t exponent() const { return base_.exponent(); }
  [[nodiscard]] std::int64_t order() const { return base_.order(); }

  /// chi(x) as a power of zeta_N with N the exponent: returns k in [0, N).
  [[nodiscard]] std::int64_t exponentOf(const Element& chi, const Element& x) const {
    chars_.validate(chi);
    base_.validate(x);
    const std::int64_t n = exponent();
    std::int64_t k = 0;
    for (std::size_t i = 0; i < base_.spec().orders.size(); ++i) {
      const std::int64_t ni = base_.spec().orders[i];
      k = (k + (chi.data[i] * x.data[i]) % ni * (n / ni)) % n;
    }
    return k;
  }

  template <class Field>
  [[nodiscard]] typename Field::value_type evaluate(const Field& F, const Element& chi, const Element& x) const {
    return F.rootOfUnity(exponent(), exponentOf(chi, x));
  }

  [[nodiscard]] Element multiply(const Element& chi, const Element& psi) const { return chars_.mul(chi, psi); }
  [[nodiscard]] Element inverse(const Element& chi) const { return chars_.inv(chi); }

 private:
  Group base_;
  Group chars_;
};

inline CharacterGroup dualGroup(const GroupSpec& spec) { return CharacterGroup(Group::make(spec)); }

/// Exact field adequate for the characters of G: Q(zeta_N), N = exponent.
inline CyclotomicField cyclotomicFor(const Group& g) { return CyclotomicField(static_cast<int>(g.exponent())); }

/// i_G : G -> G** with i_G(x)(chi) = chi(x). Returns, for each element of G in
/// enumeration order, the index of its image among the characters of G*. The
/// image is found by comparing values on every character, not assumed.
template <class Field>
std::vector<std::size_t> bidualityMap(const CharacterGroup& dual, const CharacterGroup& bidual, const Field& F) {
  const auto xs = dual.base().enumerate();
  const auto chis = dual.characters();
  const auto xis = bidual.characters();
  std::vector<std::size_t> image(xs.size());
  std::vector<bool> hit(xis.size(), false);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::optional<std::size_t> found;
    for (std::size_t j = 0; j < xis.size() && !found; ++j) {
      bool all = true;
      for (const auto& chi : chis) {
        if (!F.eq(bidual.evaluate(F, xis[j], chi), dual.evaluate(F, chi, xs[i]))) {
          all = false;
          break;
        }
      }
      if (all) found = j;
    }
    if (!found || hit[*found]) throw std::logic_error("biduality map is not a bijection");
    hit[*found] = true;
    image[i] = *found;
  }
  return image;
}

/// Fourier transform C_G -> C^{G*}, delta^t -> (chi -> chi(t)).
template <class Field>
LinearMap<Field> fourier(const CharacterGroup& dual, const Field& F) {
  auto dom = std::make_shared<const HopfAlgebra<Field>>(groupAlgebra(dual.base(), F));
  auto cod = std::make_shared<const HopfAlgebra<Field>>(functionAlgebra(dual.asGroup(), F));
  const auto xs = dual.base().enumerate();
  const auto chis = dual.characters();
  typename LinearMap<Field>::Matrix m(chis.size(), std::vector<typename Field::value_type>(xs.size()));
  for (std::size_t r = 0; r < chis.size(); ++r)
    for (std::size_t c = 0; c < xs.size(); ++c) m[r][c] = dual.evaluate(F, chis[r], xs[c]);
  return LinearMap<Field>(dom, cod, std::move(m));
}

template <class Field>
LinearMap<Field> fourier(const GroupSpec& spec, const Field& F) {
  return fourier(dualGroup(spec), F);
}

/// M conj(M)^T = |G| I, entry by entry.
template <class Field>
CheckEntry checkFourierUnitarity(const LinearMap<Field>& f) {
  const auto& F = f.field();
  CheckEntry e{"fourier_unitarity"};
  auto prod = linalg::multiply(F, f.matrix, linalg::conjugateTranspose(F, f.matrix));
  auto target = linalg::identity(F, f.matrix.size(), F.fromInt(static_cast<std::int64_t>(f.domain->dim())));
  linalg::compareMatrices(F, e, prod, target);
  return e;
}

/// Fourier matrix as CSV in long form: character,element,value.
template <class Field>
std::string fourierCsv(const CharacterGroup& dual, const LinearMap<Field>& f) {
  const auto& F = f.field();
  const auto xs = dual.base().enumerate();
  const auto chis = dual.characters();
  std::ostringstream os;
  os << "character,element,value\n";
  auto quote = [](const std::string& s) { return "\"" + s + "\""; };
  for (std::size_t r = 0; r < chis.size(); ++r)
    for (std::size_t c = 0; c < xs.size(); ++c)
      os << quote("chi" + dual.asGroup().format(chis[r])) << "," << quote(dual.base().format(xs[c])) << ","
         << quote(F.str(f.matrix[r][c])) << "\n";
  return os.str();
}

struct DualityCycleOptions {
  /// Adds one to a single entry (row, column) of the Fourier matrix of G
  /// before the cycle is closed; used as a negative control.
  std::optional<std::pair<std::size_t, std::size_t>> perturbFourierEntry;
};

template <class Field>
struct DualityCycleResult {
  CheckReport report;
  typename LinearMap<Field>::Matrix fourierMatrix;
};

inline constexpr std::int64_t kMaxCycleOrder = 256;

/// Runs the finite duality cycle for an abelian G:
///   C_G --F_G--> C^{G*} = (C_{G*})^* --(F_{G*}^T)^{-1}--> (C^{G**})^* = C_{G**} --i_G^{-1}--> C_G
/// Each stage is verified (Hopf homomorphism, dual-tensor identification) and
/// closing is asserted as the literal matrix equations
///   F_{G*}^T P = F_G   and   P^T (F_{G*}^T)^{-1} F_G = I,
/// where P is the permutation matrix of i_G. Stage (i), the transpose of F_G
/// as a map C_{G*} -> C^G sending delta^chi to the function chi, is checked too.
template <class Field>
DualityCycleResult<Field> dualityCycle(const GroupSpec& spec, const Field& F, const DualityCycleOptions& opts = {}) {
  CharacterGroup dual = dualGroup(spec);
  if (dual.order() > kMaxCycleOrder) {
    throw std::invalid_argument("duality cycle limited to |G| <= " + std::to_string(kMaxCycleOrder));
  }
  CharacterGroup bidual(dual.asGroup());
  using H = HopfAlgebra<Field>;
  using Matrix = typename LinearMap<Field>::Matrix;
  DualityCycleResult<Field> out;
  auto& report = out.report;
  const auto n = static_cast<std::size_t>(dual.order());

  auto fG = fourier(dual, F);
  if (opts.perturbFourierEntry) {
    auto [r, c] = *opts.perturbFourierEntry;
    fG.matrix.at(r).at(c) = F.add(fG.matrix[r][c], F.one());
  }
  out.fourierMatrix = fG.matrix;
  report.append(checkHopfHom(fG), "F_G.");
  report.entries.push_back(checkFourierUnitarity(fG));

  // (i) transpose of F_G: C_{G*} -> C^G, delta^chi -> theta o chi
  {
    auto dom = std::make_shared<const H>(groupAlgebra(dual.asGroup(), F));
    auto cod = std::make_shared<const H>(functionAlgebra(dual.base(), F));
    LinearMap<Field> t(dom, cod, linalg::transpose<Field>(fG.matrix));
    report.append(checkHopfHom(t), "F_G^T.");
    auto& theta = report.add("F_G^T.delta_chi_to_character");
    const auto xs = dual.base().enumerate();
    const auto chis = dual.characters();
    for (std::size_t j = 0; j < chis.size(); ++j)
      for (std::size_t i = 0; i < xs.size(); ++i) {
        auto want = dual.evaluate(F, chis[j], xs[i]);
        theta.observe(F.eq(t.matrix[i][j], want), F.residual(t.matrix[i][j], want),
                      [&] { return "chi" + dual.asGroup().format(chis[j]) + " at " + dual.base().format(xs[i]); });
      }
  }

  // stage 2: C^{G*} is the dual of C_{G*}
  report.append(compareStructure(dualHopf(groupAlgebra(dual.asGroup(), F)), functionAlgebra(dual.asGroup(), F)),
                "dualize_1.");

  // stage 3: F_{G*} and its transpose C_{G**} -> C^{G*}
  auto fGd = fourier(bidual, F);
  report.append(checkHopfHom(fGd), "F_G*.");
  {
    auto dom = std::make_shared<const H>(groupAlgebra(bidual.asGroup(), F));
    auto cod = std::make_shared<const H>(functionAlgebra(bidual.base(), F));
    LinearMap<Field> t(dom, cod, linalg::transpose<Field>(fGd.matrix));
    report.append(checkHopfHom(t), "F_G*^T.");
  }

  // stage 4: C_{G**} is the dual of C^{G**}
  report.append(compareStructure(dualHopf(functionAlgebra(bidual.asGroup(), F)), groupAlgebra(bidual.asGroup(), F)),
                "dualize_2.");

  // closing through i_G
  const auto iG = bidualityMap(dual, bidual, F);
  {
    auto& hom = report.add("i_G.group_isomorphism");
    const auto xs = dual.base().enumerate();
    const auto xis = bidual.characters();
    const auto idx = detail::indexByKey(bidual.asGroup(), xis);
    const auto xIdx = detail::indexByKey(dual.base(), xs);
    for (std::size_t a = 0; a < xs.size(); ++a)
      for (std::size_t b = 0; b < xs.size(); ++b) {
        const auto ab = xIdx.at(dual.base().key(dual.base().mul(xs[a], xs[b])));
        const auto prod = idx.at(bidual.asGroup().key(bidual.asGroup().mul(xis[iG[a]], xis[iG[b]])));
        hom.observe(iG[ab] == prod, 0.0, [&] { return "i_G(x*y) at " + dual.base().format(xs[a]); });
      }
  }
  Matrix perm = linalg::identity(F, n, F.zero());
  for (std::size_t x = 0; x < n; ++x) perm[iG[x]][x] = F.one();

  const Matrix fGdT = linalg::transpose<Field>(fGd.matrix);
  auto& closes = report.add("cycle.closes");
  linalg::compareMatrices(F, closes, linalg::multiply(F, fGdT, perm), fG.matrix);

  // (F^T)^{-1} = conj(F) / n for the scaled-unitary Fourier matrix
  auto invN = F.inv(F.fromInt(static_cast<std::int64_t>(n)));
  Matrix fGdTinv = linalg::scale(F, linalg::transpose<Field>(linalg::conjugateTranspose(F, fGd.matrix)), invN);
  auto& inverse = report.add("cycle.inverse_formula");
  linalg::compareMatrices(F, inverse, linalg::multiply(F, fGdTinv, fGdT), linalg::identity(F, n, F.one()));
  auto& roundTrip = report.add("cycle.returns_to_C_G");
  Matrix composite = linalg::multiply(F, linalg::transpose<Field>(perm), linalg::multiply(F, fGdTinv, fG.matrix));
  linalg::compareMatrices(F, roundTrip, composite, linalg::identity(F, n, F.one()));
  return out;
}

}  // namespace duality
