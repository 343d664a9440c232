#pragma once

#include "duality/length.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <sstream>

namespace duality {

/// Compositions of n into j parts >= 1, lexicographic.
inline std::vector<std::vector<int>> multiIndexEnum(int j, int n) {
  if (j < 1 || n < 1) throw std::invalid_argument("multiIndexEnum needs j >= 1 and n >= 1");
  std::vector<std::vector<int>> out;
  if (j > n) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int parts, int rest) -> void {
    if (parts == 1) {
      cur.push_back(rest);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int first = 1; first <= rest - (parts - 1); ++first) {
      cur.push_back(first);
      self(self, parts - 1, rest - first);
      cur.pop_back();
    }
  };
  rec(rec, j, n);
  return out;
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t c = 1;
  for (std::int64_t i = 0; i < k; ++i) c = checked::mul(c, n - i) / (i + 1);
  return c;
}

/// 2/e, the ratio of the geometric series behind both summability bounds.
inline double summabilityRatio() { return 2.0 / std::exp(1.0); }

/// 1 + sum_{n>=1} 2^{n-1} e^{-n} = 1 + r / (2 (1 - r)).
inline double sphereSeriesBound() {
  const double r = summabilityRatio();
  return 1.0 + r / (2.0 * (1.0 - r));
}

/// 1 + sum_{n>=1} n 2^{n-1} e^{-n} = 1 + r / (2 (1 - r)^2).
inline double nuclearSeriesBound() {
  const double r = summabilityRatio();
  return 1.0 + r / (2.0 * (1.0 - r) * (1.0 - r));
}

struct SphereRow {
  std::int64_t level = 0;
  std::int64_t count = 0;
  double bound = 0.0;         // 2^{n-1}, and 1 at level 0
  double cumulativeSum = 0.0; // sum of e^{-l} over levels <= n
};

struct SphereBoundResult {
  CheckReport report;
  std::vector<SphereRow> rows;
  std::int64_t levels = 0;  // last complete level checked
};

inline std::string sphereCsv(const std::vector<SphereRow>& rows) {
  std::ostringstream os;
  os.precision(17);
  os << "level,count,bound,cumulative_sum\n";
  for (const auto& r : rows) os << r.level << "," << r.count << "," << r.bound << "," << r.cumulativeSum << "\n";
  return os.str();
}

/// card C_n <= 2^{n-1} for every complete integer level n >= 1 of a report
/// explored with injective positive-integer weights.
inline SphereBoundResult sphereBoundCheck(const LengthReport& rep) {
  if (!rep.weights.isPositiveInteger() || !rep.weights.isInjective()) {
    throw std::invalid_argument("sphere bound needs injective positive-integer weights");
  }
  SphereBoundResult out;
  out.levels = rep.completeIntegerLevels();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(std::max<std::int64_t>(out.levels + 1, 0)), 0);
  for (auto c : rep.costs)
    if (c <= out.levels) ++counts[static_cast<std::size_t>(c)];
  auto& bound = out.report.add("sphere_bound");
  auto& identity = out.report.add("level_zero_is_identity");
  double cumulative = 0.0;
  for (std::int64_t n = 0; n <= out.levels; ++n) {
    const auto count = counts[static_cast<std::size_t>(n)];
    const double b = n == 0 ? 1.0 : std::ldexp(1.0, static_cast<int>(n - 1));
    cumulative += static_cast<double>(count) * std::exp(-static_cast<double>(n));
    out.rows.push_back({n, count, b, cumulative});
    if (n == 0) {
      identity.observe(count == 1, 0.0, [&] { return "card C_0 = " + std::to_string(count); });
    } else {
      bound.observe(static_cast<double>(count) <= b, 0.0, [&] {
        return "card C_" + std::to_string(n) + " = " + std::to_string(count) + " vs " + std::to_string(b);
      });
    }
  }
  return out;
}

struct SummabilityResult {
  double partial = 0.0;
  double bound = 0.0;      // 1 + sum_{n=1..N} 2^{n-1} e^{-n}
  double fullBound = 0.0;  // closed form of the whole series
  std::int64_t levels = 0;
  CheckReport report;
};

/// Partial sum of e^{-l_F} over the complete levels of an untruncated
/// integer-weight report, against the level-wise bound and its closed form.
inline SummabilityResult summabilityPartialSums(const LengthReport& rep) {
  if (rep.truncated) throw std::invalid_argument("summability needs an untruncated report");
  SummabilityResult out;
  out.levels = rep.completeIntegerLevels();
  for (std::size_t i = 0; i < rep.size(); ++i)
    if (rep.costs[i] <= out.levels) out.partial += std::exp(-rep.lengthValue(i));
  out.bound = 1.0;
  for (std::int64_t n = 1; n <= out.levels; ++n)
    out.bound += std::ldexp(1.0, static_cast<int>(n - 1)) * std::exp(-static_cast<double>(n));
  out.fullBound = sphereSeriesBound();
  auto& levelBound = out.report.add("partial_le_level_bound");
  levelBound.observe(leqRel(out.partial, out.bound), std::max(0.0, out.partial - out.bound),
                     [&] { return "partial " + std::to_string(out.partial); });
  auto& full = out.report.add("partial_le_series_bound");
  full.observe(leqRel(out.partial, out.fullBound), std::max(0.0, out.partial - out.fullBound),
               [&] { return "partial " + std::to_string(out.partial); });
  return out;
}

struct NuclearityRow {
  std::int64_t difference = 0;
  std::int64_t count = 0;
  double bound = 0.0;  // n 2^{n-1}, and 1 at n = 0
};

struct NuclearityResult {
  WeightFunction shifted;  // H(a_k) = F(a_k) + k
  std::vector<NuclearityRow> rows;
  double partial = 0.0;  // sum of e^{l_F - l_H} over the final region
  double bound = 0.0;    // 1 + r / (2 (1 - r)^2)
  long long included = 0;
  long long excluded = 0;
  CheckReport report;
};

/// Groups x by d(x) = l_H(x) - l_F(x) with H(a_k) = F(a_k) + k, on the
/// region where both lengths are final, and checks the counts against
/// n 2^{n-1} and the partial sum against the closed-form series.
inline NuclearityResult nuclearityWitness(const Group& g, const GeneratorSet& S, const WeightFunction& F,
                                          const Rational& radius, std::size_t elementCap = kDefaultElementCap) {
  if (!F.isInteger()) throw std::invalid_argument("nuclearity witness needs integer weights");
  NuclearityResult out;
  out.shifted = F;
  out.shifted.enumerated = false;
  for (std::size_t k = 0; k < F.size(); ++k) out.shifted.weights[k] += static_cast<long long>(k + 1);
  const auto lf = exploreBall(g, S, F, radius, elementCap);
  const auto lh = exploreBall(g, S, out.shifted, radius, elementCap);

  std::map<std::int64_t, std::int64_t> counts;
  for (std::size_t i = 0; i < lh.size(); ++i) {
    auto j = lf.find(lh.elements[i]);
    if (!lh.isFinal(i) || !j || !lf.isFinal(*j)) {
      ++out.excluded;
      continue;
    }
    ++out.included;
    const std::int64_t d = checked::sub(lh.costs[i], lf.costs[*j]);
    ++counts[d];
    out.partial += std::exp(-static_cast<double>(d));
  }
  // elements with a final l_F whose l_H lies beyond the explored region
  for (std::size_t j = 0; j < lf.size(); ++j)
    if (!lh.find(lf.elements[j])) ++out.excluded;

  auto& nonneg = out.report.add("difference_nonnegative");
  auto& bound = out.report.add("difference_sphere_bound");
  for (const auto& [d, c] : counts) {
    const double b = d == 0 ? 1.0 : static_cast<double>(d) * std::ldexp(1.0, static_cast<int>(d - 1));
    out.rows.push_back({d, c, b});
    nonneg.observe(d >= 0, 0.0, [&, d = d] { return "d = " + std::to_string(d); });
    bound.observe(d >= 0 && static_cast<double>(c) <= b, 0.0, [&, d = d, c = c] {
      return "card{d = " + std::to_string(d) + "} = " + std::to_string(c) + " vs " + std::to_string(b);
    });
  }
  out.bound = nuclearSeriesBound();
  auto& series = out.report.add("partial_le_series_bound");
  series.observe(leqRel(out.partial, out.bound), std::max(0.0, out.partial - out.bound),
                 [&] { return "partial " + std::to_string(out.partial); });
  return out;
}

struct HeisenbergRow {
  std::int64_t n = 0;
  Element product;
  bool identityHolds = false;
  double lengthBound = 0.0;   // 4 n C: the commutator word has 4n letters
  bool violates = false;      // 2^{n^2} > e^{4 n C}
};

struct HeisenbergResult {
  std::vector<HeisenbergRow> rows;
  std::optional<std::int64_t> firstViolation;
  CheckReport report;
};

inline constexpr std::int64_t kMaxExploredWitness = 3;  // l_F checked by search for 4n <= 12

/// B^{-n} A^n B^n A^{-n} = (0, 0, n^2) for n = 1..nMax; the length bound
/// l_F(phi(n^2)) <= 4 n C with F = C on every generator; and the least n at
/// which 2^{n^2} exceeds e^{4 n C}, i.e. n^2 log 2 > 4 n C. The comparison is
/// made in 50-digit decimal arithmetic.
inline HeisenbergResult heisenbergWitness(std::int64_t nMax, const Rational& C) {
  if (nMax < 1) throw std::invalid_argument("nMax must be >= 1");
  if (C < 1) throw std::invalid_argument("C must be >= 1");
  using Dec = boost::multiprecision::cpp_dec_float_50;
  const Group h = Group::make(GroupSpec::heisenberg());
  const Element A = h.heisenberg(1, 0, 0), B = h.heisenberg(0, 1, 0);
  const auto gens = h.standardGenerators();
  HeisenbergResult out;
  auto& ident = out.report.add("commutator_identity");
  auto& lengthEntry = out.report.add("length_bound_by_search");
  const Dec log2 = boost::multiprecision::log(Dec(2));
  const Dec c = Dec(boost::multiprecision::numerator(C).str()) / Dec(boost::multiprecision::denominator(C).str());

  std::optional<LengthReport> ball;
  for (std::int64_t n = 1; n <= nMax; ++n) {
    HeisenbergRow row;
    row.n = n;
    row.product = h.mul(h.mul(h.pow(B, -n), h.pow(A, n)), h.mul(h.pow(B, n), h.pow(A, -n)));
    const Element want = h.heisenberg(0, 0, checked::mul(n, n));
    row.identityHolds = row.product == want;
    ident.observe(row.identityHolds, 0.0, [&] { return "n = " + std::to_string(n) + ": " + h.format(row.product); });
    row.lengthBound = static_cast<double>(4 * n) * toDouble(C);
    if (n <= kMaxExploredWitness) {
      if (!ball) {
        ball = exploreBall(h, gens, WeightFunction::uniform(gens.size(), C),
                           C * static_cast<long long>(4 * kMaxExploredWitness));
      }
      auto l = ball->length(want);
      lengthEntry.observe(l && *l <= C * static_cast<long long>(4 * n), 0.0, [&] {
        return "n = " + std::to_string(n) + ": l_F = " + (l ? toString(*l) : std::string("unreached"));
      });
    }
    const Dec lhs = Dec(n) * Dec(n) * log2;
    const Dec rhs = Dec(4 * n) * c;
    if (boost::multiprecision::abs(lhs - rhs) < Dec("1e-40")) {
      throw std::domain_error("cannot separate n^2 log 2 from 4nC at n = " + std::to_string(n));
    }
    row.violates = lhs > rhs;
    if (row.violates && !out.firstViolation) out.firstViolation = n;
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace duality
