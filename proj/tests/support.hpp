#pragma once

#include "duality/group.hpp"
#include "oracles.hpp"

#include <random>

namespace testing_support {

using duality::Element;
using duality::Group;
using duality::GroupKind;
using duality::GroupSpec;

/// Seeded random element of any kind; coordinates of infinite kinds are kept
/// small so products stay far from overflow.
inline Element randomElement(const Group& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> small(-6, 6);
  switch (g.kind()) {
    case GroupKind::Trivial: return g.identity();
    case GroupKind::FiniteAbelian:
    case GroupKind::Symmetric: {
      const auto all = g.enumerate();
      std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
      return all[pick(rng)];
    }
    case GroupKind::Heisenberg: return g.heisenberg(small(rng), small(rng), small(rng));
    case GroupKind::Free: return g.element(oracle::randomWord(rng, g.spec().rank, 8));
    case GroupKind::FreeAbelian: {
      std::vector<std::int64_t> v(static_cast<std::size_t>(g.spec().rank));
      for (auto& x : v) x = small(rng);
      return g.element(v);
    }
    case GroupKind::Product: return g.pair(randomElement(g.left(), rng), randomElement(g.right(), rng));
  }
  return g.identity();
}

/// The Cayley table of a finite group in enumeration order.
inline oracle::Cayley cayleyOf(const Group& g) {
  const auto xs = g.enumerate();
  auto indexOf = [&](const Element& y) {
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (xs[i] == y) return i;
    throw std::logic_error("product left the group");
  };
  oracle::Cayley c;
  c.table.assign(xs.size(), std::vector<std::size_t>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < xs.size(); ++j) c.table[i][j] = indexOf(g.mul(xs[i], xs[j]));
    c.inv.push_back(indexOf(g.inv(xs[i])));
  }
  c.e = indexOf(g.identity());
  return c;
}

inline std::vector<GroupSpec> finiteTestGroups() {
  return {GroupSpec::finiteAbelian({2}), GroupSpec::finiteAbelian({4}), GroupSpec::finiteAbelian({2, 2}),
          GroupSpec::finiteAbelian({6}), GroupSpec::symmetric(3)};
}

inline std::vector<GroupSpec> abelianTestGroups() {
  return {GroupSpec::finiteAbelian({2}), GroupSpec::finiteAbelian({4}), GroupSpec::finiteAbelian({2, 2}),
          GroupSpec::finiteAbelian({6})};
}

}  // namespace testing_support
