#pragma once

#include "duality/checked.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace duality {

enum class GroupKind : std::uint8_t {
  Trivial = 0,
  FiniteAbelian = 1,
  Symmetric = 2,
  Heisenberg = 3,
  Free = 4,
  FreeAbelian = 5,
  Product = 6,
};

inline std::string kindName(GroupKind k) {
  switch (k) {
    case GroupKind::Trivial: return "trivial";
    case GroupKind::FiniteAbelian: return "finite_abelian";
    case GroupKind::Symmetric: return "symmetric";
    case GroupKind::Heisenberg: return "heisenberg";
    case GroupKind::Free: return "free";
    case GroupKind::FreeAbelian: return "free_abelian";
    case GroupKind::Product: return "product";
  }
  return "unknown";
}

/// Largest symmetric group we are willing to enumerate (6! = 720 elements).
inline constexpr int kMaxSymmetricDegree = 6;

struct GroupSpec {
  GroupKind kind = GroupKind::Trivial;
  std::vector<std::int64_t> orders;  // finite_abelian
  int degree = 0;                    // symmetric
  int rank = 0;                      // free, free_abelian
  std::vector<GroupSpec> factors;    // product: exactly two
  std::string label;

  static GroupSpec trivial() { return {}; }
  static GroupSpec finiteAbelian(std::vector<std::int64_t> orders) {
    GroupSpec s;
    s.kind = GroupKind::FiniteAbelian;
    s.orders = std::move(orders);
    return s;
  }
  static GroupSpec symmetric(int n) {
    GroupSpec s;
    s.kind = GroupKind::Symmetric;
    s.degree = n;
    return s;
  }
  static GroupSpec heisenberg() {
    GroupSpec s;
    s.kind = GroupKind::Heisenberg;
    return s;
  }
  static GroupSpec free(int rank) {
    GroupSpec s;
    s.kind = GroupKind::Free;
    s.rank = rank;
    return s;
  }
  static GroupSpec freeAbelian(int rank) {
    GroupSpec s;
    s.kind = GroupKind::FreeAbelian;
    s.rank = rank;
    return s;
  }
  static GroupSpec product(GroupSpec a, GroupSpec b) {
    GroupSpec s;
    s.kind = GroupKind::Product;
    s.factors = {std::move(a), std::move(b)};
    return s;
  }

  [[nodiscard]] std::string describe() const {
    std::ostringstream os;
    os << kindName(kind);
    switch (kind) {
      case GroupKind::FiniteAbelian:
        os << "(";
        for (std::size_t i = 0; i < orders.size(); ++i) os << (i ? "," : "") << orders[i];
        os << ")";
        break;
      case GroupKind::Symmetric: os << "(" << degree << ")"; break;
      case GroupKind::Free:
      case GroupKind::FreeAbelian: os << "(" << rank << ")"; break;
      case GroupKind::Product:
        os << "(" << factors.at(0).describe() << " x " << factors.at(1).describe() << ")";
        break;
      default: break;
    }
    return os.str();
  }
};

/// A group element in normal form. The payload layout depends on the kind:
/// residues, permutation images, Heisenberg triple (a,b,c) with c the corner
/// entry, reduced signed letters (+(i+1) for x_i, -(i+1) for its inverse),
/// integer vector, or [leftSize, left..., right...] for products.
struct Element {
  GroupKind kind = GroupKind::Trivial;
  std::vector<std::int64_t> data;

  auto operator<=>(const Element&) const = default;
  bool operator==(const Element&) const = default;
};

class Group;

struct GeneratorSet {
  std::vector<Element> elements;
  bool closedUnderInverse = false;

  [[nodiscard]] std::size_t size() const { return elements.size(); }
};

/// Immutable group value: identity, product, inverse, canonical keys, and
/// enumeration for the finite kinds.
class Group {
 public:
  static Group make(const GroupSpec& spec) { return Group(spec); }

  static Group product(const Group& a, const Group& b) {
    return Group(GroupSpec::product(a.spec(), b.spec()));
  }

  [[nodiscard]] const GroupSpec& spec() const { return spec_; }
  [[nodiscard]] GroupKind kind() const { return spec_.kind; }

  [[nodiscard]] bool isFinite() const {
    switch (kind()) {
      case GroupKind::Trivial:
      case GroupKind::FiniteAbelian:
      case GroupKind::Symmetric: return true;
      case GroupKind::Product: return left_->isFinite() && right_->isFinite();
      default: return false;
    }
  }

  [[nodiscard]] bool isAbelian() const {
    switch (kind()) {
      case GroupKind::Trivial:
      case GroupKind::FiniteAbelian:
      case GroupKind::FreeAbelian: return true;
      case GroupKind::Symmetric: return spec_.degree <= 2;
      case GroupKind::Free: return spec_.rank <= 1;
      case GroupKind::Heisenberg: return false;
      case GroupKind::Product: return left_->isAbelian() && right_->isAbelian();
    }
    return false;
  }

  [[nodiscard]] std::int64_t order() const {
    if (!isFinite()) throw std::domain_error("group " + spec_.describe() + " is infinite");
    switch (kind()) {
      case GroupKind::Trivial: return 1;
      case GroupKind::FiniteAbelian: {
        std::int64_t n = 1;
        for (auto o : spec_.orders) n = checked::mul(n, o);
        return n;
      }
      case GroupKind::Symmetric: {
        std::int64_t n = 1;
        for (int i = 2; i <= spec_.degree; ++i) n *= i;
        return n;
      }
      case GroupKind::Product: return checked::mul(left_->order(), right_->order());
      default: break;
    }
    throw std::logic_error("unreachable");
  }

  /// Least common multiple of element orders; only for finite groups.
  [[nodiscard]] std::int64_t exponent() const {
    if (!isFinite()) throw std::domain_error("group " + spec_.describe() + " is infinite");
    switch (kind()) {
      case GroupKind::Trivial: return 1;
      case GroupKind::FiniteAbelian: {
        std::int64_t e = 1;
        for (auto o : spec_.orders) e = std::lcm(e, o);
        return e;
      }
      case GroupKind::Symmetric: {
        std::int64_t e = 1;
        for (int i = 2; i <= spec_.degree; ++i) e = std::lcm(e, std::int64_t{i});
        return e;
      }
      case GroupKind::Product: return std::lcm(left_->exponent(), right_->exponent());
      default: break;
    }
    throw std::logic_error("unreachable");
  }

  [[nodiscard]] Element identity() const {
    switch (kind()) {
      case GroupKind::Trivial: return {kind(), {}};
      case GroupKind::FiniteAbelian:
        return {kind(), std::vector<std::int64_t>(spec_.orders.size(), 0)};
      case GroupKind::Symmetric: {
        std::vector<std::int64_t> p(static_cast<std::size_t>(spec_.degree));
        std::iota(p.begin(), p.end(), 0);
        return {kind(), std::move(p)};
      }
      case GroupKind::Heisenberg: return {kind(), {0, 0, 0}};
      case GroupKind::Free: return {kind(), {}};
      case GroupKind::FreeAbelian:
        return {kind(), std::vector<std::int64_t>(static_cast<std::size_t>(spec_.rank), 0)};
      case GroupKind::Product: return pair(left_->identity(), right_->identity());
    }
    throw std::logic_error("unreachable");
  }

  /// Builds an element from a raw payload, normalizing free words and
  /// validating every invariant of the kind.
  [[nodiscard]] Element element(std::vector<std::int64_t> payload) const {
    Element e{kind(), std::move(payload)};
    if (kind() == GroupKind::Free) e.data = reduceWord(e.data);
    if (kind() == GroupKind::FiniteAbelian) {
      for (std::size_t i = 0; i < e.data.size() && i < spec_.orders.size(); ++i) {
        e.data[i] %= spec_.orders[i];
        if (e.data[i] < 0) e.data[i] += spec_.orders[i];
      }
    }
    validate(e);
    return e;
  }

  [[nodiscard]] Element heisenberg(std::int64_t a, std::int64_t b, std::int64_t c) const {
    return element({a, b, c});
  }

  void validate(const Element& x) const {
    if (x.kind != kind()) {
      throw std::invalid_argument("element of kind " + kindName(x.kind) + " used with group " +
                                  spec_.describe());
    }
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("invalid " + spec_.describe() + " element: " + why);
    };
    switch (kind()) {
      case GroupKind::Trivial:
        if (!x.data.empty()) fail("trivial element carries data");
        break;
      case GroupKind::FiniteAbelian:
        if (x.data.size() != spec_.orders.size()) fail("wrong arity");
        for (std::size_t i = 0; i < x.data.size(); ++i)
          if (x.data[i] < 0 || x.data[i] >= spec_.orders[i]) fail("residue out of range");
        break;
      case GroupKind::Symmetric: {
        if (x.data.size() != static_cast<std::size_t>(spec_.degree)) fail("wrong degree");
        std::vector<bool> seen(x.data.size(), false);
        for (auto v : x.data) {
          if (v < 0 || v >= spec_.degree || seen[static_cast<std::size_t>(v)]) fail("not a permutation");
          seen[static_cast<std::size_t>(v)] = true;
        }
        break;
      }
      case GroupKind::Heisenberg:
        if (x.data.size() != 3) fail("expected a triple");
        break;
      case GroupKind::Free:
        for (std::size_t i = 0; i < x.data.size(); ++i) {
          auto l = x.data[i];
          if (l == 0 || l > spec_.rank || -l > spec_.rank) fail("letter out of range");
          if (i > 0 && x.data[i - 1] == -l) fail("word not reduced");
        }
        break;
      case GroupKind::FreeAbelian:
        if (x.data.size() != static_cast<std::size_t>(spec_.rank)) fail("wrong rank");
        break;
      case GroupKind::Product: {
        auto [l, r] = split(x);
        left_->validate(l);
        right_->validate(r);
        break;
      }
    }
  }

  [[nodiscard]] Element mul(const Element& x, const Element& y) const {
    requireKind(x);
    requireKind(y);
    switch (kind()) {
      case GroupKind::Trivial: return x;
      case GroupKind::FiniteAbelian: {
        Element r{kind(), x.data};
        for (std::size_t i = 0; i < r.data.size(); ++i) {
          r.data[i] += y.data[i];
          if (r.data[i] >= spec_.orders[i]) r.data[i] -= spec_.orders[i];
        }
        return r;
      }
      case GroupKind::Symmetric: {
        // (x*y)(i) = x(y(i)): apply y first.
        Element r{kind(), y.data};
        for (auto& v : r.data) v = x.data[static_cast<std::size_t>(v)];
        return r;
      }
      case GroupKind::Heisenberg: {
        const auto& p = x.data;
        const auto& q = y.data;
        return {kind(),
                {checked::add(p[0], q[0]), checked::add(p[1], q[1]),
                 checked::add(checked::add(p[2], q[2]), checked::mul(p[0], q[1]))}};
      }
      case GroupKind::Free: {
        std::vector<std::int64_t> w = x.data;
        std::size_t j = 0;
        while (!w.empty() && j < y.data.size() && w.back() == -y.data[j]) {
          w.pop_back();
          ++j;
        }
        w.insert(w.end(), y.data.begin() + static_cast<std::ptrdiff_t>(j), y.data.end());
        return {kind(), std::move(w)};
      }
      case GroupKind::FreeAbelian: {
        Element r{kind(), x.data};
        for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] = checked::add(r.data[i], y.data[i]);
        return r;
      }
      case GroupKind::Product: {
        auto [xl, xr] = split(x);
        auto [yl, yr] = split(y);
        return pair(left_->mul(xl, yl), right_->mul(xr, yr));
      }
    }
    throw std::logic_error("unreachable");
  }

  [[nodiscard]] Element inv(const Element& x) const {
    requireKind(x);
    switch (kind()) {
      case GroupKind::Trivial: return x;
      case GroupKind::FiniteAbelian: {
        Element r{kind(), x.data};
        for (std::size_t i = 0; i < r.data.size(); ++i)
          r.data[i] = r.data[i] == 0 ? 0 : spec_.orders[i] - r.data[i];
        return r;
      }
      case GroupKind::Symmetric: {
        Element r{kind(), x.data};
        for (std::size_t i = 0; i < x.data.size(); ++i)
          r.data[static_cast<std::size_t>(x.data[i])] = static_cast<std::int64_t>(i);
        return r;
      }
      case GroupKind::Heisenberg: {
        const auto& p = x.data;
        // (a,b,c)^-1 = (-a, -b, ab - c)
        return {kind(),
                {checked::neg(p[0]), checked::neg(p[1]), checked::sub(checked::mul(p[0], p[1]), p[2])}};
      }
      case GroupKind::Free: {
        Element r{kind(), {x.data.rbegin(), x.data.rend()}};
        for (auto& l : r.data) l = -l;
        return r;
      }
      case GroupKind::FreeAbelian: {
        Element r{kind(), x.data};
        for (auto& v : r.data) v = checked::neg(v);
        return r;
      }
      case GroupKind::Product: {
        auto [l, r] = split(x);
        return pair(left_->inv(l), right_->inv(r));
      }
    }
    throw std::logic_error("unreachable");
  }

  [[nodiscard]] Element pow(const Element& x, std::int64_t n) const {
    Element base = n < 0 ? inv(x) : x;
    std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    Element acc = identity();
    while (e > 0) {
      if (e & 1U) acc = mul(acc, base);
      e >>= 1U;
      if (e > 0) base = mul(base, base);
    }
    return acc;
  }

  /// All elements exactly once, in canonical order. Throws for infinite kinds.
  [[nodiscard]] std::vector<Element> enumerate() const {
    if (!isFinite()) throw std::domain_error("cannot enumerate infinite group " + spec_.describe());
    std::vector<Element> out;
    switch (kind()) {
      case GroupKind::Trivial: out.push_back(identity()); break;
      case GroupKind::FiniteAbelian: {
        std::vector<std::int64_t> r(spec_.orders.size(), 0);
        // odometer with the last coordinate fastest
        while (true) {
          out.push_back({kind(), r});
          bool wrapped = true;
          for (std::size_t i = r.size(); i-- > 0;) {
            if (++r[i] < spec_.orders[i]) {
              wrapped = false;
              break;
            }
            r[i] = 0;
          }
          if (wrapped) return out;
        }
      }
      case GroupKind::Symmetric: {
        Element p = identity();
        do {
          out.push_back(p);
        } while (std::next_permutation(p.data.begin(), p.data.end()));
        break;
      }
      case GroupKind::Product:
        for (const auto& l : left_->enumerate())
          for (const auto& r : right_->enumerate()) out.push_back(pair(l, r));
        break;
      default: break;
    }
    return out;
  }

  /// Kind-tagged byte encoding of the normal form. Injective on elements.
  [[nodiscard]] std::string key(const Element& x) const {
    std::string k;
    k.reserve(1 + 8 * x.data.size());
    k.push_back(static_cast<char>(x.kind));
    for (auto v : x.data) {
      // big-endian with flipped sign bit so bytes sort like the integers
      auto u = static_cast<std::uint64_t>(v) ^ (std::uint64_t{1} << 63U);
      for (int s = 56; s >= 0; s -= 8) k.push_back(static_cast<char>((u >> static_cast<unsigned>(s)) & 0xFFU));
    }
    return k;
  }

  [[nodiscard]] std::string format(const Element& x) const {
    std::ostringstream os;
    switch (x.kind) {
      case GroupKind::Trivial: os << "e"; break;
      case GroupKind::Free:
        if (x.data.empty()) os << "e";
        for (std::size_t i = 0; i < x.data.size(); ++i) {
          auto l = x.data[i];
          os << (i ? " " : "") << "x" << (l > 0 ? l : -l) << (l < 0 ? "^-1" : "");
        }
        break;
      case GroupKind::Symmetric:
        os << "[";
        for (std::size_t i = 0; i < x.data.size(); ++i) os << (i ? " " : "") << x.data[i];
        os << "]";
        break;
      case GroupKind::Product: {
        auto [l, r] = split(x);
        os << "<" << left_->format(l) << " | " << right_->format(r) << ">";
        break;
      }
      default:
        os << "(";
        for (std::size_t i = 0; i < x.data.size(); ++i) os << (i ? "," : "") << x.data[i];
        os << ")";
        break;
    }
    return os.str();
  }

  // Product structure.
  [[nodiscard]] const Group& left() const { return *requireProduct().left_; }
  [[nodiscard]] const Group& right() const { return *requireProduct().right_; }

  [[nodiscard]] Element pair(const Element& l, const Element& r) const {
    requireProduct();
    Element e{GroupKind::Product, {}};
    e.data.reserve(1 + l.data.size() + r.data.size() + 2);
    e.data.push_back(static_cast<std::int64_t>(l.data.size()));
    e.data.push_back(static_cast<std::int64_t>(l.kind));
    e.data.insert(e.data.end(), l.data.begin(), l.data.end());
    e.data.push_back(static_cast<std::int64_t>(r.kind));
    e.data.insert(e.data.end(), r.data.begin(), r.data.end());
    return e;
  }

  [[nodiscard]] std::pair<Element, Element> split(const Element& x) const {
    requireProduct();
    if (x.kind != GroupKind::Product || x.data.size() < 3) {
      throw std::invalid_argument("not a product element");
    }
    auto n = static_cast<std::size_t>(x.data[0]);
    if (x.data.size() < 3 + n) throw std::invalid_argument("malformed product element");
    Element l{static_cast<GroupKind>(x.data[1]), {x.data.begin() + 2, x.data.begin() + 2 + static_cast<std::ptrdiff_t>(n)}};
    Element r{static_cast<GroupKind>(x.data[2 + n]), {x.data.begin() + 3 + static_cast<std::ptrdiff_t>(n), x.data.end()}};
    return {std::move(l), std::move(r)};
  }

  /// The generating set used throughout: unit vectors, transposition and
  /// long cycle, A/B for Heisenberg, free letters; each followed by its
  /// inverse when distinct.
  [[nodiscard]] GeneratorSet standardGenerators() const {
    std::vector<Element> gens;
    auto addWithInverse = [&](const Element& g) {
      gens.push_back(g);
      gens.push_back(inv(g));
    };
    switch (kind()) {
      case GroupKind::Trivial: break;
      case GroupKind::FiniteAbelian:
        for (std::size_t i = 0; i < spec_.orders.size(); ++i) {
          Element g = identity();
          g.data[i] = 1;
          addWithInverse(g);
        }
        break;
      case GroupKind::Symmetric:
        if (spec_.degree >= 2) {
          Element t = identity();
          std::swap(t.data[0], t.data[1]);
          addWithInverse(t);
          Element c = identity();
          for (std::size_t i = 0; i < c.data.size(); ++i)
            c.data[i] = static_cast<std::int64_t>((i + 1) % c.data.size());
          addWithInverse(c);
        }
        break;
      case GroupKind::Heisenberg:
        addWithInverse(heisenberg(1, 0, 0));
        addWithInverse(heisenberg(0, 1, 0));
        break;
      case GroupKind::Free:
        for (int i = 1; i <= spec_.rank; ++i) addWithInverse({kind(), {i}});
        break;
      case GroupKind::FreeAbelian:
        for (std::size_t i = 0; i < static_cast<std::size_t>(spec_.rank); ++i) {
          Element g = identity();
          g.data[i] = 1;
          addWithInverse(g);
        }
        break;
      case GroupKind::Product:
        for (const auto& g : left_->standardGenerators().elements) gens.push_back(pair(g, right_->identity()));
        for (const auto& g : right_->standardGenerators().elements) gens.push_back(pair(left_->identity(), g));
        break;
    }
    return makeGenerators(dedupe(gens));
  }

  /// Validates a candidate generating set: no duplicate keys, and for
  /// finite groups the semigroup closure must be the whole group.
  [[nodiscard]] GeneratorSet makeGenerators(std::vector<Element> elements) const {
    std::unordered_set<std::string> keys;
    for (const auto& g : elements) {
      validate(g);
      if (!keys.insert(key(g)).second) {
        throw std::invalid_argument("duplicate generator " + format(g));
      }
    }
    GeneratorSet s;
    s.closedUnderInverse = std::all_of(elements.begin(), elements.end(),
                                       [&](const Element& g) { return keys.count(key(inv(g))) > 0; });
    s.elements = std::move(elements);
    if (isFinite()) {
      auto n = static_cast<std::size_t>(order());
      // right-multiplication closure from the identity; in a finite group the
      // generated semigroup is the generated subgroup
      std::unordered_set<std::string> seen{key(identity())};
      std::deque<Element> todo{identity()};
      while (!todo.empty()) {
        Element x = std::move(todo.front());
        todo.pop_front();
        for (const auto& g : s.elements) {
          Element y = mul(x, g);
          if (seen.insert(key(y)).second) todo.push_back(std::move(y));
        }
      }
      if (seen.size() != n) {
        throw std::invalid_argument("generators do not generate " + spec_.describe());
      }
    }
    return s;
  }

 private:
  explicit Group(GroupSpec spec) : spec_(std::move(spec)) {
    switch (spec_.kind) {
      case GroupKind::FiniteAbelian:
        if (spec_.orders.empty()) throw std::invalid_argument("finite_abelian needs at least one order");
        for (auto o : spec_.orders)
          if (o < 2) throw std::invalid_argument("finite_abelian orders must be >= 2, got " + std::to_string(o));
        (void)order();  // overflow check
        break;
      case GroupKind::Symmetric:
        if (spec_.degree < 1) throw std::invalid_argument("symmetric degree must be >= 1");
        if (spec_.degree > kMaxSymmetricDegree)
          throw std::invalid_argument("symmetric degree " + std::to_string(spec_.degree) +
                                      " exceeds enumeration cap " + std::to_string(kMaxSymmetricDegree));
        break;
      case GroupKind::Free:
      case GroupKind::FreeAbelian:
        if (spec_.rank < 1) throw std::invalid_argument("rank must be >= 1");
        break;
      case GroupKind::Product:
        if (spec_.factors.size() != 2) throw std::invalid_argument("product needs exactly two factors");
        left_ = std::make_shared<const Group>(Group(spec_.factors[0]));
        right_ = std::make_shared<const Group>(Group(spec_.factors[1]));
        break;
      default: break;
    }
  }

  void requireKind(const Element& x) const {
    if (x.kind != kind()) {
      throw std::invalid_argument("element of kind " + kindName(x.kind) + " used with group " +
                                  spec_.describe());
    }
  }

  const Group& requireProduct() const {
    if (kind() != GroupKind::Product) throw std::invalid_argument(spec_.describe() + " is not a product group");
    return *this;
  }

  std::vector<Element> dedupe(const std::vector<Element>& in) const {
    std::vector<Element> out;
    std::unordered_set<std::string> keys;
    for (const auto& g : in)
      if (keys.insert(key(g)).second) out.push_back(g);
    return out;
  }

  static std::vector<std::int64_t> reduceWord(const std::vector<std::int64_t>& w) {
    std::vector<std::int64_t> out;
    for (auto l : w) {
      if (!out.empty() && out.back() == -l) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return out;
  }

  GroupSpec spec_;
  std::shared_ptr<const Group> left_;
  std::shared_ptr<const Group> right_;
};

}  // namespace duality
