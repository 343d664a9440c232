#pragma once

#include "duality/length.hpp"

#include <memory>

namespace duality {

/// A semicharacter f : G -> [1, inf) with f(xy) <= f(x) f(y), built from a
/// small grammar whose every node preserves submultiplicativity:
/// constants C >= 1, exp(l_F), sums, products, maxima, scaling by C >= 1,
/// f(t^-1), the diagonal t -> f(t, t) of a semicharacter on G x G, and the
/// box product (s, t) -> f(s) g(t) on G x H. A raw table leaf is provided
/// for user data; it carries no guarantee and is checked by sampling.
class Semicharacter {
 public:
  enum class Kind { Const, ExpLength, Table, Sum, Product, Max, Scale, Inverse, Diagonal, Box };

  [[nodiscard]] Kind kind() const { return node_->kind; }
  [[nodiscard]] const Group& domain() const { return node_->domain; }

  /// Throws std::out_of_range when the element lies outside the explored
  /// region of some length leaf or outside a raw table.
  [[nodiscard]] double operator()(const Element& x) const { return eval(*node_, x); }
  [[nodiscard]] double evaluate(const Element& x) const { return eval(*node_, x); }

  /// False when the value at x needs data that is not available.
  [[nodiscard]] bool evaluableAt(const Element& x) const {
    try {
      (void)eval(*node_, x);
      return true;
    } catch (const std::out_of_range&) {
      return false;
    }
  }

  [[nodiscard]] std::string describe() const { return describe(*node_); }

  static Semicharacter constant(const Group& g, double c) {
    requireAtLeastOne(c, "const");
    auto n = std::make_shared<Node>(Kind::Const, g);
    n->c = c;
    return Semicharacter(std::move(n));
  }

  /// e^{l_F} with l_F read from an exploration report.
  static Semicharacter expLength(std::shared_ptr<const LengthReport> report) {
    if (!report) throw std::invalid_argument("expLength needs a length report");
    auto n = std::make_shared<Node>(Kind::ExpLength, report->group);
    n->report = std::move(report);
    return Semicharacter(std::move(n));
  }

  static Semicharacter table(const Group& g, std::unordered_map<std::string, double> values) {
    for (const auto& [k, v] : values)
      if (!(v >= 1.0)) throw std::invalid_argument("table values must be >= 1");
    auto n = std::make_shared<Node>(Kind::Table, g);
    n->values = std::move(values);
    return Semicharacter(std::move(n));
  }

  static Semicharacter sum(const Semicharacter& f, const Semicharacter& g) { return binary(Kind::Sum, f, g); }
  static Semicharacter product(const Semicharacter& f, const Semicharacter& g) { return binary(Kind::Product, f, g); }
  static Semicharacter max(const Semicharacter& f, const Semicharacter& g) { return binary(Kind::Max, f, g); }

  static Semicharacter scale(double c, const Semicharacter& f) {
    requireAtLeastOne(c, "scale");
    auto n = std::make_shared<Node>(Kind::Scale, f.domain());
    n->c = c;
    n->children = {f.node_};
    return Semicharacter(std::move(n));
  }

  /// f^sigma(t) = f(t^-1).
  static Semicharacter inverse(const Semicharacter& f) {
    auto n = std::make_shared<Node>(Kind::Inverse, f.domain());
    n->children = {f.node_};
    return Semicharacter(std::move(n));
  }

  /// f^Delta(t) = f(t, t) for f on G x G; the result lives on G.
  static Semicharacter diagonal(const Semicharacter& f) {
    const Group& gg = f.domain();
    if (gg.kind() != GroupKind::Product || gg.left().spec().describe() != gg.right().spec().describe()) {
      throw std::invalid_argument("diagonal needs a semicharacter on G x G, got " + gg.spec().describe());
    }
    auto n = std::make_shared<Node>(Kind::Diagonal, gg.left());
    n->children = {f.node_};
    return Semicharacter(std::move(n));
  }

  /// (f box g)(s, t) = f(s) g(t) on G x H.
  static Semicharacter box(const Semicharacter& f, const Semicharacter& g) {
    auto n = std::make_shared<Node>(Kind::Box, Group::product(f.domain(), g.domain()));
    n->children = {f.node_, g.node_};
    return Semicharacter(std::move(n));
  }

  /// As box, but on a given product group whose factors match f and g.
  static Semicharacter box(const Group& product, const Semicharacter& f, const Semicharacter& g) {
    if (product.kind() != GroupKind::Product ||
        product.left().spec().describe() != f.domain().spec().describe() ||
        product.right().spec().describe() != g.domain().spec().describe()) {
      throw std::invalid_argument("box factors do not match " + product.spec().describe());
    }
    auto n = std::make_shared<Node>(Kind::Box, product);
    n->children = {f.node_, g.node_};
    return Semicharacter(std::move(n));
  }

 private:
  struct Node {
    Node(Kind k, Group g) : kind(k), domain(std::move(g)) {}
    Kind kind;
    Group domain;
    double c = 1.0;
    std::shared_ptr<const LengthReport> report;
    std::unordered_map<std::string, double> values;
    std::vector<std::shared_ptr<const Node>> children;
  };

  explicit Semicharacter(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static void requireAtLeastOne(double c, const char* what) {
    if (!(c >= 1.0)) throw std::invalid_argument(std::string(what) + " needs C >= 1, got " + std::to_string(c));
  }

  static Semicharacter binary(Kind k, const Semicharacter& f, const Semicharacter& g) {
    if (f.domain().spec().describe() != g.domain().spec().describe()) {
      throw std::invalid_argument("semicharacters live on different groups: " + f.domain().spec().describe() +
                                  " vs " + g.domain().spec().describe());
    }
    auto n = std::make_shared<Node>(k, f.domain());
    n->children = {f.node_, g.node_};
    return Semicharacter(std::move(n));
  }

  static double eval(const Node& n, const Element& x) {
    switch (n.kind) {
      case Kind::Const: return n.c;
      case Kind::ExpLength: {
        auto i = n.report->find(x);
        if (!i) throw std::out_of_range("element " + n.domain.format(x) + " outside the explored ball");
        return std::exp(n.report->lengthValue(*i));
      }
      case Kind::Table: {
        auto it = n.values.find(n.domain.key(x));
        if (it == n.values.end()) throw std::out_of_range("element " + n.domain.format(x) + " not in table");
        return it->second;
      }
      case Kind::Sum: return eval(*n.children[0], x) + eval(*n.children[1], x);
      case Kind::Product: return eval(*n.children[0], x) * eval(*n.children[1], x);
      case Kind::Max: return std::max(eval(*n.children[0], x), eval(*n.children[1], x));
      case Kind::Scale: return n.c * eval(*n.children[0], x);
      case Kind::Inverse: return eval(*n.children[0], n.domain.inv(x));
      case Kind::Diagonal: return eval(*n.children[0], n.children[0]->domain.pair(x, x));
      case Kind::Box: {
        auto [s, t] = n.domain.split(x);
        return eval(*n.children[0], s) * eval(*n.children[1], t);
      }
    }
    throw std::logic_error("unknown semicharacter node");
  }

  static std::string describe(const Node& n) {
    auto child = [&](std::size_t i) { return describe(*n.children[i]); };
    switch (n.kind) {
      case Kind::Const: return "const(" + std::to_string(n.c) + ")";
      case Kind::ExpLength: return "expLength";
      case Kind::Table: return "table";
      case Kind::Sum: return "sum(" + child(0) + ", " + child(1) + ")";
      case Kind::Product: return "product(" + child(0) + ", " + child(1) + ")";
      case Kind::Max: return "max(" + child(0) + ", " + child(1) + ")";
      case Kind::Scale: return "scale(" + std::to_string(n.c) + ", " + child(0) + ")";
      case Kind::Inverse: return "inverse(" + child(0) + ")";
      case Kind::Diagonal: return "diagonal(" + child(0) + ")";
      case Kind::Box: return "box(" + child(0) + ", " + child(1) + ")";
    }
    return "?";
  }

  std::shared_ptr<const Node> node_;
};

/// Sampled check that f >= 1 and f(xy) <= f(x) f(y) over pairs drawn from
/// `elements`; pairs whose product cannot be evaluated are skipped. Intended
/// for raw tables, and as a regression check on the grammar.
inline SubadditivityResult semicharacterCheck(const Semicharacter& f, const std::vector<Element>& elements,
                                              std::size_t samples, std::uint64_t seed = 0) {
  SubadditivityResult out;
  auto& atLeastOne = out.report.add("at_least_one");
  auto& submult = out.report.add("submultiplicative");
  const Group& g = f.domain();
  for (const auto& x : elements) {
    if (!f.evaluableAt(x)) continue;
    const double v = f(x);
    atLeastOne.observe(v >= 1.0, std::max(0.0, 1.0 - v), [&] { return g.format(x); });
  }
  if (elements.empty()) return out;
  auto visit = [&](const Element& x, const Element& y) {
    const Element xy = g.mul(x, y);
    if (!f.evaluableAt(x) || !f.evaluableAt(y) || !f.evaluableAt(xy)) {
      ++out.skipped;
      return;
    }
    ++out.checked;
    const double lhs = f(xy), rhs = f(x) * f(y);
    submult.observe(leqRel(lhs, rhs), std::max(0.0, (lhs - rhs) / rhs),
                    [&] { return g.format(x) + " * " + g.format(y); });
  };
  const std::size_t n = elements.size();
  if (n * n <= samples) {
    for (const auto& x : elements)
      for (const auto& y : elements) visit(x, y);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < samples; ++s) {
      const std::size_t i = pick(rng);
      visit(elements[i], elements[pick(rng)]);
    }
  }
  return out;
}

/// Weights F(a) = log f(a) on the generators, rounded up to a multiple of
/// 10^-12 so that f(x) <= e^{l_F(x)} survives the rounding; f(a) = 1 maps to
/// weight 0 exactly.
inline WeightFunction majorize(const Semicharacter& f, const GeneratorSet& S) {
  constexpr std::int64_t kGrid = 1'000'000'000'000;
  WeightFunction w;
  for (const auto& a : S.elements) {
    const double v = f(a);
    if (!(v >= 1.0)) throw std::logic_error("semicharacter value below 1 at a generator");
    if (v == 1.0) {
      w.weights.emplace_back(0);
      continue;
    }
    const double scaled = std::ceil(std::log(v) * static_cast<double>(kGrid));
    w.weights.push_back(makeRational(static_cast<std::int64_t>(scaled) + 1, kGrid));
  }
  return w;
}

}  // namespace duality
