#pragma once

#include "duality/group.hpp"
#include "duality/length.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace duality::cli {

using nlohmann::json;

inline const std::vector<std::string>& commandNames() {
  static const std::vector<std::string> names{"hopf-axioms", "duality-cycle", "group-part",  "tensor-iso",   "cayley",
                                              "counterexample", "nuclearity", "seminorm-suite", "polar-suite"};
  return names;
}

struct ConfigIssue {
  std::string path;
  std::string message;
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<ConfigIssue> issues)
      : std::runtime_error(summarize(issues)), issues_(std::move(issues)) {}
  [[nodiscard]] const std::vector<ConfigIssue>& issues() const { return issues_; }

 private:
  static std::string summarize(const std::vector<ConfigIssue>& issues) {
    std::string s;
    for (const auto& i : issues) s += (s.empty() ? "" : "\n") + i.path + ": " + i.message;
    return s;
  }
  std::vector<ConfigIssue> issues_;
};

/// Weights as written in the config: absent, "enumerated", a single value
/// for every generator, or one value per generator.
struct WeightsSpec {
  enum class Form { Default, Enumerated, Uniform, List } form = Form::Default;
  std::vector<Rational> values;

  [[nodiscard]] WeightFunction resolve(std::size_t generators) const {
    switch (form) {
      case Form::Enumerated: return WeightFunction::enumeration(generators);
      case Form::Uniform: return WeightFunction::uniform(generators, values.at(0));
      case Form::List: return WeightFunction::of(values);
      default: return WeightFunction::uniform(generators);
    }
  }
};

struct RunConfig {
  std::string command;
  std::optional<GroupSpec> group;
  std::optional<GroupSpec> secondGroup;
  WeightsSpec weights;
  std::optional<Rational> radius;
  std::size_t elementCap = kDefaultElementCap;
  std::int64_t nMax = 20;
  Rational C = 1;
  std::string backend = "float";
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  std::size_t samples = 200;
  std::size_t trials = 1000;
  std::size_t count = 20;
  std::string mode = "both";     // group-part: closed_form | brute_force | both
  std::string algebra = "both";  // group-part: group_algebra | function_algebra | both
  std::optional<std::pair<std::size_t, std::size_t>> perturb;
  std::vector<json> semicharacters;
  bool csv = true;
  json raw;
};

namespace detail {

class Parser {
 public:
  std::vector<ConfigIssue> issues;

  void fail(const std::string& path, const std::string& msg) { issues.push_back({path, msg}); }

  void allowKeys(const json& obj, const std::string& path, const std::set<std::string>& allowed) {
    for (const auto& [k, v] : obj.items())
      if (!allowed.count(k)) fail(join(path, k), "unknown key");
  }

  static std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
  }

  std::optional<std::int64_t> integer(const json& v, const std::string& path) {
    if (!v.is_number_integer()) {
      fail(path, "expected an integer");
      return std::nullopt;
    }
    return v.get<std::int64_t>();
  }

  std::optional<Rational> rational(const json& v, const std::string& path) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_number_float()) {
      const double d = v.get<double>();
      if (!std::isfinite(d)) {
        fail(path, "expected a finite number");
        return std::nullopt;
      }
      return Rational(d);
    }
    if (v.is_string()) {
      const auto s = v.get<std::string>();
      try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(BigInt(s.substr(0, slash)), den);
      } catch (const std::exception&) {
        fail(path, "expected a rational such as \"3/2\"");
        return std::nullopt;
      }
    }
    fail(path, "expected a number or a rational string");
    return std::nullopt;
  }

  std::optional<GroupSpec> group(const json& v, const std::string& path) {
    if (!v.is_object()) {
      fail(path, "expected an object");
      return std::nullopt;
    }
    if (!v.contains("kind") || !v["kind"].is_string()) {
      fail(join(path, "kind"), "missing or not a string");
      return std::nullopt;
    }
    const auto kind = v["kind"].get<std::string>();
    GroupSpec s;
    const std::size_t before = issues.size();
    if (kind == "finite_abelian") {
      allowKeys(v, path, {"kind", "orders", "label"});
      s.kind = GroupKind::FiniteAbelian;
      if (!v.contains("orders") || !v["orders"].is_array() || v["orders"].empty()) {
        fail(join(path, "orders"), "expected a non-empty array");
      } else {
        for (std::size_t i = 0; i < v["orders"].size(); ++i) {
          const auto p = join(path, "orders") + "[" + std::to_string(i) + "]";
          if (auto n = integer(v["orders"][i], p)) {
            if (*n < 2) {
              fail(p, "order must be >= 2, got " + std::to_string(*n));
            } else {
              s.orders.push_back(*n);
            }
          }
        }
      }
    } else if (kind == "symmetric") {
      allowKeys(v, path, {"kind", "n", "label"});
      s.kind = GroupKind::Symmetric;
      if (!v.contains("n")) {
        fail(join(path, "n"), "missing");
      } else if (auto n = integer(v["n"], join(path, "n"))) {
        if (*n < 1 || *n > kMaxSymmetricDegree) {
          fail(join(path, "n"), "degree must be in 1.." + std::to_string(kMaxSymmetricDegree));
        }
        s.degree = static_cast<int>(*n);
      }
    } else if (kind == "heisenberg" || kind == "trivial") {
      allowKeys(v, path, {"kind", "label"});
      s.kind = kind == "heisenberg" ? GroupKind::Heisenberg : GroupKind::Trivial;
    } else if (kind == "free" || kind == "free_abelian") {
      allowKeys(v, path, {"kind", "rank", "label"});
      s.kind = kind == "free" ? GroupKind::Free : GroupKind::FreeAbelian;
      if (!v.contains("rank")) {
        fail(join(path, "rank"), "missing");
      } else if (auto n = integer(v["rank"], join(path, "rank"))) {
        if (*n < 1 || *n > 16) fail(join(path, "rank"), "rank must be in 1..16");
        s.rank = static_cast<int>(*n);
      }
    } else if (kind == "product") {
      allowKeys(v, path, {"kind", "factors", "label"});
      s.kind = GroupKind::Product;
      if (!v.contains("factors") || !v["factors"].is_array() || v["factors"].size() != 2) {
        fail(join(path, "factors"), "expected an array of two groups");
      } else {
        for (std::size_t i = 0; i < 2; ++i)
          if (auto f = group(v["factors"][i], join(path, "factors") + "[" + std::to_string(i) + "]"))
            s.factors.push_back(*f);
      }
    } else {
      fail(join(path, "kind"), "unknown group kind \"" + kind + "\"");
      return std::nullopt;
    }
    if (v.contains("label")) {
      if (v["label"].is_string()) {
        s.label = v["label"].get<std::string>();
      } else {
        fail(join(path, "label"), "expected a string");
      }
    }
    if (issues.size() != before) return std::nullopt;
    return s;
  }

  void recipe(const json& v, const std::string& path) {
    if (!v.is_object() || !v.contains("type") || !v["type"].is_string()) {
      fail(path, "expected an object with a string \"type\"");
      return;
    }
    const auto t = v["type"].get<std::string>();
    auto atLeastOne = [&](const char* key) {
      if (!v.contains(key)) {
        fail(join(path, key), "missing");
      } else if (auto c = rational(v[key], join(path, key)); c && *c < 1) {
        fail(join(path, key), "must be >= 1");
      }
    };
    if (t == "const") {
      allowKeys(v, path, {"type", "C"});
      atLeastOne("C");
    } else if (t == "expLength") {
      allowKeys(v, path, {"type", "weights"});
      if (v.contains("weights")) weights(v["weights"], join(path, "weights"));
    } else if (t == "sum" || t == "product" || t == "max") {
      allowKeys(v, path, {"type", "args"});
      if (!v.contains("args") || !v["args"].is_array() || v["args"].size() != 2) {
        fail(join(path, "args"), "expected two recipes");
      } else {
        recipe(v["args"][0], join(path, "args") + "[0]");
        recipe(v["args"][1], join(path, "args") + "[1]");
      }
    } else if (t == "scale") {
      allowKeys(v, path, {"type", "C", "arg"});
      atLeastOne("C");
      if (!v.contains("arg")) fail(join(path, "arg"), "missing");
      else recipe(v["arg"], join(path, "arg"));
    } else if (t == "inverse" || t == "diagonal") {
      allowKeys(v, path, {"type", "arg"});
      if (!v.contains("arg")) fail(join(path, "arg"), "missing");
      else recipe(v["arg"], join(path, "arg"));
    } else if (t == "box") {
      allowKeys(v, path, {"type", "left", "right"});
      for (const char* side : {"left", "right"}) {
        if (!v.contains(side)) fail(join(path, side), "missing");
        else recipe(v[side], join(path, side));
      }
    } else {
      fail(join(path, "type"), "unknown semicharacter type \"" + t + "\"");
    }
  }

  WeightsSpec weights(const json& v, const std::string& path) {
    WeightsSpec w;
    if (v.is_string() && v.get<std::string>() == "enumerated") {
      w.form = WeightsSpec::Form::Enumerated;
    } else if (v.is_array()) {
      w.form = WeightsSpec::Form::List;
      for (std::size_t i = 0; i < v.size(); ++i) {
        const auto p = path + "[" + std::to_string(i) + "]";
        if (auto r = rational(v[i], p)) {
          if (*r < 0) fail(p, "weights must be >= 0");
          w.values.push_back(*r);
        }
      }
    } else if (v.is_number() || v.is_string()) {
      w.form = WeightsSpec::Form::Uniform;
      if (auto r = rational(v, path)) {
        if (*r < 0) fail(path, "weights must be >= 0");
        w.values.push_back(*r);
      }
    } else {
      fail(path, "expected \"enumerated\", a number, or an array");
    }
    return w;
  }
};

}  // namespace detail

/// Parses and validates one JSON run document. Every problem is collected
/// with its path before a ConfigError is thrown.
inline RunConfig parseConfig(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::vector<ConfigIssue>{{"$", std::string("malformed JSON: ") + e.what()}});
  }
  if (!doc.is_object()) throw ConfigError(std::vector<ConfigIssue>{{"$", "expected a JSON object"}});

  detail::Parser p;
  RunConfig cfg;
  cfg.raw = doc;
  p.allowKeys(doc, "", {"command", "group", "secondGroup", "weights", "radius", "elementCap", "nMax", "C", "backend",
                        "tolerance", "seed", "samples", "trials", "count", "mode", "algebra", "perturb",
                        "semicharacters", "csv"});

  if (!doc.contains("command") || !doc["command"].is_string()) {
    p.fail("command", "missing or not a string");
  } else {
    cfg.command = doc["command"].get<std::string>();
    const auto& names = commandNames();
    if (std::find(names.begin(), names.end(), cfg.command) == names.end()) {
      p.fail("command", "unknown command \"" + cfg.command + "\"");
    }
  }
  if (doc.contains("group")) cfg.group = p.group(doc["group"], "group");
  if (doc.contains("secondGroup")) cfg.secondGroup = p.group(doc["secondGroup"], "secondGroup");
  if (doc.contains("weights")) cfg.weights = p.weights(doc["weights"], "weights");
  if (doc.contains("radius")) {
    if (auto r = p.rational(doc["radius"], "radius")) {
      if (*r < 0) p.fail("radius", "radius must be >= 0");
      cfg.radius = *r;
    }
  }
  auto positive = [&](const char* key, auto& field) {
    if (!doc.contains(key)) return;
    if (auto n = p.integer(doc[key], key)) {
      if (*n < 1) {
        p.fail(key, "must be >= 1");
      } else {
        field = static_cast<std::remove_reference_t<decltype(field)>>(*n);
      }
    }
  };
  positive("elementCap", cfg.elementCap);
  positive("nMax", cfg.nMax);
  positive("samples", cfg.samples);
  positive("trials", cfg.trials);
  positive("count", cfg.count);
  if (doc.contains("C")) {
    if (auto c = p.rational(doc["C"], "C")) {
      if (*c < 1) p.fail("C", "C must be >= 1");
      cfg.C = *c;
    }
  }
  if (doc.contains("backend")) {
    const auto& b = doc["backend"];
    if (!b.is_string() || (b != "float" && b != "cyclotomic")) {
      p.fail("backend", "expected \"float\" or \"cyclotomic\"");
    } else {
      cfg.backend = b.get<std::string>();
    }
  }
  if (doc.contains("tolerance")) {
    if (!doc["tolerance"].is_number() || !(doc["tolerance"].get<double>() > 0)) {
      p.fail("tolerance", "expected a positive number");
    } else {
      cfg.tolerance = doc["tolerance"].get<double>();
    }
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) {
      p.fail("seed", "expected a non-negative integer");
    } else {
      cfg.seed = doc["seed"].get<std::uint64_t>();
    }
  }
  auto choice = [&](const char* key, std::string& field, const std::set<std::string>& allowed) {
    if (!doc.contains(key)) return;
    if (!doc[key].is_string() || !allowed.count(doc[key].get<std::string>())) {
      std::string list;
      for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
      p.fail(key, "expected one of " + list);
    } else {
      field = doc[key].get<std::string>();
    }
  };
  choice("mode", cfg.mode, {"closed_form", "brute_force", "both"});
  choice("algebra", cfg.algebra, {"group_algebra", "function_algebra", "both"});
  if (doc.contains("perturb")) {
    const auto& v = doc["perturb"];
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_unsigned() || !v[1].is_number_unsigned()) {
      p.fail("perturb", "expected [row, column]");
    } else {
      cfg.perturb = std::make_pair(v[0].get<std::size_t>(), v[1].get<std::size_t>());
    }
  }
  if (doc.contains("semicharacters")) {
    if (!doc["semicharacters"].is_array()) {
      p.fail("semicharacters", "expected an array of recipes");
    } else {
      for (std::size_t i = 0; i < doc["semicharacters"].size(); ++i) {
        p.recipe(doc["semicharacters"][i], "semicharacters[" + std::to_string(i) + "]");
        cfg.semicharacters.push_back(doc["semicharacters"][i]);
      }
    }
  }
  if (doc.contains("csv")) {
    if (!doc["csv"].is_boolean()) p.fail("csv", "expected a boolean");
    else cfg.csv = doc["csv"].get<bool>();
  }

  // command-specific requirements
  const bool needsGroup = cfg.command != "counterexample";
  if (needsGroup && !doc.contains("group")) p.fail("group", "required by " + cfg.command);
  if (cfg.command == "tensor-iso" && !doc.contains("secondGroup")) p.fail("secondGroup", "required by tensor-iso");

  if (!p.issues.empty()) throw ConfigError(std::move(p.issues));
  return cfg;
}

}  // namespace duality::cli
