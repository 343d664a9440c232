#pragma once

#include "duality/cli/config.hpp"
#include "duality/duality.hpp"
#include "duality/properties.hpp"

#include <map>

namespace duality::cli {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kSpheresColumns = "level,count,bound,cumulative_sum";
inline constexpr const char* kFourierColumns = "character,element,value";

struct RunOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> backend;
};

struct RunResult {
  json report;
  std::map<std::string, std::string> files;  // file name -> contents
  bool pass = false;
};

namespace detail {

struct Context {
  const RunConfig& cfg;
  CheckReport checks;
  json results = json::object();
  std::map<std::string, std::string> files;
};

template <class Fn>
void withField(const RunConfig& cfg, const Group& g, Fn&& fn) {
  if (cfg.backend == "cyclotomic") {
    fn(cyclotomicFor(g));
  } else {
    fn(ComplexField(cfg.tolerance));
  }
}

inline void flag(CheckReport& r, const std::string& name, bool ok, const std::string& witness) {
  r.add(name).observe(ok, 0.0, [&] { return witness; });
}

inline json sizeJson(std::size_t n) { return static_cast<std::uint64_t>(n); }

/// Builds a semicharacter from a config recipe. Length leaves explore their
/// own ball out to radius * max weight, so they cover the unit-weight ball
/// of the given radius.
inline Semicharacter buildRecipe(const json& r, const Group& g, const Rational& radius, std::size_t cap) {
  const auto type = r.at("type").get<std::string>();
  // the document was validated by parseConfig, so the parser reports nothing here
  Parser p;
  auto rat = [&](const json& v) { return p.rational(v, "").value(); };
  if (type == "const") return Semicharacter::constant(g, toDouble(rat(r.at("C"))));
  if (type == "expLength") {
    const auto gens = g.standardGenerators();
    const auto w = r.contains("weights") ? p.weights(r["weights"], "").resolve(gens.size())
                                         : WeightFunction::uniform(gens.size());
    Rational maxW = 0;
    for (const auto& x : w.weights) maxW = std::max(maxW, x);
    if (maxW == 0) return Semicharacter::constant(g, 1.0);  // e^0, and a zero-cost ball would never end
    return Semicharacter::expLength(std::make_shared<const LengthReport>(exploreBall(g, gens, w, radius * maxW, cap)));
  }
  if (type == "sum" || type == "product" || type == "max") {
    auto a = buildRecipe(r.at("args")[0], g, radius, cap);
    auto b = buildRecipe(r.at("args")[1], g, radius, cap);
    if (type == "sum") return Semicharacter::sum(a, b);
    if (type == "product") return Semicharacter::product(a, b);
    return Semicharacter::max(a, b);
  }
  if (type == "scale") return Semicharacter::scale(toDouble(rat(r.at("C"))), buildRecipe(r.at("arg"), g, radius, cap));
  if (type == "inverse") return Semicharacter::inverse(buildRecipe(r.at("arg"), g, radius, cap));
  if (type == "diagonal") {
    // (t, t) has length at most 2 l(t) in G x G
    return Semicharacter::diagonal(buildRecipe(r.at("arg"), Group::product(g, g), radius * 2, cap));
  }
  if (type == "box") {
    if (g.kind() != GroupKind::Product) throw std::invalid_argument("box needs a product group");
    return Semicharacter::box(g, buildRecipe(r.at("left"), g.left(), radius, cap),
                              buildRecipe(r.at("right"), g.right(), radius, cap));
  }
  throw std::invalid_argument("unknown semicharacter type " + type);
}

inline void hopfAxioms(Context& ctx) {
  const Group g = Group::make(*ctx.cfg.group);
  withField(ctx.cfg, g, [&](const auto& F) {
    const auto fa = functionAlgebra(g, F);
    const auto ga = groupAlgebra(g, F);
    ctx.checks.append(checkHopfAxioms(fa), "function_algebra.");
    ctx.checks.append(checkHopfAxioms(ga), "group_algebra.");
    ctx.checks.append(compareStructure(dualHopf(fa), ga), "dual_of_function_algebra.");
    ctx.checks.append(checkBiduality(fa), "biduality.");
    ctx.results["dimension"] = sizeJson(fa.dim());
    ctx.results["field"] = F.name();
  });
}

inline void dualityCycleCmd(Context& ctx) {
  const Group g = Group::make(*ctx.cfg.group);
  withField(ctx.cfg, g, [&](const auto& F) {
    DualityCycleOptions opts;
    opts.perturbFourierEntry = ctx.cfg.perturb;
    const auto res = dualityCycle(*ctx.cfg.group, F, opts);
    ctx.checks.append(res.report);
    const CharacterGroup dual(g);
    ctx.results["order"] = g.order();
    ctx.results["exponent"] = g.exponent();
    ctx.results["field"] = F.name();
    ctx.results["perturbed"] = ctx.cfg.perturb.has_value();
    if (ctx.cfg.csv) {
      auto f = fourier(dual, F);
      f.matrix = res.fourierMatrix;
      ctx.files["fourier.csv"] = fourierCsv(dual, f);
    }
  });
}

inline void groupPartCmd(Context& ctx) {
  const Group g = Group::make(*ctx.cfg.group);
  const auto& cfg = ctx.cfg;
  withField(cfg, g, [&](const auto& F) {
    using FieldT = std::decay_t<decltype(F)>;
    std::vector<std::pair<std::string, HopfAlgebra<FieldT>>> algebras;
    if (cfg.algebra != "function_algebra") algebras.emplace_back("group_algebra", groupAlgebra(g, F));
    if (cfg.algebra != "group_algebra") algebras.emplace_back("function_algebra", functionAlgebra(g, F));
    for (const auto& [name, h] : algebras) {
      std::vector<std::pair<std::string, GroupPartMode>> modes;
      if (cfg.mode != "brute_force") modes.emplace_back("closed_form", GroupPartMode::ClosedForm);
      if (cfg.mode != "closed_form") {
        if (cfg.mode == "brute_force" || h.dim() <= kMaxBruteForceDim) {
          modes.emplace_back("brute_force", GroupPartMode::BruteForce);
        } else {
          ctx.results[name]["brute_force"] = "skipped: dimension above " + std::to_string(kMaxBruteForceDim);
        }
      }
      std::vector<GroupPart<FieldT>> parts;
      for (const auto& [modeName, mode] : modes) {
        const std::string prefix = name + "." + modeName + ".";
        auto gp = groupPart(h, mode);
        ctx.checks.append(gp.checks, prefix);
        ctx.results[name][modeName]["count"] = sizeJson(gp.elements.size());
        if (name == "group_algebra") {
          flag(ctx.checks, prefix + "count_equals_order", static_cast<std::int64_t>(gp.elements.size()) == g.order(),
               std::to_string(gp.elements.size()) + " vs " + std::to_string(g.order()));
          auto& basis = ctx.checks.add(prefix + "delta_basis_vectors");
          for (const auto& a : gp.elements) {
            std::size_t ones = 0, zeros = 0;
            for (const auto& c : a) {
              if (F.eq(c, F.one())) ++ones;
              else if (F.isZero(c)) ++zeros;
            }
            basis.observe(ones == 1 && zeros + 1 == a.size(), 0.0, [] { return std::string("non-basis group-like"); });
          }
        } else if (g.isAbelian()) {
          const CharacterGroup dual(g);
          const auto xs = g.enumerate();
          auto& match = ctx.checks.add(prefix + "bijection_with_characters");
          match.observe(static_cast<std::int64_t>(gp.elements.size()) == g.order(), 0.0,
                        [&] { return std::to_string(gp.elements.size()) + " group-likes"; });
          for (const auto& chi : dual.characters()) {
            bool found = false;
            for (const auto& a : gp.elements) {
              bool same = true;
              for (std::size_t i = 0; i < xs.size() && same; ++i) same = F.eq(a[i], dual.evaluate(F, chi, xs[i]));
              found = found || same;
            }
            match.observe(found, 0.0, [&] { return "chi" + dual.asGroup().format(chi) + " missing"; });
          }
        }
        parts.push_back(std::move(gp));
      }
      if (parts.size() == 2) {
        auto& agree = ctx.checks.add(name + ".closed_form_matches_brute_force");
        agree.observe(parts[0].elements.size() == parts[1].elements.size(), 0.0, [] { return std::string("counts"); });
        for (const auto& a : parts[0].elements) {
          bool found = false;
          for (const auto& b : parts[1].elements) {
            bool same = true;
            for (std::size_t i = 0; i < a.size() && same; ++i) same = F.eq(a[i], b[i]);
            found = found || same;
          }
          agree.observe(found, 0.0, [] { return std::string("closed-form element missing from brute force"); });
        }
      }
    }
    ctx.results["order"] = g.order();
    ctx.results["field"] = F.name();
  });
}

inline void tensorIso(Context& ctx) {
  const Group g = Group::make(*ctx.cfg.group);
  const Group h = Group::make(*ctx.cfg.secondGroup);
  withField(ctx.cfg, Group::product(g, h), [&](const auto& F) {
    ctx.checks.append(productIsoCheck(g, h, F), "product_iso.");
    ctx.checks.append(checkHopfAxioms(tensorHopf(groupAlgebra(g, F), groupAlgebra(h, F))), "tensor_axioms.");
    ctx.results["dimension"] = checked::mul(g.order(), h.order());
    ctx.results["field"] = F.name();
  });
}

inline json sphereRowsJson(const std::vector<SphereRow>& rows) {
  json a = json::array();
  for (const auto& r : rows)
    a.push_back({{"level", r.level}, {"count", r.count}, {"bound", r.bound}, {"cumulative_sum", r.cumulativeSum}});
  return a;
}

inline void cayley(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const Group g = Group::make(*cfg.group);
  const auto gens = g.standardGenerators();
  const auto w = cfg.weights.resolve(gens.size());
  const Rational radius = cfg.radius.value_or(Rational(kDefaultRadius));
  const auto rep = exploreBall(g, gens, w, radius, cfg.elementCap);

  flag(ctx.checks, "identity_length_zero", rep.size() > 0 && rep.costs[0] == 0 && rep.elements[0] == g.identity(),
       "first settled element");
  const auto spheres = rep.spheres();
  std::size_t total = 0;
  for (const auto& [lvl, idx] : spheres) total += idx.size();
  flag(ctx.checks, "sphere_partition", total == rep.size(),
       std::to_string(total) + " in spheres vs " + std::to_string(rep.size()) + " explored");
  const auto sub = subadditivityCheck(rep, cfg.samples, cfg.seed);
  ctx.checks.append(sub.report);

  ctx.results["generators"] = sizeJson(gens.size());
  ctx.results["elements"] = sizeJson(rep.size());
  ctx.results["truncated"] = rep.truncated;
  ctx.results["radius"] = toString(radius);
  ctx.results["subadditivity_pairs_checked"] = sub.checked;
  ctx.results["subadditivity_pairs_skipped"] = sub.skipped;
  if (w.isPositiveInteger() && w.isInjective()) {
    const auto sb = sphereBoundCheck(rep);
    ctx.checks.append(sb.report);
    ctx.results["complete_levels"] = sb.levels;
    ctx.results["spheres"] = sphereRowsJson(sb.rows);
    if (cfg.csv) ctx.files["spheres.csv"] = sphereCsv(sb.rows);
    if (!rep.truncated) {
      const auto s = summabilityPartialSums(rep);
      ctx.checks.append(s.report);
      ctx.results["partial_sum"] = s.partial;
      ctx.results["level_bound"] = s.bound;
      ctx.results["series_bound"] = s.fullBound;
    }
  } else {
    json levels = json::array();
    for (const auto& [lvl, idx] : spheres)
      levels.push_back({{"length", toString(makeRational(lvl, rep.scale))}, {"count", sizeJson(idx.size())}});
    ctx.results["spheres"] = levels;
    ctx.results["sphere_bound"] = "not applicable: weights are not injective positive integers";
  }
}

inline void counterexample(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const auto res = heisenbergWitness(cfg.nMax, cfg.C);
  ctx.checks.append(res.report);
  flag(ctx.checks, "violation_found", res.firstViolation.has_value(),
       res.firstViolation ? "n = " + std::to_string(*res.firstViolation) : "none up to nMax");
  // the least integer n with n log 2 > 4C, computed independently
  const double threshold = 4.0 * toDouble(cfg.C) / std::log(2.0);
  const auto predicted = static_cast<std::int64_t>(std::floor(threshold)) + 1;
  if (predicted <= cfg.nMax) {
    flag(ctx.checks, "violation_matches_threshold", res.firstViolation == predicted,
         "predicted n = " + std::to_string(predicted));
  }
  json rows = json::array();
  const Group h = Group::make(GroupSpec::heisenberg());
  for (const auto& r : res.rows)
    rows.push_back({{"n", r.n},
                    {"product", h.format(r.product)},
                    {"identity_holds", r.identityHolds},
                    {"length_bound", r.lengthBound},
                    {"log_lhs", static_cast<double>(r.n * r.n) * std::log(2.0)},
                    {"violates", r.violates}});
  ctx.results["rows"] = rows;
  ctx.results["first_violation"] = res.firstViolation ? json(*res.firstViolation) : json(nullptr);
}

inline void nuclearity(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const Group g = Group::make(*cfg.group);
  const auto gens = g.standardGenerators();
  const auto w = cfg.weights.resolve(gens.size());
  const auto res = nuclearityWitness(g, gens, w, cfg.radius.value_or(Rational(10)), cfg.elementCap);
  ctx.checks.append(res.report);
  json shifted = json::array();
  for (const auto& x : res.shifted.weights) shifted.push_back(toString(x));
  json rows = json::array();
  for (const auto& r : res.rows) rows.push_back({{"difference", r.difference}, {"count", r.count}, {"bound", r.bound}});
  ctx.results["shifted_weights"] = shifted;
  ctx.results["rows"] = rows;
  ctx.results["partial_sum"] = res.partial;
  ctx.results["series_bound"] = res.bound;
  ctx.results["included"] = res.included;
  ctx.results["excluded"] = res.excluded;
}

inline void seminormSuite(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const Group g = Group::make(*cfg.group);
  const auto gens = g.standardGenerators();
  const Rational radius = cfg.radius.value_or(Rational(4));
  auto ball = std::make_shared<const LengthReport>(
      exploreBall(g, gens, WeightFunction::uniform(gens.size()), radius, cfg.elementCap));
  const auto f = cfg.semicharacters.empty() ? Semicharacter::expLength(ball)
                                            : buildRecipe(cfg.semicharacters[0], g, radius, cfg.elementCap);
  const auto res = seminormPropertySuite(*ball, f, cfg.count, cfg.samples, cfg.seed);
  ctx.checks.append(res.report);
  ctx.results["ball_elements"] = sizeJson(ball->size());
  ctx.results["seminorms"] = res.seminorms;
}

inline void polarSuite(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const Group g = Group::make(*cfg.group);
  const auto gens = g.standardGenerators();
  const Rational radius = cfg.radius.value_or(Rational(6));
  const auto ball = exploreBall(g, gens, WeightFunction::uniform(gens.size()), radius, cfg.elementCap);
  std::vector<Semicharacter> fs;
  for (const auto& r : cfg.semicharacters) fs.push_back(buildRecipe(r, g, radius, cfg.elementCap));
  if (fs.empty()) {
    // e^l against 2 e^{l/2}: each is the smaller one somewhere
    fs.push_back(buildRecipe({{"type", "expLength"}}, g, radius, cfg.elementCap));
    fs.push_back(buildRecipe({{"type", "scale"}, {"C", 2}, {"arg", {{"type", "expLength"}, {"weights", "1/2"}}}}, g,
                             radius, cfg.elementCap));
  }
  if (fs.size() == 1) fs.push_back(fs[0]);
  json described = json::array();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    described.push_back(fs[i].describe());
    const auto& other = fs[(i + 1) % fs.size()];
    ctx.checks.append(weightedPropertySuite(ball, fs[i], other, cfg.trials, cfg.seed + i),
                      "f" + std::to_string(i) + ".");
    std::vector<Element> pool(ball.elements.begin(), ball.elements.end());
    ctx.checks.append(semicharacterCheck(fs[i], pool, cfg.trials * 10, cfg.seed + i).report,
                      "f" + std::to_string(i) + ".");
  }
  ctx.results["ball_elements"] = sizeJson(ball.size());
  ctx.results["semicharacters"] = described;
}

}  // namespace detail

/// Runs one command. Domain errors raised while running (resource caps,
/// unsupported inputs) become a failing "error" entry, never a crash.
inline RunResult runCommand(RunConfig cfg, const RunOverrides& overrides = {}) {
  if (overrides.seed) cfg.seed = *overrides.seed;
  if (overrides.backend) cfg.backend = *overrides.backend;
  detail::Context ctx{cfg, {}, json::object(), {}};
  // defaults that depend on the command
  if (!cfg.raw.contains("samples") && cfg.command == "cayley") cfg.samples = 100000;
  try {
    const auto& c = cfg.command;
    if (c == "hopf-axioms") detail::hopfAxioms(ctx);
    else if (c == "duality-cycle") detail::dualityCycleCmd(ctx);
    else if (c == "group-part") detail::groupPartCmd(ctx);
    else if (c == "tensor-iso") detail::tensorIso(ctx);
    else if (c == "cayley") detail::cayley(ctx);
    else if (c == "counterexample") detail::counterexample(ctx);
    else if (c == "nuclearity") detail::nuclearity(ctx);
    else if (c == "seminorm-suite") detail::seminormSuite(ctx);
    else if (c == "polar-suite") detail::polarSuite(ctx);
    else throw std::invalid_argument("unknown command " + c);
  } catch (const std::exception& e) {
    ctx.checks.add("error").observe(false, 0.0, [&] { return std::string(e.what()); });
  }
  if (ctx.checks.entries.empty()) ctx.checks.add("error").observe(false, 0.0, [] { return std::string("no checks ran"); });

  RunResult out;
  out.pass = ctx.checks.allPass();
  out.files = std::move(ctx.files);
  json columns = json::object();
  if (out.files.count("spheres.csv")) columns["spheres.csv"] = kSpheresColumns;
  if (out.files.count("fourier.csv")) columns["fourier.csv"] = kFourierColumns;
  out.report = {{"tool", "duality-lab"},
                {"version", kVersion},
                {"command", cfg.command},
                {"inputs", cfg.raw},
                {"seed", cfg.seed},
                {"backend", cfg.backend},
                {"verdict", out.pass ? "pass" : "fail"},
                {"checks", ctx.checks.toJson()},
                {"results", ctx.results},
                {"csv_columns", columns}};
  return out;
}

}  // namespace duality::cli
