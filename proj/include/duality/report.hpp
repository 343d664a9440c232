#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace duality {

/// One named check: pass/fail, the worst residual seen, and a witness for the
/// worst (or first failing) case.
struct CheckEntry {
  std::string name;
  bool pass = true;
  double worstResidual = 0.0;
  std::string witness;
  long long cases = 0;

  /// Records one comparison. A failing case always takes the witness slot
  /// over passing ones; among cases of equal status the larger residual wins.
  void observe(bool ok, double residual, const std::function<std::string()>& describe) {
    ++cases;
    if (!ok && pass) {
      pass = false;
      worstResidual = residual;
      witness = describe();
      return;
    }
    if (ok && !pass) return;
    if (residual > worstResidual || cases == 1) {
      worstResidual = std::max(worstResidual, residual);
      witness = describe();
    }
  }

  [[nodiscard]] nlohmann::json toJson() const {
    return {{"name", name},
            {"verdict", pass ? "pass" : "fail"},
            {"worst_residual", worstResidual},
            {"witness", witness},
            {"cases", cases}};
  }
};

/// Entries live in a deque so references returned by add() survive later adds.
struct CheckReport {
  std::deque<CheckEntry> entries;

  CheckEntry& add(std::string name) {
    entries.push_back(CheckEntry{std::move(name)});
    return entries.back();
  }

  [[nodiscard]] bool allPass() const {
    return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.pass; });
  }

  [[nodiscard]] const CheckEntry& at(const std::string& name) const {
    for (const auto& e : entries)
      if (e.name == name) return e;
    throw std::out_of_range("no check named " + name);
  }

  [[nodiscard]] double worstResidual() const {
    double w = 0.0;
    for (const auto& e : entries) w = std::max(w, e.worstResidual);
    return w;
  }

  void append(const CheckReport& other, const std::string& prefix = "") {
    for (auto e : other.entries) {
      e.name = prefix + e.name;
      entries.push_back(std::move(e));
    }
  }

  [[nodiscard]] nlohmann::json toJson() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : entries) arr.push_back(e.toJson());
    return arr;
  }
};

/// Relative comparison a <= b used for all real-valued seminorm inequalities.
inline constexpr double kRelativeTolerance = 1e-12;

inline bool leqRel(double a, double b, double tol = kRelativeTolerance) {
  return a <= b + tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool eqRel(double a, double b, double tol = kRelativeTolerance) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace duality
