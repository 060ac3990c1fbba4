#pragma once

#include "whk/rational.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstddef>
#include <deque>
#include <string>
#include <vector>

namespace whk {

/// One failing case of a check: the basis tuple (or other site) where the
/// axiom broke and the nonzero residual, both rendered over basis labels.
struct Witness {
  std::vector<std::string> site;
  std::string residual;

  friend auto operator<=>(const Witness&, const Witness&) = default;
};

/// Result of a single axiom check over an exhaustive case enumeration.
/// Witnesses are kept sorted and truncated to a fixed cap; failure_count
/// is always the true total.
struct CheckResult {
  static constexpr std::size_t kWitnessCap = 32;

  std::string name;
  std::size_t cases_checked = 0;
  std::size_t failure_count = 0;
  std::vector<Witness> witnesses;

  bool passed() const { return failure_count == 0; }
  void fail(Witness w);
  /// Sorts witnesses and truncates to the cap. Idempotent.
  void finalize();
};

struct Report {
  std::string command;
  std::vector<std::string> targets;
  // deque: add_check hands out references that must survive later adds
  std::deque<CheckResult> checks;
  /// Free-form facts worth reporting alongside pass/fail (dimensions,
  /// labels of produced objects). Key-value, deterministic order.
  std::vector<std::pair<std::string, std::string>> notes;
  double elapsed_ms = 0;  // rendered in text output only

  CheckResult& add_check(const std::string& name);
  void note(const std::string& key, const std::string& value);
  /// Appends another report's checks, prefixing their names.
  void absorb(const Report& sub, const std::string& prefix = "");
  bool passed() const;
  void finalize();

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Renders a coordinate vector as a signed combination of basis labels,
/// e.g. "2*ex - g". The zero vector renders as "0".
std::string format_element(const std::vector<std::string>& labels, const Vec& v);

}  // namespace whk
