#pragma once

#include "krammer/coxeter.hpp"
#include "krammer/polynomial.hpp"
#include "krammer/rational.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace krammer {

using Json = nlohmann::ordered_json;

enum class CheckStatus { pass, fail, skipped_degenerate };

std::string status_name(CheckStatus s);
CheckStatus status_from_name(const std::string& name);

// One verification outcome. Serializes to a single JSON object with a fixed
// key order, so serialize -> parse -> serialize is byte-identical.
struct CheckReport {
  std::string check_id;
  std::string type_string;
  Json params = Json::object();   // m as "num/den", prime, generator_set, flags
  CheckStatus status = CheckStatus::pass;
  Json details = Json::object();  // dimensions, multiplicities, factors; fail witness
  long elapsed_ms = 0;

  Json to_json() const;
  static CheckReport from_json(const Json& j);
  std::string to_line() const;  // compact single-line JSON
};

struct SuiteConfig {
  std::string command;  // counts | check | discriminant | closure | all
  std::string kind;     // for check: holonomy | cubic | central | selfadjoint |
                        //            triples | wbasis | vanishing | branch
  std::vector<TypeSpec> types;
  std::vector<Rat> m_values;  // empty: per-command defaults
  int prime = 19;
  std::string expect;         // factored-polynomial comparison for discriminant
  std::string generators = "simple_reflections";  // or all_reflections | last_column
  std::string folded;         // F4 | H3 | H4 (closure only)
  bool allow_long = false;
  long progress_every = 0;    // closure progress granularity (0 = silent)
};

struct SuiteResult {
  std::vector<CheckReport> reports;
  bool any_fail() const;
};

// Runs the configured checks in deterministic order. Throws
// std::invalid_argument (or UnsupportedType) on configuration errors:
// unknown command/kind, a selector invalid for the type, or a long-running
// job requested without allow_long.
SuiteResult run_suite(const SuiteConfig& cfg);

// Expected reflection counts (#R, c, c') in closed form per family.
Counts expected_counts(const TypeSpec& t);

// Closed-form factored discriminant of the invariant form per family.
FactoredPoly expected_discriminant(const TypeSpec& t);

} // namespace krammer
