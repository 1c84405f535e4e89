#pragma once

#include <map>

#include "pcpw/induction.hpp"
#include "pcpw/sampling.hpp"

namespace pcpw {

struct scenario_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One generator of a declared ideal: either an element of the crossed
/// product (terms {x,g,c}) or of a group algebra (terms {h,c}, h an
/// ambient group element; resolved against the isotropy group of the
/// point a command targets).
struct IdealTerm {
  int x = -1;  // point (crossed-product terms only)
  int g = -1;  // group element
  std::string c;
};

struct DeclaredIdeal {
  bool group_algebra = false;
  std::vector<std::vector<IdealTerm>> generators;
};

struct ScenarioTask {
  std::string name;
  std::string cmd;
  int point = -1, point2 = -1;
  std::string ideal, ideal2;
};

/// A parsed and validated scenario: wire format "pcpw-1".
struct Scenario {
  std::string name;
  Field field = Field::rationals();
  PartialAction action;
  std::vector<std::pair<std::string, DeclaredIdeal>> ideals;  // name order
  std::vector<ScenarioTask> tasks;

  const DeclaredIdeal& find_ideal(const std::string& nm) const;
};

Scenario parse_scenario(const std::string& path);
Scenario parse_scenario_text(const std::string& text);
/// Normalized serialization; serialize(parse(file)) is idempotent.
std::string serialize_scenario(const Scenario& s);

/// Resolves a declared group-algebra ideal inside KH at a point (throws
/// when a term's group element lies outside the isotropy group), or a
/// crossed-product ideal inside A.
Ideal resolve_kh_ideal(const Scenario& s, const CrossedProduct& cp,
                       const InductionContext& ctx, const std::string& name);
Ideal resolve_cp_ideal(const Scenario& s, const CrossedProduct& cp,
                       const std::string& name);

struct RunOptions {
  int point = 0;
  int point2 = -1;
  std::string ideal, ideal2;
  std::uint64_t cap = kDefaultEnumCap;
  std::uint64_t seed = 0;
  bool timings = false;  // keep reports byte-deterministic by default
  int samples = 25;      // sampled ideals inside check-all
};

struct TaskResult {
  std::string name;
  bool verdict = true;
  std::string witness;                                   // empty when clean
  std::vector<std::pair<std::string, std::string>> objects;  // key -> text
  double ms = 0.0;
};

struct Report {
  std::string scenario;
  std::uint64_t seed = 0;
  std::vector<TaskResult> tasks;
  bool all_ok() const;
};

/// Executes one CLI command against a scenario.  Commands: validate,
/// info, orbits, induce, admissible, decompose, transpose, compare,
/// check-all (which also runs any tasks declared in the scenario file).
Report run_command(const Scenario& s, const std::string& cmd,
                   const RunOptions& opt);

/// Deterministic JSON rendering of a report (timings only when asked).
std::string report_to_json(const Report& r, bool timings);
std::string report_to_text(const Report& r);

/// Canonical textual form of a subspace basis for reports: rows of the
/// RREF basis in wire order.
std::string subspace_text(const Subspace& s);

}  // namespace pcpw
