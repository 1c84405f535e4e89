#include <doctest.h>

#include "pcpw/fixtures.hpp"
#include "pcpw/scenario.hpp"

using namespace pcpw;

namespace {

std::string fixture_path(const std::string& file) {
  return std::string(PCPW_FIXTURE_DIR) + "/" + file;
}

const std::map<std::string, std::string> kFixtureFiles = {
    {"F-TRIV", "f_triv.json"},   {"F-SWAP", "f_swap.json"},
    {"F-HALFFIX", "f_halffix.json"}, {"F-S3", "f_s3.json"},
    {"F-TRIV2", "f_triv2.json"}};

}  // namespace

TEST_CASE("shipped fixture files parse to the programmatic fixtures") {
  for (const auto& [name, file] : kFixtureFiles) {
    Scenario s = parse_scenario(fixture_path(file));
    PartialAction expect = fixture_action(name);
    INFO(name);
    CHECK(s.name == name);
    CHECK(s.action.group.order == expect.group.order);
    CHECK(s.action.group.mult == expect.group.mult);
    CHECK(s.action.space == expect.space);
    CHECK(s.action.theta == expect.theta);
  }
  Scenario f2 = parse_scenario(fixture_path("f_halffix_f2.json"));
  CHECK(f2.field == Field::prime(2));
  CHECK(f2.action.theta == fixture_action("F-HALFFIX").theta);
}

TEST_CASE("serialization round-trips idempotently") {
  for (const auto& [name, file] : kFixtureFiles) {
    Scenario s1 = parse_scenario(fixture_path(file));
    std::string once = serialize_scenario(s1);
    Scenario s2 = parse_scenario_text(once);
    std::string twice = serialize_scenario(s2);
    CHECK(once == twice);
  }
}

TEST_CASE("parse errors carry locations and causes") {
  // syntax error with line/column
  CHECK_THROWS_WITH_AS(parse_scenario_text("{\n  \"version\": pcpw,\n}"),
                       doctest::Contains("line 2"), scenario_error);
  // wrong version
  CHECK_THROWS_AS(parse_scenario_text("{\"version\":\"pcpw-9\"}"),
                  scenario_error);
  // non-prime modulus
  std::string base = R"({
    "version": "pcpw-1", "name": "x",
    "field": {"kind": "Fp", "p": 6},
    "group": {"order": 1, "names": ["e"], "table": [[0]]},
    "space": {"size": 1, "names": ["0"]}
  })";
  CHECK_THROWS_WITH_AS(parse_scenario_text(base),
                       doctest::Contains("not prime"), scenario_error);
  // group axiom violation names the witness
  std::string badgroup = R"({
    "version": "pcpw-1", "name": "x",
    "field": {"kind": "Q"},
    "group": {"order": 2, "names": ["e", "t"], "table": [[0, 1], [1, 1]]},
    "space": {"size": 1, "names": ["0"]}
  })";
  CHECK_THROWS_WITH_AS(parse_scenario_text(badgroup),
                       doctest::Contains("group axiom"), scenario_error);
  // fraction literal over F2
  std::string badcoeff = R"({
    "version": "pcpw-1", "name": "x",
    "field": {"kind": "Fp", "p": 2},
    "group": {"order": 2, "names": ["e", "t"], "table": [[0, 1], [1, 0]]},
    "space": {"size": 2, "names": ["0", "1"]},
    "action": [{"g": 1, "domain": [0], "maps_to": [0]}],
    "ideals": {"bad": [{"h": 0, "c": "1/2"}]}
  })";
  CHECK_THROWS_WITH_AS(parse_scenario_text(badcoeff),
                       doctest::Contains("fraction"), scenario_error);
  // point index out of range
  std::string badpoint = R"({
    "version": "pcpw-1", "name": "x",
    "field": {"kind": "Q"},
    "group": {"order": 2, "names": ["e", "t"], "table": [[0, 1], [1, 0]]},
    "space": {"size": 2, "names": ["0", "1"]},
    "action": [{"g": 1, "domain": [0, 7], "maps_to": [0, 1]}]
  })";
  CHECK_THROWS_WITH_AS(parse_scenario_text(badpoint),
                       doctest::Contains("out of range"), scenario_error);
  // an action that breaks the partial-action axioms
  std::string badaction = R"({
    "version": "pcpw-1", "name": "x",
    "field": {"kind": "Q"},
    "group": {"order": 2, "names": ["e", "t"], "table": [[0, 1], [1, 0]]},
    "space": {"size": 2, "names": ["0", "1"]},
    "action": [{"g": 1, "domain": [0], "maps_to": [1]}]
  })";
  CHECK_THROWS_WITH_AS(parse_scenario_text(badaction),
                       doctest::Contains("axiom"), scenario_error);
}

TEST_CASE("ideal resolution against points") {
  Scenario s = parse_scenario(fixture_path("f_halffix.json"));
  CrossedProduct cp = build_crossed_product(s.action, s.field);
  InductionContext c0 = make_induction_context(cp, 0);
  Ideal aug = resolve_kh_ideal(s, cp, c0, "aug0");
  CHECK(aug.dim() == 1);
  // t is not in the isotropy group of point 1
  InductionContext c1 = make_induction_context(cp, 1);
  CHECK_THROWS_AS(resolve_kh_ideal(s, cp, c1, "aug0"), scenario_error);
  CHECK_THROWS_WITH_AS(resolve_kh_ideal(s, cp, c0, "nope"),
                       doctest::Contains("unknown ideal"), scenario_error);
  CHECK_THROWS_AS(resolve_kh_ideal(s, cp, c0, "Jb1"), scenario_error);
  Ideal jb1 = resolve_cp_ideal(s, cp, "Jb1");
  CHECK(jb1.space == Subspace::span(s.field, 3, {cp.alg.basis_vec(1)}));
}

TEST_CASE("run_command: induce and decompose reproduce the worked values") {
  Scenario s = parse_scenario(fixture_path("f_halffix.json"));
  RunOptions opt;
  opt.ideal = "aug0";
  Report r = run_command(s, "induce", opt);
  CHECK(r.all_ok());
  REQUIRE(r.tasks.size() == 1);
  bool found = false;
  for (const auto& [k, v] : r.tasks[0].objects)
    if (k == "induced") {
      CHECK(v == "dim=2 basis=[(1,0,-1);(0,1,0)]");
      found = true;
    }
  CHECK(found);

  RunOptions opt2;
  opt2.ideal = "Jb1";
  Report r2 = run_command(s, "decompose", opt2);
  CHECK(r2.all_ok());

  RunOptions bad;
  bad.ideal = "nope";
  CHECK_THROWS_AS(run_command(s, "induce", bad), scenario_error);
}

TEST_CASE("check-all passes on every shipped fixture") {
  for (const auto& file :
       {"f_triv.json", "f_swap.json", "f_halffix.json", "f_halffix_f2.json",
        "f_s3.json", "f_triv2.json"}) {
    Scenario s = parse_scenario(fixture_path(file));
    RunOptions opt;
    opt.samples = 5;
    Report r = run_command(s, "check-all", opt);
    INFO(file, "\n", report_to_text(r));
    CHECK(r.all_ok());
  }
}

TEST_CASE("reports are byte-deterministic for a fixed seed") {
  Scenario s = parse_scenario(fixture_path("f_halffix.json"));
  RunOptions opt;
  opt.seed = 12345;
  opt.samples = 5;
  Report a = run_command(s, "check-all", opt);
  Report b = run_command(s, "check-all", opt);
  CHECK(report_to_json(a, false) == report_to_json(b, false));
}
