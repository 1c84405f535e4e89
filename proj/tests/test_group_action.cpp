#include <doctest.h>

#include "pcpw/fixtures.hpp"

using namespace pcpw;

TEST_CASE("group validation catches broken tables") {
  FiniteGroup g = FiniteGroup::cyclic(2);
  CHECK(!g.validate().has_value());
  g.mult[1][1] = 1;  // t*t = t breaks inverses
  CHECK(g.validate().has_value());

  FiniteGroup s3 = FiniteGroup::symmetric(3);
  CHECK(s3.order == 6);
  CHECK(!s3.validate().has_value());
  CHECK(s3.names[0] == "e");
  // swap an entry to break associativity
  std::swap(s3.mult[4][5], s3.mult[5][4]);
  auto err = s3.validate();
  CHECK(err.has_value());
}

TEST_CASE("subgroups and closures") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  // stabilizer of point 0 under the natural action
  PartialAction pa = fixture_action("F-S3");
  OrbitData od = orbit_data(pa, 0);
  Subgroup stab = Subgroup::from_elements(s3, od.H);
  CHECK(stab.order() == 2);
  Subgroup all = Subgroup::closure(s3, {1, 2});
  CHECK(all.order() == 6);
  CHECK_THROWS(Subgroup::from_elements(s3, {0, 4}));  // not inverse-closed? 4=3-cycle
  FiniteGroup h = stab.as_group(s3);
  CHECK(h.order == 2);
}

TEST_CASE("fixture actions validate") {
  for (const auto& name : fixture_names()) {
    PartialAction pa = fixture_action(name);
    auto rep = validate_action(pa);
    INFO(name, ": ", rep.to_string());
    CHECK(rep.ok);
  }
}

TEST_CASE("an ill-formed variant of F-HALFFIX fails validation") {
  PartialAction pa = fixture_action("F-HALFFIX");
  pa.theta[1][0] = 1;  // force theta_t(0) = 1, outside X_t = {0}
  auto rep = validate_action(pa);
  CHECK(!rep.ok);
}

TEST_CASE("orbit data on the fixtures") {
  PartialAction hf = fixture_action("F-HALFFIX");
  OrbitData o0 = orbit_data(hf, 0);
  CHECK(o0.orbit == std::vector<int>{0});
  CHECK(o0.H == std::vector<int>{0, 1});
  CHECK(o0.S == std::vector<int>{0, 1});
  CHECK(o0.R == std::vector<int>{0});
  OrbitData o1 = orbit_data(hf, 1);
  CHECK(o1.orbit == std::vector<int>{1});
  CHECK(o1.H == std::vector<int>{0});
  CHECK(o1.S == std::vector<int>{0});
  CHECK(o1.R == std::vector<int>{0});

  PartialAction sw = fixture_action("F-SWAP");
  OrbitData s0 = orbit_data(sw, 0);
  CHECK(s0.orbit == std::vector<int>{0, 1});
  CHECK(s0.H == std::vector<int>{0});
  CHECK(s0.S == std::vector<int>{0, 1});
  CHECK(s0.R == std::vector<int>{0, 1});

  CHECK_THROWS(orbit_data(sw, 2));
}

TEST_CASE("left-class characterization and isotropy conjugation") {
  for (const auto& name : fixture_names()) {
    PartialAction pa = fixture_action(name);
    const auto& g = pa.group;
    for (int x = 0; x < static_cast<int>(pa.space); ++x) {
      OrbitData od = orbit_data(pa, x);
      for (int k : od.S)
        for (int l : od.S)
          CHECK((pa.apply(k, x) == pa.apply(l, x)) ==
                od.in_H(g.op(g.inverse(k), l)));
      for (int k : od.S) {
        OrbitData ody = orbit_data(pa, pa.apply(k, x));
        std::vector<int> conj;
        for (int h : od.H) conj.push_back(g.op(g.op(k, h), g.inverse(k)));
        std::sort(conj.begin(), conj.end());
        CHECK(ody.H == conj);
      }
    }
  }
}

TEST_CASE("orbit representatives partition the space") {
  for (const auto& name : fixture_names()) {
    PartialAction pa = fixture_action(name);
    std::vector<int> count(pa.space, 0);
    for (int rep : orbit_representatives(pa))
      for (int y : orbit_data(pa, rep).orbit) count[y]++;
    for (int c : count) CHECK(c == 1);
  }
}

TEST_CASE("freeness report on the fixtures") {
  FreenessReport sw = freeness_report(fixture_action("F-SWAP"));
  CHECK(sw.action_topologically_free);
  CHECK(sw.fixed_sets[1].empty());
  CHECK(sw.points[0].topologically_free);
  CHECK(sw.points[1].topologically_free);

  FreenessReport hf = freeness_report(fixture_action("F-HALFFIX"));
  CHECK(!hf.action_topologically_free);
  CHECK(hf.fixed_sets[1] == std::vector<int>{0});
  CHECK(!hf.points[0].topologically_free);
  CHECK(hf.points[1].topologically_free);
  CHECK(hf.points[0].strongly_regular);
  CHECK(hf.points[1].strongly_regular);

  FreenessReport tr = freeness_report(fixture_action("F-TRIV"));
  CHECK(tr.fixed_sets[1] == std::vector<int>{0});
  CHECK(tr.points[0].strongly_regular);
  CHECK(!tr.points[0].topologically_free);

  // every point of every fixture is strongly regular on the finite model
  for (const auto& name : fixture_names())
    for (const auto& pf : freeness_report(fixture_action(name)).points) {
      CHECK(pf.regular);
      CHECK(pf.strongly_regular);
    }
}
