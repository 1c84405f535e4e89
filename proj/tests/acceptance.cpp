// Acceptance suite: one test case per criterion, each printing a pass/fail
// line.  Everything is exact arithmetic, so every comparison is equality;
// there are no tolerances anywhere.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pcpw/decomposition.hpp"
#include "pcpw/enumeration.hpp"
#include "pcpw/fixtures.hpp"
#include "pcpw/scenario.hpp"
#include "pcpw/transposition.hpp"
#include "test_util.hpp"

using namespace pcpw;

namespace {

struct Criterion {
  int number;
  std::string text;
  std::chrono::steady_clock::time_point start;
  bool ok = true;
  Criterion(int n, std::string t)
      : number(n), text(std::move(t)), start(std::chrono::steady_clock::now()) {}
  void finish(bool passed) {
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start)
                   .count();
    std::printf("[criterion %2d] %s  %s (%.2f s)\n", number,
                passed ? "PASS" : "FAIL", text.c_str(), s);
    std::fflush(stdout);
  }
};

const std::vector<std::string> kConstructionFixtures = {
    "F-TRIV", "F-SWAP", "F-HALFFIX", "F-S3"};

/// The 200 seeded random crossed-product ideals of criteria 3/4, spread
/// round-robin over the fixtures (seed 0).
std::vector<std::pair<std::string, Ideal>> seeded_ideals_200() {
  std::vector<std::pair<std::string, Ideal>> out;
  Sampler sampler(0);
  auto names = fixture_names();
  std::vector<CrossedProduct> cps;
  for (const auto& n : names)
    cps.push_back(fixture_crossed_product(n, Field::rationals()));
  for (int i = 0; i < 200; ++i) {
    std::size_t which = static_cast<std::size_t>(i) % cps.size();
    out.emplace_back(names[which], sampler.ideal(cps[which].alg));
  }
  return out;
}

}  // namespace

TEST_CASE("criterion 1: construction soundness") {
  Criterion cr(1, "partial-action axioms, associativity, unit on all fixtures");
  for (const auto& name : kConstructionFixtures)
    for (const Field& f : {Field::rationals(), Field::prime(2)}) {
      PartialAction pa = fixture_action(name);
      bool ok = validate_action(pa).ok;
      CHECK(ok);
      CrossedProduct cp = build_crossed_product(pa, f);
      bool assoc = !cp.alg.associativity_witness().has_value();
      bool unital = cp.alg.unit.has_value() && cp.alg.unit_ok();
      CHECK(assoc);
      CHECK(unital);
      cr.ok = cr.ok && ok && assoc && unital;
    }
  cr.finish(cr.ok);
  CHECK(cr.ok);
}

TEST_CASE("criterion 2: induction against the brute-force oracle") {
  Criterion cr(2, "Ind on F-HALFFIX at x0=0 over Q matches the grid oracle");
  Field q = Field::rationals();
  CrossedProduct hf = fixture_crossed_product("F-HALFFIX", q);
  InductionContext c0 = make_induction_context(hf, 0);
  Vec b0 = hf.alg.basis_vec(0), b1 = hf.alg.basis_vec(1),
      b2 = hf.alg.basis_vec(2);

  std::vector<std::pair<Ideal, Subspace>> cases = {
      {augmentation_ideal(c0.maps.kh),
       Subspace::span(q, 3, {vec_sub(b0, b2), b1})},
      {Ideal::zero(c0.kh()), Subspace::span(q, 3, {b1})},
      {Ideal::whole(c0.kh()), Subspace::full(q, 3)},
  };
  for (const auto& [ideal, expect] : cases) {
    Ideal ind = induce_ideal(c0, ideal);
    bool frozen = ind.space == expect;
    CHECK(frozen);
    // oracle: classify every grid vector by the membership criterion
    auto members = testutil::grid_members(c0, ideal);
    bool sound = true;
    for (const auto& v : members) sound = sound && ind.space.contains(v);
    bool spanning = Subspace::span(q, 3, members) == ind.space;
    CHECK(sound);
    CHECK(spanning);
    // the literal preimage-fold route agrees with the stacked kernel
    bool fold = induce_ideal_by_fold(c0, ideal).space == ind.space;
    CHECK(fold);
    cr.ok = cr.ok && frozen && sound && spanning && fold;
  }
  cr.finish(cr.ok);
  CHECK(cr.ok);
}

TEST_CASE("criterion 3: Effros-Hahn, exhaustive over F2 and sampled over Q") {
  Criterion cr(3, "J = cap_x Ind_x(F_x(J)) for all F2 ideals and 200 sampled");
  Field f2 = Field::prime(2);
  CrossedProduct hf2 = fixture_crossed_product("F-HALFFIX", f2);
  auto all = enumerate_ideals(hf2.alg);
  bool count_ok = all.size() == 6;
  CHECK(count_ok);
  cr.ok = cr.ok && count_ok;
  for (const auto& j : all) {
    bool v = effros_hahn_decompose(hf2, j).verdict;
    CHECK(v);
    cr.ok = cr.ok && v;
  }
  std::map<std::string, CrossedProduct> cps;
  for (const auto& n : fixture_names())
    cps.emplace(n, fixture_crossed_product(n, Field::rationals()));
  for (const auto& [name, j] : seeded_ideals_200()) {
    bool v = effros_hahn_decompose(cps.at(name), j).verdict;
    CHECK(v);
    cr.ok = cr.ok && v;
  }
  cr.finish(cr.ok);
  CHECK(cr.ok);
}

TEST_CASE("criterion 4: discretization chain and tau") {
  Criterion cr(4, "Ker(reg rep)=J, J=cap Ker(rho_x), tau bijective+covariant");
  auto run_one = [&](const CrossedProduct& cp, const Ideal& j) {
    bool ok = module_annihilator(cp.alg, regular_rep_mod_j(cp, j)).space ==
              j.space;
    Discretization d = discretize(cp, j);
    Ideal cap_ker = Ideal::whole(cp.alg);
    for (int rep : orbit_representatives(cp.pa)) {
      OrbitRestriction rho = rho_restriction(cp, d, rep);
      cap_ker = ideal_combine(cp.alg, IdealOp::intersect, cap_ker,
                              ker_rho(cp, rho));
      ok = ok && rho_equivalence_check(cp, d, rep).ok;
    }
    return ok && cap_ker.space == j.space;
  };
  Field f2 = Field::prime(2);
  CrossedProduct hf2 = fixture_crossed_product("F-HALFFIX", f2);
  for (const auto& j : enumerate_ideals(hf2.alg)) {
    bool v = run_one(hf2, j);
    CHECK(v);
    cr.ok = cr.ok && v;
  }
  std::map<std::string, CrossedProduct> cps;
  for (const auto& n : fixture_names())
    cps.emplace(n, fixture_crossed_product(n, Field::rationals()));
  for (const auto& [name, j] : seeded_ideals_200()) {
    bool v = run_one(cps.at(name), j);
    CHECK(v);
    cr.ok = cr.ok && v;
  }
  cr.finish(cr.ok);
  CHECK(cr.ok);
}

TEST_CASE("criterion 5: module transport") {
  Criterion cr(5, "annihilator transport and irreducibility preservation");
  Field q = Field::rationals();
  // sign and trivial modules of Q[Z/2] at the isotropy-2 points
  for (const auto& name : {"F-TRIV", "F-HALFFIX"}) {
    CrossedProduct cp = fixture_crossed_product(name, q);
    InductionContext ctx = make_induction_context(cp, 0);
    for (int sgn : {+1, -1}) {
      AlgModule v;
      v.field = q;
      v.dim = 1;
      v.action.push_back(Matrix::identity(q, 1));
      Matrix m = Matrix::identity(q, 1);
      m.at(0, 0) = Scalar::from_int(q, sgn);
      v.action.push_back(m);
      AlgModule ind = induce_module(ctx, v);
      bool transport = module_annihilator(cp.alg, ind).space ==
                       induce_ideal(ctx, module_annihilator(ctx.kh(), v)).space;
      CHECK(transport);
      cr.ok = cr.ok && transport;
    }
  }
  // all irreducible F2/F3 modules found by exhaustion on the fixtures
  for (std::uint32_t p : {2u, 3u}) {
    Field f = Field::prime(p);
    for (const auto& name : fixture_names()) {
      CrossedProduct cp = fixture_crossed_product(name, f);
      for (int x0 = 0; x0 < static_cast<int>(cp.pa.space); ++x0) {
        InductionContext ctx = make_induction_context(cp, x0);
        for (const auto& v : irreducible_modules_by_exhaustion(ctx.kh())) {
          bool irr_in = module_is_irreducible(ctx.kh(), v);
          AlgModule ind = induce_module(ctx, v);
          bool irr_out = module_is_irreducible(cp.alg, ind);
          bool transport =
              module_annihilator(cp.alg, ind).space ==
              induce_ideal(ctx, module_annihilator(ctx.kh(), v)).space;
          CHECK(irr_in);
          CHECK(irr_out);
          CHECK(transport);
          cr.ok = cr.ok && irr_in && irr_out && transport;
        }
      }
    }
  }
  cr.finish(cr.ok);
  CHECK(cr.ok);
}

TEST_CASE("criterion 6: admissibility coherence") {
  Criterion cr(6, "characterizations agree; sandwich; injectivity; F(J) admissible");
  Field q = Field::rationals();
  Sampler sampler(0);
  int fj_checked = 0;
  for (const auto& name : fixture_names()) {
    CrossedProduct cp = fixture_crossed_product(name, q);
    for (int x0 = 0; x0 < static_cast<int>(cp.pa.space); ++x0) {
      InductionContext ctx = make_induction_context(cp, x0);
      std::vector<Ideal> tested = {Ideal::zero(ctx.kh()),
                                   Ideal::whole(ctx.kh())};
      if (ctx.kh().dim > 1)
        tested.push_back(augmentation_ideal(ctx.maps.kh));
      for (const auto& i : tested) {
        auto rep = characterization_checks(ctx, i);
        bool agree = rep.all_agree && rep.admissible_by_definition;
        Ideal ind = induce_ideal(ctx, i);
        bool equal = f_of_ideal(ctx, ind).space == i.space;
        CHECK(agree);
        CHECK(equal);
        cr.ok = cr.ok && agree && equal;
      }
    }
  }
  // F2 enumerations: every KH ideal is admissible and Ind is injective
  Field f2 = Field::prime(2);
  for (const auto& name : fixture_names()) {
    CrossedProduct cp = fixture_crossed_product(name, f2);
    for (int x0 = 0; x0 < static_cast<int>(cp.pa.space); ++x0) {
      InductionContext ctx = make_induction_context(cp, x0);
      auto all = enumerate_ideals(ctx.kh());
      std::vector<Ideal> induced;
      for (const auto& i : all) {
        bool adm = admissible(ctx, i);
        bool agree = characterization_checks(ctx, i).all_agree;
        CHECK(adm);
        CHECK(agree);
        cr.ok = cr.ok && adm && agree;
        induced.push_back(induce_ideal(ctx, i));
      }
      for (std::size_t a = 0; a < induced.size(); ++a)
        for (std::size_t b = a + 1; b < induced.size(); ++b) {
          bool distinct = !(induced[a].space == induced[b].space);
          CHECK(distinct);
          cr.ok = cr.ok && distinct;
        }
    }
  }
  // 200 seeded random J: J <= Ind(F(J)) and F(J) admissible
  std::map<std::string, CrossedProduct> cps;
  for (const auto& n : fixture_names())
    cps.emplace(n, fixture_crossed_product(n, q));
  auto names = fixture_names();
  for (int i = 0; i < 200; ++i) {
    const auto& name = names[static_cast<std::size_t>(i) % names.size()];
    const CrossedProduct& cp = cps.at(name);
    Ideal j = sampler.ideal(cp.alg);
    InductionContext ctx = make_induction_context(
        cp, static_cast<int>(i / names.size()) %
                static_cast<int>(cp.pa.space));
    Ideal fj = f_of_ideal(ctx, j);
    bool sandwich = induce_ideal(ctx, fj).space.contains(j.space);
    bool adm = admissible(ctx, fj);
    CHECK(sandwich);
    CHECK(adm);
    cr.ok = cr.ok && sandwich && adm;
    ++fj_checked;
  }
  CHECK(fj_checked == 200);
  cr.finish(cr.ok);
  CHECK(cr.ok);
}

TEST_CASE("criterion 7: section-7 preservation") {
  Criterion cr(7, "F inclusions on 200 pairs; prime/meet-irr preserved over F2");
  Field q = Field::rationals();
  Sampler sampler(0);
  auto names = fixture_names();
  std::map<std::string, CrossedProduct> cps;
  for (const auto& n : names) cps.emplace(n, fixture_crossed_product(n, q));
  for (int i = 0; i < 200; ++i) {
    const auto& name = names[static_cast<std::size_t>(i) % names.size()];
    const CrossedProduct& cp = cps.at(name);
    InductionContext ctx = make_induction_context(cp, 0);
    Ideal j = sampler.ideal(cp.alg), k = sampler.ideal(cp.alg);
    Ideal fj = f_of_ideal(ctx, j), fk = f_of_ideal(ctx, k);
    bool cap_ok =
        f_of_ideal(ctx, ideal_combine(cp.alg, IdealOp::intersect, j, k))
            .space.contains(intersect(fj.space, fk.space));
    bool prod_ok =
        f_of_ideal(ctx, ideal_combine(cp.alg, IdealOp::product, j, k))
            .space.contains(
                ideal_combine(ctx.kh(), IdealOp::product, fj, fk).space);
    CHECK(cap_ok);
    CHECK(prod_ok);
    cr.ok = cr.ok && cap_ok && prod_ok;
  }
  Field f2 = Field::prime(2);
  for (const auto& name : {"F-SWAP", "F-HALFFIX"}) {
    CrossedProduct cp = fixture_crossed_product(name, f2);
    InductionContext ctx = make_induction_context(cp, 0);
    for (const auto& i : enumerate_ideals(ctx.kh())) {
      Ideal ind = induce_ideal(ctx, i);
      if (ideal_is_prime(ctx.kh(), i)) {
        bool v = ideal_is_prime(cp.alg, ind);
        CHECK(v);
        cr.ok = cr.ok && v;
      }
      if (ideal_is_meet_irreducible(ctx.kh(), i)) {
        bool v = ideal_is_meet_irreducible(cp.alg, ind);
        CHECK(v);
        cr.ok = cr.ok && v;
      }
    }
  }
  cr.finish(cr.ok);
  CHECK(cr.ok);
}

TEST_CASE("criterion 8: transposition") {
  Criterion cr(8, "three routes agree; equality/inclusion equivalences hold");
  for (const auto& name : fixture_names()) {
    for (const Field& f : {Field::rationals(), Field::prime(2)}) {
      CrossedProduct cp = fixture_crossed_product(name, f);
      for (int x0 = 0; x0 < static_cast<int>(cp.pa.space); ++x0)
        for (int x1 = 0; x1 < static_cast<int>(cp.pa.space); ++x1) {
          TranspositionPair pair = make_transposition_pair(cp, x0, x1);
          std::vector<Ideal> ideals0, ideals1;
          if (f.is_prime_field()) {
            ideals0 = enumerate_ideals(pair.ctx0.kh());
            ideals1 = enumerate_ideals(pair.ctx1.kh());
          } else {
            ideals0 = {Ideal::zero(pair.ctx0.kh()),
                       Ideal::whole(pair.ctx0.kh())};
            if (pair.ctx0.kh().dim > 1)
              ideals0.push_back(augmentation_ideal(pair.ctx0.maps.kh));
            ideals1 = {Ideal::zero(pair.ctx1.kh()),
                       Ideal::whole(pair.ctx1.kh())};
            if (pair.ctx1.kh().dim > 1)
              ideals1.push_back(augmentation_ideal(pair.ctx1.maps.kh));
          }
          bool disjoint = !std::binary_search(pair.ctx0.od.orbit.begin(),
                                              pair.ctx0.od.orbit.end(), x1);
          for (const auto& i0 : ideals0) {
            Ideal a = transpose(pair, i0);
            bool agree = a.space == transpose_via_psi(pair, i0).space &&
                         a.space == strongly_regular_transpose(pair, i0).space;
            CHECK(agree);
            cr.ok = cr.ok && agree;
            if (disjoint) {
              bool full = a.space.is_full();
              CHECK(full);
              cr.ok = cr.ok && full;
            }
            for (const auto& i1 : ideals1) {
              auto rep = induced_comparison(pair, i0, i1);
              bool v = rep.equivalences_hold && rep.inclusion_equivalence &&
                       rep.orbit_consequence;
              CHECK(v);
              cr.ok = cr.ok && v;
            }
          }
        }
    }
  }
  cr.finish(cr.ok);
  CHECK(cr.ok);
}

TEST_CASE("criterion 9: simplicity and freeness") {
  Criterion cr(9, "F-SWAP simple+free, F-HALFFIX neither; simple => free");
  Field f2 = Field::prime(2);
  CrossedProduct sw = fixture_crossed_product("F-SWAP", f2);
  bool two = enumerate_ideals(sw.alg).size() == 2;
  bool free_sw = freeness_report(sw.pa).action_topologically_free;
  CHECK(two);
  CHECK(free_sw);
  CrossedProduct hf = fixture_crossed_product("F-HALFFIX", f2);
  bool many = enumerate_ideals(hf.alg).size() > 2;
  bool unfree = !freeness_report(hf.pa).action_topologically_free;
  CHECK(many);
  CHECK(unfree);
  cr.ok = cr.ok && two && free_sw && many && unfree;
  for (const auto& name : fixture_names())
    for (const Field& f : {Field::rationals(), Field::prime(2)}) {
      CrossedProduct cp = fixture_crossed_product(name, f);
      auto simple = algebra_is_simple(cp.alg);
      if (simple.has_value() && *simple) {
        bool v = freeness_report(cp.pa).action_topologically_free;
        CHECK(v);
        cr.ok = cr.ok && v;
      }
    }
  cr.finish(cr.ok);
  CHECK(cr.ok);
}

TEST_CASE("criterion 10: CLI determinism") {
  Criterion cr(10, "check-all --json is byte-identical across two runs");
#ifndef PCPW_BIN
  FAIL("PCPW_BIN not defined");
#else
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  };
  const std::vector<std::string> files = {
      "f_triv.json",       "f_swap.json",  "f_s3.json",
      "f_halffix.json",    "f_triv2.json", "f_halffix_f2.json"};
  for (const auto& file : files) {
    std::string fixture = std::string(PCPW_FIXTURE_DIR) + "/" + file;
    std::string out1 = "acceptance_run1.json", out2 = "acceptance_run2.json";
    std::string base = std::string(PCPW_BIN) + " check-all " + fixture +
                       " --seed 0 --samples 5 --json ";
    int rc1 = std::system((base + out1 + " > /dev/null").c_str());
    int rc2 = std::system((base + out2 + " > /dev/null").c_str());
    bool ran = rc1 == 0 && rc2 == 0;
    bool same = slurp(out1) == slurp(out2) && !slurp(out1).empty();
    CHECK(ran);
    CHECK(same);
    cr.ok = cr.ok && ran && same;
    std::remove(out1.c_str());
    std::remove(out2.c_str());
  }
#endif
  cr.finish(cr.ok);
  CHECK(cr.ok);
}
