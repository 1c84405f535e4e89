#include <doctest.h>

#include "pcpw/enumeration.hpp"
#include "pcpw/fixtures.hpp"
#include "pcpw/transposition.hpp"

using namespace pcpw;

namespace {

std::vector<std::pair<std::string, Ideal>> kh_ideal_list(
    const InductionContext& ctx) {
  std::vector<std::pair<std::string, Ideal>> out;
  out.emplace_back("zero", Ideal::zero(ctx.kh()));
  if (ctx.kh().dim > 1)
    out.emplace_back("aug", augmentation_ideal(ctx.maps.kh));
  out.emplace_back("KH", Ideal::whole(ctx.kh()));
  return out;
}

}  // namespace

TEST_CASE("transposition on F-SWAP and the disjoint-orbit fixture") {
  Field q = Field::rationals();
  CrossedProduct sw = fixture_crossed_product("F-SWAP", q);
  TranspositionPair pair = make_transposition_pair(sw, 0, 1);
  CHECK(transpose(pair, Ideal::zero(pair.ctx0.kh())).dim() == 0);
  CHECK(transpose(pair, Ideal::whole(pair.ctx0.kh())).space.is_full());

  // two fixed points in different orbits: everything transposes to KH_1
  CrossedProduct tw = fixture_crossed_product("F-TRIV2", q);
  TranspositionPair dis = make_transposition_pair(tw, 0, 1);
  CHECK(transpose(dis, Ideal::zero(dis.ctx0.kh())).space.is_full());
  CHECK(transpose_via_psi(dis, Ideal::zero(dis.ctx0.kh())).space.is_full());
  CHECK(strongly_regular_transpose(dis, Ideal::zero(dis.ctx0.kh()))
            .space.is_full());
}

TEST_CASE("psi maps") {
  Field q = Field::rationals();
  CrossedProduct sw = fixture_crossed_product("F-SWAP", q);
  TranspositionPair pair = make_transposition_pair(sw, 0, 1);
  // both isotropy groups trivial: Psi_{t,t}(d_e) = d_e
  Vec de = unit_vec(q, 1, 0);
  CHECK(psi(pair, 1, 1, de) == de);
  // k = l = e with equal isotropy groups: the identity on the common part
  TranspositionPair self = make_transposition_pair(sw, 0, 0);
  CHECK(psi(self, 0, 0, de) == de);

  // S3: conjugating the nontrivial element of H_1 back into H_0
  CrossedProduct s3 = fixture_crossed_product("F-S3", q);
  TranspositionPair p01 = make_transposition_pair(s3, 0, 1);
  int k = -1;
  for (int g : p01.ctx0.od.S)
    if (s3.pa.apply(g, 0) == 1) {
      k = g;
      break;
    }
  REQUIRE(k >= 0);
  const auto& h1 = p01.ctx1.maps.kh.sub;
  const auto& h0 = p01.ctx0.maps.kh.sub;
  Vec ds = unit_vec(q, 2, 1);  // the nontrivial element of H_1
  Vec img = psi(p01, k, k, ds);
  int s = h1.elems[1];
  int conj = s3.pa.group.op(
      s3.pa.group.op(s3.pa.group.inverse(k), s), k);
  REQUIRE(h0.contains(conj));
  CHECK(img == unit_vec(q, 2, static_cast<std::size_t>(h0.pos(conj))));
}

TEST_CASE("strongly regular transposition on worked examples") {
  Field q = Field::rationals();
  // conjugating an ideal of KH by its own elements returns the ideal
  CrossedProduct hf = fixture_crossed_product("F-HALFFIX", q);
  TranspositionPair self = make_transposition_pair(hf, 0, 0);
  Ideal aug = augmentation_ideal(self.ctx0.maps.kh);
  CHECK(strongly_regular_transpose(self, aug).space == aug.space);

  // S3: the augmentation ideal of Q[H_0] transposes to that of Q[H_1]
  CrossedProduct s3 = fixture_crossed_product("F-S3", q);
  TranspositionPair p01 = make_transposition_pair(s3, 0, 1);
  Ideal aug0 = augmentation_ideal(p01.ctx0.maps.kh);
  Ideal aug1 = augmentation_ideal(p01.ctx1.maps.kh);
  CHECK(strongly_regular_transpose(p01, aug0).space == aug1.space);
  CHECK(transpose(p01, aug0).space == aug1.space);
}

TEST_CASE("the three transposition routes agree everywhere") {
  for (const auto& name : fixture_names()) {
    for (const Field& f : {Field::rationals(), Field::prime(2)}) {
      CrossedProduct cp = fixture_crossed_product(name, f);
      for (int x0 = 0; x0 < static_cast<int>(cp.pa.space); ++x0)
        for (int x1 = 0; x1 < static_cast<int>(cp.pa.space); ++x1) {
          TranspositionPair pair = make_transposition_pair(cp, x0, x1);
          for (const auto& [nm, i0] : kh_ideal_list(pair.ctx0)) {
            Ideal a = transpose(pair, i0);
            Ideal b = transpose_via_psi(pair, i0);
            Ideal c = strongly_regular_transpose(pair, i0);
            INFO(name, " ", f.name(), " (", x0, ",", x1, ") ", nm);
            CHECK(a.space == b.space);
            CHECK(a.space == c.space);
            CHECK(admissible(pair.ctx1, a));
          }
        }
    }
  }
}

TEST_CASE("enumerated F2 ideals transpose consistently too") {
  Field f2 = Field::prime(2);
  for (const auto& name : {"F-HALFFIX", "F-S3", "F-TRIV2"}) {
    CrossedProduct cp = fixture_crossed_product(name, f2);
    for (int x0 = 0; x0 < static_cast<int>(cp.pa.space); ++x0)
      for (int x1 = 0; x1 < static_cast<int>(cp.pa.space); ++x1) {
        TranspositionPair pair = make_transposition_pair(cp, x0, x1);
        for (const auto& i0 : enumerate_ideals(pair.ctx0.kh())) {
          Ideal a = transpose(pair, i0);
          CHECK(a.space == transpose_via_psi(pair, i0).space);
          CHECK(a.space == strongly_regular_transpose(pair, i0).space);
        }
      }
  }
}

TEST_CASE("self-transposition is the admissible reduction") {
  for (const auto& name : fixture_names()) {
    CrossedProduct cp = fixture_crossed_product(name, Field::rationals());
    for (int x0 = 0; x0 < static_cast<int>(cp.pa.space); ++x0) {
      TranspositionPair self = make_transposition_pair(cp, x0, x0);
      for (const auto& [nm, i0] : kh_ideal_list(self.ctx0)) {
        Ideal t = transpose(self, i0);
        CHECK(t.space == reduce_to_admissible(self.ctx0, i0).space);
        // on the finite model every ideal is admissible, so this is the
        // identity
        CHECK(t.space == i0.space);
      }
    }
  }
}

TEST_CASE("comparison equivalences") {
  Field q = Field::rationals();
  CrossedProduct sw = fixture_crossed_product("F-SWAP", q);
  TranspositionPair pair = make_transposition_pair(sw, 0, 1);
  auto rep = induced_comparison(pair, Ideal::zero(pair.ctx0.kh()),
                                Ideal::zero(pair.ctx1.kh()));
  CHECK(rep.induced_equal);
  CHECK(rep.transposes_match);
  CHECK(rep.equivalences_hold);
  CHECK(rep.inclusion_equivalence);

  // F-HALFFIX, I0 = augmentation at 0, I1 = {0} at 1: inclusion fails in
  // both directions, consistently
  CrossedProduct hf = fixture_crossed_product("F-HALFFIX", q);
  TranspositionPair hp = make_transposition_pair(hf, 0, 1);
  Ideal aug0 = augmentation_ideal(hp.ctx0.maps.kh);
  auto hrep = induced_comparison(hp, aug0, Ideal::zero(hp.ctx1.kh()));
  CHECK(!hrep.induced_equal);
  CHECK(hrep.equivalences_hold);
  CHECK(hrep.inclusion_equivalence);
  CHECK(hrep.ind0.space ==
        Subspace::span(q, 3,
                       {vec_sub(hf.alg.basis_vec(0), hf.alg.basis_vec(2)),
                        hf.alg.basis_vec(1)}));
  // Ind_1({0}) = span{b0, b2}
  CHECK(hrep.ind1.space ==
        Subspace::span(q, 3, {hf.alg.basis_vec(0), hf.alg.basis_vec(2)}));
  // T1(I0) = KH_1, which is not inside I1 = {0}
  CHECK(hrep.t1_of_i0.space.is_full());

  // every fixture, every point pair, every canonical admissible pair
  for (const auto& name : fixture_names()) {
    CrossedProduct cp = fixture_crossed_product(name, q);
    for (int x0 = 0; x0 < static_cast<int>(cp.pa.space); ++x0)
      for (int x1 = 0; x1 < static_cast<int>(cp.pa.space); ++x1) {
        TranspositionPair p = make_transposition_pair(cp, x0, x1);
        for (const auto& [n0, i0] : kh_ideal_list(p.ctx0))
          for (const auto& [n1, i1] : kh_ideal_list(p.ctx1)) {
            auto r = induced_comparison(p, i0, i1);
            INFO(name, " (", x0, ",", x1, ") ", n0, " vs ", n1);
            CHECK(r.equivalences_hold);
            CHECK(r.inclusion_equivalence);
            CHECK(r.orbit_consequence);
          }
      }
  }
}
