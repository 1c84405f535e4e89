#include <doctest.h>

#include "pcpw/enumeration.hpp"
#include "pcpw/fixtures.hpp"
#include "pcpw/group_algebra.hpp"
#include "pcpw/sampling.hpp"

using namespace pcpw;

namespace {

Vec e(const Algebra& a, std::size_t i) { return a.basis_vec(i); }

}  // namespace

TEST_CASE("ideal_generate on the fixture algebras") {
  Field q = Field::rationals();
  CrossedProduct hf = fixture_crossed_product("F-HALFFIX", q);
  // basis order: b0 = e[0,e], b1 = e[1,e], b2 = e[0,t]
  Ideal zero = ideal_generate(hf.alg, {});
  CHECK(zero.dim() == 0);
  Ideal jb1 = ideal_generate(hf.alg, {e(hf.alg, 1)});
  CHECK(jb1.space == Subspace::span(q, 3, {e(hf.alg, 1)}));
  CHECK(ideal_is_two_sided(hf.alg, jb1.space));

  CrossedProduct sw = fixture_crossed_product("F-SWAP", q);
  Ideal whole = ideal_generate(sw.alg, {e(sw.alg, 0)});
  CHECK(whole.dim() == 4);  // the swap crossed product is simple
}

TEST_CASE("ideal_combine: product, intersection, equality") {
  Field q = Field::rationals();
  CrossedProduct hf = fixture_crossed_product("F-HALFFIX", q);
  Ideal zero = Ideal::zero(hf.alg);
  Ideal whole = Ideal::whole(hf.alg);
  CHECK(ideal_combine(hf.alg, IdealOp::product, zero, whole).dim() == 0);

  Vec b0 = e(hf.alg, 0), b1 = e(hf.alg, 1), b2 = e(hf.alg, 2);
  Ideal big{Subspace::span(q, 3, {vec_sub(b0, b2), b1}), true};
  Ideal small{Subspace::span(q, 3, {b1}), true};
  CHECK(ideal_combine(hf.alg, IdealOp::intersect, big, small).space ==
        small.space);
  CHECK(ideal_equals(ideal_generate(hf.alg, {b1}), small));
  CHECK(ideal_contains(big, small));
  CHECK(!ideal_contains(small, big));
}

TEST_CASE("product of ideals lies inside the intersection") {
  Sampler s(42);
  for (const auto& name : fixture_names()) {
    CrossedProduct cp = fixture_crossed_product(name, Field::rationals());
    for (int i = 0; i < 5; ++i) {
      Ideal k = s.ideal(cp.alg), l = s.ideal(cp.alg);
      Ideal prod = ideal_combine(cp.alg, IdealOp::product, k, l);
      Ideal meet = ideal_combine(cp.alg, IdealOp::intersect, k, l);
      CHECK(meet.space.contains(prod.space));
      CHECK(ideal_is_two_sided(cp.alg, prod.space));
    }
  }
}

TEST_CASE("quotient algebra: trivial cases and the worked example") {
  Field q = Field::rationals();
  CrossedProduct hf = fixture_crossed_product("F-HALFFIX", q);
  QuotientAlgebra by_zero = quotient_algebra(hf.alg, Ideal::zero(hf.alg));
  CHECK(by_zero.alg.dim == 3);
  CHECK(!by_zero.alg.associativity_witness().has_value());
  QuotientAlgebra by_all = quotient_algebra(hf.alg, Ideal::whole(hf.alg));
  CHECK(by_all.alg.dim == 0);

  Ideal jb1 = ideal_generate(hf.alg, {e(hf.alg, 1)});
  QuotientAlgebra mod = quotient_algebra(hf.alg, jb1);
  CHECK(mod.alg.dim == 2);
  // images of b0 and b2 multiply like the group Z/2
  Vec u0 = mod.projection.apply(e(hf.alg, 0));
  Vec u2 = mod.projection.apply(e(hf.alg, 2));
  CHECK(mod.alg.mul(u2, u2) == u0);
  CHECK(mod.alg.mul(u0, u2) == u2);
  CHECK(!mod.alg.associativity_witness().has_value());
  CHECK(mod.alg.unit_ok());
  // projection is multiplicative with kernel exactly J
  Sampler s(3);
  for (int i = 0; i < 10; ++i) {
    Vec a = s.vector(q, 3), b = s.vector(q, 3);
    CHECK(mod.projection.apply(hf.alg.mul(a, b)) ==
          mod.alg.mul(mod.projection.apply(a), mod.projection.apply(b)));
  }
  CHECK(kernel(mod.projection) == jb1.space);
}

TEST_CASE("module annihilators") {
  Field q = Field::rationals();
  CrossedProduct tr = fixture_crossed_product("F-TRIV", q);
  // regular module of a unital algebra is faithful
  CHECK(module_annihilator(tr.alg, regular_module(tr.alg)).dim() == 0);
  // the zero module is annihilated by everything
  CHECK(module_annihilator(tr.alg, zero_module(tr.alg)).dim() == tr.alg.dim);

  // sign module of K[Z/2]: delta_t acts as -1; annihilator span{de + dt}
  GroupAlgebra kz2 = build_group_algebra(FiniteGroup::cyclic(2), q);
  AlgModule sign;
  sign.field = q;
  sign.dim = 1;
  sign.action.push_back(Matrix::identity(q, 1));
  Matrix neg = Matrix::identity(q, 1);
  neg.at(0, 0) = -Scalar::one(q);
  sign.action.push_back(neg);
  CHECK(sign.is_module_over(kz2.alg));
  Ideal ann = module_annihilator(kz2.alg, sign);
  Vec de_plus_dt = vec_add(kz2.delta(0), kz2.delta(1));
  CHECK(ann.space == Subspace::span(q, 2, {de_plus_dt}));
}

TEST_CASE("annihilator of the regular module of A/J is J") {
  Sampler s(9);
  for (const auto& name : {"F-HALFFIX", "F-SWAP", "F-S3"}) {
    CrossedProduct cp = fixture_crossed_product(name, Field::rationals());
    for (int i = 0; i < 4; ++i) {
      Ideal j = s.ideal(cp.alg);
      QuotientAlgebra q = quotient_algebra(cp.alg, j);
      AlgModule reg;
      reg.field = cp.field;
      reg.dim = q.alg.dim;
      for (std::size_t b = 0; b < cp.alg.dim; ++b) {
        Matrix act = Matrix::zero(cp.field, reg.dim, reg.dim);
        for (std::size_t c = 0; c < reg.dim; ++c) {
          Vec col = q.projection.apply(cp.alg.mul(
              cp.alg.basis_vec(b),
              q.section.apply(unit_vec(cp.field, reg.dim, c))));
          for (std::size_t r = 0; r < reg.dim; ++r) act.at(r, c) = col[r];
        }
        reg.action.push_back(std::move(act));
      }
      CHECK(module_annihilator(cp.alg, reg).space == j.space);
    }
  }
}

TEST_CASE("module irreducibility over prime fields") {
  Field f2 = Field::prime(2);
  GroupAlgebra kz2 = build_group_algebra(FiniteGroup::cyclic(2), f2);
  // one-dimensional nonzero module: no proper nonzero subspaces
  AlgModule triv;
  triv.field = f2;
  triv.dim = 1;
  triv.action.push_back(Matrix::identity(f2, 1));
  triv.action.push_back(Matrix::identity(f2, 1));
  CHECK(module_is_irreducible(kz2.alg, triv));

  // F2[Z/2] over itself has the radical as a proper invariant subspace
  AlgModule reg = regular_module(kz2.alg);
  CHECK(!module_is_irreducible(kz2.alg, reg));
  Subspace rad =
      submodule_closure(reg, vec_add(kz2.delta(0), kz2.delta(1)));
  CHECK(rad.dim() == 1);

  // the zero module is not irreducible
  CHECK(!module_is_irreducible(kz2.alg, zero_module(kz2.alg)));

  // unsupported over the rationals; cap errors surface as typed errors
  GroupAlgebra kq = build_group_algebra(FiniteGroup::cyclic(2),
                                        Field::rationals());
  CHECK_THROWS_AS(module_is_irreducible(kq.alg, regular_module(kq.alg)),
                  unsupported_field_error);
  CHECK_THROWS_AS(module_is_irreducible(kz2.alg, reg, /*cap=*/2),
                  cap_exceeded_error);
}

TEST_CASE("prime and meet-irreducible deciders on the worked examples") {
  Field f2 = Field::prime(2);
  CrossedProduct sw = fixture_crossed_product("F-SWAP", f2);
  // F-SWAP over F2 is M_2(F2): the zero ideal is prime
  CHECK(ideal_is_prime(sw.alg, Ideal::zero(sw.alg)));
  CHECK(ideal_is_meet_irreducible(sw.alg, Ideal::zero(sw.alg)));

  CrossedProduct hf = fixture_crossed_product("F-HALFFIX", f2);
  Ideal jb1 = ideal_generate(hf.alg, {e(hf.alg, 1)});
  // quotient is F2[Z/2], which has nilpotents: not prime, but its unique
  // minimal ideal (the radical) makes the zero ideal meet-irreducible
  CHECK(!ideal_is_prime(hf.alg, jb1));
  CHECK(ideal_is_meet_irreducible(hf.alg, jb1));

  // whole algebra: meet-irreducible but not prime, by convention
  CHECK(!ideal_is_prime(hf.alg, Ideal::whole(hf.alg)));
  CHECK(ideal_is_meet_irreducible(hf.alg, Ideal::whole(hf.alg)));

  CrossedProduct hq = fixture_crossed_product("F-HALFFIX", Field::rationals());
  CHECK_THROWS_AS(ideal_is_prime(hq.alg, Ideal::zero(hq.alg)),
                  unsupported_field_error);
}

TEST_CASE("deciders: parallel kernels match the serial reference") {
  Field f3 = Field::prime(3);
  CrossedProduct s3 = fixture_crossed_product("F-S3", f3);
  GroupAlgebra kg = build_group_algebra(s3.pa.group, f3);
  Sampler s(21);
  for (int i = 0; i < 3; ++i) {
    Ideal j = s.ideal(kg.alg);
    CHECK(ideal_is_prime(kg.alg, j, kDefaultEnumCap, Exec::serial) ==
          ideal_is_prime(kg.alg, j, kDefaultEnumCap, Exec::parallel));
    CHECK(ideal_is_meet_irreducible(kg.alg, j, kDefaultEnumCap,
                                    Exec::serial) ==
          ideal_is_meet_irreducible(kg.alg, j, kDefaultEnumCap,
                                    Exec::parallel));
  }
  AlgModule reg = regular_module(kg.alg);
  for (const auto& sub : enumerate_submodules(reg)) {
    if (sub.dim() == reg.dim) continue;
    AlgModule q = quotient_module(reg, sub);
    if (q.dim == 0) continue;
    CHECK(module_is_irreducible(kg.alg, q, kDefaultEnumCap, Exec::serial) ==
          module_is_irreducible(kg.alg, q, kDefaultEnumCap, Exec::parallel));
  }
}

TEST_CASE("associativity witness fires on a corrupted table") {
  Field q = Field::rationals();
  CrossedProduct hf = fixture_crossed_product("F-HALFFIX", q);
  Algebra broken = hf.alg;
  broken.sc[2][2] = broken.basis_vec(1);  // b2*b2 := b1 breaks associativity
  CHECK(broken.associativity_witness().has_value());
}
