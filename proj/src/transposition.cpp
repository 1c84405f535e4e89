#include "pcpw/transposition.hpp"

#include <sstream>

namespace pcpw {

TranspositionPair make_transposition_pair(const CrossedProduct& cp, int x0,
                                          int x1) {
  TranspositionPair pair;
  pair.cp = &cp;
  pair.ctx0 = make_induction_context(cp, x0);
  pair.ctx1 = make_induction_context(cp, x1);
  return pair;
}

Ideal transpose(const TranspositionPair& pair, const Ideal& i0) {
  return f_of_ideal(pair.ctx1, induce_ideal(pair.ctx0, i0));
}

Matrix psi_matrix(const TranspositionPair& pair, int k, int l) {
  const auto& g = pair.cp->pa.group;
  const auto& h1 = pair.ctx1.maps.kh.sub;
  const auto& h0 = pair.ctx0.maps.kh.sub;
  Matrix m = Matrix::zero(pair.cp->field, h0.order(), h1.order());
  for (std::size_t j = 0; j < h1.order(); ++j) {
    int img = g.op(g.op(g.inverse(k), h1.elems[j]), l);
    int pos = h0.pos(img);
    if (pos >= 0)
      m.at(static_cast<std::size_t>(pos), j) = Scalar::one(pair.cp->field);
  }
  return m;
}

Vec psi(const TranspositionPair& pair, int k, int l, const Vec& c) {
  return psi_matrix(pair, k, l).apply(c);
}

Ideal transpose_via_psi(const TranspositionPair& pair, const Ideal& i0) {
  const auto& kh1 = pair.ctx1.kh();
  // empty intersections give the ambient algebra KH_{x1}
  Subspace acc = Subspace::full(pair.cp->field, kh1.dim);
  for (int k : pair.ctx0.od.S) {
    if (pair.cp->pa.apply(k, pair.x0()) != pair.x1()) continue;
    for (int l : pair.ctx0.od.S)
      acc = intersect(acc, preimage(psi_matrix(pair, k, l), i0.space));
  }
  return Ideal{std::move(acc), true};
}

Ideal strongly_regular_transpose(const TranspositionPair& pair,
                                 const Ideal& i0) {
  // x1 is strongly regular in the finite model; checked, not assumed
  if (!point_freeness(pair.cp->pa, pair.x1()).strongly_regular)
    throw std::logic_error("x1 is not strongly regular");
  const auto& g = pair.cp->pa.group;
  const auto& kh0 = pair.ctx0.maps.kh;
  const auto& kh1 = pair.ctx1.maps.kh;
  Subspace acc = Subspace::full(pair.cp->field, kh1.alg.dim);
  for (int k : pair.ctx0.od.S) {
    if (pair.cp->pa.apply(k, pair.x0()) != pair.x1()) continue;
    // delta_k I0 delta_{k^-1} lands in KH_{x1} since H_{x1} = k H_{x0} k^-1
    Matrix conj = conjugation_matrix(g, kh0.sub, kh1.sub, k, pair.cp->field);
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < i0.space.dim(); ++r)
      rows.push_back(conj.apply(i0.space.basis().row(r)));
    acc = intersect(acc,
                    Subspace::span(pair.cp->field, kh1.alg.dim, rows));
  }
  return Ideal{std::move(acc), true};
}

ComparisonReport induced_comparison(const TranspositionPair& pair,
                                    const Ideal& i0, const Ideal& i1) {
  ComparisonReport rep;
  rep.ind0 = induce_ideal(pair.ctx0, i0);
  rep.ind1 = induce_ideal(pair.ctx1, i1);
  // admissibility of the inputs, off the inductions just computed
  if (!(f_of_ideal(pair.ctx0, rep.ind0).space == i0.space) ||
      !(f_of_ideal(pair.ctx1, rep.ind1).space == i1.space))
    throw std::invalid_argument("induced_comparison needs admissible ideals");
  rep.inputs_admissible = true;
  std::ostringstream witness;

  // T1(I0) = F_{x1}(Ind_{x0}(I0)) and symmetrically
  rep.t1_of_i0 = f_of_ideal(pair.ctx1, rep.ind0);
  rep.t0_of_i1 = f_of_ideal(pair.ctx0, rep.ind1);

  rep.induced_equal = rep.ind0.space == rep.ind1.space;
  rep.transposes_match = rep.t1_of_i0.space == i1.space &&
                         rep.t0_of_i1.space == i0.space;
  rep.one_sided_inclusions = i1.space.contains(rep.t1_of_i0.space) &&
                             i0.space.contains(rep.t0_of_i1.space);
  // (i) <=> (ii) <=> (iii) of the equality theorem
  rep.equivalences_hold = (rep.induced_equal == rep.transposes_match) &&
                          (rep.induced_equal == rep.one_sided_inclusions);
  if (!rep.equivalences_hold) witness << "three-way equivalence broken; ";

  bool incl_ideals = rep.ind1.space.contains(rep.ind0.space);
  bool incl_transposed = i1.space.contains(rep.t1_of_i0.space);
  rep.inclusion_equivalence = incl_ideals == incl_transposed;
  if (!rep.inclusion_equivalence) witness << "inclusion equivalence broken; ";

  if (incl_ideals && ideal_is_proper(pair.ctx0.kh(), i0) &&
      ideal_is_proper(pair.ctx1.kh(), i1)) {
    // Ind0(I0) <= Ind1(I1) forces Orb(x1) <= Orb(x0) on the finite model
    auto orb0 = pair.ctx0.od.orbit;
    rep.orbit_consequence = true;
    for (int y : pair.ctx1.od.orbit)
      if (!std::binary_search(orb0.begin(), orb0.end(), y))
        rep.orbit_consequence = false;
    if (!rep.orbit_consequence) witness << "orbit containment fails; ";
  }
  rep.witness = witness.str();
  return rep;
}

}  // namespace pcpw
