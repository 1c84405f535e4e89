#pragma once

#include "pcpw/induction.hpp"

namespace pcpw {

/// Induction data at two points of one system, for comparing ideals
/// induced at x0 and x1 and transposing between the two isotropy group
/// algebras.
struct TranspositionPair {
  const CrossedProduct* cp = nullptr;
  InductionContext ctx0;
  InductionContext ctx1;

  int x0() const { return ctx0.x0; }
  int x1() const { return ctx1.x0; }
};

TranspositionPair make_transposition_pair(const CrossedProduct& cp, int x0,
                                          int x1);

/// T1(I0) = F_{x1}(Ind_{x0}(I0)); always admissible at x1.
Ideal transpose(const TranspositionPair& pair, const Ideal& i0);

/// Psi_{k,l}(c) = P(delta_{k^-1} c delta_l): KH_{x1} -> KH_{x0}, P the
/// projection of KG onto KH_{x0}.
Vec psi(const TranspositionPair& pair, int k, int l, const Vec& c);
Matrix psi_matrix(const TranspositionPair& pair, int k, int l);

/// T1(I0) evaluated via Psi-preimages at the minimal neighborhood {x1}:
/// the intersection over k,l in S0 with theta_k(x0) = x1 of
/// Psi_{k,l}^{-1}(I0); the empty intersection is all of KH_{x1}.
Ideal transpose_via_psi(const TranspositionPair& pair, const Ideal& i0);

/// The strongly-regular form: intersection over k in S0 with
/// theta_k(x0) = x1 of delta_k I0 delta_{k^-1}.
Ideal strongly_regular_transpose(const TranspositionPair& pair,
                                 const Ideal& i0);

struct ComparisonReport {
  bool inputs_admissible = false;
  Ideal ind0, ind1;       // Ind_{x0}(I0), Ind_{x1}(I1)
  Ideal t1_of_i0, t0_of_i1;
  bool induced_equal = false;
  bool transposes_match = false;       // T1(I0) = I1 and T0(I1) = I0
  bool one_sided_inclusions = false;   // T1(I0) <= I1 and T0(I1) >= ...
  bool equivalences_hold = false;      // the three-way equivalence
  bool inclusion_equivalence = false;  // Ind0 <= Ind1 iff T1(I0) <= I1
  bool orbit_consequence = true;       // Orb(x1) <= Orb(x0) when applicable
  std::string witness;
};

/// Verifies the equality and inclusion equivalences for admissible input
/// ideals (throws on non-admissible input), plus the orbit-containment
/// consequence for proper ideals.
ComparisonReport induced_comparison(const TranspositionPair& pair,
                                    const Ideal& i0, const Ideal& i1);

}  // namespace pcpw
