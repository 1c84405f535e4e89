#pragma once

#include "pcpw/crossed_product.hpp"

namespace pcpw {

/// Everything needed to induce ideals and modules at a point x0: the
/// orbit data, the group algebra KH of the isotropy group, the maps
/// E/nu/F, the KH-valued bilinear form on M = span{delta_g : g in S},
/// and one bracket matrix b -> <delta_k, b delta_l> per pair (k,l).
struct InductionContext {
  const CrossedProduct* cp = nullptr;
  int x0 = -1;
  OrbitData od;
  IsotropyMaps maps;

  const Algebra& kh() const { return maps.kh.alg; }
  std::size_t s_size() const { return od.S.size(); }

  /// Position of g in S, or -1.
  int s_pos(int g) const;

  /// <delta_k, delta_l> = [k^-1 l in H] delta_{k^-1 l} (k, l in S).
  Vec form(int k, int l) const;
  /// Bilinear extension of the form to M x M -> KH.
  Vec pair_form(const Vec& m_coeffs, const Vec& n_coeffs) const;
  /// Right KH-action on M: delta_l . delta_h = delta_{lh}.
  Vec m_right_action(const Vec& m_coeffs, const Vec& kh_elt) const;
  /// Left A-action on M: (f D_g) delta_l = [gl in S] f(theta_{gl}(x0))
  /// delta_{gl}, extended bilinearly.
  Vec m_left_action(const Vec& b, const Vec& m_coeffs) const;

  /// Closed bracket formula <delta_k, b delta_l> =
  /// sum_{g in k H l^-1} f_g(theta_k(x0)) delta_{k^-1 g l}.
  Vec bracket(int k, const Vec& b, int l) const;
  /// Matrix of b -> bracket(k, b, l) (|H| x dim A), by S positions.
  const Matrix& bracket_matrix(std::size_t k_pos, std::size_t l_pos) const;

  /// F(b) = sum_{h in H} f_h(x0) delta_h, and the pieces E(b), nu(E(b)).
  Vec f_of(const Vec& b) const { return maps.f_map.apply(b); }
  Vec e_of(const Vec& b) const { return maps.e_map.apply(b); }
  Vec nu_of(const Vec& sub_b) const { return maps.nu_map.apply(sub_b); }

  std::vector<Matrix> brackets;  // indexed k_pos * |S| + l_pos
};

InductionContext make_induction_context(const CrossedProduct& cp, int x0);

/// Ind(I) = {b : <delta_k, b delta_l> in I for all k,l in S}, computed as
/// the intersection of the preimages of I under the bracket matrices,
/// realized as one kernel of the stacked residual maps (the elimination
/// inside is the parallel kernel).  Two-sidedness is by the alternative
/// description of induced ideals.
Ideal induce_ideal(const InductionContext& ctx, const Ideal& i);

/// Same intersection computed literally: one preimage per (k,l) pair
/// (evaluated independently, possibly in parallel) folded through
/// pairwise Zassenhaus intersections in a fixed order.
Ideal induce_ideal_by_fold(const InductionContext& ctx, const Ideal& i,
                           Exec exec = default_exec());

/// Independent route: Ind(I) = {b : F(u b v) in I for all basis u, v}.
Ideal induce_ideal_via_f(const InductionContext& ctx, const Ideal& i);

/// The induced A-module M (x)_{KH} V on the basis {delta_r (x) v_j},
/// r ranging over the coset representatives R.
AlgModule induce_module(const InductionContext& ctx, const AlgModule& v);

/// F(J) as an ideal of KH (span of F over a basis of J).
Ideal f_of_ideal(const InductionContext& ctx, const Ideal& j);

/// I' = F(Ind(I)); I is admissible iff I' = I.
Ideal reduce_to_admissible(const InductionContext& ctx, const Ideal& i);
bool admissible(const InductionContext& ctx, const Ideal& i);

/// The two neighborhood-style admissibility characterizations, evaluated
/// at the minimal neighborhood {x0}, plus agreement with admissible().
struct CharacterizationReport {
  bool admissible_by_definition = false;
  bool neighborhood_condition = false;  // conjugated truncations stay in I
  bool regular_point_condition = false; // delta_{k^-1} c delta_k in I
  bool all_agree = false;
  std::string witness;
};
CharacterizationReport characterization_checks(const InductionContext& ctx,
                                               const Ideal& i);

}  // namespace pcpw
