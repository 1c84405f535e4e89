#pragma once

#include "pcpw/algebra.hpp"
#include "pcpw/group_algebra.hpp"
#include "pcpw/partial_action.hpp"

namespace pcpw {

/// The algebraic partial crossed product L_c(X) x| G of a finite partial
/// dynamical system, with basis e_{x,g} for x in X_g, ordered by
/// (g index, x).  On basis elements the product reads
///   e_{x,g} * e_{y,h} = [y in X_{g^-1} and theta_g(y) = x] e_{x,gh}.
struct CrossedProduct {
  PartialAction pa;
  Field field = Field::rationals();
  Algebra alg;
  std::vector<std::pair<int, int>> basis_pairs;  // (g, x), lexicographic
  std::vector<std::vector<int>> pair_index;      // [g][x] -> basis position

  int index_of(int g, int x) const { return pair_index[g][x]; }

  /// Embeds a function X -> K as sum f(x) e_{x,e}.
  Vec embed_function(const Vec& values_on_x) const;
  /// Coefficient function of b at group element g, as values on X.
  Vec coefficient_function(const Vec& b, int g) const;

  /// I_x = {f : f(x) = 0} inside the coefficient block, as a subspace of
  /// the whole algebra: span{e_{y,e} : y != x}.
  Subspace point_ideal(int x) const;
};

CrossedProduct build_crossed_product(const PartialAction& pa, const Field& f);

/// The conditional-expectation data at a point: the sub-crossed-product
/// over the restricted action of the isotropy group H, the projection E
/// onto it, the evaluation map nu at the point, and F = nu o E into KH.
struct IsotropyMaps {
  int x0 = -1;
  OrbitData od;
  Subgroup h;            // isotropy subgroup of the ambient group
  FiniteGroup h_group;   // its own table
  CrossedProduct cp_h;   // L_c(X) x| H
  GroupAlgebra kh;       // K H_x0, basis by ambient element index
  Matrix e_map;          // dim(cp_h) x dim(A)
  Matrix embed;          // dim(A) x dim(cp_h)
  Matrix nu_map;         // |H| x dim(cp_h)
  Matrix f_map;          // |H| x dim(A)
};

IsotropyMaps isotropy_maps(const CrossedProduct& cp, int x0);

}  // namespace pcpw
