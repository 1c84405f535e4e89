#pragma once

#include "pcpw/algebra.hpp"
#include "pcpw/partial_action.hpp"

namespace pcpw {

/// The group algebra KH of a subgroup H of an ambient group, with basis
/// delta_h indexed by H's sorted ambient element indices.  Keeping ambient
/// indices lets conjugation and the transposition maps move coefficients
/// between different subgroup algebras of one group without relabeling.
struct GroupAlgebra {
  Subgroup sub;
  Algebra alg;

  std::size_t dim() const { return alg.dim; }
  /// delta_g as a coefficient vector (g an ambient element index).
  Vec delta(int ambient_elt) const;
};

GroupAlgebra build_group_algebra(const FiniteGroup& ambient,
                                 const Subgroup& h, const Field& f);
GroupAlgebra build_group_algebra(const FiniteGroup& g, const Field& f);

Subgroup whole_group(const FiniteGroup& g);

/// epsilon(sum c_h delta_h) = sum c_h.
Scalar augmentation(const GroupAlgebra& ga, const Vec& elt);
/// Kernel of the augmentation map; dimension |H| - 1.
Ideal augmentation_ideal(const GroupAlgebra& ga);

/// The domain D_g = KH cap ad_g(KH) of the adjoint partial action,
/// spanned by {delta_u : u in H cap gHg^-1}.
Subspace adjoint_domain(const GroupAlgebra& ga, const FiniteGroup& ambient,
                        int g);

/// Ad_g applied to an element supported in D_{g^-1}; throws if some
/// coefficient conjugates outside H.
Vec adjoint_apply(const GroupAlgebra& ga, const FiniteGroup& ambient, int g,
                  const Vec& elt);

/// I is normal relative to G when Ad_g(I cap D_{g^-1}) subseteq I for
/// every g; this is invariance under the adjoint partial action.
bool is_normal_relative(const GroupAlgebra& ga, const FiniteGroup& ambient,
                        const Ideal& i);

/// The adjoint partial action realized set-theoretically on the element
/// set of H (point j = j-th element of H), so the partial-action axioms
/// can be validated with the standard machinery.
PartialAction adjoint_partial_action(const FiniteGroup& ambient,
                                     const Subgroup& h);

/// delta_u -> delta_{k u k^-1} as a linear map K[from] -> K[to]; throws if
/// some conjugate leaves `to`.
Matrix conjugation_matrix(const FiniteGroup& ambient, const Subgroup& from,
                          const Subgroup& to, int k, const Field& f);

}  // namespace pcpw
