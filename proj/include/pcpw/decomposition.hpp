#pragma once

#include "pcpw/induction.hpp"

namespace pcpw {

/// The discretization of the regular representation of A/J: the local
/// quotients V_x = V / [pi(I_x)V], the partial-isometry-like operators
/// u_g and their block forms U_g on the direct sum of the V_x, and the
/// orbit restrictions rho_x.
struct Discretization {
  Subspace j_space;
  AlgModule reg;               // V = A/J as an A-module
  Matrix reg_projection;       // dim(V) x dim(A)
  std::vector<Subspace> z;     // Z_x = [pi(I_x) V]
  std::vector<Matrix> qx;      // V -> V_x
  std::vector<Matrix> sx;      // section V_x -> V
  std::vector<std::size_t> vdim;    // dim V_x
  std::vector<std::size_t> offset;  // block offsets in sum_x V_x
  std::size_t total = 0;            // dim of sum_x V_x
  std::vector<Matrix> u;       // u_g = pi(1_{X_g} Delta_g), per g
  std::vector<Matrix> big_u;   // U_g on sum_x V_x, per g
  std::vector<Matrix> pi_u;    // (Pi x U)(e_{x,g}) per A basis element
};

/// mu_g^x : V_x -> V_{theta_g(x)} (x must lie in X_{g^-1}).
Matrix discretization_mu(const CrossedProduct& cp, const Discretization& d,
                         int g, int x);

Discretization discretize(const CrossedProduct& cp, const Ideal& j);

/// The regular A-module A/J (left multiplication on the quotient).
AlgModule regular_rep_mod_j(const CrossedProduct& cp, const Ideal& j);

/// rho_x: the restriction of Pi x U to W_x = sum over the orbit of x.
/// Returns the action matrices per A basis element, plus the coordinates
/// of W_x inside sum_x V_x.
struct OrbitRestriction {
  int rep = -1;
  std::vector<int> orbit;
  std::vector<std::size_t> coords;  // positions of W_x inside sum_x V_x
  std::vector<Matrix> action;       // per A basis element
};
OrbitRestriction rho_restriction(const CrossedProduct& cp,
                                 const Discretization& d, int x);

/// Ker(rho_x) = {b : rho_x(b) = 0} as an ideal of A.
Ideal ker_rho(const CrossedProduct& cp, const OrbitRestriction& rho);

struct EffrosHahnEntry {
  int rep = -1;
  Ideal i_prime;       // F_x(J)
  Ideal induced;       // Ind_x(I'_x)
  Ideal ker_rho_x;     // from the discretization
  bool ker_matches = false;
};

struct EffrosHahnReport {
  std::vector<EffrosHahnEntry> entries;
  Ideal intersection;   // cap_x Ind_x(I'_x)
  bool verdict = false; // J == intersection, and J == cap Ker(rho_x)
  std::string witness;
};

/// Verifies J = cap_x Ind_x(F_x(J)) over orbit representatives, and the
/// kernel route J = cap_x Ker(rho_x) with Ker(rho_x) = Ind_x(F_x(J)).
EffrosHahnReport effros_hahn_decompose(const CrossedProduct& cp,
                                       const Ideal& j);

struct TauReport {
  bool h_action_is_representation = false;
  bool bijective = false;
  bool covariant = false;
  bool ok = false;
  std::string witness;
};

/// Certifies the equivalence rho_x ~ induced representation of V_x via
/// the explicit map tau(delta_k (x) xi) = U_k(xi).
TauReport rho_equivalence_check(const CrossedProduct& cp, const Ideal& j,
                                int x);
TauReport rho_equivalence_check(const CrossedProduct& cp,
                                const Discretization& d, int x);

/// Counts ideals exactly (prime fields, within cap) or returns nullopt
/// over the rationals when the sound generator test is inconclusive.
std::optional<bool> algebra_is_simple(const Algebra& a,
                                      std::uint64_t cap = kDefaultEnumCap);

}  // namespace pcpw
