#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pcpw/linalg.hpp"

namespace pcpw {

inline constexpr std::uint64_t kDefaultEnumCap = 1ull << 20;

/// A finite-dimensional associative algebra over an exact field, presented
/// by structure constants.  sc[i][j] is the coefficient vector of b_i*b_j.
struct Algebra {
  Field field = Field::rationals();
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<Vec>> sc;
  std::optional<Vec> unit;

  Vec basis_vec(std::size_t i) const { return unit_vec(field, dim, i); }
  Vec mul(const Vec& u, const Vec& v) const;
  Matrix left_mult_matrix(const Vec& v) const;   // w -> v*w
  Matrix right_mult_matrix(const Vec& v) const;  // w -> w*v

  /// First basis triple violating (b_i b_j) b_k = b_i (b_j b_k), if any.
  std::optional<std::tuple<std::size_t, std::size_t, std::size_t>>
  associativity_witness() const;
  /// Checks unit*b = b*unit = b on all basis elements (when a unit is set).
  bool unit_ok() const;

  std::string describe_element(const Vec& v) const;
};

/// A two-sided ideal, held as a canonical subspace of the parent's
/// coefficient space.  Operations taking an Algebra validate that the
/// subspace fits the parent (field and dimension).
struct Ideal {
  Subspace space;
  bool two_sided_verified = false;

  std::size_t dim() const { return space.dim(); }
  static Ideal zero(const Algebra& a);
  static Ideal whole(const Algebra& a);
  static Ideal from_subspace(const Algebra& a, Subspace s,
                             bool verified = false);
};

/// Smallest two-sided ideal containing the generators: the span is closed
/// under left/right multiplication by basis elements until a fixpoint.
Ideal ideal_generate(const Algebra& a, const std::vector<Vec>& gens);

/// Verifies A*I subseteq I and I*A subseteq I on basis generators.
bool ideal_is_two_sided(const Algebra& a, const Subspace& s);

enum class IdealOp { sum, intersect, product };
Ideal ideal_combine(const Algebra& a, IdealOp op, const Ideal& k,
                    const Ideal& l);
bool ideal_equals(const Ideal& k, const Ideal& l);
bool ideal_contains(const Ideal& k, const Ideal& l);  // l subseteq k
bool ideal_is_proper(const Algebra& a, const Ideal& k);

/// Quotient algebra A/J together with the projection (an algebra map with
/// kernel J) and a linear section.  The quotient basis corresponds to the
/// non-pivot coordinates of J's subspace.
struct QuotientAlgebra {
  Algebra alg;
  Matrix projection;  // dim(A/J) x dim(A)
  Matrix section;     // dim(A) x dim(A/J)
};
QuotientAlgebra quotient_algebra(const Algebra& a, const Ideal& j);

/// A finite-dimensional left module given by one action matrix per basis
/// element of the parent algebra.
struct AlgModule {
  Field field = Field::rationals();
  std::size_t dim = 0;
  std::vector<Matrix> action;  // action[i]: dim x dim

  Matrix act(const Vec& alg_elt) const;  // sum_i c_i action[i]
  /// Checks action(b_i*b_j) = action[i]*action[j] and unit -> identity.
  bool is_module_over(const Algebra& a) const;
};

AlgModule regular_module(const Algebra& a);
AlgModule zero_module(const Algebra& a);
/// V/W for an action-invariant subspace W.
AlgModule quotient_module(const AlgModule& v, const Subspace& w);

/// {b in A : action(b) = 0}; the kernel of b -> act(b), flagged two-sided.
Ideal module_annihilator(const Algebra& a, const AlgModule& v);

/// Closure of a vector under the module action, as a subspace.
Subspace submodule_closure(const AlgModule& v, const Vec& start);

/// True iff every nonzero vector generates the whole module.  Only
/// decidable here over prime fields: all |F|^dim vectors are enumerated
/// (throws cap_exceeded_error when that exceeds cap, and
/// unsupported_field_error over the rationals).  The zero module is not
/// irreducible.
bool module_is_irreducible(const Algebra& a, const AlgModule& v,
                           std::uint64_t cap = kDefaultEnumCap,
                           Exec exec = default_exec());

/// Exact enumerative primality: in Q = A/J every nonzero a must have
/// {b : a e_i b = 0 for all i} = 0.  Prime fields only, |F|^dim(A/J)
/// bounded by cap.  The whole algebra is not prime by convention.
bool ideal_is_prime(const Algebra& a, const Ideal& j,
                    std::uint64_t cap = kDefaultEnumCap,
                    Exec exec = default_exec());

/// Primitive == prime for these finite-dimensional algebras (a prime
/// finite-dimensional algebra is simple artinian, hence primitive).
inline bool ideal_is_primitive(const Algebra& a, const Ideal& j,
                               std::uint64_t cap = kDefaultEnumCap,
                               Exec exec = default_exec()) {
  return ideal_is_prime(a, j, cap, exec);
}

/// Meet-irreducibility via the minimal nonzero ideals of A/J: the zero
/// ideal of the quotient is meet-irreducible iff the quotient has a unique
/// minimal nonzero two-sided ideal.  The whole algebra is meet-irreducible
/// by convention.
bool ideal_is_meet_irreducible(const Algebra& a, const Ideal& j,
                               std::uint64_t cap = kDefaultEnumCap,
                               Exec exec = default_exec());

}  // namespace pcpw
