#pragma once

#include "pcpw/algebra.hpp"

namespace pcpw {

/// All two-sided ideals of a finite algebra over a prime field, as the
/// join-closure of the principal ideals (every ideal is a finite sum of
/// principal ones, so this is exhaustive).  Results are sorted by
/// (dimension, basis entries) and the enumeration requires |F|^dim <= cap.
std::vector<Ideal> enumerate_ideals(const Algebra& a,
                                    std::uint64_t cap = kDefaultEnumCap,
                                    Exec exec = default_exec());

/// All submodules of a module over a prime field, same method with the
/// one-sided closure.
std::vector<Subspace> enumerate_submodules(const AlgModule& v,
                                           std::uint64_t cap = kDefaultEnumCap,
                                           Exec exec = default_exec());

/// The irreducible modules of a (unital, finite-dimensional) algebra over
/// a prime field, obtained by exhaustion: every irreducible is a quotient
/// of the regular module by a maximal proper submodule.  Isomorphic
/// duplicates are not removed.
std::vector<AlgModule> irreducible_modules_by_exhaustion(
    const Algebra& a, std::uint64_t cap = kDefaultEnumCap,
    Exec exec = default_exec());

}  // namespace pcpw
