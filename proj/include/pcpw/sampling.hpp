#pragma once

#include <random>

#include "pcpw/algebra.hpp"

namespace pcpw {

/// Seeded deterministic sampling of small exact scalars, subspaces and
/// ideals for the randomized property suites.  All randomness flows from
/// the 64-bit seed, so reports embedding the seed are reproducible.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t uniform(std::uint64_t bound);  // in [0, bound)
  Scalar scalar(const Field& f);               // small values, often zero
  Vec vector(const Field& f, std::size_t n);
  Subspace subspace(const Field& f, std::size_t ambient);
  Ideal ideal(const Algebra& a, std::size_t max_gens = 2);

private:
  std::mt19937_64 eng_;
};

}  // namespace pcpw
