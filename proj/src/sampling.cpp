#include "pcpw/sampling.hpp"

namespace pcpw {

std::uint64_t Sampler::uniform(std::uint64_t bound) {
  if (bound == 0) return 0;
  return eng_() % bound;
}

Scalar Sampler::scalar(const Field& f) {
  if (f.is_prime_field())
    return Scalar::from_int(f, static_cast<long long>(uniform(f.modulus())));
  // small rationals, biased toward integers and zero
  long long num = static_cast<long long>(uniform(9)) - 4;
  long long den = 1 + static_cast<long long>(uniform(3));
  if (uniform(2) == 0) den = 1;
  return Scalar::parse(f, std::to_string(num) + "/" + std::to_string(den));
}

Vec Sampler::vector(const Field& f, std::size_t n) {
  Vec v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(scalar(f));
  return v;
}

Subspace Sampler::subspace(const Field& f, std::size_t ambient) {
  std::size_t count = uniform(ambient + 1);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < count; ++i) rows.push_back(vector(f, ambient));
  return Subspace::span(f, ambient, rows);
}

Ideal Sampler::ideal(const Algebra& a, std::size_t max_gens) {
  std::size_t gens = 1 + uniform(max_gens);
  std::vector<Vec> g;
  for (std::size_t i = 0; i < gens; ++i) g.push_back(vector(a.field, a.dim));
  return ideal_generate(a, g);
}

}  // namespace pcpw
