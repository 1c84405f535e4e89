#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pcpw {

/// Execution policy for the enumeration kernels.  The serial path is the
/// reference implementation; the parallel path must produce bit-identical
/// results for any schedule, which every kernel here guarantees by reducing
/// with order-independent operations (min-index, set union with a final
/// deterministic sort).
enum class Exec { serial, parallel };

inline Exec& default_exec() {
  static Exec e = Exec::parallel;
  return e;
}

inline constexpr std::uint64_t kNoWitness =
    std::numeric_limits<std::uint64_t>::max();

/// Smallest index i in [begin, end) with pred(i) true, or kNoWitness.
/// The serial reference exits early; the parallel version scans in chunks
/// and reduces with min, so both return the same index.
template <class Pred>
std::uint64_t find_first_index(std::uint64_t begin, std::uint64_t end,
                               Pred&& pred, Exec exec = default_exec()) {
  if (begin >= end) return kNoWitness;
#ifdef _OPENMP
  if (exec == Exec::parallel && end - begin > 64) {
    std::uint64_t best = kNoWitness;
#pragma omp parallel
    {
      std::uint64_t local = kNoWitness;
#pragma omp for schedule(dynamic, 64) nowait
      for (long long i = static_cast<long long>(begin);
           i < static_cast<long long>(end); ++i) {
        if (local != kNoWitness) continue;  // cheap per-thread early-out
        if (pred(static_cast<std::uint64_t>(i)))
          local = static_cast<std::uint64_t>(i);
      }
#pragma omp critical
      {
        if (local < best) best = local;
      }
    }
    if (best == kNoWitness) return kNoWitness;
    // The per-thread early-out may have skipped indices below `best` in
    // other chunks; rescan the prefix serially so the witness is minimal.
    for (std::uint64_t i = begin; i < best; ++i)
      if (pred(i)) return i;
    return best;
  }
#else
  (void)exec;
#endif
  for (std::uint64_t i = begin; i < end; ++i)
    if (pred(i)) return i;
  return kNoWitness;
}

/// Applies fn to every index in [0, n); slots are independent.
template <class Fn>
void for_each_index(std::size_t n, Fn&& fn, Exec exec = default_exec()) {
#ifdef _OPENMP
  if (exec == Exec::parallel && n > 1) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      fn(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace pcpw
