#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcpw/linalg.hpp"

namespace pcpw::fp {

/// Flat residue matrix used by the enumeration kernels.  The generic
/// Scalar-based path in linalg.hpp is the reference implementation these
/// kernels are tested against.
struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint32_t> a;

  static Mat zero(std::size_t r, std::size_t c) { return Mat{r, c, std::vector<std::uint32_t>(r * c, 0)}; }
  std::uint32_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

using Row = std::vector<std::uint32_t>;

Mat from_matrix(const Matrix& m);
Matrix to_matrix(const Field& f, const Mat& m);

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);
Row apply(const Mat& m, const Row& v, std::uint32_t p);

/// Rank by in-place Gaussian elimination.
std::size_t rank(Mat m, std::uint32_t p);

/// Incrementally maintained canonical RREF span.  add() reduces the vector,
/// and on growth re-eliminates the new pivot from the stored rows, so
/// rows() is the canonical RREF basis at every step.
class SpanAcc {
public:
  SpanAcc(std::size_t ambient, std::uint32_t p) : n_(ambient), p_(p) {}

  /// Returns true when the span grew.
  bool add(Row v);
  bool contains(Row v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Canonical key (rows are already RREF-sorted by pivot).
  std::string key() const;

private:
  void reduce_inplace(Row& v) const;
  std::size_t n_;
  std::uint32_t p_;
  std::vector<Row> rows_;            // sorted by pivot column
  std::vector<std::size_t> pivots_;  // ascending
};

/// Index <-> vector encoding for exhaustive enumeration: index digits in
/// base p, least significant digit first.
Row index_to_vector(std::uint64_t idx, std::size_t n, std::uint32_t p);

/// p^n, or kNoWitness on overflow past cap; throws cap_exceeded_error when
/// the count exceeds cap.
std::uint64_t checked_power(std::uint32_t p, std::size_t n, std::uint64_t cap);

/// Closure of start under the given matrices (a worklist span closure).
SpanAcc closure(const std::vector<Mat>& gens, const Row& start,
                std::uint32_t p);

Subspace to_subspace(const Field& f, const SpanAcc& acc);

}  // namespace pcpw::fp
