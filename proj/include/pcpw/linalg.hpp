#pragma once

#include <cstddef>
#include <vector>

#include "pcpw/field.hpp"
#include "pcpw/parallel.hpp"

namespace pcpw {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
void vec_axpy(Vec& acc, const Scalar& c, const Vec& v);  // acc += c*v

/// Dense exact matrix, row-major.
struct Matrix {
  Field field = Field::rationals();
  std::size_t rows = 0, cols = 0;
  std::vector<Scalar> a;

  static Matrix zero(const Field& f, std::size_t r, std::size_t c);
  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(const Field& f, std::size_t cols,
                          const std::vector<Vec>& rows);

  Scalar& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const {
    return a[r * cols + c];
  }
  Vec row(std::size_t r) const;

  Matrix mul(const Matrix& rhs) const;
  Vec apply(const Vec& v) const;  // M * v
  Matrix vstack(const Matrix& below) const;

  friend bool operator==(const Matrix& x, const Matrix& y);
};

/// In-place reduced row echelon form.  Pivot choice is the first nonzero
/// entry in column order, leading entries are normalized to 1, and entries
/// above and below each pivot are cleared, so the result is the canonical
/// RREF of the row space.  Returns the pivot columns.
std::vector<std::size_t> rref_inplace(Matrix& m, Exec exec = default_exec());

/// A linear subspace of K^n held as its canonical RREF basis (no zero
/// rows).  Two subspaces are equal as sets iff their representations are
/// identical, which is what operator== compares.
class Subspace {
public:
  /// Zero subspace of the zero space; a placeholder to assign over.
  Subspace() : Subspace(Field::rationals(), 0) {}

  static Subspace zero(const Field& f, std::size_t ambient);
  static Subspace full(const Field& f, std::size_t ambient);
  static Subspace span(const Field& f, std::size_t ambient,
                       const std::vector<Vec>& vectors);

  const Field& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows; }
  bool is_zero() const { return basis_.rows == 0; }
  bool is_full() const { return basis_.rows == ambient_; }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  /// Residual of v after elimination by the basis; zero iff v lies here.
  Vec reduce(const Vec& v) const;

  /// Coordinates not used as pivots; they index a complement of the
  /// subspace, i.e. a basis of the quotient K^n / this.
  std::vector<std::size_t> complement_coords() const;
  /// Linear projection K^n -> K^(n-dim) with kernel exactly this subspace.
  Vec project_complement(const Vec& v) const;
  /// Section of project_complement (coefficients placed at non-pivots).
  Vec lift_complement(const Vec& coords) const;

  friend bool operator==(const Subspace& x, const Subspace& y);
  friend bool operator!=(const Subspace& x, const Subspace& y) {
    return !(x == y);
  }

  std::string to_string() const;

private:
  Subspace(const Field& f, std::size_t ambient) : field_(f), ambient_(ambient) {
    basis_.field = f;
    basis_.cols = ambient;
  }
  Field field_;
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Incrementally maintained RREF span, for worklist closures.  add()
/// reduces the vector and, on growth, re-eliminates the new pivot from
/// the stored rows, so the rows are canonical at every step.
class SpanBuilder {
public:
  SpanBuilder(const Field& f, std::size_t ambient)
      : field_(f), ambient_(ambient) {}

  bool add(Vec v);  // true when the span grew
  bool contains(Vec v) const;
  std::size_t dim() const { return rows_.size(); }
  Subspace to_subspace() const;

private:
  void reduce_inplace(Vec& v) const;
  Field field_;
  std::size_t ambient_;
  std::vector<Vec> rows_;            // sorted by pivot
  std::vector<std::size_t> pivots_;  // ascending
};

Subspace sum(const Subspace& a, const Subspace& b);

/// Intersection by the Zassenhaus block method: row-reduce [A|A; B|0] and
/// read the intersection off the rows whose left half vanished.
Subspace intersect(const Subspace& a, const Subspace& b);

/// Kernel {v : M v = 0} as a canonical subspace of K^cols.
Subspace kernel(const Matrix& m);

/// {v in K^n : M v in target}, computed as the kernel of P*M where P is a
/// projection annihilating the target.
Subspace preimage(const Matrix& m, const Subspace& target);

/// Row space and column space.
Subspace row_space(const Matrix& m);
Subspace col_space(const Matrix& m);

}  // namespace pcpw
