#include "pcpw/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace pcpw {

Vec zero_vec(const Field& f, std::size_t n) {
  return Vec(n, Scalar::zero(f));
}

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

void vec_axpy(Vec& acc, const Scalar& c, const Vec& v) {
  if (acc.size() != v.size()) throw std::invalid_argument("vector size mismatch");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * v[i];
}

Matrix Matrix::zero(const Field& f, std::size_t r, std::size_t c) {
  Matrix m;
  m.field = f;
  m.rows = r;
  m.cols = c;
  m.a.assign(r * c, Scalar::zero(f));
  return m;
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m = zero(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols,
                         const std::vector<Vec>& rows) {
  Matrix m = zero(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw std::invalid_argument("row length does not match column count");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  Vec v;
  v.reserve(cols);
  for (std::size_t j = 0; j < cols; ++j) v.push_back(at(r, j));
  return v;
}

Matrix Matrix::mul(const Matrix& rhs) const {
  if (cols != rhs.rows) throw std::invalid_argument("matrix shape mismatch");
  if (field != rhs.field) throw std::invalid_argument("matrix field mismatch");
  Matrix r = zero(field, rows, rhs.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols; ++j)
        r.at(i, j) += x * rhs.at(k, j);
    }
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols) throw std::invalid_argument("matrix/vector mismatch");
  Vec r = zero_vec(field, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    }
  return r;
}

Matrix Matrix::vstack(const Matrix& below) const {
  if (cols != below.cols || field != below.field)
    throw std::invalid_argument("vstack shape mismatch");
  Matrix m = *this;
  m.rows += below.rows;
  m.a.insert(m.a.end(), below.a.begin(), below.a.end());
  return m;
}

bool operator==(const Matrix& x, const Matrix& y) {
  if (x.field != y.field || x.rows != y.rows || x.cols != y.cols) return false;
  for (std::size_t i = 0; i < x.a.size(); ++i)
    if (x.a[i] != y.a[i]) return false;
  return true;
}

std::vector<std::size_t> rref_inplace(Matrix& m, Exec exec) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols && r < m.rows; ++col) {
    std::size_t piv = m.rows;
    for (std::size_t i = r; i < m.rows; ++i)
      if (!m.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols; ++j)
        std::swap(m.at(piv, j), m.at(r, j));
    Scalar inv = m.at(r, col).inverse();
    for (std::size_t j = col; j < m.cols; ++j) m.at(r, j) *= inv;
    // Eliminating the pivot column from the other rows is the data-parallel
    // part; each row update is independent, so the result is schedule-free.
    auto eliminate = [&](std::size_t i) {
      if (i == r) return;
      const Scalar c = m.at(i, col);
      if (c.is_zero()) return;
      for (std::size_t j = col; j < m.cols; ++j)
        m.at(i, j) -= c * m.at(r, j);
    };
#ifdef _OPENMP
    if (exec == Exec::parallel && m.rows >= 48) {
#pragma omp parallel for schedule(static)
      for (long long i = 0; i < static_cast<long long>(m.rows); ++i)
        eliminate(static_cast<std::size_t>(i));
    } else {
      for (std::size_t i = 0; i < m.rows; ++i) eliminate(i);
    }
#else
    (void)exec;
    for (std::size_t i = 0; i < m.rows; ++i) eliminate(i);
#endif
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

Subspace Subspace::zero(const Field& f, std::size_t ambient) {
  Subspace s(f, ambient);
  return s;
}

Subspace Subspace::full(const Field& f, std::size_t ambient) {
  Subspace s(f, ambient);
  s.basis_ = Matrix::identity(f, ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::span(const Field& f, std::size_t ambient,
                        const std::vector<Vec>& vectors) {
  Matrix m = Matrix::from_rows(f, ambient, vectors);
  auto pivots = rref_inplace(m);
  Subspace s(f, ambient);
  s.basis_ = Matrix::zero(f, pivots.size(), ambient);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < ambient; ++j) s.basis_.at(i, j) = m.at(i, j);
  s.pivots_ = pivots;
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("ambient mismatch");
  Vec r = v;
  for (std::size_t i = 0; i < basis_.rows; ++i) {
    const Scalar c = r[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = pivots_[i]; j < ambient_; ++j)
      r[j] -= c * basis_.at(i, j);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_ || other.field_ != field_)
    throw std::invalid_argument("ambient mismatch");
  for (std::size_t i = 0; i < other.basis_.rows; ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::vector<std::size_t> Subspace::complement_coords() const {
  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (next < pivots_.size() && pivots_[next] == j) {
      ++next;
    } else {
      out.push_back(j);
    }
  }
  return out;
}

Vec Subspace::project_complement(const Vec& v) const {
  Vec red = reduce(v);
  Vec out;
  for (std::size_t j : complement_coords()) out.push_back(red[j]);
  return out;
}

Vec Subspace::lift_complement(const Vec& coords) const {
  auto comp = complement_coords();
  if (coords.size() != comp.size())
    throw std::invalid_argument("quotient coordinate mismatch");
  Vec v = zero_vec(field_, ambient_);
  for (std::size_t i = 0; i < comp.size(); ++i) v[comp[i]] = coords[i];
  return v;
}

bool operator==(const Subspace& x, const Subspace& y) {
  return x.field_ == y.field_ && x.ambient_ == y.ambient_ &&
         x.basis_ == y.basis_;
}

std::string Subspace::to_string() const {
  std::ostringstream os;
  os << "span[";
  for (std::size_t i = 0; i < basis_.rows; ++i) {
    os << (i ? "; " : "") << "(";
    for (std::size_t j = 0; j < ambient_; ++j)
      os << (j ? "," : "") << basis_.at(i, j).to_string();
    os << ")";
  }
  os << "] in K^" << ambient_;
  return os.str();
}

void SpanBuilder::reduce_inplace(Vec& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = v[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = pivots_[i]; j < ambient_; ++j)
      v[j] -= c * rows_[i][j];
  }
}

bool SpanBuilder::add(Vec v) {
  if (v.size() != ambient_)
    throw std::invalid_argument("SpanBuilder ambient mismatch");
  reduce_inplace(v);
  std::size_t piv = ambient_;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (!v[j].is_zero()) {
      piv = j;
      break;
    }
  if (piv == ambient_) return false;
  Scalar inv = v[piv].inverse();
  for (std::size_t j = piv; j < ambient_; ++j) v[j] *= inv;
  for (auto& row : rows_) {
    const Scalar c = row[piv];
    if (c.is_zero()) continue;
    for (std::size_t j = piv; j < ambient_; ++j) row[j] -= c * v[j];
  }
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  std::size_t pos = static_cast<std::size_t>(it - pivots_.begin());
  pivots_.insert(it, piv);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool SpanBuilder::contains(Vec v) const {
  reduce_inplace(v);
  return is_zero_vec(v);
}

Subspace SpanBuilder::to_subspace() const {
  return Subspace::span(field_, ambient_, rows_);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || a.field() != b.field())
    throw std::invalid_argument("ambient mismatch");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.basis().row(i));
  for (std::size_t i = 0; i < b.dim(); ++i) rows.push_back(b.basis().row(i));
  return Subspace::span(a.field(), a.ambient(), rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || a.field() != b.field())
    throw std::invalid_argument("ambient mismatch");
  const std::size_t n = a.ambient();
  const Field& f = a.field();
  Matrix block = Matrix::zero(f, a.dim() + b.dim(), 2 * n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      block.at(i, j) = a.basis().at(i, j);
      block.at(i, n + j) = a.basis().at(i, j);
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      block.at(a.dim() + i, j) = b.basis().at(i, j);
  rref_inplace(block);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < block.rows; ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j)
      left_zero = block.at(i, j).is_zero();
    if (!left_zero) continue;
    Vec right;
    right.reserve(n);
    for (std::size_t j = 0; j < n; ++j) right.push_back(block.at(i, n + j));
    if (!is_zero_vec(right)) rows.push_back(std::move(right));
  }
  return Subspace::span(f, n, rows);
}

Subspace kernel(const Matrix& m) {
  Matrix r = m;
  auto pivots = rref_inplace(r);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> rows;
  for (std::size_t fcol = 0; fcol < m.cols; ++fcol) {
    if (is_pivot[fcol]) continue;
    Vec v = zero_vec(m.field, m.cols);
    v[fcol] = Scalar::one(m.field);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -r.at(i, fcol);
    rows.push_back(std::move(v));
  }
  return Subspace::span(m.field, m.cols, rows);
}

Subspace preimage(const Matrix& m, const Subspace& target) {
  if (target.ambient() != m.rows)
    throw std::invalid_argument("preimage: target ambient must equal row count");
  if (target.field() != m.field)
    throw std::invalid_argument("preimage: field mismatch");
  // P w = w - sum_i w[p_i] t_i vanishes exactly on the target row space.
  Matrix p = Matrix::identity(m.field, m.rows);
  for (std::size_t i = 0; i < target.dim(); ++i) {
    std::size_t pc = target.pivots()[i];
    for (std::size_t j = 0; j < m.rows; ++j)
      p.at(j, pc) -= target.basis().at(i, j);
  }
  return kernel(p.mul(m));
}

Subspace row_space(const Matrix& m) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < m.rows; ++i) rows.push_back(m.row(i));
  return Subspace::span(m.field, m.cols, rows);
}

Subspace col_space(const Matrix& m) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < m.cols; ++j) {
    Vec c;
    c.reserve(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) c.push_back(m.at(i, j));
    cols.push_back(std::move(c));
  }
  return Subspace::span(m.field, m.rows, cols);
}

}  // namespace pcpw
