#include "pcpw/fpkernel.hpp"

#include <algorithm>
#include <deque>

#include "pcpw/algebra.hpp"

namespace pcpw::fp {

Mat from_matrix(const Matrix& m) {
  if (!m.field.is_prime_field())
    throw unsupported_field_error("fp kernel needs a prime field");
  Mat r = Mat::zero(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) r.at(i, j) = m.at(i, j).residue();
  return r;
}

Matrix to_matrix(const Field& f, const Mat& m) {
  Matrix r = Matrix::zero(f, m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      r.at(i, j) = Scalar::from_int(f, m.at(i, j));
  return r;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  long long t = 0, newt = 1;
  long long r = p, newr = a % p;
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Row apply(const Mat& m, const Row& v, std::uint32_t p) {
  Row out(m.rows, 0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < m.cols; ++j) {
      acc += static_cast<std::uint64_t>(m.at(i, j)) * v[j] % p;
      if (acc >= (1ull << 62)) acc %= p;
    }
    out[i] = static_cast<std::uint32_t>(acc % p);
  }
  return out;
}

std::size_t rank(Mat m, std::uint32_t p) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols && r < m.rows; ++col) {
    std::size_t piv = m.rows;
    for (std::size_t i = r; i < m.rows; ++i)
      if (m.at(i, col) % p != 0) {
        piv = i;
        break;
      }
    if (piv == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    std::uint64_t inv = inv_mod(m.at(r, col), p);
    for (std::size_t j = col; j < m.cols; ++j)
      m.at(r, j) = static_cast<std::uint32_t>(m.at(r, j) * inv % p);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      std::uint64_t c = m.at(i, col) % p;
      if (!c) continue;
      for (std::size_t j = col; j < m.cols; ++j) {
        std::uint64_t sub = c * m.at(r, j) % p;
        m.at(i, j) = static_cast<std::uint32_t>((m.at(i, j) + p - sub) % p);
      }
    }
    ++r;
  }
  return r;
}

void SpanAcc::reduce_inplace(Row& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::uint64_t c = v[pivots_[i]] % p_;
    if (!c) continue;
    const Row& row = rows_[i];
    for (std::size_t j = pivots_[i]; j < n_; ++j) {
      std::uint64_t sub = c * row[j] % p_;
      v[j] = static_cast<std::uint32_t>((v[j] + p_ - sub) % p_);
    }
  }
}

bool SpanAcc::add(Row v) {
  if (v.size() != n_) throw std::invalid_argument("SpanAcc ambient mismatch");
  for (auto& x : v) x %= p_;
  reduce_inplace(v);
  std::size_t piv = n_;
  for (std::size_t j = 0; j < n_; ++j)
    if (v[j]) {
      piv = j;
      break;
    }
  if (piv == n_) return false;
  std::uint64_t inv = inv_mod(v[piv], p_);
  for (std::size_t j = piv; j < n_; ++j)
    v[j] = static_cast<std::uint32_t>(v[j] * inv % p_);
  // clear the new pivot column in existing rows to stay RREF-canonical
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::uint64_t c = rows_[i][piv] % p_;
    if (!c) continue;
    for (std::size_t j = piv; j < n_; ++j) {
      std::uint64_t sub = c * v[j] % p_;
      rows_[i][j] =
          static_cast<std::uint32_t>((rows_[i][j] + p_ - sub) % p_);
    }
  }
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  std::size_t pos = static_cast<std::size_t>(it - pivots_.begin());
  pivots_.insert(it, piv);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool SpanAcc::contains(Row v) const {
  for (auto& x : v) x %= p_;
  reduce_inplace(v);
  for (auto x : v)
    if (x) return false;
  return true;
}

std::string SpanAcc::key() const {
  std::string k;
  k.reserve(rows_.size() * (n_ * 3 + 1));
  for (const auto& r : rows_) {
    for (auto x : r) {
      k += std::to_string(x);
      k += ',';
    }
    k += ';';
  }
  return k;
}

Row index_to_vector(std::uint64_t idx, std::size_t n, std::uint32_t p) {
  Row v(n, 0);
  for (std::size_t i = 0; i < n && idx; ++i) {
    v[i] = static_cast<std::uint32_t>(idx % p);
    idx /= p;
  }
  return v;
}

std::uint64_t checked_power(std::uint32_t p, std::size_t n, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > cap / p)
      throw cap_exceeded_error("enumeration size " + std::to_string(p) + "^" +
                               std::to_string(n) + " exceeds cap " +
                               std::to_string(cap));
    total *= p;
  }
  if (total > cap)
    throw cap_exceeded_error("enumeration size exceeds cap");
  return total;
}

SpanAcc closure(const std::vector<Mat>& gens, const Row& start,
                std::uint32_t p) {
  std::size_t n = start.size();
  SpanAcc acc(n, p);
  std::deque<Row> work;
  if (acc.add(start)) work.push_back(start);
  while (!work.empty()) {
    Row w = std::move(work.front());
    work.pop_front();
    for (const auto& g : gens) {
      Row img = apply(g, w, p);
      if (acc.add(img)) work.push_back(std::move(img));
    }
  }
  return acc;
}

Subspace to_subspace(const Field& f, const SpanAcc& acc) {
  std::vector<Vec> rows;
  for (const auto& r : acc.rows()) {
    Vec v;
    v.reserve(acc.ambient());
    for (auto x : r) v.push_back(Scalar::from_int(f, x));
    rows.push_back(std::move(v));
  }
  return Subspace::span(f, acc.ambient(), rows);
}

}  // namespace pcpw::fp
