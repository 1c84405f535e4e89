#include "pcpw/algebra.hpp"

#include <map>
#include <sstream>

#include "pcpw/fpkernel.hpp"

namespace pcpw {

Vec Algebra::mul(const Vec& u, const Vec& v) const {
  if (u.size() != dim || v.size() != dim)
    throw std::invalid_argument("element does not belong to this algebra");
  Vec r = zero_vec(field, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (v[j].is_zero()) continue;
      vec_axpy(r, u[i] * v[j], sc[i][j]);
    }
  }
  return r;
}

Matrix Algebra::left_mult_matrix(const Vec& v) const {
  Matrix m = Matrix::zero(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Vec col = mul(v, basis_vec(j));
    for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = col[i];
  }
  return m;
}

Matrix Algebra::right_mult_matrix(const Vec& v) const {
  Matrix m = Matrix::zero(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Vec col = mul(basis_vec(j), v);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = col[i];
  }
  return m;
}

std::optional<std::tuple<std::size_t, std::size_t, std::size_t>>
Algebra::associativity_witness() const {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const Vec& ij = sc[i][j];
      for (std::size_t k = 0; k < dim; ++k) {
        Vec lhs = mul(ij, basis_vec(k));
        Vec rhs = mul(basis_vec(i), sc[j][k]);
        if (lhs != rhs) return std::make_tuple(i, j, k);
      }
    }
  return std::nullopt;
}

bool Algebra::unit_ok() const {
  if (!unit) return true;
  for (std::size_t i = 0; i < dim; ++i) {
    Vec b = basis_vec(i);
    if (mul(*unit, b) != b || mul(b, *unit) != b) return false;
  }
  return true;
}

std::string Algebra::describe_element(const Vec& v) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < dim; ++i) {
    if (v[i].is_zero()) continue;
    if (!first) os << " + ";
    if (!v[i].is_one()) os << v[i].to_string() << "*";
    os << labels[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Ideal Ideal::zero(const Algebra& a) {
  return Ideal{Subspace::zero(a.field, a.dim), true};
}

Ideal Ideal::whole(const Algebra& a) {
  return Ideal{Subspace::full(a.field, a.dim), true};
}

Ideal Ideal::from_subspace(const Algebra& a, Subspace s, bool verified) {
  if (s.ambient() != a.dim || s.field() != a.field)
    throw std::invalid_argument("subspace does not fit the algebra");
  return Ideal{std::move(s), verified};
}

Ideal ideal_generate(const Algebra& a, const std::vector<Vec>& gens) {
  // worklist closure under multiplication by basis elements; saturation at
  // full dimension short-circuits to the whole algebra
  SpanBuilder acc(a.field, a.dim);
  std::vector<Vec> work;
  for (const Vec& g : gens) {
    if (g.size() != a.dim)
      throw std::invalid_argument("generator does not belong to this algebra");
    if (acc.add(g)) work.push_back(g);
  }
  while (!work.empty() && acc.dim() < a.dim) {
    Vec v = std::move(work.back());
    work.pop_back();
    for (std::size_t i = 0; i < a.dim && acc.dim() < a.dim; ++i) {
      Vec left = zero_vec(a.field, a.dim);   // b_i * v
      Vec right = zero_vec(a.field, a.dim);  // v * b_i
      for (std::size_t j = 0; j < a.dim; ++j) {
        if (v[j].is_zero()) continue;
        vec_axpy(left, v[j], a.sc[i][j]);
        vec_axpy(right, v[j], a.sc[j][i]);
      }
      if (acc.add(left)) work.push_back(std::move(left));
      if (acc.add(right)) work.push_back(std::move(right));
    }
  }
  if (acc.dim() == a.dim) return Ideal::whole(a);
  return Ideal{acc.to_subspace(), true};
}

bool ideal_is_two_sided(const Algebra& a, const Subspace& s) {
  for (std::size_t r = 0; r < s.dim(); ++r) {
    Vec v = s.basis().row(r);
    for (std::size_t i = 0; i < a.dim; ++i) {
      if (!s.contains(a.mul(a.basis_vec(i), v))) return false;
      if (!s.contains(a.mul(v, a.basis_vec(i)))) return false;
    }
  }
  return true;
}

Ideal ideal_combine(const Algebra& a, IdealOp op, const Ideal& k,
                    const Ideal& l) {
  if (k.space.ambient() != a.dim || l.space.ambient() != a.dim ||
      k.space.field() != a.field || l.space.field() != a.field)
    throw std::invalid_argument("ideal does not fit the algebra");
  switch (op) {
    case IdealOp::sum:
      return Ideal{sum(k.space, l.space),
                   k.two_sided_verified && l.two_sided_verified};
    case IdealOp::intersect:
      return Ideal{intersect(k.space, l.space),
                   k.two_sided_verified && l.two_sided_verified};
    case IdealOp::product: {
      // For two-sided ideals the span of pairwise products of spanning
      // sets is itself two-sided: a(k l) = (a k) l lands back in the span
      // since a k lies in K, and symmetrically on the right.
      std::vector<Vec> prods;
      for (std::size_t i = 0; i < k.space.dim(); ++i)
        for (std::size_t j = 0; j < l.space.dim(); ++j)
          prods.push_back(
              a.mul(k.space.basis().row(i), l.space.basis().row(j)));
      return Ideal{Subspace::span(a.field, a.dim, prods),
                   k.two_sided_verified && l.two_sided_verified};
    }
  }
  throw std::logic_error("unreachable");
}

bool ideal_equals(const Ideal& k, const Ideal& l) { return k.space == l.space; }

bool ideal_contains(const Ideal& k, const Ideal& l) {
  return k.space.contains(l.space);
}

bool ideal_is_proper(const Algebra& a, const Ideal& k) {
  return k.space.dim() < a.dim;
}

QuotientAlgebra quotient_algebra(const Algebra& a, const Ideal& j) {
  if (j.space.ambient() != a.dim || j.space.field() != a.field)
    throw std::invalid_argument("ideal does not fit the algebra");
  auto comp = j.space.complement_coords();
  const std::size_t qdim = comp.size();
  QuotientAlgebra out;
  out.projection = Matrix::zero(a.field, qdim, a.dim);
  for (std::size_t c = 0; c < a.dim; ++c) {
    Vec img = j.space.project_complement(unit_vec(a.field, a.dim, c));
    for (std::size_t r = 0; r < qdim; ++r) out.projection.at(r, c) = img[r];
  }
  out.section = Matrix::zero(a.field, a.dim, qdim);
  for (std::size_t r = 0; r < qdim; ++r)
    out.section.at(comp[r], r) = Scalar::one(a.field);
  out.alg.field = a.field;
  out.alg.dim = qdim;
  for (std::size_t r = 0; r < qdim; ++r)
    out.alg.labels.push_back(a.labels[comp[r]]);
  out.alg.sc.assign(qdim, std::vector<Vec>(qdim, zero_vec(a.field, qdim)));
  for (std::size_t i = 0; i < qdim; ++i)
    for (std::size_t k = 0; k < qdim; ++k) {
      Vec prod = a.mul(out.section.apply(unit_vec(a.field, qdim, i)),
                       out.section.apply(unit_vec(a.field, qdim, k)));
      out.alg.sc[i][k] = out.projection.apply(prod);
    }
  if (a.unit && qdim > 0) out.alg.unit = out.projection.apply(*a.unit);
  return out;
}

Matrix AlgModule::act(const Vec& alg_elt) const {
  Matrix m = Matrix::zero(field, dim, dim);
  for (std::size_t i = 0; i < alg_elt.size(); ++i) {
    if (alg_elt[i].is_zero()) continue;
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c)
        m.at(r, c) += alg_elt[i] * action[i].at(r, c);
  }
  return m;
}

bool AlgModule::is_module_over(const Algebra& a) const {
  if (action.size() != a.dim || field != a.field) return false;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      if (!(act(a.sc[i][j]) == action[i].mul(action[j]))) return false;
  if (a.unit && dim > 0)
    if (!(act(*a.unit) == Matrix::identity(field, dim))) return false;
  return true;
}

AlgModule regular_module(const Algebra& a) {
  AlgModule v;
  v.field = a.field;
  v.dim = a.dim;
  for (std::size_t i = 0; i < a.dim; ++i)
    v.action.push_back(a.left_mult_matrix(a.basis_vec(i)));
  return v;
}

AlgModule zero_module(const Algebra& a) {
  AlgModule v;
  v.field = a.field;
  v.dim = 0;
  for (std::size_t i = 0; i < a.dim; ++i)
    v.action.push_back(Matrix::zero(a.field, 0, 0));
  return v;
}

AlgModule quotient_module(const AlgModule& v, const Subspace& w) {
  if (w.ambient() != v.dim || w.field() != v.field)
    throw std::invalid_argument("subspace does not fit the module");
  for (std::size_t i = 0; i < v.action.size(); ++i)
    for (std::size_t r = 0; r < w.dim(); ++r)
      if (!w.contains(v.action[i].apply(w.basis().row(r))))
        throw std::invalid_argument("subspace is not action-invariant");
  auto comp = w.complement_coords();
  const std::size_t qdim = comp.size();
  Matrix proj = Matrix::zero(v.field, qdim, v.dim);
  for (std::size_t c = 0; c < v.dim; ++c) {
    Vec img = w.project_complement(unit_vec(v.field, v.dim, c));
    for (std::size_t r = 0; r < qdim; ++r) proj.at(r, c) = img[r];
  }
  Matrix sect = Matrix::zero(v.field, v.dim, qdim);
  for (std::size_t r = 0; r < qdim; ++r)
    sect.at(comp[r], r) = Scalar::one(v.field);
  AlgModule q;
  q.field = v.field;
  q.dim = qdim;
  for (const auto& m : v.action) q.action.push_back(proj.mul(m).mul(sect));
  return q;
}

Ideal module_annihilator(const Algebra& a, const AlgModule& v) {
  if (v.action.size() != a.dim || v.field != a.field)
    throw std::invalid_argument("module does not fit the algebra");
  Matrix flat = Matrix::zero(a.field, v.dim * v.dim, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t r = 0; r < v.dim; ++r)
      for (std::size_t c = 0; c < v.dim; ++c)
        flat.at(r * v.dim + c, i) = v.action[i].at(r, c);
  return Ideal{kernel(flat), true};
}

Subspace submodule_closure(const AlgModule& v, const Vec& start) {
  SpanBuilder acc(v.field, v.dim);
  std::vector<Vec> work;
  if (acc.add(start)) work.push_back(start);
  while (!work.empty() && acc.dim() < v.dim) {
    Vec w = std::move(work.back());
    work.pop_back();
    for (const auto& m : v.action) {
      Vec img = m.apply(w);
      if (acc.add(img)) work.push_back(std::move(img));
    }
  }
  return acc.to_subspace();
}

namespace {

std::vector<fp::Mat> fp_action(const AlgModule& v) {
  std::vector<fp::Mat> mats;
  mats.reserve(v.action.size());
  for (const auto& m : v.action) mats.push_back(fp::from_matrix(m));
  return mats;
}

}  // namespace

bool module_is_irreducible(const Algebra& a, const AlgModule& v,
                           std::uint64_t cap, Exec exec) {
  if (!a.field.is_prime_field())
    throw unsupported_field_error(
        "module irreducibility is only decided over prime fields");
  if (v.dim == 0) return false;
  const std::uint32_t p = a.field.modulus();
  const std::uint64_t total = fp::checked_power(p, v.dim, cap);
  auto mats = fp_action(v);
  auto reducible_at = [&](std::uint64_t idx) {
    fp::Row start = fp::index_to_vector(idx, v.dim, p);
    return fp::closure(mats, start, p).dim() < v.dim;
  };
  return find_first_index(1, total, reducible_at, exec) == kNoWitness;
}

bool ideal_is_prime(const Algebra& a, const Ideal& j, std::uint64_t cap,
                    Exec exec) {
  if (!a.field.is_prime_field())
    throw unsupported_field_error("primality is only decided over prime fields");
  QuotientAlgebra q = quotient_algebra(a, j);
  const std::size_t m = q.alg.dim;
  if (m == 0) return false;  // the whole algebra is not prime, by convention
  const std::uint32_t p = a.field.modulus();
  const std::uint64_t total = fp::checked_power(p, m, cap);
  // left-multiplication matrices of the quotient basis elements
  std::vector<fp::Mat> lmat;
  for (std::size_t k = 0; k < m; ++k)
    lmat.push_back(fp::from_matrix(q.alg.left_mult_matrix(q.alg.basis_vec(k))));
  std::vector<fp::Mat> rmat;
  for (std::size_t k = 0; k < m; ++k)
    rmat.push_back(
        fp::from_matrix(q.alg.right_mult_matrix(q.alg.basis_vec(k))));
  auto witness_at = [&](std::uint64_t idx) {
    fp::Row avec = fp::index_to_vector(idx, m, p);
    // stack the maps b -> (a e_k) b over k; a nonzero kernel kills primeness
    fp::Mat stacked = fp::Mat::zero(m * m, m);
    for (std::size_t k = 0; k < m; ++k) {
      fp::Row aek = fp::apply(rmat[k], avec, p);  // a * e_k
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) {
          std::uint64_t acc = 0;
          for (std::size_t t = 0; t < m; ++t)
            acc += static_cast<std::uint64_t>(aek[t]) * lmat[t].at(r, c) % p;
          stacked.at(k * m + r, c) =
              static_cast<std::uint32_t>((stacked.at(k * m + r, c) + acc) % p);
        }
    }
    return fp::rank(stacked, p) < m;
  };
  return find_first_index(1, total, witness_at, exec) == kNoWitness;
}

bool ideal_is_meet_irreducible(const Algebra& a, const Ideal& j,
                               std::uint64_t cap, Exec exec) {
  if (!a.field.is_prime_field())
    throw unsupported_field_error(
        "meet-irreducibility is only decided over prime fields");
  QuotientAlgebra q = quotient_algebra(a, j);
  const std::size_t m = q.alg.dim;
  if (m == 0) return true;  // whole algebra: meet-irreducible by convention
  const std::uint32_t p = a.field.modulus();
  const std::uint64_t total = fp::checked_power(p, m, cap);
  std::vector<fp::Mat> gens;
  for (std::size_t k = 0; k < m; ++k) {
    gens.push_back(fp::from_matrix(q.alg.left_mult_matrix(q.alg.basis_vec(k))));
    gens.push_back(
        fp::from_matrix(q.alg.right_mult_matrix(q.alg.basis_vec(k))));
  }
  // principal two-sided ideals of the quotient, deduplicated
  std::map<std::string, std::vector<fp::Row>> principal;
#ifdef _OPENMP
  if (exec == Exec::parallel && total > 128) {
#pragma omp parallel
    {
      std::map<std::string, std::vector<fp::Row>> local;
#pragma omp for schedule(dynamic, 32) nowait
      for (long long i = 1; i < static_cast<long long>(total); ++i) {
        auto acc = fp::closure(gens, fp::index_to_vector(i, m, p), p);
        local.emplace(acc.key(), acc.rows());
      }
#pragma omp critical
      principal.merge(local);
    }
  } else
#endif
  {
    (void)exec;
    for (std::uint64_t i = 1; i < total; ++i) {
      auto acc = fp::closure(gens, fp::index_to_vector(i, m, p), p);
      principal.emplace(acc.key(), acc.rows());
    }
  }
  // count the minimal elements under inclusion
  auto contains_rows = [&](const std::vector<fp::Row>& big,
                           const std::vector<fp::Row>& small) {
    fp::SpanAcc acc(m, p);
    for (const auto& r : big) acc.add(r);
    for (const auto& r : small)
      if (!acc.contains(r)) return false;
    return true;
  };
  std::size_t minimal = 0;
  for (auto it = principal.begin(); it != principal.end(); ++it) {
    bool is_minimal = true;
    for (auto jt = principal.begin(); jt != principal.end() && is_minimal; ++jt)
      if (jt != it && contains_rows(it->second, jt->second)) is_minimal = false;
    if (is_minimal) ++minimal;
  }
  return minimal == 1;
}

}  // namespace pcpw
