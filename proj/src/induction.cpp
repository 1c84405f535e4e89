#include "pcpw/induction.hpp"

#include <algorithm>
#include <sstream>

namespace pcpw {

int InductionContext::s_pos(int g) const {
  auto it = std::lower_bound(od.S.begin(), od.S.end(), g);
  if (it == od.S.end() || *it != g) return -1;
  return static_cast<int>(it - od.S.begin());
}

Vec InductionContext::form(int k, int l) const {
  if (!od.in_S(k) || !od.in_S(l))
    throw std::invalid_argument("form arguments must lie in S");
  const auto& g = cp->pa.group;
  Vec out = zero_vec(cp->field, kh().dim);
  int kl = g.op(g.inverse(k), l);
  int pos = od.h_pos(kl);
  if (pos >= 0) out[static_cast<std::size_t>(pos)] = Scalar::one(cp->field);
  return out;
}

Vec InductionContext::pair_form(const Vec& m_coeffs, const Vec& n_coeffs) const {
  if (m_coeffs.size() != s_size() || n_coeffs.size() != s_size())
    throw std::invalid_argument("M element has wrong length");
  Vec out = zero_vec(cp->field, kh().dim);
  for (std::size_t i = 0; i < s_size(); ++i) {
    if (m_coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < s_size(); ++j) {
      if (n_coeffs[j].is_zero()) continue;
      vec_axpy(out, m_coeffs[i] * n_coeffs[j], form(od.S[i], od.S[j]));
    }
  }
  return out;
}

Vec InductionContext::m_right_action(const Vec& m_coeffs,
                                     const Vec& kh_elt) const {
  const auto& g = cp->pa.group;
  Vec out = zero_vec(cp->field, s_size());
  for (std::size_t i = 0; i < s_size(); ++i) {
    if (m_coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < kh().dim; ++j) {
      if (kh_elt[j].is_zero()) continue;
      int lh = g.op(od.S[i], od.H[j]);
      int pos = s_pos(lh);
      if (pos < 0) throw std::logic_error("S H escaped S");
      out[static_cast<std::size_t>(pos)] += m_coeffs[i] * kh_elt[j];
    }
  }
  return out;
}

Vec InductionContext::m_left_action(const Vec& b, const Vec& m_coeffs) const {
  const auto& g = cp->pa.group;
  Vec out = zero_vec(cp->field, s_size());
  for (std::size_t bi = 0; bi < cp->alg.dim; ++bi) {
    if (b[bi].is_zero()) continue;
    auto [gg, x] = cp->basis_pairs[bi];
    for (std::size_t j = 0; j < s_size(); ++j) {
      if (m_coeffs[j].is_zero()) continue;
      int gl = g.op(gg, od.S[j]);
      int pos = s_pos(gl);
      if (pos < 0) continue;  // gl not in S
      if (cp->pa.apply(gl, x0) != x) continue;  // f vanishes there
      out[static_cast<std::size_t>(pos)] += b[bi] * m_coeffs[j];
    }
  }
  return out;
}

Vec InductionContext::bracket(int k, const Vec& b, int l) const {
  int kp = s_pos(k), lp = s_pos(l);
  if (kp < 0 || lp < 0)
    throw std::invalid_argument("bracket arguments must lie in S");
  return brackets[static_cast<std::size_t>(kp) * s_size() +
                  static_cast<std::size_t>(lp)]
      .apply(b);
}

const Matrix& InductionContext::bracket_matrix(std::size_t k_pos,
                                               std::size_t l_pos) const {
  return brackets[k_pos * s_size() + l_pos];
}

InductionContext make_induction_context(const CrossedProduct& cp, int x0) {
  InductionContext ctx;
  ctx.cp = &cp;
  ctx.x0 = x0;
  ctx.od = orbit_data(cp.pa, x0);
  ctx.maps = isotropy_maps(cp, x0);
  const auto& g = cp.pa.group;
  const std::size_t s = ctx.od.S.size();
  const std::size_t hdim = ctx.kh().dim;
  ctx.brackets.reserve(s * s);
  for (std::size_t kp = 0; kp < s; ++kp)
    for (std::size_t lp = 0; lp < s; ++lp) {
      int k = ctx.od.S[kp], l = ctx.od.S[lp];
      Matrix m = Matrix::zero(cp.field, hdim, cp.alg.dim);
      // column for e_{x,gg}: contributes delta_{k^-1 gg l} when
      // gg in k H l^-1 and x = theta_k(x0)
      int tkx0 = cp.pa.apply(k, x0);
      for (std::size_t bi = 0; bi < cp.alg.dim; ++bi) {
        auto [gg, x] = cp.basis_pairs[bi];
        if (x != tkx0) continue;
        int kgl = g.op(g.op(g.inverse(k), gg), l);
        int pos = ctx.od.h_pos(kgl);
        if (pos < 0) continue;  // gg not in k H l^-1
        m.at(static_cast<std::size_t>(pos), bi) = Scalar::one(cp.field);
      }
      ctx.brackets.push_back(std::move(m));
    }
  return ctx;
}

namespace {

/// Residual map of a subspace: v -> reduce(v), linear with kernel exactly
/// the subspace.
Matrix residual_matrix(const Subspace& target) {
  Matrix p = Matrix::identity(target.field(), target.ambient());
  for (std::size_t i = 0; i < target.dim(); ++i) {
    std::size_t pc = target.pivots()[i];
    for (std::size_t j = 0; j < target.ambient(); ++j)
      p.at(j, pc) -= target.basis().at(i, j);
  }
  return p;
}

}  // namespace

Ideal induce_ideal(const InductionContext& ctx, const Ideal& i) {
  if (i.space.ambient() != ctx.kh().dim || i.space.field() != ctx.cp->field)
    throw std::invalid_argument("ideal does not fit KH");
  // The intersection over (k,l) of the preimages of I under the bracket
  // matrices is the kernel of the stacked residual maps: one elimination
  // instead of |S|^2 pairwise intersections.
  const std::size_t s = ctx.s_size();
  const std::size_t hdim = ctx.kh().dim;
  Matrix res = residual_matrix(i.space);
  Matrix stacked = Matrix::zero(ctx.cp->field, s * s * hdim, ctx.cp->alg.dim);
  for (std::size_t idx = 0; idx < s * s; ++idx) {
    Matrix projected = res.mul(ctx.brackets[idx]);
    for (std::size_t r = 0; r < hdim; ++r)
      for (std::size_t c = 0; c < ctx.cp->alg.dim; ++c)
        stacked.at(idx * hdim + r, c) = projected.at(r, c);
  }
  return Ideal{kernel(stacked), true};
}

Ideal induce_ideal_by_fold(const InductionContext& ctx, const Ideal& i,
                           Exec exec) {
  if (i.space.ambient() != ctx.kh().dim || i.space.field() != ctx.cp->field)
    throw std::invalid_argument("ideal does not fit KH");
  const std::size_t s = ctx.s_size();
  std::vector<Subspace> pres(s * s);
  for_each_index(
      s * s,
      [&](std::size_t idx) {
        pres[idx] = preimage(ctx.brackets[idx], i.space);
      },
      exec);
  Subspace acc = Subspace::full(ctx.cp->field, ctx.cp->alg.dim);
  for (const auto& p : pres) acc = intersect(acc, p);
  return Ideal{std::move(acc), true};
}

Ideal induce_ideal_via_f(const InductionContext& ctx, const Ideal& i) {
  const Algebra& a = ctx.cp->alg;
  const std::size_t hdim = ctx.kh().dim;
  Matrix res = residual_matrix(i.space);
  Matrix stacked = Matrix::zero(a.field, a.dim * a.dim * hdim, a.dim);
  for (std::size_t u = 0; u < a.dim; ++u)
    for (std::size_t v = 0; v < a.dim; ++v) {
      // b -> F(e_u b e_v) as a matrix, reduced against I; triple products
      // of basis elements come straight from the structure constants
      std::size_t base = (u * a.dim + v) * hdim;
      for (std::size_t c = 0; c < a.dim; ++c) {
        const Vec& uc = a.sc[u][c];
        Vec ubv = zero_vec(a.field, a.dim);
        for (std::size_t m = 0; m < a.dim; ++m)
          if (!uc[m].is_zero()) vec_axpy(ubv, uc[m], a.sc[m][v]);
        Vec f = res.apply(ctx.f_of(ubv));
        for (std::size_t r = 0; r < hdim; ++r)
          stacked.at(base + r, c) = f[r];
      }
    }
  return Ideal{kernel(stacked), true};
}

AlgModule induce_module(const InductionContext& ctx, const AlgModule& v) {
  if (!v.is_module_over(ctx.kh()))
    throw std::invalid_argument("input is not a KH-module");
  const auto& g = ctx.cp->pa.group;
  const std::size_t nr = ctx.od.R.size();
  const std::size_t vd = v.dim;
  AlgModule out;
  out.field = ctx.cp->field;
  out.dim = nr * vd;
  for (std::size_t bi = 0; bi < ctx.cp->alg.dim; ++bi) {
    auto [gg, x] = ctx.cp->basis_pairs[bi];
    Matrix m = Matrix::zero(out.field, out.dim, out.dim);
    for (std::size_t ri = 0; ri < nr; ++ri) {
      int r = ctx.od.R[ri];
      int gr = g.op(gg, r);
      int pos = ctx.s_pos(gr);
      if (pos < 0) continue;
      if (ctx.cp->pa.apply(gr, ctx.x0) != x) continue;
      int rprime = ctx.od.rep_of(gr, ctx.cp->pa);
      std::size_t rpi = 0;
      while (ctx.od.R[rpi] != rprime) ++rpi;
      int h = g.op(g.inverse(rprime), gr);
      int hp = ctx.od.h_pos(h);
      if (hp < 0) throw std::logic_error("r'^-1 g r escaped H");
      const Matrix& hv = v.action[static_cast<std::size_t>(hp)];
      for (std::size_t a = 0; a < vd; ++a)
        for (std::size_t b = 0; b < vd; ++b)
          m.at(rpi * vd + a, ri * vd + b) = hv.at(a, b);
    }
    out.action.push_back(std::move(m));
  }
  return out;
}

Ideal f_of_ideal(const InductionContext& ctx, const Ideal& j) {
  if (j.space.ambient() != ctx.cp->alg.dim)
    throw std::invalid_argument("ideal does not fit the crossed product");
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < j.space.dim(); ++r)
    rows.push_back(ctx.f_of(j.space.basis().row(r)));
  return Ideal{Subspace::span(ctx.cp->field, ctx.kh().dim, rows), true};
}

Ideal reduce_to_admissible(const InductionContext& ctx, const Ideal& i) {
  return f_of_ideal(ctx, induce_ideal(ctx, i));
}

bool admissible(const InductionContext& ctx, const Ideal& i) {
  return reduce_to_admissible(ctx, i).space == i.space;
}

CharacterizationReport characterization_checks(const InductionContext& ctx,
                                               const Ideal& i) {
  CharacterizationReport rep;
  rep.admissible_by_definition = admissible(ctx, i);
  const auto& g = ctx.cp->pa.group;
  const auto& kh = ctx.maps.kh;

  // Both neighborhood conditions are existentials over neighborhoods V of
  // x0; on a finite discrete space they are decided at the minimal
  // neighborhood V = {x0}, where the qualifying k in S are exactly those
  // with theta_k(x0) = x0.
  rep.neighborhood_condition = true;
  rep.regular_point_condition = true;
  std::ostringstream witness;
  for (std::size_t ci = 0;
       ci < i.space.dim() &&
       (rep.neighborhood_condition || rep.regular_point_condition);
       ++ci) {
    Vec c = i.space.basis().row(ci);
    for (int k : ctx.od.S) {
      if (ctx.cp->pa.apply(k, ctx.x0) != ctx.x0) continue;
      // regular-point condition: delta_{k^-1} c delta_k in I
      Vec conj = zero_vec(ctx.cp->field, kh.alg.dim);
      for (std::size_t hj = 0; hj < kh.alg.dim; ++hj) {
        if (c[hj].is_zero()) continue;
        int img = g.op(g.op(g.inverse(k), kh.sub.elems[hj]), k);
        int pos = kh.sub.pos(img);
        if (pos < 0) throw std::logic_error("conjugate left H at a fixed k");
        conj[static_cast<std::size_t>(pos)] += c[hj];
      }
      if (!i.space.contains(conj)) {
        rep.regular_point_condition = false;
        witness << "fixed-point conjugation condition fails at k=" << g.names[k]
                << " on basis row " << ci << "; ";
      }
      // truncated condition: delta_{k^-1} (sum_{h in H cap kHl^-1} c_h
      // delta_h) delta_l in I for all l in S with the same fixed-point
      // constraint on k
      for (int l : ctx.od.S) {
        Vec trunc = zero_vec(ctx.cp->field, kh.alg.dim);
        for (std::size_t hj = 0; hj < kh.alg.dim; ++hj) {
          if (c[hj].is_zero()) continue;
          int h = kh.sub.elems[hj];
          int khl = g.op(g.op(g.inverse(k), h), l);
          if (!kh.sub.contains(khl)) continue;  // h outside k H l^-1
          trunc[static_cast<std::size_t>(kh.sub.pos(khl))] += c[hj];
        }
        if (!i.space.contains(trunc)) {
          rep.neighborhood_condition = false;
          witness << "truncated conjugation condition fails at (k,l)=(" << g.names[k]
                  << "," << g.names[l] << ") on basis row " << ci << "; ";
        }
      }
    }
  }
  rep.all_agree =
      rep.admissible_by_definition == rep.neighborhood_condition &&
      rep.admissible_by_definition == rep.regular_point_condition;
  rep.witness = witness.str();
  return rep;
}

}  // namespace pcpw
