#include "pcpw/group_algebra.hpp"

#include <numeric>

namespace pcpw {

Vec GroupAlgebra::delta(int ambient_elt) const {
  int pos = sub.pos(ambient_elt);
  if (pos < 0)
    throw std::invalid_argument("element is not in the subgroup");
  return unit_vec(alg.field, alg.dim, static_cast<std::size_t>(pos));
}

GroupAlgebra build_group_algebra(const FiniteGroup& ambient,
                                 const Subgroup& h, const Field& f) {
  GroupAlgebra ga;
  ga.sub = h;
  ga.alg.field = f;
  ga.alg.dim = h.order();
  for (int e : h.elems) ga.alg.labels.push_back("d[" + ambient.names[e] + "]");
  ga.alg.sc.assign(ga.alg.dim, std::vector<Vec>(ga.alg.dim));
  for (std::size_t i = 0; i < ga.alg.dim; ++i)
    for (std::size_t j = 0; j < ga.alg.dim; ++j) {
      int prod = ambient.op(h.elems[i], h.elems[j]);
      int pos = h.pos(prod);
      if (pos < 0) throw std::logic_error("subgroup not closed");
      ga.alg.sc[i][j] =
          unit_vec(f, ga.alg.dim, static_cast<std::size_t>(pos));
    }
  ga.alg.unit = unit_vec(f, ga.alg.dim, 0);
  return ga;
}

GroupAlgebra build_group_algebra(const FiniteGroup& g, const Field& f) {
  return build_group_algebra(g, whole_group(g), f);
}

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<int> all(g.order);
  std::iota(all.begin(), all.end(), 0);
  return Subgroup::from_elements(g, all);
}

Scalar augmentation(const GroupAlgebra& ga, const Vec& elt) {
  if (elt.size() != ga.alg.dim)
    throw std::invalid_argument("element does not fit the group algebra");
  Scalar s = Scalar::zero(ga.alg.field);
  for (const auto& c : elt) s += c;
  return s;
}

Ideal augmentation_ideal(const GroupAlgebra& ga) {
  Matrix ones = Matrix::zero(ga.alg.field, 1, ga.alg.dim);
  for (std::size_t j = 0; j < ga.alg.dim; ++j)
    ones.at(0, j) = Scalar::one(ga.alg.field);
  return Ideal{kernel(ones), true};
}

Subspace adjoint_domain(const GroupAlgebra& ga, const FiniteGroup& ambient,
                        int g) {
  std::vector<Vec> rows;
  int gi = ambient.inverse(g);
  for (std::size_t j = 0; j < ga.sub.order(); ++j) {
    int u = ga.sub.elems[j];
    int conj = ambient.op(ambient.op(gi, u), g);  // g^-1 u g
    if (ga.sub.contains(conj))  // u in H cap g H g^-1
      rows.push_back(unit_vec(ga.alg.field, ga.alg.dim, j));
  }
  return Subspace::span(ga.alg.field, ga.alg.dim, rows);
}

Vec adjoint_apply(const GroupAlgebra& ga, const FiniteGroup& ambient, int g,
                  const Vec& elt) {
  Vec out = zero_vec(ga.alg.field, ga.alg.dim);
  int gi = ambient.inverse(g);
  for (std::size_t j = 0; j < ga.alg.dim; ++j) {
    if (elt[j].is_zero()) continue;
    int conj = ambient.op(ambient.op(g, ga.sub.elems[j]), gi);
    int pos = ga.sub.pos(conj);
    if (pos < 0)
      throw std::invalid_argument("adjoint image leaves the subgroup algebra");
    out[pos] += elt[j];
  }
  return out;
}

bool is_normal_relative(const GroupAlgebra& ga, const FiniteGroup& ambient,
                        const Ideal& i) {
  if (i.space.ambient() != ga.alg.dim)
    throw std::invalid_argument("ideal does not fit the group algebra");
  for (int g = 0; g < static_cast<int>(ambient.order); ++g) {
    Subspace dom = adjoint_domain(ga, ambient, ambient.inverse(g));
    Subspace part = intersect(i.space, dom);
    for (std::size_t r = 0; r < part.dim(); ++r) {
      Vec img = adjoint_apply(ga, ambient, g, part.basis().row(r));
      if (!i.space.contains(img)) return false;
    }
  }
  return true;
}

PartialAction adjoint_partial_action(const FiniteGroup& ambient,
                                     const Subgroup& h) {
  PartialAction pa;
  pa.group = ambient;
  pa.space = h.order();
  for (int e : h.elems) pa.point_names.push_back(ambient.names[e]);
  pa.theta.assign(ambient.order, std::vector<int>(h.order(), -1));
  for (int g = 0; g < static_cast<int>(ambient.order); ++g) {
    int gi = ambient.inverse(g);
    for (std::size_t j = 0; j < h.order(); ++j) {
      int u = h.elems[j];
      // theta_g is conjugation by g, defined on H cap g^-1 H g
      int conj = ambient.op(ambient.op(g, u), gi);
      if (h.contains(conj)) pa.theta[g][j] = h.pos(conj);
    }
  }
  return pa;
}

Matrix conjugation_matrix(const FiniteGroup& ambient, const Subgroup& from,
                          const Subgroup& to, int k, const Field& f) {
  Matrix m = Matrix::zero(f, to.order(), from.order());
  int ki = ambient.inverse(k);
  for (std::size_t j = 0; j < from.order(); ++j) {
    int conj = ambient.op(ambient.op(k, from.elems[j]), ki);
    int pos = to.pos(conj);
    if (pos < 0)
      throw std::invalid_argument("conjugate leaves the target subgroup");
    m.at(static_cast<std::size_t>(pos), j) = Scalar::one(f);
  }
  return m;
}

}  // namespace pcpw
