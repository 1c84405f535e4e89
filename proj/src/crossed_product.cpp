#include "pcpw/crossed_product.hpp"

namespace pcpw {

CrossedProduct build_crossed_product(const PartialAction& pa, const Field& f) {
  auto rep = validate_action(pa);
  if (!rep.ok)
    throw std::invalid_argument("invalid partial action: " + rep.to_string());
  CrossedProduct cp;
  cp.pa = pa;
  cp.field = f;
  const int n = static_cast<int>(pa.group.order);
  const int m = static_cast<int>(pa.space);
  cp.pair_index.assign(n, std::vector<int>(m, -1));
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < m; ++x)
      if (pa.in_domain(g, x)) {
        cp.pair_index[g][x] = static_cast<int>(cp.basis_pairs.size());
        cp.basis_pairs.emplace_back(g, x);
      }
  const std::size_t dim = cp.basis_pairs.size();
  cp.alg.field = f;
  cp.alg.dim = dim;
  for (auto [g, x] : cp.basis_pairs)
    cp.alg.labels.push_back("e[" + pa.point_names[x] + "," + pa.group.names[g] +
                            "]");
  cp.alg.sc.assign(dim, std::vector<Vec>(dim, zero_vec(f, dim)));
  for (std::size_t i = 0; i < dim; ++i) {
    auto [g, x] = cp.basis_pairs[i];
    for (std::size_t j = 0; j < dim; ++j) {
      auto [h, y] = cp.basis_pairs[j];
      if (!pa.defined(g, y) || pa.apply(g, y) != x) continue;
      int gh = pa.group.op(g, h);
      int pos = cp.pair_index[gh][x];
      if (pos < 0)
        throw std::logic_error("product escaped the basis; invalid action");
      cp.alg.sc[i][j][static_cast<std::size_t>(pos)] = Scalar::one(f);
    }
  }
  Vec unit = zero_vec(f, dim);
  for (int x = 0; x < m; ++x)
    unit[static_cast<std::size_t>(cp.pair_index[0][x])] = Scalar::one(f);
  cp.alg.unit = unit;
  return cp;
}

Vec CrossedProduct::embed_function(const Vec& values_on_x) const {
  if (values_on_x.size() != pa.space)
    throw std::invalid_argument("function must be defined on all of X");
  Vec out = zero_vec(field, alg.dim);
  for (std::size_t x = 0; x < pa.space; ++x)
    out[static_cast<std::size_t>(pair_index[0][x])] = values_on_x[x];
  return out;
}

Vec CrossedProduct::coefficient_function(const Vec& b, int g) const {
  Vec out = zero_vec(field, pa.space);
  for (std::size_t x = 0; x < pa.space; ++x) {
    int idx = pair_index[g][x];
    if (idx >= 0) out[x] = b[static_cast<std::size_t>(idx)];
  }
  return out;
}

Subspace CrossedProduct::point_ideal(int x) const {
  if (x < 0 || x >= static_cast<int>(pa.space))
    throw std::out_of_range("point out of range");
  std::vector<Vec> rows;
  for (int y = 0; y < static_cast<int>(pa.space); ++y)
    if (y != x)
      rows.push_back(
          unit_vec(field, alg.dim, static_cast<std::size_t>(pair_index[0][y])));
  return Subspace::span(field, alg.dim, rows);
}

IsotropyMaps isotropy_maps(const CrossedProduct& cp, int x0) {
  IsotropyMaps im;
  im.x0 = x0;
  im.od = orbit_data(cp.pa, x0);
  im.h = Subgroup::from_elements(cp.pa.group, im.od.H);
  im.h_group = im.h.as_group(cp.pa.group);

  // restricted action of H on X
  PartialAction restricted;
  restricted.group = im.h_group;
  restricted.space = cp.pa.space;
  restricted.point_names = cp.pa.point_names;
  restricted.theta.assign(im.h_group.order,
                          std::vector<int>(cp.pa.space, -1));
  for (std::size_t j = 0; j < im.h.order(); ++j)
    restricted.theta[j] = cp.pa.theta[im.h.elems[j]];
  im.cp_h = build_crossed_product(restricted, cp.field);

  im.kh = build_group_algebra(cp.pa.group, im.h, cp.field);

  const std::size_t dim_a = cp.alg.dim;
  const std::size_t dim_h = im.cp_h.alg.dim;
  im.e_map = Matrix::zero(cp.field, dim_h, dim_a);
  im.embed = Matrix::zero(cp.field, dim_a, dim_h);
  for (std::size_t j = 0; j < dim_h; ++j) {
    auto [hj, x] = im.cp_h.basis_pairs[j];
    int g = im.h.elems[hj];
    int idx = cp.pair_index[g][x];
    if (idx < 0) throw std::logic_error("restricted basis missing upstairs");
    im.e_map.at(j, static_cast<std::size_t>(idx)) = Scalar::one(cp.field);
    im.embed.at(static_cast<std::size_t>(idx), j) = Scalar::one(cp.field);
  }
  im.nu_map = Matrix::zero(cp.field, im.h.order(), dim_h);
  for (std::size_t j = 0; j < dim_h; ++j) {
    auto [hj, x] = im.cp_h.basis_pairs[j];
    if (x == x0)
      im.nu_map.at(static_cast<std::size_t>(hj), j) = Scalar::one(cp.field);
  }
  im.f_map = im.nu_map.mul(im.e_map);
  return im;
}

}  // namespace pcpw
