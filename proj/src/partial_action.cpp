#include "pcpw/partial_action.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pcpw {

std::vector<int> PartialAction::domain(int g) const {
  std::vector<int> out;
  for (std::size_t x = 0; x < space; ++x)
    if (in_domain(g, static_cast<int>(x))) out.push_back(static_cast<int>(x));
  return out;
}

std::string ValidationReport::to_string() const {
  if (ok) return "pass";
  std::ostringstream os;
  os << "violation of " << violation->axiom;
  if (violation->g >= 0) os << " [g=" << violation->g;
  if (violation->h >= 0) os << ", h=" << violation->h;
  if (violation->x >= 0) os << ", x=" << violation->x;
  if (violation->g >= 0) os << "]";
  if (!violation->detail.empty()) os << ": " << violation->detail;
  return os.str();
}

ValidationReport validate_action(const PartialAction& pa) {
  ValidationReport rep;
  auto fail = [&](std::string axiom, int g, int h, int x, std::string detail) {
    rep.ok = false;
    rep.violation = ActionViolation{std::move(axiom), g, h, x, std::move(detail)};
    return rep;
  };
  const int n = static_cast<int>(pa.group.order);
  const int m = static_cast<int>(pa.space);
  if (pa.theta.size() != pa.group.order)
    return fail("structure", -1, -1, -1, "theta table has wrong group size");
  for (int g = 0; g < n; ++g) {
    if (pa.theta[g].size() != pa.space)
      return fail("structure", g, -1, -1, "theta row has wrong space size");
    for (int x = 0; x < m; ++x) {
      int y = pa.theta[g][x];
      if (y < -1 || y >= m)
        return fail("structure", g, -1, x, "image out of range");
    }
    // injectivity of theta_g
    std::set<int> seen;
    for (int x = 0; x < m; ++x)
      if (pa.theta[g][x] >= 0 && !seen.insert(pa.theta[g][x]).second)
        return fail("bijectivity", g, -1, x, "theta_g is not injective");
  }
  // theta_e = id on X
  for (int x = 0; x < m; ++x)
    if (pa.theta[0][x] != x)
      return fail("identity axiom (theta_e = id)", 0, -1, x, "");
  // theta_{g^-1} inverts theta_g (this also forces range(theta_g) = X_g)
  for (int g = 0; g < n; ++g) {
    int gi = pa.group.inverse(g);
    for (int x = 0; x < m; ++x) {
      if (pa.theta[g][x] >= 0) {
        int y = pa.theta[g][x];
        if (pa.theta[gi][y] != x)
          return fail("inverse axiom (theta_{g^-1} = theta_g^-1)", g, -1, x,
                      "");
      }
    }
  }
  // theta_g(X_{g^-1} cap X_h) = X_g cap X_{gh}
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      int gh = pa.group.op(g, h);
      for (int x = 0; x < m; ++x) {
        bool lhs_def = pa.defined(g, x) && pa.in_domain(h, x);
        if (lhs_def) {
          int y = pa.apply(g, x);
          if (!(pa.in_domain(g, y) && pa.in_domain(gh, y)))
            return fail("domain axiom theta_g(X_{g^-1} cap X_h) = X_g cap X_{gh}",
                        g, h, x, "image escapes X_g cap X_{gh}");
        }
      }
      // surjectivity onto X_g cap X_{gh}
      for (int y = 0; y < m; ++y) {
        if (pa.in_domain(g, y) && pa.in_domain(gh, y)) {
          int gi = pa.group.inverse(g);
          int x = pa.theta[gi][y];
          if (x < 0 || !pa.in_domain(h, x))
            return fail("domain axiom theta_g(X_{g^-1} cap X_h) = X_g cap X_{gh}",
                        g, h, y, "point not reached from X_{g^-1} cap X_h");
        }
      }
    }
  // composition: theta_g(theta_h(x)) = theta_{gh}(x) where both sides defined
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      int gh = pa.group.op(g, h);
      for (int x = 0; x < m; ++x) {
        if (pa.theta[h][x] < 0) continue;
        if (!pa.in_domain(pa.group.inverse(gh), x)) continue;
        int hx = pa.theta[h][x];
        if (pa.theta[g][hx] < 0)
          return fail("composition axiom", g, h, x,
                      "theta_g undefined on theta_h(x)");
        if (pa.theta[g][hx] != pa.theta[gh][x])
          return fail("composition axiom", g, h, x, "");
      }
    }
  return rep;
}

bool OrbitData::in_S(int g) const {
  return std::binary_search(S.begin(), S.end(), g);
}

bool OrbitData::in_H(int g) const {
  return std::binary_search(H.begin(), H.end(), g);
}

int OrbitData::h_pos(int g) const {
  auto it = std::lower_bound(H.begin(), H.end(), g);
  if (it == H.end() || *it != g) return -1;
  return static_cast<int>(it - H.begin());
}

int OrbitData::rep_of(int g, const PartialAction& pa) const {
  int y = pa.apply(g, x);
  for (int r : R)
    if (pa.apply(r, x) == y) return r;
  throw std::logic_error("coset representative not found");
}

OrbitData orbit_data(const PartialAction& pa, int x) {
  if (x < 0 || x >= static_cast<int>(pa.space))
    throw std::out_of_range("point out of range");
  OrbitData od;
  od.x = x;
  const int n = static_cast<int>(pa.group.order);
  for (int g = 0; g < n; ++g) {
    if (pa.in_domain(pa.group.inverse(g), x)) {
      od.S.push_back(g);
      if (pa.apply(g, x) == x) od.H.push_back(g);
    }
  }
  std::set<int> orbit;
  for (int g : od.S) orbit.insert(pa.apply(g, x));
  od.orbit.assign(orbit.begin(), orbit.end());
  // smallest group index representative per left H-class; S is ascending,
  // and classes coincide with fibers of g -> theta_g(x)
  std::set<int> covered;
  for (int g : od.S) {
    int y = pa.apply(g, x);
    if (covered.insert(y).second) od.R.push_back(g);
  }
  std::sort(od.R.begin(), od.R.end());
  return od;
}

std::vector<int> orbit_representatives(const PartialAction& pa) {
  std::vector<int> reps;
  std::vector<bool> seen(pa.space, false);
  for (int x = 0; x < static_cast<int>(pa.space); ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (int y : orbit_data(pa, x).orbit) seen[y] = true;
  }
  return reps;
}

PointFreeness point_freeness(const PartialAction& pa, int x) {
  if (x < 0 || x >= static_cast<int>(pa.space))
    throw std::out_of_range("point out of range");
  PointFreeness pf;
  pf.x = x;
  OrbitData od = orbit_data(pa, x);
  // Topologically free point: for every g != e and every neighborhood
  // V with x in V subseteq X_{g^-1} there must be y in V cap Orb(x) moved
  // by theta_g.  On a discrete space the minimal V = {x} decides this.
  pf.topologically_free = true;
  for (int g : od.S) {
    if (g == 0) continue;
    bool exists_moved_point = pa.apply(g, x) != x;  // V = {x}, y = x
    if (!exists_moved_point) {
      pf.topologically_free = false;
      break;
    }
  }
  // Regular / strongly regular: for every h in H_x there must exist a
  // neighborhood V inside X_{h^-1} on which theta_h is the identity (on
  // V cap Orb(x) for regular, on all of V for strongly regular).  The
  // minimal witness V = {x} is evaluated literally.
  pf.regular = true;
  pf.strongly_regular = true;
  for (int h : od.H) {
    bool id_on_singleton = pa.defined(h, x) && pa.apply(h, x) == x;
    if (!id_on_singleton) {
      pf.regular = false;
      pf.strongly_regular = false;
    }
  }
  return pf;
}

FreenessReport freeness_report(const PartialAction& pa) {
  FreenessReport rep;
  const int n = static_cast<int>(pa.group.order);
  rep.fixed_sets.assign(n, {});
  rep.action_topologically_free = true;
  for (int g = 1; g < n; ++g) {
    for (int x = 0; x < static_cast<int>(pa.space); ++x)
      if (pa.defined(g, x) && pa.apply(g, x) == x)
        rep.fixed_sets[g].push_back(x);
    if (!rep.fixed_sets[g].empty()) rep.action_topologically_free = false;
  }
  for (int x = 0; x < static_cast<int>(pa.space); ++x)
    rep.points.push_back(point_freeness(pa, x));
  return rep;
}

}  // namespace pcpw
