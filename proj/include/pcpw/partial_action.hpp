#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcpw/group.hpp"

namespace pcpw {

/// A set-theoretic partial action of a finite group on a finite set
/// {0..space-1}.  theta[g][x] is the image of x under theta_g, or -1 when
/// x lies outside the domain X_{g^-1} of theta_g.  The set X_g is the
/// range of theta_g.
struct PartialAction {
  FiniteGroup group;
  std::size_t space = 0;
  std::vector<std::string> point_names;
  std::vector<std::vector<int>> theta;

  bool defined(int g, int x) const { return theta[g][x] >= 0; }
  int apply(int g, int x) const { return theta[g][x]; }

  /// Membership in X_g, i.e. the range of theta_g.
  bool in_domain(int g, int x) const { return theta[group.inverse(g)][x] >= 0; }
  /// X_g as a sorted point list.
  std::vector<int> domain(int g) const;
};

struct ActionViolation {
  std::string axiom;
  int g = -1, h = -1, x = -1;
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::optional<ActionViolation> violation;
  std::string to_string() const;
};

/// Checks the partial-action axioms: theta_e = id on all of X,
/// theta_{g^-1} = theta_g^-1, theta_g(X_{g^-1} cap X_h) = X_g cap X_{gh},
/// and theta_g(theta_h(x)) = theta_{gh}(x) on X_{h^-1} cap X_{(gh)^-1}.
/// Returns the first violated axiom with witnesses.
ValidationReport validate_action(const PartialAction& pa);

/// The data attached to a point x: S_x = {g : x in X_{g^-1}}, the isotropy
/// group H_x, the orbit, and left-coset representatives R (smallest group
/// index per class), so that r -> theta_r(x) is a bijection onto the orbit.
struct OrbitData {
  int x = -1;
  std::vector<int> orbit;  // sorted points
  std::vector<int> H;      // sorted group elements, a subgroup
  std::vector<int> S;      // sorted group elements
  std::vector<int> R;      // coset representatives, sorted

  bool in_S(int g) const;
  bool in_H(int g) const;
  /// Position of h in H (H is the group-algebra basis order), or -1.
  int h_pos(int g) const;
  /// The representative in R of the class gH, for g in S.
  int rep_of(int g, const PartialAction& pa) const;
};

OrbitData orbit_data(const PartialAction& pa, int x);

/// Smallest point of each orbit, ascending.
std::vector<int> orbit_representatives(const PartialAction& pa);

struct PointFreeness {
  int x = -1;
  bool topologically_free = false;
  bool regular = false;
  bool strongly_regular = false;
};

struct FreenessReport {
  bool action_topologically_free = false;
  // fixed_sets[g] = F_g = {x in X_{g^-1} : theta_g(x) = x}; empty for g = e.
  std::vector<std::vector<int>> fixed_sets;
  std::vector<PointFreeness> points;
};

/// Evaluates the freeness and regularity predicates by their literal
/// quantifiers.  On a finite discrete space "empty interior" degenerates
/// to "empty", and the neighborhood existentials are decided at the
/// minimal witness {x}; this is computed, not assumed.
FreenessReport freeness_report(const PartialAction& pa);
PointFreeness point_freeness(const PartialAction& pa, int x);

}  // namespace pcpw
