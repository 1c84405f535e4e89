#pragma once

#include "pcpw/crossed_product.hpp"

namespace pcpw {

/// The canonical finite systems used throughout the test and acceptance
/// suites:
///   F-TRIV     one point, Z/2 acting globally and trivially
///   F-SWAP     two points swapped by Z/2
///   F-HALFFIX  two points, X_t = {0}, theta_t = id on {0}
///   F-S3       three points, S_3 acting naturally (global)
///   F-TRIV2    two points, Z/2 acting trivially on both (disjoint orbits)
std::vector<std::string> fixture_names();
PartialAction fixture_action(const std::string& name);
CrossedProduct fixture_crossed_product(const std::string& name,
                                       const Field& f);

}  // namespace pcpw
