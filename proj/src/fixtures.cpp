#include "pcpw/fixtures.hpp"

namespace pcpw {

namespace {

PartialAction make_triv() {
  PartialAction pa;
  pa.group = FiniteGroup::cyclic(2);
  pa.space = 1;
  pa.point_names = {"0"};
  pa.theta = {{0}, {0}};
  return pa;
}

PartialAction make_swap() {
  PartialAction pa;
  pa.group = FiniteGroup::cyclic(2);
  pa.space = 2;
  pa.point_names = {"0", "1"};
  pa.theta = {{0, 1}, {1, 0}};
  return pa;
}

PartialAction make_halffix() {
  PartialAction pa;
  pa.group = FiniteGroup::cyclic(2);
  pa.space = 2;
  pa.point_names = {"0", "1"};
  pa.theta = {{0, 1}, {0, -1}};  // theta_t defined only on {0}, fixing 0
  return pa;
}

PartialAction make_s3() {
  PartialAction pa;
  pa.group = FiniteGroup::symmetric(3);
  pa.space = 3;
  pa.point_names = {"0", "1", "2"};
  pa.theta.assign(pa.group.order, std::vector<int>(3, -1));
  // the group elements are the permutations in lexicographic order, so the
  // natural action is read off the same enumeration
  std::vector<std::vector<int>> perms;
  std::vector<int> p = {0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  for (std::size_t g = 0; g < perms.size(); ++g)
    for (int x = 0; x < 3; ++x) pa.theta[g][x] = perms[g][x];
  return pa;
}

PartialAction make_triv2() {
  PartialAction pa;
  pa.group = FiniteGroup::cyclic(2);
  pa.space = 2;
  pa.point_names = {"0", "1"};
  pa.theta = {{0, 1}, {0, 1}};  // t acts globally as the identity
  return pa;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"F-TRIV", "F-SWAP", "F-HALFFIX", "F-S3", "F-TRIV2"};
}

PartialAction fixture_action(const std::string& name) {
  if (name == "F-TRIV") return make_triv();
  if (name == "F-SWAP") return make_swap();
  if (name == "F-HALFFIX") return make_halffix();
  if (name == "F-S3") return make_s3();
  if (name == "F-TRIV2") return make_triv2();
  throw std::invalid_argument("unknown fixture " + name);
}

CrossedProduct fixture_crossed_product(const std::string& name,
                                       const Field& f) {
  return build_crossed_product(fixture_action(name), f);
}

}  // namespace pcpw
