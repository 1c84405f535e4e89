#include "pcpw/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pcpw {

std::optional<std::string> FiniteGroup::validate() {
  const int n = static_cast<int>(order);
  if (names.size() != order) return "name count does not match order";
  if (mult.size() != order) return "multiplication table has wrong row count";
  for (int a = 0; a < n; ++a) {
    if (mult[a].size() != order)
      return "multiplication table row " + std::to_string(a) +
             " has wrong length";
    for (int b = 0; b < n; ++b)
      if (mult[a][b] < 0 || mult[a][b] >= n)
        return "table entry out of range at (" + std::to_string(a) + "," +
               std::to_string(b) + ")";
  }
  for (int a = 0; a < n; ++a) {
    if (mult[0][a] != a || mult[a][0] != a)
      return "element 0 is not a two-sided identity at " + std::to_string(a);
  }
  inv.assign(order, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mult[a][b] == 0 && mult[b][a] == 0) {
        inv[a] = b;
        break;
      }
    if (inv[a] < 0)
      return "element " + names[a] + " has no two-sided inverse";
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
          return "associativity fails on (" + names[a] + "," + names[b] + "," +
                 names[c] + ")";
  return std::nullopt;
}

FiniteGroup FiniteGroup::trivial() {
  FiniteGroup g;
  g.order = 1;
  g.names = {"e"};
  g.mult = {{0}};
  g.inv = {0};
  return g;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  FiniteGroup g;
  g.order = n;
  for (std::size_t i = 0; i < n; ++i)
    g.names.push_back(i == 0 ? "e" : (n == 2 ? "t" : "t" + std::to_string(i)));
  g.mult.assign(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      g.mult[a][b] = static_cast<int>((a + b) % n);
  if (auto err = g.validate()) throw std::logic_error(*err);
  return g;
}

namespace {

std::string cycle_name(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  std::string out;
  for (int s = 0; s < n; ++s) {
    if (seen[s] || perm[s] == s) continue;
    out += "(";
    int x = s;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += "";
      out += std::to_string(x);
      first = false;
      x = perm[x];
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace

FiniteGroup FiniteGroup::symmetric(std::size_t points) {
  std::vector<int> base(points);
  std::iota(base.begin(), base.end(), 0);
  // lexicographic enumeration puts the identity first
  std::vector<std::vector<int>> perms;
  std::vector<int> p = base;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  FiniteGroup g;
  g.order = perms.size();
  for (const auto& q : perms) g.names.push_back(cycle_name(q));
  auto index_of = [&](const std::vector<int>& q) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == q) return static_cast<int>(i);
    throw std::logic_error("permutation not found");
  };
  g.mult.assign(g.order, std::vector<int>(g.order));
  for (std::size_t a = 0; a < g.order; ++a)
    for (std::size_t b = 0; b < g.order; ++b) {
      std::vector<int> ab(points);
      for (std::size_t x = 0; x < points; ++x) ab[x] = perms[a][perms[b][x]];
      g.mult[a][b] = index_of(ab);
    }
  if (auto err = g.validate()) throw std::logic_error(*err);
  return g;
}

Subgroup Subgroup::from_elements(const FiniteGroup& g, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty() || elems[0] != 0)
    throw std::invalid_argument("subgroup must contain the identity");
  Subgroup h;
  h.elems = elems;
  h.pos_of_ambient.assign(g.order, -1);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] < 0 || elems[i] >= static_cast<int>(g.order))
      throw std::invalid_argument("subgroup element out of range");
    h.pos_of_ambient[elems[i]] = static_cast<int>(i);
  }
  for (int a : elems) {
    if (!h.contains(g.inverse(a)))
      throw std::invalid_argument("subgroup not closed under inverse");
    for (int b : elems)
      if (!h.contains(g.op(a, b)))
        throw std::invalid_argument("subgroup not closed under product");
  }
  return h;
}

Subgroup Subgroup::closure(const FiniteGroup& g, const std::vector<int>& gens) {
  std::set<int> elems = {0};
  for (int x : gens) elems.insert(x);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(elems.begin(), elems.end());
    for (int a : cur) {
      if (elems.insert(g.inverse(a)).second) grew = true;
      for (int b : cur)
        if (elems.insert(g.op(a, b)).second) grew = true;
    }
  }
  return from_elements(g, std::vector<int>(elems.begin(), elems.end()));
}

FiniteGroup Subgroup::as_group(const FiniteGroup& ambient) const {
  FiniteGroup g;
  g.order = elems.size();
  for (int a : elems) g.names.push_back(ambient.names[a]);
  g.mult.assign(g.order, std::vector<int>(g.order));
  for (std::size_t i = 0; i < g.order; ++i)
    for (std::size_t j = 0; j < g.order; ++j)
      g.mult[i][j] = pos_of_ambient[ambient.op(elems[i], elems[j])];
  if (auto err = g.validate())
    throw std::logic_error("subgroup table invalid: " + *err);
  return g;
}

}  // namespace pcpw
