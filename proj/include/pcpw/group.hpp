#pragma once

#include <optional>
#include <string>
#include <vector>

namespace pcpw {

/// A finite group given by its full multiplication table.  Element 0 is the
/// identity.  validate() checks the group axioms (associativity on all
/// triples, identity and inverse laws).
struct FiniteGroup {
  std::size_t order = 0;
  std::vector<std::string> names;
  std::vector<std::vector<int>> mult;  // mult[a][b] = index of a*b
  std::vector<int> inv;                // filled by validate()/finalize()

  int op(int a, int b) const { return mult[a][b]; }
  int inverse(int a) const { return inv[a]; }

  /// Builds inverse table and returns an axiom violation message, if any.
  std::optional<std::string> validate();

  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::size_t n);
  /// Symmetric group on `points` letters, elements ordered with the
  /// identity first; names use cycle notation on 0-based points.
  static FiniteGroup symmetric(std::size_t points);
};

/// A subgroup listed by ambient element indices, sorted ascending (so the
/// identity 0 comes first).  Keeping ambient indices lets conjugation and
/// the transposition maps move elements between subgroup algebras without
/// relabeling.
struct Subgroup {
  std::vector<int> elems;           // sorted, elems[0] == 0
  std::vector<int> pos_of_ambient;  // ambient index -> position, or -1

  std::size_t order() const { return elems.size(); }
  bool contains(int ambient) const {
    return ambient >= 0 &&
           ambient < static_cast<int>(pos_of_ambient.size()) &&
           pos_of_ambient[ambient] >= 0;
  }
  int pos(int ambient) const { return pos_of_ambient[ambient]; }

  static Subgroup from_elements(const FiniteGroup& g, std::vector<int> elems);
  static Subgroup closure(const FiniteGroup& g, const std::vector<int>& gens);

  /// Reindexed multiplication table of the subgroup itself.
  FiniteGroup as_group(const FiniteGroup& ambient) const;
};

}  // namespace pcpw
