#ifndef GPD_GROUP_HPP
#define GPD_GROUP_HPP

#include <optional>
#include <vector>

#include "gpd/finset.hpp"

// Plain multiplication tables for finite groups. These back the one-object
// groupoids, the isotropy computations and the Morita invariant.

namespace gpd {

/// A finite group as a multiplication table; mul[a*n + b] = a*b.
/// The identity may sit at any index; identity() locates it.
struct GroupTable {
  int n = 0;
  std::vector<int> mul;

  int at(int a, int b) const { return mul[a * n + b]; }
  int identity() const;
  int inverse_of(int a) const;
  int element_order(int a) const;

  bool operator==(const GroupTable&) const = default;
};

/// Checks the group axioms. Violations are prefixed with
/// "closure:", "associativity:", "identity:" or "inverse:".
ValidationReport validate_group_table(const GroupTable& t);

struct CanonicalGroup {
  GroupTable table;            // lexicographically-least breadth-first form
  std::vector<int> relabel;    // old element -> canonical label
};

/// Canonical form of a group table: the least table over the relabelings
/// induced by breadth-first enumeration from a minimal generating tuple.
/// Two tables are isomorphic iff their canonical forms are equal; composing
/// one relabeling with the inverse of the other yields an explicit
/// isomorphism. Guarded for order <= 64.
CanonicalGroup canonical_group(const GroupTable& t);

/// Explicit isomorphism a -> b if one exists (via canonical labelings).
std::optional<std::vector<int>> group_isomorphism(const GroupTable& a,
                                                  const GroupTable& b);

/// All homomorphisms a -> b, each as an image table, in a deterministic
/// order. Enumerates images of a minimal generating tuple and extends.
std::vector<std::vector<int>> enumerate_group_homs(const GroupTable& a,
                                                   const GroupTable& b);

/// Sorted element-order multiset; cheap isomorphism pre-filter.
std::vector<int> order_profile(const GroupTable& t);

// Small catalog used by generators and tests.
GroupTable cyclic_group(int n);
GroupTable symmetric_group_3();
GroupTable dihedral_group(int n);  // order 2n
GroupTable quaternion_group();
GroupTable product_group(const GroupTable& a, const GroupTable& b);

}  // namespace gpd

#endif  // GPD_GROUP_HPP
