#ifndef GPD_GROUPOID_HPP
#define GPD_GROUPOID_HPP

#include <memory>
#include <optional>
#include <vector>

#include "gpd/finset.hpp"
#include "gpd/group.hpp"

// Internal groupoids in finite sets. Conventions, fixed once for the whole
// library:
//   - src is the domain map d0, tgt the codomain map d1;
//   - (g1, g2) is composable iff src(g1) = tgt(g2), and mul(g1, g2) runs
//     "g1 after g2", so src(mul) = src(g2) and tgt(mul) = tgt(g1).

namespace gpd {

class Groupoid {
 public:
  Groupoid() = default;

  /// Raw constructor; checks shapes (domains/codomains of the structure
  /// maps, mul table dimensions) but not the groupoid axioms — use
  /// validate_groupoid for those, so that deliberately broken instances
  /// can be built and diagnosed.
  Groupoid(FinSet objects, FinSet arrows, FinMap src, FinMap tgt, FinMap unit,
           FinMap inv, std::vector<int> mul_table);

  const FinSet& objects() const { return objects_; }
  const FinSet& arrows() const { return arrows_; }
  const FinMap& src_map() const { return src_; }
  const FinMap& tgt_map() const { return tgt_; }
  const FinMap& unit_map() const { return unit_; }
  const FinMap& inv_map() const { return inv_; }
  const std::vector<int>& mul_table() const { return mul_; }

  int src(int g) const { return src_(g); }
  int tgt(int g) const { return tgt_(g); }
  int unit(int x) const { return unit_(x); }
  int inv(int g) const { return inv_(g); }

  bool composable(int g1, int g2) const { return src(g1) == tgt(g2); }

  /// mul(g1, g2) with src(g1) = tgt(g2); throws std::logic_error on an
  /// illegal pair or a hole in the table.
  int mul(int g1, int g2) const;

  /// Raw table entry, -1 where undefined. For validators and serializers.
  int mul_entry(int g1, int g2) const { return mul_[g1 * arrows_.size + g2]; }

  bool operator==(const Groupoid&) const = default;

 private:
  FinSet objects_;
  FinSet arrows_;
  FinMap src_, tgt_;  // arrows -> objects
  FinMap unit_;       // objects -> arrows
  FinMap inv_;        // arrows -> arrows
  std::vector<int> mul_;  // arrows x arrows, -1 where undefined
};

using GroupoidPtr = std::shared_ptr<const Groupoid>;

inline GroupoidPtr share(Groupoid g) {
  return std::make_shared<const Groupoid>(std::move(g));
}

/// Checks every groupoid axiom; violation codes: "unit:", "mul-domain:",
/// "mul-compat:", "unit-law:", "assoc:", "inv-compat:", "inv-law:".
ValidationReport validate_groupoid(const Groupoid& g);

// Constructors.

/// All structure identity: G0 = G1 = X.
Groupoid trivial_groupoid(FinSet x);

/// Arrows X×X (pair (a,b) at index a*|X|+b is the unique arrow b -> a):
/// src(a,b) = b, tgt(a,b) = a, mul((a,b),(b,c)) = (a,c), inv = swap.
Groupoid pair_groupoid(FinSet x);

/// One-object groupoid on a group table. Throws std::invalid_argument
/// naming the failed group axiom if the table is not a group.
Groupoid group_groupoid(const GroupTable& table);

/// Componentwise product; objects and arrows are lexicographic pairs with
/// the H-coordinate major: (h, g) at index h*|G| + g.
Groupoid product_groupoid(const Groupoid& h, const Groupoid& g);

/// src/tgt swapped, mul transposed.
Groupoid opposite_groupoid(const Groupoid& g);

/// Coproduct: objects/arrows of h first, then g shifted.
Groupoid disjoint_union(const Groupoid& h, const Groupoid& g);

/// Transport along bijections of objects and arrows.
Groupoid relabel_groupoid(const Groupoid& g, const FinMap& obj_perm,
                          const FinMap& arr_perm);

/// Connected components of the object set: x ~ y iff some arrow joins them.
Quotient object_components(const Groupoid& g);

/// The isotropy group at x: arrows g with src g = tgt g = x, in increasing
/// arrow order, together with their multiplication table.
struct IsotropyGroup {
  std::vector<int> arrows;  // element i of the table is arrows[i]
  GroupTable table;
};
IsotropyGroup isotropy_group(const Groupoid& g, int x);

/// Per-component scaffolding: objects, a base point (minimal object) and a
/// transport arrow base -> v for every object v, found by breadth-first
/// search so the choice is deterministic.
struct ComponentData {
  std::vector<int> objects;    // increasing
  int base = 0;                // minimal object
  std::vector<int> transport;  // parallel to objects; arrow base -> v
  IsotropyGroup isotropy;      // at the base
};
std::vector<ComponentData> component_data(const Groupoid& g);

/// The skeleton: a disjoint union of one-object groupoids, one per
/// component, with the inclusion (an essential equivalence) and the
/// transport-induced retraction realized in the functor module.
struct Skeleton {
  Groupoid groupoid;
  // Maps between skeleton arrows and g: per component, the isotropy arrows.
  std::vector<ComponentData> components;
  std::vector<int> arrow_to_g;   // skeleton arrow -> arrow of g
  std::vector<int> object_to_g;  // skeleton object (= component) -> base object
};
Skeleton skeleton(const Groupoid& g);

/// A complete Morita invariant in the finite-set model: the multiset of
/// isotropy-group isomorphism classes, one per connected component, each
/// class given by its canonical multiplication table and the whole list
/// sorted, so equal invariants compare bit-for-bit.
struct MoritaInvariant {
  std::vector<GroupTable> isotropy_classes;  // sorted canonical tables
  bool operator==(const MoritaInvariant&) const = default;
};

/// Explicit isomorphism witness between groupoids.
struct GroupoidIso {
  FinMap objects;  // g -> h object bijection
  FinMap arrows;   // g -> h arrow bijection
};

/// Deterministic isomorphism construction: invariant pre-filter on the
/// component profiles (object counts + canonical isotropy tables), then an
/// explicit witness built from transports and canonical group labelings.
/// The witness is re-verified in full before being returned.
std::optional<GroupoidIso> find_groupoid_isomorphism(const Groupoid& g,
                                                     const Groupoid& h);

/// True iff the witness is a bijective pair of maps satisfying the functor
/// laws from g to h. Used to double-check search results.
bool verify_groupoid_iso(const Groupoid& g, const Groupoid& h,
                         const GroupoidIso& iso);

}  // namespace gpd

#endif  // GPD_GROUPOID_HPP
