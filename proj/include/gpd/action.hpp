#ifndef GPD_ACTION_HPP
#define GPD_ACTION_HPP

#include <optional>
#include <vector>

#include "gpd/finset.hpp"
#include "gpd/groupoid.hpp"

// G-objects (finite G-sets). A single handedness convention is used
// throughout: act(g, x) is defined exactly when src(g) = anchor(x), and the
// result is anchored at tgt(g). The action table is stored only on those
// legal pairs; looking up an illegal pair throws rather than defaulting.

namespace gpd {

class GAction {
 public:
  GAction() = default;

  /// Shape-checked (anchor into G0, table dimensions); the action axioms
  /// are checked by validate_action so broken instances can be diagnosed.
  GAction(GroupoidPtr groupoid, FinSet carrier, FinMap anchor,
          std::vector<int> act_table);

  const Groupoid& groupoid() const { return *groupoid_; }
  const GroupoidPtr& groupoid_ptr() const { return groupoid_; }
  const FinSet& carrier() const { return carrier_; }
  const FinMap& anchor_map() const { return anchor_; }
  const std::vector<int>& act_table() const { return act_; }

  int anchor(int x) const { return anchor_(x); }
  bool act_defined(int g, int x) const {
    return groupoid().src(g) == anchor(x);
  }
  /// Throws std::logic_error on a pair outside the action domain.
  int act(int g, int x) const;
  int act_entry(int g, int x) const { return act_[g * carrier_.size + x]; }

  bool operator==(const GAction&) const;

 private:
  GroupoidPtr groupoid_;
  FinSet carrier_;
  FinMap anchor_;          // carrier -> G0
  std::vector<int> act_;   // |G1| x |carrier|, -1 off the action domain
};

/// An anchor-preserving, action-preserving map between G-sets.
struct EquivariantMap {
  GAction dom;
  GAction cod;
  FinMap map;
};

/// Violation codes: "anchor:", "act-domain:", "act-unit:", "act-assoc:",
/// "act-anchor:".
ValidationReport validate_action(const GAction& a);

/// Codes: "eq-groupoid:", "eq-shape:", "eq-anchor:", "eq-action:".
ValidationReport validate_equivariant(const EquivariantMap& h);

EquivariantMap identity_equivariant(const GAction& a);
EquivariantMap compose(const EquivariantMap& f, const EquivariantMap& g);

// Constructors.

/// Carrier X × G0 (pair (x, u) at index x*|G0|+u), anchored at the second
/// factor; arrows move only the G0 coordinate.
GAction trivial_action(const Groupoid& g, FinSet x);
GAction trivial_action(GroupoidPtr g, FinSet x);

/// The terminal G-object: trivial action on a one-element set.
GAction terminal_action(GroupoidPtr g);

/// G* on morphisms: the equivariant map trivial(Y) -> trivial(X) induced
/// by f : Y -> X.
EquivariantMap trivial_action_map(GroupoidPtr g, const FinMap& f);

/// The free G-object T_G(X_f): carrier {(g, x) | src g = f(x)} (pullback of
/// src along f, lexicographic), anchored at tgt(g), acting by composition.
GAction free_action(GroupoidPtr g, const FinMap& f);

/// Orbit quotient: the coequalizer of the action against the projection —
/// the connected-components functor applied to the action.
Quotient orbits(const GAction& a);

/// The action groupoid: objects the carrier, arrows the action domain
/// {(g, x) | src g = anchor x} (lexicographic), src (g,x) = x,
/// tgt (g,x) = act(g,x).
Groupoid action_groupoid(const GAction& a);

/// Fibered product over G0 with the diagonal action.
GAction product_action(const GAction& a, const GAction& b);

/// Pullback of two equivariant maps with a common codomain.
GAction pullback_action(const EquivariantMap& h, const EquivariantMap& k);

/// Complete, duplicate-free, deterministically ordered hom-set. Searches
/// orbit representatives and propagates along the action rather than
/// enumerating raw functions.
std::vector<EquivariantMap> enumerate_equivariant_maps(const GAction& a,
                                                       const GAction& b);

/// Witness output of the Frobenius checks: the canonical comparison map
/// and whether it is a bijection (it always is over finite sets; the map
/// is still constructed and checked).
struct FrobeniusWitness {
  bool bijective = false;
  FinMap canonical;  // see the check for the domain/codomain conventions
};

/// Frobenius reciprocity for the connected-components adjunction: the
/// canonical map orbits(W × G*X) -> orbits(W) × X, codomain indexed
/// w_class * |X| + x.
FrobeniusWitness frobenius_check(const GAction& w, FinSet x);

/// The stable (sliced) form: for g : W -> G*X equivariant and f : Y -> X,
/// the canonical map orbits(W ×_{G*X} G*Y) -> orbits(W) ×_X Y, where the
/// codomain is the pullback of f along the adjoint transpose of g.
FrobeniusWitness stable_frobenius_check(const GAction& w,
                                        const EquivariantMap& g,
                                        const FinMap& f);

/// An object with two commuting actions (an (H×G)-object in components):
/// the raw data of a bibundle, before the principality/descent conditions.
struct BiAction {
  GroupoidPtr left;   // H
  GroupoidPtr right;  // G
  FinSet carrier;
  FinMap p_anchor;  // carrier -> H0
  FinMap q_anchor;  // carrier -> G0
  std::vector<int> h_act;  // |H1| x |carrier|
  std::vector<int> g_act;  // |G1| x |carrier|

  GAction left_action() const;
  GAction right_action() const;
  /// The same data as a single action of left × right (arrow (h,g) at
  /// index h*|G1|+g).
  GAction as_product_action() const;

  int hact(int h, int x) const;
  int gact(int g, int x) const;

  bool operator==(const BiAction&) const;
};

/// Conditions (i)-(v) of an (H×G)-object: codes "left-action:",
/// "right-action:", "p-invariance:", "q-invariance:", "commute:".
ValidationReport validate_biaction(const BiAction& b);

/// Inverse of as_product_action: split a product-groupoid action into the
/// two commuting components.
BiAction biaction_from_product_action(GroupoidPtr left, GroupoidPtr right,
                                      const GAction& prod);

bool same_groupoid(const GAction& a, const GAction& b);

}  // namespace gpd

#endif  // GPD_ACTION_HPP
