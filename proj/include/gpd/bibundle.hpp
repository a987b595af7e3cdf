#ifndef GPD_BIBUNDLE_HPP
#define GPD_BIBUNDLE_HPP

#include <optional>
#include <vector>

#include "gpd/action.hpp"
#include "gpd/functor.hpp"

// Hilsum-Skandalis maps as data: an (H×G)-object whose right action is
// principal along the fibers of the left anchor and whose left anchor is a
// surjection (the finite-set reading of effective descent).

namespace gpd {

/// A bibundle from H to G. Validation runs once at construction and is
/// cached together with the division map (the inverse of principality),
/// which the isomorphism searches and the tensor calculus lean on.
class Bibundle {
 public:
  Bibundle() = default;
  explicit Bibundle(BiAction data);

  const BiAction& data() const { return data_; }
  const Groupoid& left() const { return *data_.left; }
  const Groupoid& right() const { return *data_.right; }
  const GroupoidPtr& left_ptr() const { return data_.left; }
  const GroupoidPtr& right_ptr() const { return data_.right; }
  const FinSet& carrier() const { return data_.carrier; }
  int p(int x) const { return data_.p_anchor(x); }
  int q(int x) const { return data_.q_anchor(x); }

  const ValidationReport& report() const { return report_; }
  bool valid() const { return report_.ok(); }

  /// The unique arrow g with g·x2 = x1, for p(x1) = p(x2). Only available
  /// when principality holds; throws otherwise.
  int division(int x1, int x2) const;

  bool operator==(const Bibundle& o) const { return data_ == o.data_; }

 private:
  BiAction data_;
  ValidationReport report_;
  std::vector<int> division_;  // |P| x |P|, -1 off the p-fibered diagonal
};

/// A map of bibundles: equivariant for both actions over both anchors.
/// Always a bijection between valid bibundles; assert with
/// validate_bibundle_morphism.
struct BibundleMorphism {
  Bibundle dom;
  Bibundle cod;
  FinMap map;
};

/// Conditions (i)-(v) of the (H×G)-object plus "principality:" (with the
/// failing element) and "descent:".
ValidationReport validate_bibundle(const Bibundle& p);

/// Codes: "bm-shape:", "bm-anchors:", "bm-left:", "bm-right:",
/// "bm-bijective:".
ValidationReport validate_bibundle_morphism(const BibundleMorphism& m);

/// P = G1 with p = tgt, q = src; H acts by composition, G by
/// precomposition with the inverse.
Bibundle identity_bibundle(GroupoidPtr g);

/// Left/right roles swapped. Both stored actions are src-anchored, so the
/// swap is literal; validity of the result is whatever the re-run
/// validation says (descent can fail when q was not surjective).
Bibundle opposite_bibundle(const Bibundle& p);

/// The bundle of an internal functor F : H -> G:
/// P = {(x, g) | tgt g = F0 x} with p = first, q = src g,
/// h·(x, g) = (tgt h, F1(h)∘g) and g'·(x, g) = (x, g∘g'⁻¹).
Bibundle from_functor(const InternalFunctor& f);

/// The principal bundle of a point x : I -> G0 (from_functor of the
/// point functor).
Bibundle point_bundle(GroupoidPtr g, const FinMap& x);

/// Composite H -> K of P : H -> G and Q : G -> K: the orbit quotient of
/// the diagonal G-action on P ×_{G0} Q, inheriting the H- and K-actions.
Bibundle compose(const Bibundle& p, const Bibundle& q);

/// Tensor with a left-module: the G-action on the orbit quotient of the
/// diagonal H-action on P ×_{H0} Y. The action of the adjunction the
/// bundle represents, on objects.
GAction tensor_apply(const Bibundle& p, const GAction& y);

/// Right adjoint on objects: tensor_apply(opposite(P), X).
GAction coapply(const Bibundle& p, const GAction& x);

/// Adjoint transpose of tensor_apply ⊣ coapply, both directions.
EquivariantMap tensor_transpose(const Bibundle& p, const GAction& y,
                                const GAction& x, const EquivariantMap& phi);
EquivariantMap tensor_untranspose(const Bibundle& p, const GAction& y,
                                  const GAction& x,
                                  const EquivariantMap& big);

/// First bibundle morphism between P and P' in the deterministic search
/// order, or absence. Searches fiber by fiber and extends along orbits.
std::optional<BibundleMorphism> find_morphism(const Bibundle& p,
                                              const Bibundle& q);

/// The complete (finite) set of morphisms P -> P', deterministic order.
std::vector<BibundleMorphism> enumerate_morphisms(const Bibundle& p,
                                                  const Bibundle& q);

/// The morphism point_bundle(x2) -> point_bundle(x1) attached to an arrow
/// family y : I -> G1 with tgt∘y = x1 and src∘y = x2; on carriers,
/// (i, g) -> (i, y(i)∘g).
BibundleMorphism point_morphism(GroupoidPtr g, const FinMap& y,
                                const FinMap& x1, const FinMap& x2);

/// The pairing of P1 : K -> H and P2 : K -> G into K -> H×G on the
/// carrier P1 ×_{K0} P2, K acting diagonally.
Bibundle pair_bibundles(const Bibundle& p1, const Bibundle& p2);

/// The hom groupoid C(I, G): objects are maps I -> G0, arrows maps
/// I -> G1 with the pointwise structure; index of a map is its table read
/// as big-endian base-|G0| (resp. base-|G1|) digits.
Groupoid points_groupoid(const Groupoid& g, FinSet i);

/// Table of the map I -> G0 (or G1) encoded by a points-groupoid index.
std::vector<int> decode_point(int index, int i_size, int base);

}  // namespace gpd

#endif  // GPD_BIBUNDLE_HPP
