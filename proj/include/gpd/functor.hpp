#ifndef GPD_FUNCTOR_HPP
#define GPD_FUNCTOR_HPP

#include "gpd/action.hpp"
#include "gpd/finset.hpp"
#include "gpd/groupoid.hpp"

// Internal functors between groupoids, the restriction functor F*, its
// explicit left adjoint, and the essential-equivalence predicates.

namespace gpd {

struct InternalFunctor {
  GroupoidPtr dom;  // H
  GroupoidPtr cod;  // G
  FinMap obj_map;   // H0 -> G0
  FinMap arr_map;   // H1 -> G1

  bool operator==(const InternalFunctor&) const;
};

/// Codes: "src-compat:", "tgt-compat:", "unit-preservation:",
/// "mul-preservation:".
ValidationReport validate_functor(const InternalFunctor& f);

InternalFunctor identity_functor(GroupoidPtr g);
InternalFunctor compose(const InternalFunctor& f, const InternalFunctor& g);

/// The unique functor G -> trivial(1).
InternalFunctor bang_functor(GroupoidPtr g);

/// trivial(I) -> G picking the object x(i) at each point.
InternalFunctor point_functor(GroupoidPtr g, const FinMap& x);

/// Projections of a product groupoid built with product_groupoid(h, g).
InternalFunctor projection_functor(GroupoidPtr product, GroupoidPtr h,
                                   GroupoidPtr g, int which);

/// Inclusion of the skeleton (an essential equivalence) and the
/// transport-induced retraction G -> skeleton (a quasi-inverse).
struct SkeletonFunctors {
  GroupoidPtr skeleton_groupoid;
  InternalFunctor inclusion;   // skeleton -> G
  InternalFunctor retraction;  // G -> skeleton
};
SkeletonFunctors skeleton_functors(GroupoidPtr g);

/// F*A: carrier {(h0, x) | F0 h0 = anchor x} (pullback, lexicographic),
/// anchored at the first factor, with h acting through F1.
GAction restrict_action(const InternalFunctor& f, const GAction& a);

/// The (H×G)-object Y ×_{G0} G1 = {(y, g0) | F0(anchor y) = tgt g0} with
/// H acting by (h, (y, g0)) -> (h·y, F1(h)∘g0) and G acting by
/// (g, (y, g0)) -> (y, g0∘g⁻¹).
BiAction half_induce(const InternalFunctor& f, const GAction& y);

/// Σ_F Y: the orbit quotient of half_induce under the H component, with
/// the inherited G-anchor and G-action.
GAction induce(const InternalFunctor& f, const GAction& y);

/// The adjoint transpose of the adjunction Σ_F ⊣ F*, both directions, as
/// explicit equivariant maps; mutually inverse bijections of hom-sets.
EquivariantMap induce_transpose(const InternalFunctor& f, const GAction& y,
                                const GAction& a, const EquivariantMap& phi);
EquivariantMap induce_untranspose(const InternalFunctor& f, const GAction& y,
                                  const GAction& a, const EquivariantMap& big);

/// Unit Y -> F*(Σ_F Y) and counit Σ_F(F*A) -> A, materialized.
EquivariantMap induce_unit(const InternalFunctor& f, const GAction& y);
EquivariantMap induce_counit(const InternalFunctor& f, const GAction& a);

/// h -> (src h, tgt h, F1 h) is a bijection onto
/// {(x, y, g) | src g = F0 x, tgt g = F0 y}.
bool is_fully_faithful(const InternalFunctor& f);

/// {(x, g) | F0 x = tgt g} -> G0, (x, g) -> src g, is surjective.
bool is_essentially_surjective(const InternalFunctor& f);

bool is_essential_equivalence(const InternalFunctor& f);

}  // namespace gpd

#endif  // GPD_FUNCTOR_HPP
