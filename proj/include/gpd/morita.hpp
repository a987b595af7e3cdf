#ifndef GPD_MORITA_HPP
#define GPD_MORITA_HPP

#include <optional>
#include <string>
#include <vector>

#include "gpd/bibundle.hpp"
#include "gpd/functor.hpp"

// Morita equivalence with certificates, inversion of essential
// equivalences, semidirect products, and reconstruction of internal
// groupoids from bibundles.

namespace gpd {

/// The multiset of isotropy classes, one per component (see groupoid.hpp).
MoritaInvariant morita_invariant(const Groupoid& g);

std::string describe_invariant(const MoritaInvariant& inv);

/// Either an invertible bibundle with both composite-is-identity witnesses,
/// or the two distinguishing invariants.
struct MoritaCertificate {
  bool equivalent = false;
  // Positive case:
  std::optional<Bibundle> bundle;             // H -> G
  std::optional<BibundleMorphism> left_unit;  // compose(P, op P) -> id_H
  std::optional<BibundleMorphism> right_unit; // compose(op P, P) -> id_G
  // Refutation:
  MoritaInvariant left_invariant;
  MoritaInvariant right_invariant;
};

/// Decision via the invariant; on a match the certificate bundle is built
/// through the skeletons (component matching by canonical isotropy table,
/// minimal-index representatives, lexicographic tie-breaks) and verified
/// from scratch before being returned.
MoritaCertificate morita_equivalent(const Groupoid& h, const Groupoid& g);

/// Inverts an essential equivalence: the certificate around
/// from_functor(F). Throws std::invalid_argument citing the failed
/// predicate when F is not an essential equivalence.
MoritaCertificate invert_essential_equivalence(const InternalFunctor& f);

/// Exhaustive search for an invertible bibundle H -> G with carrier at
/// most `max_carrier`; the independent oracle the decision procedure is
/// tested against. Enumerates candidate (H×G)-actions (up to isomorphism,
/// pruned only by conditions that are part of the bibundle definition)
/// and checks invertibility of each candidate from scratch.
std::optional<Bibundle> invertible_bibundle_oracle(const Groupoid& h,
                                                   const Groupoid& g,
                                                   int max_carrier);

/// A groupoid internal to the category of G-sets.
struct InternalGroupoid {
  GAction obj_action;  // K0
  GAction arr_action;  // K1
  FinMap src, tgt;     // K1 carrier -> K0 carrier
  FinMap unit;         // K0 carrier -> K1 carrier
  FinMap inv;          // K1 carrier -> K1 carrier
  std::vector<int> mul;  // |K1| x |K1|, -1 where undefined

  const Groupoid& base() const { return obj_action.groupoid(); }
  Groupoid underlying_groupoid() const;

  bool operator==(const InternalGroupoid&) const = default;
};

/// Codes: everything validate_groupoid emits (for the underlying data)
/// plus "base:", "ig-equivariance:".
ValidationReport validate_internal_groupoid(const InternalGroupoid& k);

/// The trivial internal groupoid on a G-set.
InternalGroupoid trivial_internal_groupoid(const GAction& x);

/// G ⋉ K: objects the carrier of K0, arrows the fibered product
/// G1 ×_{G0} K1 with src (g,k) = src_K(k), tgt (g,k) = tgt_K(g·k) and
/// multiplication ((g,k),(g',k')) -> (g∘g', (g'⁻¹·k)∘k').
Groupoid semidirect_product(const InternalGroupoid& k);

/// The internal groupoid over G of a bibundle P : H -> G:
/// K0 = tensor_apply(P, T_H 1), K1 = tensor_apply(P, T_H 1 × T_H 1),
/// structure maps induced by the projections, diagonal and twist.
InternalGroupoid reconstruct_internal_groupoid(const Bibundle& p);

}  // namespace gpd

#endif  // GPD_MORITA_HPP
