#ifndef GPD_GENERATORS_HPP
#define GPD_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpd/bibundle.hpp"
#include "gpd/functor.hpp"
#include "gpd/groupoid.hpp"

// Instance generation for the law suites and the acceptance tests: a
// deterministic RNG (stable across standard libraries), a small group
// catalog, exhaustive enumerations at desk scale and randomized samplers.

namespace gpd::gen {

/// splitmix64-based generator; avoids std::uniform_int_distribution so
/// streams are identical on every platform for a given seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next();
  /// Uniform in [0, n); n > 0.
  int below(int n);
  bool coin() { return below(2) == 1; }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below(static_cast<int>(v.size()))];
  }

  /// Fisher-Yates with this generator.
  std::vector<int> permutation(int n);

 private:
  uint64_t state_;
};

/// Groups of order <= max_order from a fixed catalog (cyclic groups, the
/// Klein group, S3, dihedral/quaternion of order 8, products).
std::vector<GroupTable> group_catalog(int max_order);

/// Every finite groupoid with at most the given numbers of objects and
/// arrows, one representative per isomorphism class (components are
/// pair(n) x group with groups from the catalog). Includes the empty one.
std::vector<Groupoid> enumerate_groupoids(int max_objects, int max_arrows);

/// Every action of g with carrier size <= max_carrier, one per
/// isomorphism class: a fiber size for each component plus a homomorphism
/// of the base isotropy group into the symmetric group of the fiber.
std::vector<GAction> enumerate_actions(GroupoidPtr g, int max_carrier);

/// Every internal functor h -> g, in a deterministic order; stops early
/// after `cap` functors when cap > 0.
std::vector<InternalFunctor> enumerate_functors(GroupoidPtr h, GroupoidPtr g,
                                                int cap = 0);

Groupoid random_groupoid(Rng& rng, int max_objects, int max_arrows);

/// Random relabeling of g (fresh object and arrow permutations).
Groupoid random_relabel(Rng& rng, const Groupoid& g);

GAction random_action(Rng& rng, GroupoidPtr g, int max_carrier);

/// Random anchor map into the objects of g.
FinMap random_anchor(Rng& rng, const Groupoid& g, int carrier);

/// A random functor out of a menagerie: identities, skeleton
/// inclusions/retractions, bang, points, group homomorphisms, relabeling
/// isomorphisms and composites of these.
InternalFunctor random_functor(Rng& rng, int max_objects, int max_arrows);

/// As above but guaranteed an essential equivalence.
InternalFunctor random_essential_equivalence(Rng& rng, int max_objects,
                                             int max_arrows);

/// Random valid bibundle with carrier <= max_carrier.
Bibundle random_bibundle(Rng& rng, int max_carrier);

/// Random pair of bibundles sharing their left groupoid (for pairing).
std::pair<Bibundle, Bibundle> random_pairable_bibundles(Rng& rng,
                                                        int max_carrier);

/// A deliberately broken instance together with the "code:" prefix the
/// validator must emit for it. Absent when the input admits no corruption
/// of any kind (e.g. no arrows at all).
struct CorruptGroupoid {
  Groupoid groupoid;
  std::string expected_code;
};
std::optional<CorruptGroupoid> corrupt_groupoid(Rng& rng, const Groupoid& g);

struct CorruptAction {
  GAction action;
  std::string expected_code;
};
std::optional<CorruptAction> corrupt_action(Rng& rng, const GAction& a);

}  // namespace gpd::gen

#endif  // GPD_GENERATORS_HPP
