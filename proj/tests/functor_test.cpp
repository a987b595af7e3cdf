#include "gpd/functor.hpp"

#include "doctest.h"
#include "gpd/generators.hpp"

using namespace gpd;

namespace {

// trivial(1) -> pair(2) at object 0
InternalFunctor point_into_pair2() {
  GroupoidPtr p2 = share(pair_groupoid(FinSet{2}));
  return point_functor(p2, FinMap(FinSet{1}, p2->objects(), {0}));
}

}  // namespace

TEST_CASE("functor validation") {
  GroupoidPtr g = share(pair_groupoid(FinSet{2}));
  CHECK(validate_functor(identity_functor(g)).ok());
  CHECK(validate_functor(bang_functor(g)).ok());
  CHECK(validate_functor(point_into_pair2()).ok());

  // corrupt the arrow map of the identity
  InternalFunctor f = identity_functor(g);
  std::vector<int> arr = f.arr_map.table();
  arr[g->unit(0)] = g->unit(1);
  InternalFunctor bad{f.dom, f.cod, f.obj_map,
                      FinMap(g->arrows(), g->arrows(), arr)};
  ValidationReport rep = validate_functor(bad);
  CHECK_FALSE(rep.ok());
  CHECK((rep.mentions("src-compat:") || rep.mentions("tgt-compat:") ||
         rep.mentions("unit-preservation:") ||
         rep.mentions("mul-preservation:")));
}

TEST_CASE("restrict: identity, bang, and the point inclusion") {
  GroupoidPtr p2 = share(pair_groupoid(FinSet{2}));
  GAction t = free_action(p2, FinMap::identity(p2->objects()));

  GAction r = restrict_action(identity_functor(p2), t);
  CHECK(r.carrier().size == t.carrier().size);
  CHECK(validate_action(r).ok());

  // restricting a plain set along bang gives the trivial action
  GroupoidPtr one = share(trivial_groupoid(FinSet{1}));
  GAction xs = trivial_action(one, FinSet{3});
  GAction rb = restrict_action(bang_functor(p2), xs);
  CHECK(validate_action(rb).ok());
  CHECK(rb.carrier().size == trivial_action(p2, FinSet{3}).carrier().size);
  auto iso = enumerate_equivariant_maps(rb, trivial_action(p2, FinSet{3}));
  bool found = false;
  for (const auto& m : iso) found = found || is_bijective(m.map);
  CHECK(found);

  // point inclusion: carrier = arrows of pair(2) with tgt 0
  GAction rp = restrict_action(point_into_pair2(), t);
  CHECK(rp.carrier().size == 2);
  CHECK(validate_action(rp).ok());
}

TEST_CASE("half_induce: shapes and commuting actions") {
  gen::Rng rng(31);
  for (int i = 0; i < 15; ++i) {
    InternalFunctor f = gen::random_functor(rng, 3, 8);
    GAction y = gen::random_action(rng, f.dom, 3);
    BiAction half = half_induce(f, y);
    CHECK(validate_biaction(half).ok());
  }
  // Y terminal: carrier is {(x, g0) | tgt g0 = F0 x}
  InternalFunctor f = point_into_pair2();
  BiAction half = half_induce(f, terminal_action(f.dom));
  CHECK(half.carrier.size == 2);
  // identity functor, terminal Y: carrier is G1
  GroupoidPtr p2 = share(pair_groupoid(FinSet{2}));
  BiAction half_id = half_induce(identity_functor(p2), terminal_action(p2));
  CHECK(half_id.carrier.size == p2->arrows().size);
}

TEST_CASE("induce: identity recovers the action, bang takes orbits") {
  GroupoidPtr p2 = share(pair_groupoid(FinSet{2}));
  GAction t = free_action(p2, FinMap::identity(p2->objects()));
  GAction ind = induce(identity_functor(p2), t);
  CHECK(validate_action(ind).ok());
  bool iso = false;
  for (const auto& m : enumerate_equivariant_maps(ind, t)) {
    iso = iso || is_bijective(m.map);
  }
  CHECK(iso);

  // bang: induce computes the orbit set as a plain set
  GAction ind_bang = induce(bang_functor(p2), t);
  CHECK(ind_bang.carrier().size == orbits(t).classes.size);
}

TEST_CASE("adjunction counts on the point inclusion") {
  InternalFunctor f = point_into_pair2();
  GAction y = trivial_action(f.dom, FinSet{2});
  GAction a = free_action(f.cod, FinMap::identity(f.cod->objects()));
  auto up = enumerate_equivariant_maps(induce(f, y), a);
  auto down = enumerate_equivariant_maps(y, restrict_action(f, a));
  CHECK(up.size() == down.size());
}

TEST_CASE("unit and counit are equivariant") {
  gen::Rng rng(41);
  for (int i = 0; i < 10; ++i) {
    InternalFunctor f = gen::random_functor(rng, 3, 8);
    GAction y = gen::random_action(rng, f.dom, 3);
    EquivariantMap u = induce_unit(f, y);
    CHECK(validate_equivariant(u).ok());
    GAction a = gen::random_action(rng, f.cod, 3);
    EquivariantMap c = induce_counit(f, a);
    CHECK(validate_equivariant(c).ok());
  }
}

TEST_CASE("fully faithful predicate") {
  CHECK(is_fully_faithful(point_into_pair2()));
  GroupoidPtr g = share(pair_groupoid(FinSet{3}));
  CHECK(is_fully_faithful(identity_functor(g)));
  GroupoidPtr z2 = share(group_groupoid(cyclic_group(2)));
  CHECK_FALSE(is_fully_faithful(bang_functor(z2)));
}

TEST_CASE("essentially surjective predicate") {
  CHECK(is_essentially_surjective(point_into_pair2()));
  GroupoidPtr g = share(trivial_groupoid(FinSet{2}));
  CHECK(is_essentially_surjective(identity_functor(g)));
  InternalFunctor pt = point_functor(g, FinMap(FinSet{1}, g->objects(), {0}));
  CHECK_FALSE(is_essentially_surjective(pt));  // object 1 unreachable
}

TEST_CASE("a map of sets is an essential equivalence iff bijective") {
  FinSet y{3}, x{3};
  GroupoidPtr ty = share(trivial_groupoid(y));
  GroupoidPtr tx = share(trivial_groupoid(x));
  FinMap bij(y, x, {2, 0, 1});
  InternalFunctor fb{ty, tx, bij, bij};
  CHECK(is_essential_equivalence(fb));
  FinMap non(y, x, {0, 0, 1});
  InternalFunctor fn{ty, tx, non, non};
  CHECK_FALSE(is_essential_equivalence(fn));
}

TEST_CASE("skeleton functors are essential equivalences") {
  gen::Rng rng(53);
  for (int i = 0; i < 10; ++i) {
    GroupoidPtr g = share(gen::random_groupoid(rng, 4, 10));
    SkeletonFunctors sk = skeleton_functors(g);
    CHECK(validate_functor(sk.inclusion).ok());
    CHECK(validate_functor(sk.retraction).ok());
    CHECK(is_essential_equivalence(sk.inclusion));
    CHECK(is_essential_equivalence(sk.retraction));
  }
}

TEST_CASE("projection functors of a product are functorial") {
  GroupoidPtr h = share(pair_groupoid(FinSet{2}));
  GroupoidPtr g = share(group_groupoid(cyclic_group(2)));
  GroupoidPtr prod = share(product_groupoid(*h, *g));
  InternalFunctor p1 = projection_functor(prod, h, g, 1);
  InternalFunctor p2 = projection_functor(prod, h, g, 2);
  CHECK(validate_functor(p1).ok());
  CHECK(validate_functor(p2).ok());
  CHECK(*p1.cod == *h);
  CHECK(*p2.cod == *g);
}
