#include "gpd/action.hpp"

#include "doctest.h"
#include "gpd/bibundle.hpp"
#include "gpd/generators.hpp"

using namespace gpd;

namespace {

GroupoidPtr z2() { return share(group_groupoid(cyclic_group(2))); }

// Z/2 acting on {0,1} by the swap: one object, free transitive action.
GAction z2_swap() {
  GroupoidPtr g = z2();
  FinSet two{2};
  FinMap anchor = FinMap::constant(two, g->objects(), 0);
  // arrows: 0 = identity, 1 = the involution
  std::vector<int> act = {0, 1, 1, 0};
  return GAction(g, two, anchor, act);
}

}  // namespace

TEST_CASE("trivial actions validate; empty carrier is legal") {
  GroupoidPtr g = share(pair_groupoid(FinSet{2}));
  CHECK(validate_action(trivial_action(g, FinSet{1})).ok());
  CHECK(validate_action(trivial_action(g, FinSet{0})).ok());
  GAction t = trivial_action(share(trivial_groupoid(FinSet{2})), FinSet{3});
  CHECK(t.carrier().size == 6);
  CHECK(validate_action(t).ok());
  CHECK(orbits(t).classes.size == 6);  // all orbits singletons
}

TEST_CASE("free actions: identity anchor gives the regular action") {
  GroupoidPtr g = share(pair_groupoid(FinSet{2}));
  GAction t = free_action(g, FinMap::identity(g->objects()));
  CHECK(t.carrier() == g->arrows());
  CHECK(validate_action(t).ok());

  // free action over a trivial groupoid is just the set
  GroupoidPtr tr = share(trivial_groupoid(FinSet{3}));
  FinMap f(FinSet{4}, tr->objects(), {0, 1, 1, 2});
  GAction ft = free_action(tr, f);
  CHECK(ft.carrier().size == 4);

  // pair(2), one point anchored at 0: carrier counts arrows out of 0
  FinMap pt(FinSet{1}, g->objects(), {0});
  CHECK(free_action(g, pt).carrier().size == 2);
}

TEST_CASE("a corrupted action table is reported with the failed identity") {
  GAction a = z2_swap();
  CHECK(validate_action(a).ok());
  std::vector<int> act = a.act_table();
  act[1 * 2 + 0] = 0;  // the involution now fixes 0: breaks associativity
  GAction bad(a.groupoid_ptr(), a.carrier(), a.anchor_map(), act);
  ValidationReport rep = validate_action(bad);
  CHECK_FALSE(rep.ok());
  CHECK((rep.mentions("act-assoc:") || rep.mentions("act-unit:")));
}

TEST_CASE("orbits: free, trivial, and the swap") {
  GroupoidPtr g = share(pair_groupoid(FinSet{2}));
  FinMap f(FinSet{3}, g->objects(), {0, 1, 1});
  CHECK(orbits(free_action(g, f)).classes.size == 3);

  // trivial action: |X| x components(G)
  GroupoidPtr mix = share(
      disjoint_union(pair_groupoid(FinSet{2}), trivial_groupoid(FinSet{1})));
  Quotient q = orbits(trivial_action(mix, FinSet{2}));
  CHECK(q.classes.size == 2 * 2);

  CHECK(orbits(z2_swap()).classes.size == 1);
}

TEST_CASE("action groupoids") {
  GroupoidPtr one = share(trivial_groupoid(FinSet{1}));
  GAction x = trivial_action(one, FinSet{3});
  CHECK(action_groupoid(x) == trivial_groupoid(FinSet{3}));

  GAction t = free_action(z2(), FinMap::constant(FinSet{1}, FinSet{1}, 0));
  CHECK(action_groupoid(t).objects().size == 2);

  // Z/2 swapping two points gives pair(2)
  auto iso = find_groupoid_isomorphism(action_groupoid(z2_swap()),
                                       pair_groupoid(FinSet{2}));
  CHECK(iso.has_value());
}

TEST_CASE("product and pullback of actions") {
  GroupoidPtr g = z2();
  GAction t = free_action(g, FinMap::identity(g->objects()));
  GAction prod = product_action(t, t);
  CHECK(validate_action(prod).ok());
  CHECK(prod.carrier().size == 4);  // all arrow pairs share the object

  GAction term = terminal_action(g);
  GAction pt = product_action(t, term);
  CHECK(pt.carrier().size == t.carrier().size);

  EquivariantMap id = identity_equivariant(t);
  GAction diag = pullback_action(id, id);
  CHECK(diag.carrier().size == t.carrier().size);
  CHECK(validate_action(diag).ok());
}

TEST_CASE("equivariant map enumeration") {
  GroupoidPtr g = z2();
  GAction t = free_action(g, FinMap::identity(g->objects()));
  GAction term = terminal_action(g);
  CHECK(enumerate_equivariant_maps(t, term).size() == 1);
  // no fixed points in a free action
  CHECK(enumerate_equivariant_maps(term, t).empty());
  // self-maps of the regular action = group elements
  auto self = enumerate_equivariant_maps(t, t);
  CHECK(self.size() == 2);
  for (const auto& m : self) CHECK(validate_equivariant(m).ok());
}

TEST_CASE("frobenius checks construct bijections") {
  gen::Rng rng(17);
  for (int i = 0; i < 25; ++i) {
    GroupoidPtr g = share(gen::random_groupoid(rng, 4, 10));
    GAction w = gen::random_action(rng, g, 5);
    FrobeniusWitness fw = frobenius_check(w, FinSet{1 + rng.below(3)});
    CHECK(fw.bijective);
  }
  // the X = 1 case is identity-like
  GAction w = z2_swap();
  FrobeniusWitness fw = frobenius_check(w, FinSet{1});
  CHECK(fw.bijective);
  CHECK(fw.canonical.dom().size == 1);

  // counted example: W = T_G1 over pair(2), X = 2: four classes both sides
  GroupoidPtr p2 = share(pair_groupoid(FinSet{2}));
  GAction t = free_action(p2, FinMap::identity(p2->objects()));
  FrobeniusWitness fw2 = frobenius_check(t, FinSet{2});
  CHECK(fw2.bijective);
  CHECK(fw2.canonical.dom().size == 4);  // |orbits(T1)| * |X| = 2 * 2
}

TEST_CASE("stable frobenius: isomorphism case and random instances") {
  GroupoidPtr g = z2();
  GAction w = z2_swap();
  FinSet x{2};
  GAction gx = trivial_action(g, x);
  auto maps = enumerate_equivariant_maps(w, gx);
  REQUIRE_FALSE(maps.empty());
  FinMap f_iso(x, x, {1, 0});
  CHECK(stable_frobenius_check(w, maps[0], f_iso).bijective);
  FinMap f(FinSet{3}, x, {0, 0, 1});
  CHECK(stable_frobenius_check(w, maps[0], f).bijective);
}

TEST_CASE("biaction round-trips through the product action") {
  gen::Rng rng(23);
  for (int i = 0; i < 10; ++i) {
    Bibundle b = gen::random_bibundle(rng, 6);
    GAction prod = b.data().as_product_action();
    CHECK(validate_action(prod).ok());
    BiAction back =
        biaction_from_product_action(b.left_ptr(), b.right_ptr(), prod);
    CHECK(back == b.data());
  }
}

TEST_CASE("the action groupoid of the regular action has the arrows as objects") {
  GroupoidPtr g = share(pair_groupoid(FinSet{2}));
  GAction t = free_action(g, FinMap::identity(g->objects()));
  CHECK(action_groupoid(t).objects() == g->arrows());
}
