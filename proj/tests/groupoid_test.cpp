#include "gpd/groupoid.hpp"

#include "doctest.h"
#include "gpd/generators.hpp"

using namespace gpd;

TEST_CASE("trivial groupoids validate at sizes 0, 1, 3") {
  for (int n : {0, 1, 3}) {
    Groupoid g = trivial_groupoid(FinSet{n});
    CHECK(validate_groupoid(g).ok());
    CHECK(g.objects().size == n);
    CHECK(g.arrows().size == n);
  }
}

TEST_CASE("pair groupoid structure") {
  Groupoid g = pair_groupoid(FinSet{3});
  CHECK(validate_groupoid(g).ok());
  CHECK(g.arrows().size == 9);

  Groupoid p1 = pair_groupoid(FinSet{1});
  CHECK(p1 == trivial_groupoid(FinSet{1}));
  CHECK(pair_groupoid(FinSet{0}).arrows().size == 0);

  // every hom-set of pair(2) is a singleton
  Groupoid p2 = pair_groupoid(FinSet{2});
  CHECK(p2.arrows().size == 4);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      int count = 0;
      for (int a = 0; a < 4; ++a) {
        if (p2.src(a) == x && p2.tgt(a) == y) ++count;
      }
      CHECK(count == 1);
    }
  }
}

TEST_CASE("corrupting the inverse map is reported as an inverse law") {
  Groupoid g = pair_groupoid(FinSet{3});
  // replace inv by the identity on arrows: (a,b)^-1 should be (b,a)
  Groupoid bad(g.objects(), g.arrows(), g.src_map(), g.tgt_map(),
               g.unit_map(), FinMap::identity(g.arrows()), g.mul_table());
  ValidationReport rep = validate_groupoid(bad);
  CHECK_FALSE(rep.ok());
  CHECK(rep.mentions("inv-compat:"));
}

TEST_CASE("group groupoids") {
  Groupoid z2 = group_groupoid(cyclic_group(2));
  CHECK(validate_groupoid(z2).ok());
  CHECK(z2.objects().size == 1);
  CHECK(z2.arrows().size == 2);

  CHECK(group_groupoid(cyclic_group(1)) == trivial_groupoid(FinSet{1}));

  GroupTable bad;
  bad.n = 3;
  bad.mul = {0, 1, 2, 1, 2, 0, 2, 0, 1};
  bad.mul[5] = 1;
  CHECK_THROWS_WITH_AS(group_groupoid(bad),
                       doctest::Contains("associativity"),
                       std::invalid_argument);
}

TEST_CASE("products") {
  Groupoid g = product_groupoid(trivial_groupoid(FinSet{1}),
                                pair_groupoid(FinSet{2}));
  CHECK(validate_groupoid(g).ok());
  CHECK(find_groupoid_isomorphism(g, pair_groupoid(FinSet{2})).has_value());

  Groupoid pp = product_groupoid(pair_groupoid(FinSet{2}),
                                 pair_groupoid(FinSet{2}));
  CHECK(pp.objects().size == 4);
  CHECK(pp.arrows().size == 16);
  CHECK(validate_groupoid(pp).ok());

  CHECK(find_groupoid_isomorphism(
            product_groupoid(trivial_groupoid(FinSet{2}),
                             trivial_groupoid(FinSet{3})),
            trivial_groupoid(FinSet{6}))
            .has_value());
}

TEST_CASE("opposite is a bit-for-bit involution") {
  gen::Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    Groupoid g = gen::random_groupoid(rng, 4, 12);
    CHECK(opposite_groupoid(opposite_groupoid(g)) == g);
    CHECK(validate_groupoid(opposite_groupoid(g)).ok());
  }
  Groupoid t = trivial_groupoid(FinSet{3});
  CHECK(opposite_groupoid(t) == t);
  // opposite of pair(2) is isomorphic to pair(2) via inv
  Groupoid p = pair_groupoid(FinSet{2});
  CHECK(find_groupoid_isomorphism(opposite_groupoid(p), p).has_value());
}

TEST_CASE("object components") {
  CHECK(object_components(pair_groupoid(FinSet{3})).classes.size == 1);
  CHECK(object_components(trivial_groupoid(FinSet{3})).classes.size == 3);
  Groupoid mix = disjoint_union(pair_groupoid(FinSet{2}),
                                trivial_groupoid(FinSet{1}));
  CHECK(object_components(mix).classes.size == 2);
}

TEST_CASE("isotropy groups") {
  Groupoid p = pair_groupoid(FinSet{3});
  for (int x = 0; x < 3; ++x) {
    CHECK(isotropy_group(p, x).table.n == 1);
  }
  Groupoid z2 = group_groupoid(cyclic_group(2));
  CHECK(isotropy_group(z2, 0).table.n == 2);
  CHECK(isotropy_group(trivial_groupoid(FinSet{3}), 1).table.n == 1);
  CHECK_THROWS_AS(isotropy_group(z2, 1), std::out_of_range);
}

TEST_CASE("isomorphism search respects structure") {
  gen::Rng rng(5);
  for (int i = 0; i < 15; ++i) {
    Groupoid g = gen::random_groupoid(rng, 4, 12);
    Groupoid h = gen::random_relabel(rng, g);
    auto iso = find_groupoid_isomorphism(g, h);
    REQUIRE(iso.has_value());
    CHECK(verify_groupoid_iso(g, h, *iso));
  }
  // different isotropy: no isomorphism
  CHECK_FALSE(find_groupoid_isomorphism(group_groupoid(cyclic_group(2)),
                                        group_groupoid(cyclic_group(3)))
                  .has_value());
  // same sizes, different component structure
  Groupoid a = disjoint_union(group_groupoid(cyclic_group(2)),
                              trivial_groupoid(FinSet{1}));
  Groupoid b = trivial_groupoid(FinSet{2});
  CHECK_FALSE(find_groupoid_isomorphism(
                  a, disjoint_union(b, trivial_groupoid(FinSet{0})))
                  .has_value());
}

TEST_CASE("skeletons collapse components to their isotropy") {
  Groupoid g = disjoint_union(pair_groupoid(FinSet{3}),
                              group_groupoid(cyclic_group(2)));
  Skeleton sk = skeleton(g);
  CHECK(validate_groupoid(sk.groupoid).ok());
  CHECK(sk.groupoid.objects().size == 2);
  CHECK(sk.groupoid.arrows().size == 3);  // trivial isotropy + Z/2
}

TEST_CASE("every constructor output validates at all sizes up to 5") {
  for (int n = 0; n <= 5; ++n) {
    CHECK(validate_groupoid(trivial_groupoid(FinSet{n})).ok());
    CHECK(validate_groupoid(pair_groupoid(FinSet{n})).ok());
  }
  for (const GroupTable& t : gen::group_catalog(5)) {
    CHECK(validate_groupoid(group_groupoid(t)).ok());
  }
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 2; ++b) {
      CHECK(validate_groupoid(product_groupoid(trivial_groupoid(FinSet{a}),
                                               pair_groupoid(FinSet{b})))
                .ok());
    }
  }
}
