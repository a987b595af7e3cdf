#include "gpd/serialize.hpp"

#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "doctest.h"
#include "gpd/generators.hpp"

using namespace gpd;

TEST_CASE("groupoid documents round-trip bit-for-bit") {
  gen::Rng rng(107);
  for (int i = 0; i < 20; ++i) {
    Document d{"g" + std::to_string(i), gen::random_groupoid(rng, 4, 12)};
    std::string text = serialize_document(d);
    Document back = parse_document(text);
    CHECK(back == d);
    CHECK(serialize_document(back) == text);
  }
}

TEST_CASE("action, functor, bibundle and internal-groupoid round-trips") {
  gen::Rng rng(109);
  for (int i = 0; i < 8; ++i) {
    GroupoidPtr g = share(gen::random_groupoid(rng, 3, 8));
    Document da{"a", gen::random_action(rng, g, 4)};
    CHECK(parse_document(serialize_document(da)) == da);

    Document df{"f", gen::random_functor(rng, 3, 8)};
    CHECK(parse_document(serialize_document(df)) == df);

    Document db{"b", gen::random_bibundle(rng, 6)};
    CHECK(parse_document(serialize_document(db)) == db);

    Bibundle bb = gen::random_bibundle(rng, 5);
    Document dk{"k", reconstruct_internal_groupoid(bb)};
    CHECK(parse_document(serialize_document(dk)) == dk);
  }
}

TEST_CASE("out-of-range entries are parse errors naming the field") {
  // src entry out of range
  std::string text = R"({
    "kind": "groupoid", "name": "bad",
    "payload": {"objects": 1, "arrows": 1, "src": [3], "tgt": [0],
                "unit": [0], "inv": [0], "mul": [[0,0,0]]}
  })";
  CHECK_THROWS_WITH_AS(parse_document(text), doctest::Contains("src[0]"),
                       ParseError);
}

TEST_CASE("axiom violations are parse failures naming the condition") {
  // pair(2) with the identity as inv: inverse compatibility fails
  Groupoid g = pair_groupoid(FinSet{2});
  Groupoid bad(g.objects(), g.arrows(), g.src_map(), g.tgt_map(),
               g.unit_map(), FinMap::identity(g.arrows()), g.mul_table());
  std::string text = serialize_document(Document{"bad", bad});
  CHECK_THROWS_WITH_AS(parse_document(text), doctest::Contains("inv-compat"),
                       ParseError);
  // but parsing without validators succeeds
  Document d = parse_document(text, "", /*run_validators=*/false);
  CHECK_FALSE(validate_document(d).ok());
}

TEST_CASE("a bibundle failing principality is rejected citing it") {
  // Z/2 acting trivially on 2 points over trivial(1) x Z/2 shape:
  // left trivial(1), right Z/2, both anchors constant, trivial actions.
  GroupoidPtr one = share(trivial_groupoid(FinSet{1}));
  GroupoidPtr z2 = share(group_groupoid(cyclic_group(2)));
  BiAction b;
  b.left = one;
  b.right = z2;
  b.carrier = FinSet{2};
  b.p_anchor = FinMap::constant(b.carrier, one->objects(), 0);
  b.q_anchor = FinMap::constant(b.carrier, z2->objects(), 0);
  b.h_act = {0, 1};
  b.g_act = {0, 1, 0, 1};  // sigma fixes both points: not free
  Bibundle bundle{b};
  CHECK(bundle.report().mentions("principality:"));
  std::string text = serialize_document(Document{"bad", bundle});
  CHECK_THROWS_WITH_AS(parse_document(text), doctest::Contains("principality"),
                       ParseError);
}

TEST_CASE("malformed JSON and unknown kinds") {
  CHECK_THROWS_AS(parse_document("{"), ParseError);
  CHECK_THROWS_WITH_AS(parse_document(R"({"kind": "frob", "payload": {}})"),
                       doctest::Contains("unknown kind"), ParseError);
}

TEST_CASE("named groupoid references resolve next to the referencing file") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "gpd_ref_test";
  fs::create_directories(dir);
  Document g{"base", pair_groupoid(FinSet{2})};
  save_document(g, (dir / "base.json").string());

  GroupoidPtr gp = share(pair_groupoid(FinSet{2}));
  GAction a = trivial_action(gp, FinSet{2});
  std::string text = R"({
    "kind": "action", "name": "a",
    "payload": {"groupoid": "base", "carrier": )" +
                     std::to_string(a.carrier().size) + R"(, "anchor": )" +
                     nlohmann::json(a.anchor_map().table()).dump() +
                     R"(, "act": )";
  nlohmann::json act = nlohmann::json::array();
  for (int gi = 0; gi < gp->arrows().size; ++gi) {
    for (int x = 0; x < a.carrier().size; ++x) {
      if (a.act_entry(gi, x) >= 0) act.push_back({gi, x, a.act_entry(gi, x)});
    }
  }
  text += act.dump() + "}}";
  fs::path file = dir / "a.json";
  {
    std::ofstream out(file);
    out << text;
  }
  Document d = load_document(file.string());
  CHECK(std::get<GAction>(d.payload) == a);
  fs::remove_all(dir);
}

TEST_CASE("validate_document covers every kind") {
  GroupoidPtr g = share(pair_groupoid(FinSet{2}));
  CHECK(validate_document({"g", *g}).ok());
  CHECK(validate_document({"a", trivial_action(g, FinSet{2})}).ok());
  CHECK(validate_document({"f", identity_functor(g)}).ok());
  CHECK(validate_document({"b", identity_bibundle(g)}).ok());
  CHECK(validate_document(
            {"k", trivial_internal_groupoid(trivial_action(g, FinSet{1}))})
            .ok());
}
