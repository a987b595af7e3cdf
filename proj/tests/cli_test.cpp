// End-to-end checks of the gpd binary; the path arrives as argv[1] from
// ctest.
#define DOCTEST_CONFIG_IMPLEMENT

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "gpd/serialize.hpp"

namespace {

std::string g_cli;
std::filesystem::path g_dir;

struct RunResult {
  int status;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int rc = pclose(pipe);
  return {WEXITSTATUS(rc), out};
}

std::string path_of(const std::string& name) {
  return (g_dir / name).string();
}

}  // namespace

using namespace gpd;

TEST_CASE("validate: valid and invalid groupoids") {
  save_document(Document{"p3", pair_groupoid(FinSet{3})}, path_of("p3.json"));
  RunResult ok = run("validate " + path_of("p3.json"));
  CHECK(ok.status == 0);

  Groupoid g = pair_groupoid(FinSet{2});
  Groupoid bad(g.objects(), g.arrows(), g.src_map(), g.tgt_map(),
               g.unit_map(), FinMap::identity(g.arrows()), g.mul_table());
  save_document(Document{"bad", bad}, path_of("bad.json"));
  RunResult fail = run("validate " + path_of("bad.json"));
  CHECK(fail.status == 1);
  CHECK(fail.out.find("inv-compat") != std::string::npos);
}

TEST_CASE("orbits of the regular action of pair(2)") {
  GroupoidPtr g = share(pair_groupoid(FinSet{2}));
  GAction t = free_action(g, FinMap::identity(g->objects()));
  save_document(Document{"t", t}, path_of("t.json"));
  RunResult r = run("orbits " + path_of("t.json") + " --format json");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"classes\": 2") != std::string::npos);
}

TEST_CASE("morita: equivalent and inequivalent pairs") {
  save_document(Document{"p3", pair_groupoid(FinSet{3})}, path_of("p3.json"));
  save_document(Document{"one", trivial_groupoid(FinSet{1})},
                path_of("one.json"));
  RunResult eq = run("morita " + path_of("p3.json") + " " + path_of("one.json"));
  CHECK(eq.status == 0);
  CHECK(eq.out.find("equivalent") == 0);

  save_document(Document{"z2", group_groupoid(cyclic_group(2))},
                path_of("z2.json"));
  save_document(Document{"z3", group_groupoid(cyclic_group(3))},
                path_of("z3.json"));
  RunResult ne = run("morita " + path_of("z2.json") + " " + path_of("z3.json"));
  CHECK(ne.status == 0);
  CHECK(ne.out.find("inequivalent") != std::string::npos);
}

TEST_CASE("compose/apply/invert through files") {
  GroupoidPtr p2 = share(pair_groupoid(FinSet{2}));
  InternalFunctor incl =
      point_functor(p2, FinMap(FinSet{1}, p2->objects(), {0}));
  save_document(Document{"incl", incl}, path_of("incl.json"));
  RunResult inv = run("invert " + path_of("incl.json") + " -o " +
                      path_of("bundle.json"));
  CHECK(inv.status == 0);
  Document bundle = load_document(path_of("bundle.json"));
  CHECK(std::get<Bibundle>(bundle.payload).valid());

  save_document(Document{"id", identity_bibundle(p2)}, path_of("id.json"));
  RunResult comp = run("compose " + path_of("bundle.json") + " " +
                       path_of("id.json") + " -o " + path_of("c.json"));
  CHECK(comp.status == 0);
  CHECK(std::get<Bibundle>(load_document(path_of("c.json")).payload).valid());

  GAction t = free_action(p2, FinMap::identity(p2->objects()));
  save_document(Document{"t", t}, path_of("t.json"));
  RunResult app = run("apply " + path_of("id.json") + " " + path_of("t.json") +
                      " -o " + path_of("out.json"));
  CHECK(app.status == 0);
  CHECK(validate_action(
            std::get<GAction>(load_document(path_of("out.json")).payload))
            .ok());
}

TEST_CASE("points and semidirect commands") {
  save_document(Document{"z2", group_groupoid(cyclic_group(2))},
                path_of("z2.json"));
  RunResult pts = run("points " + path_of("z2.json") + " 2 -o " +
                      path_of("pts.json"));
  CHECK(pts.status == 0);
  const Groupoid& g =
      std::get<Groupoid>(load_document(path_of("pts.json")).payload);
  CHECK(g.arrows().size == 4);

  GroupoidPtr one = share(trivial_groupoid(FinSet{1}));
  InternalGroupoid k = trivial_internal_groupoid(
      trivial_action(one, FinSet{3}));
  save_document(Document{"k", k}, path_of("k.json"));
  RunResult semi = run("semidirect " + path_of("k.json") + " -o " +
                       path_of("semi.json"));
  CHECK(semi.status == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("no-such-command").status == 2);
  CHECK(run("validate").status == 2);
  CHECK(run("validate /no/such/file.json").status == 2);
}

TEST_CASE("error paths never leave partial output files") {
  save_document(Document{"z2", group_groupoid(cyclic_group(2))},
                path_of("z2.json"));
  save_document(Document{"z3", group_groupoid(cyclic_group(3))},
                path_of("z3.json"));
  // composing bundle documents of mismatched middle groupoids fails
  GroupoidPtr z2 = share(group_groupoid(cyclic_group(2)));
  GroupoidPtr z3 = share(group_groupoid(cyclic_group(3)));
  save_document(Document{"b2", identity_bibundle(z2)}, path_of("b2.json"));
  save_document(Document{"b3", identity_bibundle(z3)}, path_of("b3.json"));
  const std::string out = path_of("never.json");
  RunResult r = run("compose " + path_of("b2.json") + " " + path_of("b3.json") +
                    " -o " + out);
  CHECK(r.status != 0);
  CHECK_FALSE(std::filesystem::exists(out));
}

TEST_CASE("check-laws is deterministic byte for byte") {
  RunResult a = run("check-laws --seed 7 --cases 10");
  RunResult b = run("check-laws --seed 7 --cases 10");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_tests <path-to-gpd-binary>\n");
    return 1;
  }
  g_cli = argv[1];
  g_dir = std::filesystem::temp_directory_path() / "gpd_cli_test";
  std::filesystem::create_directories(g_dir);
  doctest::Context ctx;
  int rc = ctx.run();
  std::filesystem::remove_all(g_dir);
  return rc;
}
