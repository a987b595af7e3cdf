// gpd — command-line front end for the finite-groupoid library:
// validation, orbit computation, bibundle calculus, Morita decisions and
// the randomized law suites. Documents are JSON files (one structure per
// file); see the README for the schema.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gpd/generators.hpp"
#include "gpd/laws.hpp"
#include "gpd/serialize.hpp"

namespace {

using namespace gpd;

struct Options {
  std::string output;
  std::string format = "human";
};

// exit codes: 0 success, 1 validation failure, 2 usage error
constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

void emit(const Options& opt, const Document& d) {
  if (opt.output.empty()) {
    std::cout << serialize_document(d);
  } else {
    save_document(d, opt.output);
  }
}

template <typename T>
const T& payload_as(const Document& d, const std::string& want) {
  if (!std::holds_alternative<T>(d.payload)) {
    throw ParseError("expected a " + want + " document, found " + d.kind());
  }
  return std::get<T>(d.payload);
}

int cmd_validate(const std::string& file, const Options& opt) {
  Document d = load_document(file, /*run_validators=*/false);
  ValidationReport rep = validate_document(d);
  if (opt.format == "json") {
    nlohmann::ordered_json j;
    j["kind"] = d.kind();
    j["valid"] = rep.ok();
    j["violations"] = rep.violations;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << d.kind() << (rep.ok() ? ": valid" : ": INVALID") << "\n";
    for (const auto& v : rep.violations) std::cout << "  " << v << "\n";
  }
  return rep.ok() ? kOk : kInvalid;
}

int cmd_orbits(const std::string& file, const Options& opt) {
  Document d = load_document(file);
  const GAction& a = payload_as<GAction>(d, "action");
  Quotient q = orbits(a);
  if (opt.format == "json") {
    nlohmann::ordered_json j;
    j["classes"] = q.classes.size;
    j["proj"] = q.proj.table();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << q.classes.size << " orbit(s)\n";
    auto members = q.class_members();
    for (int c = 0; c < q.classes.size; ++c) {
      std::cout << "  [" << c << "]";
      for (int x : members[c]) std::cout << " " << x;
      std::cout << "\n";
    }
  }
  return kOk;
}

int cmd_compose(const std::string& f1, const std::string& f2,
                const Options& opt) {
  Document d1 = load_document(f1), d2 = load_document(f2);
  Bibundle out = compose(payload_as<Bibundle>(d1, "bibundle"),
                         payload_as<Bibundle>(d2, "bibundle"));
  emit(opt, Document{d1.name + "*" + d2.name, std::move(out)});
  return kOk;
}

int cmd_apply(const std::string& bib, const std::string& act,
              const Options& opt) {
  Document db = load_document(bib), da = load_document(act);
  GAction out = tensor_apply(payload_as<Bibundle>(db, "bibundle"),
                             payload_as<GAction>(da, "action"));
  emit(opt, Document{db.name + "(" + da.name + ")", std::move(out)});
  return kOk;
}

int cmd_restrict(const std::string& fn, const std::string& act,
                 const Options& opt) {
  Document df = load_document(fn), da = load_document(act);
  GAction out = restrict_action(payload_as<InternalFunctor>(df, "functor"),
                                payload_as<GAction>(da, "action"));
  emit(opt, Document{"restrict", std::move(out)});
  return kOk;
}

int cmd_induce(const std::string& fn, const std::string& act,
               const Options& opt) {
  Document df = load_document(fn), da = load_document(act);
  GAction out = induce(payload_as<InternalFunctor>(df, "functor"),
                       payload_as<GAction>(da, "action"));
  emit(opt, Document{"induce", std::move(out)});
  return kOk;
}

int cmd_morita(const std::string& f1, const std::string& f2,
               const Options& opt) {
  Document d1 = load_document(f1), d2 = load_document(f2);
  const Groupoid& h = payload_as<Groupoid>(d1, "groupoid");
  const Groupoid& g = payload_as<Groupoid>(d2, "groupoid");
  MoritaCertificate cert = morita_equivalent(h, g);
  if (opt.format == "json") {
    nlohmann::ordered_json j;
    j["equivalent"] = cert.equivalent;
    j["left_invariant"] = describe_invariant(cert.left_invariant);
    j["right_invariant"] = describe_invariant(cert.right_invariant);
    if (cert.equivalent) j["bundle_carrier"] = cert.bundle->carrier().size;
    std::cout << j.dump(2) << "\n";
  } else if (cert.equivalent) {
    std::cout << "equivalent (certificate bundle with carrier "
              << cert.bundle->carrier().size << ", both composites verified)\n";
  } else {
    std::cout << "inequivalent\n  left:  "
              << describe_invariant(cert.left_invariant) << "\n  right: "
              << describe_invariant(cert.right_invariant) << "\n";
  }
  if (cert.equivalent && !opt.output.empty()) {
    save_document(Document{"morita-certificate", *cert.bundle}, opt.output);
  }
  return kOk;
}

int cmd_invert(const std::string& fn, const Options& opt) {
  Document df = load_document(fn);
  MoritaCertificate cert = invert_essential_equivalence(
      payload_as<InternalFunctor>(df, "functor"));
  emit(opt, Document{"inverse-certificate", *cert.bundle});
  return kOk;
}

int cmd_semidirect(const std::string& fn, const Options& opt) {
  Document df = load_document(fn);
  Groupoid out = semidirect_product(
      payload_as<InternalGroupoid>(df, "internal-groupoid"));
  emit(opt, Document{"semidirect", std::move(out)});
  return kOk;
}

int cmd_pair(const std::string& f1, const std::string& f2,
             const Options& opt) {
  Document d1 = load_document(f1), d2 = load_document(f2);
  Bibundle out = pair_bibundles(payload_as<Bibundle>(d1, "bibundle"),
                                payload_as<Bibundle>(d2, "bibundle"));
  emit(opt, Document{"pair", std::move(out)});
  return kOk;
}

int cmd_points(const std::string& fn, int stage, const Options& opt) {
  Document df = load_document(fn);
  Groupoid out =
      points_groupoid(payload_as<Groupoid>(df, "groupoid"), FinSet{stage});
  emit(opt, Document{"points", std::move(out)});
  return kOk;
}

int cmd_check_laws(const laws::LawParams& params) {
  auto results = laws::run_all_laws(params);
  std::cout << laws::format_results(params, results);
  for (const auto& r : results) {
    if (r.failures > 0) return kInvalid;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite groupoids, bibundles and Morita equivalence"};
  app.require_subcommand(1);
  Options opt;

  std::string file1, file2;
  int stage = 1;
  laws::LawParams params;

  auto add_output = [&](CLI::App* c) {
    c->add_option("-o,--output", opt.output, "output file (default stdout)");
    c->add_option("--format", opt.format, "human|json")
        ->check(CLI::IsMember({"human", "json"}));
  };

  auto* validate = app.add_subcommand("validate", "validate a document");
  validate->add_option("file", file1)->required();
  add_output(validate);

  auto* orbits_cmd = app.add_subcommand("orbits", "orbits of an action");
  orbits_cmd->add_option("file", file1)->required();
  add_output(orbits_cmd);

  auto* compose_cmd = app.add_subcommand("compose", "compose two bibundles");
  compose_cmd->add_option("first", file1)->required();
  compose_cmd->add_option("second", file2)->required();
  add_output(compose_cmd);

  auto* apply_cmd =
      app.add_subcommand("apply", "apply a bibundle to an action");
  apply_cmd->add_option("bibundle", file1)->required();
  apply_cmd->add_option("action", file2)->required();
  add_output(apply_cmd);

  auto* restrict_cmd =
      app.add_subcommand("restrict", "restrict an action along a functor");
  restrict_cmd->add_option("functor", file1)->required();
  restrict_cmd->add_option("action", file2)->required();
  add_output(restrict_cmd);

  auto* induce_cmd =
      app.add_subcommand("induce", "induce an action along a functor");
  induce_cmd->add_option("functor", file1)->required();
  induce_cmd->add_option("action", file2)->required();
  add_output(induce_cmd);

  auto* morita_cmd =
      app.add_subcommand("morita", "decide Morita equivalence");
  morita_cmd->add_option("first", file1)->required();
  morita_cmd->add_option("second", file2)->required();
  add_output(morita_cmd);

  auto* invert_cmd = app.add_subcommand(
      "invert", "invert an essential equivalence into a bibundle");
  invert_cmd->add_option("functor", file1)->required();
  add_output(invert_cmd);

  auto* semidirect_cmd =
      app.add_subcommand("semidirect", "semidirect product of an internal groupoid");
  semidirect_cmd->add_option("file", file1)->required();
  add_output(semidirect_cmd);

  auto* pair_cmd = app.add_subcommand("pair", "pair two bibundles");
  pair_cmd->add_option("first", file1)->required();
  pair_cmd->add_option("second", file2)->required();
  add_output(pair_cmd);

  auto* points_cmd =
      app.add_subcommand("points", "the groupoid of stage-I points");
  points_cmd->add_option("groupoid", file1)->required();
  points_cmd->add_option("stage-size", stage)->required();
  add_output(points_cmd);

  auto* laws_cmd = app.add_subcommand("check-laws", "run the law suites");
  laws_cmd->add_option("--seed", params.seed);
  laws_cmd->add_option("--max-objects", params.max_objects);
  laws_cmd->add_option("--max-arrows", params.max_arrows);
  laws_cmd->add_option("--cases", params.cases);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(file1, opt);
    if (orbits_cmd->parsed()) return cmd_orbits(file1, opt);
    if (compose_cmd->parsed()) return cmd_compose(file1, file2, opt);
    if (apply_cmd->parsed()) return cmd_apply(file1, file2, opt);
    if (restrict_cmd->parsed()) return cmd_restrict(file1, file2, opt);
    if (induce_cmd->parsed()) return cmd_induce(file1, file2, opt);
    if (morita_cmd->parsed()) return cmd_morita(file1, file2, opt);
    if (invert_cmd->parsed()) return cmd_invert(file1, opt);
    if (semidirect_cmd->parsed()) return cmd_semidirect(file1, opt);
    if (pair_cmd->parsed()) return cmd_pair(file1, file2, opt);
    if (points_cmd->parsed()) return cmd_points(file1, stage, opt);
    if (laws_cmd->parsed()) return cmd_check_laws(params);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
