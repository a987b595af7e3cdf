#include "gpd/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gpd {

using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

int get_count(const ordered_json& j, const std::string& where,
              const std::string& key) {
  if (!j.contains(key)) fail(where + "." + key, "missing field");
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    fail(where + "." + key, "expected a non-negative integer");
  }
  return v.get<int>();
}

std::vector<int> get_table(const ordered_json& j, const std::string& where,
                           const std::string& key, int expected_size,
                           int bound) {
  if (!j.contains(key)) fail(where + "." + key, "missing field");
  const auto& v = j.at(key);
  if (!v.is_array()) fail(where + "." + key, "expected an array");
  if (static_cast<int>(v.size()) != expected_size) {
    fail(where + "." + key,
         "expected " + std::to_string(expected_size) + " entries, found " +
             std::to_string(v.size()));
  }
  std::vector<int> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer()) {
      fail(where + "." + key + "[" + std::to_string(i) + "]",
           "expected an integer");
    }
    out[i] = v[i].get<int>();
    if (out[i] < 0 || out[i] >= bound) {
      fail(where + "." + key + "[" + std::to_string(i) + "]",
           "value " + std::to_string(out[i]) + " out of range (bound " +
               std::to_string(bound) + ")");
    }
  }
  return out;
}

// Triple lists [[a, b, c], ...] into a dense a-major table.
std::vector<int> get_triples(const ordered_json& j, const std::string& where,
                             const std::string& key, int rows, int cols,
                             int bound) {
  if (!j.contains(key)) fail(where + "." + key, "missing field");
  const auto& v = j.at(key);
  if (!v.is_array()) fail(where + "." + key, "expected an array of triples");
  std::vector<int> out(static_cast<size_t>(rows) * cols, -1);
  for (size_t i = 0; i < v.size(); ++i) {
    const std::string at = where + "." + key + "[" + std::to_string(i) + "]";
    if (!v[i].is_array() || v[i].size() != 3) fail(at, "expected a triple");
    int a = -1, b = -1, c = -1;
    for (int k = 0; k < 3; ++k) {
      if (!v[i][k].is_number_integer()) fail(at, "expected integers");
    }
    a = v[i][0].get<int>();
    b = v[i][1].get<int>();
    c = v[i][2].get<int>();
    if (a < 0 || a >= rows) fail(at, "first index out of range");
    if (b < 0 || b >= cols) fail(at, "second index out of range");
    if (c < 0 || c >= bound) fail(at, "value out of range");
    if (out[a * cols + b] >= 0) fail(at, "duplicate entry");
    out[a * cols + b] = c;
  }
  return out;
}

ordered_json triples_json(const std::vector<int>& table, int rows, int cols) {
  ordered_json out = ordered_json::array();
  for (int a = 0; a < rows; ++a) {
    for (int b = 0; b < cols; ++b) {
      if (table[a * cols + b] >= 0) {
        out.push_back({a, b, table[a * cols + b]});
      }
    }
  }
  return out;
}

Groupoid groupoid_from_json(const ordered_json& j, const std::string& where,
                            const std::string& base_dir);

// "name-or-inline": a string resolves to <base_dir>/<name>.json.
Groupoid groupoid_ref(const ordered_json& j, const std::string& where,
                      const std::string& base_dir) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    const std::filesystem::path path =
        std::filesystem::path(base_dir) / (name + ".json");
    std::ifstream in(path);
    if (!in) fail(where, "cannot open referenced groupoid '" + name + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    ordered_json doc = ordered_json::parse(ss.str(), nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || doc.value("kind", "") != "groupoid") {
      fail(where, "referenced file is not a groupoid document");
    }
    return groupoid_from_json(doc.at("payload"), where + "->" + name,
                              path.parent_path().string());
  }
  if (!j.is_object()) fail(where, "expected a groupoid object or name");
  return groupoid_from_json(j, where, base_dir);
}

Groupoid groupoid_from_json(const ordered_json& j, const std::string& where,
                            const std::string&) {
  const int objects = get_count(j, where, "objects");
  const int arrows = get_count(j, where, "arrows");
  FinSet o{objects}, a{arrows};
  FinMap src(a, o, get_table(j, where, "src", arrows, objects));
  FinMap tgt(a, o, get_table(j, where, "tgt", arrows, objects));
  FinMap unit(o, a, get_table(j, where, "unit", objects, arrows));
  FinMap inv(a, a, get_table(j, where, "inv", arrows, arrows));
  std::vector<int> mul = get_triples(j, where, "mul", arrows, arrows, arrows);
  return Groupoid(o, a, std::move(src), std::move(tgt), std::move(unit),
                  std::move(inv), std::move(mul));
}

ordered_json groupoid_to_json(const Groupoid& g) {
  ordered_json j;
  j["objects"] = g.objects().size;
  j["arrows"] = g.arrows().size;
  j["src"] = g.src_map().table();
  j["tgt"] = g.tgt_map().table();
  j["unit"] = g.unit_map().table();
  j["inv"] = g.inv_map().table();
  j["mul"] = triples_json(g.mul_table(), g.arrows().size, g.arrows().size);
  return j;
}

// Carrier/anchor/act block shared by actions and the internal-groupoid
// sub-actions.
struct ActionParts {
  FinSet carrier;
  FinMap anchor;
  std::vector<int> act;
};

ActionParts action_parts(const ordered_json& j, const std::string& where,
                         const Groupoid& g) {
  ActionParts p;
  p.carrier = FinSet{get_count(j, where, "carrier")};
  if (g.objects().size == 0 && p.carrier.size > 0) {
    fail(where + ".anchor", "carrier over an empty groupoid");
  }
  p.anchor = FinMap(p.carrier, g.objects(),
                    get_table(j, where, "anchor", p.carrier.size,
                              std::max(g.objects().size, 1)));
  p.act = get_triples(j, where, "act", g.arrows().size, p.carrier.size,
                      p.carrier.size);
  return p;
}

ordered_json action_parts_json(const GAction& a) {
  ordered_json j;
  j["carrier"] = a.carrier().size;
  j["anchor"] = a.anchor_map().table();
  j["act"] = triples_json(a.act_table(), a.groupoid().arrows().size,
                          a.carrier().size);
  return j;
}

GAction action_from_json(const ordered_json& j, const std::string& where,
                         const std::string& base_dir) {
  if (!j.contains("groupoid")) fail(where + ".groupoid", "missing field");
  GroupoidPtr g = share(groupoid_ref(j.at("groupoid"), where + ".groupoid",
                                     base_dir));
  ActionParts p = action_parts(j, where, *g);
  return GAction(std::move(g), p.carrier, std::move(p.anchor),
                 std::move(p.act));
}

ordered_json action_to_json(const GAction& a) {
  ordered_json j;
  j["groupoid"] = groupoid_to_json(a.groupoid());
  ordered_json parts = action_parts_json(a);
  j["carrier"] = parts["carrier"];
  j["anchor"] = parts["anchor"];
  j["act"] = parts["act"];
  return j;
}

InternalFunctor functor_from_json(const ordered_json& j,
                                  const std::string& where,
                                  const std::string& base_dir) {
  if (!j.contains("dom")) fail(where + ".dom", "missing field");
  if (!j.contains("cod")) fail(where + ".cod", "missing field");
  GroupoidPtr dom = share(groupoid_ref(j.at("dom"), where + ".dom", base_dir));
  GroupoidPtr cod = share(groupoid_ref(j.at("cod"), where + ".cod", base_dir));
  if ((cod->objects().size == 0 && dom->objects().size > 0) ||
      (cod->arrows().size == 0 && dom->arrows().size > 0)) {
    fail(where, "functor into an empty groupoid");
  }
  FinMap obj(dom->objects(), cod->objects(),
             get_table(j, where, "obj_map", dom->objects().size,
                       std::max(cod->objects().size, 1)));
  FinMap arr(dom->arrows(), cod->arrows(),
             get_table(j, where, "arr_map", dom->arrows().size,
                       std::max(cod->arrows().size, 1)));
  return {std::move(dom), std::move(cod), std::move(obj), std::move(arr)};
}

ordered_json functor_to_json(const InternalFunctor& f) {
  ordered_json j;
  j["dom"] = groupoid_to_json(*f.dom);
  j["cod"] = groupoid_to_json(*f.cod);
  j["obj_map"] = f.obj_map.table();
  j["arr_map"] = f.arr_map.table();
  return j;
}

Bibundle bibundle_from_json(const ordered_json& j, const std::string& where,
                            const std::string& base_dir) {
  if (!j.contains("left")) fail(where + ".left", "missing field");
  if (!j.contains("right")) fail(where + ".right", "missing field");
  BiAction b;
  b.left = share(groupoid_ref(j.at("left"), where + ".left", base_dir));
  b.right = share(groupoid_ref(j.at("right"), where + ".right", base_dir));
  b.carrier = FinSet{get_count(j, where, "carrier")};
  if ((b.left->objects().size == 0 || b.right->objects().size == 0) &&
      b.carrier.size > 0) {
    fail(where + ".carrier", "carrier over an empty groupoid");
  }
  b.p_anchor = FinMap(b.carrier, b.left->objects(),
                      get_table(j, where, "p", b.carrier.size,
                                std::max(b.left->objects().size, 1)));
  b.q_anchor = FinMap(b.carrier, b.right->objects(),
                      get_table(j, where, "q", b.carrier.size,
                                std::max(b.right->objects().size, 1)));
  b.h_act = get_triples(j, where, "h_act", b.left->arrows().size,
                        b.carrier.size, b.carrier.size);
  b.g_act = get_triples(j, where, "g_act", b.right->arrows().size,
                        b.carrier.size, b.carrier.size);
  return Bibundle(std::move(b));
}

ordered_json bibundle_to_json(const Bibundle& p) {
  const BiAction& b = p.data();
  ordered_json j;
  j["left"] = groupoid_to_json(*b.left);
  j["right"] = groupoid_to_json(*b.right);
  j["carrier"] = b.carrier.size;
  j["p"] = b.p_anchor.table();
  j["q"] = b.q_anchor.table();
  j["h_act"] = triples_json(b.h_act, b.left->arrows().size, b.carrier.size);
  j["g_act"] = triples_json(b.g_act, b.right->arrows().size, b.carrier.size);
  return j;
}

InternalGroupoid internal_from_json(const ordered_json& j,
                                    const std::string& where,
                                    const std::string& base_dir) {
  if (!j.contains("base")) fail(where + ".base", "missing field");
  GroupoidPtr base =
      share(groupoid_ref(j.at("base"), where + ".base", base_dir));
  if (!j.contains("obj_action") || !j.contains("arr_action")) {
    fail(where, "missing obj_action/arr_action");
  }
  ActionParts k0 =
      action_parts(j.at("obj_action"), where + ".obj_action", *base);
  ActionParts k1 =
      action_parts(j.at("arr_action"), where + ".arr_action", *base);
  InternalGroupoid k;
  k.obj_action = GAction(base, k0.carrier, k0.anchor, k0.act);
  k.arr_action = GAction(base, k1.carrier, k1.anchor, k1.act);
  k.src = FinMap(k1.carrier, k0.carrier,
                 get_table(j, where, "src", k1.carrier.size,
                           std::max(k0.carrier.size, 1)));
  k.tgt = FinMap(k1.carrier, k0.carrier,
                 get_table(j, where, "tgt", k1.carrier.size,
                           std::max(k0.carrier.size, 1)));
  k.unit = FinMap(k0.carrier, k1.carrier,
                  get_table(j, where, "unit", k0.carrier.size,
                            std::max(k1.carrier.size, 1)));
  k.inv = FinMap(k1.carrier, k1.carrier,
                 get_table(j, where, "inv", k1.carrier.size,
                           std::max(k1.carrier.size, 1)));
  k.mul = get_triples(j, where, "mul", k1.carrier.size, k1.carrier.size,
                      k1.carrier.size);
  if ((k0.carrier.size == 0 && k1.carrier.size > 0)) {
    fail(where, "arrows over an empty object action");
  }
  return k;
}

ordered_json internal_to_json(const InternalGroupoid& k) {
  ordered_json j;
  j["base"] = groupoid_to_json(k.base());
  j["obj_action"] = action_parts_json(k.obj_action);
  j["arr_action"] = action_parts_json(k.arr_action);
  j["src"] = k.src.table();
  j["tgt"] = k.tgt.table();
  j["unit"] = k.unit.table();
  j["inv"] = k.inv.table();
  j["mul"] = triples_json(k.mul, k.arr_action.carrier().size,
                          k.arr_action.carrier().size);
  return j;
}

}  // namespace

std::string Document::kind() const {
  switch (payload.index()) {
    case 0: return "groupoid";
    case 1: return "action";
    case 2: return "functor";
    case 3: return "bibundle";
    default: return "internal-groupoid";
  }
}

ValidationReport validate_document(const Document& d) {
  return std::visit(
      [](const auto& v) -> ValidationReport {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Groupoid>) return validate_groupoid(v);
        else if constexpr (std::is_same_v<T, GAction>) return validate_action(v);
        else if constexpr (std::is_same_v<T, InternalFunctor>) return validate_functor(v);
        else if constexpr (std::is_same_v<T, Bibundle>) return v.report();
        else return validate_internal_groupoid(v);
      },
      d.payload);
}

Document parse_document(const std::string& text, const std::string& base_dir,
                        bool run_validators) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("document: malformed JSON");
  if (!j.is_object()) throw ParseError("document: expected an object");
  const std::string kind = j.value("kind", "");
  Document d;
  d.name = j.value("name", "");
  if (!j.contains("payload") || !j.at("payload").is_object()) {
    throw ParseError("document.payload: missing or not an object");
  }
  const ordered_json& p = j.at("payload");
  if (kind == "groupoid") {
    d.payload = groupoid_from_json(p, "payload", base_dir);
  } else if (kind == "action") {
    d.payload = action_from_json(p, "payload", base_dir);
  } else if (kind == "functor") {
    d.payload = functor_from_json(p, "payload", base_dir);
  } else if (kind == "bibundle") {
    d.payload = bibundle_from_json(p, "payload", base_dir);
  } else if (kind == "internal-groupoid") {
    d.payload = internal_from_json(p, "payload", base_dir);
  } else {
    throw ParseError("document.kind: unknown kind '" + kind + "'");
  }
  if (run_validators) {
    ValidationReport rep = validate_document(d);
    if (!rep.ok()) {
      std::string msg = "payload: invalid " + d.kind();
      int shown = 0;
      for (const auto& v : rep.violations) {
        msg += "\n  " + v;
        if (++shown == 5) break;
      }
      if (static_cast<int>(rep.violations.size()) > shown) {
        msg += "\n  (+" +
               std::to_string(rep.violations.size() - shown) + " more)";
      }
      throw ParseError(msg);
    }
  }
  return d;
}

std::string serialize_document(const Document& d) {
  ordered_json j;
  j["kind"] = d.kind();
  j["name"] = d.name;
  j["payload"] = std::visit(
      [](const auto& v) -> ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Groupoid>) return groupoid_to_json(v);
        else if constexpr (std::is_same_v<T, GAction>) return action_to_json(v);
        else if constexpr (std::is_same_v<T, InternalFunctor>) return functor_to_json(v);
        else if constexpr (std::is_same_v<T, Bibundle>) return bibundle_to_json(v);
        else return internal_to_json(v);
      },
      d.payload);
  return j.dump(2) + "\n";
}

Document load_document(const std::string& path, bool run_validators) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(
      ss.str(), std::filesystem::path(path).parent_path().string(),
      run_validators);
}

void save_document(const Document& d, const std::string& path) {
  const std::string text = serialize_document(d);
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("failed while writing '" + path + "'");
}

}  // namespace gpd
