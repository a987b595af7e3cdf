#include "gpd/groupoid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gpd {

Groupoid::Groupoid(FinSet objects, FinSet arrows, FinMap src, FinMap tgt,
                   FinMap unit, FinMap inv, std::vector<int> mul_table)
    : objects_(objects),
      arrows_(arrows),
      src_(std::move(src)),
      tgt_(std::move(tgt)),
      unit_(std::move(unit)),
      inv_(std::move(inv)),
      mul_(std::move(mul_table)) {
  auto expect = [](const FinMap& m, FinSet dom, FinSet cod, const char* name) {
    if (m.dom() != dom || m.cod() != cod) {
      throw std::invalid_argument(std::string("Groupoid: ") + name +
                                  " has the wrong shape");
    }
  };
  expect(src_, arrows_, objects_, "src");
  expect(tgt_, arrows_, objects_, "tgt");
  expect(unit_, objects_, arrows_, "unit");
  expect(inv_, arrows_, arrows_, "inv");
  if (static_cast<int>(mul_.size()) !=
      arrows_.size * arrows_.size) {
    throw std::invalid_argument("Groupoid: mul table has wrong dimensions");
  }
  for (int v : mul_) {
    if (v < -1 || v >= arrows_.size) {
      throw std::invalid_argument("Groupoid: mul entry out of range");
    }
  }
}

int Groupoid::mul(int g1, int g2) const {
  const int v = mul_[g1 * arrows_.size + g2];
  if (v < 0) {
    throw std::logic_error("Groupoid::mul: undefined on pair (" +
                           std::to_string(g1) + ", " + std::to_string(g2) +
                           ")");
  }
  return v;
}

ValidationReport validate_groupoid(const Groupoid& g) {
  ValidationReport rep;
  const int n1 = g.arrows().size;
  for (int x = 0; x < g.objects().size; ++x) {
    if (g.src(g.unit(x)) != x || g.tgt(g.unit(x)) != x) {
      rep.add("unit: src/tgt of unit(" + std::to_string(x) + ") is not " +
              std::to_string(x));
    }
  }
  for (int a = 0; a < n1; ++a) {
    for (int b = 0; b < n1; ++b) {
      const int m = g.mul_entry(a, b);
      const bool comp = g.composable(a, b);
      if (comp && m < 0) {
        rep.add("mul-domain: missing entry for composable pair (" +
                std::to_string(a) + ", " + std::to_string(b) + ")");
      }
      if (!comp && m >= 0) {
        rep.add("mul-domain: entry on non-composable pair (" +
                std::to_string(a) + ", " + std::to_string(b) + ")");
      }
      if (comp && m >= 0) {
        if (g.src(m) != g.src(b) || g.tgt(m) != g.tgt(a)) {
          rep.add("mul-compat: src/tgt of mul(" + std::to_string(a) + ", " +
                  std::to_string(b) + ") are wrong");
        }
      }
    }
  }
  if (!rep.ok()) return rep;  // laws below assume a well-shaped table

  for (int a = 0; a < n1; ++a) {
    if (g.mul(a, g.unit(g.src(a))) != a || g.mul(g.unit(g.tgt(a)), a) != a) {
      rep.add("unit-law: fails at arrow " + std::to_string(a));
    }
  }
  for (int a = 0; a < n1; ++a) {
    for (int b = 0; b < n1; ++b) {
      if (!g.composable(a, b)) continue;
      for (int c = 0; c < n1; ++c) {
        if (!g.composable(b, c)) continue;
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          rep.add("assoc: fails at (" + std::to_string(a) + ", " +
                  std::to_string(b) + ", " + std::to_string(c) + ")");
        }
      }
    }
  }
  for (int a = 0; a < n1; ++a) {
    const int i = g.inv(a);
    if (g.src(i) != g.tgt(a) || g.tgt(i) != g.src(a)) {
      rep.add("inv-compat: src/tgt of inv(" + std::to_string(a) +
              ") are wrong");
      continue;
    }
    if (g.mul(a, i) != g.unit(g.tgt(a)) || g.mul(i, a) != g.unit(g.src(a))) {
      rep.add("inv-law: fails at arrow " + std::to_string(a));
    }
  }
  return rep;
}

namespace {

std::vector<int> empty_mul(int n1) {
  return std::vector<int>(static_cast<size_t>(n1) * n1, -1);
}

}  // namespace

Groupoid trivial_groupoid(FinSet x) {
  std::vector<int> mul = empty_mul(x.size);
  for (int a = 0; a < x.size; ++a) mul[a * x.size + a] = a;
  return Groupoid(x, x, FinMap::identity(x), FinMap::identity(x),
                  FinMap::identity(x), FinMap::identity(x), std::move(mul));
}

Groupoid pair_groupoid(FinSet x) {
  const int n = x.size;
  FinSet arrows{n * n};
  std::vector<int> src(arrows.size), tgt(arrows.size), unit(n),
      inv(arrows.size);
  auto idx = [n](int a, int b) { return a * n + b; };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      src[idx(a, b)] = b;
      tgt[idx(a, b)] = a;
      inv[idx(a, b)] = idx(b, a);
    }
  }
  for (int a = 0; a < n; ++a) unit[a] = idx(a, a);
  std::vector<int> mul = empty_mul(arrows.size);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        mul[idx(a, b) * arrows.size + idx(b, c)] = idx(a, c);
  return Groupoid(x, arrows, FinMap(arrows, x, std::move(src)),
                  FinMap(arrows, x, std::move(tgt)),
                  FinMap(x, arrows, std::move(unit)),
                  FinMap(arrows, arrows, std::move(inv)), std::move(mul));
}

Groupoid group_groupoid(const GroupTable& table) {
  ValidationReport rep = validate_group_table(table);
  if (!rep.ok()) {
    throw std::invalid_argument("group_groupoid: not a group: " +
                                rep.violations.front());
  }
  FinSet one{1};
  FinSet arrows{table.n};
  const int e = table.identity();
  std::vector<int> inv(table.n);
  for (int a = 0; a < table.n; ++a) inv[a] = table.inverse_of(a);
  std::vector<int> mul(static_cast<size_t>(table.n) * table.n);
  for (int a = 0; a < table.n; ++a)
    for (int b = 0; b < table.n; ++b) mul[a * table.n + b] = table.at(a, b);
  return Groupoid(one, arrows, FinMap::constant(arrows, one, 0),
                  FinMap::constant(arrows, one, 0),
                  FinMap(one, arrows, {e}),
                  FinMap(arrows, arrows, std::move(inv)), std::move(mul));
}

Groupoid product_groupoid(const Groupoid& h, const Groupoid& g) {
  const int o_g = g.objects().size, a_g = g.arrows().size;
  FinSet objects{h.objects().size * o_g};
  FinSet arrows{h.arrows().size * a_g};
  auto oidx = [o_g](int a, int b) { return a * o_g + b; };
  auto aidx = [a_g](int a, int b) { return a * a_g + b; };
  std::vector<int> src(arrows.size), tgt(arrows.size), unit(objects.size),
      inv(arrows.size);
  for (int a = 0; a < h.arrows().size; ++a) {
    for (int b = 0; b < a_g; ++b) {
      src[aidx(a, b)] = oidx(h.src(a), g.src(b));
      tgt[aidx(a, b)] = oidx(h.tgt(a), g.tgt(b));
      inv[aidx(a, b)] = aidx(h.inv(a), g.inv(b));
    }
  }
  for (int x = 0; x < h.objects().size; ++x)
    for (int y = 0; y < o_g; ++y)
      unit[oidx(x, y)] = aidx(h.unit(x), g.unit(y));
  std::vector<int> mul = empty_mul(arrows.size);
  for (int a1 = 0; a1 < h.arrows().size; ++a1)
    for (int b1 = 0; b1 < a_g; ++b1)
      for (int a2 = 0; a2 < h.arrows().size; ++a2)
        for (int b2 = 0; b2 < a_g; ++b2) {
          if (h.composable(a1, a2) && g.composable(b1, b2)) {
            mul[aidx(a1, b1) * arrows.size + aidx(a2, b2)] =
                aidx(h.mul(a1, a2), g.mul(b1, b2));
          }
        }
  return Groupoid(objects, arrows, FinMap(arrows, objects, std::move(src)),
                  FinMap(arrows, objects, std::move(tgt)),
                  FinMap(objects, arrows, std::move(unit)),
                  FinMap(arrows, arrows, std::move(inv)), std::move(mul));
}

Groupoid opposite_groupoid(const Groupoid& g) {
  const int n1 = g.arrows().size;
  std::vector<int> mul = empty_mul(n1);
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n1; ++b) {
      int m = g.mul_entry(b, a);
      if (m >= 0) mul[a * n1 + b] = m;
    }
  return Groupoid(g.objects(), g.arrows(), g.tgt_map(), g.src_map(),
                  g.unit_map(), g.inv_map(), std::move(mul));
}

Groupoid disjoint_union(const Groupoid& h, const Groupoid& g) {
  FinSet objects{h.objects().size + g.objects().size};
  FinSet arrows{h.arrows().size + g.arrows().size};
  const int oo = h.objects().size, ao = h.arrows().size;
  std::vector<int> src(arrows.size), tgt(arrows.size), unit(objects.size),
      inv(arrows.size);
  for (int a = 0; a < ao; ++a) {
    src[a] = h.src(a);
    tgt[a] = h.tgt(a);
    inv[a] = h.inv(a);
  }
  for (int a = 0; a < g.arrows().size; ++a) {
    src[ao + a] = oo + g.src(a);
    tgt[ao + a] = oo + g.tgt(a);
    inv[ao + a] = ao + g.inv(a);
  }
  for (int x = 0; x < oo; ++x) unit[x] = h.unit(x);
  for (int x = 0; x < g.objects().size; ++x) unit[oo + x] = ao + g.unit(x);
  std::vector<int> mul = empty_mul(arrows.size);
  for (int a = 0; a < ao; ++a)
    for (int b = 0; b < ao; ++b) {
      int m = h.mul_entry(a, b);
      if (m >= 0) mul[a * arrows.size + b] = m;
    }
  for (int a = 0; a < g.arrows().size; ++a)
    for (int b = 0; b < g.arrows().size; ++b) {
      int m = g.mul_entry(a, b);
      if (m >= 0) mul[(ao + a) * arrows.size + (ao + b)] = ao + m;
    }
  return Groupoid(objects, arrows, FinMap(arrows, objects, std::move(src)),
                  FinMap(arrows, objects, std::move(tgt)),
                  FinMap(objects, arrows, std::move(unit)),
                  FinMap(arrows, arrows, std::move(inv)), std::move(mul));
}

Groupoid relabel_groupoid(const Groupoid& g, const FinMap& obj_perm,
                          const FinMap& arr_perm) {
  if (!is_bijective(obj_perm) || obj_perm.dom() != g.objects() ||
      !is_bijective(arr_perm) || arr_perm.dom() != g.arrows()) {
    throw std::invalid_argument("relabel_groupoid: not permutations");
  }
  const int n1 = g.arrows().size;
  std::vector<int> src(n1), tgt(n1), unit(g.objects().size), inv(n1);
  for (int a = 0; a < n1; ++a) {
    src[arr_perm(a)] = obj_perm(g.src(a));
    tgt[arr_perm(a)] = obj_perm(g.tgt(a));
    inv[arr_perm(a)] = arr_perm(g.inv(a));
  }
  for (int x = 0; x < g.objects().size; ++x)
    unit[obj_perm(x)] = arr_perm(g.unit(x));
  std::vector<int> mul = empty_mul(n1);
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n1; ++b) {
      int m = g.mul_entry(a, b);
      if (m >= 0) mul[arr_perm(a) * n1 + arr_perm(b)] = arr_perm(m);
    }
  return Groupoid(g.objects(), g.arrows(),
                  FinMap(g.arrows(), g.objects(), std::move(src)),
                  FinMap(g.arrows(), g.objects(), std::move(tgt)),
                  FinMap(g.objects(), g.arrows(), std::move(unit)),
                  FinMap(g.arrows(), g.arrows(), std::move(inv)),
                  std::move(mul));
}

Quotient object_components(const Groupoid& g) {
  return coequalizer(g.src_map(), g.tgt_map());
}

IsotropyGroup isotropy_group(const Groupoid& g, int x) {
  if (x < 0 || x >= g.objects().size) {
    throw std::out_of_range("isotropy_group: object " + std::to_string(x) +
                            " out of range");
  }
  IsotropyGroup iso;
  std::vector<int> pos(g.arrows().size, -1);
  for (int a = 0; a < g.arrows().size; ++a) {
    if (g.src(a) == x && g.tgt(a) == x) {
      pos[a] = static_cast<int>(iso.arrows.size());
      iso.arrows.push_back(a);
    }
  }
  const int n = static_cast<int>(iso.arrows.size());
  iso.table.n = n;
  iso.table.mul.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      iso.table.mul[i * n + j] = pos[g.mul(iso.arrows[i], iso.arrows[j])];
  return iso;
}

std::vector<ComponentData> component_data(const Groupoid& g) {
  Quotient comps = object_components(g);
  std::vector<ComponentData> out(comps.classes.size);
  auto members = comps.class_members();
  for (int c = 0; c < comps.classes.size; ++c) {
    out[c].objects = members[c];
    out[c].base = members[c].front();  // classes are numbered by min rep
  }
  // Transports by BFS from each base; arrows scanned in index order.
  std::vector<int> transport(g.objects().size, -1);
  for (auto& cd : out) transport[cd.base] = g.unit(cd.base);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int a = 0; a < g.arrows().size; ++a) {
      const int s = g.src(a), t = g.tgt(a);
      if (transport[s] >= 0 && transport[t] < 0) {
        transport[t] = g.mul(a, transport[s]);
        progress = true;
      }
      if (transport[t] >= 0 && transport[s] < 0) {
        transport[s] = g.mul(g.inv(a), transport[t]);
        progress = true;
      }
    }
  }
  for (auto& cd : out) {
    cd.transport.reserve(cd.objects.size());
    for (int v : cd.objects) cd.transport.push_back(transport[v]);
    cd.isotropy = isotropy_group(g, cd.base);
  }
  return out;
}

Skeleton skeleton(const Groupoid& g) {
  Skeleton sk;
  sk.components = component_data(g);
  Groupoid acc;
  bool first = true;
  for (const auto& cd : sk.components) {
    Groupoid piece = group_groupoid(cd.isotropy.table);
    acc = first ? std::move(piece) : disjoint_union(acc, piece);
    first = false;
    sk.object_to_g.push_back(cd.base);
    for (int a : cd.isotropy.arrows) sk.arrow_to_g.push_back(a);
  }
  if (first) acc = trivial_groupoid(FinSet{0});
  sk.groupoid = std::move(acc);
  return sk;
}

namespace {

// Sort key for a component: (canonical isotropy table, object count).
struct ComponentKey {
  std::vector<int> canon;
  int object_count;
  int index;
  bool operator<(const ComponentKey& o) const {
    if (canon != o.canon) return canon < o.canon;
    if (object_count != o.object_count) return object_count < o.object_count;
    return index < o.index;
  }
};

std::vector<ComponentKey> component_keys(
    const std::vector<ComponentData>& comps,
    std::vector<CanonicalGroup>& canons) {
  std::vector<ComponentKey> keys;
  for (size_t i = 0; i < comps.size(); ++i) {
    canons.push_back(canonical_group(comps[i].isotropy.table));
    keys.push_back({canons.back().table.mul,
                    static_cast<int>(comps[i].objects.size()),
                    static_cast<int>(i)});
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

std::optional<GroupoidIso> find_groupoid_isomorphism(const Groupoid& g,
                                                     const Groupoid& h) {
  if (g.objects() != h.objects() || g.arrows() != h.arrows()) {
    return std::nullopt;
  }
  auto gc = component_data(g);
  auto hc = component_data(h);
  if (gc.size() != hc.size()) return std::nullopt;

  std::vector<CanonicalGroup> g_canon, h_canon;
  auto g_keys = component_keys(gc, g_canon);
  auto h_keys = component_keys(hc, h_canon);
  for (size_t i = 0; i < g_keys.size(); ++i) {
    if (g_keys[i].canon != h_keys[i].canon ||
        g_keys[i].object_count != h_keys[i].object_count) {
      return std::nullopt;
    }
  }

  // Matched components: build the witness from transports. Every arrow a
  // of g factors as t_tgt ∘ iso_elt ∘ inv(t_src); map the three parts.
  std::vector<int> obj_map(g.objects().size, -1);
  std::vector<int> arr_map(g.arrows().size, -1);
  // object -> (component index, position within component) for g.
  std::vector<int> g_comp_of(g.objects().size), g_pos_of(g.objects().size);
  for (size_t c = 0; c < gc.size(); ++c) {
    for (size_t p = 0; p < gc[c].objects.size(); ++p) {
      g_comp_of[gc[c].objects[p]] = static_cast<int>(c);
      g_pos_of[gc[c].objects[p]] = static_cast<int>(p);
    }
  }
  // For the matched h component, position of each isotropy element in the
  // isotropy arrow list (for mapping group elements back to arrows).
  std::vector<int> h_comp_for_g(gc.size());
  std::vector<std::vector<int>> iso_elt_map(gc.size());  // g-iso -> h-iso elt
  for (size_t i = 0; i < g_keys.size(); ++i) {
    const int cg = g_keys[i].index;
    const int ch = h_keys[i].index;
    h_comp_for_g[cg] = ch;
    // group iso via the canonical labelings: g-elt -> canon -> h-elt
    const auto& cga = g_canon[cg];
    const auto& cha = h_canon[ch];
    std::vector<int> inv_h(cha.relabel.size());
    for (size_t x = 0; x < cha.relabel.size(); ++x) inv_h[cha.relabel[x]] = static_cast<int>(x);
    std::vector<int> m(cga.relabel.size());
    for (size_t x = 0; x < cga.relabel.size(); ++x) m[x] = inv_h[cga.relabel[x]];
    iso_elt_map[cg] = std::move(m);
    // objects: position-preserving within the component
    for (size_t p = 0; p < gc[cg].objects.size(); ++p) {
      obj_map[gc[cg].objects[p]] = hc[ch].objects[p];
    }
  }
  // isotropy-arrow positions in g for decomposition
  std::vector<std::vector<int>> g_iso_pos(gc.size());
  for (size_t c = 0; c < gc.size(); ++c) {
    g_iso_pos[c].assign(g.arrows().size, -1);
    for (size_t i = 0; i < gc[c].isotropy.arrows.size(); ++i) {
      g_iso_pos[c][gc[c].isotropy.arrows[i]] = static_cast<int>(i);
    }
  }
  for (int a = 0; a < g.arrows().size; ++a) {
    const int c = g_comp_of[g.src(a)];
    const int ch = h_comp_for_g[c];
    const int t_src = gc[c].transport[g_pos_of[g.src(a)]];
    const int t_tgt = gc[c].transport[g_pos_of[g.tgt(a)]];
    const int iso_arrow = g.mul(g.inv(t_tgt), g.mul(a, t_src));
    const int pos = g_iso_pos[c][iso_arrow];
    if (pos < 0) return std::nullopt;  // g is not a valid groupoid
    const int h_iso_arrow = hc[ch].isotropy.arrows[iso_elt_map[c][pos]];
    const int ht_src = hc[ch].transport[g_pos_of[g.src(a)]];
    const int ht_tgt = hc[ch].transport[g_pos_of[g.tgt(a)]];
    arr_map[a] = h.mul(ht_tgt, h.mul(h_iso_arrow, h.inv(ht_src)));
  }

  GroupoidIso iso{FinMap(g.objects(), h.objects(), std::move(obj_map)),
                  FinMap(g.arrows(), h.arrows(), std::move(arr_map))};
  if (!verify_groupoid_iso(g, h, iso)) return std::nullopt;
  return iso;
}

bool verify_groupoid_iso(const Groupoid& g, const Groupoid& h,
                         const GroupoidIso& iso) {
  if (!is_bijective(iso.objects) || !is_bijective(iso.arrows)) return false;
  for (int a = 0; a < g.arrows().size; ++a) {
    if (h.src(iso.arrows(a)) != iso.objects(g.src(a))) return false;
    if (h.tgt(iso.arrows(a)) != iso.objects(g.tgt(a))) return false;
  }
  for (int x = 0; x < g.objects().size; ++x) {
    if (iso.arrows(g.unit(x)) != h.unit(iso.objects(x))) return false;
  }
  for (int a = 0; a < g.arrows().size; ++a) {
    for (int b = 0; b < g.arrows().size; ++b) {
      const int m = g.mul_entry(a, b);
      const int hm = h.mul_entry(iso.arrows(a), iso.arrows(b));
      if ((m < 0) != (hm < 0)) return false;
      if (m >= 0 && iso.arrows(m) != hm) return false;
    }
  }
  return true;
}

}  // namespace gpd
