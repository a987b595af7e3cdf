#include "gpd/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace gpd::gen {

uint64_t Rng::next() {
  // splitmix64
  state_ += 0x9e3779b97f4a7c15ull;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

int Rng::below(int n) {
  if (n <= 0) throw std::invalid_argument("Rng::below: n must be positive");
  return static_cast<int>(next() % static_cast<uint64_t>(n));
}

std::vector<int> Rng::permutation(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[below(i + 1)]);
  return p;
}

std::vector<GroupTable> group_catalog(int max_order) {
  std::vector<GroupTable> out;
  for (int n = 1; n <= std::min(max_order, 8); ++n) {
    out.push_back(cyclic_group(n));
  }
  if (max_order >= 4) out.push_back(product_group(cyclic_group(2), cyclic_group(2)));
  if (max_order >= 6) out.push_back(symmetric_group_3());
  if (max_order >= 8) {
    out.push_back(product_group(cyclic_group(4), cyclic_group(2)));
    out.push_back(product_group(
        cyclic_group(2), product_group(cyclic_group(2), cyclic_group(2))));
    out.push_back(dihedral_group(4));
    out.push_back(quaternion_group());
  }
  return out;
}

namespace {

Groupoid component_groupoid(int n_objects, const GroupTable& iso) {
  Groupoid pairs = pair_groupoid(FinSet{n_objects});
  if (iso.n == 1) return pairs;
  return product_groupoid(pairs, group_groupoid(iso));
}

struct ComponentType {
  int objects;
  int group_index;  // into group_catalog
  int arrows;       // objects^2 * |group|
};

std::vector<ComponentType> component_types(int max_objects, int max_arrows) {
  std::vector<ComponentType> out;
  auto groups = group_catalog(max_arrows);
  for (int n = 1; n <= max_objects; ++n) {
    for (size_t i = 0; i < groups.size(); ++i) {
      const int arrows = n * n * groups[i].n;
      if (arrows <= max_arrows) out.push_back({n, static_cast<int>(i), arrows});
    }
  }
  return out;
}

}  // namespace

std::vector<Groupoid> enumerate_groupoids(int max_objects, int max_arrows) {
  auto groups = group_catalog(max_arrows);
  auto types = component_types(max_objects, max_arrows);
  std::vector<Groupoid> out;
  out.push_back(trivial_groupoid(FinSet{0}));

  // multisets of component types, non-decreasing type index
  std::vector<int> chosen;
  std::function<void(int, int, int)> rec = [&](int first, int objs, int arrs) {
    if (!chosen.empty()) {
      Groupoid g = component_groupoid(types[chosen[0]].objects,
                                      groups[types[chosen[0]].group_index]);
      for (size_t i = 1; i < chosen.size(); ++i) {
        g = disjoint_union(g, component_groupoid(
                                  types[chosen[i]].objects,
                                  groups[types[chosen[i]].group_index]));
      }
      out.push_back(std::move(g));
    }
    for (int t = first; t < static_cast<int>(types.size()); ++t) {
      if (objs + types[t].objects > max_objects) continue;
      if (arrs + types[t].arrows > max_arrows) continue;
      chosen.push_back(t);
      rec(t, objs + types[t].objects, arrs + types[t].arrows);
      chosen.pop_back();
    }
  };
  rec(0, 0, 0);
  return out;
}

namespace {

// Sym(m) as a table plus the permutations themselves, lexicographic.
struct SymData {
  GroupTable table;
  std::vector<std::vector<int>> perms;
};

SymData symmetric_data(int m) {
  if (m > 6) {
    throw std::invalid_argument(
        "enumerate/random actions: fibers above 6 are out of desk scale");
  }
  SymData s;
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  do {
    s.perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(s.perms.size());
  s.table.n = n;
  s.table.mul.resize(static_cast<size_t>(n) * n);
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(
        std::lower_bound(s.perms.begin(), s.perms.end(), q) - s.perms.begin());
  };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(m);
      for (int i = 0; i < m; ++i) c[i] = s.perms[a][s.perms[b][i]];
      s.table.mul[a * n + b] = index_of(c);
    }
  }
  return s;
}

// Build the action of g determined by a fiber size per component and a
// homomorphism isotropy -> Sym(fiber) per supported component, spread by
// the canonical transports. Carrier: objects in increasing order, fiber
// entries within.
GAction assemble_action(GroupoidPtr g, const std::vector<ComponentData>& comps,
                        const std::vector<int>& fiber,
                        const std::vector<std::vector<std::vector<int>>>& phi) {
  const Groupoid& gr = *g;
  std::vector<int> comp_of(gr.objects().size), pos_of(gr.objects().size);
  for (size_t c = 0; c < comps.size(); ++c) {
    for (size_t p = 0; p < comps[c].objects.size(); ++p) {
      comp_of[comps[c].objects[p]] = static_cast<int>(c);
      pos_of[comps[c].objects[p]] = static_cast<int>(p);
    }
  }
  std::vector<int> offset(gr.objects().size + 1, 0);
  for (int w = 0; w < gr.objects().size; ++w) {
    offset[w + 1] = offset[w] + fiber[comp_of[w]];
  }
  const int carrier = offset[gr.objects().size];
  std::vector<int> anchor(carrier);
  for (int w = 0; w < gr.objects().size; ++w) {
    for (int j = offset[w]; j < offset[w + 1]; ++j) anchor[j] = w;
  }
  std::vector<std::vector<int>> iso_pos(comps.size());
  for (size_t c = 0; c < comps.size(); ++c) {
    iso_pos[c].assign(gr.arrows().size, -1);
    for (size_t i = 0; i < comps[c].isotropy.arrows.size(); ++i) {
      iso_pos[c][comps[c].isotropy.arrows[i]] = static_cast<int>(i);
    }
  }
  std::vector<int> act(static_cast<size_t>(gr.arrows().size) * carrier, -1);
  for (int arr = 0; arr < gr.arrows().size; ++arr) {
    const int ws = gr.src(arr), wt = gr.tgt(arr);
    const int c = comp_of[ws];
    if (fiber[c] == 0) continue;
    const auto& cd = comps[c];
    const int t_src = cd.transport[pos_of[ws]];
    const int t_tgt = cd.transport[pos_of[wt]];
    const int iso_arrow = gr.mul(gr.inv(t_tgt), gr.mul(arr, t_src));
    const auto& perm = phi[c][iso_pos[c][iso_arrow]];
    for (int j = 0; j < fiber[c]; ++j) {
      act[arr * carrier + offset[ws] + j] = offset[wt] + perm[j];
    }
  }
  return GAction(std::move(g), FinSet{carrier},
                 FinMap(FinSet{carrier}, gr.objects(), std::move(anchor)),
                 std::move(act));
}

}  // namespace

std::vector<GAction> enumerate_actions(GroupoidPtr g, int max_carrier) {
  std::vector<GAction> out;
  auto comps = component_data(*g);
  const int nc = static_cast<int>(comps.size());

  // hom lists per component and fiber size
  std::vector<std::vector<std::vector<std::vector<std::vector<int>>>>> homs(
      nc);  // [component][fiber m] -> list of (iso elt -> perm)
  for (int c = 0; c < nc; ++c) {
    const int osize = static_cast<int>(comps[c].objects.size());
    const int maxm = osize == 0 ? 0 : max_carrier / osize;
    homs[c].resize(maxm + 1);
    for (int m = 1; m <= maxm; ++m) {
      SymData sym = symmetric_data(m);
      for (const auto& hom :
           enumerate_group_homs(comps[c].isotropy.table, sym.table)) {
        std::vector<std::vector<int>> phi(hom.size());
        for (size_t e = 0; e < hom.size(); ++e) phi[e] = sym.perms[hom[e]];
        homs[c][m].push_back(std::move(phi));
      }
    }
  }

  std::vector<int> fiber(nc, 0);
  std::vector<int> pick(nc, 0);
  std::function<void(int, int)> rec = [&](int c, int used) {
    if (c == nc) {
      std::vector<std::vector<std::vector<int>>> phi(nc);
      std::function<void(int)> choose = [&](int i) {
        if (i == nc) {
          out.push_back(assemble_action(g, comps, fiber, phi));
          return;
        }
        if (fiber[i] == 0) {
          phi[i] = {};
          choose(i + 1);
          return;
        }
        for (const auto& hom : homs[i][fiber[i]]) {
          phi[i] = hom;
          choose(i + 1);
        }
      };
      choose(0);
      return;
    }
    const int osize = static_cast<int>(comps[c].objects.size());
    for (int m = 0; used + m * osize <= max_carrier; ++m) {
      fiber[c] = m;
      rec(c + 1, used + m * osize);
      if (osize == 0) break;
    }
    fiber[c] = 0;
  };
  rec(0, 0);
  return out;
}

std::vector<InternalFunctor> enumerate_functors(GroupoidPtr h, GroupoidPtr g,
                                                int cap) {
  std::vector<InternalFunctor> out;
  const Groupoid& hh = *h;
  const Groupoid& gg = *g;
  const int oh = hh.objects().size;
  const int og = gg.objects().size;
  if (oh > 0 && og == 0) return out;

  std::vector<int> obj(oh, 0);
  std::vector<int> arr(hh.arrows().size, -1);

  std::function<bool(int)> assign_arrows = [&](int a) -> bool {
    if (cap > 0 && static_cast<int>(out.size()) >= cap) return false;
    if (a == hh.arrows().size) {
      out.push_back(
          {h, g, FinMap(hh.objects(), gg.objects(), obj),
           FinMap(hh.arrows(), gg.arrows(), arr)});
      return true;
    }
    if (arr[a] >= 0) return assign_arrows(a + 1);
    for (int t = 0; t < gg.arrows().size; ++t) {
      if (gg.src(t) != obj[hh.src(a)] || gg.tgt(t) != obj[hh.tgt(a)]) continue;
      // consistency with everything assigned so far
      std::vector<std::pair<int, int>> placed;
      auto place = [&](int x, int v) {
        arr[x] = v;
        placed.push_back({x, v});
      };
      place(a, t);
      bool ok = true;
      if (arr[hh.inv(a)] < 0) {
        place(hh.inv(a), gg.inv(t));
      } else if (arr[hh.inv(a)] != gg.inv(t)) {
        ok = false;
      }
      if (ok) {
        for (int b = 0; b < hh.arrows().size && ok; ++b) {
          if (arr[b] < 0) continue;
          if (hh.composable(a, b)) {
            const int m = hh.mul(a, b);
            const int gm = gg.mul(arr[a], arr[b]);
            if (arr[m] < 0) place(m, gm);
            else if (arr[m] != gm) ok = false;
          }
          if (ok && hh.composable(b, a)) {
            const int m = hh.mul(b, a);
            const int gm = gg.mul(arr[b], arr[a]);
            if (arr[m] < 0) place(m, gm);
            else if (arr[m] != gm) ok = false;
          }
        }
      }
      if (ok && !assign_arrows(a + 1)) return false;
      for (auto it = placed.rbegin(); it != placed.rend(); ++it) {
        arr[it->first] = -1;
      }
    }
    return true;
  };

  std::function<bool()> run_objects = [&]() -> bool {
    while (true) {
      // seed units and check they stay consistent
      std::fill(arr.begin(), arr.end(), -1);
      bool ok = true;
      for (int x = 0; x < oh && ok; ++x) {
        const int ux = hh.unit(x);
        if (arr[ux] < 0) arr[ux] = gg.unit(obj[x]);
        else if (arr[ux] != gg.unit(obj[x])) ok = false;
      }
      if (ok && !assign_arrows(0)) return false;
      int i = oh - 1;
      while (i >= 0 && obj[i] == og - 1) obj[i--] = 0;
      if (i < 0) return true;
      ++obj[i];
    }
  };
  if (oh == 0) {
    out.push_back({h, g, FinMap(hh.objects(), gg.objects(), {}),
                   FinMap(hh.arrows(), gg.arrows(), {})});
    return out;
  }
  run_objects();
  return out;
}

Groupoid random_groupoid(Rng& rng, int max_objects, int max_arrows) {
  auto groups = group_catalog(max_arrows);
  auto types = component_types(max_objects, max_arrows);
  if (types.empty() || rng.below(16) == 0) {
    return trivial_groupoid(FinSet{rng.below(std::max(1, max_objects + 1))});
  }
  Groupoid g;
  bool first = true;
  int objs = 0, arrs = 0;
  const int want = 1 + rng.below(3);
  for (int i = 0; i < want; ++i) {
    std::vector<int> fits;
    for (int t = 0; t < static_cast<int>(types.size()); ++t) {
      if (objs + types[t].objects <= max_objects &&
          arrs + types[t].arrows <= max_arrows) {
        fits.push_back(t);
      }
    }
    if (fits.empty()) break;
    const int t = fits[rng.below(static_cast<int>(fits.size()))];
    Groupoid piece =
        component_groupoid(types[t].objects, groups[types[t].group_index]);
    g = first ? std::move(piece) : disjoint_union(g, piece);
    first = false;
    objs += types[t].objects;
    arrs += types[t].arrows;
  }
  if (first) return trivial_groupoid(FinSet{1});
  return random_relabel(rng, g);
}

Groupoid random_relabel(Rng& rng, const Groupoid& g) {
  FinMap obj_perm(g.objects(), g.objects(),
                  rng.permutation(g.objects().size));
  FinMap arr_perm(g.arrows(), g.arrows(), rng.permutation(g.arrows().size));
  return relabel_groupoid(g, obj_perm, arr_perm);
}

FinMap random_anchor(Rng& rng, const Groupoid& g, int carrier) {
  if (g.objects().size == 0) carrier = 0;  // only the empty anchor exists
  std::vector<int> t(carrier);
  for (int i = 0; i < carrier; ++i) t[i] = rng.below(g.objects().size);
  return FinMap(FinSet{carrier}, g.objects(), std::move(t));
}

GAction random_action(Rng& rng, GroupoidPtr g, int max_carrier) {
  auto comps = component_data(*g);
  const int nc = static_cast<int>(comps.size());
  std::vector<int> fiber(nc, 0);
  int budget = max_carrier;
  for (int c = 0; c < nc; ++c) {
    const int osize = static_cast<int>(comps[c].objects.size());
    const int maxm = osize == 0 ? 0 : budget / osize;
    fiber[c] = maxm == 0 ? 0 : rng.below(maxm + 1);
    budget -= fiber[c] * osize;
  }
  std::vector<std::vector<std::vector<int>>> phi(nc);
  for (int c = 0; c < nc; ++c) {
    if (fiber[c] == 0) continue;
    SymData sym = symmetric_data(fiber[c]);
    auto homs = enumerate_group_homs(comps[c].isotropy.table, sym.table);
    const auto& hom = homs[rng.below(static_cast<int>(homs.size()))];
    phi[c].resize(hom.size());
    for (size_t e = 0; e < hom.size(); ++e) phi[c][e] = sym.perms[hom[e]];
  }
  return assemble_action(std::move(g), comps, fiber, phi);
}

InternalFunctor random_functor(Rng& rng, int max_objects, int max_arrows) {
  switch (rng.below(8)) {
    case 0: {
      GroupoidPtr g = share(random_groupoid(rng, max_objects, max_arrows));
      return identity_functor(g);
    }
    case 1: {
      GroupoidPtr g = share(random_groupoid(rng, max_objects, max_arrows));
      return skeleton_functors(g).inclusion;
    }
    case 2: {
      GroupoidPtr g = share(random_groupoid(rng, max_objects, max_arrows));
      return skeleton_functors(g).retraction;
    }
    case 3: {
      GroupoidPtr g = share(random_groupoid(rng, max_objects, max_arrows));
      return bang_functor(g);
    }
    case 4: {
      Groupoid g = random_groupoid(rng, max_objects, max_arrows);
      if (g.objects().size == 0) g = trivial_groupoid(FinSet{1});
      GroupoidPtr gp = share(std::move(g));
      const int isize = 1 + rng.below(2);
      return point_functor(gp, random_anchor(rng, *gp, isize));
    }
    case 5: {
      // a group homomorphism as a one-object functor
      auto groups = group_catalog(std::min(6, max_arrows));
      const GroupTable& a = rng.pick(groups);
      const GroupTable& b = rng.pick(groups);
      auto homs = enumerate_group_homs(a, b);
      const auto& hom = homs[rng.below(static_cast<int>(homs.size()))];
      GroupoidPtr ga = share(group_groupoid(a));
      GroupoidPtr gb = share(group_groupoid(b));
      return {ga, gb, FinMap::constant(ga->objects(), gb->objects(), 0),
              FinMap(ga->arrows(), gb->arrows(), hom)};
    }
    case 6: {
      // relabeling isomorphism
      Groupoid g = random_groupoid(rng, max_objects, max_arrows);
      std::vector<int> op = rng.permutation(g.objects().size);
      std::vector<int> ap = rng.permutation(g.arrows().size);
      FinMap obj_perm(g.objects(), g.objects(), op);
      FinMap arr_perm(g.arrows(), g.arrows(), ap);
      Groupoid r = relabel_groupoid(g, obj_perm, arr_perm);
      GroupoidPtr gp = share(std::move(g));
      GroupoidPtr rp = share(std::move(r));
      return {gp, rp, obj_perm, arr_perm};
    }
    default: {
      // composite: retraction then a group hom, or inclusion after
      // relabeling; built from two draws above
      InternalFunctor f = random_functor(rng, max_objects, max_arrows);
      auto sk = skeleton_functors(f.cod);
      return compose(sk.retraction, f);
    }
  }
}

InternalFunctor random_essential_equivalence(Rng& rng, int max_objects,
                                             int max_arrows) {
  switch (rng.below(4)) {
    case 0: {
      GroupoidPtr g = share(random_groupoid(rng, max_objects, max_arrows));
      return identity_functor(g);
    }
    case 1: {
      GroupoidPtr g = share(random_groupoid(rng, max_objects, max_arrows));
      return skeleton_functors(g).inclusion;
    }
    case 2: {
      GroupoidPtr g = share(random_groupoid(rng, max_objects, max_arrows));
      return skeleton_functors(g).retraction;
    }
    default: {
      Groupoid g = random_groupoid(rng, max_objects, max_arrows);
      std::vector<int> op = rng.permutation(g.objects().size);
      std::vector<int> ap = rng.permutation(g.arrows().size);
      FinMap obj_perm(g.objects(), g.objects(), op);
      FinMap arr_perm(g.arrows(), g.arrows(), ap);
      Groupoid r = relabel_groupoid(g, obj_perm, arr_perm);
      GroupoidPtr gp = share(std::move(g));
      // inclusion of the skeleton composed with the relabeling
      InternalFunctor iso{gp, share(std::move(r)), obj_perm, arr_perm};
      return compose(iso, skeleton_functors(gp).inclusion);
    }
  }
}

Bibundle random_bibundle(Rng& rng, int max_carrier) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    Bibundle candidate = [&]() -> Bibundle {
      switch (rng.below(5)) {
        case 0: {
          GroupoidPtr g = share(random_groupoid(rng, 3, 8));
          return identity_bibundle(g);
        }
        case 1:
          return from_functor(random_functor(rng, 3, 8));
        case 2: {
          InternalFunctor f = random_essential_equivalence(rng, 3, 8);
          return opposite_bibundle(from_functor(f));
        }
        case 3: {
          InternalFunctor f = random_essential_equivalence(rng, 2, 6);
          Bibundle left = opposite_bibundle(from_functor(f));
          auto sk = skeleton_functors(f.dom);
          return compose(left, from_functor(sk.retraction));
        }
        default: {
          Groupoid g = random_groupoid(rng, 3, 6);
          if (g.objects().size == 0) g = trivial_groupoid(FinSet{1});
          GroupoidPtr gp = share(std::move(g));
          return point_bundle(gp, random_anchor(rng, *gp, 1 + rng.below(2)));
        }
      }
    }();
    if (candidate.valid() && candidate.carrier().size <= max_carrier) {
      return candidate;
    }
  }
  return identity_bibundle(share(trivial_groupoid(FinSet{1})));
}

std::pair<Bibundle, Bibundle> random_pairable_bibundles(Rng& rng,
                                                        int max_carrier) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    GroupoidPtr k = share(random_groupoid(rng, 2, 4));
    auto mk = [&](int kind) -> Bibundle {
      switch (kind) {
        case 0:
          return identity_bibundle(k);
        case 1:
          return from_functor(skeleton_functors(k).retraction);
        case 2:
          return from_functor(bang_functor(k));
        default: {
          auto sk = skeleton_functors(k);
          return from_functor(compose(skeleton_functors(sk.retraction.cod).retraction,
                                      sk.retraction));
        }
      }
    };
    Bibundle p1 = mk(rng.below(4));
    Bibundle p2 = mk(rng.below(4));
    if (p1.valid() && p2.valid() &&
        p1.carrier().size <= max_carrier &&
        p2.carrier().size <= max_carrier) {
      return {std::move(p1), std::move(p2)};
    }
  }
  GroupoidPtr one = share(trivial_groupoid(FinSet{1}));
  return {identity_bibundle(one), identity_bibundle(one)};
}

std::optional<CorruptGroupoid> corrupt_groupoid(Rng& rng, const Groupoid& g) {
  const int n1 = g.arrows().size;
  if (n1 == 0) return std::nullopt;
  const int start = rng.below(6);
  for (int k = 0; k < 6; ++k) {
    const int kind = (start + k) % 6;
    switch (kind) {
      case 0: {  // unit anchored at the wrong object
        for (int x = 0; x < g.objects().size; ++x) {
          for (int a = 0; a < n1; ++a) {
            if (g.src(a) == x && g.tgt(a) == x) continue;
            std::vector<int> unit = g.unit_map().table();
            unit[x] = a;
            return CorruptGroupoid{
                Groupoid(g.objects(), g.arrows(), g.src_map(), g.tgt_map(),
                         FinMap(g.objects(), g.arrows(), std::move(unit)),
                         g.inv_map(), g.mul_table()),
                "unit:"};
          }
        }
        break;
      }
      case 1: {  // inverse with the wrong endpoints
        for (int a = 0; a < n1; ++a) {
          for (int b = 0; b < n1; ++b) {
            if (g.src(b) == g.tgt(a) && g.tgt(b) == g.src(a)) continue;
            std::vector<int> inv = g.inv_map().table();
            inv[a] = b;
            return CorruptGroupoid{
                Groupoid(g.objects(), g.arrows(), g.src_map(), g.tgt_map(),
                         g.unit_map(),
                         FinMap(g.arrows(), g.arrows(), std::move(inv)),
                         g.mul_table()),
                "inv-compat:"};
          }
        }
        break;
      }
      case 2: {  // well-typed but wrong inverse
        for (int a = 0; a < n1; ++a) {
          for (int b = 0; b < n1; ++b) {
            if (b == g.inv(a)) continue;
            if (g.src(b) != g.tgt(a) || g.tgt(b) != g.src(a)) continue;
            std::vector<int> inv = g.inv_map().table();
            inv[a] = b;
            return CorruptGroupoid{
                Groupoid(g.objects(), g.arrows(), g.src_map(), g.tgt_map(),
                         g.unit_map(),
                         FinMap(g.arrows(), g.arrows(), std::move(inv)),
                         g.mul_table()),
                "inv-law:"};
          }
        }
        break;
      }
      case 3: {  // hole in the multiplication table
        for (int a = 0; a < n1; ++a) {
          for (int b = 0; b < n1; ++b) {
            if (!g.composable(a, b)) continue;
            std::vector<int> mul = g.mul_table();
            mul[a * n1 + b] = -1;
            return CorruptGroupoid{
                Groupoid(g.objects(), g.arrows(), g.src_map(), g.tgt_map(),
                         g.unit_map(), g.inv_map(), std::move(mul)),
                "mul-domain:"};
          }
        }
        break;
      }
      case 4: {  // composite with the wrong endpoints
        for (int a = 0; a < n1; ++a) {
          for (int b = 0; b < n1; ++b) {
            if (!g.composable(a, b)) continue;
            const int m = g.mul_entry(a, b);
            for (int c = 0; c < n1; ++c) {
              if (g.src(c) == g.src(m) && g.tgt(c) == g.tgt(m)) continue;
              std::vector<int> mul = g.mul_table();
              mul[a * n1 + b] = c;
              return CorruptGroupoid{
                  Groupoid(g.objects(), g.arrows(), g.src_map(), g.tgt_map(),
                           g.unit_map(), g.inv_map(), std::move(mul)),
                  "mul-compat:"};
            }
          }
        }
        break;
      }
      default: {  // well-typed but wrong unit composite
        for (int a = 0; a < n1; ++a) {
          const int e = g.unit(g.src(a));
          for (int c = 0; c < n1; ++c) {
            if (c == a) continue;
            if (g.src(c) != g.src(a) || g.tgt(c) != g.tgt(a)) continue;
            std::vector<int> mul = g.mul_table();
            mul[a * n1 + e] = c;
            return CorruptGroupoid{
                Groupoid(g.objects(), g.arrows(), g.src_map(), g.tgt_map(),
                         g.unit_map(), g.inv_map(), std::move(mul)),
                "unit-law:"};
          }
        }
        break;
      }
    }
  }
  return std::nullopt;
}

std::optional<CorruptAction> corrupt_action(Rng& rng, const GAction& a) {
  const Groupoid& g = a.groupoid();
  const int nx = a.carrier().size;
  if (nx == 0 || g.arrows().size == 0) return std::nullopt;
  const int start = rng.below(3);
  for (int k = 0; k < 3; ++k) {
    const int kind = (start + k) % 3;
    switch (kind) {
      case 0: {  // hole in the action table
        for (int gi = 0; gi < g.arrows().size; ++gi) {
          for (int x = 0; x < nx; ++x) {
            if (!a.act_defined(gi, x)) continue;
            std::vector<int> act = a.act_table();
            act[gi * nx + x] = -1;
            return CorruptAction{GAction(a.groupoid_ptr(), a.carrier(),
                                         a.anchor_map(), std::move(act)),
                                 "act-domain:"};
          }
        }
        break;
      }
      case 1: {  // image in the wrong fiber
        for (int gi = 0; gi < g.arrows().size; ++gi) {
          for (int x = 0; x < nx; ++x) {
            if (!a.act_defined(gi, x)) continue;
            for (int y = 0; y < nx; ++y) {
              if (a.anchor(y) == g.tgt(gi)) continue;
              std::vector<int> act = a.act_table();
              act[gi * nx + x] = y;
              return CorruptAction{GAction(a.groupoid_ptr(), a.carrier(),
                                           a.anchor_map(), std::move(act)),
                                   "act-anchor:"};
            }
          }
        }
        break;
      }
      default: {  // well-typed but wrong unit action
        for (int x = 0; x < nx; ++x) {
          const int e = g.unit(a.anchor(x));
          for (int y = 0; y < nx; ++y) {
            if (y == x || a.anchor(y) != a.anchor(x)) continue;
            std::vector<int> act = a.act_table();
            act[e * nx + x] = y;
            return CorruptAction{GAction(a.groupoid_ptr(), a.carrier(),
                                         a.anchor_map(), std::move(act)),
                                 "act-unit:"};
          }
        }
        break;
      }
    }
  }
  return std::nullopt;
}

}  // namespace gpd::gen
