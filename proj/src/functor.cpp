#include "gpd/functor.hpp"

#include <stdexcept>
#include <string>

namespace gpd {

bool InternalFunctor::operator==(const InternalFunctor& o) const {
  return *dom == *o.dom && *cod == *o.cod && obj_map == o.obj_map &&
         arr_map == o.arr_map;
}

ValidationReport validate_functor(const InternalFunctor& f) {
  ValidationReport rep;
  const Groupoid& h = *f.dom;
  const Groupoid& g = *f.cod;
  if (f.obj_map.dom() != h.objects() || f.obj_map.cod() != g.objects() ||
      f.arr_map.dom() != h.arrows() || f.arr_map.cod() != g.arrows()) {
    rep.add("src-compat: object/arrow maps have the wrong shape");
    return rep;
  }
  for (int a = 0; a < h.arrows().size; ++a) {
    if (g.src(f.arr_map(a)) != f.obj_map(h.src(a))) {
      rep.add("src-compat: fails at arrow " + std::to_string(a));
    }
    if (g.tgt(f.arr_map(a)) != f.obj_map(h.tgt(a))) {
      rep.add("tgt-compat: fails at arrow " + std::to_string(a));
    }
  }
  for (int x = 0; x < h.objects().size; ++x) {
    if (f.arr_map(h.unit(x)) != g.unit(f.obj_map(x))) {
      rep.add("unit-preservation: fails at object " + std::to_string(x));
    }
  }
  if (!rep.ok()) return rep;
  for (int a = 0; a < h.arrows().size; ++a) {
    for (int b = 0; b < h.arrows().size; ++b) {
      if (!h.composable(a, b)) continue;
      if (f.arr_map(h.mul(a, b)) != g.mul(f.arr_map(a), f.arr_map(b))) {
        rep.add("mul-preservation: fails at (" + std::to_string(a) + ", " +
                std::to_string(b) + ")");
      }
    }
  }
  return rep;
}

InternalFunctor identity_functor(GroupoidPtr g) {
  FinMap obj = FinMap::identity(g->objects());
  FinMap arr = FinMap::identity(g->arrows());
  return {g, g, std::move(obj), std::move(arr)};
}

InternalFunctor compose(const InternalFunctor& f, const InternalFunctor& g) {
  if (!(*g.cod == *f.dom)) {
    throw std::invalid_argument("compose(InternalFunctor): shapes mismatch");
  }
  return {g.dom, f.cod, compose(f.obj_map, g.obj_map),
          compose(f.arr_map, g.arr_map)};
}

InternalFunctor bang_functor(GroupoidPtr g) {
  GroupoidPtr one = share(trivial_groupoid(FinSet{1}));
  FinMap obj = FinMap::constant(g->objects(), FinSet{1}, 0);
  FinMap arr = FinMap::constant(g->arrows(), FinSet{1}, 0);
  return {std::move(g), std::move(one), std::move(obj), std::move(arr)};
}

InternalFunctor point_functor(GroupoidPtr g, const FinMap& x) {
  if (x.cod() != g->objects()) {
    throw std::invalid_argument("point_functor: map does not pick objects");
  }
  GroupoidPtr dom = share(trivial_groupoid(x.dom()));
  FinMap arr = compose(g->unit_map(), x);
  return {std::move(dom), std::move(g), x, std::move(arr)};
}

InternalFunctor projection_functor(GroupoidPtr product, GroupoidPtr h,
                                   GroupoidPtr g, int which) {
  const int o_g = g->objects().size, a_g = g->arrows().size;
  std::vector<int> obj(product->objects().size), arr(product->arrows().size);
  for (int i = 0; i < product->objects().size; ++i) {
    obj[i] = which == 1 ? i / o_g : i % o_g;
  }
  for (int i = 0; i < product->arrows().size; ++i) {
    arr[i] = which == 1 ? i / a_g : i % a_g;
  }
  GroupoidPtr cod = which == 1 ? h : g;
  FinMap obj_map(product->objects(), cod->objects(), std::move(obj));
  FinMap arr_map(product->arrows(), cod->arrows(), std::move(arr));
  return {std::move(product), cod, std::move(obj_map), std::move(arr_map)};
}

SkeletonFunctors skeleton_functors(GroupoidPtr g) {
  Skeleton sk = skeleton(*g);
  SkeletonFunctors out;
  out.skeleton_groupoid = share(sk.groupoid);

  FinMap incl_obj(out.skeleton_groupoid->objects(), g->objects(),
                  sk.object_to_g);
  FinMap incl_arr(out.skeleton_groupoid->arrows(), g->arrows(),
                  sk.arrow_to_g);
  out.inclusion = {out.skeleton_groupoid, g, std::move(incl_obj),
                   std::move(incl_arr)};

  // Retraction: objects to their component, arrows conjugated back to the
  // base isotropy by the transports.
  std::vector<int> comp_of(g->objects().size), pos_of(g->objects().size);
  std::vector<int> arrow_offset(sk.components.size(), 0);
  for (size_t c = 1; c < sk.components.size(); ++c) {
    arrow_offset[c] = arrow_offset[c - 1] +
                      static_cast<int>(sk.components[c - 1].isotropy.arrows.size());
  }
  for (size_t c = 0; c < sk.components.size(); ++c) {
    for (size_t p = 0; p < sk.components[c].objects.size(); ++p) {
      comp_of[sk.components[c].objects[p]] = static_cast<int>(c);
      pos_of[sk.components[c].objects[p]] = static_cast<int>(p);
    }
  }
  std::vector<int> ret_obj(g->objects().size), ret_arr(g->arrows().size);
  for (int v = 0; v < g->objects().size; ++v) ret_obj[v] = comp_of[v];
  for (int a = 0; a < g->arrows().size; ++a) {
    const auto& cd = sk.components[comp_of[g->src(a)]];
    const int t_src = cd.transport[pos_of[g->src(a)]];
    const int t_tgt = cd.transport[pos_of[g->tgt(a)]];
    const int iso_arrow = g->mul(g->inv(t_tgt), g->mul(a, t_src));
    int pos = -1;
    for (size_t i = 0; i < cd.isotropy.arrows.size(); ++i) {
      if (cd.isotropy.arrows[i] == iso_arrow) {
        pos = static_cast<int>(i);
        break;
      }
    }
    if (pos < 0) throw std::logic_error("skeleton_functors: invalid groupoid");
    ret_arr[a] = arrow_offset[comp_of[g->src(a)]] + pos;
  }
  out.retraction = {g, out.skeleton_groupoid,
                    FinMap(g->objects(), out.skeleton_groupoid->objects(),
                           std::move(ret_obj)),
                    FinMap(g->arrows(), out.skeleton_groupoid->arrows(),
                           std::move(ret_arr))};
  return out;
}

GAction restrict_action(const InternalFunctor& f, const GAction& a) {
  if (!(a.groupoid() == *f.cod)) {
    throw std::invalid_argument(
        "restrict_action: action does not live over the codomain");
  }
  const Groupoid& h = *f.dom;
  Pullback pb = pullback(f.obj_map, a.anchor_map());
  std::vector<int> anchor(pb.apex.size);
  for (int i = 0; i < pb.apex.size; ++i) anchor[i] = pb.proj1(i);
  std::vector<int> act(static_cast<size_t>(h.arrows().size) * pb.apex.size,
                       -1);
  for (int hi = 0; hi < h.arrows().size; ++hi) {
    for (int i = 0; i < pb.apex.size; ++i) {
      if (h.src(hi) != pb.proj1(i)) continue;
      act[hi * pb.apex.size + i] = pb.pair_index(
          h.tgt(hi), a.act(f.arr_map(hi), pb.proj2(i)));
    }
  }
  return GAction(f.dom, pb.apex,
                 FinMap(pb.apex, h.objects(), std::move(anchor)),
                 std::move(act));
}

BiAction half_induce(const InternalFunctor& f, const GAction& y) {
  if (!(y.groupoid() == *f.dom)) {
    throw std::invalid_argument(
        "half_induce: action does not live over the domain");
  }
  const Groupoid& h = *f.dom;
  const Groupoid& g = *f.cod;
  // {(y, g0) | F0(anchor y) = tgt g0}
  Pullback pb = pullback(compose(f.obj_map, y.anchor_map()), g.tgt_map());
  BiAction b;
  b.left = f.dom;
  b.right = f.cod;
  b.carrier = pb.apex;
  std::vector<int> p(pb.apex.size), q(pb.apex.size);
  for (int i = 0; i < pb.apex.size; ++i) {
    p[i] = y.anchor(pb.proj1(i));
    q[i] = g.src(pb.proj2(i));
  }
  b.p_anchor = FinMap(pb.apex, h.objects(), std::move(p));
  b.q_anchor = FinMap(pb.apex, g.objects(), std::move(q));
  b.h_act.assign(static_cast<size_t>(h.arrows().size) * pb.apex.size, -1);
  b.g_act.assign(static_cast<size_t>(g.arrows().size) * pb.apex.size, -1);
  for (int hi = 0; hi < h.arrows().size; ++hi) {
    for (int i = 0; i < pb.apex.size; ++i) {
      if (h.src(hi) != b.p_anchor(i)) continue;
      b.h_act[hi * pb.apex.size + i] =
          pb.pair_index(y.act(hi, pb.proj1(i)),
                        g.mul(f.arr_map(hi), pb.proj2(i)));
    }
  }
  for (int gi = 0; gi < g.arrows().size; ++gi) {
    for (int i = 0; i < pb.apex.size; ++i) {
      if (g.src(gi) != b.q_anchor(i)) continue;
      b.g_act[gi * pb.apex.size + i] =
          pb.pair_index(pb.proj1(i), g.mul(pb.proj2(i), g.inv(gi)));
    }
  }
  return b;
}

namespace {

std::vector<int> class_representatives(const Quotient& q) {
  std::vector<int> rep(q.classes.size, -1);
  for (int x = 0; x < q.source.size; ++x) {
    if (rep[q.proj(x)] < 0) rep[q.proj(x)] = x;
  }
  return rep;
}

}  // namespace

GAction induce(const InternalFunctor& f, const GAction& y) {
  BiAction half = half_induce(f, y);
  const Groupoid& g = *f.cod;
  Quotient q = orbits(half.left_action());
  std::vector<int> rep = class_representatives(q);
  std::vector<int> anchor(q.classes.size);
  for (int c = 0; c < q.classes.size; ++c) anchor[c] = half.q_anchor(rep[c]);
  std::vector<int> act(static_cast<size_t>(g.arrows().size) * q.classes.size,
                       -1);
  for (int gi = 0; gi < g.arrows().size; ++gi) {
    for (int c = 0; c < q.classes.size; ++c) {
      if (g.src(gi) != anchor[c]) continue;
      act[gi * q.classes.size + c] = q.proj(half.gact(gi, rep[c]));
    }
  }
  return GAction(f.cod, q.classes,
                 FinMap(q.classes, g.objects(), std::move(anchor)),
                 std::move(act));
}

EquivariantMap induce_transpose(const InternalFunctor& f, const GAction& y,
                                const GAction& a, const EquivariantMap& phi) {
  BiAction half = half_induce(f, y);
  Quotient q = orbits(half.left_action());
  GAction ind = induce(f, y);
  GAction ra = restrict_action(f, a);
  if (!(phi.dom == y) || !(phi.cod == ra)) {
    throw std::invalid_argument("induce_transpose: map has the wrong shape");
  }
  const Groupoid& g = *f.cod;
  Pullback half_pb =
      pullback(compose(f.obj_map, y.anchor_map()), g.tgt_map());
  Pullback ra_pb = pullback(f.obj_map, a.anchor_map());
  std::vector<int> rep = class_representatives(q);
  std::vector<int> t(q.classes.size);
  for (int c = 0; c < q.classes.size; ++c) {
    const int yi = half_pb.proj1(rep[c]);
    const int g0 = half_pb.proj2(rep[c]);
    const int xi = ra_pb.proj2(phi.map(yi));  // the A-part of phi(y)
    t[c] = a.act(g.inv(g0), xi);
  }
  return {ind, a, FinMap(q.classes, a.carrier(), std::move(t))};
}

EquivariantMap induce_untranspose(const InternalFunctor& f, const GAction& y,
                                  const GAction& a,
                                  const EquivariantMap& big) {
  BiAction half = half_induce(f, y);
  Quotient q = orbits(half.left_action());
  GAction ind = induce(f, y);
  GAction ra = restrict_action(f, a);
  if (!(big.dom == ind) || !(big.cod == a)) {
    throw std::invalid_argument("induce_untranspose: map has the wrong shape");
  }
  const Groupoid& g = *f.cod;
  Pullback half_pb =
      pullback(compose(f.obj_map, y.anchor_map()), g.tgt_map());
  Pullback ra_pb = pullback(f.obj_map, a.anchor_map());
  std::vector<int> t(y.carrier().size);
  for (int yi = 0; yi < y.carrier().size; ++yi) {
    const int u = y.anchor(yi);
    const int e = g.unit(f.obj_map(u));
    const int idx = half_pb.pair_index(yi, e);
    t[yi] = ra_pb.pair_index(u, big.map(q.proj(idx)));
  }
  return {y, ra, FinMap(y.carrier(), ra.carrier(), std::move(t))};
}

EquivariantMap induce_unit(const InternalFunctor& f, const GAction& y) {
  GAction ind = induce(f, y);
  return induce_untranspose(f, y, ind, identity_equivariant(ind));
}

EquivariantMap induce_counit(const InternalFunctor& f, const GAction& a) {
  GAction ra = restrict_action(f, a);
  return induce_transpose(f, ra, a, identity_equivariant(ra));
}

bool is_fully_faithful(const InternalFunctor& f) {
  const Groupoid& h = *f.dom;
  const Groupoid& g = *f.cod;
  const int o_h = h.objects().size;
  // Count triples (x, y, g) with src g = F0 x, tgt g = F0 y and check the
  // canonical map is a bijection onto them.
  std::vector<int> hits;
  hits.assign(static_cast<size_t>(o_h) * o_h * g.arrows().size, 0);
  auto tidx = [&](int x, int y, int gi) {
    return (x * o_h + y) * g.arrows().size + gi;
  };
  int target_size = 0;
  for (int x = 0; x < o_h; ++x) {
    for (int y = 0; y < o_h; ++y) {
      for (int gi = 0; gi < g.arrows().size; ++gi) {
        if (g.src(gi) == f.obj_map(x) && g.tgt(gi) == f.obj_map(y)) {
          ++target_size;
        }
      }
    }
  }
  if (h.arrows().size != target_size) return false;
  for (int a = 0; a < h.arrows().size; ++a) {
    int& slot = hits[tidx(h.src(a), h.tgt(a), f.arr_map(a))];
    if (slot) return false;
    slot = 1;
  }
  return true;
}

bool is_essentially_surjective(const InternalFunctor& f) {
  const Groupoid& g = *f.cod;
  std::vector<char> hit(g.objects().size, 0);
  for (int x = 0; x < f.dom->objects().size; ++x) {
    for (int gi = 0; gi < g.arrows().size; ++gi) {
      if (g.tgt(gi) == f.obj_map(x)) hit[g.src(gi)] = 1;
    }
  }
  for (char c : hit) {
    if (!c) return false;
  }
  return true;
}

bool is_essential_equivalence(const InternalFunctor& f) {
  return is_fully_faithful(f) && is_essentially_surjective(f);
}

}  // namespace gpd
