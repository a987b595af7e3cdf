#include "gpd/action.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gpd {

GAction::GAction(GroupoidPtr groupoid, FinSet carrier, FinMap anchor,
                 std::vector<int> act_table)
    : groupoid_(std::move(groupoid)),
      carrier_(carrier),
      anchor_(std::move(anchor)),
      act_(std::move(act_table)) {
  if (!groupoid_) throw std::invalid_argument("GAction: null groupoid");
  if (anchor_.dom() != carrier_ || anchor_.cod() != groupoid_->objects()) {
    throw std::invalid_argument("GAction: anchor has the wrong shape");
  }
  if (static_cast<int>(act_.size()) !=
      groupoid_->arrows().size * carrier_.size) {
    throw std::invalid_argument("GAction: act table has wrong dimensions");
  }
  for (int v : act_) {
    if (v < -1 || v >= carrier_.size) {
      throw std::invalid_argument("GAction: act entry out of range");
    }
  }
}

int GAction::act(int g, int x) const {
  const int v = act_[g * carrier_.size + x];
  if (v < 0) {
    throw std::logic_error("GAction::act: pair (" + std::to_string(g) + ", " +
                           std::to_string(x) + ") is outside the action domain");
  }
  return v;
}

bool GAction::operator==(const GAction& o) const {
  return *groupoid_ == *o.groupoid_ && carrier_ == o.carrier_ &&
         anchor_ == o.anchor_ && act_ == o.act_;
}

bool same_groupoid(const GAction& a, const GAction& b) {
  return a.groupoid() == b.groupoid();
}

ValidationReport validate_action(const GAction& a) {
  ValidationReport rep;
  const Groupoid& g = a.groupoid();
  const int n1 = g.arrows().size;
  const int nx = a.carrier().size;
  for (int gi = 0; gi < n1; ++gi) {
    for (int x = 0; x < nx; ++x) {
      const int v = a.act_entry(gi, x);
      const bool legal = a.act_defined(gi, x);
      if (legal && v < 0) {
        rep.add("act-domain: missing entry at (" + std::to_string(gi) + ", " +
                std::to_string(x) + ")");
      }
      if (!legal && v >= 0) {
        rep.add("act-domain: entry on illegal pair (" + std::to_string(gi) +
                ", " + std::to_string(x) + ")");
      }
      if (legal && v >= 0 && a.anchor(v) != g.tgt(gi)) {
        rep.add("act-anchor: anchor of act(" + std::to_string(gi) + ", " +
                std::to_string(x) + ") is not tgt of the arrow");
      }
    }
  }
  if (!rep.ok()) return rep;
  for (int x = 0; x < nx; ++x) {
    if (a.act(g.unit(a.anchor(x)), x) != x) {
      rep.add("act-unit: fails at element " + std::to_string(x));
    }
  }
  for (int g1 = 0; g1 < n1; ++g1) {
    for (int g2 = 0; g2 < n1; ++g2) {
      if (!g.composable(g1, g2)) continue;
      for (int x = 0; x < nx; ++x) {
        if (!a.act_defined(g2, x)) continue;
        if (a.act(g1, a.act(g2, x)) != a.act(g.mul(g1, g2), x)) {
          rep.add("act-assoc: fails at (" + std::to_string(g1) + ", " +
                  std::to_string(g2) + ", " + std::to_string(x) + ")");
        }
      }
    }
  }
  return rep;
}

ValidationReport validate_equivariant(const EquivariantMap& h) {
  ValidationReport rep;
  if (!same_groupoid(h.dom, h.cod)) {
    rep.add("eq-groupoid: domain and codomain live over different groupoids");
    return rep;
  }
  if (h.map.dom() != h.dom.carrier() || h.map.cod() != h.cod.carrier()) {
    rep.add("eq-shape: map does not match the carriers");
    return rep;
  }
  for (int x = 0; x < h.dom.carrier().size; ++x) {
    if (h.cod.anchor(h.map(x)) != h.dom.anchor(x)) {
      rep.add("eq-anchor: not anchor-preserving at " + std::to_string(x));
    }
  }
  if (!rep.ok()) return rep;
  const Groupoid& g = h.dom.groupoid();
  for (int gi = 0; gi < g.arrows().size; ++gi) {
    for (int x = 0; x < h.dom.carrier().size; ++x) {
      if (!h.dom.act_defined(gi, x)) continue;
      if (h.map(h.dom.act(gi, x)) != h.cod.act(gi, h.map(x))) {
        rep.add("eq-action: fails at (" + std::to_string(gi) + ", " +
                std::to_string(x) + ")");
      }
    }
  }
  return rep;
}

EquivariantMap identity_equivariant(const GAction& a) {
  return {a, a, FinMap::identity(a.carrier())};
}

EquivariantMap compose(const EquivariantMap& f, const EquivariantMap& g) {
  if (!(f.dom == g.cod)) {
    throw std::invalid_argument("compose(EquivariantMap): shapes mismatch");
  }
  return {g.dom, f.cod, compose(f.map, g.map)};
}

GAction trivial_action(GroupoidPtr g, FinSet x) {
  const int n0 = g->objects().size;
  FinSet carrier{x.size * n0};
  std::vector<int> anchor(carrier.size);
  for (int xi = 0; xi < x.size; ++xi)
    for (int u = 0; u < n0; ++u) anchor[xi * n0 + u] = u;
  std::vector<int> act(static_cast<size_t>(g->arrows().size) * carrier.size,
                       -1);
  for (int gi = 0; gi < g->arrows().size; ++gi) {
    for (int xi = 0; xi < x.size; ++xi) {
      act[gi * carrier.size + (xi * n0 + g->src(gi))] = xi * n0 + g->tgt(gi);
    }
  }
  return GAction(std::move(g), carrier,
                 FinMap(carrier, FinSet{n0}, std::move(anchor)),
                 std::move(act));
}

GAction trivial_action(const Groupoid& g, FinSet x) {
  return trivial_action(share(g), x);
}

GAction terminal_action(GroupoidPtr g) {
  return trivial_action(std::move(g), FinSet{1});
}

EquivariantMap trivial_action_map(GroupoidPtr g, const FinMap& f) {
  GAction dom = trivial_action(g, f.dom());
  GAction cod = trivial_action(g, f.cod());
  const int n0 = g->objects().size;
  std::vector<int> t(dom.carrier().size);
  for (int y = 0; y < f.dom().size; ++y)
    for (int u = 0; u < n0; ++u) t[y * n0 + u] = f(y) * n0 + u;
  return {dom, cod, FinMap(dom.carrier(), cod.carrier(), std::move(t))};
}

GAction free_action(GroupoidPtr g, const FinMap& f) {
  if (f.cod() != g->objects()) {
    throw std::invalid_argument(
        "free_action: anchor does not land in the objects");
  }
  Pullback pb = pullback(g->src_map(), f);  // {(g0, x) | src g0 = f x}
  std::vector<int> anchor(pb.apex.size);
  for (int i = 0; i < pb.apex.size; ++i) anchor[i] = g->tgt(pb.proj1(i));
  std::vector<int> act(static_cast<size_t>(g->arrows().size) * pb.apex.size,
                       -1);
  for (int g1 = 0; g1 < g->arrows().size; ++g1) {
    for (int i = 0; i < pb.apex.size; ++i) {
      const int g2 = pb.proj1(i);
      if (g->src(g1) != g->tgt(g2)) continue;
      act[g1 * pb.apex.size + i] = pb.pair_index(g->mul(g1, g2), pb.proj2(i));
    }
  }
  return GAction(std::move(g), pb.apex,
                 FinMap(pb.apex, f.cod(), std::move(anchor)), std::move(act));
}

Quotient orbits(const GAction& a) {
  const Groupoid& g = a.groupoid();
  Pullback dom = pullback(g.src_map(), a.anchor_map());
  std::vector<int> action(dom.apex.size), proj(dom.apex.size);
  for (int i = 0; i < dom.apex.size; ++i) {
    action[i] = a.act(dom.proj1(i), dom.proj2(i));
    proj[i] = dom.proj2(i);
  }
  return coequalizer(FinMap(dom.apex, a.carrier(), std::move(action)),
                     FinMap(dom.apex, a.carrier(), std::move(proj)));
}

Groupoid action_groupoid(const GAction& a) {
  const Groupoid& g = a.groupoid();
  Pullback pb = pullback(g.src_map(), a.anchor_map());
  const FinSet objects = a.carrier();
  const FinSet arrows = pb.apex;
  std::vector<int> src(arrows.size), tgt(arrows.size), unit(objects.size),
      inv(arrows.size);
  for (int i = 0; i < arrows.size; ++i) {
    const int gi = pb.proj1(i), x = pb.proj2(i);
    src[i] = x;
    tgt[i] = a.act(gi, x);
    inv[i] = pb.pair_index(g.inv(gi), a.act(gi, x));
  }
  for (int x = 0; x < objects.size; ++x) {
    unit[x] = pb.pair_index(g.unit(a.anchor(x)), x);
  }
  std::vector<int> mul(static_cast<size_t>(arrows.size) * arrows.size, -1);
  for (int i = 0; i < arrows.size; ++i) {
    for (int j = 0; j < arrows.size; ++j) {
      // (g1, x1) after (g2, x2): requires x1 = act(g2, x2).
      if (src[i] != tgt[j]) continue;
      mul[i * arrows.size + j] =
          pb.pair_index(g.mul(pb.proj1(i), pb.proj1(j)), pb.proj2(j));
    }
  }
  return Groupoid(objects, arrows, FinMap(arrows, objects, std::move(src)),
                  FinMap(arrows, objects, std::move(tgt)),
                  FinMap(objects, arrows, std::move(unit)),
                  FinMap(arrows, arrows, std::move(inv)), std::move(mul));
}

GAction product_action(const GAction& a, const GAction& b) {
  if (!same_groupoid(a, b)) {
    throw std::invalid_argument("product_action: different groupoids");
  }
  const Groupoid& g = a.groupoid();
  Pullback pb = pullback(a.anchor_map(), b.anchor_map());
  std::vector<int> anchor(pb.apex.size);
  for (int i = 0; i < pb.apex.size; ++i) anchor[i] = a.anchor(pb.proj1(i));
  std::vector<int> act(static_cast<size_t>(g.arrows().size) * pb.apex.size,
                       -1);
  for (int gi = 0; gi < g.arrows().size; ++gi) {
    for (int i = 0; i < pb.apex.size; ++i) {
      if (g.src(gi) != anchor[i]) continue;
      act[gi * pb.apex.size + i] = pb.pair_index(a.act(gi, pb.proj1(i)),
                                                 b.act(gi, pb.proj2(i)));
    }
  }
  return GAction(a.groupoid_ptr(), pb.apex,
                 FinMap(pb.apex, g.objects(), std::move(anchor)),
                 std::move(act));
}

GAction pullback_action(const EquivariantMap& h, const EquivariantMap& k) {
  if (!same_groupoid(h.cod, k.cod)) {
    throw std::invalid_argument("pullback_action: different groupoids");
  }
  if (!(h.cod == k.cod)) {
    throw std::invalid_argument("pullback_action: codomains differ");
  }
  const Groupoid& g = h.dom.groupoid();
  Pullback pb = pullback(h.map, k.map);
  std::vector<int> anchor(pb.apex.size);
  for (int i = 0; i < pb.apex.size; ++i) anchor[i] = h.dom.anchor(pb.proj1(i));
  std::vector<int> act(static_cast<size_t>(g.arrows().size) * pb.apex.size,
                       -1);
  for (int gi = 0; gi < g.arrows().size; ++gi) {
    for (int i = 0; i < pb.apex.size; ++i) {
      if (g.src(gi) != anchor[i]) continue;
      act[gi * pb.apex.size + i] = pb.pair_index(
          h.dom.act(gi, pb.proj1(i)), k.dom.act(gi, pb.proj2(i)));
    }
  }
  return GAction(h.dom.groupoid_ptr(), pb.apex,
                 FinMap(pb.apex, g.objects(), std::move(anchor)),
                 std::move(act));
}

namespace {

// Assigning map(x) = y forces the image of the whole orbit of x; propagate
// and report a conflict if the forced images disagree.
bool propagate_assignment(const GAction& a, const GAction& b,
                          std::vector<int>& img, int x0, int y0) {
  const Groupoid& g = a.groupoid();
  if (b.anchor(y0) != a.anchor(x0)) return false;
  std::vector<std::pair<int, int>> stack{{x0, y0}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (img[x] >= 0) {
      if (img[x] != y) return false;
      continue;
    }
    img[x] = y;
    for (int gi = 0; gi < g.arrows().size; ++gi) {
      if (!a.act_defined(gi, x)) continue;
      stack.push_back({a.act(gi, x), b.act(gi, y)});
    }
  }
  return true;
}

void search_maps(const GAction& a, const GAction& b, std::vector<int>& img,
                 std::vector<EquivariantMap>& out) {
  int x = -1;
  for (int i = 0; i < a.carrier().size; ++i) {
    if (img[i] < 0) {
      x = i;
      break;
    }
  }
  if (x < 0) {
    out.push_back(
        {a, b, FinMap(a.carrier(), b.carrier(), img)});
    return;
  }
  for (int y = 0; y < b.carrier().size; ++y) {
    if (b.anchor(y) != a.anchor(x)) continue;
    std::vector<int> saved = img;
    if (propagate_assignment(a, b, img, x, y)) {
      search_maps(a, b, img, out);
    }
    img = std::move(saved);
  }
}

}  // namespace

std::vector<EquivariantMap> enumerate_equivariant_maps(const GAction& a,
                                                       const GAction& b) {
  if (!same_groupoid(a, b)) {
    throw std::invalid_argument(
        "enumerate_equivariant_maps: different groupoids");
  }
  std::vector<EquivariantMap> out;
  std::vector<int> img(a.carrier().size, -1);
  search_maps(a, b, img, out);
  return out;
}

namespace {

// Checks that `values` is constant on the classes of q and returns the
// induced map on classes; nullopt if not constant.
std::optional<FinMap> factor_through(const Quotient& q,
                                     const std::vector<int>& values,
                                     FinSet cod) {
  std::vector<int> cls(q.classes.size, -1);
  for (int x = 0; x < q.source.size; ++x) {
    int c = q.proj(x);
    if (cls[c] < 0) cls[c] = values[x];
    else if (cls[c] != values[x]) return std::nullopt;
  }
  return FinMap(q.classes, cod, std::move(cls));
}

}  // namespace

FrobeniusWitness frobenius_check(const GAction& w, FinSet x) {
  GAction gx = trivial_action(w.groupoid_ptr(), x);
  GAction prod = product_action(w, gx);
  Quotient lhs = orbits(prod);
  Quotient wq = orbits(w);

  // Per element of the product carrier: (class of w-part, X-part).
  Pullback pb = pullback(w.anchor_map(), gx.anchor_map());
  const int n0 = w.groupoid().objects().size;
  std::vector<int> values(pb.apex.size);
  for (int i = 0; i < pb.apex.size; ++i) {
    const int wi = pb.proj1(i);
    const int xi = n0 == 0 ? 0 : pb.proj2(i) / n0;  // X-coordinate of (x, u)
    values[i] = wq.proj(wi) * x.size + xi;
  }
  FrobeniusWitness out;
  auto canonical =
      factor_through(lhs, values, FinSet{wq.classes.size * x.size});
  if (!canonical) {
    // The comparison does not even factor; report as non-bijective with an
    // empty map (cannot occur for valid inputs).
    out.bijective = false;
    out.canonical = FinMap(lhs.classes, FinSet{wq.classes.size * x.size},
                           std::vector<int>(lhs.classes.size, 0));
    return out;
  }
  out.canonical = *canonical;
  out.bijective = is_bijective(out.canonical);
  return out;
}

FrobeniusWitness stable_frobenius_check(const GAction& w,
                                        const EquivariantMap& g,
                                        const FinMap& f) {
  if (!(g.dom == w)) {
    throw std::invalid_argument("stable_frobenius_check: g is not a map out of W");
  }
  const int n0 = w.groupoid().objects().size;
  // g must land in a trivial action G*X with X = f.cod.
  const FinSet x = f.cod();
  GAction gx = trivial_action(w.groupoid_ptr(), x);
  if (!(g.cod == gx)) {
    throw std::invalid_argument(
        "stable_frobenius_check: g does not land in the trivial action on "
        "the codomain of f");
  }
  EquivariantMap gf = trivial_action_map(w.groupoid_ptr(), f);
  GAction lhs_action = pullback_action(g, gf);
  Quotient lhs = orbits(lhs_action);

  // Right side: pullback of f along the adjoint transpose of g.
  Quotient wq = orbits(w);
  std::vector<int> transpose_tbl(wq.classes.size, 0);
  {
    std::vector<int> values(w.carrier().size);
    for (int i = 0; i < w.carrier().size; ++i) {
      values[i] = n0 == 0 ? 0 : g.map(i) / n0;  // X-part of g(w)
    }
    auto t = factor_through(wq, values, x);
    if (!t) throw std::invalid_argument("stable_frobenius_check: g is not equivariant");
    transpose_tbl = t->table();
  }
  FinMap transpose(wq.classes, x, transpose_tbl);
  Pullback rhs = pullback(transpose, f);

  // Canonical comparison: class of (w, (y, u)) -> (class of w, y).
  Pullback pb = pullback(g.map, gf.map);
  std::vector<int> values(pb.apex.size);
  for (int i = 0; i < pb.apex.size; ++i) {
    const int wi = pb.proj1(i);
    const int yi = n0 == 0 ? 0 : pb.proj2(i) / n0;
    values[i] = rhs.pair_index(wq.proj(wi), yi);
  }
  FrobeniusWitness out;
  auto canonical = factor_through(lhs, values, rhs.apex);
  if (!canonical) {
    out.bijective = false;
    out.canonical =
        FinMap(lhs.classes, rhs.apex, std::vector<int>(lhs.classes.size, 0));
    return out;
  }
  out.canonical = *canonical;
  out.bijective = is_bijective(out.canonical);
  return out;
}

GAction BiAction::left_action() const {
  return GAction(left, carrier, p_anchor, h_act);
}

GAction BiAction::right_action() const {
  return GAction(right, carrier, q_anchor, g_act);
}

int BiAction::hact(int h, int x) const {
  const int v = h_act[h * carrier.size + x];
  if (v < 0) throw std::logic_error("BiAction::hact: illegal pair");
  return v;
}

int BiAction::gact(int g, int x) const {
  const int v = g_act[g * carrier.size + x];
  if (v < 0) throw std::logic_error("BiAction::gact: illegal pair");
  return v;
}

bool BiAction::operator==(const BiAction& o) const {
  return *left == *o.left && *right == *o.right && carrier == o.carrier &&
         p_anchor == o.p_anchor && q_anchor == o.q_anchor &&
         h_act == o.h_act && g_act == o.g_act;
}

GAction BiAction::as_product_action() const {
  Groupoid prod = product_groupoid(*left, *right);
  const int a_g = right->arrows().size;
  const int o_g = right->objects().size;
  std::vector<int> anchor(carrier.size);
  for (int xi = 0; xi < carrier.size; ++xi) {
    anchor[xi] = p_anchor(xi) * o_g + q_anchor(xi);
  }
  std::vector<int> act(
      static_cast<size_t>(prod.arrows().size) * carrier.size, -1);
  for (int h = 0; h < left->arrows().size; ++h) {
    for (int gi = 0; gi < a_g; ++gi) {
      for (int xi = 0; xi < carrier.size; ++xi) {
        if (left->src(h) != p_anchor(xi) || right->src(gi) != q_anchor(xi))
          continue;
        act[(h * a_g + gi) * carrier.size + xi] = hact(h, gact(gi, xi));
      }
    }
  }
  return GAction(share(std::move(prod)), carrier,
                 FinMap(carrier, FinSet{left->objects().size * o_g},
                        std::move(anchor)),
                 std::move(act));
}

BiAction biaction_from_product_action(GroupoidPtr left, GroupoidPtr right,
                                      const GAction& prod) {
  const int o_g = right->objects().size;
  const int a_g = right->arrows().size;
  BiAction b;
  b.left = left;
  b.right = right;
  b.carrier = prod.carrier();
  std::vector<int> p(b.carrier.size), q(b.carrier.size);
  for (int xi = 0; xi < b.carrier.size; ++xi) {
    p[xi] = prod.anchor(xi) / o_g;
    q[xi] = prod.anchor(xi) % o_g;
  }
  b.p_anchor = FinMap(b.carrier, left->objects(), std::move(p));
  b.q_anchor = FinMap(b.carrier, right->objects(), std::move(q));
  b.h_act.assign(static_cast<size_t>(left->arrows().size) * b.carrier.size,
                 -1);
  b.g_act.assign(static_cast<size_t>(a_g) * b.carrier.size, -1);
  for (int h = 0; h < left->arrows().size; ++h) {
    for (int xi = 0; xi < b.carrier.size; ++xi) {
      if (left->src(h) != b.p_anchor(xi)) continue;
      const int unit_g = right->unit(b.q_anchor(xi));
      b.h_act[h * b.carrier.size + xi] =
          prod.act(h * a_g + unit_g, xi);
    }
  }
  for (int gi = 0; gi < a_g; ++gi) {
    for (int xi = 0; xi < b.carrier.size; ++xi) {
      if (right->src(gi) != b.q_anchor(xi)) continue;
      const int unit_h = left->unit(b.p_anchor(xi));
      b.g_act[gi * b.carrier.size + xi] =
          prod.act(unit_h * a_g + gi, xi);
    }
  }
  return b;
}

ValidationReport validate_biaction(const BiAction& b) {
  ValidationReport rep;
  ValidationReport l = validate_action(b.left_action());
  for (auto& v : l.violations) rep.add("left-action: " + v);
  ValidationReport r = validate_action(b.right_action());
  for (auto& v : r.violations) rep.add("right-action: " + v);
  if (!rep.ok()) return rep;
  const Groupoid& h = *b.left;
  const Groupoid& g = *b.right;
  for (int gi = 0; gi < g.arrows().size; ++gi) {
    for (int x = 0; x < b.carrier.size; ++x) {
      if (g.src(gi) != b.q_anchor(x)) continue;
      if (b.p_anchor(b.gact(gi, x)) != b.p_anchor(x)) {
        rep.add("p-invariance: fails at (" + std::to_string(gi) + ", " +
                std::to_string(x) + ")");
      }
    }
  }
  for (int hi = 0; hi < h.arrows().size; ++hi) {
    for (int x = 0; x < b.carrier.size; ++x) {
      if (h.src(hi) != b.p_anchor(x)) continue;
      if (b.q_anchor(b.hact(hi, x)) != b.q_anchor(x)) {
        rep.add("q-invariance: fails at (" + std::to_string(hi) + ", " +
                std::to_string(x) + ")");
      }
    }
  }
  if (!rep.ok()) return rep;
  for (int hi = 0; hi < h.arrows().size; ++hi) {
    for (int gi = 0; gi < g.arrows().size; ++gi) {
      for (int x = 0; x < b.carrier.size; ++x) {
        if (h.src(hi) != b.p_anchor(x) || g.src(gi) != b.q_anchor(x)) continue;
        if (b.hact(hi, b.gact(gi, x)) != b.gact(gi, b.hact(hi, x))) {
          rep.add("commute: fails at (" + std::to_string(hi) + ", " +
                  std::to_string(gi) + ", " + std::to_string(x) + ")");
        }
      }
    }
  }
  return rep;
}

}  // namespace gpd
