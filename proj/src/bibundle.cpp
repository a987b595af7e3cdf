#include "gpd/bibundle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gpd {

Bibundle::Bibundle(BiAction data) : data_(std::move(data)) {
  report_ = validate_biaction(data_);
  const Groupoid& g = *data_.right;
  const int n = data_.carrier.size;

  if (!is_surjective(data_.p_anchor)) {
    report_.add("descent: p is not surjective");
  }

  // Principality: (g, x) -> (g·x, x) must biject G1 ×_{G0} P onto
  // P ×_{H0} P. Recorded as the division table while checking.
  const bool right_ok =
      !report_.mentions("right-action:") && !report_.mentions("left-action:");
  if (right_ok) {
    division_.assign(static_cast<size_t>(n) * n, -1);
    bool injective = true;
    for (int gi = 0; gi < g.arrows().size && injective; ++gi) {
      for (int x = 0; x < n; ++x) {
        if (g.src(gi) != data_.q_anchor(x)) continue;
        const int y = data_.gact(gi, x);
        int& slot = division_[y * n + x];
        if (slot >= 0) {
          report_.add("principality: arrows " + std::to_string(slot) +
                      " and " + std::to_string(gi) +
                      " both carry element " + std::to_string(x) + " to " +
                      std::to_string(y));
          injective = false;
          break;
        }
        slot = gi;
      }
    }
    if (injective) {
      for (int x1 = 0; x1 < n; ++x1) {
        for (int x2 = 0; x2 < n; ++x2) {
          if (data_.p_anchor(x1) != data_.p_anchor(x2)) continue;
          if (division_[x1 * n + x2] < 0) {
            report_.add("principality: no arrow carries element " +
                        std::to_string(x2) + " to " + std::to_string(x1));
          }
        }
      }
    }
  }
  if (!report_.ok()) division_.clear();
}

int Bibundle::division(int x1, int x2) const {
  if (division_.empty()) {
    throw std::logic_error("Bibundle::division: bundle is not principal");
  }
  const int v = division_[x1 * data_.carrier.size + x2];
  if (v < 0) {
    throw std::logic_error("Bibundle::division: elements " +
                           std::to_string(x1) + ", " + std::to_string(x2) +
                           " are not in a common p-fiber");
  }
  return v;
}

ValidationReport validate_bibundle(const Bibundle& p) { return p.report(); }

ValidationReport validate_bibundle_morphism(const BibundleMorphism& m) {
  ValidationReport rep;
  if (!(*m.dom.left_ptr() == *m.cod.left_ptr()) ||
      !(*m.dom.right_ptr() == *m.cod.right_ptr())) {
    rep.add("bm-shape: bundles do not share their groupoids");
    return rep;
  }
  const BiAction& a = m.dom.data();
  const BiAction& b = m.cod.data();
  if (m.map.dom() != a.carrier || m.map.cod() != b.carrier) {
    rep.add("bm-shape: map does not match the carriers");
    return rep;
  }
  for (int x = 0; x < a.carrier.size; ++x) {
    if (b.p_anchor(m.map(x)) != a.p_anchor(x) ||
        b.q_anchor(m.map(x)) != a.q_anchor(x)) {
      rep.add("bm-anchors: not over both anchors at " + std::to_string(x));
    }
  }
  if (!rep.ok()) return rep;
  for (int hi = 0; hi < a.left->arrows().size; ++hi) {
    for (int x = 0; x < a.carrier.size; ++x) {
      if (a.left->src(hi) != a.p_anchor(x)) continue;
      if (m.map(a.hact(hi, x)) != b.hact(hi, m.map(x))) {
        rep.add("bm-left: fails at (" + std::to_string(hi) + ", " +
                std::to_string(x) + ")");
      }
    }
  }
  for (int gi = 0; gi < a.right->arrows().size; ++gi) {
    for (int x = 0; x < a.carrier.size; ++x) {
      if (a.right->src(gi) != a.q_anchor(x)) continue;
      if (m.map(a.gact(gi, x)) != b.gact(gi, m.map(x))) {
        rep.add("bm-right: fails at (" + std::to_string(gi) + ", " +
                std::to_string(x) + ")");
      }
    }
  }
  if (!is_bijective(m.map)) {
    rep.add("bm-bijective: the underlying map is not a bijection");
  }
  return rep;
}

Bibundle identity_bibundle(GroupoidPtr g) {
  BiAction b;
  b.left = g;
  b.right = g;
  b.carrier = g->arrows();
  b.p_anchor = g->tgt_map();
  b.q_anchor = g->src_map();
  const int n = b.carrier.size;
  b.h_act.assign(static_cast<size_t>(n) * n, -1);
  b.g_act.assign(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int x = 0; x < n; ++x) {
      if (g->src(a) == g->tgt(x)) b.h_act[a * n + x] = g->mul(a, x);
      if (g->src(a) == g->src(x)) b.g_act[a * n + x] = g->mul(x, g->inv(a));
    }
  }
  return Bibundle(std::move(b));
}

Bibundle opposite_bibundle(const Bibundle& p) {
  BiAction b = p.data();
  std::swap(b.left, b.right);
  std::swap(b.p_anchor, b.q_anchor);
  std::swap(b.h_act, b.g_act);
  return Bibundle(std::move(b));
}

Bibundle from_functor(const InternalFunctor& f) {
  ValidationReport fr = validate_functor(f);
  if (!fr.ok()) {
    throw std::invalid_argument("from_functor: invalid functor: " +
                                fr.violations.front());
  }
  const Groupoid& h = *f.dom;
  const Groupoid& g = *f.cod;
  Pullback pb = pullback(f.obj_map, g.tgt_map());  // {(x, g) | F0 x = tgt g}
  BiAction b;
  b.left = f.dom;
  b.right = f.cod;
  b.carrier = pb.apex;
  std::vector<int> pa(pb.apex.size), qa(pb.apex.size);
  for (int i = 0; i < pb.apex.size; ++i) {
    pa[i] = pb.proj1(i);
    qa[i] = g.src(pb.proj2(i));
  }
  b.p_anchor = FinMap(pb.apex, h.objects(), std::move(pa));
  b.q_anchor = FinMap(pb.apex, g.objects(), std::move(qa));
  b.h_act.assign(static_cast<size_t>(h.arrows().size) * pb.apex.size, -1);
  b.g_act.assign(static_cast<size_t>(g.arrows().size) * pb.apex.size, -1);
  for (int hi = 0; hi < h.arrows().size; ++hi) {
    for (int i = 0; i < pb.apex.size; ++i) {
      if (h.src(hi) != pb.proj1(i)) continue;
      b.h_act[hi * pb.apex.size + i] = pb.pair_index(
          h.tgt(hi), g.mul(f.arr_map(hi), pb.proj2(i)));
    }
  }
  for (int gi = 0; gi < g.arrows().size; ++gi) {
    for (int i = 0; i < pb.apex.size; ++i) {
      if (g.src(gi) != g.src(pb.proj2(i))) continue;
      b.g_act[gi * pb.apex.size + i] = pb.pair_index(
          pb.proj1(i), g.mul(pb.proj2(i), g.inv(gi)));
    }
  }
  return Bibundle(std::move(b));
}

Bibundle point_bundle(GroupoidPtr g, const FinMap& x) {
  return from_functor(point_functor(std::move(g), x));
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

Bibundle compose(const Bibundle& p, const Bibundle& q) {
  if (!(p.right() == q.left())) {
    throw std::invalid_argument(
        "compose(Bibundle): middle groupoids do not match");
  }
  const Groupoid& g = p.right();
  const BiAction& a = p.data();
  const BiAction& c = q.data();
  Pullback pb = pullback(a.q_anchor, c.p_anchor);

  // Diagonal middle action, as a G-set, to quotient by.
  std::vector<int> anchor(pb.apex.size);
  for (int i = 0; i < pb.apex.size; ++i) anchor[i] = a.q_anchor(pb.proj1(i));
  std::vector<int> act(static_cast<size_t>(g.arrows().size) * pb.apex.size,
                       -1);
  for (int gi = 0; gi < g.arrows().size; ++gi) {
    for (int i = 0; i < pb.apex.size; ++i) {
      if (g.src(gi) != anchor[i]) continue;
      act[gi * pb.apex.size + i] = pb.pair_index(a.gact(gi, pb.proj1(i)),
                                                 c.hact(gi, pb.proj2(i)));
    }
  }
  Quotient mid = orbits(GAction(p.right_ptr(), pb.apex,
                                FinMap(pb.apex, g.objects(), anchor), act));
  std::vector<int> rep = class_representatives(mid);

  BiAction out;
  out.left = p.left_ptr();
  out.right = q.right_ptr();
  out.carrier = mid.classes;
  std::vector<int> pa(out.carrier.size), qa(out.carrier.size);
  for (int cidx = 0; cidx < out.carrier.size; ++cidx) {
    pa[cidx] = a.p_anchor(pb.proj1(rep[cidx]));
    qa[cidx] = c.q_anchor(pb.proj2(rep[cidx]));
  }
  out.p_anchor = FinMap(out.carrier, p.left().objects(), std::move(pa));
  out.q_anchor = FinMap(out.carrier, q.right().objects(), std::move(qa));
  const Groupoid& h = p.left();
  const Groupoid& k = q.right();
  out.h_act.assign(static_cast<size_t>(h.arrows().size) * out.carrier.size,
                   -1);
  out.g_act.assign(static_cast<size_t>(k.arrows().size) * out.carrier.size,
                   -1);
  for (int hi = 0; hi < h.arrows().size; ++hi) {
    for (int cidx = 0; cidx < out.carrier.size; ++cidx) {
      if (h.src(hi) != out.p_anchor(cidx)) continue;
      const int x = pb.proj1(rep[cidx]);
      const int y = pb.proj2(rep[cidx]);
      out.h_act[hi * out.carrier.size + cidx] =
          mid.proj(pb.pair_index(a.hact(hi, x), y));
    }
  }
  for (int ki = 0; ki < k.arrows().size; ++ki) {
    for (int cidx = 0; cidx < out.carrier.size; ++cidx) {
      if (k.src(ki) != out.q_anchor(cidx)) continue;
      const int x = pb.proj1(rep[cidx]);
      const int y = pb.proj2(rep[cidx]);
      out.g_act[ki * out.carrier.size + cidx] =
          mid.proj(pb.pair_index(x, c.gact(ki, y)));
    }
  }
  return Bibundle(std::move(out));
}

GAction tensor_apply(const Bibundle& p, const GAction& y) {
  if (!(y.groupoid() == p.left())) {
    throw std::invalid_argument(
        "tensor_apply: action does not live over the left groupoid");
  }
  const BiAction& a = p.data();
  const Groupoid& h = p.left();
  const Groupoid& g = p.right();
  Pullback pb = pullback(a.p_anchor, y.anchor_map());
  std::vector<int> anchor(pb.apex.size);
  for (int i = 0; i < pb.apex.size; ++i) anchor[i] = a.p_anchor(pb.proj1(i));
  std::vector<int> act(static_cast<size_t>(h.arrows().size) * pb.apex.size,
                       -1);
  for (int hi = 0; hi < h.arrows().size; ++hi) {
    for (int i = 0; i < pb.apex.size; ++i) {
      if (h.src(hi) != anchor[i]) continue;
      act[hi * pb.apex.size + i] = pb.pair_index(a.hact(hi, pb.proj1(i)),
                                                 y.act(hi, pb.proj2(i)));
    }
  }
  Quotient quo = orbits(GAction(p.left_ptr(), pb.apex,
                                FinMap(pb.apex, h.objects(), anchor), act));
  std::vector<int> rep = class_representatives(quo);
  std::vector<int> out_anchor(quo.classes.size);
  for (int c = 0; c < quo.classes.size; ++c) {
    out_anchor[c] = a.q_anchor(pb.proj1(rep[c]));
  }
  std::vector<int> out_act(
      static_cast<size_t>(g.arrows().size) * quo.classes.size, -1);
  for (int gi = 0; gi < g.arrows().size; ++gi) {
    for (int c = 0; c < quo.classes.size; ++c) {
      if (g.src(gi) != out_anchor[c]) continue;
      const int x = pb.proj1(rep[c]);
      out_act[gi * quo.classes.size + c] =
          quo.proj(pb.pair_index(a.gact(gi, x), pb.proj2(rep[c])));
    }
  }
  return GAction(p.right_ptr(), quo.classes,
                 FinMap(quo.classes, g.objects(), std::move(out_anchor)),
                 std::move(out_act));
}

GAction coapply(const Bibundle& p, const GAction& x) {
  return tensor_apply(opposite_bibundle(p), x);
}

namespace {

// Shared scaffolding for the two tensor transposes: the quotient that
// defines tensor_apply(p, y) and the one that defines coapply(p, x).
struct TensorScaffold {
  Pullback pb;      // P x_{H0} Y
  Quotient quo;     // H-orbits
  Pullback co_pb;   // P x_{G0} X
  Quotient co_quo;  // G-orbits
};

TensorScaffold tensor_scaffold(const Bibundle& p, const GAction& y,
                               const GAction& x) {
  TensorScaffold s;
  const BiAction& a = p.data();
  {
    const Groupoid& h = p.left();
    s.pb = pullback(a.p_anchor, y.anchor_map());
    std::vector<int> anchor(s.pb.apex.size);
    for (int i = 0; i < s.pb.apex.size; ++i)
      anchor[i] = a.p_anchor(s.pb.proj1(i));
    std::vector<int> act(
        static_cast<size_t>(h.arrows().size) * s.pb.apex.size, -1);
    for (int hi = 0; hi < h.arrows().size; ++hi) {
      for (int i = 0; i < s.pb.apex.size; ++i) {
        if (h.src(hi) != anchor[i]) continue;
        act[hi * s.pb.apex.size + i] = s.pb.pair_index(
            a.hact(hi, s.pb.proj1(i)), y.act(hi, s.pb.proj2(i)));
      }
    }
    s.quo = orbits(GAction(p.left_ptr(), s.pb.apex,
                           FinMap(s.pb.apex, h.objects(), anchor), act));
  }
  {
    const Groupoid& g = p.right();
    s.co_pb = pullback(a.q_anchor, x.anchor_map());
    std::vector<int> anchor(s.co_pb.apex.size);
    for (int i = 0; i < s.co_pb.apex.size; ++i)
      anchor[i] = a.q_anchor(s.co_pb.proj1(i));
    std::vector<int> act(
        static_cast<size_t>(g.arrows().size) * s.co_pb.apex.size, -1);
    for (int gi = 0; gi < g.arrows().size; ++gi) {
      for (int i = 0; i < s.co_pb.apex.size; ++i) {
        if (g.src(gi) != anchor[i]) continue;
        act[gi * s.co_pb.apex.size + i] = s.co_pb.pair_index(
            a.gact(gi, s.co_pb.proj1(i)), x.act(gi, s.co_pb.proj2(i)));
      }
    }
    s.co_quo = orbits(GAction(p.right_ptr(), s.co_pb.apex,
                              FinMap(s.co_pb.apex, g.objects(), anchor), act));
  }
  return s;
}

}  // namespace

EquivariantMap tensor_transpose(const Bibundle& p, const GAction& y,
                                const GAction& x, const EquivariantMap& phi) {
  GAction lhs = tensor_apply(p, y);
  GAction rhs = coapply(p, x);
  if (!(phi.dom == y) || !(phi.cod == rhs)) {
    throw std::invalid_argument("tensor_transpose: map has the wrong shape");
  }
  TensorScaffold s = tensor_scaffold(p, y, x);
  std::vector<int> lhs_rep = class_representatives(s.quo);
  std::vector<int> co_rep = class_representatives(s.co_quo);
  std::vector<int> t(s.quo.classes.size);
  for (int c = 0; c < s.quo.classes.size; ++c) {
    const int xi = s.pb.proj1(lhs_rep[c]);
    const int yi = s.pb.proj2(lhs_rep[c]);
    const int co_class = phi.map(yi);
    const int xr = s.co_pb.proj1(co_rep[co_class]);
    const int xix = s.co_pb.proj2(co_rep[co_class]);
    // Slide the representative into the fiber of xi with the division map.
    const int g = p.division(xi, xr);
    t[c] = x.act(g, xix);
  }
  return {lhs, x, FinMap(s.quo.classes, x.carrier(), std::move(t))};
}

EquivariantMap tensor_untranspose(const Bibundle& p, const GAction& y,
                                  const GAction& x,
                                  const EquivariantMap& big) {
  GAction lhs = tensor_apply(p, y);
  GAction rhs = coapply(p, x);
  if (!(big.dom == lhs) || !(big.cod == x)) {
    throw std::invalid_argument("tensor_untranspose: map has the wrong shape");
  }
  TensorScaffold s = tensor_scaffold(p, y, x);
  std::vector<int> t(y.carrier().size);
  for (int yi = 0; yi < y.carrier().size; ++yi) {
    // Any element of the p-fiber over anchor(y) works; take the least.
    int x0 = -1;
    for (int xi = 0; xi < p.carrier().size; ++xi) {
      if (p.p(xi) == y.anchor(yi)) {
        x0 = xi;
        break;
      }
    }
    if (x0 < 0) {
      throw std::invalid_argument(
          "tensor_untranspose: p is not surjective (invalid bundle)");
    }
    const int lhs_class = s.quo.proj(s.pb.pair_index(x0, yi));
    t[yi] = s.co_quo.proj(s.co_pb.pair_index(x0, big.map(lhs_class)));
  }
  return {y, rhs, FinMap(y.carrier(), rhs.carrier(), std::move(t))};
}

namespace {

bool propagate_bimorphism(const BiAction& a, const BiAction& b,
                          std::vector<int>& img, int x0, int y0) {
  if (b.p_anchor(y0) != a.p_anchor(x0) || b.q_anchor(y0) != a.q_anchor(x0)) {
    return false;
  }
  std::vector<std::pair<int, int>> stack{{x0, y0}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (img[x] >= 0) {
      if (img[x] != y) return false;
      continue;
    }
    img[x] = y;
    for (int hi = 0; hi < a.left->arrows().size; ++hi) {
      if (a.left->src(hi) != a.p_anchor(x)) continue;
      stack.push_back({a.hact(hi, x), b.hact(hi, y)});
    }
    for (int gi = 0; gi < a.right->arrows().size; ++gi) {
      if (a.right->src(gi) != a.q_anchor(x)) continue;
      stack.push_back({a.gact(gi, x), b.gact(gi, y)});
    }
  }
  return true;
}

void search_bimorphisms(const Bibundle& p, const Bibundle& q,
                        std::vector<int>& img, bool first_only,
                        std::vector<BibundleMorphism>& out) {
  if (first_only && !out.empty()) return;
  const BiAction& a = p.data();
  const BiAction& b = q.data();
  int x = -1;
  for (int i = 0; i < a.carrier.size; ++i) {
    if (img[i] < 0) {
      x = i;
      break;
    }
  }
  if (x < 0) {
    out.push_back({p, q, FinMap(a.carrier, b.carrier, img)});
    return;
  }
  for (int y = 0; y < b.carrier.size; ++y) {
    if (b.p_anchor(y) != a.p_anchor(x) || b.q_anchor(y) != a.q_anchor(x)) {
      continue;
    }
    std::vector<int> saved = img;
    if (propagate_bimorphism(a, b, img, x, y)) {
      search_bimorphisms(p, q, img, first_only, out);
    }
    img = std::move(saved);
    if (first_only && !out.empty()) return;
  }
}

void check_same_sides(const Bibundle& p, const Bibundle& q,
                      const char* what) {
  if (!(p.left() == q.left()) || !(p.right() == q.right())) {
    throw std::invalid_argument(std::string(what) +
                                ": bundles do not share their groupoids");
  }
}

}  // namespace

std::optional<BibundleMorphism> find_morphism(const Bibundle& p,
                                              const Bibundle& q) {
  check_same_sides(p, q, "find_morphism");
  std::vector<BibundleMorphism> out;
  std::vector<int> img(p.carrier().size, -1);
  search_bimorphisms(p, q, img, /*first_only=*/true, out);
  if (out.empty()) return std::nullopt;
  return out.front();
}

std::vector<BibundleMorphism> enumerate_morphisms(const Bibundle& p,
                                                  const Bibundle& q) {
  check_same_sides(p, q, "enumerate_morphisms");
  std::vector<BibundleMorphism> out;
  std::vector<int> img(p.carrier().size, -1);
  search_bimorphisms(p, q, img, /*first_only=*/false, out);
  return out;
}

BibundleMorphism point_morphism(GroupoidPtr g, const FinMap& y,
                                const FinMap& x1, const FinMap& x2) {
  if (y.cod() != g->arrows() || x1.dom() != y.dom() || x2.dom() != y.dom()) {
    throw std::invalid_argument("point_morphism: shapes mismatch");
  }
  for (int i = 0; i < y.dom().size; ++i) {
    if (g->tgt(y(i)) != x1(i) || g->src(y(i)) != x2(i)) {
      throw std::invalid_argument(
          "point_morphism: arrow family endpoints do not match at " +
          std::to_string(i));
    }
  }
  Bibundle dom = point_bundle(g, x2);
  Bibundle cod = point_bundle(g, x1);
  // Carriers are {(i, a) | tgt a = x(i)}; the map is (i, a) -> (i, y(i)∘a).
  Pullback dom_pb = pullback(x2, g->tgt_map());
  Pullback cod_pb = pullback(x1, g->tgt_map());
  std::vector<int> t(dom.carrier().size);
  for (int idx = 0; idx < dom.carrier().size; ++idx) {
    const int i = dom_pb.proj1(idx);
    const int a = dom_pb.proj2(idx);
    t[idx] = cod_pb.pair_index(i, g->mul(y(i), a));
  }
  return {dom, cod, FinMap(dom.carrier(), cod.carrier(), std::move(t))};
}

Bibundle pair_bibundles(const Bibundle& p1, const Bibundle& p2) {
  if (!(p1.left() == p2.left())) {
    throw std::invalid_argument(
        "pair_bibundles: bundles do not share their left groupoid");
  }
  const BiAction& a = p1.data();
  const BiAction& b = p2.data();
  const Groupoid& k = p1.left();
  Groupoid hg = product_groupoid(p1.right(), p2.right());
  const int o_g = p2.right().objects().size;
  const int a_g = p2.right().arrows().size;
  Pullback pb = pullback(a.p_anchor, b.p_anchor);

  BiAction out;
  out.left = p1.left_ptr();
  out.right = share(std::move(hg));
  out.carrier = pb.apex;
  std::vector<int> pa(pb.apex.size), qa(pb.apex.size);
  for (int i = 0; i < pb.apex.size; ++i) {
    pa[i] = a.p_anchor(pb.proj1(i));
    qa[i] = a.q_anchor(pb.proj1(i)) * o_g + b.q_anchor(pb.proj2(i));
  }
  out.p_anchor = FinMap(pb.apex, k.objects(), std::move(pa));
  out.q_anchor = FinMap(pb.apex, out.right->objects(), std::move(qa));
  out.h_act.assign(static_cast<size_t>(k.arrows().size) * pb.apex.size, -1);
  out.g_act.assign(
      static_cast<size_t>(out.right->arrows().size) * pb.apex.size, -1);
  for (int ki = 0; ki < k.arrows().size; ++ki) {
    for (int i = 0; i < pb.apex.size; ++i) {
      if (k.src(ki) != out.p_anchor(i)) continue;
      out.h_act[ki * pb.apex.size + i] = pb.pair_index(
          a.hact(ki, pb.proj1(i)), b.hact(ki, pb.proj2(i)));
    }
  }
  for (int hi = 0; hi < p1.right().arrows().size; ++hi) {
    for (int gi = 0; gi < a_g; ++gi) {
      for (int i = 0; i < pb.apex.size; ++i) {
        if (p1.right().src(hi) != a.q_anchor(pb.proj1(i)) ||
            p2.right().src(gi) != b.q_anchor(pb.proj2(i))) {
          continue;
        }
        out.g_act[(hi * a_g + gi) * pb.apex.size + i] = pb.pair_index(
            a.gact(hi, pb.proj1(i)), b.gact(gi, pb.proj2(i)));
      }
    }
  }
  return Bibundle(std::move(out));
}

namespace {

long long checked_pow(int base, int exp, long long cap) {
  long long v = 1;
  for (int i = 0; i < exp; ++i) {
    v *= base;
    if (v > cap) {
      throw std::invalid_argument(
          "points_groupoid: stage is too large for this groupoid");
    }
  }
  return v;
}

int encode_point(const std::vector<int>& table, int base) {
  int v = 0;
  for (int d : table) v = v * base + d;
  return v;
}

}  // namespace

std::vector<int> decode_point(int index, int i_size, int base) {
  std::vector<int> t(i_size);
  for (int k = i_size - 1; k >= 0; --k) {
    t[k] = index % base;
    index /= base;
  }
  return t;
}

Groupoid points_groupoid(const Groupoid& g, FinSet i) {
  const int n0 = g.objects().size;
  const int n1 = g.arrows().size;
  const long long objs = i.size == 0 ? 1 : checked_pow(n0, i.size, 1 << 16);
  const long long arrs = i.size == 0 ? 1 : checked_pow(n1, i.size, 1 << 10);
  FinSet objects{static_cast<int>(objs)};
  FinSet arrows{static_cast<int>(arrs)};
  std::vector<int> src(arrows.size), tgt(arrows.size), unit(objects.size),
      inv(arrows.size);
  for (int a = 0; a < arrows.size; ++a) {
    std::vector<int> y = decode_point(a, i.size, n1);
    std::vector<int> s(i.size), t(i.size), v(i.size);
    for (int k = 0; k < i.size; ++k) {
      s[k] = g.src(y[k]);
      t[k] = g.tgt(y[k]);
      v[k] = g.inv(y[k]);
    }
    src[a] = encode_point(s, n0);
    tgt[a] = encode_point(t, n0);
    inv[a] = encode_point(v, n1);
  }
  for (int x = 0; x < objects.size; ++x) {
    std::vector<int> xs = decode_point(x, i.size, n0);
    std::vector<int> u(i.size);
    for (int k = 0; k < i.size; ++k) u[k] = g.unit(xs[k]);
    unit[x] = encode_point(u, n1);
  }
  std::vector<int> mul(static_cast<size_t>(arrows.size) * arrows.size, -1);
  for (int a = 0; a < arrows.size; ++a) {
    for (int b = 0; b < arrows.size; ++b) {
      if (src[a] != tgt[b]) continue;
      std::vector<int> ya = decode_point(a, i.size, n1);
      std::vector<int> yb = decode_point(b, i.size, n1);
      std::vector<int> m(i.size);
      for (int k = 0; k < i.size; ++k) m[k] = g.mul(ya[k], yb[k]);
      mul[a * arrows.size + b] = encode_point(m, n1);
    }
  }
  return Groupoid(objects, arrows, FinMap(arrows, objects, std::move(src)),
                  FinMap(arrows, objects, std::move(tgt)),
                  FinMap(objects, arrows, std::move(unit)),
                  FinMap(arrows, arrows, std::move(inv)), std::move(mul));
}

}  // namespace gpd
