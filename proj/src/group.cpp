#include "gpd/group.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gpd {

int GroupTable::identity() const {
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = at(e, a) == a && at(a, e) == a;
    if (ok) return e;
  }
  return -1;
}

int GroupTable::inverse_of(int a) const {
  const int e = identity();
  for (int b = 0; b < n; ++b) {
    if (at(a, b) == e && at(b, a) == e) return b;
  }
  return -1;
}

int GroupTable::element_order(int a) const {
  const int e = identity();
  int x = a;
  for (int k = 1; k <= n; ++k) {
    if (x == e) return k;
    x = at(x, a);
  }
  return -1;
}

ValidationReport validate_group_table(const GroupTable& t) {
  ValidationReport rep;
  if (static_cast<int>(t.mul.size()) != t.n * t.n) {
    rep.add("closure: table has " + std::to_string(t.mul.size()) +
            " entries, expected " + std::to_string(t.n * t.n));
    return rep;
  }
  for (int a = 0; a < t.n; ++a) {
    for (int b = 0; b < t.n; ++b) {
      if (t.at(a, b) < 0 || t.at(a, b) >= t.n) {
        rep.add("closure: entry (" + std::to_string(a) + ", " +
                std::to_string(b) + ") out of range");
        return rep;
      }
    }
  }
  for (int a = 0; a < t.n; ++a) {
    for (int b = 0; b < t.n; ++b) {
      for (int c = 0; c < t.n; ++c) {
        if (t.at(t.at(a, b), c) != t.at(a, t.at(b, c))) {
          rep.add("associativity: fails at (" + std::to_string(a) + ", " +
                  std::to_string(b) + ", " + std::to_string(c) + ")");
          return rep;
        }
      }
    }
  }
  const int e = t.identity();
  if (e < 0) {
    rep.add("identity: no two-sided identity element");
    return rep;
  }
  for (int a = 0; a < t.n; ++a) {
    if (t.inverse_of(a) < 0) {
      rep.add("inverse: element " + std::to_string(a) + " has no inverse");
    }
  }
  return rep;
}

namespace {

// Breadth-first labeling of the group from an ordered generator tuple:
// label 0 is the identity, then labels are assigned in order of first
// appearance while scanning labeled elements and right-multiplying by the
// generators. Returns old -> new labels.
std::vector<int> bfs_labeling(const GroupTable& t,
                              const std::vector<int>& gens) {
  std::vector<int> label(t.n, -1);
  std::vector<int> order;  // elements in label order
  label[t.identity()] = 0;
  order.push_back(t.identity());
  for (size_t i = 0; i < order.size(); ++i) {
    for (int g : gens) {
      int y = t.at(order[i], g);
      if (label[y] < 0) {
        label[y] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
  }
  if (static_cast<int>(order.size()) != t.n) return {};  // not generating
  return label;
}

GroupTable relabeled(const GroupTable& t, const std::vector<int>& label) {
  std::vector<int> inv(t.n);
  for (int x = 0; x < t.n; ++x) inv[label[x]] = x;
  GroupTable out;
  out.n = t.n;
  out.mul.resize(t.n * t.n);
  for (int a = 0; a < t.n; ++a) {
    for (int b = 0; b < t.n; ++b) {
      out.mul[a * t.n + b] = label[t.at(inv[a], inv[b])];
    }
  }
  return out;
}

// Minimal k such that some k-tuple generates, found by trying k = 0, 1, ...
int minimal_generator_count(const GroupTable& t) {
  if (t.n == 1) return 0;
  for (int k = 1; k <= 8; ++k) {
    std::vector<int> tuple(k, 0);
    // Odometer over all k-tuples.
    while (true) {
      if (!bfs_labeling(t, tuple).empty()) return k;
      int i = k - 1;
      while (i >= 0 && tuple[i] == t.n - 1) tuple[i--] = 0;
      if (i < 0) break;
      ++tuple[i];
    }
  }
  throw std::logic_error("minimal_generator_count: no generating tuple");
}

void for_each_tuple(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> tuple(k, 0);
  if (k == 0) {
    fn(tuple);
    return;
  }
  while (true) {
    fn(tuple);
    int i = k - 1;
    while (i >= 0 && tuple[i] == n - 1) tuple[i--] = 0;
    if (i < 0) return;
    ++tuple[i];
  }
}

}  // namespace

CanonicalGroup canonical_group(const GroupTable& t) {
  if (t.n > 64) {
    throw std::invalid_argument("canonical_group: order " +
                                std::to_string(t.n) + " exceeds the cap of 64");
  }
  if (t.n == 0) {
    throw std::invalid_argument("canonical_group: empty table is not a group");
  }
  const int k = minimal_generator_count(t);
  CanonicalGroup best;
  for_each_tuple(t.n, k, [&](const std::vector<int>& gens) {
    std::vector<int> label = bfs_labeling(t, gens);
    if (label.empty()) return;
    GroupTable candidate = relabeled(t, label);
    if (best.relabel.empty() || candidate.mul < best.table.mul) {
      best.table = std::move(candidate);
      best.relabel = std::move(label);
    }
  });
  return best;
}

std::optional<std::vector<int>> group_isomorphism(const GroupTable& a,
                                                  const GroupTable& b) {
  if (a.n != b.n) return std::nullopt;
  if (order_profile(a) != order_profile(b)) return std::nullopt;
  CanonicalGroup ca = canonical_group(a);
  CanonicalGroup cb = canonical_group(b);
  if (ca.table != cb.table) return std::nullopt;
  // a -> canonical -> b
  std::vector<int> inv_b(b.n);
  for (int x = 0; x < b.n; ++x) inv_b[cb.relabel[x]] = x;
  std::vector<int> iso(a.n);
  for (int x = 0; x < a.n; ++x) iso[x] = inv_b[ca.relabel[x]];
  return iso;
}

std::vector<std::vector<int>> enumerate_group_homs(const GroupTable& a,
                                                   const GroupTable& b) {
  // Greedy generating sequence for a: each element not in the closure of
  // the previous ones, in index order.
  std::vector<int> gens;
  std::vector<char> closed(a.n, 0);
  closed[a.identity()] = 1;
  auto close_over = [&](int g) {
    gens.push_back(g);
    // regenerate the closure from scratch (tiny groups)
    std::fill(closed.begin(), closed.end(), 0);
    std::vector<int> frontier{a.identity()};
    closed[a.identity()] = 1;
    for (size_t i = 0; i < frontier.size(); ++i) {
      for (int h : gens) {
        int y = a.at(frontier[i], h);
        if (!closed[y]) {
          closed[y] = 1;
          frontier.push_back(y);
        }
      }
    }
  };
  for (int x = 0; x < a.n; ++x) {
    if (!closed[x]) close_over(x);
  }

  // Decompose every element of a as a word over gens via BFS.
  std::vector<std::pair<int, int>> parent(a.n, {-1, -1});  // (prev elem, gen)
  {
    std::vector<int> frontier{a.identity()};
    std::vector<char> seen(a.n, 0);
    seen[a.identity()] = 1;
    for (size_t i = 0; i < frontier.size(); ++i) {
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        int y = a.at(frontier[i], gens[gi]);
        if (!seen[y]) {
          seen[y] = 1;
          parent[y] = {frontier[i], static_cast<int>(gi)};
          frontier.push_back(y);
        }
      }
    }
  }

  std::vector<std::vector<int>> homs;
  std::vector<int> images(gens.size(), 0);
  auto try_candidate = [&]() {
    std::vector<int> phi(a.n, -1);
    phi[a.identity()] = b.identity();
    // Extend along the BFS decomposition, then check multiplicativity.
    std::vector<int> todo;
    for (int x = 0; x < a.n; ++x) todo.push_back(x);
    bool progress = true;
    while (progress) {
      progress = false;
      for (int x = 0; x < a.n; ++x) {
        if (phi[x] >= 0 || parent[x].first < 0) continue;
        int p = parent[x].first;
        if (phi[p] < 0) continue;
        phi[x] = b.at(phi[p], images[parent[x].second]);
        progress = true;
      }
    }
    for (int x = 0; x < a.n; ++x) {
      if (phi[x] < 0) return;  // unreachable; cannot happen for groups
    }
    for (int x = 0; x < a.n; ++x) {
      for (int y = 0; y < a.n; ++y) {
        if (phi[a.at(x, y)] != b.at(phi[x], phi[y])) return;
      }
    }
    homs.push_back(std::move(phi));
  };
  if (gens.empty()) {
    try_candidate();
    return homs;
  }
  // Odometer over images of the generating sequence.
  while (true) {
    try_candidate();
    int i = static_cast<int>(images.size()) - 1;
    while (i >= 0 && images[i] == b.n - 1) images[i--] = 0;
    if (i < 0) break;
    ++images[i];
  }
  return homs;
}

std::vector<int> order_profile(const GroupTable& t) {
  std::vector<int> orders(t.n);
  for (int a = 0; a < t.n; ++a) orders[a] = t.element_order(a);
  std::sort(orders.begin(), orders.end());
  return orders;
}

GroupTable cyclic_group(int n) {
  GroupTable t;
  t.n = n;
  t.mul.resize(n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t.mul[a * n + b] = (a + b) % n;
  }
  return t;
}

GroupTable symmetric_group_3() {
  // Permutations of {0,1,2} in lexicographic one-line order.
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index_of = [&](const int p[3]) {
    for (int i = 0; i < 6; ++i) {
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2])
        return i;
    }
    return -1;
  };
  GroupTable t;
  t.n = 6;
  t.mul.resize(36);
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      int c[3];
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t.mul[a * 6 + b] = index_of(c);
    }
  }
  return t;
}

GroupTable dihedral_group(int n) {
  // Elements r^i s^j with 0 <= i < n, j in {0,1}, indexed i + n*j.
  GroupTable t;
  t.n = 2 * n;
  t.mul.resize(4 * n * n);
  auto idx = [n](int i, int j) { return i + n * j; };
  for (int i1 = 0; i1 < n; ++i1) {
    for (int j1 = 0; j1 < 2; ++j1) {
      for (int i2 = 0; i2 < n; ++i2) {
        for (int j2 = 0; j2 < 2; ++j2) {
          // (r^i1 s^j1)(r^i2 s^j2) = r^(i1 + i2 or i1 - i2) s^(j1+j2)
          int i = j1 == 0 ? (i1 + i2) % n : ((i1 - i2) % n + n) % n;
          int j = (j1 + j2) % 2;
          t.mul[idx(i1, j1) * t.n + idx(i2, j2)] = idx(i, j);
        }
      }
    }
  }
  return t;
}

GroupTable quaternion_group() {
  // 1, -1, i, -i, j, -j, k, -k
  static const int tbl[8][8] = {
      {0, 1, 2, 3, 4, 5, 6, 7}, {1, 0, 3, 2, 5, 4, 7, 6},
      {2, 3, 1, 0, 6, 7, 5, 4}, {3, 2, 0, 1, 7, 6, 4, 5},
      {4, 5, 7, 6, 1, 0, 2, 3}, {5, 4, 6, 7, 0, 1, 3, 2},
      {6, 7, 4, 5, 3, 2, 1, 0}, {7, 6, 5, 4, 2, 3, 0, 1}};
  GroupTable t;
  t.n = 8;
  t.mul.resize(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) t.mul[a * 8 + b] = tbl[a][b];
  return t;
}

GroupTable product_group(const GroupTable& a, const GroupTable& b) {
  GroupTable t;
  t.n = a.n * b.n;
  t.mul.resize(t.n * t.n);
  auto idx = [&](int x, int y) { return x * b.n + y; };
  for (int x1 = 0; x1 < a.n; ++x1)
    for (int y1 = 0; y1 < b.n; ++y1)
      for (int x2 = 0; x2 < a.n; ++x2)
        for (int y2 = 0; y2 < b.n; ++y2)
          t.mul[idx(x1, y1) * t.n + idx(x2, y2)] =
              idx(a.at(x1, x2), b.at(y1, y2));
  return t;
}

}  // namespace gpd
