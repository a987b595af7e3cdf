#include "gpd/finset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gpd {

FinMap::FinMap(FinSet dom, FinSet cod, std::vector<int> table)
    : dom_(dom), cod_(cod), table_(std::move(table)) {
  if (static_cast<int>(table_.size()) != dom_.size) {
    throw std::invalid_argument("FinMap: table size " +
                                std::to_string(table_.size()) +
                                " does not match domain size " +
                                std::to_string(dom_.size));
  }
  for (int x = 0; x < dom_.size; ++x) {
    if (table_[x] < 0 || table_[x] >= cod_.size) {
      throw std::invalid_argument("FinMap: entry " + std::to_string(x) +
                                  " -> " + std::to_string(table_[x]) +
                                  " is outside codomain of size " +
                                  std::to_string(cod_.size));
    }
  }
}

FinMap FinMap::identity(FinSet s) {
  std::vector<int> t(s.size);
  std::iota(t.begin(), t.end(), 0);
  return FinMap(s, s, std::move(t));
}

FinMap FinMap::constant(FinSet dom, FinSet cod, int value) {
  return FinMap(dom, cod, std::vector<int>(dom.size, value));
}

int FinMap::operator()(int x) const {
  if (x < 0 || x >= dom_.size) {
    throw std::out_of_range("FinMap: argument " + std::to_string(x) +
                            " outside domain of size " +
                            std::to_string(dom_.size));
  }
  return table_[x];
}

int Pullback::pair_index(int a, int b) const {
  if (a < 0 || a >= left_size || b < 0 || b >= right_size) {
    throw std::out_of_range("Pullback: pair (" + std::to_string(a) + ", " +
                            std::to_string(b) + ") out of range");
  }
  return index_[a * right_size + b];
}

std::vector<std::vector<int>> Quotient::class_members() const {
  std::vector<std::vector<int>> members(classes.size);
  for (int x = 0; x < source.size; ++x) members[proj(x)].push_back(x);
  return members;
}

FinMap compose(const FinMap& f, const FinMap& g) {
  if (g.cod() != f.dom()) {
    throw std::invalid_argument(
        "compose: codomain of inner map (size " +
        std::to_string(g.cod().size) + ") does not match domain of outer map (size " +
        std::to_string(f.dom().size) + ")");
  }
  std::vector<int> t(g.dom().size);
  for (int x = 0; x < g.dom().size; ++x) t[x] = f(g(x));
  return FinMap(g.dom(), f.cod(), std::move(t));
}

Pullback pullback(const FinMap& f, const FinMap& g) {
  if (f.cod() != g.cod()) {
    throw std::invalid_argument("pullback: maps do not share a codomain (" +
                                std::to_string(f.cod().size) + " vs " +
                                std::to_string(g.cod().size) + ")");
  }
  Pullback pb;
  pb.left_size = f.dom().size;
  pb.right_size = g.dom().size;
  pb.index_.assign(static_cast<size_t>(pb.left_size) * pb.right_size, -1);
  std::vector<int> p1, p2;
  for (int a = 0; a < pb.left_size; ++a) {
    for (int b = 0; b < pb.right_size; ++b) {
      if (f(a) == g(b)) {
        pb.index_[a * pb.right_size + b] = static_cast<int>(p1.size());
        p1.push_back(a);
        p2.push_back(b);
      }
    }
  }
  pb.apex = FinSet{static_cast<int>(p1.size())};
  pb.proj1 = FinMap(pb.apex, f.dom(), std::move(p1));
  pb.proj2 = FinMap(pb.apex, g.dom(), std::move(p2));
  return pb;
}

Pullback product(FinSet a, FinSet b) {
  FinSet one{1};
  return pullback(FinMap::constant(a, one, 0), FinMap::constant(b, one, 0));
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    // Keep the smaller index as root so class numbering by minimal
    // representative falls out directly.
    if (a == b) return;
    if (a < b) parent_[b] = a;
    else parent_[a] = b;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Quotient coequalizer(const FinMap& f, const FinMap& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod()) {
    throw std::invalid_argument("coequalizer: maps are not a parallel pair");
  }
  const int n = f.cod().size;
  UnionFind uf(n);
  for (int x = 0; x < f.dom().size; ++x) uf.unite(f(x), g(x));

  Quotient q;
  q.source = f.cod();
  std::vector<int> clazz(n, -1);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    int r = uf.find(x);
    if (clazz[r] < 0) clazz[r] = next++;
    clazz[x] = clazz[r];
  }
  q.classes = FinSet{next};
  q.proj = FinMap(q.source, q.classes, std::move(clazz));
  return q;
}

Quotient discrete_quotient(FinSet s) {
  Quotient q;
  q.source = s;
  q.classes = s;
  q.proj = FinMap::identity(s);
  return q;
}

bool is_surjective(const FinMap& f) {
  std::vector<char> hit(f.cod().size, 0);
  for (int x = 0; x < f.dom().size; ++x) hit[f(x)] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool is_injective(const FinMap& f) {
  std::vector<char> hit(f.cod().size, 0);
  for (int x = 0; x < f.dom().size; ++x) {
    if (hit[f(x)]) return false;
    hit[f(x)] = 1;
  }
  return true;
}

bool is_bijective(const FinMap& f) {
  return f.dom().size == f.cod().size && is_injective(f);
}

FinMap inverse(const FinMap& f) {
  if (!is_bijective(f)) {
    throw std::invalid_argument("inverse: map is not a bijection");
  }
  std::vector<int> t(f.cod().size);
  for (int x = 0; x < f.dom().size; ++x) t[f(x)] = x;
  return FinMap(f.cod(), f.dom(), std::move(t));
}

namespace {

bool extend_bijection(std::vector<int>& partial, std::vector<char>& used,
                      int n, const BijectionConstraint& ok) {
  const int i = static_cast<int>(partial.size());
  if (i == n) return true;
  for (int v = 0; v < static_cast<int>(used.size()); ++v) {
    if (used[v]) continue;
    partial.push_back(v);
    used[v] = 1;
    if ((!ok || ok(partial)) && extend_bijection(partial, used, n, ok)) {
      return true;
    }
    used[v] = 0;
    partial.pop_back();
  }
  return false;
}

}  // namespace

std::optional<FinMap> find_bijection_search(FinSet dom, FinSet cod,
                                            const BijectionConstraint& ok) {
  if (dom.size != cod.size) return std::nullopt;
  std::vector<int> partial;
  partial.reserve(dom.size);
  std::vector<char> used(cod.size, 0);
  if (!extend_bijection(partial, used, dom.size, ok)) return std::nullopt;
  return FinMap(dom, cod, std::move(partial));
}

bool ValidationReport::mentions(const std::string& code) const {
  for (const auto& v : violations) {
    if (v.rfind(code, 0) == 0) return true;
  }
  return false;
}

std::string ValidationReport::str() const {
  std::string out;
  for (const auto& v : violations) {
    out += v;
    out += '\n';
  }
  return out;
}

}  // namespace gpd
