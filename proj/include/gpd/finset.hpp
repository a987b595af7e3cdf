#ifndef GPD_FINSET_HPP
#define GPD_FINSET_HPP

#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

// The ambient cartesian category: finite sets as integer ranges 0..n-1,
// maps between them, and the limits/colimits the rest of the library is
// built from. Every construction uses a fixed canonical numbering so that
// results are reproducible bit-for-bit.

namespace gpd {

/// A finite set; its elements are exactly the integers 0..size-1.
/// The empty set (size 0) is legal everywhere.
struct FinSet {
  int size = 0;
  auto operator<=>(const FinSet&) const = default;
};

/// A total function between finite sets, stored as a lookup table.
class FinMap {
 public:
  FinMap() = default;

  /// Throws std::invalid_argument if any table entry is outside cod.
  FinMap(FinSet dom, FinSet cod, std::vector<int> table);

  static FinMap identity(FinSet s);
  static FinMap constant(FinSet dom, FinSet cod, int value);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  const std::vector<int>& table() const { return table_; }

  int operator()(int x) const;

  bool operator==(const FinMap&) const = default;

 private:
  FinSet dom_;
  FinSet cod_;
  std::vector<int> table_;
};

/// The fibered product of f : A -> Z and g : B -> Z.
///
/// The apex enumerates all pairs (a, b) with f(a) = g(b), ordered
/// lexicographically by (a, b); pair_index inverts the enumeration.
struct Pullback {
  FinSet apex;
  FinMap proj1;  // apex -> f.dom
  FinMap proj2;  // apex -> g.dom

  /// Index of the apex element (a, b), or -1 if f(a) != g(b).
  int pair_index(int a, int b) const;

  int left_size = 0;   // f.dom.size
  int right_size = 0;  // g.dom.size
  std::vector<int> index_;  // left_size * right_size entries
};

/// A surjection onto a canonical quotient: classes are numbered
/// 0..k-1 in order of their minimal source representative.
struct Quotient {
  FinSet source;
  FinSet classes;
  FinMap proj;  // source -> classes

  /// Members of each class, in increasing order.
  std::vector<std::vector<int>> class_members() const;
};

/// Pointwise composition f ∘ g. Throws if g.cod != f.dom.
FinMap compose(const FinMap& f, const FinMap& g);

/// Fibered product of f and g over their (equal) codomain.
Pullback pullback(const FinMap& f, const FinMap& g);

/// Cartesian product, as the pullback over the terminal set.
Pullback product(FinSet a, FinSet b);

/// Coequalizer of a parallel pair f, g : A -> B: the finest partition of B
/// merging f(x) ~ g(x) for every x, computed by union-find.
Quotient coequalizer(const FinMap& f, const FinMap& g);

/// The identity quotient of a set (every class a singleton).
Quotient discrete_quotient(FinSet s);

bool is_surjective(const FinMap& f);
bool is_injective(const FinMap& f);
bool is_bijective(const FinMap& f);

/// Inverse of a bijection. Throws if f is not bijective.
FinMap inverse(const FinMap& f);

/// Constraint predicate for find_bijection_search. `partial` holds the
/// images of 0..partial.size()-1; the last entry is the one most recently
/// assigned, so implementations only need to check constraints that
/// involve it.
using BijectionConstraint = std::function<bool(std::span<const int> partial)>;

/// Backtracking search for a constrained bijection dom -> cod.
///
/// Elements of dom are assigned in increasing order and candidate images
/// are tried in increasing order, so the first solution found is the
/// lexicographically least assignment. Returns std::nullopt when no
/// bijection satisfies the constraint (in particular when sizes differ).
std::optional<FinMap> find_bijection_search(FinSet dom, FinSet cod,
                                            const BijectionConstraint& ok);

/// Shared violation-report type for the validators in this library.
/// Entries are human-readable and start with a stable "code:" prefix that
/// names the violated axiom.
struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string v) { violations.push_back(std::move(v)); }
  bool mentions(const std::string& code) const;
  std::string str() const;
};

}  // namespace gpd

#endif  // GPD_FINSET_HPP
