#ifndef POSETVAL_GROUP_H_
#define POSETVAL_GROUP_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "posetval/poset.h"
#include "posetval/valuation.h"

namespace posetval {

// A finite group given by its multiplication table over indices 0..n-1.
class FiniteGroup {
 public:
  // table[a][b] is the index of a*b. Throws Error(kInvalidGroup) when the
  // table is not square, has out-of-range entries, lacks an identity or
  // inverses, or (for order <= 24) is not associative.
  explicit FiniteGroup(std::vector<std::vector<int>> table,
                       std::vector<std::string> names = {});

  static FiniteGroup Cyclic(int n);
  // Permutations of {1..k} in cycle notation, composed right to left.
  static FiniteGroup Symmetric(int k);
  // Symmetries of the m-gon: r^i and r^i s, order 2m.
  static FiniteGroup Dihedral(int m);
  static FiniteGroup DirectProduct(const FiniteGroup& a, const FiniteGroup& b);

  // "Z<n>", "S<k>", "D<m>" and products joined by 'x', e.g. "Z2xZ2".
  // Throws Error(kUnknownName).
  static FiniteGroup Named(std::string_view name);

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int Multiply(int a, int b) const { return table_[a][b]; }
  int Inverse(int a) const { return inverse_[a]; }
  bool IsAbelian() const;
  const std::string& name(int a) const { return names_.at(a); }
  const std::vector<std::string>& names() const { return names_; }
  // Throws Error(kUnknownName).
  int IndexOf(std::string_view element_name) const;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<std::string> names_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

// Sorted element indices.
using GroupSubset = std::vector<int>;

// Smallest subgroup containing the given elements.
GroupSubset Closure(const FiniteGroup& g, std::span<const int> generators);

// Literal product set {st : s in a, t in b}.
GroupSubset ProductSet(const FiniteGroup& g, const GroupSubset& a,
                       const GroupSubset& b);

inline constexpr int kDefaultOrderCap = 24;

// All subgroups ordered by inclusion, with c(X) = |X| and v(X) = log |X|.
class SubgroupLattice {
 public:
  SubgroupLattice(FiniteGroup group, std::vector<GroupSubset> subgroups,
                  std::vector<std::string> labels);

  const FiniteGroup& group() const { return group_; }
  const std::vector<GroupSubset>& subgroups() const { return subgroups_; }
  const GroupSubset& subgroup(Index i) const { return subgroups_.at(i); }
  std::size_t size() const { return subgroups_.size(); }
  const PosetPtr& poset() const { return poset_; }
  const Valuation& cardinality() const { return cardinality_; }
  const Valuation& log_cardinality() const { return log_cardinality_; }

  std::optional<Index> Find(const GroupSubset& elements) const;
  // Index of the subgroup generated by the named elements. Throws
  // Error(kUnknownName) for unknown element names.
  Index Generated(const std::vector<std::string>& element_names) const;
  // Closure of the union: the subgroup join.
  Index JoinOf(Index a, Index b) const;

 private:
  FiniteGroup group_;
  std::vector<GroupSubset> subgroups_;
  PosetPtr poset_;
  Valuation cardinality_;
  Valuation log_cardinality_;
};

// Cyclic subgroups first, then closures of pairwise joins to a fixed point.
// Output is sorted by order, then lexicographically by elements; labels are
// "<g1,g2,...>" over a generating set. Throws Error(kOrderCapExceeded).
SubgroupLattice EnumerateSubgroups(const FiniteGroup& g,
                                   int order_cap = kDefaultOrderCap);

// log(|X||Y| / |X ^ Y|^2). Throws Error(kUnknownElement).
double SubgroupMetric(const SubgroupLattice& l, Index x, Index y);

struct ProductFormulaWitness {
  Index x;
  Index y;
  std::string identity;  // "product", "sum" or "abelian_join"
  long lhs;
  long rhs;
};

struct ProductFormulaReport {
  bool holds = true;
  std::size_t pairs_checked = 0;
  std::vector<ProductFormulaWitness> witnesses;
};

// For every pair of subgroups: |X||Y| = |XY||X ^ Y| and
// |X| + |Y| <= |X ^ Y| + |XY|; in abelian groups also |X v Y| = |XY|.
ProductFormulaReport CheckProductFormula(const SubgroupLattice& l);

// Built-in groups used by property checks: Z1..Z12, Z2xZ2, S3, D4, S4.
std::vector<std::string> GroupSuiteNames();

}  // namespace posetval

#endif  // POSETVAL_GROUP_H_
