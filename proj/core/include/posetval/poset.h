#ifndef POSETVAL_POSET_H_
#define POSETVAL_POSET_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace posetval {

using Index = std::size_t;

// Sorted ascending list of element indices.
using ElementSet = std::vector<Index>;

using NamedPair = std::pair<std::string, std::string>;

struct Cover {
  Index lower;
  Index upper;

  friend bool operator==(const Cover&, const Cover&) = default;
  friend auto operator<=>(const Cover&, const Cover&) = default;
};

struct PosetBuild;

// Builds a poset from pairs (a, c) read as a < c. Elements are numbered
// by first appearance: `declared` first, then pair endpoints. Duplicate and
// transitively implied pairs are dropped; the latter are listed in
// `redundant`. Throws Error(kCycleDetected) naming a cycle.
PosetBuild BuildPoset(const std::vector<NamedPair>& pairs,
                      const std::vector<std::string>& declared = {});

// A finite partially ordered set over opaque string identifiers.
//
// The order is held as a dense reflexive-transitive relation matrix next to
// the (transitively reduced) cover relation. Instances are immutable.
class Poset {
 public:
  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }

  const std::string& name(Index i) const;
  const std::vector<std::string>& names() const { return names_; }

  // Throws Error(kUnknownElement) when the identifier is not present.
  Index IndexOf(std::string_view name) const;
  std::optional<Index> Find(std::string_view name) const;

  bool Leq(Index a, Index b) const { return leq_[a * size() + b] != 0; }
  bool Less(Index a, Index b) const { return a != b && Leq(a, b); }
  bool Comparable(Index a, Index b) const { return Leq(a, b) || Leq(b, a); }

  const std::vector<Cover>& covers() const { return covers_; }
  const std::vector<Index>& UpperCovers(Index i) const { return up_[i]; }
  const std::vector<Index>& LowerCovers(Index i) const { return down_[i]; }

  // Same elements, every cover reversed.
  Poset Dual() const;

  // Throws Error(kUnknownElement) for indices outside the ground set.
  void CheckIndex(Index i) const;

 private:
  friend PosetBuild BuildPoset(const std::vector<NamedPair>&,
                               const std::vector<std::string>&);

  Poset() = default;

  std::vector<std::string> names_;
  std::unordered_map<std::string, Index> index_;
  std::vector<std::uint8_t> leq_;
  std::vector<Cover> covers_;
  std::vector<std::vector<Index>> up_;
  std::vector<std::vector<Index>> down_;
};

struct PosetBuild {
  Poset poset;
  // Input pairs implied by transitivity of the others; they are dropped.
  std::vector<NamedPair> redundant;
};

inline Poset MakePoset(const std::vector<NamedPair>& pairs,
                       const std::vector<std::string>& declared = {}) {
  return BuildPoset(pairs, declared).poset;
}

// Principal ideal {x' : x' <= x}.
ElementSet Ideal(const Poset& p, Index x);
// Principal filter {x' : x <= x'}.
ElementSet Filter(const Poset& p, Index x);

ElementSet Intersect(const ElementSet& a, const ElementSet& b);

ElementSet Minimals(const Poset& p, std::span<const Index> s);
ElementSet Maximals(const Poset& p, std::span<const Index> s);

std::optional<Index> Meet(const Poset& p, Index x, Index y);
std::optional<Index> Join(const Poset& p, Index x, Index y);

// Least / greatest element, when one exists.
std::optional<Index> Bottom(const Poset& p);
std::optional<Index> Top(const Poset& p);

struct Classification {
  bool is_meet_semilattice = false;
  bool is_join_semilattice = false;
  bool is_lattice = false;
  bool is_bounded = false;
  bool is_tree = false;
  bool is_modular = false;
  std::optional<Index> bottom;
  std::optional<Index> top;
  // Present exactly when the poset is bounded.
  std::optional<std::size_t> delta_wedge;
  std::optional<std::size_t> delta_vee;
};

// Throws Error(kEmptyPoset) on an empty poset.
Classification Classify(const Poset& p);

// Every pair of incomparable elements has disjoint ideals, and all joins
// exist.
bool IsTree(const Poset& p);

// Checks x <= z  =>  x v (y ^ z) == (x v y) ^ z over all triples. Returns
// false for posets that are not lattices.
bool IsModular(const Poset& p);

// max over pairs of |ix ^ iy| - max{ |iz| : z in max(ix ^ iy) } where ix is
// the ideal of x. Throws Error(kNotBounded) unless the poset is bounded.
std::size_t DeltaWedge(const Poset& p);
// Order dual of DeltaWedge: |fx ^ fy| - max{ |fz| : z in min(fx ^ fy) }.
std::size_t DeltaVee(const Poset& p);

// Elements x != top that are not the meet of the elements strictly above x.
ElementSet MeetIrreducibles(const Poset& p);

}  // namespace posetval

#endif  // POSETVAL_POSET_H_
