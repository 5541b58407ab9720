#include "posetval/poset.h"

#include <algorithm>
#include <set>

#include "posetval/error.h"

namespace posetval {

std::string_view ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kUnknownElement: return "UnknownElement";
    case ErrorCode::kEmptyPoset: return "EmptyPoset";
    case ErrorCode::kNotBounded: return "NotBounded";
    case ErrorCode::kNonMonotone: return "NonMonotone";
    case ErrorCode::kPreconditionUnmet: return "PreconditionUnmet";
    case ErrorCode::kNotTotal: return "NotTotal";
    case ErrorCode::kWeightPosetMismatch: return "WeightPosetMismatch";
    case ErrorCode::kNegativeWeight: return "NegativeWeight";
    case ErrorCode::kZeroScale: return "ZeroScale";
    case ErrorCode::kNonPositiveValue: return "NonPositiveValue";
    case ErrorCode::kRowMismatch: return "RowMismatch";
    case ErrorCode::kDomainConditionFailed: return "DomainConditionFailed";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kEmptyFilterIntersection: return "EmptyFilterIntersection";
    case ErrorCode::kUnknownTarget: return "UnknownTarget";
    case ErrorCode::kUnknownName: return "UnknownName";
    case ErrorCode::kOrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::kInvalidGroup: return "InvalidGroup";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

const std::string& Poset::name(Index i) const {
  CheckIndex(i);
  return names_[i];
}

Index Poset::IndexOf(std::string_view name) const {
  auto found = Find(name);
  if (!found) {
    throw Error(ErrorCode::kUnknownElement,
                "unknown element '" + std::string(name) + "'");
  }
  return *found;
}

std::optional<Index> Poset::Find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Poset::CheckIndex(Index i) const {
  if (i >= size()) {
    throw Error(ErrorCode::kUnknownElement,
                "element index " + std::to_string(i) + " out of range");
  }
}

Poset Poset::Dual() const {
  Poset d = *this;
  const std::size_t n = size();
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) d.leq_[a * n + b] = leq_[b * n + a];
  }
  for (Cover& c : d.covers_) std::swap(c.lower, c.upper);
  std::sort(d.covers_.begin(), d.covers_.end());
  std::swap(d.up_, d.down_);
  return d;
}

namespace {

// Depth-first search for a cycle in the pair graph; returns its vertex list
// (first vertex repeated at the end) or empty when acyclic. Also emits a
// topological order (sources first) through `order`.
std::vector<Index> FindCycle(const std::vector<std::vector<Index>>& succ,
                             std::vector<Index>& order) {
  const std::size_t n = succ.size();
  enum : std::uint8_t { kWhite, kGrey, kBlack };
  std::vector<std::uint8_t> color(n, kWhite);
  std::vector<Index> parent(n, n);
  std::vector<Index> post;
  post.reserve(n);

  for (Index root = 0; root < n; ++root) {
    if (color[root] != kWhite) continue;
    // Explicit stack of (vertex, next successor position).
    std::vector<std::pair<Index, std::size_t>> stack{{root, 0}};
    color[root] = kGrey;
    while (!stack.empty()) {
      auto& [v, pos] = stack.back();
      if (pos < succ[v].size()) {
        Index w = succ[v][pos++];
        if (color[w] == kGrey) {
          std::vector<Index> cycle{w};
          for (Index u = v; u != w; u = parent[u]) cycle.push_back(u);
          cycle.push_back(w);
          std::reverse(cycle.begin(), cycle.end());
          return cycle;
        }
        if (color[w] == kWhite) {
          color[w] = kGrey;
          parent[w] = v;
          stack.emplace_back(w, 0);
        }
      } else {
        color[v] = kBlack;
        post.push_back(v);
        stack.pop_back();
      }
    }
  }
  order.assign(post.rbegin(), post.rend());
  return {};
}

}  // namespace

PosetBuild BuildPoset(const std::vector<NamedPair>& pairs,
                      const std::vector<std::string>& declared) {
  Poset p;
  auto intern = [&p](const std::string& name) {
    auto [it, inserted] = p.index_.emplace(name, p.names_.size());
    if (inserted) p.names_.push_back(name);
    return it->second;
  };
  for (const auto& name : declared) intern(name);

  std::vector<Cover> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, c] : pairs) {
    Index ia = intern(a);
    Index ic = intern(c);
    if (ia == ic) {
      throw Error(ErrorCode::kCycleDetected,
                  "cycle detected: " + a + " < " + a);
    }
    edges.push_back({ia, ic});
  }

  const std::size_t n = p.names_.size();
  std::vector<std::vector<Index>> succ(n);
  {
    std::set<Cover> seen;
    for (const Cover& e : edges) {
      if (seen.insert(e).second) succ[e.lower].push_back(e.upper);
    }
  }

  std::vector<Index> topo;
  std::vector<Index> cycle = FindCycle(succ, topo);
  if (!cycle.empty()) {
    std::string msg = "cycle detected: ";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) msg += " < ";
      msg += p.names_[cycle[i]];
    }
    throw Error(ErrorCode::kCycleDetected, msg);
  }

  // Reflexive-transitive closure, sinks first.
  p.leq_.assign(n * n, 0);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    Index v = *it;
    std::uint8_t* row = &p.leq_[v * n];
    row[v] = 1;
    for (Index w : succ[v]) {
      const std::uint8_t* wrow = &p.leq_[w * n];
      for (Index k = 0; k < n; ++k) row[k] |= wrow[k];
    }
  }

  PosetBuild build{std::move(p), {}};
  Poset& q = build.poset;
  q.up_.assign(n, {});
  q.down_.assign(n, {});
  std::set<Cover> emitted;
  for (const Cover& e : edges) {
    if (!emitted.insert(e).second) continue;
    bool redundant = false;
    for (Index b = 0; b < n && !redundant; ++b) {
      redundant = q.Less(e.lower, b) && q.Less(b, e.upper);
    }
    if (redundant) {
      build.redundant.emplace_back(q.names_[e.lower], q.names_[e.upper]);
    } else {
      q.covers_.push_back(e);
    }
  }
  std::sort(q.covers_.begin(), q.covers_.end());
  for (const Cover& c : q.covers_) {
    q.up_[c.lower].push_back(c.upper);
    q.down_[c.upper].push_back(c.lower);
  }
  for (auto& v : q.up_) std::sort(v.begin(), v.end());
  for (auto& v : q.down_) std::sort(v.begin(), v.end());
  return build;
}

ElementSet Ideal(const Poset& p, Index x) {
  p.CheckIndex(x);
  ElementSet out;
  for (Index i = 0; i < p.size(); ++i) {
    if (p.Leq(i, x)) out.push_back(i);
  }
  return out;
}

ElementSet Filter(const Poset& p, Index x) {
  p.CheckIndex(x);
  ElementSet out;
  for (Index i = 0; i < p.size(); ++i) {
    if (p.Leq(x, i)) out.push_back(i);
  }
  return out;
}

ElementSet Intersect(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

ElementSet Minimals(const Poset& p, std::span<const Index> s) {
  for (Index x : s) p.CheckIndex(x);
  ElementSet out;
  for (Index x : s) {
    bool minimal = std::none_of(s.begin(), s.end(),
                                [&](Index y) { return p.Less(y, x); });
    if (minimal) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ElementSet Maximals(const Poset& p, std::span<const Index> s) {
  for (Index x : s) p.CheckIndex(x);
  ElementSet out;
  for (Index x : s) {
    bool maximal = std::none_of(s.begin(), s.end(),
                                [&](Index y) { return p.Less(x, y); });
    if (maximal) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Index> Meet(const Poset& p, Index x, Index y) {
  p.CheckIndex(x);
  p.CheckIndex(y);
  const std::size_t n = p.size();
  // A meet is a common lower bound above every common lower bound.
  for (Index z = 0; z < n; ++z) {
    if (!p.Leq(z, x) || !p.Leq(z, y)) continue;
    bool greatest = true;
    for (Index w = 0; w < n && greatest; ++w) {
      if (p.Leq(w, x) && p.Leq(w, y) && !p.Leq(w, z)) greatest = false;
    }
    if (greatest) return z;
  }
  return std::nullopt;
}

std::optional<Index> Join(const Poset& p, Index x, Index y) {
  p.CheckIndex(x);
  p.CheckIndex(y);
  const std::size_t n = p.size();
  for (Index z = 0; z < n; ++z) {
    if (!p.Leq(x, z) || !p.Leq(y, z)) continue;
    bool least = true;
    for (Index w = 0; w < n && least; ++w) {
      if (p.Leq(x, w) && p.Leq(y, w) && !p.Leq(z, w)) least = false;
    }
    if (least) return z;
  }
  return std::nullopt;
}

std::optional<Index> Bottom(const Poset& p) {
  for (Index z = 0; z < p.size(); ++z) {
    bool least = true;
    for (Index w = 0; w < p.size() && least; ++w) least = p.Leq(z, w);
    if (least) return z;
  }
  return std::nullopt;
}

std::optional<Index> Top(const Poset& p) {
  for (Index z = 0; z < p.size(); ++z) {
    bool greatest = true;
    for (Index w = 0; w < p.size() && greatest; ++w) greatest = p.Leq(w, z);
    if (greatest) return z;
  }
  return std::nullopt;
}

namespace {

constexpr Index kAbsent = static_cast<Index>(-1);

// n x n table of meets (or joins); kAbsent where none exists.
std::vector<Index> BoundTable(const Poset& p, bool meets) {
  const std::size_t n = p.size();
  std::vector<Index> table(n * n, kAbsent);
  for (Index x = 0; x < n; ++x) {
    for (Index y = x; y < n; ++y) {
      auto z = meets ? Meet(p, x, y) : Join(p, x, y);
      if (z) table[x * n + y] = table[y * n + x] = *z;
    }
  }
  return table;
}

bool AllPresent(const std::vector<Index>& table) {
  return std::find(table.begin(), table.end(), kAbsent) == table.end();
}

bool ModularLaw(const Poset& p, const std::vector<Index>& meet,
                const std::vector<Index>& join) {
  const std::size_t n = p.size();
  for (Index x = 0; x < n; ++x) {
    for (Index z = 0; z < n; ++z) {
      if (!p.Leq(x, z)) continue;
      for (Index y = 0; y < n; ++y) {
        Index lhs = join[x * n + meet[y * n + z]];
        Index rhs = meet[join[x * n + y] * n + z];
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

// Shared body of DeltaWedge / DeltaVee; `dual` flips the order.
std::size_t Delta(const Poset& p, bool dual) {
  const std::size_t n = p.size();
  auto leq = [&](Index a, Index b) { return dual ? p.Leq(b, a) : p.Leq(a, b); };
  std::vector<std::size_t> down(n, 0);
  for (Index x = 0; x < n; ++x) {
    for (Index w = 0; w < n; ++w) down[x] += leq(w, x);
  }
  std::size_t best = 0;
  for (Index x = 0; x < n; ++x) {
    for (Index y = x + 1; y < n; ++y) {
      std::size_t common = 0;
      std::size_t largest = 0;
      // The largest ideal inside the intersection belongs to a maximal
      // element of it, so scanning all members is enough.
      for (Index z = 0; z < n; ++z) {
        if (leq(z, x) && leq(z, y)) {
          ++common;
          largest = std::max(largest, down[z]);
        }
      }
      best = std::max(best, common - largest);
    }
  }
  return best;
}

void RequireBounded(const Poset& p) {
  if (p.empty() || !Bottom(p) || !Top(p)) {
    throw Error(ErrorCode::kNotBounded, "poset is not bounded");
  }
}

}  // namespace

bool IsTree(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) return false;
  for (Index x = 0; x < n; ++x) {
    for (Index y = x + 1; y < n; ++y) {
      if (!Join(p, x, y)) return false;
      if (p.Comparable(x, y)) continue;
      for (Index z = 0; z < n; ++z) {
        if (p.Leq(z, x) && p.Leq(z, y)) return false;
      }
    }
  }
  return true;
}

bool IsModular(const Poset& p) {
  auto meet = BoundTable(p, true);
  auto join = BoundTable(p, false);
  if (p.empty() || !AllPresent(meet) || !AllPresent(join)) return false;
  return ModularLaw(p, meet, join);
}

std::size_t DeltaWedge(const Poset& p) {
  RequireBounded(p);
  return Delta(p, false);
}

std::size_t DeltaVee(const Poset& p) {
  RequireBounded(p);
  return Delta(p, true);
}

Classification Classify(const Poset& p) {
  if (p.empty()) throw Error(ErrorCode::kEmptyPoset, "poset is empty");
  Classification c;
  auto meet = BoundTable(p, true);
  auto join = BoundTable(p, false);
  c.is_meet_semilattice = AllPresent(meet);
  c.is_join_semilattice = AllPresent(join);
  c.is_lattice = c.is_meet_semilattice && c.is_join_semilattice;
  c.bottom = Bottom(p);
  c.top = Top(p);
  c.is_bounded = c.bottom.has_value() && c.top.has_value();
  c.is_tree = IsTree(p);
  c.is_modular = c.is_lattice && ModularLaw(p, meet, join);
  if (c.is_bounded) {
    c.delta_wedge = Delta(p, false);
    c.delta_vee = Delta(p, true);
  }
  return c;
}

ElementSet MeetIrreducibles(const Poset& p) {
  const std::size_t n = p.size();
  ElementSet out;
  auto top = Top(p);
  for (Index x = 0; x < n; ++x) {
    if (top && *top == x) continue;
    // x is reducible iff it is the greatest lower bound of the set U of
    // elements strictly above it. x bounds U from below, so x fails to be
    // the glb exactly when some other lower bound of U is not below x. An
    // empty U (x maximal, no top) has no glb at all.
    bool has_above = false;
    bool is_glb = true;
    for (Index w = 0; w < n; ++w) has_above |= p.Less(x, w);
    for (Index z = 0; z < n && is_glb && has_above; ++z) {
      bool bounds_above = true;
      for (Index w = 0; w < n && bounds_above; ++w) {
        if (p.Less(x, w) && !p.Leq(z, w)) bounds_above = false;
      }
      if (bounds_above && !p.Leq(z, x)) is_glb = false;
    }
    if (!has_above || !is_glb) out.push_back(x);
  }
  return out;
}

}  // namespace posetval
