#include "posetval/group.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iterator>
#include <map>
#include <memory>
#include <numeric>

#include "posetval/error.h"

namespace posetval {

namespace {

[[noreturn]] void Invalid(const std::string& why) {
  throw Error(ErrorCode::kInvalidGroup, "invalid group table: " + why);
}

std::string CycleNotation(const std::vector<int>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm[start] == static_cast<int>(start)) continue;
    out += '(';
    for (std::size_t i = start; !seen[i]; i = perm[i]) {
      seen[i] = true;
      out += std::to_string(i + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table,
                         std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
  const int n = order();
  if (n == 0) Invalid("empty");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) Invalid("not square");
    for (int v : row) {
      if (v < 0 || v >= n) Invalid("entry out of range");
    }
  }
  if (names_.empty()) {
    for (int i = 0; i < n; ++i) names_.push_back(std::to_string(i));
  }
  if (static_cast<int>(names_.size()) != n) Invalid("wrong number of element names");

  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) Invalid("no identity element");

  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table_[a][b] == identity_ && table_[b][a] == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0) Invalid("element " + names_[a] + " has no inverse");
  }

  if (n <= kDefaultOrderCap) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
            Invalid("not associative at (" + names_[a] + ", " + names_[b] + ", " +
                    names_[c] + ")");
          }
        }
      }
    }
  }
}

FiniteGroup FiniteGroup::Cyclic(int n) {
  if (n < 1) throw Error(ErrorCode::kUnknownName, "cyclic group order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(table));
}

FiniteGroup FiniteGroup::Symmetric(int k) {
  if (k < 1 || k > 6) {
    throw Error(ErrorCode::kUnknownName, "symmetric group degree must be in 1..6");
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(perms.size()); ++i) index[perms[i]] = i;

  const int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<int> composed(k);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      // (a*b)(i) = a(b(i))
      for (int i = 0; i < k; ++i) composed[i] = perms[a][perms[b][i]];
      table[a][b] = index.at(composed);
    }
  }
  std::vector<std::string> names;
  for (const auto& perm : perms) names.push_back(CycleNotation(perm));
  return FiniteGroup(std::move(table), std::move(names));
}

FiniteGroup FiniteGroup::Dihedral(int m) {
  if (m < 1) throw Error(ErrorCode::kUnknownName, "dihedral parameter must be positive");
  const int n = 2 * m;
  // Index i < m is r^i; index m + i is r^i s.
  auto encode = [m](int rot, int refl) { return refl * m + ((rot % m) + m) % m; };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ra = a % m, sa = a / m, rb = b % m, sb = b / m;
      // r^ra s^sa r^rb s^sb = r^(ra +/- rb) s^(sa + sb)
      table[a][b] = encode(sa ? ra - rb : ra + rb, (sa + sb) % 2);
    }
  }
  std::vector<std::string> names;
  for (int refl = 0; refl < 2; ++refl) {
    for (int rot = 0; rot < m; ++rot) {
      std::string s = rot == 0 ? "" : (rot == 1 ? "r" : "r" + std::to_string(rot));
      if (refl) s += "s";
      names.push_back(s.empty() ? "e" : s);
    }
  }
  return FiniteGroup(std::move(table), std::move(names));
}

FiniteGroup FiniteGroup::DirectProduct(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order();
  const int n = na * nb;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      table[x][y] = a.Multiply(x / nb, y / nb) * nb + b.Multiply(x % nb, y % nb);
    }
  }
  std::vector<std::string> names;
  for (int x = 0; x < n; ++x) {
    names.push_back("(" + a.name(x / nb) + "," + b.name(x % nb) + ")");
  }
  return FiniteGroup(std::move(table), std::move(names));
}

FiniteGroup FiniteGroup::Named(std::string_view name) {
  auto factor = [&](std::string_view part) {
    int value = 0;
    if (part.size() >= 2) {
      auto [ptr, ec] = std::from_chars(part.data() + 1, part.data() + part.size(), value);
      if (ec == std::errc() && ptr == part.data() + part.size() && value >= 1) {
        if (part[0] == 'Z') return Cyclic(value);
        if (part[0] == 'S' && value <= 6) return Symmetric(value);
        if (part[0] == 'D') return Dihedral(value);
      }
    }
    throw Error(ErrorCode::kUnknownName, "unknown group '" + std::string(name) + "'");
  };
  std::optional<FiniteGroup> result;
  std::size_t start = 0;
  while (true) {
    std::size_t cut = name.find('x', start);
    FiniteGroup part = factor(name.substr(start, cut - start));
    result = result ? DirectProduct(*result, part) : part;
    if (cut == std::string_view::npos) break;
    start = cut + 1;
  }
  return *result;
}

bool FiniteGroup::IsAbelian() const {
  for (int a = 0; a < order(); ++a) {
    for (int b = a + 1; b < order(); ++b) {
      if (table_[a][b] != table_[b][a]) return false;
    }
  }
  return true;
}

int FiniteGroup::IndexOf(std::string_view element_name) const {
  for (int i = 0; i < order(); ++i) {
    if (names_[i] == element_name) return i;
  }
  throw Error(ErrorCode::kUnknownName,
              "unknown group element '" + std::string(element_name) + "'");
}

GroupSubset Closure(const FiniteGroup& g, std::span<const int> generators) {
  std::vector<bool> member(g.order(), false);
  std::vector<int> queue{g.identity()};
  member[g.identity()] = true;
  // Every element of a finite subgroup is a word in the generators, so a
  // breadth-first walk multiplying on the right reaches all of it.
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int s : generators) {
      int next = g.Multiply(queue[head], s);
      if (!member[next]) {
        member[next] = true;
        queue.push_back(next);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

GroupSubset ProductSet(const FiniteGroup& g, const GroupSubset& a,
                       const GroupSubset& b) {
  std::vector<bool> member(g.order(), false);
  for (int s : a) {
    for (int t : b) member[g.Multiply(s, t)] = true;
  }
  GroupSubset out;
  for (int i = 0; i < g.order(); ++i) {
    if (member[i]) out.push_back(i);
  }
  return out;
}

namespace {

PosetPtr InclusionPoset(const std::vector<GroupSubset>& subgroups,
                        const std::vector<std::string>& labels) {
  const std::size_t n = subgroups.size();
  auto proper_subset = [&](Index a, Index b) {
    return subgroups[a].size() < subgroups[b].size() &&
           std::includes(subgroups[b].begin(), subgroups[b].end(),
                         subgroups[a].begin(), subgroups[a].end());
  };
  std::vector<NamedPair> covers;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (!proper_subset(a, b)) continue;
      bool between = false;
      for (Index c = 0; c < n && !between; ++c) {
        between = proper_subset(a, c) && proper_subset(c, b);
      }
      if (!between) covers.emplace_back(labels[a], labels[b]);
    }
  }
  return std::make_shared<const Poset>(MakePoset(covers, labels));
}

std::vector<double> Orders(const std::vector<GroupSubset>& subgroups, bool log) {
  std::vector<double> out;
  for (const auto& s : subgroups) {
    const double size = static_cast<double>(s.size());
    out.push_back(log ? std::log(size) : size);
  }
  return out;
}

}  // namespace

SubgroupLattice::SubgroupLattice(FiniteGroup group, std::vector<GroupSubset> subgroups,
                                 std::vector<std::string> labels)
    : group_(std::move(group)),
      subgroups_(std::move(subgroups)),
      poset_(InclusionPoset(subgroups_, labels)),
      cardinality_(poset_, Orders(subgroups_, false)),
      log_cardinality_(poset_, Orders(subgroups_, true)) {}

std::optional<Index> SubgroupLattice::Find(const GroupSubset& elements) const {
  GroupSubset sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  for (Index i = 0; i < subgroups_.size(); ++i) {
    if (subgroups_[i] == sorted) return i;
  }
  return std::nullopt;
}

Index SubgroupLattice::Generated(const std::vector<std::string>& element_names) const {
  std::vector<int> gens;
  for (const auto& name : element_names) gens.push_back(group_.IndexOf(name));
  return *Find(Closure(group_, gens));
}

Index SubgroupLattice::JoinOf(Index a, Index b) const {
  std::vector<int> gens = subgroup(a);
  gens.insert(gens.end(), subgroup(b).begin(), subgroup(b).end());
  return *Find(Closure(group_, gens));
}

SubgroupLattice EnumerateSubgroups(const FiniteGroup& g, int order_cap) {
  if (g.order() > order_cap) {
    throw Error(ErrorCode::kOrderCapExceeded,
                "group order " + std::to_string(g.order()) + " exceeds cap " +
                    std::to_string(order_cap));
  }
  // Subgroup -> generating set that first produced it.
  std::map<GroupSubset, std::vector<int>> found;
  std::vector<GroupSubset> worklist;
  auto add = [&](const std::vector<int>& gens) {
    GroupSubset h = Closure(g, gens);
    if (found.emplace(h, gens).second) worklist.push_back(h);
  };
  for (int e = 0; e < g.order(); ++e) add({e});

  // Join every newly found subgroup with every known one until nothing new
  // appears.
  for (std::size_t head = 0; head < worklist.size(); ++head) {
    const GroupSubset current = worklist[head];
    for (std::size_t other = 0; other < head; ++other) {
      const std::vector<int>& a = found.at(current);
      const std::vector<int>& b = found.at(worklist[other]);
      std::vector<int> gens = a;
      GroupSubset span = Closure(g, gens);
      for (int s : b) {
        if (!std::binary_search(span.begin(), span.end(), s)) {
          gens.push_back(s);
          span = Closure(g, gens);
        }
      }
      add(gens);
    }
  }

  std::vector<GroupSubset> subgroups;
  for (const auto& [h, gens] : found) subgroups.push_back(h);
  std::sort(subgroups.begin(), subgroups.end(),
            [](const GroupSubset& a, const GroupSubset& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  std::vector<std::string> labels;
  for (const auto& h : subgroups) {
    std::string label = "<";
    const auto& gens = found.at(h);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i) label += ',';
      label += g.name(gens[i]);
    }
    labels.push_back(label + ">");
  }
  return SubgroupLattice(g, std::move(subgroups), std::move(labels));
}

double SubgroupMetric(const SubgroupLattice& l, Index x, Index y) {
  l.poset()->CheckIndex(x);
  l.poset()->CheckIndex(y);
  const GroupSubset& a = l.subgroup(x);
  const GroupSubset& b = l.subgroup(y);
  GroupSubset common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(common));
  const double cx = static_cast<double>(l.subgroup(x).size());
  const double cy = static_cast<double>(l.subgroup(y).size());
  const double cc = static_cast<double>(common.size());
  return std::log(cx * cy / (cc * cc));
}

ProductFormulaReport CheckProductFormula(const SubgroupLattice& l) {
  ProductFormulaReport report;
  const FiniteGroup& g = l.group();
  const bool abelian = g.IsAbelian();
  for (Index x = 0; x < l.size(); ++x) {
    for (Index y = x; y < l.size(); ++y) {
      const GroupSubset& a = l.subgroup(x);
      const GroupSubset& b = l.subgroup(y);
      GroupSubset common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(common));
      const long ca = static_cast<long>(a.size());
      const long cb = static_cast<long>(b.size());
      const long cc = static_cast<long>(common.size());
      const long cp = static_cast<long>(ProductSet(g, a, b).size());
      ++report.pairs_checked;
      if (ca * cb != cp * cc) {
        report.witnesses.push_back({x, y, "product", ca * cb, cp * cc});
      }
      if (ca + cb > cc + cp) {
        report.witnesses.push_back({x, y, "sum", ca + cb, cc + cp});
      }
      if (abelian) {
        const long cj = static_cast<long>(l.subgroup(l.JoinOf(x, y)).size());
        if (cj != cp) report.witnesses.push_back({x, y, "abelian_join", cj, cp});
      }
    }
  }
  report.holds = report.witnesses.empty();
  return report;
}

std::vector<std::string> GroupSuiteNames() {
  std::vector<std::string> names;
  for (int n = 1; n <= 12; ++n) names.push_back("Z" + std::to_string(n));
  names.insert(names.end(), {"Z2xZ2", "S3", "D4", "S4"});
  return names;
}

}  // namespace posetval
