// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "posetval/catalog.h"
#include "posetval/error.h"
#include "posetval/group.h"
#include "posetval/metric.h"
#include "posetval/poset.h"
#include "posetval/search.h"
#include "posetval/valuation.h"
#include "support/generators.h"

namespace posetval {
namespace {

using testing::Rng;

constexpr std::uint64_t kSuiteSeed = 20240611;
constexpr std::size_t kSuiteSize = 2000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failure messages; only the first few are kept for the report.
class Tally {
 public:
  void Fail(const std::string& what) {
    if (failures_++ < 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  void Check(bool ok, const std::string& what) {
    if (!ok) Fail(what);
  }
  bool ok() const { return failures_ == 0; }
  std::string Summary(const std::string& counts) const {
    if (ok()) return counts;
    return counts + ", " + std::to_string(failures_) + " failures: " + first_;
  }

 private:
  std::size_t failures_ = 0;
  std::string first_;
};

const std::vector<testing::SuiteCase>& Suite() {
  static const auto* suite =
      new std::vector<testing::SuiteCase>(testing::RandomValuationSuite(kSuiteSeed, kSuiteSize));
  return *suite;
}

bool IsIsotone(const Valuation& v) {
  const Poset& p = v.poset();
  for (Index x = 0; x < p.size(); ++x) {
    for (Index y = 0; y < p.size(); ++y) {
      if (p.Less(x, y) && !(v(x) < v(y))) return false;
    }
  }
  return true;
}

bool IsAntitone(const Valuation& v) {
  const Poset& p = v.poset();
  for (Index x = 0; x < p.size(); ++x) {
    for (Index y = 0; y < p.size(); ++y) {
      if (p.Less(x, y) && !(v(x) > v(y))) return false;
    }
  }
  return true;
}

MetricRow RowFor(const Valuation& v, bool lower) {
  const bool isotone = UsesIsotoneBranch(v.monotonicity());
  if (lower) return isotone ? MetricRow::kIsotoneLower : MetricRow::kAntitoneLower;
  return isotone ? MetricRow::kIsotoneUpper : MetricRow::kAntitoneUpper;
}

Outcome P1Counterexample() {
  Poset p1 = NamedPoset("P1");
  auto p = std::make_shared<const Poset>(p1);
  ValuationVerdict verdict = CheckValuation(CardinalIdeal(p));
  const Index d = p->IndexOf("d");
  const Index e = p->IndexOf("e");
  for (const Witness& w : verdict.witnesses) {
    if (w.axiom == Axiom::kLower && w.x == d && w.y == e) {
      const bool exact = w.lhs == 10.0 && w.rhs == 9.0;
      std::ostringstream s;
      s << "is_lower=" << verdict.is_lower << ", witness (d,e) " << w.lhs << " vs " << w.rhs;
      return {!verdict.is_lower && exact, s.str()};
    }
  }
  return {false, "no lower witness on (d,e)"};
}

Outcome TableSoundness() {
  Tally t;
  std::size_t checked = 0;
  for (const auto& c : Suite()) {
    ValuationVerdict verdict = CheckValuation(c.v);
    for (bool lower : {true, false}) {
      if (!(lower ? verdict.is_lower : verdict.is_upper)) continue;
      DistanceTable table = InduceMetric(c.v, RowFor(c.v, lower));
      ++checked;
      t.Check(table.verdict == MetricVerdict::kMetric,
              c.origin + " row " + std::to_string(static_cast<int>(table.row)) + " gave " +
                  std::string(ToString(table.verdict)));
    }
  }
  t.Check(checked >= 500, "only " + std::to_string(checked) + " valuations passed a row");
  return {t.ok(), t.Summary(std::to_string(checked) + " (valuation, row) pairs")};
}

// Bottom, two or three antichain layers with dense random edges between
// consecutive layers, top. At most 8 elements.
PosetPtr RandomLayeredPoset(Rng& rng) {
  std::uniform_int_distribution<int> layers(2, 3);
  std::bernoulli_distribution edge(0.75);
  const int count = layers(rng);
  std::uniform_int_distribution<int> width(1, count == 2 ? 3 : 2);
  std::vector<std::vector<std::string>> levels{{"bot"}};
  for (int l = 0; l < count; ++l) {
    levels.emplace_back();
    for (int i = width(rng); i > 0; --i) {
      levels.back().push_back("l" + std::to_string(l) + "_" + std::to_string(i));
    }
  }
  levels.push_back({"top"});
  std::vector<NamedPair> pairs;
  for (std::size_t l = 0; l + 1 < levels.size(); ++l) {
    for (const std::string& lo : levels[l]) {
      for (const std::string& hi : levels[l + 1]) {
        if (l == 0 || l + 2 == levels.size() || edge(rng)) pairs.emplace_back(lo, hi);
      }
    }
  }
  // Keep every element below top and above bot.
  for (std::size_t l = 1; l + 1 < levels.size(); ++l) {
    for (const std::string& x : levels[l]) {
      pairs.emplace_back("bot", x);
      pairs.emplace_back(x, "top");
    }
  }
  return std::make_shared<const Poset>(MakePoset(pairs));
}

Outcome DeltaSufficiency() {
  std::vector<PosetPtr> posets;
  for (const auto& c : Suite()) posets.push_back(c.v.poset_ptr());
  Rng rng(kSuiteSeed + 3);
  for (int i = 0; i < 3000; ++i) {
    posets.push_back(testing::RandomBoundedPoset(rng, 4 + i % 3, 0.15 + 0.05 * (i % 7)));
  }
  for (int i = 0; i < 2000; ++i) posets.push_back(RandomLayeredPoset(rng));
  for (const char* name : {"P1", "M2", "N5", "M3"}) posets.push_back(NamedPosetPtr(name));
  Tally t;
  std::size_t bounded = 0, small_delta = 0, lattices = 0, wide = 0;
  for (const PosetPtr& p : posets) {
    Classification c = Classify(*p);
    if (!c.is_bounded) continue;
    ++bounded;
    if (c.delta_wedge <= 1) {
      ++small_delta;
      t.Check(CheckValuation(CardinalIdeal(p)).is_lower,
              "delta_wedge <= 1 but |ideal| is not lower on " + std::to_string(p->size()) +
                  " elements");
    }
    if (c.delta_wedge >= 2) ++wide;
    if (c.is_lattice) ++lattices;
    const bool zero = c.delta_wedge == 0 && c.delta_vee == 0;
    t.Check(zero == c.is_lattice, "lattice/delta mismatch");
  }
  return {t.ok(), t.Summary(std::to_string(bounded) + " bounded posets, " +
                            std::to_string(small_delta) + " with delta_wedge <= 1, " +
                            std::to_string(wide) + " with delta_wedge >= 2, " +
                            std::to_string(lattices) + " lattices")};
}

Outcome LogUpperClosure() {
  Tally t;
  std::size_t checked = 0, isotone = 0, antitone = 0;
  for (const auto& c : Suite()) {
    bool positive = true;
    for (double x : c.v.values()) positive = positive && x > 0;
    if (!positive || !CheckValuation(c.v).is_upper) continue;
    ++checked;
    (UsesIsotoneBranch(c.v.monotonicity()) ? isotone : antitone)++;
    t.Check(CheckValuation(LogTransform(c.v)).is_upper, c.origin + " lost upper under log");
  }
  t.Check(checked >= 500, "only " + std::to_string(checked) + " positive upper valuations");
  t.Check(isotone > 0 && antitone > 0, "missing isotone or antitone cases");
  PosetPtr m2 = NamedPosetPtr("M2");
  for (SearchTarget target : {SearchTarget::kLogLowerFails, SearchTarget::kLogUpperFails}) {
    t.Check(SearchCounterexample(m2, target).has_value(),
            "no M2 hit for " + std::string(ToString(target)));
  }
  return {t.ok(), t.Summary(std::to_string(checked) + " positive upper valuations (" +
                            std::to_string(isotone) + " isotone, " +
                            std::to_string(antitone) + " antitone), M2 searches run")};
}

Outcome AffineInterchange() {
  Tally t;
  std::size_t checked = 0;
  for (const auto& c : Suite()) {
    ValuationVerdict before = CheckValuation(c.v);
    for (double k : {-3.0, -1.0, -0.25}) {
      Valuation w = AffineTransform(c.v, k, 5.0);
      ValuationVerdict after = CheckValuation(w);
      ++checked;
      t.Check(after.is_lower == before.is_upper && after.is_upper == before.is_lower,
              c.origin + ": lower/upper did not swap for k=" + std::to_string(k));
      t.Check(IsIsotone(w) == IsAntitone(c.v) && IsAntitone(w) == IsIsotone(c.v),
              c.origin + ": direction did not swap");
    }
  }
  return {t.ok(), t.Summary(std::to_string(checked) + " transformed valuations")};
}

Outcome Groups() {
  Tally t;
  auto count = [](const char* name) {
    return EnumerateSubgroups(FiniteGroup::Named(name)).size();
  };
  t.Check(count("S3") == 6, "S3 count " + std::to_string(count("S3")));
  t.Check(count("Z2xZ2") == 5, "Z2xZ2 count " + std::to_string(count("Z2xZ2")));
  t.Check(count("S4") == 30, "S4 count " + std::to_string(count("S4")));
  std::size_t groups = 0, abelian = 0;
  for (const std::string& name : GroupSuiteNames()) {
    SubgroupLattice l = EnumerateSubgroups(FiniteGroup::Named(name));
    ++groups;
    t.Check(CheckProductFormula(l).holds, name + ": product formula");
    t.Check(CheckValuation(l.cardinality()).is_lower, name + ": c not lower");
    ValuationVerdict lg = CheckValuation(l.log_cardinality());
    t.Check(lg.is_lower, name + ": log c not lower");
    if (l.group().IsAbelian()) {
      ++abelian;
      t.Check(lg.is_upper, name + ": log c not upper");
      t.Check(ComputeBoundGap(l.log_cardinality()).equality, name + ": no bound equality");
    }
  }
  SubgroupLattice s3 = EnumerateSubgroups(FiniteGroup::Symmetric(3));
  const double d = SubgroupMetric(s3, s3.Generated({"(12)"}), s3.Generated({"(123)"}));
  t.Check(std::abs(d - std::log(6.0)) <= 1e-9, "S3 metric " + std::to_string(d));
  return {t.ok(), t.Summary(std::to_string(groups) + " groups (" + std::to_string(abelian) +
                            " abelian), S3 distance " + std::to_string(d))};
}

Outcome BoundGapCheck() {
  Tally t;
  std::size_t checked = 0, equal = 0;
  for (const auto& c : Suite()) {
    ValuationVerdict verdict = CheckValuation(c.v);
    if (!verdict.is_lower && !verdict.is_upper) continue;
    BoundGap g = ComputeBoundGap(c.v);
    ++checked;
    for (double gap : g.gap.data()) t.Check(gap >= -1e-9, c.origin + ": negative gap");
    t.Check(g.equality == (verdict.is_lower && verdict.is_upper),
            c.origin + ": equality flag disagrees with lower and upper");
    if (g.equality) ++equal;
  }
  SubgroupLattice v4 = EnumerateSubgroups(FiniteGroup::Named("Z2xZ2"));
  t.Check(ComputeBoundGap(v4.log_cardinality()).equality, "Z2xZ2 log c: no equality");

  PosetPtr m2 = NamedPosetPtr("M2");
  auto hit = SearchCounterexample(m2, SearchTarget::kLogUpperFails);
  if (!hit) {
    t.Fail("no M2 weighting found");
  } else {
    Valuation lg = LogTransform(CumulativeLower(m2, hit->weights));
    ValuationVerdict verdict = CheckValuation(lg);
    t.Check(verdict.is_lower && !verdict.is_upper, "M2 searched log is not lower-only");
    t.Check(!ComputeBoundGap(lg).equality, "M2 searched log: unexpected equality");
  }
  return {t.ok(), t.Summary(std::to_string(checked) + " valuations, " + std::to_string(equal) +
                            " with equality; Z2xZ2 positive, M2 negative")};
}

Outcome JiangConrath() {
  Tally t;
  PosetPtr jc = NamedPosetPtr("JC");
  const Index z1 = jc->IndexOf("z1"), z2 = jc->IndexOf("z2"), z3 = jc->IndexOf("z3");
  SearchOptions options;
  options.triple = std::array<Index, 3>{z1, z2, z3};
  auto hit = SearchCounterexample(jc, SearchTarget::kJcTriangle, options);
  double slack = 0;
  if (!hit) {
    t.Fail("no JC triangle violation found");
  } else {
    JCDistanceTable table = JiangConrathDistance(jc, hit->weights);
    slack = table.d.at(z1, z3) - (table.d.at(z1, z2) + table.d.at(z2, z3));
    t.Check(slack > 1e-6, "slack " + std::to_string(slack));
  }
  Rng rng(kSuiteSeed + 8);
  std::size_t trees = 0;
  for (int i = 0; i < 300; ++i) {
    PosetPtr tree = testing::RandomTree(rng, 1 + i % 8);
    WeightFunction w(tree, testing::RandomDistribution(rng, tree->size()));
    ++trees;
    t.Check(JiangConrathDistance(tree, w).verdict == MetricVerdict::kMetric,
            "tree with " + std::to_string(tree->size()) + " nodes is not metric");
  }
  std::ostringstream s;
  s << "witness slack " << slack;
  if (hit) s << " at iteration " << hit->iteration;
  s << ", " << trees << " trees";
  return {t.ok(), t.Summary(s.str())};
}

Outcome CrossDefinition() {
  Rng rng(kSuiteSeed + 9);
  std::uniform_int_distribution<int> kind(0, 2);
  Tally t;
  std::size_t lattices = 0, lower = 0, upper = 0;
  for (int i = 0; i < 400; ++i) {
    PosetPtr p = testing::RandomLattice(rng, 3 + i % 2, 2 + i % 4);
    Valuation v = [&] {
      switch (kind(rng)) {
        case 0:
          return CardinalIdeal(p);
        case 1:
          return CumulativeLower(p, WeightFunction(p, testing::RandomWeights(rng, p->size(),
                                                                             0.1, 2.0)));
        default:
          return Valuation(p, testing::RandomStrictlyIsotone(rng, *p));
      }
    }();
    if (v.monotonicity() != Monotonicity::kStrictlyIsotone) continue;
    ++lattices;
    ValuationVerdict def = CheckValuation(v);
    AlternateVerdict mon = CheckValuationMonjardet(v);
    AlternateVerdict lec = CheckValuationLeclerc(v);
    t.Check(mon.is_lower == def.is_lower && lec.is_lower == def.is_lower,
            "is_lower disagreement on " + std::to_string(p->size()) + " elements");
    t.Check(mon.is_upper == def.is_upper && lec.is_upper == def.is_upper,
            "is_upper disagreement on " + std::to_string(p->size()) + " elements");
    lower += def.is_lower;
    upper += def.is_upper;
  }
  t.Check(lattices >= 200, "only " + std::to_string(lattices) + " lattices");
  return {t.ok(), t.Summary(std::to_string(lattices) + " lattices (" + std::to_string(lower) +
                            " lower, " + std::to_string(upper) + " upper)")};
}

std::string Capture(const std::string& command, int* status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    *status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  *status = pclose(pipe);
  return out;
}

Outcome Determinism() {
  const std::string cli = POSETVAL_CLI_PATH;
  const std::vector<std::string> commands{
      "--seed 11 --format json search --fixture JC --target jc_triangle",
      "--seed 5 --format json search --fixture M2 --target log_upper_fails",
      "--seed 3 --format json jc --fixture JC --search --triple z1,z2,z3",
      "--format json group --group S4",
      "--format json metric --fixture P1 --cardinal-filter --bounds",
  };
  Tally t;
  std::size_t bytes = 0;
  for (const std::string& args : commands) {
    const std::string command = "\"" + cli + "\" " + args;
    int first_status = 0, second_status = 0;
    const std::string first = Capture(command, &first_status);
    const std::string second = Capture(command, &second_status);
    bytes += first.size();
    t.Check(!first.empty() && first.front() == '{', "no report from: " + args);
    t.Check(first == second && first_status == second_status, "reports differ: " + args);
  }
  return {t.ok(), t.Summary(std::to_string(commands.size()) + " commands, " +
                            std::to_string(bytes) + " bytes each run")};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace posetval

int main() {
  using posetval::Criterion;
  const std::vector<Criterion> criteria{
      {"p1 counterexample", posetval::P1Counterexample},
      {"distance table soundness", posetval::TableSoundness},
      {"delta sufficiency", posetval::DeltaSufficiency},
      {"log upper closure", posetval::LogUpperClosure},
      {"affine interchange", posetval::AffineInterchange},
      {"group examples", posetval::Groups},
      {"bound gap", posetval::BoundGapCheck},
      {"jiang-conrath", posetval::JiangConrath},
      {"cross-definition agreement", posetval::CrossDefinition},
      {"determinism", posetval::Determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    posetval::Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].name
              << ": " << o.detail << " [" << std::fixed;
    std::cout.precision(2);
    std::cout << seconds << "s]" << std::defaultfloat << "\n";
    std::cout.precision(6);
  }
  return failed == 0 ? 0 : 1;
}
