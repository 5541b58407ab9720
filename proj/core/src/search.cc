#include "posetval/search.h"

#include <cmath>
#include <random>

#include "posetval/error.h"

namespace posetval {

std::string_view ToString(SearchTarget t) {
  switch (t) {
    case SearchTarget::kJcTriangle: return "jc_triangle";
    case SearchTarget::kLogLowerFails: return "log_lower_fails";
    case SearchTarget::kLogUpperFails: return "log_upper_fails";
  }
  return "unknown";
}

SearchTarget ParseSearchTarget(std::string_view name) {
  for (SearchTarget t : {SearchTarget::kJcTriangle, SearchTarget::kLogLowerFails,
                         SearchTarget::kLogUpperFails}) {
    if (ToString(t) == name) return t;
  }
  throw Error(ErrorCode::kUnknownTarget,
              "unknown search target '" + std::string(name) + "'");
}

namespace {

// Uniform point of the probability simplex from i.i.d. exponentials. Built
// directly on the engine output so the stream is identical everywhere.
std::vector<double> SampleSimplex(std::mt19937_64& rng, std::size_t n) {
  std::vector<double> w(n);
  double total = 0;
  for (double& x : w) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
    x = -std::log1p(-u);
    total += x;
  }
  if (total <= 0) {
    w.assign(n, 1.0 / n);
    return w;
  }
  for (double& x : w) x /= total;
  return w;
}

double Binomial(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Lexicographic walk over compositions of `total` into `parts` parts.
class CompositionWalker {
 public:
  CompositionWalker(std::size_t parts, std::size_t total) : counts_(parts, 0) {
    counts_.back() = total;
  }

  const std::vector<std::size_t>& counts() const { return counts_; }

  bool Next() {
    const std::size_t n = counts_.size();
    if (n < 2) return false;
    std::size_t i = n - 1;
    while (i > 0 && counts_[i] == 0) --i;
    if (i == 0) return false;
    // Shift one unit from the rightmost nonzero slot i to slot i - 1 and
    // park what is left of slot i at the end.
    --counts_[i];
    ++counts_[i - 1];
    const std::size_t rest = counts_[i];
    counts_[i] = 0;
    counts_[n - 1] = rest;
    return true;
  }

 private:
  std::vector<std::size_t> counts_;
};

struct Evaluator {
  const PosetPtr& poset;
  SearchTarget target;
  const SearchOptions& options;

  std::optional<std::variant<MetricWitness, Witness>> operator()(
      const WeightFunction& t) const {
    if (target == SearchTarget::kJcTriangle) return Triangle(t);
    return LogFailure(t);
  }

  std::optional<std::variant<MetricWitness, Witness>> Triangle(
      const WeightFunction& t) const {
    JCDistanceTable table = JiangConrathDistance(poset, t, options.tolerance);
    if (options.triple) {
      const auto [x, y, z] = *options.triple;
      if (table.excluded[x] || table.excluded[y] || table.excluded[z]) {
        return std::nullopt;
      }
      const double direct = table.d.at(x, z);
      const double detour = table.d.at(x, y) + table.d.at(y, z);
      if (direct - detour > options.min_slack) {
        return MetricWitness{MetricAxiom::kTriangle, x, y, z, direct, detour};
      }
      return std::nullopt;
    }
    for (const MetricWitness& w : table.witnesses) {
      if (w.axiom == MetricAxiom::kTriangle && w.lhs - w.rhs > options.min_slack) {
        return w;
      }
    }
    return std::nullopt;
  }

  std::optional<std::variant<MetricWitness, Witness>> LogFailure(
      const WeightFunction& t) const {
    Valuation mass = CumulativeLower(poset, t);
    for (double m : mass.values()) {
      if (!(m > 0)) return std::nullopt;
    }
    if (!CheckValuation(mass).is_lower) return std::nullopt;
    Valuation logged = LogTransform(mass);
    if (logged.monotonicity() == Monotonicity::kNone) return std::nullopt;
    ValuationVerdict verdict = CheckValuation(logged);
    const bool lower = target == SearchTarget::kLogLowerFails;
    if (lower ? verdict.is_lower : verdict.is_upper) return std::nullopt;
    for (const Witness& w : verdict.witnesses) {
      const bool match = lower ? (w.axiom == Axiom::kLower || w.axiom == Axiom::kLowerDomain)
                               : (w.axiom == Axiom::kUpper || w.axiom == Axiom::kUpperDomain);
      if (match) return w;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<Counterexample> SearchCounterexample(const PosetPtr& p,
                                                   SearchTarget target,
                                                   const SearchOptions& options) {
  if (options.budget == 0) {
    throw Error(ErrorCode::kInvalidArgument, "search budget must be positive");
  }
  if (!p || p->empty()) throw Error(ErrorCode::kInvalidArgument, "empty poset");
  if (options.triple) {
    for (Index i : *options.triple) p->CheckIndex(i);
  }
  const std::size_t n = p->size();
  Evaluator evaluate{p, target, options};

  std::uint64_t iteration = 0;
  const std::uint64_t random_draws = (options.budget + 1) / 2;
  std::mt19937_64 rng(options.seed);
  for (; iteration < random_draws; ++iteration) {
    WeightFunction t(p, SampleSimplex(rng, n));
    if (auto hit = evaluate(t)) return Counterexample{std::move(t), iteration, *hit};
  }

  // Finest grid resolution whose point count fits the remaining budget.
  const std::uint64_t remaining = options.budget - random_draws;
  std::size_t resolution = 1;
  while (n > 1 && resolution < 1000000 &&
         Binomial(resolution + 1 + n - 1, n - 1) <= static_cast<double>(remaining)) {
    ++resolution;
  }
  CompositionWalker walker(n, resolution);
  do {
    if (iteration >= options.budget) break;
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = static_cast<double>(walker.counts()[i]) / static_cast<double>(resolution);
    }
    WeightFunction t(p, std::move(w));
    if (auto hit = evaluate(t)) return Counterexample{std::move(t), iteration, *hit};
    ++iteration;
  } while (walker.Next());
  return std::nullopt;
}

}  // namespace posetval
