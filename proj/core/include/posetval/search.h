#ifndef POSETVAL_SEARCH_H_
#define POSETVAL_SEARCH_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "posetval/metric.h"
#include "posetval/poset.h"
#include "posetval/valuation.h"

namespace posetval {

enum class SearchTarget {
  // Jiang-Conrath distance violates the triangle inequality.
  kJcTriangle,
  // v = cumulative ideal mass is a lower valuation but log v is not.
  kLogLowerFails,
  // v = cumulative ideal mass is a lower valuation but log v is not upper.
  kLogUpperFails,
};

std::string_view ToString(SearchTarget t);
// Accepts jc_triangle, log_lower_fails, log_upper_fails. Throws
// Error(kUnknownTarget).
SearchTarget ParseSearchTarget(std::string_view name);

inline constexpr std::uint64_t kDefaultBudget = 100000;

struct SearchOptions {
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
  // Triangle violations must exceed this slack to count.
  double min_slack = 1e-6;
  // For kJcTriangle: only accept a violation of d(x,z) <= d(x,y) + d(y,z)
  // on exactly this (x, y, z).
  std::optional<std::array<Index, 3>> triple;
  double tolerance = kDefaultTolerance;
};

struct Counterexample {
  WeightFunction weights;
  std::uint64_t iteration;  // 0-based draw that produced the hit
  std::variant<MetricWitness, Witness> witness;
};

// Draws normalized weight vectors on the poset's elements, first by seeded
// uniform sampling of the simplex (half the budget), then over a coarse
// lattice grid of the simplex, and returns the first one exhibiting the
// target. Deterministic in (seed, budget). Throws Error(kInvalidArgument)
// for a zero budget or an empty poset.
std::optional<Counterexample> SearchCounterexample(const PosetPtr& p,
                                                   SearchTarget target,
                                                   const SearchOptions& options = {});

}  // namespace posetval

#endif  // POSETVAL_SEARCH_H_
