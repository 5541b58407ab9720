#ifndef POSETVAL_METRIC_H_
#define POSETVAL_METRIC_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "posetval/poset.h"
#include "posetval/valuation.h"

namespace posetval {

// Dense square matrix of distances indexed by element.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n, double fill = 0.0)
      : n_(n), data_(n * n, fill) {}

  std::size_t size() const { return n_; }
  double& at(Index i, Index j) { return data_[i * n_ + j]; }
  double at(Index i, Index j) const { return data_[i * n_ + j]; }
  std::span<const double> data() const { return data_; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

// Rows of the valuation-to-metric table:
//   1 strictly isotone lower   d = v(x) + v(y) - 2 v-(x,y)
//   2 strictly antitone lower  d = v(x) + v(y) - 2 v+(x,y)
//   3 strictly isotone upper   d = 2 v+(x,y) - v(x) - v(y)
//   4 strictly antitone upper  d = 2 v-(x,y) - v(x) - v(y)
// Non-strict monotone valuations use the same formulas.
enum class MetricRow {
  kIsotoneLower = 1,
  kAntitoneLower = 2,
  kIsotoneUpper = 3,
  kAntitoneUpper = 4,
};

enum class MetricVerdict { kMetric, kQuasimetric, kNotQuasimetric };

std::string_view ToString(MetricVerdict v);

enum class MetricAxiom {
  kNegative,    // d(x,y) < 0
  kDiagonal,    // d(x,x) != 0
  kSymmetry,    // d(x,y) != d(y,x)
  kSeparation,  // x != y with d(x,y) == 0
  kTriangle,    // d(x,z) > d(x,y) + d(y,z)
};

std::string_view ToString(MetricAxiom a);

// For kTriangle: the triple is (x, y, z) with y in the middle,
// lhs = d(x,z), rhs = d(x,y) + d(y,z). For pair axioms z is empty,
// lhs = d(x,y) and rhs is the value it was compared against.
struct MetricWitness {
  MetricAxiom axiom;
  Index x;
  Index y;
  std::optional<Index> z;
  double lhs;
  double rhs;
};

struct AxiomReport {
  MetricVerdict verdict = MetricVerdict::kMetric;
  std::vector<MetricWitness> witnesses;  // sorted by (axiom, x, y, z)
};

// Exhaustive scan of all pairs and ordered triples (degenerate ones
// included). Elements flagged in `excluded` are skipped entirely.
AxiomReport VerifyAxioms(const DistanceMatrix& d,
                         double tolerance = kDefaultTolerance,
                         const std::vector<bool>& excluded = {});

struct DistanceTable {
  PosetPtr poset;
  Valuation valuation;
  MetricRow row;
  DistanceMatrix d;
  MetricVerdict verdict;
  std::vector<MetricWitness> witnesses;
};

// The row the valuation satisfies, preferring lower over upper. Throws
// Error(kRowMismatch) when v is neither, or Error(kDomainConditionFailed)
// when the row's intersection condition is what fails.
MetricRow SelectRow(const Valuation& v);

// Fills d by the row's formula and verifies the metric axioms. When `row` is
// given it must match v's direction and v must satisfy that row's valuation
// inequality and intersection condition.
DistanceTable InduceMetric(const Valuation& v,
                           std::optional<MetricRow> row = std::nullopt);

struct BoundGap {
  // bound(x,y) - d(x,y) with bound = v+ - v- (isotone) or v- - v+
  // (antitone). May be +inf where the bound is unbounded.
  DistanceMatrix gap;
  // Every gap is within tolerance of zero.
  bool equality = false;
  MetricRow row;
};

BoundGap ComputeBoundGap(const Valuation& v);

struct JCDistanceTable {
  PosetPtr poset;
  WeightFunction weights;
  std::vector<double> probability;  // cumulative mass of each ideal
  std::vector<double> information;  // -log p, +inf when p == 0
  std::vector<bool> excluded;       // elements with infinite information
  DistanceMatrix d;                 // +inf in rows/columns of excluded elements
  MetricVerdict verdict;
  std::vector<MetricWitness> witnesses;
  std::vector<std::string> warnings;
};

// d(x,y) = I(x) + I(y) - 2 I+(x,y) with I = -log p and I+ taken over common
// upper bounds of the antitone I. Throws Error(kNotNormalized) and
// Error(kEmptyFilterIntersection).
JCDistanceTable JiangConrathDistance(const PosetPtr& p, const WeightFunction& t,
                                     double tolerance = kDefaultTolerance);

}  // namespace posetval

#endif  // POSETVAL_METRIC_H_
