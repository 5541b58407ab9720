#ifndef POSETVAL_VALUATION_H_
#define POSETVAL_VALUATION_H_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "posetval/poset.h"

namespace posetval {

inline constexpr double kDefaultTolerance = 1e-9;

using PosetPtr = std::shared_ptr<const Poset>;

enum class Monotonicity {
  kStrictlyIsotone,
  kIsotone,  // isotone, not strictly
  kStrictlyAntitone,
  kAntitone,  // antitone, not strictly
  kConstant,
  kNone,
};

std::string_view ToString(Monotonicity m);

// Constant functions take the isotone branch everywhere.
constexpr bool UsesIsotoneBranch(Monotonicity m) {
  return m == Monotonicity::kStrictlyIsotone || m == Monotonicity::kIsotone ||
         m == Monotonicity::kConstant;
}
constexpr bool UsesAntitoneBranch(Monotonicity m) {
  return m == Monotonicity::kStrictlyAntitone || m == Monotonicity::kAntitone;
}
constexpr bool IsStrict(Monotonicity m) {
  return m == Monotonicity::kStrictlyIsotone ||
         m == Monotonicity::kStrictlyAntitone;
}

// Scans every comparable pair. A difference counts as zero when its
// magnitude is within `tolerance`. On a poset without comparable pairs a
// non-constant function is reported strictly isotone (vacuously).
Monotonicity ClassifyMonotonicity(const Poset& p, std::span<const double> values,
                                  double tolerance = kDefaultTolerance);

// A total real-valued function on a poset together with its monotonicity.
class Valuation {
 public:
  // Throws Error(kNotTotal) unless there is exactly one value per element.
  Valuation(PosetPtr poset, std::vector<double> values,
            double tolerance = kDefaultTolerance);

  const Poset& poset() const { return *poset_; }
  const PosetPtr& poset_ptr() const { return poset_; }
  std::span<const double> values() const { return values_; }
  double operator()(Index x) const { return values_.at(x); }
  Monotonicity monotonicity() const { return monotonicity_; }
  double tolerance() const { return tolerance_; }

 private:
  PosetPtr poset_;
  std::vector<double> values_;
  Monotonicity monotonicity_;
  double tolerance_;
};

// Extremal value over common lower bounds: sup for isotone f, inf for
// antitone f. An empty bound set yields -inf (sup) or +inf (inf).
double FMinus(const Valuation& v, Index x, Index y);
// Extremal value over common upper bounds: inf for isotone f, sup for
// antitone f.
double FPlus(const Valuation& v, Index x, Index y);

// Same computations for callers holding raw values with a known direction.
double FMinus(const Poset& p, std::span<const double> values, bool isotone,
              Index x, Index y);
double FPlus(const Poset& p, std::span<const double> values, bool isotone,
             Index x, Index y);

enum class Axiom {
  kLower,
  kUpper,
  kLowerDomain,  // required ideal/filter intersection is empty
  kUpperDomain,
};

std::string_view ToString(Axiom a);

// One failed inequality. For kLower/kUpper, lhs <= rhs was expected and
// violated beyond tolerance: lower has lhs = v(x)+v(y), rhs = v-(x,y)+v+(x,y);
// upper has the sides swapped. For domain failures lhs = v(x)+v(y) and rhs
// is the empty-set value of the missing bound (+inf or -inf). `z` is only
// set by the alternate checkers, which quantify over a third element.
struct Witness {
  Index x;
  Index y;
  std::optional<Index> z;
  double lhs;
  double rhs;
  Axiom axiom;
};

struct ValuationVerdict {
  bool is_lower = false;
  bool is_upper = false;
  bool lower_domain_ok = false;
  bool upper_domain_ok = false;
  bool domain_condition_ok = false;  // both of the above
  std::vector<Witness> witnesses;    // sorted by (x, y, axiom)
};

// Checks both inequalities of the general (isotone or antitone) lower and
// upper valuation definition, including the nonempty ideal/filter
// intersection conditions, over all pairs x < y (by index). Throws
// Error(kNonMonotone) for a non-monotone valuation.
ValuationVerdict CheckValuation(const Valuation& v);

// Verdict of a checker whose two sides have separate preconditions; a side
// whose precondition fails is left empty.
struct AlternateVerdict {
  std::optional<bool> is_lower;
  std::optional<bool> is_upper;
  std::vector<Witness> witnesses;
};

// Isotone-only form quantifying over a third element: lower (needs a least
// element) v(x)+v(y) <= v-(x,y)+v(z) for all z above x and y; upper (needs a
// greatest element) v+(x,y)+v(z) <= v(x)+v(y) for all z below x and y.
// Throws Error(kPreconditionUnmet) when v is not isotone or neither side
// applies.
AlternateVerdict CheckValuationMonjardet(const Valuation& v);

// Semilattice form for strictly isotone v: lower (meet-semilattice)
// v(x)+v(y) <= v(x v y)+v(x ^ y) whenever the join exists; upper
// (join-semilattice) v(x v y)+v(x ^ y) <= v(x)+v(y) whenever the meet
// exists. Throws Error(kPreconditionUnmet) when v is not strictly isotone
// or neither side applies.
AlternateVerdict CheckValuationLeclerc(const Valuation& v);

// Nonnegative per-element weights.
class WeightFunction {
 public:
  // Throws Error(kNotTotal) on a size mismatch and Error(kNegativeWeight)
  // for negative or non-finite weights.
  WeightFunction(PosetPtr poset, std::vector<double> weights,
                 double tolerance = kDefaultTolerance);

  static WeightFunction Uniform(PosetPtr poset);  // 1/n each
  static WeightFunction Ones(PosetPtr poset);

  const Poset& poset() const { return *poset_; }
  const PosetPtr& poset_ptr() const { return poset_; }
  std::span<const double> weights() const { return weights_; }
  double operator()(Index x) const { return weights_.at(x); }
  bool normalized() const { return normalized_; }

 private:
  PosetPtr poset_;
  std::vector<double> weights_;
  bool normalized_;
};

// v(x) = sum of t over the ideal of x. A lower valuation on
// meet-semilattices; on other posets the function is still built and a
// warning is appended. Throws Error(kWeightPosetMismatch) when t belongs to a
// different poset.
Valuation CumulativeLower(const PosetPtr& p, const WeightFunction& t,
                          std::vector<std::string>* warnings = nullptr);
// v(x) = sum of t over the filter of x; the join-semilattice dual.
Valuation CumulativeUpper(const PosetPtr& p, const WeightFunction& t,
                          std::vector<std::string>* warnings = nullptr);

// |ideal(x)| and |filter(x)|.
Valuation CardinalIdeal(const PosetPtr& p);
Valuation CardinalFilter(const PosetPtr& p);

// kappa(x) = a - |{k in subset : x <= k}|.
Valuation KappaValuation(const PosetPtr& p, const ElementSet& subset, double a);

// k * v + a pointwise. Throws Error(kZeroScale) for k == 0.
Valuation AffineTransform(const Valuation& v, double k, double a);

// Natural log pointwise. Throws Error(kNonPositiveValue) naming the first
// element with v <= 0.
Valuation LogTransform(const Valuation& v);

// log(k * v + a), negated when `negate`.
Valuation LogAffineTransform(const Valuation& v, double k, double a,
                             bool negate);

}  // namespace posetval

#endif  // POSETVAL_VALUATION_H_
