#include "posetval/valuation.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "posetval/error.h"

namespace posetval {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void RequireSameSize(const Poset& p, std::size_t n, std::string_view what) {
  if (n != p.size()) {
    throw Error(ErrorCode::kNotTotal,
                std::string(what) + " has " + std::to_string(n) +
                    " entries for a poset of " + std::to_string(p.size()) +
                    " elements");
  }
}

void RequireMonotone(const Valuation& v) {
  if (v.monotonicity() == Monotonicity::kNone) {
    throw Error(ErrorCode::kNonMonotone, "valuation is neither isotone nor antitone");
  }
}

void SortWitnesses(std::vector<Witness>& w) {
  std::sort(w.begin(), w.end(), [](const Witness& a, const Witness& b) {
    return std::tuple(a.x, a.y, a.z.value_or(0), a.axiom) <
           std::tuple(b.x, b.y, b.z.value_or(0), b.axiom);
  });
}

bool SameGroundSet(const Poset& a, const Poset& b) {
  return &a == &b || a.names() == b.names();
}

}  // namespace

std::string_view ToString(Monotonicity m) {
  switch (m) {
    case Monotonicity::kStrictlyIsotone: return "strictly_isotone";
    case Monotonicity::kIsotone: return "isotone_not_strict";
    case Monotonicity::kStrictlyAntitone: return "strictly_antitone";
    case Monotonicity::kAntitone: return "antitone_not_strict";
    case Monotonicity::kConstant: return "constant";
    case Monotonicity::kNone: return "none";
  }
  return "none";
}

std::string_view ToString(Axiom a) {
  switch (a) {
    case Axiom::kLower: return "lower";
    case Axiom::kUpper: return "upper";
    case Axiom::kLowerDomain: return "lower_domain";
    case Axiom::kUpperDomain: return "upper_domain";
  }
  return "unknown";
}

Monotonicity ClassifyMonotonicity(const Poset& p, std::span<const double> values,
                                  double tolerance) {
  RequireSameSize(p, values.size(), "valuation");
  bool isotone = true, antitone = true;
  bool strict_isotone = true, strict_antitone = true;
  bool has_comparable = false;
  for (Index x = 0; x < p.size(); ++x) {
    for (Index y = 0; y < p.size(); ++y) {
      if (!p.Less(x, y)) continue;
      has_comparable = true;
      double rise = values[y] - values[x];
      if (rise < -tolerance) isotone = false;
      if (rise > tolerance) antitone = false;
      if (!(rise > tolerance)) strict_isotone = false;
      if (!(rise < -tolerance)) strict_antitone = false;
    }
  }
  if (!has_comparable) {
    bool all_equal = std::all_of(values.begin(), values.end(), [&](double v) {
      return std::abs(v - values.front()) <= tolerance;
    });
    return all_equal ? Monotonicity::kConstant : Monotonicity::kStrictlyIsotone;
  }
  if (strict_isotone) return Monotonicity::kStrictlyIsotone;
  if (strict_antitone) return Monotonicity::kStrictlyAntitone;
  if (isotone && antitone) return Monotonicity::kConstant;
  if (isotone) return Monotonicity::kIsotone;
  if (antitone) return Monotonicity::kAntitone;
  return Monotonicity::kNone;
}

Valuation::Valuation(PosetPtr poset, std::vector<double> values, double tolerance)
    : poset_(std::move(poset)), values_(std::move(values)), tolerance_(tolerance) {
  if (!poset_) throw Error(ErrorCode::kInvalidArgument, "null poset");
  RequireSameSize(*poset_, values_.size(), "valuation");
  for (Index i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "value at '" + poset_->name(i) + "' is not finite");
    }
  }
  monotonicity_ = ClassifyMonotonicity(*poset_, values_, tolerance_);
}

double FMinus(const Poset& p, std::span<const double> values, bool isotone,
              Index x, Index y) {
  p.CheckIndex(x);
  p.CheckIndex(y);
  double best = isotone ? -kInf : kInf;
  for (Index z = 0; z < p.size(); ++z) {
    if (!p.Leq(z, x) || !p.Leq(z, y)) continue;
    best = isotone ? std::max(best, values[z]) : std::min(best, values[z]);
  }
  return best;
}

double FPlus(const Poset& p, std::span<const double> values, bool isotone,
             Index x, Index y) {
  p.CheckIndex(x);
  p.CheckIndex(y);
  double best = isotone ? kInf : -kInf;
  for (Index z = 0; z < p.size(); ++z) {
    if (!p.Leq(x, z) || !p.Leq(y, z)) continue;
    best = isotone ? std::min(best, values[z]) : std::max(best, values[z]);
  }
  return best;
}

double FMinus(const Valuation& v, Index x, Index y) {
  RequireMonotone(v);
  return FMinus(v.poset(), v.values(), UsesIsotoneBranch(v.monotonicity()), x, y);
}

double FPlus(const Valuation& v, Index x, Index y) {
  RequireMonotone(v);
  return FPlus(v.poset(), v.values(), UsesIsotoneBranch(v.monotonicity()), x, y);
}

ValuationVerdict CheckValuation(const Valuation& v) {
  RequireMonotone(v);
  const Poset& p = v.poset();
  const bool isotone = UsesIsotoneBranch(v.monotonicity());
  const double tol = v.tolerance();

  ValuationVerdict verdict;
  verdict.is_lower = verdict.is_upper = true;
  verdict.lower_domain_ok = verdict.upper_domain_ok = true;

  for (Index x = 0; x < p.size(); ++x) {
    for (Index y = x + 1; y < p.size(); ++y) {
      const double minus = FMinus(p, v.values(), isotone, x, y);
      const double plus = FPlus(p, v.values(), isotone, x, y);
      const double sum = v(x) + v(y);
      bool ideals_meet = false, filters_meet = false;
      for (Index z = 0; z < p.size(); ++z) {
        ideals_meet |= p.Leq(z, x) && p.Leq(z, y);
        filters_meet |= p.Leq(x, z) && p.Leq(y, z);
      }
      // Isotone lower needs common lower bounds, antitone lower needs
      // common upper bounds; upper is the reverse.
      const bool lower_domain = isotone ? ideals_meet : filters_meet;
      const bool upper_domain = isotone ? filters_meet : ideals_meet;

      if (!lower_domain) {
        verdict.is_lower = false;
        verdict.lower_domain_ok = false;
        verdict.witnesses.push_back(
            {x, y, std::nullopt, sum, isotone ? minus : plus, Axiom::kLowerDomain});
      } else if (sum > minus + plus + tol) {
        verdict.is_lower = false;
        verdict.witnesses.push_back(
            {x, y, std::nullopt, sum, minus + plus, Axiom::kLower});
      }

      if (!upper_domain) {
        verdict.is_upper = false;
        verdict.upper_domain_ok = false;
        verdict.witnesses.push_back(
            {x, y, std::nullopt, sum, isotone ? plus : minus, Axiom::kUpperDomain});
      } else if (minus + plus > sum + tol) {
        verdict.is_upper = false;
        verdict.witnesses.push_back(
            {x, y, std::nullopt, minus + plus, sum, Axiom::kUpper});
      }
    }
  }
  verdict.domain_condition_ok = verdict.lower_domain_ok && verdict.upper_domain_ok;
  SortWitnesses(verdict.witnesses);
  return verdict;
}

AlternateVerdict CheckValuationMonjardet(const Valuation& v) {
  if (!UsesIsotoneBranch(v.monotonicity())) {
    throw Error(ErrorCode::kPreconditionUnmet, "valuation is not isotone");
  }
  const Poset& p = v.poset();
  const bool has_bottom = Bottom(p).has_value();
  const bool has_top = Top(p).has_value();
  if (!has_bottom && !has_top) {
    throw Error(ErrorCode::kPreconditionUnmet,
                "poset has neither a least nor a greatest element");
  }
  const double tol = v.tolerance();
  AlternateVerdict verdict;
  if (has_bottom) verdict.is_lower = true;
  if (has_top) verdict.is_upper = true;

  for (Index x = 0; x < p.size(); ++x) {
    for (Index y = x + 1; y < p.size(); ++y) {
      const double minus = FMinus(p, v.values(), true, x, y);
      const double plus = FPlus(p, v.values(), true, x, y);
      const double sum = v(x) + v(y);
      for (Index z = 0; z < p.size(); ++z) {
        if (has_bottom && p.Leq(x, z) && p.Leq(y, z) && sum > minus + v(z) + tol) {
          verdict.is_lower = false;
          verdict.witnesses.push_back({x, y, z, sum, minus + v(z), Axiom::kLower});
        }
        if (has_top && p.Leq(z, x) && p.Leq(z, y) && plus + v(z) > sum + tol) {
          verdict.is_upper = false;
          verdict.witnesses.push_back({x, y, z, plus + v(z), sum, Axiom::kUpper});
        }
      }
    }
  }
  SortWitnesses(verdict.witnesses);
  return verdict;
}

AlternateVerdict CheckValuationLeclerc(const Valuation& v) {
  if (v.monotonicity() != Monotonicity::kStrictlyIsotone) {
    throw Error(ErrorCode::kPreconditionUnmet, "valuation is not strictly isotone");
  }
  const Poset& p = v.poset();
  const std::size_t n = p.size();
  std::vector<std::optional<Index>> meet(n * n), join(n * n);
  bool meet_semi = true, join_semi = true;
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      meet[x * n + y] = Meet(p, x, y);
      join[x * n + y] = Join(p, x, y);
      meet_semi &= meet[x * n + y].has_value();
      join_semi &= join[x * n + y].has_value();
    }
  }
  if (!meet_semi && !join_semi) {
    throw Error(ErrorCode::kPreconditionUnmet,
                "poset is neither a meet- nor a join-semilattice");
  }
  const double tol = v.tolerance();
  AlternateVerdict verdict;
  if (meet_semi) verdict.is_lower = true;
  if (join_semi) verdict.is_upper = true;
  for (Index x = 0; x < n; ++x) {
    for (Index y = x + 1; y < n; ++y) {
      const auto& m = meet[x * n + y];
      const auto& j = join[x * n + y];
      if (!m || !j) continue;
      const double sum = v(x) + v(y);
      const double bounds = v(*m) + v(*j);
      if (meet_semi && sum > bounds + tol) {
        verdict.is_lower = false;
        verdict.witnesses.push_back({x, y, std::nullopt, sum, bounds, Axiom::kLower});
      }
      if (join_semi && bounds > sum + tol) {
        verdict.is_upper = false;
        verdict.witnesses.push_back({x, y, std::nullopt, bounds, sum, Axiom::kUpper});
      }
    }
  }
  SortWitnesses(verdict.witnesses);
  return verdict;
}

WeightFunction::WeightFunction(PosetPtr poset, std::vector<double> weights,
                               double tolerance)
    : poset_(std::move(poset)), weights_(std::move(weights)) {
  if (!poset_) throw Error(ErrorCode::kInvalidArgument, "null poset");
  RequireSameSize(*poset_, weights_.size(), "weight function");
  double total = 0;
  for (Index i = 0; i < weights_.size(); ++i) {
    if (!(weights_[i] >= 0) || !std::isfinite(weights_[i])) {
      throw Error(ErrorCode::kNegativeWeight,
                  "weight of '" + poset_->name(i) + "' is not a finite nonnegative number");
    }
    total += weights_[i];
  }
  normalized_ = std::abs(total - 1.0) <= tolerance;
}

WeightFunction WeightFunction::Uniform(PosetPtr poset) {
  const std::size_t n = poset->size();
  return WeightFunction(std::move(poset), std::vector<double>(n, 1.0 / n));
}

WeightFunction WeightFunction::Ones(PosetPtr poset) {
  const std::size_t n = poset->size();
  return WeightFunction(std::move(poset), std::vector<double>(n, 1.0));
}

namespace {

Valuation Cumulative(const PosetPtr& p, const WeightFunction& t, bool down,
                     std::vector<std::string>* warnings) {
  if (!SameGroundSet(*p, t.poset())) {
    throw Error(ErrorCode::kWeightPosetMismatch,
                "weight function belongs to a different poset");
  }
  if (warnings && !p->empty()) {
    Classification c = Classify(*p);
    if (down && !c.is_meet_semilattice) {
      warnings->push_back("poset is not a meet-semilattice; the cumulative "
                          "sum over ideals need not be a lower valuation");
    }
    if (!down && !c.is_join_semilattice) {
      warnings->push_back("poset is not a join-semilattice; the cumulative "
                          "sum over filters need not be a lower valuation");
    }
  }
  std::vector<double> values(p->size(), 0.0);
  for (Index x = 0; x < p->size(); ++x) {
    for (Index w = 0; w < p->size(); ++w) {
      if (down ? p->Leq(w, x) : p->Leq(x, w)) values[x] += t(w);
    }
  }
  return Valuation(p, std::move(values));
}

}  // namespace

Valuation CumulativeLower(const PosetPtr& p, const WeightFunction& t,
                          std::vector<std::string>* warnings) {
  return Cumulative(p, t, true, warnings);
}

Valuation CumulativeUpper(const PosetPtr& p, const WeightFunction& t,
                          std::vector<std::string>* warnings) {
  return Cumulative(p, t, false, warnings);
}

Valuation CardinalIdeal(const PosetPtr& p) {
  return CumulativeLower(p, WeightFunction::Ones(p));
}

Valuation CardinalFilter(const PosetPtr& p) {
  return CumulativeUpper(p, WeightFunction::Ones(p));
}

Valuation KappaValuation(const PosetPtr& p, const ElementSet& subset, double a) {
  for (Index k : subset) p->CheckIndex(k);
  std::vector<double> values(p->size(), a);
  for (Index x = 0; x < p->size(); ++x) {
    for (Index k : subset) {
      if (p->Leq(x, k)) values[x] -= 1.0;
    }
  }
  return Valuation(p, std::move(values));
}

Valuation AffineTransform(const Valuation& v, double k, double a) {
  if (k == 0) throw Error(ErrorCode::kZeroScale, "affine scale must be nonzero");
  std::vector<double> values(v.values().begin(), v.values().end());
  for (double& x : values) x = k * x + a;
  return Valuation(v.poset_ptr(), std::move(values), v.tolerance());
}

Valuation LogTransform(const Valuation& v) {
  std::vector<double> values(v.values().begin(), v.values().end());
  for (Index i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0)) {
      throw Error(ErrorCode::kNonPositiveValue,
                  "value at '" + v.poset().name(i) + "' is not positive");
    }
    values[i] = std::log(values[i]);
  }
  return Valuation(v.poset_ptr(), std::move(values), v.tolerance());
}

Valuation LogAffineTransform(const Valuation& v, double k, double a, bool negate) {
  Valuation logged = LogTransform(AffineTransform(v, k, a));
  return negate ? AffineTransform(logged, -1.0, 0.0) : logged;
}

}  // namespace posetval
