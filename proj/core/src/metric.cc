#include "posetval/metric.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "posetval/error.h"

namespace posetval {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool IsIsotoneRow(MetricRow row) {
  return row == MetricRow::kIsotoneLower || row == MetricRow::kIsotoneUpper;
}

bool IsLowerRow(MetricRow row) {
  return row == MetricRow::kIsotoneLower || row == MetricRow::kAntitoneLower;
}

const Witness* FirstWitness(const ValuationVerdict& verdict, Axiom axiom) {
  for (const Witness& w : verdict.witnesses) {
    if (w.axiom == axiom) return &w;
  }
  return nullptr;
}

[[noreturn]] void ThrowDomain(const Valuation& v, const Witness& w) {
  throw Error(ErrorCode::kDomainConditionFailed,
              "intersection condition fails at (" + v.poset().name(w.x) + ", " +
                  v.poset().name(w.y) + ")");
}

// Validates that v fits `row` and returns it.
MetricRow CheckRow(const Valuation& v, const ValuationVerdict& verdict,
                   MetricRow row) {
  const bool isotone = UsesIsotoneBranch(v.monotonicity());
  if (v.monotonicity() == Monotonicity::kNone || isotone != IsIsotoneRow(row)) {
    throw Error(ErrorCode::kRowMismatch,
                "valuation direction (" + std::string(ToString(v.monotonicity())) +
                    ") does not match metric row " +
                    std::to_string(static_cast<int>(row)));
  }
  const Axiom domain = IsLowerRow(row) ? Axiom::kLowerDomain : Axiom::kUpperDomain;
  if (const Witness* w = FirstWitness(verdict, domain)) ThrowDomain(v, *w);
  const bool holds = IsLowerRow(row) ? verdict.is_lower : verdict.is_upper;
  if (!holds) {
    throw Error(ErrorCode::kRowMismatch,
                std::string("valuation is not ") +
                    (IsLowerRow(row) ? "a lower" : "an upper") + " valuation");
  }
  return row;
}

MetricRow SelectRow(const Valuation& v, const ValuationVerdict& verdict) {
  const bool isotone = UsesIsotoneBranch(v.monotonicity());
  if (verdict.is_lower) {
    return isotone ? MetricRow::kIsotoneLower : MetricRow::kAntitoneLower;
  }
  if (verdict.is_upper) {
    return isotone ? MetricRow::kIsotoneUpper : MetricRow::kAntitoneUpper;
  }
  if (!verdict.lower_domain_ok) {
    ThrowDomain(v, *FirstWitness(verdict, Axiom::kLowerDomain));
  }
  throw Error(ErrorCode::kRowMismatch,
              "valuation is neither a lower nor an upper valuation");
}

double RowDistance(const Valuation& v, MetricRow row, Index x, Index y) {
  switch (row) {
    case MetricRow::kIsotoneLower:
      return v(x) + v(y) - 2 * FMinus(v, x, y);
    case MetricRow::kAntitoneLower:
      return v(x) + v(y) - 2 * FPlus(v, x, y);
    case MetricRow::kIsotoneUpper:
      return 2 * FPlus(v, x, y) - v(x) - v(y);
    case MetricRow::kAntitoneUpper:
      return 2 * FMinus(v, x, y) - v(x) - v(y);
  }
  return 0;
}

}  // namespace

std::string_view ToString(MetricVerdict v) {
  switch (v) {
    case MetricVerdict::kMetric: return "metric";
    case MetricVerdict::kQuasimetric: return "quasimetric";
    case MetricVerdict::kNotQuasimetric: return "not_quasimetric";
  }
  return "unknown";
}

std::string_view ToString(MetricAxiom a) {
  switch (a) {
    case MetricAxiom::kNegative: return "negative";
    case MetricAxiom::kDiagonal: return "diagonal";
    case MetricAxiom::kSymmetry: return "symmetry";
    case MetricAxiom::kSeparation: return "separation";
    case MetricAxiom::kTriangle: return "triangle";
  }
  return "unknown";
}

AxiomReport VerifyAxioms(const DistanceMatrix& d, double tolerance,
                         const std::vector<bool>& excluded) {
  const std::size_t n = d.size();
  auto skip = [&](Index i) { return i < excluded.size() && excluded[i]; };
  AxiomReport report;
  auto& w = report.witnesses;

  for (Index x = 0; x < n; ++x) {
    if (skip(x)) continue;
    if (std::abs(d.at(x, x)) > tolerance) {
      w.push_back({MetricAxiom::kDiagonal, x, x, std::nullopt, d.at(x, x), 0.0});
    }
    for (Index y = x + 1; y < n; ++y) {
      if (skip(y)) continue;
      const double dxy = d.at(x, y);
      if (!(std::abs(dxy - d.at(y, x)) <= tolerance)) {
        w.push_back({MetricAxiom::kSymmetry, x, y, std::nullopt, dxy, d.at(y, x)});
      }
      if (dxy < -tolerance) {
        w.push_back({MetricAxiom::kNegative, x, y, std::nullopt, dxy, 0.0});
      } else if (dxy <= tolerance) {
        w.push_back({MetricAxiom::kSeparation, x, y, std::nullopt, dxy, 0.0});
      }
    }
  }
  for (Index x = 0; x < n; ++x) {
    if (skip(x)) continue;
    for (Index y = 0; y < n; ++y) {
      if (skip(y)) continue;
      for (Index z = 0; z < n; ++z) {
        if (skip(z)) continue;
        const double direct = d.at(x, z);
        const double detour = d.at(x, y) + d.at(y, z);
        if (direct > detour + tolerance) {
          w.push_back({MetricAxiom::kTriangle, x, y, z, direct, detour});
        }
      }
    }
  }

  std::sort(w.begin(), w.end(), [](const MetricWitness& a, const MetricWitness& b) {
    return std::tuple(a.axiom, a.x, a.y, a.z.value_or(0)) <
           std::tuple(b.axiom, b.x, b.y, b.z.value_or(0));
  });
  bool separation_only = true;
  for (const auto& item : w) {
    if (item.axiom != MetricAxiom::kSeparation) separation_only = false;
  }
  if (w.empty()) {
    report.verdict = MetricVerdict::kMetric;
  } else if (separation_only) {
    report.verdict = MetricVerdict::kQuasimetric;
  } else {
    report.verdict = MetricVerdict::kNotQuasimetric;
  }
  return report;
}

MetricRow SelectRow(const Valuation& v) {
  if (v.monotonicity() == Monotonicity::kNone) {
    throw Error(ErrorCode::kRowMismatch, "valuation is not monotone");
  }
  return SelectRow(v, CheckValuation(v));
}

DistanceTable InduceMetric(const Valuation& v, std::optional<MetricRow> row) {
  if (v.monotonicity() == Monotonicity::kNone) {
    throw Error(ErrorCode::kRowMismatch, "valuation is not monotone");
  }
  const ValuationVerdict verdict = CheckValuation(v);
  const MetricRow chosen = row ? CheckRow(v, verdict, *row) : SelectRow(v, verdict);

  const std::size_t n = v.poset().size();
  DistanceMatrix d(n);
  for (Index x = 0; x < n; ++x) {
    for (Index y = x; y < n; ++y) {
      d.at(x, y) = d.at(y, x) = (x == y) ? 0.0 : RowDistance(v, chosen, x, y);
    }
  }
  AxiomReport axioms = VerifyAxioms(d, v.tolerance());
  return DistanceTable{v.poset_ptr(), v,      chosen,
                       std::move(d),  axioms.verdict, std::move(axioms.witnesses)};
}

BoundGap ComputeBoundGap(const Valuation& v) {
  DistanceTable table = InduceMetric(v);
  const bool isotone = UsesIsotoneBranch(v.monotonicity());
  const std::size_t n = v.poset().size();
  BoundGap out{DistanceMatrix(n), true, table.row};
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      const double minus = FMinus(v, x, y);
      const double plus = FPlus(v, x, y);
      const double bound = isotone ? plus - minus : minus - plus;
      const double gap = bound - table.d.at(x, y);
      out.gap.at(x, y) = gap;
      if (!(std::abs(gap) <= v.tolerance())) out.equality = false;
    }
  }
  return out;
}

JCDistanceTable JiangConrathDistance(const PosetPtr& p, const WeightFunction& t,
                                     double tolerance) {
  if (!t.normalized()) {
    throw Error(ErrorCode::kNotNormalized, "weights do not sum to 1");
  }
  const std::size_t n = p->size();
  for (Index x = 0; x < n; ++x) {
    for (Index y = x + 1; y < n; ++y) {
      bool common = false;
      for (Index z = 0; z < n && !common; ++z) common = p->Leq(x, z) && p->Leq(y, z);
      if (!common) {
        throw Error(ErrorCode::kEmptyFilterIntersection,
                    "no common upper bound for (" + p->name(x) + ", " +
                        p->name(y) + ")");
      }
    }
  }

  Valuation mass = CumulativeLower(p, t);
  JCDistanceTable out{p,  t, {}, {}, std::vector<bool>(n, false), DistanceMatrix(n),
                      MetricVerdict::kMetric, {}, {}};
  out.probability.assign(mass.values().begin(), mass.values().end());
  for (Index x = 0; x < n; ++x) {
    // An ideal holding every element carries the whole (normalized) mass.
    if (Ideal(*p, x).size() == n) out.probability[x] = 1.0;
  }
  out.information.resize(n);
  for (Index x = 0; x < n; ++x) {
    const double px = out.probability[x];
    if (px > 0) {
      // Clamp the rounding noise that can push a full ideal above 1.
      out.information[x] = std::max(0.0, -std::log(px));
    } else {
      out.information[x] = kInf;
      out.excluded[x] = true;
      out.warnings.push_back("'" + p->name(x) +
                             "' has zero cumulative probability; excluded");
    }
  }

  const auto& info = out.information;
  for (Index x = 0; x < n; ++x) {
    for (Index y = x + 1; y < n; ++y) {
      double dist = kInf;
      if (!out.excluded[x] && !out.excluded[y]) {
        // Information content is antitone, so I+ is the sup over the common
        // upper bounds.
        const double upper = FPlus(*p, info, /*isotone=*/false, x, y);
        dist = info[x] + info[y] - 2 * upper;
      }
      out.d.at(x, y) = out.d.at(y, x) = dist;
    }
  }

  AxiomReport axioms = VerifyAxioms(out.d, tolerance, out.excluded);
  out.verdict = axioms.verdict;
  out.witnesses = std::move(axioms.witnesses);
  return out;
}

}  // namespace posetval
