#include "posetval/search.h"

#include <gtest/gtest.h>

#include "posetval/catalog.h"
#include "posetval/error.h"
#include "support/generators.h"

namespace posetval {
namespace {

TEST(SearchTargetTest, Parse) {
  EXPECT_EQ(ParseSearchTarget("jc_triangle"), SearchTarget::kJcTriangle);
  EXPECT_EQ(ParseSearchTarget("log_lower_fails"), SearchTarget::kLogLowerFails);
  EXPECT_EQ(ParseSearchTarget("log_upper_fails"), SearchTarget::kLogUpperFails);
  try {
    ParseSearchTarget("nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownTarget);
  }
}

TEST(SearchTest, RejectsZeroBudget) {
  SearchOptions opts;
  opts.budget = 0;
  EXPECT_THROW(SearchCounterexample(NamedPosetPtr("M2"), SearchTarget::kJcTriangle, opts), Error);
}

TEST(SearchTest, JcTriangleOnFixtureTriple) {
  PosetPtr jc = NamedPosetPtr("JC");
  const Index z1 = jc->IndexOf("z1"), z2 = jc->IndexOf("z2"), z3 = jc->IndexOf("z3");
  SearchOptions opts;
  opts.triple = std::array<Index, 3>{z1, z2, z3};
  auto hit = SearchCounterexample(jc, SearchTarget::kJcTriangle, opts);
  ASSERT_TRUE(hit.has_value());
  const auto& w = std::get<MetricWitness>(hit->witness);
  EXPECT_EQ(w.x, z1);
  EXPECT_EQ(w.y, z2);
  EXPECT_EQ(w.z, z3);
  EXPECT_GT(w.lhs - w.rhs, 1e-6);

  // Recompute from the returned weights.
  JCDistanceTable t = JiangConrathDistance(jc, hit->weights);
  EXPECT_DOUBLE_EQ(t.d.at(z1, z3), w.lhs);
  EXPECT_DOUBLE_EQ(t.d.at(z1, z2) + t.d.at(z2, z3), w.rhs);
  // The violation region: p(z2) p(b) > p(a) p(c).
  auto p = [&](const char* x) { return t.probability[jc->IndexOf(x)]; };
  EXPECT_GT(p("z2") * p("b"), p("a") * p("c"));
}

TEST(SearchTest, IsDeterministicPerSeed) {
  PosetPtr jc = NamedPosetPtr("JC");
  SearchOptions opts;
  opts.seed = 7;
  auto a = SearchCounterexample(jc, SearchTarget::kJcTriangle, opts);
  auto b = SearchCounterexample(jc, SearchTarget::kJcTriangle, opts);
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->iteration, b->iteration);
  EXPECT_TRUE(std::equal(a->weights.weights().begin(), a->weights.weights().end(),
                         b->weights.weights().begin()));
}

TEST(SearchTest, M2LogFailures) {
  PosetPtr m2 = NamedPosetPtr("M2");
  const Index o = m2->IndexOf("0"), p = m2->IndexOf("p"), q = m2->IndexOf("q");
  for (SearchTarget target : {SearchTarget::kLogLowerFails, SearchTarget::kLogUpperFails}) {
    auto hit = SearchCounterexample(m2, target, {});
    ASSERT_TRUE(hit.has_value());
    const auto& t = hit->weights;
    ASSERT_TRUE(t.normalized());
    Valuation mass = CumulativeLower(m2, t);
    EXPECT_TRUE(CheckValuation(mass).is_lower);
    ValuationVerdict logged = CheckValuation(LogTransform(mass));
    const double lhs = (t(o) + t(p)) * (t(o) + t(q));
    if (target == SearchTarget::kLogLowerFails) {
      EXPECT_FALSE(logged.is_lower);
      EXPECT_GT(lhs, t(o));
      EXPECT_EQ(std::get<Witness>(hit->witness).axiom, Axiom::kLower);
    } else {
      EXPECT_FALSE(logged.is_upper);
      EXPECT_LT(lhs, t(o));
      EXPECT_EQ(std::get<Witness>(hit->witness).axiom, Axiom::kUpper);
    }
  }
}

TEST(SearchTest, TreesHaveNoJcViolation) {
  testing::Rng rng(41);
  SearchOptions opts;
  opts.budget = 400;
  for (int trial = 0; trial < 10; ++trial) {
    PosetPtr tree = testing::RandomTree(rng, 3 + trial % 5);
    EXPECT_FALSE(SearchCounterexample(tree, SearchTarget::kJcTriangle, opts).has_value());
  }
}

TEST(SearchTest, GridPhaseCoversSmallPosets) {
  // A chain never violates; the search must exhaust its budget and stop.
  SearchOptions opts;
  opts.budget = 50;
  PosetPtr c = NamedPosetPtr("chain(3)");
  EXPECT_FALSE(SearchCounterexample(c, SearchTarget::kJcTriangle, opts).has_value());
  EXPECT_FALSE(SearchCounterexample(NamedPosetPtr("chain(1)"), SearchTarget::kLogLowerFails,
                                    opts).has_value());
}

}  // namespace
}  // namespace posetval
