#include "posetval/io.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "posetval/catalog.h"
#include "posetval/error.h"
#include "support/generators.h"

namespace posetval {
namespace {

// Same names and the same order relation, regardless of index order.
void ExpectSameOrder(const Poset& a, const Poset& b) {
  ASSERT_EQ(a.size(), b.size());
  for (Index i = 0; i < a.size(); ++i) {
    const auto bi = b.Find(a.name(i));
    ASSERT_TRUE(bi.has_value()) << a.name(i);
    for (Index j = 0; j < a.size(); ++j) {
      EXPECT_EQ(a.Leq(i, j), b.Leq(*bi, b.IndexOf(a.name(j))))
          << a.name(i) << " " << a.name(j);
    }
  }
}

int ParseErrorLine(std::string_view text) {
  try {
    ParsePosetText(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(PosetTextTest, ParsesPairsElementsAndComments) {
  PosetBuild b = ParsePosetText(
      "# header\n"
      "element lonely\n"
      "a < b   # trailing comment\n"
      "\n"
      "b < c\n"
      "a < c\n");
  const Poset& p = b.poset;
  ASSERT_EQ(p.size(), 4u);
  EXPECT_EQ(p.name(0), "lonely");
  EXPECT_TRUE(p.Less(p.IndexOf("a"), p.IndexOf("c")));
  EXPECT_FALSE(p.Comparable(p.IndexOf("lonely"), p.IndexOf("a")));
  ASSERT_EQ(b.redundant.size(), 1u);
  EXPECT_EQ(b.redundant[0], (NamedPair{"a", "c"}));
}

TEST(PosetTextTest, ErrorsCarryLineNumbers) {
  EXPECT_EQ(ParseErrorLine("a < b\nb > c\n"), 2);
  EXPECT_EQ(ParseErrorLine("a < b\n\n# x\na <\n"), 4);
  EXPECT_EQ(ParseErrorLine("element\n"), 1);
  EXPECT_EQ(ParseErrorLine("a < b < c\n"), 1);
  try {
    ParsePosetText("a < b\nb < a\n");
    FAIL() << "expected a cycle error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCycleDetected);
  }
}

TEST(PosetTextTest, RoundTrip) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Poset p = *testing::RandomPoset(rng, 1 + trial % 9, 0.35);
    std::ostringstream out;
    WritePosetText(out, p);
    PosetBuild back = ParsePosetText(out.str());
    EXPECT_TRUE(back.redundant.empty());
    EXPECT_EQ(back.poset.names(), p.names());
    EXPECT_EQ(back.poset.covers(), p.covers());
  }
}

TEST(ElementValuesTest, ReadsEveryElement) {
  Poset m2 = NamedPoset("M2");
  std::istringstream in("# weights\n1 0.4\n0 0.1\np 0.3\nq -2.5e-1\n");
  std::vector<double> v = ReadElementValues(in, m2);
  EXPECT_EQ(v[m2.IndexOf("0")], 0.1);
  EXPECT_EQ(v[m2.IndexOf("p")], 0.3);
  EXPECT_EQ(v[m2.IndexOf("q")], -0.25);
  EXPECT_EQ(v[m2.IndexOf("1")], 0.4);
}

TEST(ElementValuesTest, Errors) {
  Poset m2 = NamedPoset("M2");
  auto code = [&](const std::string& text) {
    std::istringstream in(text);
    try {
      ReadElementValues(in, m2);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  EXPECT_EQ(code("0 1\np 1\nq 1\n"), ErrorCode::kNotTotal);
  EXPECT_EQ(code("0 1\np 1\nq 1\n1 1\np 2\n"), ErrorCode::kParseError);
  EXPECT_EQ(code("0 1\np 1\nq 1\n1 1\nz 2\n"), ErrorCode::kParseError);
  EXPECT_EQ(code("0 1\np x\nq 1\n1 1\n"), ErrorCode::kParseError);
  EXPECT_EQ(code("0 1\np inf\nq 1\n1 1\n"), ErrorCode::kParseError);
  EXPECT_EQ(code("0 1 2\n"), ErrorCode::kParseError);
}

TEST(GroupTableTest, ParsesZ3) {
  std::istringstream in("# Z3\norder 3\n0 1 2\n1 2 0\n2 0 1\n");
  FiniteGroup g = ReadGroupTable(in);
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.Multiply(2, 2), 1);
  EXPECT_EQ(g.Inverse(1), 2);
}

TEST(GroupTableTest, Errors) {
  auto line = [](const std::string& text) {
    std::istringstream in(text);
    try {
      ReadGroupTable(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line("3\n"), 1);
  EXPECT_EQ(line("order 2\n0 1\n1\n"), 3);
  EXPECT_EQ(line("order 2\n0 1\n1 2\n"), 3);
  EXPECT_EQ(line("order 2\n0 1\n"), 3);
  EXPECT_EQ(line("order 1\n0\n0\n"), 3);
  std::istringstream bad("order 2\n0 0\n0 0\n");
  EXPECT_THROW(ReadGroupTable(bad), Error);
}

TEST(DotTest, WritesHasseDiagram) {
  std::ostringstream out;
  WriteDot(out, NamedPoset("M2"));
  const std::string dot = out.str();
  EXPECT_EQ(dot.rfind("digraph hasse {\n  rankdir=BT;", 0), 0u);
  EXPECT_NE(dot.find("\"0\" -> \"p\";"), std::string::npos);
  EXPECT_NE(dot.find("\"q\" -> \"1\";"), std::string::npos);
  EXPECT_EQ(dot.find("\"0\" -> \"1\";"), std::string::npos);
}

TEST(DotTest, RoundTripPreservesOrder) {
  testing::Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Poset p = *testing::RandomBoundedPoset(rng, trial % 8, 0.4);
    std::ostringstream out;
    WriteDot(out, p);
    std::istringstream in(out.str());
    ExpectSameOrder(p, ReadDot(in).poset);
  }
  Poset p1 = NamedPoset("P1");
  std::ostringstream out;
  WriteDot(out, p1);
  std::istringstream in(out.str());
  ExpectSameOrder(p1, ReadDot(in).poset);
}

TEST(DistanceCsvTest, Format) {
  Poset c = NamedPoset("chain(2)");
  DistanceMatrix d(2);
  d.at(0, 1) = 0.1;
  d.at(1, 0) = std::numeric_limits<double>::infinity();
  std::ostringstream out;
  WriteDistanceCsv(out, c, d);
  EXPECT_EQ(out.str(), ",0,1\n0,0,0.10000000000000001\n1,inf,0\n");
}

}  // namespace
}  // namespace posetval
