#include "twobridge/cli.hpp"

#include <gtest/gtest.h>

using namespace twobridge;
using namespace twobridge::cli;

TEST(Report, TrefoilFraction) {
  json r = knot_report({"fraction", "3/2"});
  EXPECT_EQ(r["schema_version"], schema_version);
  ASSERT_EQ(r["inversions"].size(), 1u);
  const json &inv = r["inversions"][0];
  EXPECT_EQ(inv["presentation"], "I1(2;1)");
  EXPECT_EQ(inv["butterfly_polynomial"], "t^-1 - 2 + t");
  EXPECT_EQ(inv["order_certificate"]["verdict"], "InfiniteOrder");
  EXPECT_EQ(inv["slice_certificate"]["verdict"], "NotEquivariantlySlice");
  EXPECT_FALSE(r.contains("timing_ms"));
}

TEST(Report, VanishingFamilyInput) {
  json r = knot_report({"i1", "2,-2,2,-2;1,1,-1,1"});
  const json &inv = r["inversions"][0];
  EXPECT_EQ(inv["butterfly_polynomial"], "0");
  EXPECT_EQ(inv["order_certificate"]["verdict"], "InfiniteOrder");
}

TEST(Report, CfInput) {
  json r = knot_report({"cf", "[4,-2]"});
  EXPECT_EQ(r["fraction"], "7/2");
  ASSERT_EQ(r["inversions"].size(), 2u);
  EXPECT_EQ(r["inversions"][1]["presentation"], "I1(2;2)");
}

TEST(Report, InvalidInputs) {
  EXPECT_THROW(knot_report({"fraction", "4/2"}), domain_error);
  EXPECT_THROW(knot_report({"fraction", "9/3"}), domain_error);
  EXPECT_THROW(knot_report({"fraction", "3/0"}), domain_error);
  EXPECT_THROW(knot_report({"cf", "2,-2,2"}), domain_error);
  EXPECT_THROW(knot_report({"i1", "3;1"}), domain_error);
}

TEST(Report, Deterministic) {
  EXPECT_EQ(knot_report({"fraction", "17/12"}).dump(), knot_report({"fraction", "17/12"}).dump());
  EXPECT_TRUE(knot_report({"fraction", "3/2"}, true).contains("timing_ms"));
}

TEST(Report, TextFormat) {
  std::string t = report_text(knot_report({"fraction", "3/2"}));
  EXPECT_NE(t.find("inv1: I1(2;1)"), std::string::npos);
  EXPECT_NE(t.find("order: InfiniteOrder"), std::string::npos);
}

TEST(Table, SmallCases) {
  auto three = table_records(3, 1);
  ASSERT_EQ(three.size(), 1u);
  EXPECT_EQ(three[0]["p"], 3);
  EXPECT_EQ(three[0]["q"], 2);

  auto nine = table_inputs(9);
  std::vector<std::pair<long, long>> want{{3, 2}, {5, 2}, {5, 4}, {7, 2}, {7, 6}, {9, 2}, {9, 8}};
  EXPECT_EQ(nine, want);
  EXPECT_THROW(table_records(2, 1), domain_error);
}

TEST(Table, OneRecordPerClass) {
  auto in = table_inputs(45);
  for (std::size_t i = 0; i < in.size(); ++i)
    for (std::size_t j = i + 1; j < in.size(); ++j) {
      auto [p1, q1] = in[i];
      auto [p2, q2] = in[j];
      EXPECT_FALSE(two_bridge_equiv(Int(p1), Int(q1), Int(p2), Int(q2)) || two_bridge_equiv(Int(p1), Int(-q1), Int(p2), Int(q2)));
    }
}

TEST(Table, ParallelOutputIsIdentical) {
  auto a = table_records(21, 1), b = table_records(21, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].dump(), b[i].dump());
}

TEST(Table, CsvRows) {
  auto r = table_records(7, 1);
  std::string rows = csv_rows(r.back());
  EXPECT_EQ(rows, "7,6,inv1,\"I1(2,2,2;1,1,1)\",t^-3 + t^-2 + t^-1 - 6 + t + t^2 + t^3,-8,-2,NotEquivariantlySlice,48,48,"
                  "InfiniteOrder\n");
  EXPECT_EQ(csv_quote("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_quote("say \"x\", y"), "\"say \"\"x\"\", y\"");
}

TEST(Verify, PassesAndIsReproducible) {
  VerifyResult a = run_verify(50, 7), b = run_verify(50, 7);
  EXPECT_TRUE(a.ok()) << a.failure;
  ASSERT_EQ(a.suites.size(), 6u);
  for (std::size_t i = 0; i < a.suites.size(); ++i) {
    EXPECT_EQ(a.suites[i].passed, 50);
    EXPECT_EQ(b.suites[i].passed, a.suites[i].passed);
  }
  EXPECT_THROW(run_verify(0, 1), domain_error);
}

TEST(Verify, CounterexampleFormatReplays) {
  // a reported counterexample is a presentation spec that analyze --i1 accepts
  PresentationSampler g(7);
  for (int i = 0; i < 50; ++i) {
    I1Presentation p = g.next();
    json r = knot_report({"i1", p.spec()});
    EXPECT_EQ(r["inversions"][0]["presentation"], p.str());
  }
}
