#include <gtest/gtest.h>

#include "abelsnf/json_io.hpp"
#include "abelsnf/reports.hpp"

using namespace abelsnf;

TEST(Reports, PrimesUpTo) {
  EXPECT_EQ(primes_up_to(20), (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19}));
}

TEST(Reports, WeightClassCases) {
  const GroupSpec g({3, 3});
  EXPECT_EQ(weight_class_cases(g).size(), 5u);
}

TEST(Reports, SmallVerificationGridMatches) {
  VerifyGrid grid;
  for (const auto& orders : std::vector<std::vector<std::uint32_t>>{{2, 2}, {3, 4}, {5}}) {
    for (auto& c : weight_class_cases(GroupSpec(orders))) grid.cases.push_back(std::move(c));
  }
  grid.primes = primes_up_to(13);
  const auto reports = run_verification(grid, 2);
  std::size_t matched = 0;
  for (const auto& r : reports) {
    EXPECT_NE(r.status, VerifyStatus::Mismatch) << r.group << " " << r.combo << " " << r.p;
    matched += r.status == VerifyStatus::Match;
  }
  EXPECT_GT(matched, 0u);
  const auto summary = verification_summary(reports);
  EXPECT_EQ(summary["mismatch"], 0);
}

TEST(Reports, ConjectureRowsForSquare) {
  const auto rows = conjecture_rows(2);
  ASSERT_FALSE(rows.empty());
  EXPECT_EQ(rows[0].i, 0u);
  EXPECT_EQ(rows[0].snf_mult, 2u);
  EXPECT_EQ(rows[0].spectral_count, 2u);
  EXPECT_TRUE(rows[0].agrees);
  const auto report = conjecture_report(rows);
  EXPECT_NE(report.dump().find("evidence"), std::string::npos);
}

TEST(Reports, OddCubeHasOddInvariantFactors) {
  for (const auto& row : conjecture_rows(3)) {
    if (row.i >= 1) {
      EXPECT_EQ(row.snf_mult, 0u);
      EXPECT_EQ(row.spectral_count, 0u);
    }
  }
}

TEST(Reports, NamedFamilies) {
  const auto cube = ncube_report(3);
  EXPECT_EQ(cube["critical_group"]["order"], 384);
  EXPECT_EQ(cube["matrix_tree_check"], true);
  const auto square = ncube_report(2);
  EXPECT_EQ(square["two_rank"]["A"], 2);
  EXPECT_EQ(square["two_rank"]["L"], 2);

  const auto h = hamming_report(2, 3, 2);
  EXPECT_EQ(h["invariant_factors_equal_eigenvalues"], true);
  const auto h3 = hamming_report(3, 2, 3);
  EXPECT_EQ(h3["invariant_factors_equal_eigenvalues"], true);

  const auto prism = cartesian_report({2, 3});
  EXPECT_EQ(prism["spanning_trees"], 75);
  for (const auto& s : prism["sylow"]) EXPECT_EQ(s["match"], true);
}

TEST(Reports, JsonRoundTripIsStable) {
  const GroupSpec g({7});
  const auto s = spectrum_via_characters(g, MatrixCombo::adjacency(
                                                ConnectingSet::from_elements(g, parse_elements(g, "4,5,6"))));
  const auto j = to_json(s);
  const auto text = j.dump();
  EXPECT_EQ(Json::parse(text).dump(), text);
  const auto big = to_json(power(BigInt(10), 30));
  EXPECT_TRUE(big.is_string());
  EXPECT_EQ(to_json(BigInt(-12)), Json(-12));
}
