#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "abelsnf/abelian_group.hpp"
#include "abelsnf/errors.hpp"
#include "abelsnf/snf.hpp"
#include "helpers.hpp"

using namespace abelsnf;
using testing_support::random_matrix;
using testing_support::random_unimodular;
using testing_support::to_oracle;

namespace {

void expect_divisibility_chain(const std::vector<BigInt>& d) {
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    EXPECT_GE(d[i], 0);
    if (d[i] != 0) {
      EXPECT_TRUE(mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()));
    } else {
      EXPECT_EQ(d[i + 1], 0);
    }
  }
}

}  // namespace

TEST(Snf, MatchesMinorsGcdOracle) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 60; ++t) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    auto m = random_matrix(rng, rows, cols, -6, 6);
    if (t % 4 == 0 && rows > 1) {
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = 2 * m(0, c);  // force rank deficiency
    }
    const auto snf = smith_normal_form(m);
    const auto expected = oracle::invariant_factors(to_oracle(m));
    ASSERT_EQ(snf.diagonal.size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(snf.diagonal[i], expected[i]);
    expect_divisibility_chain(snf.diagonal);
  }
}

TEST(Snf, TransformsReproduceDiagonal) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    const auto m = random_matrix(rng, rows, cols, -9, 9);
    const auto snf = smith_normal_form(m, true);
    ASSERT_TRUE(snf.left && snf.right);
    const auto s = *snf.left * m * *snf.right;
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) EXPECT_EQ(s(r, c), r == c ? snf.diagonal[r] : BigInt(0));
    }
    EXPECT_EQ(abs(determinant(*snf.left)), 1);
    EXPECT_EQ(abs(determinant(*snf.right)), 1);
  }
}

TEST(Snf, InvariantUnderUnimodularAndTranspose) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const std::size_t rows = 2 + rng() % 6, cols = 2 + rng() % 6;
    const auto m = random_matrix(rng, rows, cols, -5, 5);
    const auto base = smith_normal_form(m).diagonal;
    const auto u = random_unimodular(rng, rows), v = random_unimodular(rng, cols);
    EXPECT_EQ(smith_normal_form(u * m * v).diagonal, base);
    EXPECT_EQ(smith_normal_form(m.transpose()).diagonal, base);
  }
}

TEST(Snf, LargeEntriesFallBackToBigIntegers) {
  IntegerMatrix m(3, 3);
  const BigInt big_value = power(BigInt(10), 30);
  m(0, 0) = big_value;
  m(0, 1) = big_value + 1;
  m(1, 0) = 3;
  m(1, 1) = 4 * big_value;
  m(2, 2) = big_value * big_value;
  const auto snf = smith_normal_form(m);
  const auto expected = oracle::invariant_factors(to_oracle(m));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(snf.diagonal[i], expected[i]);
}

TEST(Snf, LocalMethodAgreesWithFull) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng() % 7;
    auto m = random_matrix(rng, n, n, -8, 8);
    if (t % 3 == 0) {
      for (std::size_t c = 0; c < n; ++c) m(n - 1, c) = m(0, c) * 4;
    }
    for (std::uint64_t p : {2u, 3u, 5u}) {
      EXPECT_EQ(elementary_divisors_at(m, p, DivisorMethod::LocalModPk),
                elementary_divisors_at(m, p, DivisorMethod::FullSnf));
    }
  }
}

TEST(Snf, Profiles) {
  const std::vector<BigInt> d{1, 2, 12, 0};
  const auto p2 = profile_from_diagonal(d, 2);
  EXPECT_EQ(p2.multiplicities.at(0), 1u);
  EXPECT_EQ(p2.multiplicities.at(1), 1u);
  EXPECT_EQ(p2.multiplicities.at(2), 1u);
  EXPECT_EQ(p2.zero_count, 1u);
}

TEST(Snf, CokernelAndCriticalGroups) {
  IntegerMatrix m(3, 2);
  m(0, 0) = 2;
  m(1, 1) = 6;
  const auto g = cokernel_structure(m);
  EXPECT_EQ(g.invariant_factors(), (std::vector<BigInt>{2, 6}));
  EXPECT_EQ(g.free_rank(), 1u);

  const GroupSpec c4({2, 2});
  EXPECT_EQ(critical_group(c4, weight_class(c4, 1)).torsion_string(), "Z/4");
  const GroupSpec cube({2, 2, 2});
  const auto crit = critical_group(cube, weight_class(cube, 1));
  EXPECT_EQ(crit.torsion_order(), 384);
  EXPECT_EQ(crit.free_rank(), 1u);
  EXPECT_EQ(spanning_tree_count(cube, weight_class(cube, 1)), 384);
  // K_2 x K_3 prism
  const GroupSpec prism({2, 3});
  EXPECT_EQ(spanning_tree_count(prism, weight_class(prism, 1)), 75);
  EXPECT_EQ(critical_group(prism, weight_class(prism, 1)).torsion_order(), 75);
}

TEST(Snf, AbelianGroupStructure) {
  const std::vector<BigInt> cyclic{4, 6, 9};
  const auto g = AbelianGroupStructure::from_cyclic_factors(cyclic);
  EXPECT_EQ(g.torsion_order(), 216);
  EXPECT_EQ(g.invariant_factors(), (std::vector<BigInt>{6, 36}));
  EXPECT_EQ(g.sylow(3).invariant_factors(), (std::vector<BigInt>{3, 9}));
  EXPECT_EQ(g.sylow(2).invariant_factors(), (std::vector<BigInt>{2, 4}));
  EXPECT_EQ(g.sylow(5).torsion_string(), "0");
}

TEST(Snf, MatrixTextRoundTrip) {
  std::istringstream in("2 3\n1 -2 3\n4 5 600000000000000000000\n");
  const auto m = read_matrix_text(in);
  std::ostringstream out;
  write_matrix_text(out, m);
  std::istringstream again(out.str());
  EXPECT_EQ(read_matrix_text(again), m);
  std::istringstream bad("2 2\n1 2 3\n");
  EXPECT_THROW(read_matrix_text(bad), InputError);
}

TEST(Snf, OverflowPathsAgreeWithEuclideanBigIntegers) {
  // The transform-tracking path runs plain Euclidean elimination over GMP
  // integers; the fast path goes through a minor and local elimination.
  std::mt19937_64 rng(6);
  for (int t = 0; t < 6; ++t) {
    const std::size_t n = 14 + rng() % 6;
    auto m = random_matrix(rng, n, n + 2, -2000000, 2000000);
    if (t % 2 == 0) {
      for (std::size_t c = 0; c < n + 2; ++c) m(n - 1, c) = m(0, c) * 3 - m(1, c);
    }
    EXPECT_EQ(smith_normal_form(m).diagonal, smith_normal_form(m, true).diagonal);
  }
  const GroupSpec g({3, 3, 3});
  const auto a2 = adjacency_matrix(g, weight_class(g, 2));
  EXPECT_EQ(smith_normal_form(a2).diagonal, smith_normal_form(a2, true).diagonal);
}
