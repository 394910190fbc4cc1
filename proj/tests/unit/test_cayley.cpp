#include <gtest/gtest.h>

#include "abelsnf/cayley.hpp"
#include "abelsnf/errors.hpp"

using namespace abelsnf;

TEST(Cayley, WeightClassSizes) {
  const GroupSpec g({3, 3, 3});
  // C(n,k) (q-1)^k
  EXPECT_EQ(weight_class(g, 0).size(), 1u);
  EXPECT_EQ(weight_class(g, 1).size(), 6u);
  EXPECT_EQ(weight_class(g, 2).size(), 12u);
  EXPECT_EQ(weight_class(g, 3).size(), 8u);
}

TEST(Cayley, AdjacencyEntries) {
  const GroupSpec g({7});
  const auto set = ConnectingSet::from_elements(g, parse_elements(g, "(4),(5),(6)"));
  const auto a = adjacency_matrix(g, set);
  for (std::uint64_t h = 0; h < 7; ++h) {
    int row_sum = 0;
    for (std::uint64_t x = 0; x < 7; ++x) {
      const bool edge = set.contains((x + 7 - h) % 7);
      EXPECT_EQ(a(h, x), edge ? 1 : 0);
      row_sum += a(h, x).get_si();
    }
    EXPECT_EQ(row_sum, 3);
  }
  EXPECT_FALSE(set.is_symmetric());
  EXPECT_TRUE(set.inverse(g).contains(1));
}

TEST(Cayley, LaplacianAndConnectivity) {
  const GroupSpec g({2, 2, 2});
  const auto e1 = weight_class(g, 1);
  EXPECT_TRUE(e1.is_symmetric());
  EXPECT_TRUE(is_connected(g, e1));
  const auto l = laplacian(g, e1);
  for (std::size_t r = 0; r < 8; ++r) {
    mpz_class s = 0;
    for (std::size_t c = 0; c < 8; ++c) s += l(r, c);
    EXPECT_EQ(s, 0);
    EXPECT_EQ(l(r, r), 3);
  }
  EXPECT_FALSE(is_connected(g, weight_class(g, 2)));
}

TEST(Cayley, ParsesCombos) {
  const GroupSpec g({2, 2});
  const auto combo = parse_combo(g, "2*W1-3*I+W2");
  const auto m = combo_matrix(g, combo);
  EXPECT_EQ(m(0, 0), -3);
  EXPECT_EQ(m(0, 1), 2);
  EXPECT_EQ(m(0, 3), 1);
  const auto set = ConnectingSet::from_weights(g, parse_weights(g, "1"));
  const auto named = parse_combo(g, "2-A", &set);
  EXPECT_EQ(combo_matrix(g, named), laplacian(g, set));
  EXPECT_THROW(parse_combo(g, "2*Q"), InputError);
  EXPECT_THROW(parse_combo(g, "A"), InputError);
  EXPECT_THROW(parse_weights(g, "3"), InputError);
  EXPECT_THROW(parse_elements(g, "(1,2)"), InputError);
}

TEST(Cayley, ComboLinearity) {
  const GroupSpec g({3, 4});
  const auto a1 = adjacency_matrix(g, weight_class(g, 1));
  const auto a2 = adjacency_matrix(g, weight_class(g, 2));
  const auto m = combo_matrix(g, parse_combo(g, "3*W1-2*W2+5*I"));
  for (std::size_t r = 0; r < 12; ++r) {
    for (std::size_t c = 0; c < 12; ++c) {
      EXPECT_EQ(m(r, c), 3 * a1(r, c) - 2 * a2(r, c) + (r == c ? 5 : 0));
    }
  }
}
