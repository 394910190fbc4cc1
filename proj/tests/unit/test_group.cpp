#include <gtest/gtest.h>

#include "abelsnf/errors.hpp"
#include "abelsnf/group.hpp"
#include "oracles.hpp"

using namespace abelsnf;

TEST(Group, ParsesPowersAndLists) {
  EXPECT_EQ(parse_group_spec("2^3").orders(), (std::vector<std::uint32_t>{2, 2, 2}));
  EXPECT_EQ(parse_group_spec("3,4").orders(), (std::vector<std::uint32_t>{3, 4}));
  EXPECT_EQ(parse_group_spec("2^2,5").orders(), (std::vector<std::uint32_t>{2, 2, 5}));
  EXPECT_EQ(parse_group_spec("7").size(), 7u);
}

TEST(Group, RejectsBadInput) {
  EXPECT_THROW(parse_group_spec(""), InputError);
  EXPECT_THROW(parse_group_spec("1"), InputError);
  EXPECT_THROW(parse_group_spec("0,3"), InputError);
  EXPECT_THROW(parse_group_spec("a"), InputError);
  EXPECT_THROW(GroupSpec({}), InputError);
  const GroupSpec g({3, 4});
  const std::vector<std::uint32_t> bad{3, 0};
  EXPECT_THROW(g.validate(bad), InputError);
}

TEST(Group, ExponentIsLcm) {
  EXPECT_EQ(GroupSpec({2, 3, 4}).exponent(), 12u);
  EXPECT_EQ(GroupSpec({2, 2, 2}).exponent(), 2u);
  EXPECT_EQ(GroupSpec({6, 10}).exponent(), 30u);
}

TEST(Group, IndexRoundTripAndArithmetic) {
  const GroupSpec g({3, 4, 5});
  for (std::uint64_t i = 0; i < g.size(); ++i) {
    const auto c = g.coords_of(i);
    EXPECT_EQ(g.index_of(c), i);
    EXPECT_EQ(g.add(i, g.negate(i)), 0u);
    for (std::uint64_t j = 0; j < g.size(); j += 7) {
      const auto d = g.coords_of(j);
      const auto s = g.coords_of(g.add(i, j));
      for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(s[k], (c[k] + d[k]) % g.orders()[k]);
    }
  }
  // last coordinate varies fastest
  EXPECT_EQ(g.coords_of(1), (std::vector<std::uint32_t>{0, 0, 1}));
  EXPECT_EQ(g.weight(g.index_of(std::vector<std::uint32_t>{1, 0, 2})), 2u);
}

TEST(Group, CharacterExponentsMatchComplexValues) {
  for (const auto& orders : std::vector<std::vector<std::uint32_t>>{{7}, {2, 3}, {4, 6}, {2, 2, 3}}) {
    const GroupSpec g(orders);
    const auto m = g.exponent();
    const auto table = char_table(g);
    const auto tuples = oracle::all_tuples(orders);
    for (std::uint64_t a = 0; a < g.size(); ++a) {
      for (std::uint64_t x = 0; x < g.size(); ++x) {
        const auto expected = oracle::character_value(orders, tuples[a], tuples[x]);
        const auto got = oracle::root_of_unity(m, table(a, x));
        EXPECT_NEAR(std::abs(expected - got), 0.0, 1e-9);
        EXPECT_EQ(table(a, x), char_exponent(g, a, x));
      }
    }
  }
}

TEST(Group, EnumerationOrder) {
  const GroupSpec g({2, 3});
  const auto els = enumerate_elements(g);
  ASSERT_EQ(els.size(), 6u);
  EXPECT_EQ(els[4].coords, (std::vector<std::uint32_t>{1, 1}));
  const auto chars = enumerate_characters(g);
  EXPECT_TRUE(chars[0].is_principal());
  EXPECT_FALSE(chars[1].is_principal());
}
