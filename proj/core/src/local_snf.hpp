#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "abelsnf/matrix.hpp"

namespace abelsnf::detail {

// Elimination over Z/p^precision with least-valuation pivots. Returns the
// valuations of the pivots found, in elimination order; entries that vanish
// mod p^precision are not reported.
std::vector<std::uint32_t> local_valuations(const IntegerMatrix& input, std::uint64_t p,
                                            std::uint32_t precision);

// Same, with p^precision < 2^62 held in machine words.
std::vector<std::uint32_t> local_valuations_word(const IntegerMatrix& input, std::uint64_t p,
                                                 std::uint32_t precision);

// Exact rank r and |last Bareiss pivot|, a nonzero r x r minor (1 if r = 0).
std::pair<std::size_t, BigInt> rank_and_minor(const IntegerMatrix& input);

// Valuations of all `rank` nonzero invariant factors, each known to be below
// `ceiling`; tries word-sized precisions first.
std::vector<std::uint32_t> local_valuations_for_rank(const IntegerMatrix& m, std::uint64_t p, std::size_t rank,
                                                     std::uint32_t ceiling);

}  // namespace abelsnf::detail
