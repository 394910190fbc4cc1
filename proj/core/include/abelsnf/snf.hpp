#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "abelsnf/abelian_group.hpp"
#include "abelsnf/bigint.hpp"
#include "abelsnf/cayley.hpp"
#include "abelsnf/group.hpp"
#include "abelsnf/matrix.hpp"

namespace abelsnf {

inline constexpr std::size_t kDefaultSnfCap = 4096;

/// Smith normal form S = P * M * Q. The diagonal has min(rows, cols) entries:
/// nonnegative, each nonzero entry dividing the next, zeros last.
struct SmithDecomposition {
  std::vector<BigInt> diagonal;
  std::optional<IntegerMatrix> left;   // P, rows x rows, unimodular
  std::optional<IntegerMatrix> right;  // Q, cols x cols, unimodular

  std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& m, bool want_transforms = false,
                                     std::size_t max_dim = kDefaultSnfCap);

/// Multiplicity of each p-power among the nonzero SNF diagonal entries
/// (exponent 0 counts the entries prime to p), plus the number of zero
/// entries.
struct ElementaryDivisorProfile {
  std::uint64_t p = 0;
  std::map<std::uint32_t, std::uint64_t> multiplicities;
  std::uint64_t zero_count = 0;

  bool operator==(const ElementaryDivisorProfile&) const = default;
};

ElementaryDivisorProfile profile_from_diagonal(std::span<const BigInt> diagonal, std::uint64_t p);

enum class DivisorMethod {
  FullSnf,     // read valuations off the integer SNF
  LocalModPk,  // exact rank by Bareiss, then elimination over Z/p^k
};

ElementaryDivisorProfile elementary_divisors_at(const IntegerMatrix& m, std::uint64_t p,
                                                DivisorMethod method = DivisorMethod::FullSnf,
                                                std::size_t max_dim = kDefaultSnfCap);

/// Local Smith form over Z_(p), computed modulo p^N. Exact: N exceeds the
/// p-adic valuation of every nonzero invariant factor.
ElementaryDivisorProfile elementary_divisors_local(const IntegerMatrix& m, std::uint64_t p,
                                                   std::size_t max_dim = kDefaultSnfCap);

/// Z^rows / im(M). For an adjacency matrix this is the Smith group.
AbelianGroupStructure cokernel_structure(const IntegerMatrix& m, std::size_t max_dim = kDefaultSnfCap);

/// Torsion of the Laplacian cokernel, with the free rank (number of
/// connected components for a symmetric set) carried alongside.
AbelianGroupStructure critical_group(const GroupSpec& spec, const ConnectingSet& set,
                                     std::size_t max_dim = kDefaultSnfCap);

/// Number of spanning trees via a principal cofactor of the Laplacian.
/// Requires a symmetric connecting set.
BigInt spanning_tree_count(const GroupSpec& spec, const ConnectingSet& set,
                           std::size_t max_dim = kDefaultSnfCap);

}  // namespace abelsnf
