#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace abelsnf {

/// Element of Z_{q1} x ... x Z_{qn}, written additively as residue tuples.
struct GroupElement {
  std::vector<std::uint32_t> coords;
  auto operator<=>(const GroupElement&) const = default;
};

/// Irreducible character of Z_{q1} x ... x Z_{qn}, indexed by the same residue
/// tuples as the elements. chi(g) = zeta_m^(sum_i (m/q_i) a_i g_i).
struct Character {
  std::vector<std::uint32_t> coords;
  bool is_principal() const;
  auto operator<=>(const Character&) const = default;
};

/// The finite abelian group Z_{q1} x ... x Z_{qn} with a fixed cyclic
/// decomposition. Elements and characters are enumerated in mixed-radix
/// order with the last coordinate varying fastest, so index 0 is always the
/// identity / principal character.
class GroupSpec {
 public:
  explicit GroupSpec(std::vector<std::uint32_t> orders);

  const std::vector<std::uint32_t>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::uint64_t size() const { return size_; }
  /// lcm of the orders; characters take values in Z[zeta_m] for this m.
  std::uint32_t exponent() const { return exponent_; }

  std::uint64_t index_of(std::span<const std::uint32_t> coords) const;
  std::vector<std::uint32_t> coords_of(std::uint64_t index) const;
  void coords_of(std::uint64_t index, std::span<std::uint32_t> out) const;

  /// Index of g + h.
  std::uint64_t add(std::uint64_t g, std::uint64_t h) const;
  /// Index of -g.
  std::uint64_t negate(std::uint64_t g) const;
  /// Number of non-identity coordinates.
  std::uint32_t weight(std::uint64_t g) const;

  void validate(std::span<const std::uint32_t> coords) const;

  /// "q1,q2,...", the inverse of parse_group_spec for explicit lists.
  std::string to_string() const;

  bool operator==(const GroupSpec& other) const { return orders_ == other.orders_; }

 private:
  std::vector<std::uint32_t> orders_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t size_ = 1;
  std::uint32_t exponent_ = 1;
};

/// Parses "q1,q2,...,qn" and the power shorthand "q^n"; items may be mixed,
/// e.g. "2^3,5".
GroupSpec parse_group_spec(std::string_view text);

/// Returns t in [0, m) with chi(g) = zeta_m^t.
std::uint32_t char_exponent(const GroupSpec& spec, const Character& chi,
                            const GroupElement& g);
/// Same, addressed by enumeration index of the character and the element.
std::uint32_t char_exponent(const GroupSpec& spec, std::uint64_t chi,
                            std::uint64_t g);

std::vector<GroupElement> enumerate_elements(const GroupSpec& spec);
std::vector<Character> enumerate_characters(const GroupSpec& spec);

/// Dense character table as exponents of zeta_m; rows are characters and
/// columns are elements, both in enumeration order.
class CharTable {
 public:
  CharTable(std::uint64_t order, std::uint32_t modulus,
            std::vector<std::uint32_t> exponents)
      : order_(order), modulus_(modulus), exponents_(std::move(exponents)) {}

  std::uint64_t order() const { return order_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t operator()(std::uint64_t chi, std::uint64_t g) const {
    return exponents_[chi * order_ + g];
  }

 private:
  std::uint64_t order_;
  std::uint32_t modulus_;
  std::vector<std::uint32_t> exponents_;
};

inline constexpr std::uint64_t kDefaultDenseCap = 4096;

CharTable char_table(const GroupSpec& spec, std::uint64_t cap = kDefaultDenseCap);

}  // namespace abelsnf
