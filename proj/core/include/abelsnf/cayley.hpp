#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "abelsnf/group.hpp"
#include "abelsnf/matrix.hpp"

namespace abelsnf {

/// A connecting set E of a group, materialized as a sorted, duplicate-free
/// list of element indices.
class ConnectingSet {
 public:
  static ConnectingSet from_elements(const GroupSpec& spec, std::span<const GroupElement> elements);
  static ConnectingSet from_indices(const GroupSpec& spec, std::vector<std::uint64_t> indices);
  /// Union of the weight classes E_k for k in `weights`.
  static ConnectingSet from_weights(const GroupSpec& spec, std::span<const std::uint32_t> weights);

  const std::vector<std::uint64_t>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool contains(std::uint64_t index) const;
  bool contains_identity() const { return !indices_.empty() && indices_.front() == 0; }
  /// E = E^{-1}.
  bool is_symmetric() const { return symmetric_; }
  /// Set when E was built as a union of weight classes; such sets have an
  /// integral spectrum.
  const std::optional<std::vector<std::uint32_t>>& weights() const { return weights_; }

  ConnectingSet inverse(const GroupSpec& spec) const;

  /// "W{1,3}" for weight unions, otherwise the explicit tuple list.
  std::string describe(const GroupSpec& spec) const;

  bool operator==(const ConnectingSet& other) const { return indices_ == other.indices_; }

 private:
  ConnectingSet(const GroupSpec& spec, std::vector<std::uint64_t> indices);

  std::vector<std::uint64_t> indices_;
  bool symmetric_ = false;
  std::optional<std::vector<std::uint32_t>> weights_;
};

/// E_k: elements with exactly k non-identity coordinates.
ConnectingSet weight_class(const GroupSpec& spec, std::uint32_t k);

struct ComboTerm {
  std::int64_t coeff = 0;
  ConnectingSet set;
};

/// c0 * I + sum_E c_E * A_E.
struct MatrixCombo {
  std::int64_t identity_coeff = 0;
  std::vector<ComboTerm> terms;

  static MatrixCombo adjacency(ConnectingSet set);
  /// |E| * I - A_E.
  static MatrixCombo laplacian(ConnectingSet set);

  bool all_weight_unions() const;
  std::string describe(const GroupSpec& spec) const;
};

IntegerMatrix adjacency_matrix(const GroupSpec& spec, const ConnectingSet& set,
                               std::uint64_t cap = kDefaultDenseCap);
IntegerMatrix laplacian(const GroupSpec& spec, const ConnectingSet& set,
                        std::uint64_t cap = kDefaultDenseCap);
IntegerMatrix combo_matrix(const GroupSpec& spec, const MatrixCombo& combo,
                           std::uint64_t cap = kDefaultDenseCap);

/// True when the Cayley graph is connected, i.e. E generates the group.
bool is_connected(const GroupSpec& spec, const ConnectingSet& set);

/// "(1,0),(0,2)"; single-coordinate tuples may omit the parentheses.
std::vector<GroupElement> parse_elements(const GroupSpec& spec, std::string_view text);
/// "1,3".
std::vector<std::uint32_t> parse_weights(const GroupSpec& spec, std::string_view text);
/// Integer combination such as "2*W1-3*I+W0". Atoms: I, W<k>, and A (the
/// connecting set passed as `named`, when given). A bare integer is a
/// multiple of I.
MatrixCombo parse_combo(const GroupSpec& spec, std::string_view text,
                        const ConnectingSet* named = nullptr);

}  // namespace abelsnf
