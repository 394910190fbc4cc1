#include "abelsnf/json_io.hpp"

namespace abelsnf {

Json to_json(const BigInt& value) {
  if (fits_i64(value)) return to_i64(value);
  return value.get_str();
}

Json to_json(const CyclotomicInteger& value) {
  Json coeffs = Json::array();
  for (const auto& c : value.coeffs()) coeffs.push_back(to_json(c));
  Json out = {{"m", value.modulus()}, {"coeffs", coeffs}};
  if (auto integer = value.as_integer()) out["integer"] = to_json(*integer);
  return out;
}

Json to_json(const Spectrum& spectrum) {
  Json entries = Json::array();
  for (const auto& e : spectrum.entries()) {
    entries.push_back({{"value", to_json(e.value)}, {"multiplicity", e.multiplicity}});
  }
  return {{"group_size", spectrum.group_size()},
          {"modulus", spectrum.modulus()},
          {"integral", spectrum.is_integral()},
          {"entries", entries}};
}

namespace {

Json power_map(const std::map<std::uint32_t, std::uint64_t>& counts) {
  Json out = Json::object();
  for (const auto& [power, count] : counts) out[std::to_string(power)] = count;
  return out;
}

}  // namespace

Json to_json(const PredictedProfile& profile) {
  return {{"p", profile.p},
          {"per_power", power_map(profile.per_power)},
          {"infinite_count", profile.infinite_count},
          {"pi_choice", profile.pi_choice}};
}

Json to_json(const ElementaryDivisorProfile& profile) {
  return {{"p", profile.p},
          {"multiplicities", power_map(profile.multiplicities)},
          {"zero_count", profile.zero_count}};
}

Json to_json(const AbelianGroupStructure& group) {
  Json factors = Json::array();
  for (const auto& d : group.invariant_factors()) factors.push_back(to_json(d));
  return {{"invariant_factors", factors},
          {"free_rank", group.free_rank()},
          {"order", to_json(group.torsion_order())},
          {"string", group.to_string()}};
}

Json to_json(const IntegerMatrix& matrix) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < matrix.cols(); ++c) row.push_back(to_json(matrix(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const SmithDecomposition& snf) {
  Json diagonal = Json::array();
  for (const auto& d : snf.diagonal) diagonal.push_back(to_json(d));
  Json out = {{"diagonal", diagonal}, {"rank", snf.rank()}};
  if (snf.left) out["left"] = to_json(*snf.left);
  if (snf.right) out["right"] = to_json(*snf.right);
  return out;
}

}  // namespace abelsnf
