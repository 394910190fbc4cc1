#include "abelsnf/group.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

#include "abelsnf/errors.hpp"

namespace abelsnf {

bool Character::is_principal() const {
  return std::all_of(coords.begin(), coords.end(), [](auto a) { return a == 0; });
}

GroupSpec::GroupSpec(std::vector<std::uint32_t> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw InputError("group must have at least one cyclic factor");
  std::uint64_t lcm = 1;
  for (auto q : orders_) {
    if (q < 2) {
      throw InputError("cyclic factor orders must be >= 2 (got " + std::to_string(q) + ")");
    }
    if (size_ > std::numeric_limits<std::uint64_t>::max() / q) {
      throw ResourceError("group order overflows 64 bits");
    }
    size_ *= q;
    lcm = std::lcm(lcm, static_cast<std::uint64_t>(q));
    if (lcm > std::numeric_limits<std::uint32_t>::max()) {
      throw ResourceError("group exponent overflows 32 bits");
    }
  }
  exponent_ = static_cast<std::uint32_t>(lcm);
  strides_.assign(orders_.size(), 1);
  for (std::size_t i = orders_.size(); i-- > 1;) {
    strides_[i - 1] = strides_[i] * orders_[i];
  }
}

void GroupSpec::validate(std::span<const std::uint32_t> coords) const {
  if (coords.size() != orders_.size()) {
    throw InputError("tuple has " + std::to_string(coords.size()) +
                     " coordinates, group has rank " + std::to_string(orders_.size()));
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] >= orders_[i]) {
      throw InputError("coordinate " + std::to_string(coords[i]) + " out of range for Z_" +
                       std::to_string(orders_[i]));
    }
  }
}

std::uint64_t GroupSpec::index_of(std::span<const std::uint32_t> coords) const {
  validate(coords);
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) index += coords[i] * strides_[i];
  return index;
}

std::vector<std::uint32_t> GroupSpec::coords_of(std::uint64_t index) const {
  std::vector<std::uint32_t> out(orders_.size());
  coords_of(index, out);
  return out;
}

void GroupSpec::coords_of(std::uint64_t index, std::span<std::uint32_t> out) const {
  for (std::size_t i = orders_.size(); i-- > 0;) {
    out[i] = static_cast<std::uint32_t>(index % orders_[i]);
    index /= orders_[i];
  }
}

std::uint64_t GroupSpec::add(std::uint64_t g, std::uint64_t h) const {
  std::uint64_t result = 0;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    const std::uint64_t q = orders_[i];
    result += ((g % q + h % q) % q) * strides_[i];
    g /= q;
    h /= q;
  }
  return result;
}

std::uint64_t GroupSpec::negate(std::uint64_t g) const {
  std::uint64_t result = 0;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    const std::uint64_t q = orders_[i];
    result += ((q - g % q) % q) * strides_[i];
    g /= q;
  }
  return result;
}

std::uint32_t GroupSpec::weight(std::uint64_t g) const {
  std::uint32_t w = 0;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    if (g % orders_[i] != 0) ++w;
    g /= orders_[i];
  }
  return w;
}

std::string GroupSpec::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) out << ',';
    out << orders_[i];
  }
  return out.str();
}

namespace {

std::uint32_t parse_u32(std::string_view text, std::string_view what) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
  std::vector<std::uint32_t> orders;
  if (text.empty()) throw InputError("empty group specification");
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto item = text.substr(start, end - start);
    auto caret = item.find('^');
    if (caret == std::string_view::npos) {
      orders.push_back(parse_u32(item, "cyclic order"));
    } else {
      auto q = parse_u32(item.substr(0, caret), "cyclic order");
      auto n = parse_u32(item.substr(caret + 1), "power");
      if (n == 0) throw InputError("power in '" + std::string(item) + "' must be >= 1");
      if (n > 64) throw ResourceError("power in '" + std::string(item) + "' is too large");
      orders.insert(orders.end(), n, q);
    }
    start = end + 1;
  }
  return GroupSpec(std::move(orders));
}

std::uint32_t char_exponent(const GroupSpec& spec, const Character& chi,
                            const GroupElement& g) {
  spec.validate(chi.coords);
  spec.validate(g.coords);
  const std::uint64_t m = spec.exponent();
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    const std::uint64_t q = spec.orders()[i];
    t = (t + (m / q) * ((static_cast<std::uint64_t>(chi.coords[i]) * g.coords[i]) % q)) % m;
  }
  return static_cast<std::uint32_t>(t);
}

std::uint32_t char_exponent(const GroupSpec& spec, std::uint64_t chi, std::uint64_t g) {
  const std::uint64_t m = spec.exponent();
  std::uint64_t t = 0;
  const auto& orders = spec.orders();
  for (std::size_t i = orders.size(); i-- > 0;) {
    const std::uint64_t q = orders[i];
    t += (m / q) * (((chi % q) * (g % q)) % q);
    chi /= q;
    g /= q;
  }
  return static_cast<std::uint32_t>(t % m);
}

std::vector<GroupElement> enumerate_elements(const GroupSpec& spec) {
  std::vector<GroupElement> out;
  out.reserve(spec.size());
  for (std::uint64_t i = 0; i < spec.size(); ++i) out.push_back({spec.coords_of(i)});
  return out;
}

std::vector<Character> enumerate_characters(const GroupSpec& spec) {
  std::vector<Character> out;
  out.reserve(spec.size());
  for (std::uint64_t i = 0; i < spec.size(); ++i) out.push_back({spec.coords_of(i)});
  return out;
}

CharTable char_table(const GroupSpec& spec, std::uint64_t cap) {
  const auto n = spec.size();
  if (n > cap) {
    throw ResourceError("character table of order " + std::to_string(n) +
                        " exceeds dense cap " + std::to_string(cap));
  }
  std::vector<std::uint32_t> exps(n * n);
  for (std::uint64_t chi = 0; chi < n; ++chi) {
    for (std::uint64_t g = 0; g < n; ++g) exps[chi * n + g] = char_exponent(spec, chi, g);
  }
  return CharTable(n, spec.exponent(), std::move(exps));
}

}  // namespace abelsnf
