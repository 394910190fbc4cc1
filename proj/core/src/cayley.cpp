#include "abelsnf/cayley.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

#include "abelsnf/errors.hpp"

namespace abelsnf {

ConnectingSet::ConnectingSet(const GroupSpec& spec, std::vector<std::uint64_t> indices)
    : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  for (auto i : indices_) {
    if (i >= spec.size()) throw InputError("element index out of range");
  }
  symmetric_ = std::all_of(indices_.begin(), indices_.end(),
                           [&](std::uint64_t e) { return contains(spec.negate(e)); });
}

ConnectingSet ConnectingSet::from_elements(const GroupSpec& spec,
                                           std::span<const GroupElement> elements) {
  std::vector<std::uint64_t> indices;
  indices.reserve(elements.size());
  for (const auto& e : elements) indices.push_back(spec.index_of(e.coords));
  return ConnectingSet(spec, std::move(indices));
}

ConnectingSet ConnectingSet::from_indices(const GroupSpec& spec, std::vector<std::uint64_t> indices) {
  return ConnectingSet(spec, std::move(indices));
}

ConnectingSet ConnectingSet::from_weights(const GroupSpec& spec,
                                          std::span<const std::uint32_t> weights) {
  std::vector<bool> wanted(spec.rank() + 1, false);
  for (auto k : weights) {
    if (k > spec.rank()) {
      throw InputError("weight " + std::to_string(k) + " exceeds group rank " +
                       std::to_string(spec.rank()));
    }
    wanted[k] = true;
  }
  std::vector<std::uint64_t> indices;
  for (std::uint64_t g = 0; g < spec.size(); ++g) {
    if (wanted[spec.weight(g)]) indices.push_back(g);
  }
  ConnectingSet set(spec, std::move(indices));
  std::vector<std::uint32_t> sorted;
  for (std::uint32_t k = 0; k < wanted.size(); ++k) {
    if (wanted[k]) sorted.push_back(k);
  }
  set.weights_ = std::move(sorted);
  return set;
}

bool ConnectingSet::contains(std::uint64_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

ConnectingSet ConnectingSet::inverse(const GroupSpec& spec) const {
  std::vector<std::uint64_t> inv;
  inv.reserve(indices_.size());
  for (auto e : indices_) inv.push_back(spec.negate(e));
  ConnectingSet out(spec, std::move(inv));
  out.weights_ = weights_;
  return out;
}

std::string ConnectingSet::describe(const GroupSpec& spec) const {
  std::ostringstream out;
  if (weights_) {
    out << "W{";
    for (std::size_t i = 0; i < weights_->size(); ++i) out << (i ? "," : "") << (*weights_)[i];
    out << '}';
    return out.str();
  }
  out << '{';
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i) out << ',';
    out << '(';
    auto coords = spec.coords_of(indices_[i]);
    for (std::size_t j = 0; j < coords.size(); ++j) out << (j ? "," : "") << coords[j];
    out << ')';
  }
  out << '}';
  return out.str();
}

ConnectingSet weight_class(const GroupSpec& spec, std::uint32_t k) {
  if (k > spec.rank()) {
    throw InputError("weight class E_" + std::to_string(k) + " requires 0 <= k <= " +
                     std::to_string(spec.rank()));
  }
  const std::uint32_t w[] = {k};
  return ConnectingSet::from_weights(spec, w);
}

MatrixCombo MatrixCombo::adjacency(ConnectingSet set) {
  MatrixCombo combo;
  combo.terms.push_back({1, std::move(set)});
  return combo;
}

MatrixCombo MatrixCombo::laplacian(ConnectingSet set) {
  MatrixCombo combo;
  combo.identity_coeff = static_cast<std::int64_t>(set.size());
  combo.terms.push_back({-1, std::move(set)});
  return combo;
}

bool MatrixCombo::all_weight_unions() const {
  return std::all_of(terms.begin(), terms.end(),
                     [](const ComboTerm& t) { return t.set.weights().has_value(); });
}

std::string MatrixCombo::describe(const GroupSpec& spec) const {
  std::ostringstream out;
  bool first = true;
  if (identity_coeff != 0) {
    if (identity_coeff == -1) out << '-';
    else if (identity_coeff != 1) out << identity_coeff << '*';
    out << 'I';
    first = false;
  }
  for (const auto& term : terms) {
    if (!first) out << (term.coeff < 0 ? "-" : "+");
    else if (term.coeff < 0) out << '-';
    const auto magnitude = term.coeff < 0 ? -term.coeff : term.coeff;
    if (magnitude != 1) out << magnitude << '*';
    out << "A[" << term.set.describe(spec) << ']';
    first = false;
  }
  if (first) out << '0';
  return out.str();
}

namespace {

void check_cap(const GroupSpec& spec, std::uint64_t cap) {
  if (spec.size() > cap) {
    throw ResourceError("matrix dimension " + std::to_string(spec.size()) +
                        " exceeds dense cap " + std::to_string(cap));
  }
}

}  // namespace

IntegerMatrix combo_matrix(const GroupSpec& spec, const MatrixCombo& combo, std::uint64_t cap) {
  check_cap(spec, cap);
  const auto n = spec.size();
  // Accumulate in int64 and convert once; each entry is a sum of at most
  // 1 + #terms coefficients.
  std::vector<std::int64_t> acc(n * n, 0);
  for (std::uint64_t h = 0; h < n; ++h) acc[h * n + h] += combo.identity_coeff;
  for (const auto& term : combo.terms) {
    for (std::uint64_t h = 0; h < n; ++h) {
      for (auto e : term.set.indices()) acc[h * n + spec.add(h, e)] += term.coeff;
    }
  }
  IntegerMatrix m(n, n);
  for (std::uint64_t i = 0; i < n; ++i) {
    for (std::uint64_t j = 0; j < n; ++j) {
      if (acc[i * n + j] != 0) m(i, j) = big(acc[i * n + j]);
    }
  }
  return m;
}

IntegerMatrix adjacency_matrix(const GroupSpec& spec, const ConnectingSet& set, std::uint64_t cap) {
  return combo_matrix(spec, MatrixCombo::adjacency(set), cap);
}

IntegerMatrix laplacian(const GroupSpec& spec, const ConnectingSet& set, std::uint64_t cap) {
  return combo_matrix(spec, MatrixCombo::laplacian(set), cap);
}

bool is_connected(const GroupSpec& spec, const ConnectingSet& set) {
  // Subgroup generated by E; the Cayley graph is connected iff it is all of G.
  std::vector<bool> seen(spec.size(), false);
  std::vector<std::uint64_t> stack{0};
  seen[0] = true;
  std::uint64_t count = 1;
  while (!stack.empty()) {
    auto g = stack.back();
    stack.pop_back();
    for (auto e : set.indices()) {
      auto h = spec.add(g, e);
      if (!seen[h]) {
        seen[h] = true;
        ++count;
        stack.push_back(h);
      }
    }
  }
  return count == spec.size();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <class T>
T parse_number(std::string_view text, std::string_view what) {
  text = trim(text);
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::vector<GroupElement> parse_elements(const GroupSpec& spec, std::string_view text) {
  std::vector<GroupElement> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    GroupElement e;
    if (text[pos] == '(') {
      auto close = text.find(')', pos);
      if (close == std::string_view::npos) throw InputError("unbalanced '(' in element list");
      auto body = text.substr(pos + 1, close - pos - 1);
      std::size_t s = 0;
      while (true) {
        auto comma = body.find(',', s);
        auto piece = body.substr(s, comma == std::string_view::npos ? std::string_view::npos : comma - s);
        e.coords.push_back(parse_number<std::uint32_t>(piece, "coordinate"));
        if (comma == std::string_view::npos) break;
        s = comma + 1;
      }
      pos = close + 1;
    } else {
      auto comma = text.find(',', pos);
      auto piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      e.coords.push_back(parse_number<std::uint32_t>(piece, "coordinate"));
      pos = comma == std::string_view::npos ? text.size() : comma;
    }
    spec.validate(e.coords);
    out.push_back(std::move(e));
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos < text.size()) {
      if (text[pos] != ',') throw InputError("expected ',' between elements");
      ++pos;
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == text.size()) throw InputError("trailing ',' in element list");
    }
  }
  return out;
}

std::vector<std::uint32_t> parse_weights(const GroupSpec& spec, std::string_view text) {
  std::vector<std::uint32_t> out;
  text = trim(text);
  if (text.empty()) throw InputError("empty weight list");
  std::size_t s = 0;
  while (true) {
    auto comma = text.find(',', s);
    auto piece = text.substr(s, comma == std::string_view::npos ? std::string_view::npos : comma - s);
    auto k = parse_number<std::uint32_t>(piece, "weight");
    if (k > spec.rank()) {
      throw InputError("weight " + std::to_string(k) + " exceeds group rank " +
                       std::to_string(spec.rank()));
    }
    out.push_back(k);
    if (comma == std::string_view::npos) break;
    s = comma + 1;
  }
  return out;
}

MatrixCombo parse_combo(const GroupSpec& spec, std::string_view text, const ConnectingSet* named) {
  MatrixCombo combo;
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.empty()) throw InputError("empty combo expression");
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw InputError("bad combo '" + std::string(text) + "': " + why);
  };
  while (pos < compact.size()) {
    std::int64_t sign = 1;
    if (compact[pos] == '+' || compact[pos] == '-') {
      sign = compact[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      fail("expected '+' or '-'");
    }
    std::int64_t coeff = 1;
    std::size_t digits = pos;
    while (digits < compact.size() && std::isdigit(static_cast<unsigned char>(compact[digits]))) ++digits;
    if (digits > pos) {
      coeff = parse_number<std::int64_t>(std::string_view(compact).substr(pos, digits - pos), "coefficient");
      pos = digits;
      if (pos < compact.size() && compact[pos] == '*') {
        ++pos;
      } else {
        combo.identity_coeff += sign * coeff;
        continue;
      }
    }
    if (pos >= compact.size()) fail("missing term after coefficient");
    const char atom = compact[pos++];
    coeff *= sign;
    if (atom == 'I') {
      combo.identity_coeff += coeff;
    } else if (atom == 'W') {
      std::size_t end = pos;
      while (end < compact.size() && std::isdigit(static_cast<unsigned char>(compact[end]))) ++end;
      if (end == pos) fail("W must be followed by a weight");
      auto k = parse_number<std::uint32_t>(std::string_view(compact).substr(pos, end - pos), "weight");
      pos = end;
      combo.terms.push_back({coeff, weight_class(spec, k)});
    } else if (atom == 'A') {
      if (named == nullptr) fail("'A' used without --weights or --elements");
      combo.terms.push_back({coeff, *named});
    } else {
      fail(std::string("unknown term '") + atom + "'");
    }
  }
  return combo;
}

}  // namespace abelsnf
