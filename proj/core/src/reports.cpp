#include "abelsnf/reports.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "abelsnf/errors.hpp"

namespace abelsnf {

std::string to_string(VerifyStatus status) {
  switch (status) {
    case VerifyStatus::Match: return "MATCH";
    case VerifyStatus::Mismatch: return "MISMATCH";
    case VerifyStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

std::vector<VerifyCase> weight_class_cases(const GroupSpec& spec) {
  std::vector<VerifyCase> out;
  for (std::uint32_t k = 0; k <= spec.rank(); ++k) {
    out.push_back({spec, MatrixCombo::adjacency(weight_class(spec, k))});
  }
  for (std::uint32_t k = 1; k <= spec.rank(); ++k) {
    out.push_back({spec, MatrixCombo::laplacian(weight_class(spec, k))});
  }
  return out;
}

std::vector<GroupSpec> standard_verification_groups() {
  std::vector<GroupSpec> out;
  for (std::uint32_t q : {2u, 3u, 4u}) {
    std::uint64_t size = q;
    for (std::uint32_t n = 1; size <= 256; ++n, size *= q) {
      out.emplace_back(std::vector<std::uint32_t>(n, q));
    }
  }
  const std::vector<std::vector<std::uint32_t>> mixed = {
      {5},          {6},          {7},          {10},         {12},        {15},
      {2, 3},       {2, 4},       {2, 5},       {3, 4},       {3, 5},      {4, 5},
      {2, 6},       {3, 6},       {5, 7},       {2, 8},       {4, 8},      {2, 2, 3},
      {2, 3, 3},    {2, 3, 4},    {2, 3, 5},    {3, 3, 4},    {2, 5, 5},   {2, 2, 2, 3},
      {3, 4, 5},    {2, 4, 8},    {7, 11},      {2, 3, 4, 5}, {4, 4, 3, 5}, {2, 2, 2, 2, 3, 5},
  };
  for (const auto& orders : mixed) out.emplace_back(orders);
  return out;
}

namespace {

void run_case(const VerifyCase& c, const VerifyGrid& grid, std::vector<VerificationReport>& out) {
  const std::string group = c.spec.to_string();
  const std::string combo = c.combo.describe(c.spec);
  auto skip_all = [&](const std::string& reason) {
    for (auto p : grid.primes) out.push_back({group, combo, p, VerifyStatus::Skipped, reason, {}, {}});
  };
  if (c.spec.size() > grid.limits.snf || c.spec.size() > grid.limits.spectrum) {
    skip_all("resource: |G| = " + std::to_string(c.spec.size()) + " exceeds cap");
    return;
  }
  const auto matrix = combo_matrix(c.spec, c.combo, grid.limits.dense);
  std::optional<SmithDecomposition> snf;
  const auto spectrum = spectrum_via_characters(c.spec, c.combo, grid.limits.spectrum);
  for (auto p : grid.primes) {
    VerificationReport r{group, combo, p, VerifyStatus::Skipped, "", {}, {}};
    if (c.spec.size() % p == 0) {
      r.reason = "hypothesis: p divides |G|";
      out.push_back(std::move(r));
      continue;
    }
    r.predicted = predict_from_spectrum(spectrum, p, grid.pi_mode);
    if (grid.method == DivisorMethod::LocalModPk) {
      r.oracle = elementary_divisors_local(matrix, p, grid.limits.dense);
    } else {
      if (!snf) snf = smith_normal_form(matrix, false, grid.limits.dense);
      r.oracle = profile_from_diagonal(snf->diagonal, p);
    }
    r.status = profiles_match(*r.predicted, *r.oracle) ? VerifyStatus::Match : VerifyStatus::Mismatch;
    out.push_back(std::move(r));
  }
}

}  // namespace

std::vector<VerificationReport> run_verification(const VerifyGrid& grid, unsigned threads) {
  const std::size_t n = grid.cases.size();
  std::vector<std::vector<VerificationReport>> per_case(n);
  std::vector<std::exception_ptr> errors(n);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        run_case(grid.cases[i], grid, per_case[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<VerificationReport> out;
  for (auto& chunk : per_case) {
    for (auto& r : chunk) out.push_back(std::move(r));
  }
  return out;
}

Json to_json(const VerificationReport& report) {
  Json out = {{"group", report.group},
              {"combo", report.combo},
              {"p", report.p},
              {"status", to_string(report.status)}};
  if (!report.reason.empty()) out["reason"] = report.reason;
  if (report.predicted) out["predicted"] = to_json(*report.predicted);
  if (report.oracle) out["oracle"] = to_json(*report.oracle);
  return out;
}

Json verification_summary(const std::vector<VerificationReport>& reports) {
  std::uint64_t match = 0, mismatch = 0, skipped = 0;
  Json rows = Json::array();
  for (const auto& r : reports) {
    switch (r.status) {
      case VerifyStatus::Match: ++match; break;
      case VerifyStatus::Mismatch: ++mismatch; break;
      case VerifyStatus::Skipped: ++skipped; break;
    }
    rows.push_back(to_json(r));
  }
  return {{"cases", rows}, {"match", match}, {"mismatch", mismatch}, {"skipped", skipped}};
}

std::uint64_t rank_mod_p(std::span<const BigInt> diagonal, std::uint64_t p) {
  return static_cast<std::uint64_t>(std::count_if(diagonal.begin(), diagonal.end(), [&](const BigInt& d) {
    return d != 0 && mpz_divisible_ui_p(d.get_mpz_t(), p) == 0;
  }));
}

namespace {

GroupSpec cube_group(std::uint32_t n) {
  if (n == 0) throw InputError("n-cube needs n >= 1");
  return GroupSpec(std::vector<std::uint32_t>(n, 2));
}

void check_ncube_cap(std::uint32_t n, const Limits& limits) {
  if (n > limits.ncube) {
    throw ResourceError("n = " + std::to_string(n) + " exceeds n-cube cap " + std::to_string(limits.ncube));
  }
}

std::vector<BigInt> oracle_diagonal(const IntegerMatrix& m, const Limits& limits) {
  if (m.rows() > limits.snf) {
    throw ResourceError("matrix dimension " + std::to_string(m.rows()) + " exceeds SNF oracle cap " +
                        std::to_string(limits.snf));
  }
  return smith_normal_form(m, false, limits.dense).diagonal;
}

Json integer_spectrum_json(const Spectrum& s) {
  Json out = Json::array();
  for (const auto& [value, mult] : s.integer_map()) {
    out.push_back({{"eigenvalue", to_json(value)}, {"multiplicity", mult}});
  }
  return out;
}

}  // namespace

std::vector<ConjectureRow> conjecture_rows(std::uint32_t n, DivisorMethod method, const Limits& limits) {
  check_ncube_cap(n, limits);
  const auto spec = cube_group(n);
  const auto combo = MatrixCombo::adjacency(weight_class(spec, 1));
  const auto adjacency = combo_matrix(spec, combo, limits.dense);
  if (spec.size() > limits.snf && method == DivisorMethod::FullSnf) {
    throw ResourceError("2^" + std::to_string(n) + " exceeds SNF oracle cap " + std::to_string(limits.snf));
  }
  const ElementaryDivisorProfile oracle = method == DivisorMethod::FullSnf
                                              ? profile_from_diagonal(oracle_diagonal(adjacency, limits), 2)
                                              : elementary_divisors_local(adjacency, 2, limits.dense);

  std::map<std::uint32_t, std::uint64_t> spectral;
  for (const auto& [value, mult] : spectrum_via_characters(spec, combo, limits.spectrum).integer_map()) {
    if (value != 0) spectral[valuation(value, 2)] += mult;
  }
  std::uint32_t top = 1;
  for (const auto& [i, count] : oracle.multiplicities) top = std::max(top, i);
  // rows run up to the largest eigenvalue valuation so the last row on the
  // spectral side is visibly empty
  for (const auto& [v, count] : spectral) top = std::max(top, v);
  std::vector<ConjectureRow> rows;
  for (std::uint32_t i = 0; i <= top; ++i) {
    ConjectureRow row;
    row.n = n;
    row.i = i;
    if (auto it = oracle.multiplicities.find(i); it != oracle.multiplicities.end()) row.snf_mult = it->second;
    if (auto it = spectral.find(i + 1); it != spectral.end()) row.spectral_count = it->second;
    row.agrees = row.snf_mult == row.spectral_count;
    rows.push_back(row);
  }
  return rows;
}

std::vector<ConjectureRow> conjecture_table(std::uint32_t n_max, DivisorMethod method, const Limits& limits) {
  check_ncube_cap(n_max, limits);
  std::vector<ConjectureRow> rows;
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    auto part = conjecture_rows(n, method, limits);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

Json to_json(const ConjectureRow& row) {
  return {{"n", row.n},
          {"i", row.i},
          {"snf_mult", row.snf_mult},
          {"spectral_count", row.spectral_count},
          {"agrees", row.agrees}};
}

Json conjecture_report(const std::vector<ConjectureRow>& rows) {
  Json table = Json::array();
  for (const auto& r : rows) table.push_back(to_json(r));
  return {{"label", "evidence table"},
          {"statement",
           "multiplicity of 2^i as an elementary divisor of the n-cube adjacency matrix vs. number of "
           "eigenvalues with 2-adic valuation exactly i+1"},
          {"verdict", "none (open conjecture; rows report evidence only)"},
          {"rows", table}};
}

Json ncube_report(std::uint32_t n, const Limits& limits, std::uint64_t max_prime) {
  check_ncube_cap(n, limits);
  const auto spec = cube_group(n);
  const auto e1 = weight_class(spec, 1);
  const auto a_combo = MatrixCombo::adjacency(e1);
  const auto l_combo = MatrixCombo::laplacian(e1);
  const auto a_matrix = combo_matrix(spec, a_combo, limits.dense);
  const auto l_matrix = combo_matrix(spec, l_combo, limits.dense);
  const auto a_spec = spectrum_via_characters(spec, a_combo, limits.spectrum);
  const auto l_spec = spectrum_via_characters(spec, l_combo, limits.spectrum);
  const auto a_diag = oracle_diagonal(a_matrix, limits);
  const auto l_diag = oracle_diagonal(l_matrix, limits);

  Json out;
  out["n"] = n;
  out["group"] = "2^" + std::to_string(n);
  out["adjacency_spectrum"] = integer_spectrum_json(a_spec);
  out["laplacian_spectrum"] = integer_spectrum_json(l_spec);
  out["closed_form_matches"] = a_spec.integer_map() == hamming_spectrum(n, 2, 1).integer_map();

  const auto a_group = AbelianGroupStructure::from_diagonal(a_diag);
  out["smith_group"] = to_json(a_group);

  Json odd = Json::array();
  for (auto p : primes_up_to(std::max<std::uint64_t>(max_prime, 3))) {
    if (p == 2) continue;
    for (const auto& [name, spectrum, diag] :
         {std::tuple{"A", std::cref(a_spec), std::cref(a_diag)}, std::tuple{"L", std::cref(l_spec), std::cref(l_diag)}}) {
      const auto predicted = predict_from_spectrum(spectrum.get(), p);
      const auto oracle = profile_from_diagonal(diag.get(), p);
      odd.push_back({{"matrix", name},
                     {"p", p},
                     {"predicted", to_json(predicted)},
                     {"oracle", to_json(oracle)},
                     {"match", profiles_match(predicted, oracle)}});
    }
  }
  out["odd_primes"] = odd;

  const auto rank_a = rank_mod_p(a_diag, 2);
  const auto rank_l = rank_mod_p(l_diag, 2);
  out["two_rank"] = {{"A", rank_a}, {"L", rank_l}};

  Json claims;
  const std::uint64_t half = spec.size() / 2;
  if (n % 2 == 1) {
    const bool nonsingular = std::none_of(a_diag.begin(), a_diag.end(), [](const BigInt& d) { return d == 0; });
    const bool all_odd = rank_a == spec.size();
    claims["odd_n_nonsingular_with_odd_invariant_factors"] = nonsingular && all_odd;
  } else {
    claims["even_n_two_rank_equals_half"] = rank_a == half && rank_l == half;
  }
  claims["laplacian_two_rank_equals_half"] = rank_l == half;

  // Largest i with L = A mod 2^i, and agreement of the multiplicities of
  // 2^j for j < i.
  std::uint32_t congruence = std::numeric_limits<std::uint32_t>::max();
  for (std::size_t r = 0; r < a_matrix.rows(); ++r) {
    for (std::size_t c = 0; c < a_matrix.cols(); ++c) {
      const BigInt diff = l_matrix(r, c) - a_matrix(r, c);
      if (diff != 0) congruence = std::min(congruence, valuation(diff, 2));
    }
  }
  const auto a_two = profile_from_diagonal(a_diag, 2);
  const auto l_two = profile_from_diagonal(l_diag, 2);
  bool below_agree = true;
  for (std::uint32_t j = 0; j < congruence; ++j) {
    const auto ia = a_two.multiplicities.find(j);
    const auto il = l_two.multiplicities.find(j);
    const std::uint64_t ma = ia == a_two.multiplicities.end() ? 0 : ia->second;
    const std::uint64_t ml = il == l_two.multiplicities.end() ? 0 : il->second;
    if (ma != ml) below_agree = false;
  }
  claims["congruence"] = {{"i", congruence}, {"multiplicities_below_i_agree", below_agree}};
  out["claims"] = claims;
  out["two_adic"] = {{"A", to_json(a_two)}, {"L", to_json(l_two)}};

  const auto critical = AbelianGroupStructure::from_diagonal(l_diag);
  out["critical_group"] = to_json(critical);
  const auto trees = spanning_tree_count(spec, e1, limits.dense);
  out["spanning_trees"] = to_json(trees);
  out["matrix_tree_check"] = trees == critical.torsion_order();

  Json sylow = Json::array();
  for (auto p : primes_up_to(std::max<std::uint64_t>(max_prime, 3))) {
    if (p == 2) continue;
    const auto predicted = sylow_critical_ncube(n, p);
    const auto oracle = critical.sylow(p);
    sylow.push_back({{"p", p},
                     {"predicted", predicted.torsion_string()},
                     {"oracle", oracle.torsion_string()},
                     {"match", predicted == oracle}});
  }
  out["sylow"] = sylow;
  return out;
}

Json hamming_report(std::uint32_t n, std::uint32_t q, std::uint32_t k, const Limits& limits,
                    std::uint64_t max_prime) {
  if (n == 0) throw InputError("H(n, q) needs n >= 1");
  if (k > n) throw InputError("distance k must satisfy k <= n");
  const GroupSpec spec(std::vector<std::uint32_t>(n, q));
  if (spec.size() > limits.spectrum) {
    throw ResourceError("q^n = " + std::to_string(spec.size()) + " exceeds spectrum cap");
  }
  const auto combo = MatrixCombo::adjacency(weight_class(spec, k));
  const auto closed = hamming_spectrum(n, q, k);
  const auto generic = spectrum_via_characters(spec, combo, limits.spectrum);

  Json out;
  out["n"] = n;
  out["q"] = q;
  out["k"] = k;
  out["spectrum"] = integer_spectrum_json(closed);
  out["closed_form_matches"] = closed.integer_map() == generic.integer_map();

  const auto diag = oracle_diagonal(combo_matrix(spec, combo, limits.dense), limits);
  Json diag_json = Json::array();
  for (const auto& d : diag) diag_json.push_back(to_json(d));
  out["snf_diagonal"] = diag_json;

  Json primes = Json::array();
  for (auto p : primes_up_to(max_prime)) {
    if (q % p == 0) continue;
    const auto predicted = predict_from_spectrum(closed, p);
    const auto oracle = profile_from_diagonal(diag, p);
    primes.push_back({{"p", p},
                      {"predicted", to_json(predicted)},
                      {"oracle", to_json(oracle)},
                      {"match", profiles_match(predicted, oracle)}});
  }
  out["primes"] = primes;

  if (k == n) {
    std::vector<BigInt> eigen_abs;
    for (const auto& [value, mult] : closed.integer_map()) {
      for (std::uint64_t c = 0; c < mult; ++c) eigen_abs.push_back(abs(value));
    }
    std::vector<BigInt> factors = diag;
    std::sort(eigen_abs.begin(), eigen_abs.end());
    std::sort(factors.begin(), factors.end());
    out["invariant_factors_equal_eigenvalues"] = eigen_abs == factors;
  }
  return out;
}

Json cartesian_report(const std::vector<std::uint32_t>& orders, const Limits& limits, std::uint64_t max_prime) {
  const GroupSpec spec(orders);
  if (spec.size() > limits.spectrum) throw ResourceError("|G| exceeds spectrum cap");
  const auto e1 = weight_class(spec, 1);
  const auto closed = cartesian_spectrum(orders);
  const auto generic = spectrum_via_characters(spec, MatrixCombo::adjacency(e1), limits.spectrum);

  Json out;
  out["orders"] = orders;
  out["spectrum"] = integer_spectrum_json(closed);
  out["closed_form_matches"] = closed.integer_map() == generic.integer_map();

  const auto l_diag = oracle_diagonal(laplacian(spec, e1, limits.dense), limits);
  const auto critical = AbelianGroupStructure::from_diagonal(l_diag);
  out["critical_group"] = to_json(critical);
  const auto trees = spanning_tree_count(spec, e1, limits.dense);
  out["spanning_trees"] = to_json(trees);
  out["matrix_tree_check"] = trees == critical.torsion_order();

  Json sylow = Json::array();
  for (auto p : primes_up_to(max_prime)) {
    if (std::any_of(orders.begin(), orders.end(), [&](std::uint32_t q) { return q % p == 0; })) continue;
    const auto predicted = sylow_critical_cartesian(orders, p);
    const auto oracle = critical.sylow(p);
    sylow.push_back({{"p", p},
                     {"predicted", predicted.torsion_string()},
                     {"oracle", oracle.torsion_string()},
                     {"match", predicted == oracle}});
  }
  out["sylow"] = sylow;
  return out;
}

}  // namespace abelsnf
