// Acceptance runner. `abelsnf_acceptance <id>` checks one criterion (1-9 or
// seven-supplement); with no argument it runs all of them. Every check prints
// one PASS/FAIL line; the exit status is nonzero if any line failed.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "abelsnf/json_io.hpp"
#include "abelsnf/locfield.hpp"
#include "abelsnf/predictor.hpp"
#include "abelsnf/reports.hpp"
#include "abelsnf/snf.hpp"
#include "abelsnf/spectrum.hpp"
#include "cli.hpp"
#include "diagonalization.hpp"

using namespace abelsnf;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned limits. Every numeric comparison below is exact; only wall-clock
// budgets carry a bound.
constexpr double kSevenBudgetSeconds = 1.0;
constexpr double kConjectureBudgetSeconds = 600.0;
constexpr std::uint64_t kGridMaxPrime = 50;
constexpr std::uint64_t kGridMaxOrder = 256;
constexpr std::uint64_t kDiagonalizationMaxOrder = 32;
constexpr std::uint32_t kCubeMaxN = 7;
constexpr std::uint64_t kFamilyMaxPrime = 13;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t count_at(const std::map<std::uint32_t, std::uint64_t>& m, std::uint32_t i) {
  const auto it = m.find(i);
  return it == m.end() ? 0 : it->second;
}

Json run_cli_json(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  if (code != cli::kOk && code != cli::kMismatch) return Json();
  return Json::parse(out.str());
}

Outcome seven_element_check(const std::string& elements) {
  Outcome o;
  const auto start = Clock::now();
  int code = 0;
  const auto at3 = run_cli_json({"predict", "--group", "7", "--elements", elements, "--prime", "3", "--check"}, code);
  const auto at2 = run_cli_json({"predict", "--group", "7", "--elements", elements, "--prime", "2", "--check"}, code);
  const double elapsed = seconds_since(start);
  if (at3.is_null() || at2.is_null()) {
    o.require(false, "predict failed");
    return o;
  }
  const auto mult = [](const Json& j, const char* side, const char* key, const char* power) -> std::uint64_t {
    const auto& m = j[side][key];
    return m.contains(power) ? m[power].get<std::uint64_t>() : 0;
  };
  const auto m3 = mult(at3, "predicted", "per_power", "1");
  const auto m2 = mult(at2, "predicted", "per_power", "1");
  o.require(m3 == 1, "multiplicity of 3 is " + std::to_string(m3) + ", expected 1");
  o.require(m2 == 3, "multiplicity of 2 is " + std::to_string(m2) + ", expected 3");
  o.require(at3["match"] == true && at2["match"] == true, "SNF oracle disagrees with prediction");
  o.require(elapsed < kSevenBudgetSeconds, "runtime " + std::to_string(elapsed) + " s");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("oracle SNF multiplicities: 3^1 x ") +
              std::to_string(mult(at3, "oracle", "multiplicities", "1")) + ", 2^1 x " +
              std::to_string(mult(at2, "oracle", "multiplicities", "1"));
  return o;
}

Outcome criterion_1() { return seven_element_check("(4),(5),(6)"); }

// The eigenvalue list and the factorization 2 = z^2 alpha beta in the worked
// Z_7 example belong to the connecting set {3,4,6}; this reruns the same
// checks on that set.
Outcome seven_supplement() { return seven_element_check("(3),(4),(6)"); }

std::vector<std::vector<std::uint32_t>> nondecreasing_tuples(std::uint64_t max_order) {
  std::vector<std::vector<std::uint32_t>> out;
  std::function<void(std::vector<std::uint32_t>&, std::uint64_t, std::uint32_t)> rec =
      [&](std::vector<std::uint32_t>& cur, std::uint64_t product, std::uint32_t min_q) {
        if (!cur.empty()) out.push_back(cur);
        for (std::uint32_t q = min_q; product * q <= max_order; ++q) {
          cur.push_back(q);
          rec(cur, product * q, q);
          cur.pop_back();
        }
      };
  std::vector<std::uint32_t> cur;
  rec(cur, 1, 2);
  return out;
}

Outcome criterion_2() {
  Outcome o;
  VerifyGrid grid;
  grid.primes = primes_up_to(kGridMaxPrime);
  grid.limits.snf = kGridMaxOrder;
  for (const auto& spec : standard_verification_groups()) {
    o.require(spec.size() <= kGridMaxOrder, "group " + spec.to_string() + " is too large");
    for (auto& c : weight_class_cases(spec)) grid.cases.push_back(std::move(c));
  }
  const auto start = Clock::now();
  const auto reports = run_verification(grid);
  std::size_t match = 0, mismatch = 0, skipped_other = 0;
  for (const auto& r : reports) {
    if (r.status == VerifyStatus::Match) ++match;
    if (r.status == VerifyStatus::Mismatch) {
      ++mismatch;
      if (mismatch <= 3) o.detail += r.group + " " + r.combo + " p=" + std::to_string(r.p) + " mismatch; ";
    }
    if (r.status == VerifyStatus::Skipped && GroupSpec(parse_group_spec(r.group)).size() % r.p != 0) {
      ++skipped_other;
    }
  }
  o.require(mismatch == 0, std::to_string(mismatch) + " mismatches");
  o.require(skipped_other == 0, std::to_string(skipped_other) + " applicable cases skipped");
  o.detail += std::to_string(match) + " matching cases over " + std::to_string(grid.cases.size()) +
              " matrices, " + std::to_string(seconds_since(start)) + " s";
  return o;
}

Outcome criterion_3() {
  Outcome o;
  for (auto [n, q] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {3, 2}, {2, 3}, {2, 4}, {3, 3}}) {
    const GroupSpec spec(std::vector<std::uint32_t>(n, q));
    const auto combo = MatrixCombo::adjacency(weight_class(spec, n));
    auto diag = smith_normal_form(combo_matrix(spec, combo)).diagonal;
    std::vector<BigInt> eig;
    const auto spectrum = spectrum_via_characters(spec, combo);
    for (const auto& e : spectrum.entries()) {
      for (std::uint64_t k = 0; k < e.multiplicity; ++k) eig.push_back(abs(*e.value.as_integer()));
    }
    std::sort(diag.begin(), diag.end());
    std::sort(eig.begin(), eig.end());
    o.require(diag == eig, "H(" + std::to_string(n) + "," + std::to_string(q) + ") differs");
  }
  return o;
}

Outcome criterion_4() {
  Outcome o;
  for (std::uint32_t n = 1; n <= kCubeMaxN; ++n) {
    const GroupSpec spec(std::vector<std::uint32_t>(n, 2));
    const auto crit = critical_group(spec, weight_class(spec, 1));
    for (auto p : primes_up_to(kFamilyMaxPrime)) {
      if (p == 2) continue;
      const auto formula = sylow_critical_ncube(n, p);
      o.require(crit.sylow(p) == formula, "n=" + std::to_string(n) + " p=" + std::to_string(p) + ": " +
                                               crit.sylow(p).torsion_string() + " vs " + formula.torsion_string());
    }
  }
  return o;
}

const std::vector<std::vector<std::uint32_t>> kCartesianOrders{{2, 3}, {3, 4}, {2, 3, 4}};

Outcome criterion_5() {
  Outcome o;
  for (const auto& orders : kCartesianOrders) {
    const GroupSpec spec(orders);
    const auto crit = critical_group(spec, weight_class(spec, 1));
    std::size_t applicable = 0;
    for (auto p : primes_up_to(kFamilyMaxPrime)) {
      if (std::any_of(orders.begin(), orders.end(), [p](std::uint32_t q) { return q % p == 0; })) continue;
      ++applicable;
      const auto formula = sylow_critical_cartesian(orders, p);
      o.require(crit.sylow(p) == formula, spec.to_string() + " p=" + std::to_string(p) + ": " +
                                               crit.sylow(p).torsion_string() + " vs " + formula.torsion_string());
    }
    o.require(applicable > 0, "no applicable prime for " + spec.to_string());
  }
  return o;
}

Outcome criterion_6() {
  Outcome o;
  std::vector<GroupSpec> cases;
  for (std::uint32_t n = 1; n <= kCubeMaxN; ++n) cases.emplace_back(std::vector<std::uint32_t>(n, 2));
  for (const auto& orders : kCartesianOrders) cases.emplace_back(orders);
  std::size_t checked = 0;
  for (const auto& spec : cases) {
    const auto set = weight_class(spec, 1);
    if (!set.is_symmetric() || !is_connected(spec, set)) continue;
    const auto trees = spanning_tree_count(spec, set);
    const auto order = critical_group(spec, set).torsion_order();
    o.require(trees == order, spec.to_string() + ": " + trees.get_str() + " trees vs order " + order.get_str());
    ++checked;
  }
  const GroupSpec cube({2, 2, 2}), prism({2, 3});
  o.require(spanning_tree_count(cube, weight_class(cube, 1)) == 384, "3-cube tree count");
  o.require(spanning_tree_count(prism, weight_class(prism, 1)) == 75, "prism tree count");
  o.detail += std::to_string(checked) + " graphs checked";
  return o;
}

Outcome criterion_7() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& orders : nondecreasing_tuples(kDiagonalizationMaxOrder)) {
    const GroupSpec spec(orders);
    o.require(oracle::check_diagonalization(spec, weight_class(spec, 1)), spec.to_string() + " with E_1");
    ++checked;
  }
  const GroupSpec z7({7});
  for (const char* set : {"4,5,6", "3,4,6"}) {
    o.require(oracle::check_diagonalization(z7, ConnectingSet::from_elements(z7, parse_elements(z7, set))),
              std::string("Z_7 with {") + set + "}");
  }
  o.detail += std::to_string(checked) + " groups";
  return o;
}

CyclotomicInteger random_element(std::mt19937_64& rng, std::uint32_t m) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::vector<std::int64_t> c(m);
  for (auto& v : c) v = coef(rng);
  return CyclotomicInteger::from_exponent_counts(m, c);
}

Outcome criterion_8() {
  Outcome o;
  std::mt19937_64 rng(2024);

  // valuation axioms, precision independence, pi-choice independence
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 7}, {3, 7}, {5, 12}, {2, 15}, {7, 9}}) {
    const auto primes = factor_cyclotomic_mod_p(p, m).size();
    for (int t = 0; t < 20; ++t) {
      const auto x = random_element(rng, m), y = random_element(rng, m);
      if (x.is_zero() || y.is_zero()) continue;
      std::uint32_t sum = 0;
      for (std::size_t i = 0; i < primes; ++i) {
        const auto ctx = PrimeContext::create(p, m, i);
        const auto vx = pi_valuation(x, ctx), vy = pi_valuation(y, ctx), vxy = pi_valuation(x * y, ctx);
        o.require(vx && vy && vxy && *vxy == *vx + *vy, "v(xy) != v(x)+v(y)");
        o.require(pi_valuation(x, ctx.with_precision(3)) == vx && pi_valuation(x, ctx.with_precision(25)) == vx,
                  "precision dependence");
        if (vx) sum += *vx;
      }
      o.require(valuation(x.norm(), p) == residue_degree(p, m) * sum, "norm/valuation mismatch");
    }
    const auto ctx = PrimeContext::create(p, m);
    for (std::int64_t n : {1, 6, 40, 243, 1000, -250}) {
      o.require(pi_valuation(CyclotomicInteger::from_integer(m, n), ctx) == valuation(BigInt(n), p),
                "v on rational integers");
    }
  }
  for (const auto& orders : std::vector<std::vector<std::uint32_t>>{{7}, {13}, {3, 5}}) {
    const GroupSpec spec(orders);
    std::vector<std::uint64_t> idx;
    for (std::uint64_t i = 0; i < spec.size(); ++i) {
      if (rng() % 2) idx.push_back(i);
    }
    const auto combo = MatrixCombo::adjacency(ConnectingSet::from_indices(spec, idx));
    for (std::uint64_t p : {2u, 3u, 5u, 29u}) {
      if (spec.size() % p == 0) continue;
      const auto a = predict_elementary_divisors(spec, combo, p);
      const auto b = predict_elementary_divisors(spec, combo, p, PiMode::all());
      o.require(a.per_power == b.per_power, "pi-choice dependence");
    }
  }

  // SNF invariance under unimodular transforms and transposition
  for (int t = 0; t < 40; ++t) {
    const std::size_t rows = 2 + rng() % 6, cols = 2 + rng() % 6;
    IntegerMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<long>(rng() % 13) - 6;
    }
    const auto base = smith_normal_form(m).diagonal;
    auto unimodular = [&](std::size_t n) {
      auto u = IntegerMatrix::identity(n);
      for (int s = 0; s < 10; ++s) {
        const std::size_t i = rng() % n, j = rng() % n;
        if (i == j) continue;
        const long k = static_cast<long>(rng() % 5) - 2;
        for (std::size_t c = 0; c < n; ++c) u(i, c) += k * u(j, c);
      }
      return u;
    };
    o.require(smith_normal_form(unimodular(rows) * m * unimodular(cols)).diagonal == base, "SNF not invariant");
    o.require(smith_normal_form(m.transpose()).diagonal == base, "SNF changes under transposition");
  }

  // trace and multiplicity sums
  for (const auto& orders : std::vector<std::vector<std::uint32_t>>{{6}, {2, 4}, {3, 3}, {2, 2, 3}}) {
    const GroupSpec spec(orders);
    std::vector<std::uint64_t> idx;
    for (std::uint64_t i = 0; i < spec.size(); ++i) {
      if (rng() % 2) idx.push_back(i);
    }
    const auto set = ConnectingSet::from_indices(spec, idx);
    const auto s = spectrum_via_characters(spec, MatrixCombo::adjacency(set));
    o.require(s.total_multiplicity() == spec.size(), "multiplicities do not sum to |G|");
    o.require(s.trace().as_integer() == BigInt(set.contains_identity() ? static_cast<long>(spec.size()) : 0),
              "trace identity");
  }

  // Krawtchouk closed form against character sums
  for (std::uint32_t n = 1; n <= 5; ++n) {
    for (std::uint32_t q = 2; q <= 5; ++q) {
      const GroupSpec spec(std::vector<std::uint32_t>(n, q));
      for (std::uint32_t k = 0; k <= n; ++k) {
        const auto direct = spectrum_via_characters(spec, MatrixCombo::adjacency(weight_class(spec, k)), 4096);
        o.require(direct.integer_map() == hamming_spectrum(n, q, k).integer_map(),
                  "Krawtchouk n=" + std::to_string(n) + " q=" + std::to_string(q) + " k=" + std::to_string(k));
      }
    }
  }
  return o;
}

Outcome criterion_9() {
  Outcome o;
  const auto start = Clock::now();
  int code = 0;
  const auto report = run_cli_json({"conjecture", "--n-max", "6"}, code);
  const double elapsed = seconds_since(start);
  o.require(code == cli::kOk && report.contains("rows"), "conjecture command failed");
  if (!o.pass) return o;
  std::map<std::uint32_t, std::size_t> rows_per_n;
  bool square_row = false;
  for (const auto& row : report["rows"]) {
    o.require(row["snf_mult"].is_number_unsigned() && row["spectral_count"].is_number_unsigned(),
              "unpopulated column");
    rows_per_n[row["n"].get<std::uint32_t>()] += 1;
    if (row["n"] == 2 && row["i"] == 0) square_row = row["snf_mult"] == 2 && row["spectral_count"] == 2;
  }
  for (std::uint32_t n = 1; n <= 6; ++n) o.require(rows_per_n[n] > 0, "no rows for n=" + std::to_string(n));
  o.require(square_row, "n=2, i=0 row is not 2 = 2");
  o.require(elapsed < kConjectureBudgetSeconds, "runtime " + std::to_string(elapsed) + " s");
  o.detail += std::to_string(report["rows"].size()) + " rows, " + std::to_string(elapsed) + " s";
  return o;
}

const std::vector<std::pair<std::string, std::pair<std::string, std::function<Outcome()>>>> kCriteria{
    {"1", {"Z_7 {4,5,6}: 3 with multiplicity 1, 2 with multiplicity 3, oracle agrees, < 1 s", criterion_1}},
    {"2", {"prediction equals SNF oracle on the weight-class grid, p <= 50", criterion_2}},
    {"3", {"Hamming A_n: invariant factors equal |eigenvalues|", criterion_3}},
    {"4", {"n-cube Sylow-p of the critical group, n <= 7, odd p <= 13", criterion_4}},
    {"5", {"Cartesian products of complete graphs: Sylow-p product formula", criterion_5}},
    {"6", {"Matrix-Tree: torsion order equals spanning-tree count", criterion_6}},
    {"7", {"character table diagonalizes A exactly, |G| <= 32", criterion_7}},
    {"8", {"property suites: valuations, SNF invariance, trace, Krawtchouk", criterion_8}},
    {"9", {"n-cube 2-adic evidence table up to n = 6", criterion_9}},
    {"seven-supplement", {"Z_7 {3,4,6}: 3 with multiplicity 1, 2 with multiplicity 3, oracle agrees", seven_supplement}},
};

}  // namespace

int main(int argc, char** argv) {
  const std::string only = argc > 1 ? argv[1] : "";
  bool all_pass = true;
  bool ran = false;
  for (const auto& [id, entry] : kCriteria) {
    if (!only.empty() && only != id) continue;
    ran = true;
    Outcome outcome;
    try {
      outcome = entry.second();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    all_pass = all_pass && outcome.pass;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << entry.first;
    if (!outcome.detail.empty()) std::cout << " [" << outcome.detail << "]";
    std::cout << std::endl;
  }
  if (!ran) {
    std::cerr << "unknown criterion '" << only << "'\n";
    return 2;
  }
  return all_pass ? 0 : 1;
}
