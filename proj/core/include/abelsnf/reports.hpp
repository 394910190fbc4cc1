#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abelsnf/cayley.hpp"
#include "abelsnf/config.hpp"
#include "abelsnf/group.hpp"
#include "abelsnf/json_io.hpp"
#include "abelsnf/predictor.hpp"
#include "abelsnf/snf.hpp"

namespace abelsnf {

enum class VerifyStatus { Match, Mismatch, Skipped };

std::string to_string(VerifyStatus status);

/// Spectral prediction against the SNF oracle for one (group, combo, prime).
struct VerificationReport {
  std::string group;
  std::string combo;
  std::uint64_t p = 0;
  VerifyStatus status = VerifyStatus::Skipped;
  std::string reason;
  std::optional<PredictedProfile> predicted;
  std::optional<ElementaryDivisorProfile> oracle;
};

struct VerifyCase {
  GroupSpec spec;
  MatrixCombo combo;
};

struct VerifyGrid {
  std::vector<VerifyCase> cases;
  std::vector<std::uint64_t> primes;
  PiMode pi_mode = PiMode::least();
  DivisorMethod method = DivisorMethod::FullSnf;
  Limits limits;
};

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// A_k for k = 0..n and the Laplacians |E_k| I - A_k for k = 1..n.
std::vector<VerifyCase> weight_class_cases(const GroupSpec& spec);

/// Z_q^n for q <= 4, q^n <= 256, plus a fixed list of mixed-order groups of
/// order <= 256.
std::vector<GroupSpec> standard_verification_groups();

/// Runs every case, concurrently across cases. Primes dividing |G| are
/// reported as skipped.
std::vector<VerificationReport> run_verification(const VerifyGrid& grid, unsigned threads = 0);

Json to_json(const VerificationReport& report);
Json verification_summary(const std::vector<VerificationReport>& reports);

/// One row of the n-cube 2-adic evidence table: multiplicity of 2^i among
/// the SNF invariant factors of A against the number of eigenvalues of A
/// with 2-adic valuation exactly i + 1.
struct ConjectureRow {
  std::uint32_t n = 0;
  std::uint32_t i = 0;
  std::uint64_t snf_mult = 0;
  std::uint64_t spectral_count = 0;
  bool agrees = false;
};

std::vector<ConjectureRow> conjecture_rows(std::uint32_t n, DivisorMethod method = DivisorMethod::FullSnf,
                                           const Limits& limits = {});
std::vector<ConjectureRow> conjecture_table(std::uint32_t n_max, DivisorMethod method = DivisorMethod::FullSnf,
                                            const Limits& limits = {});
Json to_json(const ConjectureRow& row);
Json conjecture_report(const std::vector<ConjectureRow>& rows);

/// Spectra, odd-prime divisors (predicted and oracle), 2-ranks, the mod-2^i
/// congruence check, and the Sylow subgroups of the critical group.
Json ncube_report(std::uint32_t n, const Limits& limits = {}, std::uint64_t max_prime = 13);

/// Krawtchouk spectrum of A_k on Z_q^n, predicted and oracle divisors, and
/// for k = n the invariant-factor/eigenvalue multiset comparison.
Json hamming_report(std::uint32_t n, std::uint32_t q, std::uint32_t k, const Limits& limits = {},
                    std::uint64_t max_prime = 50);

/// Closed-form spectrum of K_{q1} x ... x K_{qn}, Sylow subgroups of the
/// critical group against the product formula, and the tree count check.
Json cartesian_report(const std::vector<std::uint32_t>& orders, const Limits& limits = {},
                      std::uint64_t max_prime = 13);

/// Number of SNF diagonal entries prime to p: the rank over GF(p).
std::uint64_t rank_mod_p(std::span<const BigInt> diagonal, std::uint64_t p);

}  // namespace abelsnf
