#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rkit/derivation.hpp"
#include "rkit/sequences.hpp"

namespace rkit {

enum class CaseId { L1, L2, L3, L4, T2_EQ10, T4, T5, C1, C4, EQ36, T6_REPORT };

std::string_view to_string(CaseId id) noexcept;
std::optional<CaseId> parse_case_id(std::string_view text) noexcept;

/// One registered inequality: what is claimed and from where.
struct InequalityCase {
  CaseId id;
  double threshold;           // claimed lower bound of validity (x or n)
  std::string_view variable;  // "x" or "n" or "k,l"
  std::string_view statement;
};

std::span<const InequalityCase> inequality_registry();
const InequalityCase& inequality_case(CaseId id);

/// Evaluation below the claimed threshold. Informational only.
struct Probe {
  double at = 0;
  bool holds = false;
  double margin = 0;
  std::string note;

  bool operator==(const Probe&) const = default;
};

struct VerificationReport {
  CaseId id = CaseId::L1;
  double domain_lo = 0;
  double domain_hi = 0;
  double grid_step = 1;   // 0.5 for sweeps over half-integers
  bool strict = true;     // false when any part of the claim is non-strict
  bool sampled = false;
  u64 points_checked = 0;
  // Failing points, formatted (e.g. "1000.5", "n=12", "derived:n=7"). At most
  // kMaxListedCounterexamples are listed; counterexample_count is exact.
  std::vector<std::string> counterexamples;
  u64 counterexample_count = 0;
  // Smallest (LHS - RHS), oriented so that positive means the claim holds.
  double min_margin = 0;
  double elapsed_s = 0;
  std::vector<Probe> probes;
  std::vector<std::string> notes;

  bool passed() const noexcept { return counterexample_count == 0; }
  /// Equality of everything except elapsed time.
  bool same_body(const VerificationReport& other) const;
};

inline constexpr std::size_t kMaxListedCounterexamples = 1000;

// Relative slack for closed-form right-hand sides. Points closer than this
// are re-decided in 50-digit binary floating point.
inline constexpr double kRelativeSlack = 1e-9;

/// Primes and the two derived sequences every sweep draws on.
class VerificationContext {
 public:
  explicit VerificationContext(u64 sieve_limit);

  const PrimeSet& primes() const noexcept { return primes_; }
  const MonotoneCounter& ramanujan() const noexcept { return ramanujan_; }
  const MonotoneCounter& derived() const noexcept { return derived_; }

 private:
  PrimeSet primes_;
  MonotoneCounter ramanujan_;
  MonotoneCounter derived_;
};

inline constexpr u64 kLemma1Threshold = 569;
inline constexpr u64 kLemma2Threshold = 75374781;
inline constexpr u64 kLemma4Threshold = 5315;
inline constexpr u64 kLemma4PivotIndex = 2113924;
inline constexpr u64 kLemma4PivotValue = 75374791;
inline constexpr u64 kEq10Threshold = 599;
inline constexpr u64 kTheorem4Threshold = 11;

/// Ramanujan primes that cover every (x/2, x] for 11 <= x < 599.
inline constexpr u64 kEq10Witnesses[] = {11, 17, 29, 47, 71, 127, 241, 461};

/// pi(2x) - pi(x) <= 2(pi(x) - pi(x/2)) on the half-integer grid [569, x_max].
VerificationReport verify_lemma1(const VerificationContext& ctx, u64 x_max);

/// pi(x) - pi(x/2) > x/(2 ln x) (1 - 31.24/ln^3 x) for integers in
/// [x_min, x_max]; x_min defaults to the claimed threshold.
VerificationReport verify_lemma2(const VerificationContext& ctx, u64 x_max,
                                 u64 x_min = kLemma2Threshold);

/// For every k <= k_max, l <= l_max: (R_k + R_l <= R_{k+l-1}) iff
/// pi_R(x + y) <= pi_R(x) + pi_R(y) on the box
/// [R_{k-1}, R_k) x [R_{l-1}, R_l), R_0 = 1. The box is walked on the
/// half-integer lattice, which realises every value of floor(x + y).
VerificationReport verify_lemma3_equivalence(const VerificationContext& ctx, u64 k_max,
                                             u64 l_max);

/// 2 pi_R(x) > pi_R(2x) on the half-integer grid [11, x_max]. pi_R(2x) can
/// step at half-integers, so the integer grid alone is not exhaustive.
VerificationReport verify_theorem4(const VerificationContext& ctx, u64 x_max);

/// R_n < (8/3) n ln n for 5315 <= n <= n_max; checks R_2113924 = 75374791
/// when n_max reaches it.
VerificationReport verify_lemma4(const VerificationContext& ctx, u64 n_max);

/// R_{2n} <= R'_n < R_{3n} for 1 <= n <= n_max.
VerificationReport verify_theorem5(const VerificationContext& ctx, u64 n_max);

/// p_{4n} < R'_n < p_{9n} (n >= 1) and p_{2n} < R_n < p_{3n} (n >= 2),
/// plus R'_n < p_{8n} for n >= 5315 when n_max reaches it.
VerificationReport verify_corollary4(const VerificationContext& ctx, u64 n_max);

/// p_{2n} < R_n < p_{3n} for 2 <= n <= n_max.
VerificationReport verify_eq36(const VerificationContext& ctx, u64 n_max);

/// pi_R(x) - pi_R(x/2) > (x/ln x)(1/12 - 0.3/ln x) for integers in
/// [599, x_max], plus the witness-list check on [11, 599).
VerificationReport verify_eq10(const VerificationContext& ctx, u64 x_max);

/// pi(x)/2 > pi_R(x) > pi(x)/(2 + eps) for integers in [x_min, x_max],
/// eps = eps_num / eps_den. A probe records the smallest x0 from which the
/// inequality holds throughout [x0, x_max].
VerificationReport verify_corollary1(const VerificationContext& ctx, u64 eps_num, u64 eps_den,
                                     u64 x_min, u64 x_max);

struct GrowthRow {
  u64 n = 0;
  u64 threshold = 0;   // 1 + last x <= x_max (real) with pi(x) - pi(c x) < n
  bool certified = false;  // threshold <= x_max / 2
  double f = 0;        // reference curve f(n), reported not asserted

  bool operator==(const GrowthRow&) const = default;
};

struct GrowthReport {
  u64 c_num = 1;
  u64 c_den = 2;
  u64 x_max = 0;
  std::vector<GrowthRow> rows;
  // Definitional check: every integer x in [X_n, x_max] has count >= n.
  VerificationReport check;
};

/// Lower-bound curve for the count of primes in ((1-eps) x, x]:
/// 2n - q (n+1) ln(n+1) / (ln(q (n+1) ln(n+1)) - 1), q = 2 - eps - eps^2.
double theorem6_curve(double eps, u64 n);

/// Thresholds X_n for n = 1..n_levels by walking the exact event set
/// {integers} u {p/c} in increasing order (rational arithmetic only).
GrowthReport theorem6_growth_report(const PrimeSet& primes, u64 c_num, u64 c_den, u64 x_max,
                                    u64 n_levels);

struct TrendBlock {
  u64 n_lo = 0;
  u64 n_hi = 0;  // inclusive
  double mean_abs_deviation = 0;  // mean |R'_n / p_{4n} - 1|
};

/// Dyadic-block trend of R'_n / p_{4n}. Informational, never asserted.
struct RatioTrendReport {
  std::vector<TrendBlock> blocks;
  bool decreasing = false;  // over every block
  u64 decreasing_from = 0;  // first n_lo of the strictly decreasing tail, 0 if none
};

RatioTrendReport derived_ratio_trend(const VerificationContext& ctx);

/// Parameters for running a case by id.
struct CaseParams {
  std::optional<u64> x_max;
  std::optional<u64> n_max;
  bool full = false;
};

inline constexpr u64 kDeskSieveLimit = 4'200'000;
inline constexpr u64 kFullSieveLimit = 160'000'000;

/// Sweep bounds a case runs with, after applying defaults.
CaseParams resolve_params(CaseId id, const CaseParams& params);

/// Sieve limit a context needs for the case.
u64 required_sieve_limit(CaseId id, const CaseParams& params);

/// Runs one registered case with desk-scale or full defaults.
VerificationReport run_case(CaseId id, const VerificationContext& ctx, const CaseParams& params);

}  // namespace rkit
