#include "rkit/verification.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "rkit/error.hpp"

namespace rkit {

namespace {

using Wide = boost::multiprecision::cpp_bin_float_50;

constexpr std::array<InequalityCase, 11> kRegistry = {{
    {CaseId::L1, 569, "x", "pi(2x) - pi(x) <= 2 (pi(x) - pi(x/2))"},
    {CaseId::L2, 75374781, "x", "pi(x) - pi(x/2) > x / (2 ln x) * (1 - 31.24 / ln^3 x)"},
    {CaseId::L3, 1, "k,l",
     "R_k + R_l <= R_{k+l-1} iff pi_R(x+y) <= pi_R(x) + pi_R(y) on the (k,l) box"},
    {CaseId::L4, 5315, "n", "R_n < (8/3) n ln n"},
    {CaseId::T2_EQ10, 599, "x", "pi_R(x) - pi_R(x/2) > (x / ln x) (1/12 - 0.3 / ln x)"},
    {CaseId::T4, 11, "x", "2 pi_R(x) > pi_R(2x)"},
    {CaseId::T5, 1, "n", "R_{2n} <= R'_n < R_{3n}"},
    {CaseId::C1, 599, "x", "pi(x)/2 > pi_R(x) > pi(x) / (2 + eps)"},
    {CaseId::C4, 1, "n", "p_{4n} < R'_n < p_{9n}; p_{2n} < R_n < p_{3n} (n >= 2)"},
    {CaseId::EQ36, 2, "n", "p_{2n} < R_n < p_{3n}"},
    {CaseId::T6_REPORT, 1, "x", "pi(x) - pi(c x) >= n for x >= X_n"},
}};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_n(const char* prefix, u64 n) { return std::string(prefix) + std::to_string(n); }

double half(u64 k) { return static_cast<double>(k) / 2.0; }

class Sweep {
 public:
  Sweep(CaseId id, double lo, double hi, double step, bool strict)
      : start_(std::chrono::steady_clock::now()) {
    report_.id = id;
    report_.domain_lo = lo;
    report_.domain_hi = hi;
    report_.grid_step = step;
    report_.strict = strict;
    report_.min_margin = std::numeric_limits<double>::infinity();
  }

  void point(bool holds, double margin, const std::string& label) {
    ++report_.points_checked;
    report_.min_margin = std::min(report_.min_margin, margin);
    if (!holds) fail(label);
  }

  void fail(const std::string& label) {
    if (report_.counterexamples.size() < kMaxListedCounterexamples) {
      report_.counterexamples.push_back(label);
    }
    ++report_.counterexample_count;
  }

  VerificationReport& report() { return report_; }

  VerificationReport finish() {
    if (report_.points_checked == 0) report_.min_margin = 0;
    report_.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  VerificationReport report_;
  std::chrono::steady_clock::time_point start_;
};

struct Decision {
  bool holds;
  double margin;
};

// Strict comparison of an exact integer LHS against a closed-form RHS f(arg).
// margin > 0 means the claim holds: lhs > rhs if lhs_above, else lhs < rhs.
template <class F>
Decision decide(double lhs, double arg, F f, bool lhs_above) {
  const double r = f(arg);
  const double margin = lhs_above ? lhs - r : r - lhs;
  if (std::abs(margin) > kRelativeSlack * std::abs(r)) return {margin > 0, margin};
  const Wide rw = f(Wide(arg));
  const Wide mw = lhs_above ? Wide(lhs) - rw : rw - Wide(lhs);
  return {mw > 0, static_cast<double>(mw)};
}

auto lemma2_rhs = [](auto x) {
  using T = decltype(x);
  using std::log;
  const T l = log(x);
  T r = x / (2 * l) * (1 - T(3124) / 100 / (l * l * l));
  return r;
};

auto eq10_rhs = [](auto x) {
  using T = decltype(x);
  using std::log;
  const T l = log(x);
  T r = x / l * (T(1) / 12 - T(3) / 10 / l);
  return r;
};

auto lemma4_rhs = [](auto n) {
  using T = decltype(n);
  using std::log;
  T r = T(8) / 3 * n * log(n);
  return r;
};

void need_primes(const VerificationContext& ctx, u64 x) {
  if (x > ctx.primes().limit()) {
    throw Error(Errc::OutOfRange,
                "sweep needs primes up to " + std::to_string(x) + ", sieve limit is " +
                    std::to_string(ctx.primes().limit()),
                x);
  }
}

void need_nth_prime(const VerificationContext& ctx, u64 n) {
  if (n > ctx.primes().count()) {
    throw Error(Errc::OutOfRange,
                "sweep needs p_" + std::to_string(n) + ", sieve holds " +
                    std::to_string(ctx.primes().count()) + " primes",
                n);
  }
}

void need_counter_to(const MonotoneCounter& c, const char* name, u64 x) {
  if (x > c.source_limit()) {
    throw Error(Errc::OutOfRange,
                std::string("sweep needs ") + name + " up to " + std::to_string(x) +
                    ", certified to " + std::to_string(c.source_limit()),
                x);
  }
}

void need_terms(const MonotoneCounter& c, const char* name, u64 n) {
  if (n > c.size()) {
    throw Error(Errc::OutOfRange,
                std::string("sweep needs ") + name + "_" + std::to_string(n) + ", certified " +
                    std::to_string(c.size()) + " terms",
                n);
  }
}

void need_lo_hi(u64 lo, u64 hi) {
  if (hi < lo) {
    throw Error(Errc::InvalidArgument,
                "sweep bound " + std::to_string(hi) + " is below threshold " + std::to_string(lo));
  }
}

// pi(2x) - pi(x) <= 2 (pi(x) - pi(x/2)) at x = k/2.
Decision lemma1_at(const PrimeSet& ps, u64 k) {
  const double lhs = static_cast<double>(ps.pi(k) - ps.pi(k / 2));
  const double rhs = 2.0 * static_cast<double>(ps.pi(k / 2) - ps.pi(k / 4));
  return {lhs <= rhs, rhs - lhs};
}

// 2 pi_R(x) > pi_R(2x) at x = k/2.
Decision theorem4_at(const MonotoneCounter& r, u64 k) {
  const double lhs = 2.0 * static_cast<double>(r.rank(k / 2));
  const double rhs = static_cast<double>(r.rank(k));
  return {lhs > rhs, lhs - rhs};
}

// Walks grid indices first..last. Indices >= threshold feed the sweep; the
// rest only feed probes. Adds the below-threshold probes and the smallest
// index from which the claim holds up to `last`.
template <class At, class Coord, class Label>
void grid_sweep(Sweep& sweep, u64 first, u64 threshold, u64 last, At at, Coord coord,
                Label label) {
  u64 failures_below = 0;
  std::optional<u64> last_below;
  std::optional<u64> last_fail;
  for (u64 i = first; i <= last; ++i) {
    const Decision d = at(i);
    if (i >= threshold) {
      sweep.point(d.holds, d.margin, label(i));
    } else if (!d.holds) {
      ++failures_below;
      last_below = i;
    }
    if (!d.holds) last_fail = i;
  }
  auto& probes = sweep.report().probes;
  if (threshold > first) {
    const Decision d = at(threshold - 1);
    probes.push_back({coord(threshold - 1), d.holds, d.margin, "below threshold"});
  }
  if (last_below) {
    probes.push_back({coord(*last_below), false, at(*last_below).margin,
                      "largest failure below threshold; " + std::to_string(failures_below) +
                          " failing points"});
  }
  const u64 from = last_fail ? *last_fail + 1 : first;
  if (from <= last) {
    probes.push_back({coord(from), true, at(from).margin, "empirical threshold"});
  }
}

}  // namespace

std::string_view to_string(CaseId id) noexcept {
  switch (id) {
    case CaseId::L1: return "L1";
    case CaseId::L2: return "L2";
    case CaseId::L3: return "L3";
    case CaseId::L4: return "L4";
    case CaseId::T2_EQ10: return "T2_EQ10";
    case CaseId::T4: return "T4";
    case CaseId::T5: return "T5";
    case CaseId::C1: return "C1";
    case CaseId::C4: return "C4";
    case CaseId::EQ36: return "EQ36";
    case CaseId::T6_REPORT: return "T6_REPORT";
  }
  return "?";
}

std::optional<CaseId> parse_case_id(std::string_view text) noexcept {
  for (const auto& c : kRegistry) {
    if (to_string(c.id) == text) return c.id;
  }
  return std::nullopt;
}

std::span<const InequalityCase> inequality_registry() { return kRegistry; }

const InequalityCase& inequality_case(CaseId id) {
  for (const auto& c : kRegistry) {
    if (c.id == id) return c;
  }
  throw Error(Errc::InvalidArgument, "unknown case");
}

bool VerificationReport::same_body(const VerificationReport& o) const {
  return id == o.id && domain_lo == o.domain_lo && domain_hi == o.domain_hi &&
         grid_step == o.grid_step && strict == o.strict && sampled == o.sampled &&
         points_checked == o.points_checked && counterexamples == o.counterexamples &&
         counterexample_count == o.counterexample_count && min_margin == o.min_margin &&
         probes == o.probes && notes == o.notes;
}

VerificationContext::VerificationContext(u64 sieve_limit) : primes_(sieve_limit) {
  auto r = ramanujan_primes(primes_, ~u64{0});
  ramanujan_ = MonotoneCounter(std::move(r.elements), r.source_limit);
  auto d = derive(ramanujan_, ~u64{0}, {.level = 2});
  derived_ = MonotoneCounter(std::move(d.elements), d.source_limit);
}

VerificationReport verify_lemma1(const VerificationContext& ctx, u64 x_max) {
  need_lo_hi(kLemma1Threshold, x_max);
  need_primes(ctx, 2 * x_max);
  const auto& ps = ctx.primes();
  Sweep sweep(CaseId::L1, kLemma1Threshold, static_cast<double>(x_max), 0.5, false);
  grid_sweep(
      sweep, 2, 2 * kLemma1Threshold, 2 * x_max, [&](u64 k) { return lemma1_at(ps, k); }, half,
      [](u64 k) { return fmt(half(k)); });
  return sweep.finish();
}

VerificationReport verify_lemma2(const VerificationContext& ctx, u64 x_max, u64 x_min) {
  need_lo_hi(x_min, x_max);
  if (x_min < 3) throw Error(Errc::InvalidArgument, "prime-gap sweep needs x_min >= 3");
  need_primes(ctx, x_max);
  const auto& ps = ctx.primes();
  Sweep sweep(CaseId::L2, static_cast<double>(x_min), static_cast<double>(x_max), 1, true);
  if (x_min < kLemma2Threshold) sweep.report().notes.push_back("swept below the stated threshold");
  u64 hi_count = ps.pi(x_min);
  u64 lo_count = ps.pi(x_min / 2);
  for (u64 x = x_min; x <= x_max; ++x) {
    if (x > x_min) {
      if (ps.is_prime(x)) ++hi_count;
      if (x % 2 == 0 && ps.is_prime(x / 2)) ++lo_count;
    }
    const double lhs = static_cast<double>(hi_count - lo_count);
    const auto d = decide(lhs, static_cast<double>(x), lemma2_rhs, true);
    sweep.point(d.holds, d.margin, std::to_string(x));
  }
  constexpr u64 kProbe = 100000;
  if (kProbe <= ps.limit()) {
    const double lhs = static_cast<double>(ps.pi(kProbe) - ps.pi(kProbe / 2));
    const auto d = decide(lhs, static_cast<double>(kProbe), lemma2_rhs, true);
    sweep.report().probes.push_back({static_cast<double>(kProbe), d.holds, d.margin,
                                     "below threshold"});
  }
  return sweep.finish();
}

VerificationReport verify_lemma3_equivalence(const VerificationContext& ctx, u64 k_max,
                                             u64 l_max) {
  if (k_max == 0 || l_max == 0) throw Error(Errc::InvalidArgument, "k_max, l_max must be >= 1");
  const auto& r = ctx.ramanujan();
  need_terms(r, "R", k_max + l_max - 1);
  need_counter_to(r, "R", r.select(k_max) + r.select(l_max));
  auto R = [&](u64 i) { return i == 0 ? u64{1} : r.select(i); };

  Sweep sweep(CaseId::L3, 1, static_cast<double>(std::max(k_max, l_max)), 0.5, false);
  u64 holding = 0;
  for (u64 k = 1; k <= k_max; ++k) {
    for (u64 l = 1; l <= l_max; ++l) {
      const bool cond_i = R(k) + R(l) <= R(k + l - 1);
      // On the box pi_R(x) = pi_R(floor x). For integer parts fx, fy the
      // reals in [fx, fx+1) x [fy, fy+1) reach every floor(x+y) up to
      // fx + fy + 1, and pi_R is non-decreasing.
      bool cond_ii = true;
      for (u64 fx = R(k - 1); cond_ii && fx < R(k); ++fx) {
        const u64 rx = r.rank(fx);
        for (u64 fy = R(l - 1); fy < R(l); ++fy) {
          if (r.rank(fx + fy + 1) > rx + r.rank(fy)) {
            cond_ii = false;
            break;
          }
        }
      }
      if (cond_i) ++holding;
      const bool agree = cond_i == cond_ii;
      sweep.point(agree, agree ? 1.0 : -1.0,
                  "k=" + std::to_string(k) + ",l=" + std::to_string(l));
    }
  }
  sweep.report().notes.push_back("margin is +1 per agreeing pair, -1 otherwise");
  sweep.report().notes.push_back("pairs where R_k + R_l <= R_{k+l-1}: " + std::to_string(holding));
  return sweep.finish();
}

VerificationReport verify_theorem4(const VerificationContext& ctx, u64 x_max) {
  need_lo_hi(kTheorem4Threshold, x_max);
  const auto& r = ctx.ramanujan();
  need_counter_to(r, "R", 2 * x_max);
  Sweep sweep(CaseId::T4, kTheorem4Threshold, static_cast<double>(x_max), 0.5, true);
  grid_sweep(
      sweep, 2, 2 * kTheorem4Threshold, 2 * x_max, [&](u64 k) { return theorem4_at(r, k); },
      half, [](u64 k) { return fmt(half(k)); });
  // The integer point just below the threshold.
  const auto at10 = theorem4_at(r, 20);
  sweep.report().probes.insert(sweep.report().probes.begin(),
                               {10, at10.holds, at10.margin, "below threshold"});
  return sweep.finish();
}

VerificationReport verify_lemma4(const VerificationContext& ctx, u64 n_max) {
  need_lo_hi(kLemma4Threshold, n_max);
  const auto& r = ctx.ramanujan();
  need_terms(r, "R", n_max);
  Sweep sweep(CaseId::L4, kLemma4Threshold, static_cast<double>(n_max), 1, true);
  grid_sweep(
      sweep, 2, kLemma4Threshold, n_max,
      [&](u64 n) {
        return decide(static_cast<double>(r.select(n)), static_cast<double>(n), lemma4_rhs,
                      false);
      },
      [](u64 n) { return static_cast<double>(n); }, [](u64 n) { return fmt_n("n=", n); });
  if (n_max >= kLemma4PivotIndex) {
    const u64 pivot = r.select(kLemma4PivotIndex);
    if (pivot != kLemma4PivotValue) sweep.fail("pivot R_2113924=" + std::to_string(pivot));
    sweep.report().notes.push_back("R_2113924 = " + std::to_string(pivot));
  }
  return sweep.finish();
}

VerificationReport verify_theorem5(const VerificationContext& ctx, u64 n_max) {
  need_lo_hi(1, n_max);
  const auto& r = ctx.ramanujan();
  const auto& d = ctx.derived();
  need_terms(r, "R", 3 * n_max);
  need_terms(d, "R'", n_max);
  Sweep sweep(CaseId::T5, 1, static_cast<double>(n_max), 1, false);
  for (u64 n = 1; n <= n_max; ++n) {
    const double v = static_cast<double>(d.select(n));
    const double lo = static_cast<double>(r.select(2 * n));
    const double hi = static_cast<double>(r.select(3 * n));
    const bool holds = lo <= v && v < hi;
    sweep.point(holds, std::min(v - lo, hi - v), fmt_n("n=", n));
  }
  return sweep.finish();
}

namespace {

void sweep_eq36(const VerificationContext& ctx, u64 n_max, Sweep& sweep, const char* prefix) {
  const auto& ps = ctx.primes();
  const auto& r = ctx.ramanujan();
  for (u64 n = 2; n <= n_max; ++n) {
    const double v = static_cast<double>(r.select(n));
    const double lo = static_cast<double>(ps.nth_prime(2 * n));
    const double hi = static_cast<double>(ps.nth_prime(3 * n));
    sweep.point(lo < v && v < hi, std::min(v - lo, hi - v), fmt_n(prefix, n));
  }
}

}  // namespace

VerificationReport verify_corollary4(const VerificationContext& ctx, u64 n_max) {
  need_lo_hi(1, n_max);
  const auto& ps = ctx.primes();
  const auto& d = ctx.derived();
  need_terms(d, "R'", n_max);
  need_terms(ctx.ramanujan(), "R", n_max);
  need_nth_prime(ctx, 9 * n_max);
  Sweep sweep(CaseId::C4, 1, static_cast<double>(n_max), 1, true);
  for (u64 n = 1; n <= n_max; ++n) {
    const double v = static_cast<double>(d.select(n));
    const double lo = static_cast<double>(ps.nth_prime(4 * n));
    const double hi = static_cast<double>(ps.nth_prime(9 * n));
    sweep.point(lo < v && v < hi, std::min(v - lo, hi - v), fmt_n("derived:n=", n));
  }
  sweep_eq36(ctx, n_max, sweep, "level1:n=");
  if (n_max >= kLemma4Threshold) {
    for (u64 n = kLemma4Threshold; n <= n_max; ++n) {
      const double v = static_cast<double>(d.select(n));
      const double hi = static_cast<double>(ps.nth_prime(8 * n));
      sweep.point(v < hi, hi - v, fmt_n("p8n:n=", n));
    }
    sweep.report().notes.push_back("includes R'_n < p_{8n} for n >= 5315");
  }
  return sweep.finish();
}

VerificationReport verify_eq36(const VerificationContext& ctx, u64 n_max) {
  need_lo_hi(2, n_max);
  need_terms(ctx.ramanujan(), "R", n_max);
  need_nth_prime(ctx, 3 * n_max);
  Sweep sweep(CaseId::EQ36, 2, static_cast<double>(n_max), 1, true);
  sweep_eq36(ctx, n_max, sweep, "n=");
  return sweep.finish();
}

VerificationReport verify_eq10(const VerificationContext& ctx, u64 x_max) {
  need_lo_hi(kEq10Threshold, x_max);
  const auto& r = ctx.ramanujan();
  need_counter_to(r, "R", x_max);
  Sweep sweep(CaseId::T2_EQ10, 11, static_cast<double>(x_max), 1, true);

  for (u64 w : kEq10Witnesses) {
    if (!r.contains(w)) sweep.fail("witness " + std::to_string(w) + " is not a Ramanujan prime");
  }
  // Some witness w must satisfy x/2 < w <= x on every cell [x, x+1).
  for (u64 x = 11; x < kEq10Threshold; ++x) {
    const bool covered = std::any_of(std::begin(kEq10Witnesses), std::end(kEq10Witnesses),
                                     [&](u64 w) { return w <= x && 2 * w > x; });
    if (!covered) sweep.fail("witness:x=" + std::to_string(x));
  }
  sweep.report().notes.push_back("witness list covers [11, 599)");

  for (u64 x = kEq10Threshold; x <= x_max; ++x) {
    const double lhs = static_cast<double>(r.rank(x) - r.rank(x / 2));
    const auto d = decide(lhs, static_cast<double>(x), eq10_rhs, true);
    sweep.point(d.holds, d.margin, std::to_string(x));
  }
  return sweep.finish();
}

VerificationReport verify_corollary1(const VerificationContext& ctx, u64 eps_num, u64 eps_den,
                                     u64 x_min, u64 x_max) {
  if (eps_num == 0 || eps_den == 0) throw Error(Errc::InvalidArgument, "eps must be positive");
  if (x_min < 2) throw Error(Errc::InvalidArgument, "x_min must be >= 2");
  need_lo_hi(x_min, x_max);
  need_primes(ctx, x_max);
  need_counter_to(ctx.ramanujan(), "R", x_max);
  const auto& ps = ctx.primes();
  const auto& r = ctx.ramanujan();
  // Integer form: pi > 2 pi_R and pi_R (2 den + num) > pi den.
  auto at = [&](u64 x) {
    const u64 p = ps.pi(x);
    const u64 q = r.rank(x);
    const bool left = p > 2 * q;
    const bool right = q * (2 * eps_den + eps_num) > p * eps_den;
    const double pd = static_cast<double>(p);
    const double qd = static_cast<double>(q);
    const double eps = static_cast<double>(eps_num) / static_cast<double>(eps_den);
    return Decision{left && right, std::min(pd / 2 - qd, qd - pd / (2 + eps))};
  };

  Sweep sweep(CaseId::C1, static_cast<double>(x_min), static_cast<double>(x_max), 1, true);
  sweep.report().notes.push_back("eps = " + std::to_string(eps_num) + "/" +
                                 std::to_string(eps_den));
  for (u64 x = x_min; x <= x_max; ++x) {
    const auto d = at(x);
    sweep.point(d.holds, d.margin, std::to_string(x));
  }
  u64 last_fail = 1;
  for (u64 x = 2; x <= x_max; ++x) {
    if (!at(x).holds) last_fail = x;
  }
  if (x_min > 2) {
    const auto d = at(2);
    sweep.report().probes.push_back({2, d.holds, d.margin, "below x_min"});
  }
  const u64 x0 = last_fail + 1;
  if (x0 <= x_max) {
    const auto d = at(x0);
    sweep.report().probes.push_back({static_cast<double>(x0), d.holds, d.margin,
                                     "holds throughout [x0, x_max] from here"});
  }
  return sweep.finish();
}

double theorem6_curve(double eps, u64 n) {
  const double q = 2 - eps - eps * eps;
  const double m = static_cast<double>(n + 1);
  const double t = q * m * std::log(m);
  return 2 * static_cast<double>(n) - t / (std::log(t) - 1);
}

GrowthReport theorem6_growth_report(const PrimeSet& primes, u64 c_num, u64 c_den, u64 x_max,
                                    u64 n_levels) {
  const auto q = make_c_query(c_num, c_den, 1);
  c_num = q.c_num;
  c_den = q.c_den;
  if (x_max > primes.limit()) {
    throw Error(Errc::OutOfRange, "growth report needs primes up to " + std::to_string(x_max),
                x_max);
  }
  if (n_levels == 0) throw Error(Errc::InvalidArgument, "n_levels must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  // Events as rationals a/b: a prime p enters at x = p (count + 1) and
  // leaves at x = p * den / num (count - 1). The count is right-continuous
  // and constant between consecutive events.
  struct Point {
    u64 a;
    u64 b;
  };
  auto less = [](Point u, Point v) {
    return static_cast<unsigned __int128>(u.a) * v.b < static_cast<unsigned __int128>(v.a) * u.b;
  };
  const auto ps = primes.primes();
  std::size_t in = 0;
  std::size_t out = 0;
  // end_of[v]: supremum of the reals where the count equals v (0 if never).
  std::vector<Point> end_of(n_levels, Point{0, 1});
  u64 count = 0;
  Point cur{0, 1};
  const Point stop{x_max + 1, 1};
  while (true) {
    Point next = stop;
    if (in < ps.size() && ps[in] <= x_max && less(Point{ps[in], 1}, next)) next = {ps[in], 1};
    if (out < ps.size()) {
      const Point leave{ps[out] * c_den, c_num};
      if (less(leave, next)) next = leave;
    }
    if (count < n_levels && less(cur, next)) end_of[count] = next;
    if (!less(next, stop)) break;
    // Apply every event at `next`.
    while (in < ps.size() && !less(next, Point{ps[in], 1}) && !less(Point{ps[in], 1}, next)) {
      ++count;
      ++in;
    }
    while (out < ps.size() && !less(next, Point{ps[out] * c_den, c_num}) &&
           !less(Point{ps[out] * c_den, c_num}, next)) {
      --count;
      ++out;
    }
    cur = next;
  }

  GrowthReport g{c_num, c_den, x_max, {}, {}};
  const double eps = 1.0 - static_cast<double>(c_num) / static_cast<double>(c_den);
  Point worst{0, 1};
  for (u64 n = 1; n <= n_levels; ++n) {
    if (less(worst, end_of[n - 1])) worst = end_of[n - 1];
    // Every real below `worst` fails for n, so X_n = ceil(worst).
    const u64 threshold = std::max<u64>(1, (worst.a + worst.b - 1) / worst.b);
    g.rows.push_back({n, threshold, threshold <= x_max / 2, theorem6_curve(eps, n)});
  }

  Sweep sweep(CaseId::T6_REPORT, 1, static_cast<double>(x_max), 1, false);
  sweep.report().notes.push_back("c = " + std::to_string(c_num) + "/" + std::to_string(c_den));
  std::size_t level = 0;  // rows[0..level) have threshold <= x
  for (u64 x = 1; x <= x_max; ++x) {
    while (level < g.rows.size() && g.rows[level].threshold <= x) ++level;
    if (level == 0) continue;
    const u64 have = interval_prime_count(primes, c_num, c_den, x);
    const double margin = static_cast<double>(have) - static_cast<double>(level);
    sweep.point(have >= level, margin, std::to_string(x));
  }
  g.check = sweep.finish();
  g.check.elapsed_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return g;
}

RatioTrendReport derived_ratio_trend(const VerificationContext& ctx) {
  const auto& d = ctx.derived();
  const auto& ps = ctx.primes();
  const u64 n_max = std::min<u64>(d.size(), ps.count() / 4);
  RatioTrendReport t;
  for (u64 lo = 1; lo <= n_max; lo *= 2) {
    const u64 hi = std::min(2 * lo - 1, n_max);
    if (hi < 2 * lo - 1) break;  // only complete blocks
    double sum = 0;
    for (u64 n = lo; n <= hi; ++n) {
      sum += std::abs(static_cast<double>(d.select(n)) /
                          static_cast<double>(ps.nth_prime(4 * n)) -
                      1.0);
    }
    t.blocks.push_back({lo, hi, sum / static_cast<double>(hi - lo + 1)});
  }
  if (t.blocks.size() < 2) return t;
  std::size_t start = t.blocks.size() - 1;
  while (start > 0 &&
         t.blocks[start].mean_abs_deviation < t.blocks[start - 1].mean_abs_deviation) {
    --start;
  }
  if (start + 1 < t.blocks.size()) t.decreasing_from = t.blocks[start].n_lo;
  t.decreasing = start == 0;
  return t;
}

namespace {

constexpr u64 kDeskX = 1'000'000;
constexpr u64 kDeskN = 5000;
constexpr u64 kDeskL4 = 40'000;
constexpr u64 kDeskL3 = 50;
constexpr u64 kDeskL2Span = 100'000;
constexpr u64 kFullL2Span = 1'000'000;
constexpr u64 kT6Levels = 1000;
constexpr u64 kT6Num = 3;
constexpr u64 kT6Den = 4;

// n-th prime upper estimate, n >= 6.
u64 nth_prime_bound(u64 n) {
  const double m = static_cast<double>(std::max<u64>(n, 6));
  return static_cast<u64>(m * (std::log(m) + std::log(std::log(m)))) + 1;
}

}  // namespace

CaseParams resolve_params(CaseId id, const CaseParams& p) {
  CaseParams out = p;
  switch (id) {
    case CaseId::L2:
      if (!out.x_max) out.x_max = kLemma2Threshold + (p.full ? kFullL2Span : kDeskL2Span);
      break;
    case CaseId::L3:
      if (!out.n_max) out.n_max = kDeskL3;
      break;
    case CaseId::L4:
      if (!out.n_max) out.n_max = p.full ? kLemma4PivotIndex : kDeskL4;
      break;
    case CaseId::T5:
    case CaseId::C4:
    case CaseId::EQ36:
      if (!out.n_max) out.n_max = kDeskN;
      break;
    case CaseId::T6_REPORT:
      if (!out.x_max) out.x_max = kDeskX;
      if (!out.n_max) out.n_max = kT6Levels;
      break;
    case CaseId::L1:
    case CaseId::T2_EQ10:
    case CaseId::T4:
    case CaseId::C1:
      if (!out.x_max) out.x_max = kDeskX;
      break;
  }
  return out;
}

u64 required_sieve_limit(CaseId id, const CaseParams& params) {
  const auto p = resolve_params(id, params);
  u64 need = kDeskSieveLimit;
  switch (id) {
    case CaseId::L1: need = 2 * *p.x_max; break;
    case CaseId::L2: need = *p.x_max; break;
    case CaseId::T4: need = 4 * *p.x_max + 4; break;
    case CaseId::T2_EQ10:
    case CaseId::C1: need = 2 * *p.x_max + 2; break;
    case CaseId::T6_REPORT: need = *p.x_max; break;
    case CaseId::L3: need = 4 * nth_prime_bound(3 * 2 * *p.n_max); break;
    case CaseId::L4:
      // R_n <= 75374791 < kFullSieveLimit / 2 for n up to the pivot.
      need = *p.n_max <= kLemma4PivotIndex && *p.n_max > kDeskL4
                 ? kFullSieveLimit
                 : 2 * nth_prime_bound(3 * *p.n_max);
      break;
    case CaseId::T5: need = 4 * nth_prime_bound(9 * *p.n_max); break;
    case CaseId::C4: need = std::max(4 * nth_prime_bound(9 * *p.n_max),
                                     nth_prime_bound(9 * *p.n_max)); break;
    case CaseId::EQ36: need = 2 * nth_prime_bound(3 * *p.n_max); break;
  }
  return std::max(need, kDeskSieveLimit);
}

VerificationReport run_case(CaseId id, const VerificationContext& ctx, const CaseParams& params) {
  const auto p = resolve_params(id, params);
  switch (id) {
    case CaseId::L1: return verify_lemma1(ctx, *p.x_max);
    case CaseId::L2: return verify_lemma2(ctx, *p.x_max);
    case CaseId::L3: return verify_lemma3_equivalence(ctx, *p.n_max, *p.n_max);
    case CaseId::L4: return verify_lemma4(ctx, *p.n_max);
    case CaseId::T2_EQ10: return verify_eq10(ctx, *p.x_max);
    case CaseId::T4: return verify_theorem4(ctx, *p.x_max);
    case CaseId::T5: return verify_theorem5(ctx, *p.n_max);
    case CaseId::C1: return verify_corollary1(ctx, 1, 1, kEq10Threshold, *p.x_max);
    case CaseId::C4: return verify_corollary4(ctx, *p.n_max);
    case CaseId::EQ36: return verify_eq36(ctx, *p.n_max);
    case CaseId::T6_REPORT:
      return theorem6_growth_report(ctx.primes(), kT6Num, kT6Den, *p.x_max, *p.n_max).check;
  }
  throw Error(Errc::InvalidArgument, "unknown case");
}

}  // namespace rkit
