#include "rkit/derivation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

namespace rkit {

namespace {

constexpr u64 kAllTerms = std::numeric_limits<u64>::max();

// Walks a sorted element array with non-decreasing queries.
class Cursor {
 public:
  explicit Cursor(std::span<const u64> elements) : elements_(elements) {}
  bool member(u64 x) {
    while (pos_ < elements_.size() && elements_[pos_] < x) ++pos_;
    return pos_ < elements_.size() && elements_[pos_] == x;
  }

 private:
  std::span<const u64> elements_;
  std::size_t pos_ = 0;
};

// Candidate thresholds D_1, D_2, ... from one pass over x = 1..limit.
// The window moves by +1 when x is an element and by -1 when x = 2s for an
// element s. last[v] holds the largest x with window(x) == v; D_n is then
// 1 + max_{v < n} last[v].
template <typename AtX, typename AtHalf>
std::vector<u64> window_thresholds(u64 limit, AtX&& at_x, AtHalf&& at_half) {
  std::vector<u64> last(1, 0);
  u64 w = 0;
  for (u64 x = 1; x <= limit; ++x) {
    if (at_x(x)) ++w;
    if ((x & 1) == 0 && at_half(x / 2)) --w;
    if (w >= last.size()) last.resize(w + 1, 0);
    last[w] = x;
  }
  // Reuse `last` as the output: entry n-1 becomes D_n.
  std::vector<u64>& d = last;
  u64 running = 0;
  for (auto& v : d) {
    running = std::max(running, v);
    v = running + 1;
  }
  d.pop_back();  // the window never reaches max+1 inside the scan
  return last;
}

// Shared certification and packaging. `nth` gives the n-th source element
// or nullopt when it lies beyond the source.
template <typename Nth>
DerivedSequence certify(std::vector<u64> candidates, u64 source_limit, u64 max_terms,
                        int level, u64 safety_divisor, Nth&& nth) {
  if (safety_divisor == 0) throw Error(Errc::InvalidArgument, "safety divisor must be >= 1");
  const u64 cutoff = source_limit / safety_divisor;
  u64 certified = 0;
  for (; certified < candidates.size(); ++certified) {
    const u64 n = certified + 1;
    const u64 d = candidates[certified];
    if (d > cutoff) break;
    if (level == 1 || level == 2) {
      const std::optional<u64> lo = nth(2 * n);
      const std::optional<u64> hi = nth(3 * n);
      if (!lo || !hi) break;
      // p_{2n} < R_n only holds from n = 2 on (R_1 = 2 < p_2 = 3).
      const bool lower_ok = level == 1 ? (n == 1 || *lo < d) : *lo <= d;
      if (!lower_ok || !(d < *hi)) break;
    }
  }

  DerivedSequence out;
  out.level = level;
  out.heuristic = !(level == 1 || level == 2);
  const u64 keep = std::min(certified, max_terms);
  out.truncated = max_terms > certified;
  // Computed candidates never exceed the true thresholds, so nothing of the
  // true sequence lies strictly between the last kept term and the next
  // candidate.
  out.source_limit = keep < candidates.size() ? candidates[keep] - 1 : source_limit;
  candidates.resize(keep);
  candidates.shrink_to_fit();
  out.elements = std::move(candidates);
  out.certified_count = keep;
  return out;
}

}  // namespace

DerivedSequence derive(const MonotoneCounter& source, u64 max_terms, DeriveOptions options) {
  if (source.size() == 0) throw Error(Errc::InvalidSequence, "cannot derive an empty sequence");
  if (max_terms == 0) throw Error(Errc::InvalidArgument, "max_terms must be >= 1");
  Cursor full(source.elements());
  Cursor half(source.elements());
  auto candidates = window_thresholds(
      source.source_limit(), [&](u64 x) { return full.member(x); },
      [&](u64 h) { return half.member(h); });
  return certify(std::move(candidates), source.source_limit(), max_terms, options.level,
                 options.safety_divisor, [&](u64 k) -> std::optional<u64> {
                   if (k > source.size()) return std::nullopt;
                   return source.select(k);
                 });
}

DerivedSequence derive_from_primes(const PrimeSet& primes, u64 max_terms, u64 safety_divisor) {
  if (max_terms == 0) throw Error(Errc::InvalidArgument, "max_terms must be >= 1");
  auto prime = [&](u64 x) { return primes.is_prime(x); };
  auto candidates = window_thresholds(primes.limit(), prime, prime);
  return certify(std::move(candidates), primes.limit(), max_terms, 1, safety_divisor,
                 [&](u64 k) -> std::optional<u64> {
                   if (k > primes.count()) return std::nullopt;
                   return primes.nth_prime(k);
                 });
}

MonotoneCounter as_counter(const DerivedSequence& seq) {
  return MonotoneCounter(seq.elements, seq.source_limit);
}

DerivedSequence ramanujan_primes(const PrimeSet& primes, u64 max_terms) {
  return derive_from_primes(primes, max_terms);
}

DerivedSequence ramanujan_primes(u64 limit, u64 max_terms) {
  return ramanujan_primes(PrimeSet(limit), max_terms);
}

DerivedSequence derived_ramanujan_primes(const PrimeSet& primes, u64 max_terms) {
  return level_k_sequence(primes, 2, max_terms);
}

DerivedSequence derived_ramanujan_primes(u64 limit, u64 max_terms) {
  return derived_ramanujan_primes(PrimeSet(limit), max_terms);
}

DerivedSequence level_k_sequence(const PrimeSet& primes, int k, u64 max_terms) {
  if (k < 1) throw Error(Errc::InvalidArgument, "level must be >= 1");
  DerivedSequence seq = derive_from_primes(primes, k == 1 ? max_terms : kAllTerms);
  for (int level = 2; level <= k; ++level) {
    if (seq.elements.empty()) {
      throw Error(Errc::EmptyLevel, "level " + std::to_string(level - 1) +
                                        " certified no terms at sieve limit " +
                                        std::to_string(primes.limit()));
    }
    const bool heuristic_source = seq.heuristic;
    seq = derive(as_counter(seq), level == k ? max_terms : kAllTerms,
                 DeriveOptions{.level = level});
    seq.heuristic = seq.heuristic || heuristic_source;
  }
  if (seq.elements.empty()) {
    throw Error(Errc::EmptyLevel, "level " + std::to_string(k) +
                                      " certified no terms at sieve limit " +
                                      std::to_string(primes.limit()));
  }
  return seq;
}

DerivedSequence level_k_sequence(u64 limit, int k, u64 max_terms) {
  return level_k_sequence(PrimeSet(limit), k, max_terms);
}

CRamanujanQuery make_c_query(u64 c_num, u64 c_den, u64 n, u64 max_den) {
  if (c_den == 0 || c_num == 0 || c_num >= c_den) {
    throw Error(Errc::InvalidArgument, "c must satisfy 0 < c_num < c_den");
  }
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be >= 1");
  const u64 g = std::gcd(c_num, c_den);
  CRamanujanQuery q{c_num / g, c_den / g, n};
  if (q.c_den > max_den) {
    throw Error(Errc::InvalidArgument, "reduced denominator " + std::to_string(q.c_den) +
                                           " exceeds cap " + std::to_string(max_den));
  }
  return q;
}

namespace {

// Rough size of the sieve needed: four times an estimate of p_{n/(1-c)}.
u64 suggested_c_limit(const CRamanujanQuery& q) {
  const double k = std::max(6.0, static_cast<double>(q.n) * static_cast<double>(q.c_den) /
                                     static_cast<double>(q.c_den - q.c_num));
  const double p = k * (std::log(k) + std::log(std::log(k)));
  return static_cast<u64>(std::ceil(4.0 * p)) + 100;
}

}  // namespace

u64 c_ramanujan(const CRamanujanQuery& query, const PrimeSet& primes) {
  const CRamanujanQuery q = make_c_query(query.c_num, query.c_den, query.n);
  const u64 limit = primes.limit();
  // Cell [m, m+1) fails iff pi(m) - pi(ceil(c(m+1)) - 1) < n.
  // Both pi arguments are non-decreasing in m, so the counts are kept
  // incrementally.
  std::optional<u64> last_fail;
  u64 pi_m = 0;
  u64 pi_upper = 0;
  u64 upper_at = 0;
  for (u64 m = 0; m < limit; ++m) {
    if (primes.is_prime(m)) ++pi_m;
    const u64 upper = (q.c_num * (m + 1) + q.c_den - 1) / q.c_den - 1;
    while (upper_at < upper) {
      if (primes.is_prime(++upper_at)) ++pi_upper;
    }
    if (pi_m - pi_upper < q.n) last_fail = m;
  }
  const u64 r = last_fail ? *last_fail + 1 : 0;
  if (r > limit / 2) {
    const u64 suggestion = std::max(suggested_c_limit(q), 2 * limit);
    throw Error(Errc::OutOfRange,
                "R_{c,n} not certifiable with sieve limit " + std::to_string(limit) +
                    "; try a limit of about " + std::to_string(suggestion),
                suggestion);
  }
  return r;
}

u64 c_ramanujan(const CRamanujanQuery& q, u64 limit) { return c_ramanujan(q, PrimeSet(limit)); }

u64 interval_prime_count(const PrimeSet& primes, u64 c_num, u64 c_den, u64 x) {
  if (c_den == 0 || c_num >= c_den) throw Error(Errc::InvalidArgument, "c must lie in (0,1)");
  return primes.pi(x) - primes.pi(c_num * x / c_den);
}

}  // namespace rkit
