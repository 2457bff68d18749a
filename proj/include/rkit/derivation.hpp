#pragma once

#include <cstdint>
#include <vector>

#include "rkit/sequences.hpp"

namespace rkit {

/// Output of the window-derivation operator applied `level` times to the
/// primes. Only certified terms are stored, so certified_count always equals
/// elements.size() for freshly derived sequences; a cache file may carry
/// more elements than certified ones.
struct DerivedSequence {
  int level = 1;
  std::vector<u64> elements;
  u64 certified_count = 0;
  // Every term of the underlying infinite sequence that is <= source_limit
  // is in `elements`.
  u64 source_limit = 0;
  // max_terms asked for more than could be certified.
  bool truncated = false;
  // Certified by the safety-divisor rule only (no proven envelope).
  bool heuristic = false;

  bool operator==(const DerivedSequence&) const = default;
};

struct DeriveOptions {
  // Level of the produced sequence. Levels 1 and 2 are additionally checked
  // against proven envelopes stated in terms of the source itself:
  //   level 1 (source = primes):            p_{2n} <  D_n < p_{3n}
  //   level 2 (source = Ramanujan primes):  R_{2n} <= D_n < R_{3n}
  // Any other level is certified by the divisor rule alone and flagged
  // heuristic.
  int level = 0;
  // A term D_n is kept only if D_n <= source_limit / safety_divisor.
  u64 safety_divisor = 2;
};

/// D_n = 1 + max{x <= source_limit : window(source, x) < n}, computed by one
/// forward scan and truncated to the certified prefix and to max_terms.
DerivedSequence derive(const MonotoneCounter& source, u64 max_terms,
                       DeriveOptions options = {});

/// Level-1 derivation driven directly by a prime table.
DerivedSequence derive_from_primes(const PrimeSet& primes, u64 max_terms,
                                   u64 safety_divisor = 2);

DerivedSequence ramanujan_primes(const PrimeSet& primes, u64 max_terms);
DerivedSequence ramanujan_primes(u64 limit, u64 max_terms);

DerivedSequence derived_ramanujan_primes(const PrimeSet& primes, u64 max_terms);
DerivedSequence derived_ramanujan_primes(u64 limit, u64 max_terms);

/// k-fold derivation starting from the primes. Throws EmptyLevel if some
/// intermediate level certifies no terms.
DerivedSequence level_k_sequence(const PrimeSet& primes, int k, u64 max_terms);
DerivedSequence level_k_sequence(u64 limit, int k, u64 max_terms);

/// Counter view of a derived sequence, usable as the source of another
/// derivation or for pi_R style rank queries.
MonotoneCounter as_counter(const DerivedSequence& seq);

/// c = c_num / c_den in (0, 1), reduced.
struct CRamanujanQuery {
  u64 c_num = 1;
  u64 c_den = 2;
  u64 n = 1;
};

inline constexpr u64 kMaxCDenominator = 64;

/// Normalises (gcd-reduces) and validates a c-Ramanujan query.
CRamanujanQuery make_c_query(u64 c_num, u64 c_den, u64 n,
                             u64 max_den = kMaxCDenominator);

/// Smallest integer R with pi(x) - pi(c x) >= n for every real x >= R.
/// Exact integer arithmetic: on [m, m+1) the count is non-increasing and its
/// infimum is pi(m) - pi(ceil(c (m+1)) - 1). Throws OutOfRange (detail =
/// suggested limit) when R > limit / 2.
u64 c_ramanujan(const CRamanujanQuery& q, const PrimeSet& primes);
u64 c_ramanujan(const CRamanujanQuery& q, u64 limit);

/// pi(x) - pi(floor(c x)).
u64 interval_prime_count(const PrimeSet& primes, u64 c_num, u64 c_den, u64 x);

}  // namespace rkit
