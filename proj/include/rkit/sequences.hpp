#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rkit/error.hpp"

namespace rkit {

using u64 = std::uint64_t;

struct SieveOptions {
  // Both must be powers of two.
  u64 checkpoint_stride = u64{1} << 16;
  u64 segment_odds = u64{1} << 20;
};

/// Bit-packed primality table over [0, limit].
///
/// Only odd integers are stored (bit i <-> 2i+1); 2 is special-cased.
/// Cumulative prime counts are kept every `checkpoint_stride` integers so
/// that pi(x) costs one lookup plus at most stride/128 popcounts.
/// Immutable after construction.
class PrimeSet {
 public:
  explicit PrimeSet(u64 limit, SieveOptions options = {});

  u64 limit() const noexcept { return limit_; }
  u64 checkpoint_stride() const noexcept { return stride_; }
  std::span<const u64> checkpoints() const noexcept { return checkpoints_; }

  bool is_prime(u64 n) const;
  /// Number of primes <= x. Throws OutOfRange for x > limit.
  u64 pi(u64 x) const;
  /// pi(floor(x)) for real x >= 0.
  u64 pi(double x) const;
  /// The n-th prime (1-based). Throws OutOfRange if fewer than n primes
  /// are <= limit; the table is never extended implicitly.
  u64 nth_prime(u64 n) const;
  u64 count() const noexcept { return total_; }

  std::vector<u64> primes() const;

 private:
  bool odd_bit(u64 index) const noexcept {
    return (bits_[index >> 6] >> (index & 63)) & 1u;
  }
  u64 count_odd_bits(u64 first, u64 last) const noexcept;  // inclusive

  u64 limit_;
  u64 stride_;
  u64 total_ = 0;
  std::vector<u64> bits_;
  std::vector<u64> checkpoints_;
};

PrimeSet build_prime_set(u64 limit, SieveOptions options = {});

/// Strictly increasing integer sequence, complete up to `source_limit`:
/// every element of the underlying infinite sequence that is <= source_limit
/// is present and none above it.
class MonotoneCounter {
 public:
  MonotoneCounter() = default;
  MonotoneCounter(std::vector<u64> elements, u64 source_limit);

  std::span<const u64> elements() const noexcept { return elements_; }
  u64 source_limit() const noexcept { return source_limit_; }
  std::size_t size() const noexcept { return elements_.size(); }

  /// Count of elements <= x. Throws OutOfRange for x > source_limit.
  u64 rank(u64 x) const;
  /// The n-th element, 1-based.
  u64 select(u64 n) const;
  bool contains(u64 x) const;

 private:
  std::vector<u64> elements_;
  u64 source_limit_ = 0;
};

MonotoneCounter counter_from_elements(std::vector<u64> elements,
                                      u64 source_limit);
MonotoneCounter counter_from_primes(const PrimeSet& primes);

/// rank(x) - rank(floor(x/2)). Constant on every [m, m+1) because all
/// elements are integers, so evaluating at integers is exact.
u64 window(const MonotoneCounter& counter, u64 x);
u64 window(const PrimeSet& primes, u64 x);

}  // namespace rkit
