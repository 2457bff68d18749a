#include "rkit/sequences.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace rkit {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidLimit: return "InvalidLimit";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::InvalidSequence: return "InvalidSequence";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::EmptyLevel: return "EmptyLevel";
    case Errc::OracleTooLarge: return "OracleTooLarge";
    case Errc::IoError: return "IoError";
    case Errc::CorruptCache: return "CorruptCache";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

// Odd primes <= n by a plain sieve, used as the sieving base.
std::vector<u64> small_odd_primes(u64 n) {
  std::vector<char> composite(n + 1, 0);
  std::vector<u64> out;
  for (u64 i = 3; i <= n; i += 2) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= n; j += 2 * i) composite[j] = 1;
  }
  return out;
}

u64 isqrt(u64 n) {
  auto r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_power_of_two(u64 v) { return v != 0 && (v & (v - 1)) == 0; }

// Position of the k-th (0-based) set bit of w.
unsigned select_in_word(u64 w, unsigned k) {
  for (unsigned i = 0; i < k; ++i) w &= w - 1;
  return static_cast<unsigned>(std::countr_zero(w));
}

}  // namespace

PrimeSet::PrimeSet(u64 limit, SieveOptions options)
    : limit_(limit), stride_(options.checkpoint_stride) {
  if (limit < 2) {
    throw Error(Errc::InvalidLimit,
                "sieve limit must be >= 2, got " + std::to_string(limit));
  }
  if (!is_power_of_two(stride_) || stride_ < 128) {
    throw Error(Errc::InvalidArgument,
                "checkpoint stride must be a power of two >= 128");
  }
  if (!is_power_of_two(options.segment_odds) || options.segment_odds < 64) {
    throw Error(Errc::InvalidArgument,
                "segment size must be a power of two >= 64");
  }

  const u64 odd_count = (limit - 1) / 2 + 1;  // indices 0..(limit-1)/2
  const u64 words = (odd_count + 63) / 64;
  bits_.assign(words, ~u64{0});
  bits_[0] &= ~u64{1};  // 1 is not prime
  if (odd_count % 64 != 0) bits_.back() &= (u64{1} << (odd_count % 64)) - 1;

  const auto base = small_odd_primes(isqrt(limit));
  std::vector<u64> next(base.size());  // next odd-index to clear per prime
  for (std::size_t i = 0; i < base.size(); ++i) next[i] = (base[i] * base[i]) / 2;

  for (u64 lo = 0; lo < odd_count; lo += options.segment_odds) {
    const u64 hi = std::min(odd_count, lo + options.segment_odds);
    for (std::size_t i = 0; i < base.size(); ++i) {
      const u64 p = base[i];
      u64 j = next[i];
      for (; j < hi; j += p) bits_[j >> 6] &= ~(u64{1} << (j & 63));
      next[i] = j;
    }
  }

  const u64 blocks = limit / stride_;
  const u64 words_per_block = stride_ / 128;
  checkpoints_.resize(blocks + 1);
  checkpoints_[0] = 0;
  u64 running = 1;  // the prime 2, counted once any block is complete
  for (u64 b = 0; b < blocks; ++b) {
    const u64 w0 = b * words_per_block;
    for (u64 w = w0; w < w0 + words_per_block && w < bits_.size(); ++w) {
      running += static_cast<u64>(std::popcount(bits_[w]));
    }
    checkpoints_[b + 1] = running;
  }
  total_ = pi(limit);
}

u64 PrimeSet::count_odd_bits(u64 first, u64 last) const noexcept {
  const u64 fw = first >> 6;
  const u64 lw = last >> 6;
  const u64 low_mask = ~u64{0} << (first & 63);
  const u64 high_mask = (last & 63) == 63 ? ~u64{0} : (u64{1} << ((last & 63) + 1)) - 1;
  if (fw == lw) return static_cast<u64>(std::popcount(bits_[fw] & low_mask & high_mask));
  u64 c = static_cast<u64>(std::popcount(bits_[fw] & low_mask));
  for (u64 w = fw + 1; w < lw; ++w) c += static_cast<u64>(std::popcount(bits_[w]));
  c += static_cast<u64>(std::popcount(bits_[lw] & high_mask));
  return c;
}

bool PrimeSet::is_prime(u64 n) const {
  if (n > limit_) {
    throw Error(Errc::OutOfRange,
                "is_prime(" + std::to_string(n) + ") beyond sieve limit " +
                    std::to_string(limit_),
                n);
  }
  if (n == 2) return true;
  if (n < 2 || n % 2 == 0) return false;
  return odd_bit(n / 2);
}

u64 PrimeSet::pi(u64 x) const {
  if (x > limit_) {
    throw Error(Errc::OutOfRange,
                "pi(" + std::to_string(x) + ") beyond sieve limit " +
                    std::to_string(limit_),
                x);
  }
  if (x < 2) return 0;
  const u64 block = x / stride_;
  const u64 base = block * stride_;
  u64 result = checkpoints_[block] + (block == 0 ? 1 : 0);
  if (x > base) result += count_odd_bits(base / 2, (x - 1) / 2);
  return result;
}

u64 PrimeSet::pi(double x) const {
  if (!(x >= 0.0)) throw Error(Errc::InvalidArgument, "pi of a negative argument");
  if (x > static_cast<double>(limit_)) {
    throw Error(Errc::OutOfRange, "pi(" + std::to_string(x) + ") beyond sieve limit");
  }
  return pi(static_cast<u64>(std::floor(x)));
}

u64 PrimeSet::nth_prime(u64 n) const {
  if (n == 0) throw Error(Errc::InvalidArgument, "nth_prime index is 1-based");
  if (n > total_) {
    throw Error(Errc::OutOfRange,
                "only " + std::to_string(total_) + " primes <= " +
                    std::to_string(limit_) + ", asked for p_" + std::to_string(n));
  }
  if (n == 1) return 2;
  // Last block whose starting count is still < n.
  auto it = std::lower_bound(checkpoints_.begin(), checkpoints_.end(), n);
  const u64 block = static_cast<u64>(it - checkpoints_.begin()) - 1;
  u64 need = n - checkpoints_[block] - (block == 0 ? 1 : 0);
  for (u64 w = block * (stride_ / 128); w < bits_.size(); ++w) {
    const auto c = static_cast<u64>(std::popcount(bits_[w]));
    if (c >= need) {
      const u64 index = w * 64 + select_in_word(bits_[w], static_cast<unsigned>(need - 1));
      return 2 * index + 1;
    }
    need -= c;
  }
  throw Error(Errc::OutOfRange, "nth_prime scan overran the table");
}

std::vector<u64> PrimeSet::primes() const {
  std::vector<u64> out;
  out.reserve(total_);
  out.push_back(2);
  for (u64 w = 0; w < bits_.size(); ++w) {
    for (u64 bits = bits_[w]; bits != 0; bits &= bits - 1) {
      out.push_back(2 * (w * 64 + static_cast<u64>(std::countr_zero(bits))) + 1);
    }
  }
  return out;
}

PrimeSet build_prime_set(u64 limit, SieveOptions options) {
  return PrimeSet(limit, options);
}

MonotoneCounter::MonotoneCounter(std::vector<u64> elements, u64 source_limit)
    : elements_(std::move(elements)), source_limit_(source_limit) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i > 0 && elements_[i] <= elements_[i - 1]) {
      throw Error(Errc::InvalidSequence,
                  "elements not strictly increasing at position " + std::to_string(i));
    }
    if (elements_[i] > source_limit_) {
      throw Error(Errc::InvalidSequence,
                  "element " + std::to_string(elements_[i]) + " exceeds source limit " +
                      std::to_string(source_limit_));
    }
  }
}

u64 MonotoneCounter::rank(u64 x) const {
  if (x > source_limit_) {
    throw Error(Errc::OutOfRange,
                "rank(" + std::to_string(x) + ") beyond source limit " +
                    std::to_string(source_limit_),
                x);
  }
  return static_cast<u64>(std::upper_bound(elements_.begin(), elements_.end(), x) -
                          elements_.begin());
}

u64 MonotoneCounter::select(u64 n) const {
  if (n == 0 || n > elements_.size()) {
    throw Error(Errc::OutOfRange, "select(" + std::to_string(n) + ") with " +
                                      std::to_string(elements_.size()) + " elements");
  }
  return elements_[n - 1];
}

bool MonotoneCounter::contains(u64 x) const {
  if (x > source_limit_) {
    throw Error(Errc::OutOfRange, "membership of " + std::to_string(x) +
                                      " beyond source limit " + std::to_string(source_limit_));
  }
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

MonotoneCounter counter_from_elements(std::vector<u64> elements, u64 source_limit) {
  return MonotoneCounter(std::move(elements), source_limit);
}

MonotoneCounter counter_from_primes(const PrimeSet& primes) {
  return MonotoneCounter(primes.primes(), primes.limit());
}

u64 window(const MonotoneCounter& counter, u64 x) {
  return counter.rank(x) - counter.rank(x / 2);
}

u64 window(const PrimeSet& primes, u64 x) { return primes.pi(x) - primes.pi(x / 2); }

}  // namespace rkit
