#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "rkit/sequences.hpp"

namespace rkit {

// All functions here take the Ramanujan primes as a counter built from a
// certified level-1 sequence (see as_counter). They never sieve on their own.

/// A sum of pairwise distinct Ramanujan primes, largest part first.
struct Representation {
  u64 target = 0;
  std::vector<u64> parts;

  bool operator==(const Representation&) const = default;
};

enum class RepresentationFault {
  None,
  SumMismatch,
  NotDecreasing,  // also catches repeated parts
  NotRamanujan,
  BeyondSource,   // a part exceeds the counter's source limit
};

struct RepresentationCheck {
  RepresentationFault fault = RepresentationFault::None;
  explicit operator bool() const noexcept { return fault == RepresentationFault::None; }
};

RepresentationCheck verify_representation(const Representation& rep,
                                          const MonotoneCounter& ramanujan);

/// Representations of 123..224 as listed in the reference table.
struct TableRow {
  u64 target;
  std::vector<u64> parts;
};
std::span<const TableRow> richert_table();

/// Builds representations for any n >= 1.
///
/// 123..224 come from the reference table after re-verification (a row that
/// fails is replaced by a searched witness). Below 123 a largest-first
/// exhaustive search is used. Above 224, n itself is taken if it is a
/// Ramanujan prime; otherwise the largest Ramanujan prime m <= n - 123 is
/// peeled off and n - m is represented recursively. Because consecutive
/// Ramanujan primes satisfy R_{i+1} < 2 R_i, every part of the remainder is
/// smaller than m.
class RichertRepresenter {
 public:
  explicit RichertRepresenter(const MonotoneCounter& ramanujan);

  /// nullopt if n has no representation (only possible below 123). Throws
  /// OutOfRange if n exceeds the counter's source limit.
  std::optional<Representation> represent(u64 n) const;

 private:
  std::optional<std::vector<u64>> small(u64 n) const;

  const MonotoneCounter& ramanujan_;
  std::vector<std::vector<u64>> base_;  // index target - 123, for 123..224
};

std::optional<Representation> richert_represent(u64 n, const MonotoneCounter& ramanujan);

/// Subset-sum reachability of 0..scan_limit by distinct Ramanujan primes.
std::vector<bool> representable_set(u64 scan_limit, const MonotoneCounter& ramanujan);

/// Largest n <= scan_limit with no representation. scan_limit >= 500.
u64 largest_unrepresentable(u64 scan_limit, const MonotoneCounter& ramanujan);

/// One state of the induction that extends a covered interval
/// [a+1, a+s] step by step: with s = s_{r-1} covering by R_1..R_{r-1} and
/// s >= R_r, the next state has s_r = s_{r-1} + R_r and r + 1.
struct RichertInduction {
  u64 a = 122;
  u64 r = 0;
  u64 s = 0;  // s_{r-1}
  std::vector<Representation> base_window;  // a+1 .. a+s at the start
};

/// Smallest valid starting state for the given a, found and checked by
/// subset-sum over R_1..R_{r-1}.
RichertInduction richert_induction_start(const MonotoneCounter& ramanujan, u64 a = 122);

/// Applies one step; throws InvalidSequence if s_r >= R_{r+1} fails.
void advance(RichertInduction& ind, const MonotoneCounter& ramanujan);

/// k disjoint pairs covering {1..2k}, every pair sum a Ramanujan prime.
struct Pairing {
  u64 k = 0;
  std::vector<std::pair<u64, u64>> pairs;  // smaller element first
  std::vector<u64> sums;

  bool operator==(const Pairing&) const = default;
};

bool verify_pairing(const Pairing& pairing, const MonotoneCounter& ramanujan);

/// Reference arrangements, keyed by k.
std::span<const std::pair<u64, std::vector<std::pair<u64, u64>>>> greenfield_table();

/// k values <= 17 that admit a pairing: 5, 6, 8, 9, 11, 12, 14, 15, 17.
bool greenfield_base_k(u64 k);

/// Constructive pairing. Base k come from the reference table (re-verified).
/// Otherwise, scanning odd j ascending from 17, picks the first j with 2k+j
/// a Ramanujan prime and (j-1)/2 a base k or >= 17, pairs {j..2k}
/// symmetrically to sum 2k+j and recurses on {1..j-1}. If no such j exists
/// every odd j >= 1 with a pairable residue is tried. nullopt = infeasible.
std::optional<Pairing> greenfield_pairing(u64 k, const MonotoneCounter& ramanujan);

inline constexpr u64 kPairingOracleMaxK = 20;

/// Exhaustive backtracking over perfect matchings. Throws OracleTooLarge
/// for k > 20.
std::optional<Pairing> pairing_oracle(u64 k, const MonotoneCounter& ramanujan);

}  // namespace rkit
