#include "rkit/additive.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace rkit {

namespace {

constexpr u64 kTableFirst = 123;
constexpr u64 kTableLast = 224;
constexpr u64 kGreenfieldStartJ = 17;

void require_covered(const MonotoneCounter& ramanujan, u64 x, const char* what) {
  if (x > ramanujan.source_limit()) {
    throw Error(Errc::OutOfRange,
                std::string(what) + " needs Ramanujan primes up to " + std::to_string(x) +
                    ", counter covers " + std::to_string(ramanujan.source_limit()),
                x);
  }
}

std::vector<u64> ramanujan_up_to(const MonotoneCounter& ramanujan, u64 x) {
  const auto all = ramanujan.elements();
  const auto end = std::upper_bound(all.begin(), all.end(), x);
  return {all.begin(), end};
}

}  // namespace

RepresentationCheck verify_representation(const Representation& rep,
                                          const MonotoneCounter& ramanujan) {
  for (std::size_t i = 1; i < rep.parts.size(); ++i) {
    if (rep.parts[i] >= rep.parts[i - 1]) return {RepresentationFault::NotDecreasing};
  }
  u64 sum = 0;
  for (u64 p : rep.parts) {
    if (p > ramanujan.source_limit()) return {RepresentationFault::BeyondSource};
    if (!ramanujan.contains(p)) return {RepresentationFault::NotRamanujan};
    sum += p;
  }
  if (rep.parts.empty() || sum != rep.target) return {RepresentationFault::SumMismatch};
  return {};
}

RichertRepresenter::RichertRepresenter(const MonotoneCounter& ramanujan)
    : ramanujan_(ramanujan) {
  require_covered(ramanujan, kTableLast, "representation base table");
  for (const auto& row : richert_table()) {
    Representation rep{row.target, row.parts};
    if (verify_representation(rep, ramanujan)) {
      base_.push_back(row.parts);
    } else {
      base_.push_back(small(row.target).value_or(std::vector<u64>{}));
    }
  }
}

std::optional<std::vector<u64>> RichertRepresenter::small(u64 n) const {
  // Largest-first exhaustive search over distinct parts.
  const auto parts = ramanujan_up_to(ramanujan_, n);
  std::vector<u64> chosen;
  std::function<bool(std::size_t, u64)> rec = [&](std::size_t end, u64 rest) -> bool {
    if (rest == 0) return true;
    for (std::size_t i = end; i-- > 0;) {
      if (parts[i] > rest) continue;
      chosen.push_back(parts[i]);
      if (rec(i, rest - parts[i])) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (n > 0 && rec(parts.size(), n)) return chosen;
  return std::nullopt;
}

std::optional<Representation> RichertRepresenter::represent(u64 n) const {
  if (n == 0) throw Error(Errc::InvalidArgument, "representations are for n >= 1");
  require_covered(ramanujan_, n, "representation");
  Representation rep{n, {}};
  u64 rest = n;
  while (rest > kTableLast) {
    if (ramanujan_.contains(rest)) {
      rep.parts.push_back(rest);
      rest = 0;
      break;
    }
    const auto all = ramanujan_.elements();
    const auto it = std::upper_bound(all.begin(), all.end(), rest - kTableFirst);
    const u64 m = *(it - 1);
    rep.parts.push_back(m);
    rest -= m;
  }
  if (rest >= kTableFirst) {
    const auto& row = base_[rest - kTableFirst];
    if (row.empty()) return std::nullopt;
    rep.parts.insert(rep.parts.end(), row.begin(), row.end());
  } else if (rest > 0) {
    auto tail = small(rest);
    if (!tail) return std::nullopt;
    rep.parts.insert(rep.parts.end(), tail->begin(), tail->end());
  }
  if (!verify_representation(rep, ramanujan_)) {
    throw Error(Errc::InvalidSequence,
                "constructed representation of " + std::to_string(n) + " is invalid");
  }
  return rep;
}

std::optional<Representation> richert_represent(u64 n, const MonotoneCounter& ramanujan) {
  return RichertRepresenter(ramanujan).represent(n);
}

std::vector<bool> representable_set(u64 scan_limit, const MonotoneCounter& ramanujan) {
  require_covered(ramanujan, scan_limit, "subset-sum scan");
  std::vector<bool> reach(scan_limit + 1, false);
  reach[0] = true;
  for (u64 p : ramanujan_up_to(ramanujan, scan_limit)) {
    for (u64 s = scan_limit; s >= p; --s) {
      if (reach[s - p]) reach[s] = true;
    }
  }
  return reach;
}

u64 largest_unrepresentable(u64 scan_limit, const MonotoneCounter& ramanujan) {
  if (scan_limit < 500) throw Error(Errc::InvalidArgument, "scan limit must be >= 500");
  const auto reach = representable_set(scan_limit, ramanujan);
  for (u64 n = scan_limit; n >= 1; --n) {
    if (!reach[n]) return n;
  }
  return 0;
}

RichertInduction richert_induction_start(const MonotoneCounter& ramanujan, u64 a) {
  const auto all = ramanujan.elements();
  std::vector<u64> prefix;
  for (u64 r = 1; r < all.size(); ++r) {
    prefix.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(r - 1));
    const u64 total = std::accumulate(prefix.begin(), prefix.end(), u64{0});
    if (total < a + 1) continue;
    // Covered run a+1 .. a+s using R_1..R_{r-1}, tracking one witness each.
    std::vector<u64> last_part(total + 1, 0);
    std::vector<bool> reach(total + 1, false);
    reach[0] = true;
    for (u64 p : prefix) {
      for (u64 v = total; v >= p; --v) {
        if (!reach[v] && reach[v - p]) {
          reach[v] = true;
          last_part[v] = p;
        }
      }
    }
    u64 s = 0;
    while (a + s + 1 <= total && reach[a + s + 1]) ++s;
    if (s < all[r - 1]) continue;

    RichertInduction ind{a, r, s, {}};
    for (u64 v = a + 1; v <= a + s; ++v) {
      Representation rep{v, {}};
      for (u64 rest = v; rest > 0; rest -= last_part[rest]) rep.parts.push_back(last_part[rest]);
      std::sort(rep.parts.rbegin(), rep.parts.rend());
      ind.base_window.push_back(std::move(rep));
    }
    return ind;
  }
  throw Error(Errc::OutOfRange, "no induction start found within the counter");
}

void advance(RichertInduction& ind, const MonotoneCounter& ramanujan) {
  if (ind.r + 1 > ramanujan.size()) {
    throw Error(Errc::OutOfRange, "induction step needs R_" + std::to_string(ind.r + 1));
  }
  const u64 next_s = ind.s + ramanujan.select(ind.r);
  if (next_s < ramanujan.select(ind.r + 1)) {
    throw Error(Errc::InvalidSequence, "s_r < R_{r+1} at r = " + std::to_string(ind.r));
  }
  ind.s = next_s;
  ++ind.r;
}

bool verify_pairing(const Pairing& pairing, const MonotoneCounter& ramanujan) {
  if (pairing.pairs.size() != pairing.k || pairing.sums.size() != pairing.k) return false;
  std::vector<bool> seen(2 * pairing.k + 1, false);
  for (std::size_t i = 0; i < pairing.pairs.size(); ++i) {
    const auto [x, y] = pairing.pairs[i];
    for (u64 v : {x, y}) {
      if (v == 0 || v > 2 * pairing.k || seen[v]) return false;
      seen[v] = true;
    }
    if (x + y != pairing.sums[i]) return false;
    if (x + y > ramanujan.source_limit() || !ramanujan.contains(x + y)) return false;
  }
  return true;
}

bool greenfield_base_k(u64 k) {
  for (const auto& [base, pairs] : greenfield_table()) {
    if (base == k) return true;
  }
  return false;
}

namespace {

Pairing make_pairing(u64 k, std::vector<std::pair<u64, u64>> pairs) {
  Pairing p{k, std::move(pairs), {}};
  for (auto& [x, y] : p.pairs) {
    if (x > y) std::swap(x, y);
    p.sums.push_back(x + y);
  }
  return p;
}

// Residual sizes the recursion may hand down.
bool pairable_residual(u64 k) { return k == 0 || greenfield_base_k(k) || k >= 17; }

}  // namespace

std::optional<Pairing> greenfield_pairing(u64 k, const MonotoneCounter& ramanujan) {
  if (k == 0) throw Error(Errc::InvalidArgument, "k must be >= 1");
  require_covered(ramanujan, 4 * k, "pairing");

  std::vector<std::pair<u64, u64>> pairs;
  u64 top = k;
  while (top > 0) {
    if (greenfield_base_k(top)) {
      const auto& table = greenfield_table();
      const auto it = std::find_if(table.begin(), table.end(),
                                   [&](const auto& e) { return e.first == top; });
      auto candidate = make_pairing(top, it->second);
      if (!verify_pairing(candidate, ramanujan)) {
        auto searched = pairing_oracle(top, ramanujan);
        if (!searched) return std::nullopt;
        candidate = std::move(*searched);
      }
      pairs.insert(pairs.end(), candidate.pairs.begin(), candidate.pairs.end());
      break;
    }
    if (top < 17) return std::nullopt;

    auto usable = [&](u64 j) {
      return ramanujan.contains(2 * top + j) && pairable_residual((j - 1) / 2);
    };
    std::optional<u64> chosen;
    for (u64 j = kGreenfieldStartJ; j < 2 * top; j += 2) {
      if (usable(j)) { chosen = j; break; }
    }
    if (!chosen) {
      for (u64 j = 1; j < kGreenfieldStartJ && j < 2 * top; j += 2) {
        if (usable(j)) { chosen = j; break; }
      }
    }
    if (!chosen) return std::nullopt;
    for (u64 lo = *chosen, hi = 2 * top; lo < hi; ++lo, --hi) pairs.emplace_back(lo, hi);
    top = (*chosen - 1) / 2;
  }

  std::sort(pairs.begin(), pairs.end());
  auto result = make_pairing(k, std::move(pairs));
  if (!verify_pairing(result, ramanujan)) return std::nullopt;
  return result;
}

std::optional<Pairing> pairing_oracle(u64 k, const MonotoneCounter& ramanujan) {
  if (k > kPairingOracleMaxK) {
    throw Error(Errc::OracleTooLarge, "pairing oracle is limited to k <= 20");
  }
  if (k == 0) throw Error(Errc::InvalidArgument, "k must be >= 1");
  require_covered(ramanujan, 4 * k, "pairing oracle");

  std::vector<bool> used(2 * k + 1, false);
  std::vector<std::pair<u64, u64>> pairs;
  std::function<bool()> rec = [&]() -> bool {
    u64 i = 1;
    while (i <= 2 * k && used[i]) ++i;
    if (i > 2 * k) return true;
    used[i] = true;
    for (u64 j = i + 1; j <= 2 * k; ++j) {
      if (used[j] || !ramanujan.contains(i + j)) continue;
      used[j] = true;
      pairs.emplace_back(i, j);
      if (rec()) return true;
      pairs.pop_back();
      used[j] = false;
    }
    used[i] = false;
    return false;
  };
  if (!rec()) return std::nullopt;
  return make_pairing(k, std::move(pairs));
}

}  // namespace rkit
