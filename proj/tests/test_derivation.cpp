#include "doctest.h"

#include <algorithm>

#include "oracles.hpp"
#include "rkit/derivation.hpp"

using namespace rkit;

namespace {

const std::vector<u64> kFirst50Derived = {
    11,   41,   59,   97,   149,  151,  227,  229,  233,  239,  263,  307,  367,
    373,  401,  409,  569,  571,  587,  593,  599,  641,  643,  647,  653,  719,
    751,  821,  937,  941,  1009, 1019, 1021, 1031, 1049, 1051, 1061, 1063, 1217,
    1367, 1373, 1423, 1427, 1439, 1481, 1487, 1549, 1553, 1559, 1567};

std::vector<u64> head(const DerivedSequence& s, std::size_t n) {
  return {s.elements.begin(), s.elements.begin() + static_cast<std::ptrdiff_t>(n)};
}

}  // namespace

TEST_CASE("Ramanujan primes from the primes") {
  const PrimeSet ps(10000);
  const auto r = ramanujan_primes(ps, 1000);
  REQUIRE(r.elements.size() >= 6);
  CHECK(head(r, 6) == std::vector<u64>{2, 11, 17, 29, 41, 47});
  CHECK(r.level == 1);
  CHECK_FALSE(r.heuristic);
  CHECK(r.certified_count == r.elements.size());
  CHECK(r.truncated);  // 1000 terms are not certifiable below 10^4

  // Terms <= 101 used by the representation table.
  const auto rc = as_counter(r);
  for (u64 v : {59, 67, 71, 97, 101}) CHECK(rc.contains(v));
  CHECK(rc.rank(100) == 10);
}

TEST_CASE("generic derive over the prime counter matches the table-driven scan") {
  const PrimeSet ps(10000);
  const auto via_counter = derive(counter_from_primes(ps), 1000000, DeriveOptions{.level = 1});
  const auto via_table = ramanujan_primes(ps, 1000000);
  CHECK(via_counter.elements == via_table.elements);
  CHECK(via_counter.source_limit == via_table.source_limit);

  const auto generic = derive(counter_from_primes(ps), 1);
  CHECK(generic.elements == std::vector<u64>{2});
  CHECK(generic.heuristic);
}

TEST_CASE("derived Ramanujan primes reproduce the first fifty") {
  const auto d = derived_ramanujan_primes(10000, 50);
  REQUIRE(d.elements.size() == 50);
  CHECK(d.elements == kFirst50Derived);
  CHECK(d.level == 2);
  CHECK_FALSE(d.truncated);
  CHECK(d.elements[8] == 233);
  CHECK(d.elements[20] == 599);
  CHECK(d.elements[49] == 1567);
}

TEST_CASE("derive from the Ramanujan counter") {
  const PrimeSet ps(10000);
  const auto r = ramanujan_primes(ps, 1u << 30);
  const auto d = derive(as_counter(r), 5, DeriveOptions{.level = 2});
  CHECK(d.elements == std::vector<u64>{11, 41, 59, 97, 149});
}

TEST_CASE("forward scan equals the brute-force definition oracle") {
  const u64 limit = 10000;
  const auto primes = oracle::trial_division_primes(limit);
  const auto brute1 = oracle::brute_derive(primes, limit);
  const PrimeSet ps(limit);
  const auto r = ramanujan_primes(ps, 1u << 30);
  REQUIRE(r.elements.size() > 100);
  REQUIRE(r.elements.size() <= brute1.size());
  CHECK(r.elements == std::vector<u64>(brute1.begin(), brute1.begin() + r.elements.size()));

  // Level 2 from the brute-force level 1 terms.
  const auto brute2 = oracle::brute_derive(r.elements, r.source_limit);
  const auto d = derive(as_counter(r), 1u << 30, DeriveOptions{.level = 2});
  REQUIRE(d.elements.size() > 50);
  REQUIRE(d.elements.size() <= brute2.size());
  CHECK(d.elements == std::vector<u64>(brute2.begin(), brute2.begin() + d.elements.size()));
}

TEST_CASE("level 3 first term matches the brute-force scan") {
  const u64 limit = 40000;
  const auto l3 = level_k_sequence(limit, 3, 10);
  CHECK(l3.level == 3);
  CHECK(l3.heuristic);
  const auto l2 = level_k_sequence(limit, 2, 1u << 30);
  const auto brute3 = oracle::brute_derive(l2.elements, l2.source_limit);
  REQUIRE_FALSE(brute3.empty());
  CHECK(l3.elements.front() == brute3.front());
  CHECK(l3.elements.front() == 41);
  CHECK(level_k_sequence(limit, 1, 1).elements.front() == 2);
  CHECK(level_k_sequence(limit, 2, 1).elements.front() == 11);
}

TEST_CASE("level k eventually runs dry") {
  try {
    level_k_sequence(100, 6, 1);
    FAIL("expected EmptyLevel");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyLevel);
  }
}

TEST_CASE("derived terms satisfy the definition and nest") {
  const PrimeSet ps(1000000);
  const auto r = ramanujan_primes(ps, 1u << 30);
  const auto d = derive(as_counter(r), 1u << 30, DeriveOptions{.level = 2});
  const auto rc = as_counter(r);
  const auto pc = counter_from_primes(ps);

  // Membership: every R_n is prime, every R'_n is a Ramanujan prime.
  for (u64 v : r.elements) REQUIRE(ps.is_prime(v));
  for (u64 v : d.elements) REQUIRE(rc.contains(v));
  REQUIRE(std::is_sorted(r.elements.begin(), r.elements.end()));
  REQUIRE(std::adjacent_find(r.elements.begin(), r.elements.end()) == r.elements.end());

  // window(D_n - 1) < n and window(x) >= n on [D_n, limit], checked through
  // a running minimum of the window from the top.
  std::vector<u64> suffix_min(ps.limit() + 2, ~u64{0});
  for (u64 x = ps.limit(); x >= 1; --x) suffix_min[x] = std::min(suffix_min[x + 1], window(ps, x));
  for (u64 n = 1; n <= r.elements.size(); ++n) {
    const u64 dn = r.elements[n - 1];
    REQUIRE(suffix_min[dn] >= n);
    REQUIRE(window(ps, dn - 1) < n);
  }
  std::vector<u64> rmin(rc.source_limit() + 2, ~u64{0});
  for (u64 x = rc.source_limit(); x >= 1; --x) rmin[x] = std::min(rmin[x + 1], window(rc, x));
  for (u64 n = 1; n <= d.elements.size(); ++n) {
    const u64 dn = d.elements[n - 1];
    REQUIRE(rmin[dn] >= n);
    REQUIRE(window(rc, dn - 1) < n);
  }
}

TEST_CASE("derive argument checks") {
  CHECK_THROWS_AS(derive(MonotoneCounter({}, 10), 1), Error);
  CHECK_THROWS_AS(derive(counter_from_elements({2, 3}, 10), 0), Error);
  CHECK_THROWS_AS(level_k_sequence(100, 0, 1), Error);
}

TEST_CASE("certified prefix respects the safety divisor") {
  const PrimeSet ps(20000);
  const auto r = ramanujan_primes(ps, 1u << 30);
  CHECK(r.elements.back() <= ps.limit() / 2);
  // Nothing between the last kept term and source_limit.
  CHECK(r.source_limit >= r.elements.back());
  const auto strict = derive_from_primes(ps, 1u << 30, 4);
  CHECK(strict.elements.back() <= ps.limit() / 4);
  CHECK(std::equal(strict.elements.begin(), strict.elements.end(), r.elements.begin()));
}

TEST_CASE("c-Ramanujan primes") {
  const PrimeSet ps(100000);
  CHECK(c_ramanujan(make_c_query(1, 2, 1), ps) == 2);
  CHECK(c_ramanujan(make_c_query(1, 2, 4), ps) == 29);
  CHECK(c_ramanujan(make_c_query(2, 4, 4), ps) == 29);  // reduced to 1/2
  CHECK(c_ramanujan(make_c_query(3, 4, 1), ps) == 11);
  CHECK(c_ramanujan(make_c_query(3, 4, 2), ps) == 31);
  CHECK(c_ramanujan(make_c_query(3, 4, 5), ps) == 101);

  CHECK_THROWS_AS(make_c_query(1, 1, 1), Error);
  CHECK_THROWS_AS(make_c_query(0, 3, 1), Error);
  CHECK_THROWS_AS(make_c_query(1, 65, 1), Error);
  CHECK(make_c_query(32, 128, 1).c_den == 4);
}

TEST_CASE("c = 1/2 agrees with the Ramanujan primes") {
  const PrimeSet ps(20000);
  const auto r = ramanujan_primes(ps, 1u << 30);
  for (u64 n = 1; n <= r.elements.size(); n += (n < 50 ? 1 : 37)) {
    REQUIRE(c_ramanujan(make_c_query(1, 2, n), ps) == r.elements[n - 1]);
  }
}

TEST_CASE("c-Ramanujan beyond the sieve is an explicit range error") {
  const PrimeSet ps(1000);
  try {
    c_ramanujan(make_c_query(9, 10, 50), ps);
    FAIL("expected OutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OutOfRange);
    CHECK(e.detail() > 1000);
  }
}

TEST_CASE("c-Ramanujan against a real-valued definition scan") {
  // For c = 3/4 check every x on a fine rational grid: the count must be
  // >= n from R on, and must fail somewhere in [R-1, R).
  const PrimeSet ps(5000);
  const auto primes = oracle::trial_division_primes(5000);
  auto count_at = [&](u64 num, u64 den) {  // x = num/den, c x = 3 num / (4 den)
    return oracle::linear_rank(primes, num / den) - oracle::linear_rank(primes, 3 * num / (4 * den));
  };
  for (u64 n = 1; n <= 6; ++n) {
    const u64 r = c_ramanujan(make_c_query(3, 4, n), ps);
    bool fails_below = false;
    for (u64 num = (r - 1) * 12; num < r * 12; ++num) fails_below |= count_at(num, 12) < n;
    CHECK(fails_below);
    for (u64 num = r * 12; num <= 2000 * 12; ++num) REQUIRE(count_at(num, 12) >= n);
  }
}

TEST_CASE("interval prime count") {
  const PrimeSet ps(1000);
  CHECK(interval_prime_count(ps, 1, 2, 10) == 1);
  CHECK(interval_prime_count(ps, 1, 2, 2) == 1);
  CHECK(interval_prime_count(ps, 9, 10, 100) == 1);
  CHECK_THROWS_AS(interval_prime_count(ps, 1, 2, 2000), Error);
}
