#include <random>

#include "cyclotome/arith.hpp"
#include "cyclotome/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cyclotome;

TEST_CASE("is_prime_det on named values") {
  CHECK(is_prime_det(733));
  CHECK_FALSE(is_prime_det(125));
  CHECK(is_prime_det(2));
  CHECK(is_prime_det(3));
  CHECK_FALSE(is_prime_det(341550071728321ULL));  // strong pseudoprime to bases 2..17
  CHECK(is_prime_det(9223372036854775783ULL));    // largest prime below 2^63
}

TEST_CASE("is_prime_det range guard") {
  CHECK_THROWS_AS(is_prime_det(0), Error);
  CHECK_THROWS_AS(is_prime_det(1), Error);
  CHECK_THROWS_AS(is_prime_det(kArithLimit), Error);
  try {
    is_prime_det(1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfRange);
  }
}

TEST_CASE("is_prime_det agrees with trial division below 10^7") {
  const auto sieve = oracle::sieve(200'000);
  for (std::uint64_t n = 2; n <= 200'000; ++n) REQUIRE(is_prime_det(n) == sieve[n]);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = 2 + rng() % 10'000'000;
    REQUIRE(is_prime_det(n) == oracle::trial_division_prime(n));
  }
}

TEST_CASE("is_prime_det agrees with a second base set near 10^14 and above") {
  for (std::uint64_t n = 100'000'000'000'000ULL - 2000; n < 100'000'000'000'000ULL + 2000; ++n) {
    REQUIRE(is_prime_det(n) == oracle::sinclair_prime(n));
  }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20000; ++i) {
    const std::uint64_t n = (rng() >> 1) | 1;
    if (n < 3) continue;
    REQUIRE(is_prime_det(n) == oracle::sinclair_prime(n));
  }
  CHECK_FALSE(is_prime_det(2147483647ULL * 2147483629ULL));
  CHECK_FALSE(is_prime_det(3825123056546413051ULL));  // strong pseudoprime to bases 2..23
}

TEST_CASE("isqrt and iroot are exact") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(15) == 3);
  CHECK(isqrt(16) == 4);
  CHECK(isqrt(~std::uint64_t{0}) == 0xFFFFFFFFULL);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 5000; ++i) {
    const std::uint64_t n = rng() >> (rng() % 40);
    const std::uint64_t r = isqrt(n);
    REQUIRE(static_cast<unsigned __int128>(r) * r <= n);
    REQUIRE(static_cast<unsigned __int128>(r + 1) * (r + 1) > n);
  }
  // Perfect squares next to the double rounding boundary.
  for (std::uint64_t s = 3'037'000'000ULL; s < 3'037'000'499ULL; s += 37) {
    REQUIRE(isqrt(s * s) == s);
    REQUIRE(isqrt(s * s - 1) == s - 1);
  }
  CHECK(iroot(125, 3) == 5);
  CHECK(iroot(124, 3) == 4);
  CHECK(iroot(1ULL << 62, 62) == 2);
}

TEST_CASE("detect_prime_power examples") {
  CHECK(detect_prime_power(125) == PrimePower{5, 3});
  CHECK(detect_prime_power(733) == PrimePower{733, 1});
  CHECK(detect_prime_power(121) == PrimePower{11, 2});
  CHECK_FALSE(detect_prime_power(1).has_value());
  CHECK_FALSE(detect_prime_power(36).has_value());
  CHECK_FALSE(detect_prime_power(15).has_value());
}

TEST_CASE("detect_prime_power round-trips p^k for p < 100, k <= 9") {
  for (std::uint64_t p = 2; p < 100; ++p) {
    if (!oracle::trial_division_prime(p)) continue;
    for (unsigned k = 1; k <= 9; ++k) {
      const auto q = checked_pow(p, k);
      if (!q) continue;
      REQUIRE(detect_prime_power(*q) == PrimePower{p, k});
    }
  }
}

TEST_CASE("square_gate") {
  CHECK(square_gate(13) == 3);
  CHECK_FALSE(square_gate(37).has_value());
  CHECK(square_gate(125) == 11);
  CHECK(square_gate(5) == 1);
  CHECK_FALSE(square_gate(8).has_value());  // 4 = 2^2, but s must be odd
}

TEST_CASE("sweep small bounds") {
  const SweepReport one = sweep_s2_plus_4(1);
  CHECK(one.count == 1);
  REQUIRE(one.hits.size() == 1);
  CHECK(one.hits[0].q == 5);

  const SweepReport r = sweep_s2_plus_4(30);
  std::vector<std::uint64_t> s, q;
  for (const auto& h : r.hits) {
    s.push_back(h.s);
    q.push_back(h.q);
    CHECK(h.q % 8 == 5);
    CHECK(h.kind_label() == "prime");
    CHECK(oracle::trial_division_prime(h.q));
  }
  CHECK(s == std::vector<std::uint64_t>{1, 3, 5, 7, 13, 15, 17, 27});
  CHECK(q == std::vector<std::uint64_t>{5, 13, 29, 53, 173, 229, 293, 733});
}

TEST_CASE("sweep count at 10^3 equals a sieve count") {
  const auto sieve = oracle::sieve(1'000'000 + 4);
  std::uint64_t expected = 0;
  for (std::uint64_t s = 1; s <= 1000; ++s) expected += sieve[s * s + 4] ? 1 : 0;
  CHECK(sweep_s2_plus_4(1000).count == expected);
}

TEST_CASE("sweep is independent of the job count and monotone") {
  const SweepReport base = sweep_s2_plus_4(200'001, {1, true});
  std::uint64_t prev = 0;
  for (unsigned jobs : {2U, 3U, 7U, 16U}) {
    const SweepReport r = sweep_s2_plus_4(200'001, {jobs, true});
    CHECK(r.count == base.count);
    REQUIRE(r.hits.size() == base.hits.size());
    for (std::size_t i = 0; i < r.hits.size(); ++i) REQUIRE(r.hits[i].s == base.hits[i].s);
  }
  for (std::uint64_t n : {10ULL, 100ULL, 1000ULL, 10000ULL}) {
    const auto c = sweep_s2_plus_4(n, {1, false}).count;
    CHECK(c >= prev);
    prev = c;
  }
}

TEST_CASE("prime_power_scan") {
  CHECK(prime_power_scan(9).empty());
  const auto hits = prime_power_scan(11);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].q == 125);
  CHECK(hits[0].kind_label() == "prime_power(5,3)");
  for (const auto& h : prime_power_scan(20'001)) {
    CHECK(h.q % 8 == 5);
    CHECK(h.kind.k % 2 == 1);  // prime powers = 5 (mod 8) have odd exponent
  }
}
