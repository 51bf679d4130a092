#pragma once

// Number-theoretic primitives and the sweep over primes of the form s^2 + 4.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cyclotome {

/// Exclusive upper bound for every integer predicate in this module.
inline constexpr std::uint64_t kArithLimit = std::uint64_t{1} << 63;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// floor(sqrt(n)), exact for every 64-bit n.
std::uint64_t isqrt(std::uint64_t n);

/// floor(n^(1/k)) for k >= 1, exact.
std::uint64_t iroot(std::uint64_t n, unsigned k);

/// base^exp, or nullopt if the result does not fit below kArithLimit.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

/// Deterministic primality for 1 < n < 2^63. Throws OutOfRange otherwise.
bool is_prime_det(std::uint64_t n);

/// Prime factorisation as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

struct PrimePower {
  std::uint64_t p;
  unsigned k;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// q = p^k with p prime and k maximal, or nullopt when q is not a prime power.
std::optional<PrimePower> detect_prime_power(std::uint64_t q);

/// The odd s with s^2 = q - 4, if one exists.
std::optional<std::uint64_t> square_gate(std::uint64_t q);

struct PrimeHit {
  std::uint64_t s;
  std::uint64_t q;
  PrimePower kind;  // k == 1 for primes

  bool is_prime() const { return kind.k == 1; }
  /// "prime" or "prime_power(p,k)".
  std::string kind_label() const;
};

struct SweepOptions {
  unsigned jobs = 1;
  bool keep_hits = true;
};

struct SweepReport {
  std::uint64_t bound = 0;  // largest s examined
  std::uint64_t count = 0;
  std::vector<PrimeHit> hits;  // ascending s; empty unless keep_hits
  double seconds = 0.0;
};

/// Counts primes s^2 + 4 for 1 <= s <= max_s. Only odd s can give primes.
/// The result is independent of opts.jobs.
SweepReport sweep_s2_plus_4(std::uint64_t max_s, const SweepOptions& opts = {});

/// All q = s^2 + 4 with odd s <= max_s that are prime powers with exponent > 1.
std::vector<PrimeHit> prime_power_scan(std::uint64_t max_s);

}  // namespace cyclotome
