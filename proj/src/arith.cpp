#include "cyclotome/arith.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>
#include <thread>

#include "cyclotome/error.hpp"

namespace cyclotome {

namespace {

constexpr std::array<std::uint64_t, 24> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                                        41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};

// Strong-pseudoprime base sets. The first seven primes are a complete witness
// set for n < 341,550,071,728,321 (Jaeschke 1993); the first twelve primes
// cover n < 3,317,044,064,679,887,385,961,981 (Sorenson & Webster 2015),
// which contains the whole 63-bit range.
constexpr std::array<std::uint64_t, 7> kBasesSmall = {2, 3, 5, 7, 11, 13, 17};
constexpr std::array<std::uint64_t, 12> kBasesFull = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
constexpr std::uint64_t kSmallBaseLimit = 341'550'071'728'321ULL;

bool strong_probable_prime(std::uint64_t n, std::uint64_t base, std::uint64_t d, int r) {
  std::uint64_t x = pow_mod(base % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

bool is_prime_unchecked(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 89 * 89) return true;
  const int r = std::countr_zero(n - 1);
  const std::uint64_t d = (n - 1) >> r;
  auto passes = [&](std::uint64_t base) { return strong_probable_prime(n, base, d, r); };
  if (n < kSmallBaseLimit) return std::all_of(kBasesSmall.begin(), kBasesSmall.end(), passes);
  return std::all_of(kBasesFull.begin(), kBasesFull.end(), passes);
}

// Brent's variant of Pollard rho; n is odd, composite, and has no tiny factor.
std::uint64_t pollard_brent(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, x = 2, ys = 2, g = 1, q = 1;
    std::uint64_t r = 1;
    constexpr std::uint64_t m = 128;
    auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime_unchecked(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t isqrt(std::uint64_t n) {
  // The double seed can be off by one or two at 64-bit scale; correct exactly.
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  if (r > 0xFFFFFFFFULL) r = 0xFFFFFFFFULL;
  while (r > 0 && r * r > n) --r;
  while (r < 0xFFFFFFFFULL && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
  unsigned __int128 acc = 1;
  for (unsigned i = 0; i < exp; ++i) {
    acc *= base;
    if (acc >= kArithLimit) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t iroot(std::uint64_t n, unsigned k) {
  if (k == 0) throw Error(ErrorCode::OutOfRange, "iroot: k must be positive");
  if (k == 1 || n < 2) return n;
  if (k == 2) return isqrt(n);
  auto r = static_cast<std::uint64_t>(std::pow(static_cast<double>(n), 1.0 / k));
  auto fits = [&](std::uint64_t x) {
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
      acc *= x;
      if (acc > n) return false;
    }
    return true;
  };
  while (r > 0 && !fits(r)) --r;
  while (fits(r + 1)) ++r;
  return r;
}

bool is_prime_det(std::uint64_t n) {
  if (n <= 1 || n >= kArithLimit) {
    throw Error(ErrorCode::OutOfRange, "primality test needs 1 < n < 2^63, got " + std::to_string(n));
  }
  return is_prime_unchecked(n);
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::OutOfRange, "cannot factor 0");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p : kSmallPrimes) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p : primes) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

std::optional<PrimePower> detect_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto max_k = static_cast<unsigned>(std::bit_width(q) - 1);
  for (unsigned k = max_k; k >= 2; --k) {
    const std::uint64_t r = iroot(q, k);
    if (r < 2) continue;
    if (checked_pow(r, k) == q && is_prime_unchecked(r)) return PrimePower{r, k};
  }
  if (is_prime_unchecked(q)) return PrimePower{q, 1};
  return std::nullopt;
}

std::optional<std::uint64_t> square_gate(std::uint64_t q) {
  if (q < 5) return std::nullopt;
  const std::uint64_t s = isqrt(q - 4);
  if (s * s != q - 4 || s % 2 == 0) return std::nullopt;
  return s;
}

std::string PrimeHit::kind_label() const {
  if (kind.k == 1) return "prime";
  return "prime_power(" + std::to_string(kind.p) + "," + std::to_string(kind.k) + ")";
}

SweepReport sweep_s2_plus_4(std::uint64_t max_s, const SweepOptions& opts) {
  // s^2 + 4 must stay below 2^63.
  if (max_s > 3'037'000'499ULL) throw Error(ErrorCode::OutOfRange, "sweep bound exceeds the 63-bit guard");
  const auto start = std::chrono::steady_clock::now();

  // Odd s = 2i + 1 for i in [0, n_odd).
  const std::uint64_t n_odd = (max_s + 1) / 2;
  const unsigned jobs = std::max(1U, opts.jobs);
  const std::uint64_t block = (n_odd + jobs - 1) / std::max<std::uint64_t>(jobs, 1);

  struct Partial {
    std::uint64_t count = 0;
    std::vector<PrimeHit> hits;
  };
  std::vector<Partial> partials(jobs);

  auto work = [&](unsigned j) {
    const std::uint64_t lo = std::min(n_odd, j * block);
    const std::uint64_t hi = std::min(n_odd, lo + block);
    Partial& part = partials[j];
    for (std::uint64_t i = lo; i < hi; ++i) {
      const std::uint64_t s = 2 * i + 1;
      const std::uint64_t q = s * s + 4;
      if (is_prime_unchecked(q)) {
        ++part.count;
        if (opts.keep_hits) part.hits.push_back({s, q, {q, 1}});
      }
    }
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(work, j);
  }

  SweepReport report;
  report.bound = max_s;
  for (Partial& part : partials) {
    report.count += part.count;
    report.hits.insert(report.hits.end(), part.hits.begin(), part.hits.end());
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<PrimeHit> prime_power_scan(std::uint64_t max_s) {
  if (max_s > 3'037'000'499ULL) throw Error(ErrorCode::OutOfRange, "scan bound exceeds the 63-bit guard");
  std::vector<PrimeHit> out;
  for (std::uint64_t s = 1; s <= max_s; s += 2) {
    const std::uint64_t q = s * s + 4;
    if (is_prime_unchecked(q)) continue;
    if (auto pk = detect_prime_power(q); pk && pk->k > 1) out.push_back({s, q, *pk});
  }
  return out;
}

}  // namespace cyclotome
