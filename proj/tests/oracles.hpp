#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library's algorithms; inputs are plain integers and vectors.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <set>
#include <vector>

namespace oracle {

inline bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  for (; e; e >>= 1, b = mulmod(b, b, m)) {
    if (e & 1) r = mulmod(r, b, m);
  }
  return r;
}

/// Miller-Rabin with the seven-base set of Jim Sinclair (complete below 2^64).
inline bool sinclair_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    a %= n;
    if (a == 0) continue;
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::vector<bool> sieve(std::uint64_t limit) {
  std::vector<bool> is_p(limit + 1, true);
  is_p[0] = false;
  if (limit >= 1) is_p[1] = false;
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (!is_p[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) is_p[j] = false;
  }
  return is_p;
}

/// {x^2 mod p : x != 0}
inline std::set<std::uint64_t> squares_mod(std::uint64_t p) {
  std::set<std::uint64_t> s;
  for (std::uint64_t x = 1; x < p; ++x) s.insert(x * x % p);
  return s;
}

/// Schoolbook product of coefficient vectors (low to high) reduced by a monic modulus.
inline std::vector<std::uint64_t> poly_mulmod(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                                              const std::vector<std::uint64_t>& modulus, std::uint64_t p) {
  std::vector<std::uint64_t> prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  const std::size_t k = modulus.size() - 1;
  for (std::size_t top = prod.size(); top-- > k;) {
    const std::uint64_t c = prod[top];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= k; ++i) {
      prod[top - k + i] = (prod[top - k + i] + p * p - c * modulus[i] % p) % p;
    }
  }
  prod.resize(k);
  return prod;
}

inline std::vector<std::uint64_t> digits(std::uint64_t v, std::uint64_t p, std::size_t k) {
  std::vector<std::uint64_t> d(k);
  for (auto& x : d) {
    x = v % p;
    v /= p;
  }
  return d;
}

inline std::uint64_t undigits(const std::vector<std::uint64_t>& d, std::uint64_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

/// exp(2 pi i j / r) evaluated directly.
inline std::complex<double> root(std::uint64_t j, std::uint64_t r) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j % r) / static_cast<double>(r));
}

/// |{(x, y) in D^2 : x - y = a (mod n)}| via an ordered map.
inline std::map<std::uint64_t, std::uint64_t> differences_mod(const std::vector<std::uint64_t>& D, std::uint64_t n) {
  std::map<std::uint64_t, std::uint64_t> m;
  for (std::uint64_t a = 1; a < n; ++a) m[a] = 0;
  for (auto x : D) {
    for (auto y : D) {
      if (x != y) ++m[(x + n - y) % n];
    }
  }
  return m;
}

using Matrix = std::vector<std::vector<std::int64_t>>;

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

/// Closed walks of length k. In a tournament (no loops, no 2-cycles) every
/// closed walk of length 3, 4 or 5 is a simple cycle, so c_k = trace(A^k) / k.
inline std::int64_t trace_power(const Matrix& a, int k) {
  Matrix p = a;
  for (int i = 1; i < k; ++i) p = multiply(p, a);
  std::int64_t t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += p[i][i];
  return t;
}

}  // namespace oracle
