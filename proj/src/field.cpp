#include "cyclotome/field.hpp"

#include <algorithm>
#include <bit>

#include "cyclotome/arith.hpp"
#include "cyclotome/error.hpp"

namespace cyclotome {

namespace {

using Poly = std::vector<std::uint64_t>;  // low to high

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial f.
void reduce_monic(Poly& a, const Poly& f, std::uint64_t p) {
  const std::size_t deg = f.size() - 1;
  trim(a);
  while (a.size() > deg) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - deg;
    for (std::size_t i = 0; i < deg; ++i) {
      const std::uint64_t t = mul_mod(lead, f[i], p);
      std::uint64_t& c = a[shift + i];
      c = c >= t ? c - t : c + p - t;
    }
    a.pop_back();
    trim(a);
  }
}

Poly mul_reduce(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + mul_mod(a[i], b[j], p)) % p;
    }
  }
  reduce_monic(out, f, p);
  return out;
}

Poly pow_reduce(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly result{1};
  reduce_monic(base, f, p);
  while (e > 0) {
    if (e & 1) result = mul_reduce(result, base, f, p);
    base = mul_reduce(base, base, f, p);
    e >>= 1;
  }
  return result;
}

// General remainder (divisor need not be monic).
Poly poly_mod(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  const std::uint64_t lead_inv = pow_mod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = mul_mod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t t = mul_mod(factor, b[i], p);
      std::uint64_t& c = a[shift + i];
      c = c >= t ? c - t : c + p - t;
    }
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^j) mod f.
Poly frobenius_power_of_x(unsigned j, const Poly& f, std::uint64_t p) {
  Poly h{0, 1};
  reduce_monic(h, f, p);
  for (unsigned i = 0; i < j; ++i) h = pow_reduce(h, p, f, p);
  return h;
}

std::vector<std::uint64_t> distinct_primes(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto [prime, exp] : factorize(n)) out.push_back(prime);
  return out;
}

}  // namespace

bool is_irreducible(std::span<const std::uint64_t> coeffs, std::uint64_t p) {
  Poly f(coeffs.begin(), coeffs.end());
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const auto k = static_cast<unsigned>(f.size() - 1);
  if (k == 1) return true;

  Poly x_pk = frobenius_power_of_x(k, f, p);
  Poly x{0, 1};
  reduce_monic(x, f, p);
  if (x_pk != x) return false;

  for (auto [r, exp] : factorize(k)) {
    Poly h = frobenius_power_of_x(k / static_cast<unsigned>(r), f, p);
    // h - x
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    if (h.empty()) return false;
    Poly g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

Field Field::make(std::uint64_t p, unsigned k) {
  if (p >= kArithLimit) throw Error(ErrorCode::NoField, "characteristic exceeds the 63-bit range");
  if (p < 3 || !is_prime_det(p)) {
    throw Error(ErrorCode::CompositeP, "characteristic must be an odd prime, got " + std::to_string(p));
  }
  if (k < 1) throw Error(ErrorCode::NoField, "extension degree must be at least 1");
  const auto q = checked_pow(p, k);
  if (!q) {
    throw Error(ErrorCode::NoField,
                std::to_string(p) + "^" + std::to_string(k) + " exceeds the 63-bit range");
  }

  Field f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = *q;
  f.ell_ = static_cast<unsigned>(std::countr_zero(f.q_ - 1));
  f.odd_part_ = (f.q_ - 1) >> f.ell_;
  f.group_order_primes_ = distinct_primes(f.q_ - 1);

  if (k > 1) {
    // Lexicographic order from the constant term up: c0 is the most
    // significant digit of the enumeration index.
    const std::uint64_t count = *q;
    Poly candidate(k + 1, 0);
    candidate[k] = 1;
    bool found = false;
    for (std::uint64_t idx = 0; idx < count && !found; ++idx) {
      std::uint64_t rest = idx;
      for (unsigned i = k; i-- > 0;) {
        candidate[i] = rest % p;
        rest /= p;
      }
      if (candidate[0] != 0 && is_irreducible(candidate, p)) found = true;
    }
    if (!found) throw Error(ErrorCode::NoField, "no irreducible modulus found");
    f.modulus_ = candidate;
  }

  auto is_primitive = [&f](FieldElement x) {
    if (x.value == 0) return false;
    return std::all_of(f.group_order_primes_.begin(), f.group_order_primes_.end(),
                       [&](std::uint64_t r) { return f.pow(x, (f.q_ - 1) / r) != f.one(); });
  };
  for (std::uint64_t v = 1; v < f.q_; ++v) {
    if (is_primitive({v})) {
      f.generator_ = {v};
      break;
    }
  }

  f.trace_of_basis_.assign(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    std::vector<std::uint64_t> basis(k, 0);
    basis[i] = 1;
    FieldElement y = f.from_coefficients(basis);
    FieldElement sum = f.zero();
    for (unsigned j = 0; j < k; ++j) {
      sum = f.add(sum, y);
      y = f.pow(y, p);
    }
    if (sum.value >= p) throw Error(ErrorCode::NoField, "trace left the prime field; modulus is not irreducible");
    f.trace_of_basis_[i] = sum.value;
  }
  return f;
}

FieldElement Field::element(std::uint64_t encoding) const {
  if (encoding >= q_) {
    throw Error(ErrorCode::Malformed, std::to_string(encoding) + " is not an element of " + name());
  }
  return {encoding};
}

std::vector<std::uint64_t> Field::coefficients(FieldElement x) const {
  std::vector<std::uint64_t> c(k_, 0);
  std::uint64_t v = x.value;
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

FieldElement Field::from_coefficients(std::span<const std::uint64_t> coeffs) const {
  std::uint64_t v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * p_ + coeffs[i] % p_;
  return {v};
}

FieldElement Field::add(FieldElement x, FieldElement y) const {
  if (k_ == 1) {
    const std::uint64_t s = x.value + y.value;  // both < 2^63
    return {s >= p_ ? s - p_ : s};
  }
  std::uint64_t a = x.value, b = y.value, out = 0, place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    const std::uint64_t d = (a % p_ + b % p_) % p_;
    out += d * place;
    a /= p_;
    b /= p_;
    if (i + 1 < k_) place *= p_;
  }
  return {out};
}

FieldElement Field::neg(FieldElement x) const {
  if (k_ == 1) return {x.value == 0 ? 0 : p_ - x.value};
  std::uint64_t a = x.value, out = 0, place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    const std::uint64_t d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * place;
    a /= p_;
    if (i + 1 < k_) place *= p_;
  }
  return {out};
}

FieldElement Field::sub(FieldElement x, FieldElement y) const { return add(x, neg(y)); }

FieldElement Field::mul(FieldElement x, FieldElement y) const {
  if (k_ == 1) return {mul_mod(x.value, y.value, p_)};
  Poly a = coefficients(x);
  Poly b = coefficients(y);
  trim(a);
  trim(b);
  Poly r = mul_reduce(a, b, modulus_, p_);
  r.resize(k_, 0);
  return from_coefficients(r);
}

FieldElement Field::pow(FieldElement x, std::uint64_t e) const {
  if (x.value == 0) return e == 0 ? one() : zero();
  e %= (q_ - 1);
  if (k_ == 1) return {pow_mod(x.value, e, p_)};
  FieldElement result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, x);
    x = mul(x, x);
    e >>= 1;
  }
  return result;
}

FieldElement Field::inv(FieldElement x) const {
  if (x.value == 0) throw Error(ErrorCode::ZeroInverse, "zero has no inverse in " + name());
  return pow(x, q_ - 2);
}

std::uint64_t Field::trace(FieldElement x) const {
  if (k_ == 1) return x.value;
  std::uint64_t v = x.value, t = 0;
  for (unsigned i = 0; i < k_; ++i) {
    t = (t + mul_mod(v % p_, trace_of_basis_[i], p_)) % p_;
    v /= p_;
  }
  return t;
}

std::uint64_t Field::order(FieldElement x) const {
  if (x.value == 0) throw Error(ErrorCode::ZeroIndex, "zero has no multiplicative order");
  std::uint64_t ord = q_ - 1;
  for (std::uint64_t r : group_order_primes_) {
    while (ord % r == 0 && pow(x, ord / r) == one()) ord /= r;
  }
  return ord;
}

std::string Field::name() const {
  if (k_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

}  // namespace cyclotome

namespace cyclotome {

Field field_of_order(std::uint64_t q) {
  const auto pk = detect_prime_power(q);
  if (!pk || pk->p == 2) throw Error(ErrorCode::NoField, std::to_string(q) + " is not a power of an odd prime");
  return Field::make(pk->p, pk->k);
}

}  // namespace cyclotome
