#pragma once

// Exact arithmetic in GF(p^k) for odd p.
//
// Elements are encoded as integers in [0, q). For k = 1 the encoding is the
// residue itself; for k > 1 it is the base-p number whose digits are the
// coefficients of the polynomial representative, constant term least
// significant. The modulus is the smallest monic irreducible of degree k when
// coefficient vectors are compared from the constant term up, and the
// generator is the primitive element with the smallest encoding.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cyclotome {

struct FieldElement {
  std::uint64_t value = 0;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

class Field {
 public:
  /// Throws CompositeP if p is not an odd prime, NoField if p^k >= 2^63.
  static Field make(std::uint64_t p, unsigned k = 1);

  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint64_t q() const { return q_; }
  /// q - 1 = 2^ell * odd_part with odd_part odd.
  unsigned ell() const { return ell_; }
  std::uint64_t odd_part() const { return odd_part_; }
  /// Monic modulus coefficients, low to high (size k + 1). Empty when k == 1.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  FieldElement generator() const { return generator_; }

  /// Throws Malformed if encoding >= q.
  FieldElement element(std::uint64_t encoding) const;
  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }

  FieldElement add(FieldElement x, FieldElement y) const;
  FieldElement sub(FieldElement x, FieldElement y) const;
  FieldElement neg(FieldElement x) const;
  FieldElement mul(FieldElement x, FieldElement y) const;
  /// Throws ZeroInverse on zero.
  FieldElement inv(FieldElement x) const;
  FieldElement pow(FieldElement x, std::uint64_t e) const;

  /// Absolute trace to GF(p), as a residue in [0, p).
  std::uint64_t trace(FieldElement x) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t order(FieldElement x) const;

  std::vector<std::uint64_t> coefficients(FieldElement x) const;
  FieldElement from_coefficients(std::span<const std::uint64_t> coeffs) const;

  /// "GF(13)" or "GF(5^3)".
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_ && a.generator_ == b.generator_;
  }

 private:
  Field() = default;

  std::uint64_t p_ = 0;
  unsigned k_ = 1;
  std::uint64_t q_ = 0;
  unsigned ell_ = 0;
  std::uint64_t odd_part_ = 0;
  std::vector<std::uint64_t> modulus_;
  FieldElement generator_;
  std::vector<std::uint64_t> group_order_primes_;  // distinct primes dividing q - 1
  std::vector<std::uint64_t> trace_of_basis_;      // Tr(t^i), i < k
};

/// Monic irreducibility test over GF(p) (Rabin's test). coeffs low to high.
bool is_irreducible(std::span<const std::uint64_t> coeffs, std::uint64_t p);

}  // namespace cyclotome

namespace cyclotome {

/// The field of order q, with q = p^k detected automatically.
/// Throws NoField unless q is a power of an odd prime.
Field field_of_order(std::uint64_t q);

}  // namespace cyclotome
