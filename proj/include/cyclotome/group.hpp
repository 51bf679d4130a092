#pragma once

// Finite abelian groups used as Cayley-digraph vertex sets: the additive
// group of a field, or Z/nZ. Elements are encoded as integers in [0, n).

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclotome/field.hpp"

namespace cyclotome {

class AdditiveGroup {
 public:
  static AdditiveGroup of_field(Field field);
  /// Throws OutOfRange for n < 1.
  static AdditiveGroup cyclic(std::uint64_t n);

  std::uint64_t order() const { return order_; }
  bool is_field() const { return field_.has_value(); }
  /// Throws Malformed for cyclic groups.
  const Field& field() const;

  std::uint64_t add(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t sub(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t neg(std::uint64_t x) const;

  /// psi_a(x) = exp(2*pi*i * phase(a, x) / phase_modulus()).
  /// Fields use Tr(a*x) over p; Z/nZ uses a*x over n.
  std::uint64_t phase(std::uint64_t a, std::uint64_t x) const;
  std::uint64_t phase_modulus() const { return field_ ? field_->p() : order_; }

  /// "F_13", "F_5^3" or "Z/9Z".
  std::string name() const;

 private:
  std::optional<Field> field_;
  std::uint64_t order_ = 0;
};

/// Evaluates additive characters of one group, caching the roots of unity.
class CharacterTable {
 public:
  explicit CharacterTable(AdditiveGroup group);

  const AdditiveGroup& group() const { return group_; }

  std::complex<double> psi(std::uint64_t a, std::uint64_t x) const;

  /// Sum of psi_a(s) over s in S, with compensated summation.
  std::complex<double> sum(std::uint64_t a, std::span<const std::uint64_t> S) const;

 private:
  std::complex<double> root(std::uint64_t j) const;

  AdditiveGroup group_;
  std::vector<std::complex<double>> roots_;  // empty when the modulus is too large
};

/// Neumaier-compensated complex accumulator.
class ComplexAccumulator {
 public:
  void add(std::complex<double> z);
  std::complex<double> value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void step(double& sum, double& comp, double x);
  double re_ = 0, re_c_ = 0, im_ = 0, im_c_ = 0;
};

/// Sum over s in S of psi_a(s).
std::complex<double> character_sum(const AdditiveGroup& group, std::uint64_t a, std::span<const std::uint64_t> S);
std::complex<double> character_sum(const Field& field, FieldElement a, std::span<const std::uint64_t> S);

/// Sum over s in F_q of psi_a(s^2). Throws ZeroIndex for a = 0.
std::complex<double> gauss_sum_quadratic(const Field& field, FieldElement a);

}  // namespace cyclotome
