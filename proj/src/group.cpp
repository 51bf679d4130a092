#include "cyclotome/group.hpp"

#include <cmath>
#include <numbers>

#include "cyclotome/arith.hpp"
#include "cyclotome/cyclotomy.hpp"
#include "cyclotome/error.hpp"

namespace cyclotome {

AdditiveGroup AdditiveGroup::of_field(Field field) {
  AdditiveGroup g;
  g.order_ = field.q();
  g.field_ = std::move(field);
  return g;
}

AdditiveGroup AdditiveGroup::cyclic(std::uint64_t n) {
  if (n < 1 || n >= kArithLimit) throw Error(ErrorCode::OutOfRange, "cyclic group order out of range");
  AdditiveGroup g;
  g.order_ = n;
  return g;
}

const Field& AdditiveGroup::field() const {
  if (!field_) throw Error(ErrorCode::Malformed, name() + " is not the additive group of a field");
  return *field_;
}

std::uint64_t AdditiveGroup::add(std::uint64_t x, std::uint64_t y) const {
  if (field_) return field_->add({x}, {y}).value;
  const std::uint64_t s = x + y;
  return s >= order_ ? s - order_ : s;
}

std::uint64_t AdditiveGroup::neg(std::uint64_t x) const {
  if (field_) return field_->neg({x}).value;
  return x == 0 ? 0 : order_ - x;
}

std::uint64_t AdditiveGroup::sub(std::uint64_t x, std::uint64_t y) const { return add(x, neg(y)); }

std::uint64_t AdditiveGroup::phase(std::uint64_t a, std::uint64_t x) const {
  if (field_) return field_->trace(field_->mul({a}, {x}));
  return mul_mod(a, x, order_);
}

std::string AdditiveGroup::name() const {
  if (field_) {
    if (field_->k() == 1) return "F_" + std::to_string(field_->p());
    return "F_" + std::to_string(field_->p()) + "^" + std::to_string(field_->k());
  }
  return "Z/" + std::to_string(order_) + "Z";
}

namespace {

std::complex<double> unit_root(std::uint64_t j, std::uint64_t r) {
  const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(j) /
                            static_cast<long double>(r);
  return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

}  // namespace

CharacterTable::CharacterTable(AdditiveGroup group) : group_(std::move(group)) {
  const std::uint64_t r = group_.phase_modulus();
  if (r <= table_limit()) {
    roots_.reserve(r);
    for (std::uint64_t j = 0; j < r; ++j) roots_.push_back(unit_root(j, r));
  }
}

std::complex<double> CharacterTable::root(std::uint64_t j) const {
  if (!roots_.empty()) return roots_[j];
  return unit_root(j, group_.phase_modulus());
}

std::complex<double> CharacterTable::psi(std::uint64_t a, std::uint64_t x) const {
  return root(group_.phase(a, x));
}

std::complex<double> CharacterTable::sum(std::uint64_t a, std::span<const std::uint64_t> S) const {
  ComplexAccumulator acc;
  for (std::uint64_t s : S) acc.add(psi(a, s));
  return acc.value();
}

void ComplexAccumulator::step(double& sum, double& comp, double x) {
  const double t = sum + x;
  if (std::abs(sum) >= std::abs(x)) {
    comp += (sum - t) + x;
  } else {
    comp += (x - t) + sum;
  }
  sum = t;
}

void ComplexAccumulator::add(std::complex<double> z) {
  step(re_, re_c_, z.real());
  step(im_, im_c_, z.imag());
}

std::complex<double> character_sum(const AdditiveGroup& group, std::uint64_t a, std::span<const std::uint64_t> S) {
  if (a == 0) return {static_cast<double>(S.size()), 0.0};
  return CharacterTable(group).sum(a, S);
}

std::complex<double> character_sum(const Field& field, FieldElement a, std::span<const std::uint64_t> S) {
  for (std::uint64_t s : S) field.element(s);
  return character_sum(AdditiveGroup::of_field(field), a.value, S);
}

std::complex<double> gauss_sum_quadratic(const Field& field, FieldElement a) {
  if (a.value == 0) throw Error(ErrorCode::ZeroIndex, "quadratic Gauss sum needs a nonzero index");
  require_table_size(field.q(), "quadratic Gauss sum");
  const CharacterTable chars(AdditiveGroup::of_field(field));
  ComplexAccumulator acc;
  for (std::uint64_t s = 0; s < field.q(); ++s) {
    const FieldElement x{s};
    acc.add(chars.psi(a.value, field.mul(x, x).value));
  }
  return acc.value();
}

}  // namespace cyclotome
