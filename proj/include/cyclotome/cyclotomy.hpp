#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cyclotome/field.hpp"

namespace cyclotome {

/// Default ceiling on q for anything that allocates per-element tables.
inline constexpr std::uint64_t kDefaultTableLimit = 1'000'000;

/// kDefaultTableLimit, or the value of CYCLOTOME_MAX_Q when set.
std::uint64_t table_limit();

/// Throws TooLarge when n exceeds table_limit().
void require_table_size(std::uint64_t n, const char* what);

/// Partition of the nonzero field elements into C_i = g^i * C_0, where C_0 is
/// the index-e subgroup. Backed by a full discrete-log table.
class CyclotomicTable {
 public:
  /// Throws BadIndex unless e divides q - 1, TooLarge beyond table_limit().
  static CyclotomicTable build(const Field& field, unsigned e);

  const Field& field() const { return field_; }
  unsigned index() const { return e_; }

  /// Members of C_i in generation order g^i, g^(i+e), g^(i+2e), ...
  const std::vector<std::uint64_t>& members(unsigned i) const { return classes_.at(i); }

  /// Throws ZeroIndex for zero.
  unsigned class_of(FieldElement x) const;
  /// Discrete logarithm base g, in [0, q - 1).
  std::uint64_t log(FieldElement x) const;

  /// Union of C_first, ..., C_(first+count-1), indices mod e, sorted ascending.
  std::vector<std::uint64_t> union_of(unsigned first, unsigned count) const;

 private:
  CyclotomicTable(Field field, unsigned e) : field_(std::move(field)), e_(e) {}

  Field field_;
  unsigned e_;
  std::vector<std::vector<std::uint64_t>> classes_;
  std::vector<std::uint32_t> log_;
};

}  // namespace cyclotome
