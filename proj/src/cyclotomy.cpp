#include "cyclotome/cyclotomy.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "cyclotome/error.hpp"

namespace cyclotome {

std::uint64_t table_limit() {
  if (const char* env = std::getenv("CYCLOTOME_MAX_Q"); env != nullptr && *env != '\0') {
    try {
      const auto v = std::stoull(env);
      // The log table stores 32-bit entries.
      return std::min<std::uint64_t>(v, std::numeric_limits<std::uint32_t>::max());
    } catch (const std::exception&) {
      throw Error(ErrorCode::Malformed, std::string("CYCLOTOME_MAX_Q is not an integer: ") + env);
    }
  }
  return kDefaultTableLimit;
}

void require_table_size(std::uint64_t n, const char* what) {
  const std::uint64_t limit = table_limit();
  if (n > limit) {
    throw Error(ErrorCode::TooLarge, std::string(what) + ": size " + std::to_string(n) +
                                         " exceeds the table limit " + std::to_string(limit) +
                                         " (raise CYCLOTOME_MAX_Q to override)");
  }
}

CyclotomicTable CyclotomicTable::build(const Field& field, unsigned e) {
  const std::uint64_t q = field.q();
  if (e == 0 || (q - 1) % e != 0) {
    throw Error(ErrorCode::BadIndex, std::to_string(e) + " does not divide q - 1 = " + std::to_string(q - 1));
  }
  require_table_size(q, "cyclotomic classes");

  CyclotomicTable table(field, e);
  table.classes_.assign(e, {});
  for (auto& c : table.classes_) c.reserve((q - 1) / e);
  table.log_.assign(q, 0);

  FieldElement x = field.one();
  const FieldElement g = field.generator();
  for (std::uint64_t t = 0; t + 1 < q; ++t) {
    table.log_[x.value] = static_cast<std::uint32_t>(t);
    table.classes_[t % e].push_back(x.value);
    x = field.mul(x, g);
  }
  return table;
}

unsigned CyclotomicTable::class_of(FieldElement x) const {
  return static_cast<unsigned>(log(x) % e_);
}

std::uint64_t CyclotomicTable::log(FieldElement x) const {
  if (x.value == 0) throw Error(ErrorCode::ZeroIndex, "zero is in no cyclotomic class");
  if (x.value >= log_.size()) throw Error(ErrorCode::Malformed, "element outside the field");
  return log_[x.value];
}

std::vector<std::uint64_t> CyclotomicTable::union_of(unsigned first, unsigned count) const {
  std::vector<std::uint64_t> out;
  for (unsigned j = 0; j < count; ++j) {
    const auto& c = classes_[(first + j) % e_];
    out.insert(out.end(), c.begin(), c.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cyclotome
