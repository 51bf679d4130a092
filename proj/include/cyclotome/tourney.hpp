#pragma once

// Tournaments as dense bit matrices, Cayley tournaments over abelian groups,
// and regularity / near-double-regularity certification.
//
// Arc convention: in Cay(G, D) there is an arc u -> v iff v - u is in D, so
// the out-neighbourhood of u is u + D.

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclotome/error.hpp"
#include "cyclotome/field.hpp"
#include "cyclotome/group.hpp"

namespace cyclotome {

class Tournament {
 public:
  /// Builds from an arc predicate; throws Malformed if the result is not a tournament.
  template <typename ArcFn>
  static Tournament build(std::size_t n, ArcFn&& arc, std::string label) {
    Tournament t(n, std::move(label));
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (u != v && arc(u, v)) t.set_arc(u, v);
      }
    }
    t.validate();
    return t;
  }

  /// Parses the text format: a line with n, then n rows of '0'/'1'.
  static Tournament from_text(std::string_view text, std::string label = "");
  std::string to_text() const;

  std::size_t size() const { return n_; }
  const std::string& label() const { return label_; }
  std::size_t words_per_row() const { return words_; }

  bool arc(std::size_t u, std::size_t v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }
  std::span<const std::uint64_t> row(std::size_t u) const {
    return {bits_.data() + u * words_, words_};
  }
  std::size_t outdegree(std::size_t u) const;

  Tournament with_label(std::string label) const {
    Tournament t = *this;
    t.label_ = std::move(label);
    return t;
  }

  /// Every arc flipped.
  Tournament reversed() const;

  friend bool operator==(const Tournament& a, const Tournament& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  Tournament(std::size_t n, std::string label)
      : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0), label_(std::move(label)) {}

  void set_arc(std::size_t u, std::size_t v) { bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64); }
  void validate() const;

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
  std::string label_;
};

/// popcount of the intersection of two packed rows.
inline std::size_t intersection_count(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

/// A skew connection set: D and -D partition the nonzero group elements.
class ConnectionSet {
 public:
  /// Throws NotSkew when (D, -D) is not a partition of G \ {0}.
  static ConnectionSet make(AdditiveGroup group, std::vector<std::uint64_t> elements);

  const AdditiveGroup& group() const { return group_; }
  /// Sorted ascending.
  const std::vector<std::uint64_t>& elements() const { return elements_; }
  bool contains(std::uint64_t x) const { return x < member_.size() && member_[x]; }

 private:
  ConnectionSet(AdditiveGroup group) : group_(std::move(group)) {}

  AdditiveGroup group_;
  std::vector<std::uint64_t> elements_;
  std::vector<bool> member_;
};

/// C_0 u g C_0 u ... u g^(2^(ell-1) - 1) C_0 with C_0 of index 2^ell.
ConnectionSet cyclotomic_connection_set(const Field& field);

Tournament cayley_tournament(const ConnectionSet& conn);
Tournament cyclotomic_tournament(const Field& field);

struct DegreeProfile {
  std::vector<std::size_t> outdegrees;
  bool is_regular = false;
  bool is_near_regular = false;
};

DegreeProfile degree_profile(const Tournament& t);

/// Throws SameVertex when u == v.
std::size_t common_out_neighbors(const Tournament& t, std::size_t u, std::size_t v);

struct PairProfile {
  /// Common out-neighbour count -> number of unordered pairs attaining it.
  std::map<std::size_t, std::size_t> histogram;
  /// Sum of |N+(u) & N+(v)| over ordered pairs u != v.
  std::uint64_t ordered_total = 0;
};

PairProfile pair_profile(const Tournament& t);

enum class NdrReason {
  ok,
  order_not_1_mod_4,
  not_regular,
  pair_count_out_of_range,
  neighborhood_not_near_regular,
};

std::string_view to_string(NdrReason r);

struct NdrWitness {
  enum class Kind { out_neighborhood, in_neighborhood, pair };
  Kind kind;
  std::size_t u;  // the vertex, or first vertex of the pair
  std::size_t v;  // offending vertex inside the neighbourhood, or second vertex of the pair
  std::size_t observed;
};

struct NdrCertificate {
  std::size_t n = 0;
  bool is_regular = false;
  bool is_ndr_definitional = false;
  bool is_ndr_pairwise = false;
  /// Common out-neighbour counts over unordered pairs: value -> number of pairs.
  std::map<std::size_t, std::size_t> pair_histogram;
  NdrReason definitional_reason = NdrReason::ok;
  NdrReason pairwise_reason = NdrReason::ok;
  std::optional<NdrWitness> definitional_witness;
  std::optional<NdrWitness> pairwise_witness;
};

/// Runs both NDR characterisations independently: induced neighbourhoods
/// near-regular, and every common out-neighbour count in {(n-5)/4, (n-1)/4}.
NdrCertificate ndr_check(const Tournament& t);

}  // namespace cyclotome
