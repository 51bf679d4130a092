#pragma once

// Automorphisms, isomorphisms, arc orbits and cycle counts of small tournaments.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclotome/field.hpp"
#include "cyclotome/tourney.hpp"

namespace cyclotome {

using Permutation = std::vector<std::uint32_t>;
using Arc = std::pair<std::uint32_t, std::uint32_t>;  // (tail, head)

inline constexpr std::size_t kDefaultAutomorphismCap = 40;
inline constexpr std::size_t kMaxCensusVertices = 30;

/// x -> a x + b over a field.
struct AffineMap {
  FieldElement a;
  FieldElement b;

  FieldElement apply(const Field& f, FieldElement x) const { return f.add(f.mul(a, x), b); }
  /// (this o other)(x) = this(other(x)).
  AffineMap compose(const Field& f, const AffineMap& other) const {
    return {f.mul(a, other.a), f.add(f.mul(a, other.b), b)};
  }
  Permutation to_permutation(const Field& f) const;
};

struct AutReport {
  std::size_t n = 0;
  std::uint64_t order = 0;
  std::vector<Permutation> elements;  // lexicographically sorted
};

/// All bijections f with a.arc(u, v) == b.arc(f(u), f(v)), up to `limit`.
/// Vertices are matched by (outdegree, common-out-neighbour fingerprint).
std::vector<Permutation> find_isomorphisms(const Tournament& a, const Tournament& b,
                                           std::size_t limit = static_cast<std::size_t>(-1));
std::optional<Permutation> find_isomorphism(const Tournament& a, const Tournament& b);

/// Complete enumeration by backtracking. Throws TooLarge when n > cap.
AutReport enumerate_automorphisms(const Tournament& t, std::size_t cap = kDefaultAutomorphismCap);

bool is_automorphism(const Tournament& t, const Permutation& perm);

/// Throws ZeroIndex if map.a is zero.
bool affine_is_automorphism(const Field& field, const Tournament& t, const AffineMap& map);

/// Every affine map x -> ax + b (a != 0) preserving t, in (a, b) order.
std::vector<AffineMap> affine_automorphisms(const Field& field, const Tournament& t);

struct ArcOrbit {
  Arc representative;  // smallest arc in the orbit
  std::vector<Arc> arcs;
};

/// Orbits of the arc set under the listed group, ordered by representative.
std::vector<ArcOrbit> arc_orbits(const Tournament& t, const AutReport& aut);

struct CyclotomicIsomorphism {
  unsigned shift = 0;
  FieldElement multiplier;                 // g^shift
  std::vector<std::uint64_t> target_set;   // C_shift^(4) u C_(shift+1)^(4), sorted
  Permutation map;                         // x -> g^shift x
  bool certified = false;
};

/// x -> g^i x from Cay(F_q, C_0 u C_1) onto Cay(F_q, C_i u C_(i+1)), quartic classes.
/// Throws WrongResidue unless ell == 2, BadIndex unless i < 4.
CyclotomicIsomorphism cyclotomic_isomorphism(const Field& field, unsigned i);

struct CycleCensus {
  unsigned max_length = 0;
  std::vector<std::uint64_t> counts;  // counts[k] = simple directed k-cycles; k < 3 unused
  std::string method = "brute_force";

  std::uint64_t operator[](unsigned k) const { return counts.at(k); }
};

/// Canonical-start DFS: each cycle is counted once from its smallest vertex.
/// Throws TooLarge when n > kMaxCensusVertices, OutOfRange for max_length < 3.
CycleCensus cycle_census(const Tournament& t, unsigned max_length);

struct ExtremalityReport {
  std::size_t n = 0;
  std::uint64_t labeled_regular_count = 0;
  std::uint64_t ct_isomorph_count = 0;  // labeled copies of CT_n among them
  std::uint64_t ct_c4 = 0;
  std::uint64_t ct_c5 = 0;
  std::uint64_t min_c4 = 0;
  std::uint64_t min_c4_attainers = 0;
  std::uint64_t max_c5 = 0;
  std::uint64_t max_c5_attainers = 0;
  bool min_c4_exactly_ct = false;  // attainers are precisely the CT_n isomorphs
  bool max_c5_exactly_ct = false;
  std::map<std::uint64_t, std::uint64_t> c4_histogram;
  std::map<std::uint64_t, std::uint64_t> c5_histogram;
};

/// Exhaustive sweep over labeled regular tournaments. Throws UnsupportedN unless n is 5 or 7.
ExtremalityReport regular_tournament_extremality(std::size_t n);

}  // namespace cyclotome
