#pragma once

// Almost difference sets over finite abelian groups.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cyclotome/group.hpp"

namespace cyclotome {

/// diff[a] = |{(x, y) in D x D : x - y = a}| for every group element a.
struct DifferenceSpectrum {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> set;   // D, sorted
  std::vector<std::uint64_t> diff;  // indexed by a; diff[0] is |D|
  std::vector<std::uint64_t> values;  // distinct values over nonzero a, ascending
  std::optional<std::uint64_t> lambda;  // smaller value when exactly two occur
  std::vector<std::uint64_t> sd;        // {a != 0 : diff[a] == lambda}, sorted

  bool two_valued() const { return values.size() == 2; }
};

/// Throws ZeroInD when 0 is in D, Malformed for an even group order.
DifferenceSpectrum difference_spectrum(const AdditiveGroup& group, std::span<const std::uint64_t> D);

enum class SdClass { c0_squares, c1_nonsquares, other, not_applicable };

std::string_view to_string(SdClass c);

struct AdsCertificate {
  bool is_ads = false;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t lambda = 0;
  std::uint64_t sd_size = 0;          // |S_D|
  std::uint64_t complement_size = 0;  // n - 1 - |S_D|
  SdClass classification = SdClass::not_applicable;
};

/// True iff the spectrum takes values lambda, lambda + 1 with |S_D| = (n - 1) / 2.
bool is_ads_spectrum(const DifferenceSpectrum& spectrum);

/// Throws WrongSize unless |D| == k.
AdsCertificate is_almost_difference_set(const AdditiveGroup& group, std::span<const std::uint64_t> D, std::uint64_t k,
                                        std::uint64_t lambda);

struct SdClassification {
  SdClass cls = SdClass::not_applicable;
  /// Whether "1 in S_D" agrees with cls == c0_squares. Always true for
  /// not_applicable and for `other`, where the shortcut makes no claim.
  bool shortcut_agrees = true;
};

/// Compares S_D with the squares and non-squares of the field.
/// Throws NotTwoValued. Non-field groups give not_applicable.
SdClassification classify_sd(const AdditiveGroup& group, const DifferenceSpectrum& spectrum);

/// Largest discrepancy, over every nontrivial character, between
/// |sum_{d in D} psi(d)|^2 and (k - lambda - 1) - sum_{s in S_D} psi(s).
/// Throws NotAds unless the spectrum certifies an almost difference set.
double verify_character_identity(const AdditiveGroup& group, const DifferenceSpectrum& spectrum);

/// The F_19 construction of the rotational NDR_9 connection set.
struct SzekeresResult {
  std::vector<std::uint64_t> field_intersection;  // C_0^(2) & (C_0^(2) + 1) in F_19
  std::vector<std::uint64_t> transported;         // its discrete logs base 4 in Z/9Z
  std::uint64_t multiplier = 0;                   // unit u of Z/9Z with u * transported == image
  std::vector<std::uint64_t> image;               // {1, 2, 3, 5}
  AdsCertificate transported_ads;
  AdsCertificate image_ads;
  std::vector<std::uint64_t> vertex_map;  // x -> multiplier * x mod 9
  bool isomorphism_certified = false;     // arc-for-arc between the two Cayley tournaments
};

SzekeresResult szekeres_ndr9();

}  // namespace cyclotome
