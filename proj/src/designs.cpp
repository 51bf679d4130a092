#include "cyclotome/designs.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cyclotome/cyclotomy.hpp"
#include "cyclotome/error.hpp"
#include "cyclotome/tourney.hpp"

namespace cyclotome {

DifferenceSpectrum difference_spectrum(const AdditiveGroup& group, std::span<const std::uint64_t> D) {
  const std::uint64_t n = group.order();
  if (n % 2 == 0) throw Error(ErrorCode::Malformed, "difference spectra need an odd group order");
  require_table_size(n, "difference spectrum");

  DifferenceSpectrum spec;
  spec.n = n;
  spec.set.assign(D.begin(), D.end());
  std::sort(spec.set.begin(), spec.set.end());
  spec.set.erase(std::unique(spec.set.begin(), spec.set.end()), spec.set.end());
  for (std::uint64_t d : spec.set) {
    if (d == 0) throw Error(ErrorCode::ZeroInD, "0 may not lie in D");
    if (d >= n) throw Error(ErrorCode::Malformed, std::to_string(d) + " is not an element of " + group.name());
  }

  spec.diff.assign(n, 0);
  for (std::uint64_t x : spec.set) {
    for (std::uint64_t y : spec.set) ++spec.diff[group.sub(x, y)];
  }

  for (std::uint64_t a = 1; a < n; ++a) spec.values.push_back(spec.diff[a]);
  std::sort(spec.values.begin(), spec.values.end());
  spec.values.erase(std::unique(spec.values.begin(), spec.values.end()), spec.values.end());

  if (spec.two_valued()) {
    spec.lambda = spec.values.front();
    for (std::uint64_t a = 1; a < n; ++a) {
      if (spec.diff[a] == *spec.lambda) spec.sd.push_back(a);
    }
  }
  return spec;
}

std::string_view to_string(SdClass c) {
  switch (c) {
    case SdClass::c0_squares: return "C0_squares";
    case SdClass::c1_nonsquares: return "C1_nonsquares";
    case SdClass::other: return "other";
    case SdClass::not_applicable: return "not_applicable";
  }
  return "unknown";
}

bool is_ads_spectrum(const DifferenceSpectrum& spectrum) {
  return spectrum.two_valued() && spectrum.values[1] == spectrum.values[0] + 1 &&
         spectrum.sd.size() == (spectrum.n - 1) / 2;
}

AdsCertificate is_almost_difference_set(const AdditiveGroup& group, std::span<const std::uint64_t> D, std::uint64_t k,
                                        std::uint64_t lambda) {
  const DifferenceSpectrum spec = difference_spectrum(group, D);
  if (spec.set.size() != k || D.size() != k) {
    throw Error(ErrorCode::WrongSize, "|D| = " + std::to_string(D.size()) + " but k = " + std::to_string(k));
  }
  AdsCertificate cert;
  cert.n = spec.n;
  cert.k = k;
  cert.lambda = lambda;
  if (spec.lambda) {
    cert.sd_size = spec.sd.size();
    cert.complement_size = spec.n - 1 - spec.sd.size();
  }
  cert.is_ads = is_ads_spectrum(spec) && spec.lambda == lambda;
  if (spec.two_valued()) cert.classification = classify_sd(group, spec).cls;
  return cert;
}

SdClassification classify_sd(const AdditiveGroup& group, const DifferenceSpectrum& spectrum) {
  if (!spectrum.two_valued()) throw Error(ErrorCode::NotTwoValued, "S_D needs a two-valued difference function");
  if (!group.is_field()) return {};

  const auto table = CyclotomicTable::build(group.field(), 2);
  auto sorted = [](std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  SdClassification out;
  if (spectrum.sd == sorted(table.members(0))) {
    out.cls = SdClass::c0_squares;
  } else if (spectrum.sd == sorted(table.members(1))) {
    out.cls = SdClass::c1_nonsquares;
  } else {
    out.cls = SdClass::other;
  }
  const bool one_in_sd = std::binary_search(spectrum.sd.begin(), spectrum.sd.end(), std::uint64_t{1});
  if (out.cls == SdClass::c0_squares) out.shortcut_agrees = one_in_sd;
  if (out.cls == SdClass::c1_nonsquares) out.shortcut_agrees = !one_in_sd;
  return out;
}

double verify_character_identity(const AdditiveGroup& group, const DifferenceSpectrum& spectrum) {
  if (!is_ads_spectrum(spectrum)) throw Error(ErrorCode::NotAds, "D is not an almost difference set");
  const CharacterTable chars(group);
  const double rhs_const =
      static_cast<double>(spectrum.set.size()) - static_cast<double>(*spectrum.lambda) - 1.0;
  double worst = 0.0;
  for (std::uint64_t a = 1; a < spectrum.n; ++a) {
    const double lhs = std::norm(chars.sum(a, spectrum.set));
    const std::complex<double> rhs = rhs_const - chars.sum(a, spectrum.sd);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

SzekeresResult szekeres_ndr9() {
  const Field f19 = Field::make(19);
  const auto squares_table = CyclotomicTable::build(f19, 2);
  std::vector<std::uint64_t> squares = squares_table.members(0);
  std::sort(squares.begin(), squares.end());

  SzekeresResult out;
  for (std::uint64_t x : squares) {
    const std::uint64_t shifted = f19.sub({x}, f19.one()).value;
    if (std::binary_search(squares.begin(), squares.end(), shifted)) out.field_intersection.push_back(x);
  }

  // C_0^(2) is cyclic of order 9, generated by g^2 = 4; log_4 x = log_g x / 2.
  for (std::uint64_t x : out.field_intersection) out.transported.push_back(squares_table.log({x}) / 2);
  std::sort(out.transported.begin(), out.transported.end());

  const AdditiveGroup z9 = AdditiveGroup::cyclic(9);
  out.image = {1, 2, 3, 5};
  for (std::uint64_t u = 1; u < 9 && out.multiplier == 0; ++u) {
    if (std::gcd(u, std::uint64_t{9}) != 1) continue;
    std::vector<std::uint64_t> scaled;
    for (std::uint64_t x : out.transported) scaled.push_back(u * x % 9);
    std::sort(scaled.begin(), scaled.end());
    if (scaled == out.image) out.multiplier = u;
  }

  out.transported_ads = is_almost_difference_set(z9, out.transported, 4, 1);
  out.image_ads = is_almost_difference_set(z9, out.image, 4, 1);

  if (out.multiplier != 0) {
    for (std::uint64_t x = 0; x < 9; ++x) out.vertex_map.push_back(out.multiplier * x % 9);
    const Tournament from = cayley_tournament(ConnectionSet::make(z9, out.transported));
    const Tournament to = cayley_tournament(ConnectionSet::make(z9, out.image));
    out.isomorphism_certified = true;
    for (std::size_t u = 0; u < 9; ++u) {
      for (std::size_t v = 0; v < 9; ++v) {
        if (u != v && from.arc(u, v) != to.arc(out.vertex_map[u], out.vertex_map[v])) {
          out.isomorphism_certified = false;
        }
      }
    }
  }
  return out;
}

}  // namespace cyclotome
