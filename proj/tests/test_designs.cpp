#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "cyclotome/cyclotomy.hpp"
#include "cyclotome/designs.hpp"
#include "cyclotome/error.hpp"
#include "cyclotome/tourney.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cyclotome;

namespace {

std::vector<std::uint64_t> primes_5_mod_8(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  const auto is_p = oracle::sieve(limit);
  for (std::uint64_t q = 5; q <= limit; q += 8) {
    if (is_p[q]) out.push_back(q);
  }
  return out;
}

bool odd_square_plus_4(std::uint64_t q) {
  for (std::uint64_t s = 1; s * s + 4 <= q; s += 2) {
    if (s * s + 4 == q) return true;
  }
  return false;
}

std::vector<std::uint64_t> nonsquares(std::uint64_t p) {
  const auto sq = oracle::squares_mod(p);
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 1; x < p; ++x) {
    if (!sq.count(x)) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("difference spectrum of {1,2,3,5} in Z/9Z") {
  const auto spec = difference_spectrum(AdditiveGroup::cyclic(9), std::vector<std::uint64_t>{1, 2, 3, 5});
  CHECK(spec.diff == std::vector<std::uint64_t>{4, 2, 2, 1, 1, 1, 1, 2, 2});
  CHECK(spec.values == std::vector<std::uint64_t>{1, 2});
  CHECK(spec.lambda == 1U);
  CHECK(spec.sd == std::vector<std::uint64_t>{3, 4, 5, 6});
  CHECK(is_ads_spectrum(spec));
  const auto cert = is_almost_difference_set(AdditiveGroup::cyclic(9), std::vector<std::uint64_t>{1, 2, 3, 5}, 4, 1);
  CHECK(cert.is_ads);
  CHECK(cert.sd_size == 4);
  CHECK(cert.complement_size == 4);
  CHECK(cert.classification == SdClass::not_applicable);
}

TEST_CASE("printed data for q = 13 and q = 29") {
  const Field f13 = Field::make(13);
  const auto D13 = cyclotomic_connection_set(f13).elements();
  CHECK(D13 == std::vector<std::uint64_t>{1, 2, 3, 5, 6, 9});
  const auto s13 = difference_spectrum(AdditiveGroup::of_field(f13), D13);
  CHECK(s13.lambda == 2U);
  CHECK(s13.sd == std::vector<std::uint64_t>{2, 5, 6, 7, 8, 11});
  CHECK(s13.sd == nonsquares(13));

  const Field f29 = Field::make(29);
  const auto D29 = cyclotomic_connection_set(f29).elements();
  CHECK(D29 == std::vector<std::uint64_t>{1, 2, 3, 7, 11, 14, 16, 17, 19, 20, 21, 23, 24, 25});
  const auto s29 = difference_spectrum(AdditiveGroup::of_field(f29), D29);
  CHECK(s29.lambda == 6U);
  CHECK(s29.sd == std::vector<std::uint64_t>{2, 3, 8, 10, 11, 12, 14, 15, 17, 18, 19, 21, 26, 27});
  CHECK(s29.sd == nonsquares(29));
  CHECK(is_almost_difference_set(AdditiveGroup::of_field(f29), D29, 14, 6).is_ads);
}

TEST_CASE("is_almost_difference_set negative cases") {
  const AdditiveGroup g = AdditiveGroup::of_field(Field::make(13));
  const std::vector<std::uint64_t> D{1, 2, 3, 4, 5, 6};
  CHECK_FALSE(is_almost_difference_set(g, D, 6, 2).is_ads);
  const std::vector<std::uint64_t> ct{1, 2, 3, 5, 6, 9};
  CHECK_FALSE(is_almost_difference_set(g, ct, 6, 1).is_ads);
  try {
    is_almost_difference_set(g, ct, 5, 2);
    FAIL("size mismatch accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WrongSize);
  }
  try {
    difference_spectrum(g, std::vector<std::uint64_t>{0, 1});
    FAIL("zero accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroInD);
  }
}

TEST_CASE("classify_sd and the 1-in-S_D shortcut") {
  for (std::uint64_t q : {13ULL, 29ULL, 53ULL, 173ULL, 125ULL}) {
    const Field f = field_of_order(q);
    const AdditiveGroup g = AdditiveGroup::of_field(f);
    const auto spec = difference_spectrum(g, cyclotomic_connection_set(f).elements());
    const auto cls = classify_sd(g, spec);
    CHECK(cls.cls == SdClass::c1_nonsquares);
    CHECK(cls.shortcut_agrees);
    CHECK_FALSE(std::binary_search(spec.sd.begin(), spec.sd.end(), 1));
  }
  const Field f37 = Field::make(37);
  const AdditiveGroup g37 = AdditiveGroup::of_field(f37);
  const auto spec37 = difference_spectrum(g37, cyclotomic_connection_set(f37).elements());
  CHECK_FALSE(is_ads_spectrum(spec37));
  const auto spec = difference_spectrum(g37, std::vector<std::uint64_t>{1, 2});
  if (!spec.two_valued()) {
    try {
      classify_sd(g37, spec);
      FAIL("three-valued spectrum classified");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotTwoValued);
    }
  }
}

TEST_CASE("character identity holds for the cyclotomic sets") {
  for (std::uint64_t q : {13ULL, 29ULL, 53ULL, 125ULL}) {
    const Field f = field_of_order(q);
    const AdditiveGroup g = AdditiveGroup::of_field(f);
    const auto spec = difference_spectrum(g, cyclotomic_connection_set(f).elements());
    CHECK(verify_character_identity(g, spec) < 1e-9);
  }
  const AdditiveGroup z9 = AdditiveGroup::cyclic(9);
  CHECK(verify_character_identity(z9, difference_spectrum(z9, std::vector<std::uint64_t>{1, 2, 3, 5})) < 1e-9);
  try {
    verify_character_identity(z9, difference_spectrum(z9, std::vector<std::uint64_t>{1, 2, 3, 4}));
    FAIL("non-ADS accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAds);
  }
}

TEST_CASE("F_19 to Z/9Z chain") {
  const auto r = szekeres_ndr9();
  CHECK(r.field_intersection == std::vector<std::uint64_t>{5, 6, 7, 17});
  CHECK(r.transported == std::vector<std::uint64_t>{3, 5, 7, 8});
  CHECK(r.multiplier == 4);
  CHECK(r.image == std::vector<std::uint64_t>{1, 2, 3, 5});
  CHECK(r.transported_ads.is_ads);
  CHECK(r.transported_ads.lambda == 1);
  CHECK(r.image_ads.is_ads);
  CHECK(r.isomorphism_certified);
  CHECK(r.vertex_map == std::vector<std::uint64_t>{0, 4, 8, 3, 7, 2, 6, 1, 5});

  // Independent oracle: squares of F_19 meeting their translate by 1.
  const auto sq = oracle::squares_mod(19);
  std::vector<std::uint64_t> inter;
  for (auto x : sq) {
    if (x != 1 && sq.count(x - 1)) inter.push_back(x);
  }
  CHECK(inter == r.field_intersection);
  const auto d1 = oracle::differences_mod({3, 5, 7, 8}, 9);
  std::set<std::uint64_t> vals;
  for (auto [a, c] : d1) vals.insert(c);
  CHECK(vals == std::set<std::uint64_t>{1, 2});
}

TEST_CASE("quartic class pairs are ADS exactly when q - 4 is an odd square") {
  const auto qs = primes_5_mod_8(2000);
  REQUIRE(qs.size() > 30);
  std::size_t positives = 0;
  for (std::uint64_t q : qs) {
    const Field f = Field::make(q);
    const AdditiveGroup g = AdditiveGroup::of_field(f);
    const auto table = CyclotomicTable::build(f, 4);
    const bool expect = odd_square_plus_4(q);
    positives += expect;
    for (unsigned i = 0; i < 4; ++i) {
      std::vector<std::uint64_t> D = table.members(i);
      const auto& next = table.members((i + 1) % 4);
      D.insert(D.end(), next.begin(), next.end());
      std::sort(D.begin(), D.end());
      const auto cert = is_almost_difference_set(g, D, (q - 1) / 2, (q - 5) / 4);
      INFO("q = " << q << ", i = " << i);
      REQUIRE(cert.is_ads == expect);
    }
    const auto t = ndr_check(cyclotomic_tournament(f));
    REQUIRE(t.is_ndr_pairwise == expect);
    REQUIRE(t.is_ndr_definitional == expect);
  }
  CHECK(positives == 11);  // 5 13 29 53 173 229 293 733 1093 1229 1373
}

TEST_CASE("difference spectrum properties on random subsets") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint64_t n = 3 + 2 * (rng() % 60);
    std::vector<std::uint64_t> D;
    for (std::uint64_t x = 1; x < n; ++x) {
      if (rng() % 3 == 0) D.push_back(x);
    }
    const AdditiveGroup g = AdditiveGroup::cyclic(n);
    const auto spec = difference_spectrum(g, D);
    const auto oracle_diff = oracle::differences_mod(D, n);
    std::uint64_t total = 0;
    for (std::uint64_t a = 1; a < n; ++a) {
      REQUIRE(spec.diff[a] == oracle_diff.at(a));
      REQUIRE(spec.diff[a] == spec.diff[n - a]);
      total += spec.diff[a];
    }
    REQUIRE(total == D.size() * (D.size() - (D.empty() ? 0 : 1)));
    REQUIRE(spec.diff[0] == D.size());

    // Multiplying by a unit permutes the spectrum.
    for (std::uint64_t u = 2; u < n; ++u) {
      if (std::gcd(u, n) != 1) continue;
      std::vector<std::uint64_t> uD;
      for (auto d : D) uD.push_back(d * u % n);
      const auto s2 = difference_spectrum(g, uD);
      for (std::uint64_t a = 1; a < n; ++a) REQUIRE(s2.diff[a * u % n] == spec.diff[a]);
      REQUIRE(is_ads_spectrum(s2) == is_ads_spectrum(spec));
      break;
    }
  }
}

TEST_CASE("field multipliers preserve the ADS property") {
  for (std::uint64_t q : {13ULL, 29ULL, 125ULL}) {
    const Field f = field_of_order(q);
    const AdditiveGroup g = AdditiveGroup::of_field(f);
    const auto D = cyclotomic_connection_set(f).elements();
    for (std::uint64_t a = 1; a < q; a += 3) {
      std::vector<std::uint64_t> aD;
      for (auto d : D) aD.push_back(f.mul({a}, {d}).value);
      std::sort(aD.begin(), aD.end());
      REQUIRE(is_almost_difference_set(g, aD, (q - 1) / 2, (q - 5) / 4).is_ads);
    }
  }
}
