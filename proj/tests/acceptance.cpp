// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "cyclotome/arith.hpp"
#include "cyclotome/cyclotomy.hpp"
#include "cyclotome/designs.hpp"
#include "cyclotome/group.hpp"
#include "cyclotome/spectra.hpp"
#include "cyclotome/structure.hpp"
#include "cyclotome/tourney.hpp"

using namespace cyclotome;

namespace {

const std::vector<std::uint64_t> kKnown{5, 13, 29, 53, 173, 229, 293, 733};

struct Outcome {
  bool pass;
  std::string detail;
};

bool odd_square_plus_4(std::uint64_t q) {
  const std::uint64_t s = isqrt(q - 4);
  return s * s == q - 4 && s % 2 == 1;
}

Outcome prime_count() {
  SweepOptions opts;
  opts.jobs = std::max(1U, std::thread::hardware_concurrency());
  opts.keep_hits = false;
  const SweepReport rep = sweep_s2_plus_4(10'000'000, opts);
  return {rep.count == 455'927, "count=" + std::to_string(rep.count) + " seconds=" + std::to_string(rep.seconds)};
}

Outcome known_orders() {
  std::string bad;
  for (std::uint64_t q : kKnown) {
    const Field f = Field::make(q);
    const ConnectionSet conn = cyclotomic_connection_set(f);
    const NdrCertificate ndr = ndr_check(cayley_tournament(conn));
    const AdsCertificate ads =
        is_almost_difference_set(AdditiveGroup::of_field(f), conn.elements(), (q - 1) / 2, (q - 5) / 4);
    if (!(ndr.is_ndr_definitional && ndr.is_ndr_pairwise && ads.is_ads)) bad += " " + std::to_string(q);
  }
  return {bad.empty(), bad.empty() ? "8 of 8 orders NDR with (q,(q-1)/2,(q-5)/4)" : "failing:" + bad};
}

Outcome iff_scan() {
  std::size_t checked = 0, positive = 0;
  std::string bad;
  for (std::uint64_t q = 5; q <= 2000; q += 8) {
    if (!is_prime_det(q)) continue;
    const NdrCertificate c = ndr_check(cyclotomic_tournament(Field::make(q)));
    const bool ndr = c.is_ndr_definitional && c.is_ndr_pairwise;
    if (ndr != odd_square_plus_4(q) || c.is_ndr_definitional != c.is_ndr_pairwise) bad += " " + std::to_string(q);
    ++checked;
    positive += ndr;
  }
  return {bad.empty(), std::to_string(checked) + " primes, " + std::to_string(positive) + " NDR" +
                           (bad.empty() ? "" : ", disagreeing:" + bad)};
}

Outcome canonical_spectra() {
  double worst = 0.0;
  std::string bad;
  std::vector<std::uint64_t> qs = kKnown;
  qs.push_back(125);
  for (std::uint64_t q : qs) {
    const CanonicalSpectrumReport r = verify_canonical_spectrum(field_of_order(q));
    const double scaled = r.max_error / std::sqrt(static_cast<double>(q));
    worst = std::max(worst, scaled);
    const bool mult = std::all_of(r.multiplicities.begin(), r.multiplicities.end(),
                                  [&](std::uint64_t m) { return m == (q - 1) / 4; });
    if (!r.matches || !mult || r.unassigned != 0 || !(scaled < 1e-9)) bad += " " + std::to_string(q);
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max error/sqrt(q)=%.3e", worst);
  return {bad.empty(), std::string(buf) + (bad.empty() ? "" : " failing:" + bad)};
}

Outcome printed_examples() {
  auto check = [](std::uint64_t q, const std::vector<std::uint64_t>& D, const std::vector<std::uint64_t>& sd) {
    const Field f = Field::make(q);
    const AdditiveGroup g = AdditiveGroup::of_field(f);
    const auto conn = cyclotomic_connection_set(f);
    const auto spec = difference_spectrum(g, conn.elements());
    return conn.elements() == D && spec.sd == sd && classify_sd(g, spec).cls == SdClass::c1_nonsquares;
  };
  const bool a = check(13, {1, 2, 3, 5, 6, 9}, {2, 5, 6, 7, 8, 11});
  const bool b = check(29, {1, 2, 3, 7, 11, 14, 16, 17, 19, 20, 21, 23, 24, 25},
                       {2, 3, 8, 10, 11, 12, 14, 15, 17, 18, 19, 21, 26, 27});
  return {a && b, std::string("q=13 ") + (a ? "match" : "mismatch") + ", q=29 " + (b ? "match" : "mismatch")};
}

Outcome character_identity() {
  double worst = 0.0;
  for (std::uint64_t q : {13ULL, 29ULL, 53ULL}) {
    const Field f = Field::make(q);
    const AdditiveGroup g = AdditiveGroup::of_field(f);
    worst = std::max(worst, verify_character_identity(g, difference_spectrum(g, cyclotomic_connection_set(f).elements())));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max discrepancy=%.3e", worst);
  return {worst < 1e-9, buf};
}

Outcome gauss_law() {
  double worst = 0.0;
  for (std::uint64_t q : {5ULL, 13ULL, 29ULL, 53ULL}) {
    const Field f = Field::make(q);
    const auto squares = CyclotomicTable::build(f, 2);
    for (std::uint64_t a = 1; a < q; ++a) {
      const double sign = squares.class_of({a}) == 0 ? 1.0 : -1.0;
      worst = std::max(worst, std::abs(gauss_sum_quadratic(f, {a}) - sign * std::sqrt(static_cast<double>(q))));
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max deviation=%.3e", worst);
  return {worst < 1e-9, buf};
}

Outcome ndr9_chain() {
  const SzekeresResult r = szekeres_ndr9();
  const bool ok = r.field_intersection == std::vector<std::uint64_t>{5, 6, 7, 17} &&
                  r.transported == std::vector<std::uint64_t>{3, 5, 7, 8} &&
                  r.image == std::vector<std::uint64_t>{1, 2, 3, 5} && r.multiplier == 4 && r.transported_ads.is_ads &&
                  r.image_ads.is_ads && r.transported_ads.lambda == 1 && r.transported_ads.k == 4 &&
                  r.isomorphism_certified;
  return {ok, "multiplier=" + std::to_string(r.multiplier) + (r.isomorphism_certified ? " certified" : " uncertified")};
}

Outcome automorphisms() {
  std::string detail;
  bool ok = true;
  for (std::uint64_t p : {5ULL, 13ULL, 29ULL}) {
    const Field f = Field::make(p);
    const Tournament t = cyclotomic_tournament(f);
    const AutReport aut = enumerate_automorphisms(t);
    const auto quartic = CyclotomicTable::build(f, 4).members(0);
    std::set<Permutation> expected;
    for (std::uint64_t a : quartic) {
      for (std::uint64_t b = 0; b < p; ++b) expected.insert(AffineMap{{a}, {b}}.to_permutation(f));
    }
    const bool same = std::set<Permutation>(aut.elements.begin(), aut.elements.end()) == expected;
    const std::size_t orbits = arc_orbits(t, aut).size();
    ok = ok && aut.order == p * (p - 1) / 4 && same && orbits == 2;
    detail += (detail.empty() ? "" : ", ") + std::string("p=") + std::to_string(p) + " |Aut|=" +
              std::to_string(aut.order) + " orbits=" + std::to_string(orbits);
  }
  return {ok, detail};
}

Outcome prime_power_uniqueness() {
  const auto hits = prime_power_scan(100'000);
  std::string list;
  for (const auto& h : hits) list += (list.empty() ? "" : ",") + std::to_string(h.q);
  return {hits.size() == 1 && hits[0].q == 125, "[" + list + "]"};
}

Outcome extremality() {
  const ExtremalityReport r = regular_tournament_extremality(7);
  const bool ok = r.min_c4_exactly_ct && r.max_c5_exactly_ct && r.min_c4 == r.ct_c4 && r.max_c5 == r.ct_c5;
  return {ok, std::to_string(r.labeled_regular_count) + " labeled, min c4=" + std::to_string(r.min_c4) + " (" +
                  std::to_string(r.min_c4_attainers) + "), max c5=" + std::to_string(r.max_c5) + " (" +
                  std::to_string(r.max_c5_attainers) + "), Paley copies=" + std::to_string(r.ct_isomorph_count)};
}

Outcome eigenvector_residuals() {
  double worst = 0.0;
  for (std::uint64_t q : {13ULL, 29ULL, 53ULL}) {
    const ConnectionSet conn = cyclotomic_connection_set(Field::make(q));
    const Tournament t = cayley_tournament(conn);
    for (std::uint64_t a = 0; a < q; ++a) worst = std::max(worst, eigenvector_check(t, conn, a));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max residual=%.3e", worst);
  return {worst < 1e-9, buf};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"prime count s^2+4 for s <= 10^7", prime_count},
      {"eight known orders are NDR and ADS", known_orders},
      {"NDR iff q-4 odd square, primes q = 5 mod 8 up to 2000", iff_scan},
      {"canonical spectrum", canonical_spectra},
      {"D and S_D for q = 13, 29", printed_examples},
      {"character identity", character_identity},
      {"quadratic Gauss sum sign law", gauss_law},
      {"F_19 to Z/9Z NDR_9 chain", ndr9_chain},
      {"automorphism groups and arc orbits", automorphisms},
      {"prime power s^2+4 below 10^10", prime_power_uniqueness},
      {"c4/c5 extremality at n = 7", extremality},
      {"eigenvector residuals", eigenvector_residuals},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
