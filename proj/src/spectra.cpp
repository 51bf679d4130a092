#include "cyclotome/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "cyclotome/arith.hpp"
#include "cyclotome/cyclotomy.hpp"
#include "cyclotome/error.hpp"

namespace cyclotome {

EigenvalueSet cayley_spectrum(const ConnectionSet& conn) {
  const CharacterTable chars(conn.group());
  EigenvalueSet es;
  const std::uint64_t n = conn.group().order();
  es.values.reserve(n);
  es.values.emplace_back(static_cast<double>(conn.elements().size()), 0.0);
  for (std::uint64_t a = 1; a < n; ++a) es.values.push_back(chars.sum(a, conn.elements()));
  return es;
}

CanonicalSpectrumReport verify_canonical_spectrum(const Field& field, const SpectrumTolerances& tol) {
  const std::uint64_t q = field.q();
  if (q % 8 != 5) throw Error(ErrorCode::WrongResidue, "canonical spectrum needs q = 5 (mod 8), got " + std::to_string(q));

  CanonicalSpectrumReport rep;
  rep.q = q;
  rep.s = square_gate(q);
  const double qd = static_cast<double>(q);
  const double root_q = std::sqrt(qd);
  const double r_minus = std::sqrt(qd - 2.0 * root_q);
  const double r_plus = std::sqrt(qd + 2.0 * root_q);
  rep.closed_form = {std::complex<double>{-0.5, r_minus / 2.0}, {-0.5, -r_minus / 2.0}, {-0.5, r_plus / 2.0},
                     {-0.5, -r_plus / 2.0}};

  const EigenvalueSet es = cayley_spectrum(cyclotomic_connection_set(field));
  const double reject = tol.assign_scale * root_q;
  rep.assignment.assign(q, -1);
  for (std::uint64_t a = 1; a < q; ++a) {
    int best = 0;
    double best_err = std::abs(es.values[a] - rep.closed_form[0]);
    for (int c = 1; c < 4; ++c) {
      const double err = std::abs(es.values[a] - rep.closed_form[c]);
      if (err < best_err) {
        best = c;
        best_err = err;
      }
    }
    rep.max_error = std::max(rep.max_error, best_err);
    if (best_err <= reject) {
      rep.assignment[a] = best;
      ++rep.multiplicities[best];
    } else {
      ++rep.unassigned;
    }
  }

  const std::uint64_t each = (q - 1) / 4;
  rep.matches = rep.unassigned == 0 && rep.max_error < tol.match_scale * root_q &&
                std::all_of(rep.multiplicities.begin(), rep.multiplicities.end(),
                            [&](std::uint64_t m) { return m == each; });
  return rep;
}

double eigenvector_check(const Tournament& t, const ConnectionSet& conn, std::uint64_t a) {
  const CharacterTable chars(conn.group());
  const std::size_t n = t.size();
  std::vector<std::complex<double>> v(n);
  for (std::size_t x = 0; x < n; ++x) v[x] = chars.psi(a, x);
  const std::complex<double> lambda = chars.sum(a, conn.elements());

  double residual = 0.0;
  for (std::size_t u = 0; u < n; ++u) {
    ComplexAccumulator acc;
    for (std::size_t w = 0; w < n; ++w) {
      if (t.arc(u, w)) acc.add(v[w]);
    }
    residual = std::max(residual, std::abs(acc.value() - lambda * v[u]));
  }
  return residual;
}

ModulusProfile modulus_profile(const Field& field, double tol_scale) {
  const std::uint64_t q = field.q();
  if (q % 8 != 5) throw Error(ErrorCode::WrongResidue, "modulus profile needs q = 5 (mod 8)");
  const double root_q = std::sqrt(static_cast<double>(q));
  const double tol = tol_scale * root_q;

  const ConnectionSet conn = cyclotomic_connection_set(field);
  const EigenvalueSet es = cayley_spectrum(conn);
  const auto squares = CyclotomicTable::build(field, 2);

  ModulusProfile prof;
  std::array<double, 2> lo{1e300, 1e300}, hi{0.0, 0.0};
  for (std::uint64_t a = 1; a < q; ++a) {
    const unsigned c = squares.class_of({a});
    const double m = std::abs(es.values[a]);
    lo[c] = std::min(lo[c], m);
    hi[c] = std::max(hi[c], m);
  }
  prof.max_spread = std::max(hi[0] - lo[0], hi[1] - lo[1]);
  if (prof.max_spread > tol) {
    throw Error(ErrorCode::NotCanonical, "eigenvalue moduli are not constant on the square classes of " + field.name());
  }
  prof.on_squares = (lo[0] + hi[0]) / 2.0;
  prof.on_nonsquares = (lo[1] + hi[1]) / 2.0;

  const double small = (root_q - 1.0) / 2.0, large = (root_q + 1.0) / 2.0;
  const DifferenceSpectrum spec = difference_spectrum(AdditiveGroup::of_field(field), conn.elements());
  if (spec.two_valued()) prof.sd_class = classify_sd(AdditiveGroup::of_field(field), spec).cls;
  auto near = [&](double x, double y) { return std::abs(x - y) <= tol; };
  if (prof.sd_class == SdClass::c0_squares) {
    prof.assignment_consistent = near(prof.on_squares, small) && near(prof.on_nonsquares, large);
  } else if (prof.sd_class == SdClass::c1_nonsquares) {
    prof.assignment_consistent = near(prof.on_squares, large) && near(prof.on_nonsquares, small);
  }
  return prof;
}

QuasiRandomCertificate quasirandom_certificate(const EigenvalueSet& es) {
  QuasiRandomCertificate cert;
  for (std::size_t a = 1; a < es.values.size(); ++a) cert.lambda_second = std::max(cert.lambda_second, std::abs(es.values[a]));
  cert.lower_bound = std::sqrt(static_cast<double>(es.values.size()) + 1.0) / 2.0;
  cert.ratio = cert.lambda_second / cert.lower_bound;
  return cert;
}

}  // namespace cyclotome
