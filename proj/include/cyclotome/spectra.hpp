#pragma once

// Spectra of Cayley tournaments over abelian groups. The character vectors
// are exact eigenvectors, so lambda_a = sum_{d in D} psi_a(d); no numerical
// eigensolver is involved.

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "cyclotome/designs.hpp"
#include "cyclotome/field.hpp"
#include "cyclotome/tourney.hpp"

namespace cyclotome {

struct EigenvalueSet {
  std::vector<std::complex<double>> values;  // indexed by group element a

  std::complex<double> perron() const { return values.at(0); }
};

EigenvalueSet cayley_spectrum(const ConnectionSet& conn);

struct SpectrumTolerances {
  /// Assignment to a closed-form value is rejected beyond assign_scale * sqrt(q).
  double assign_scale = 1e-6;
  /// A canonical match needs every assignment error below match_scale * sqrt(q).
  double match_scale = 1e-9;
};

struct CanonicalSpectrumReport {
  std::uint64_t q = 0;
  std::optional<std::uint64_t> s;  // from the square gate
  /// (-1 + i r-)/2, (-1 - i r-)/2, (-1 + i r+)/2, (-1 - i r+)/2 with r(+-) = sqrt(q +- 2 sqrt q).
  std::array<std::complex<double>, 4> closed_form{};
  std::array<std::uint64_t, 4> multiplicities{};
  /// Cluster index per group element (a = 0 is the Perron value, reported as -1);
  /// -1 also marks unassigned eigenvalues.
  std::vector<int> assignment;
  std::uint64_t unassigned = 0;
  double max_error = 0.0;
  bool matches = false;
};

/// Throws WrongResidue unless q = 5 (mod 8).
CanonicalSpectrumReport verify_canonical_spectrum(const Field& field, const SpectrumTolerances& tol = {});

/// || A v - lambda_a v ||_inf for v[x] = psi_a(x), by a direct product over the bit matrix.
double eigenvector_check(const Tournament& t, const ConnectionSet& conn, std::uint64_t a);

struct ModulusProfile {
  SdClass sd_class = SdClass::not_applicable;
  double on_squares = 0.0;     // |lambda_a| for a in C_0^(2)
  double on_nonsquares = 0.0;  // |lambda_a| for a in C_1^(2)
  double max_spread = 0.0;     // largest deviation inside either class
  /// True when the observed moduli follow the assignment predicted by sd_class.
  bool assignment_consistent = false;
};

/// Throws WrongResidue unless q = 5 (mod 8), NotCanonical unless the moduli
/// form two constant clusters over the squares and the non-squares.
ModulusProfile modulus_profile(const Field& field, double tol_scale = 1e-9);

struct QuasiRandomCertificate {
  double lambda_second = 0.0;  // max |lambda_a|, a != 0
  double lower_bound = 0.0;    // sqrt(n + 1) / 2
  double ratio = 0.0;
};

QuasiRandomCertificate quasirandom_certificate(const EigenvalueSet& es);

}  // namespace cyclotome
