#pragma once

// JSON views of the library's results. Every document the CLI prints is
// built from these and carries "schema": kSchemaVersion at the top level.

#include "json.hpp"

#include "cyclotome/arith.hpp"
#include "cyclotome/designs.hpp"
#include "cyclotome/field.hpp"
#include "cyclotome/spectra.hpp"
#include "cyclotome/structure.hpp"
#include "cyclotome/tourney.hpp"

namespace cyclotome {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::json;

Json to_json(const Field& f);
Json to_json(std::complex<double> z);
Json to_json(const NdrCertificate& c);
Json to_json(const DifferenceSpectrum& s);
Json to_json(const AdsCertificate& c);
Json to_json(const CanonicalSpectrumReport& r);
Json to_json(const QuasiRandomCertificate& c);
Json to_json(const ModulusProfile& p);
Json to_json(const AutReport& r, bool with_elements);
Json to_json(const std::vector<ArcOrbit>& orbits);
Json to_json(const CycleCensus& c);
Json to_json(const ExtremalityReport& r);
Json to_json(const SzekeresResult& r);
Json to_json(const CyclotomicIsomorphism& iso);

/// Sweep summary: {N, count, seconds}; seconds omitted when with_timing is false.
Json sweep_summary(const SweepReport& r, bool with_timing);

/// Canonical text form used for every JSON document (two-space indent, trailing newline).
std::string dump(const Json& j);

}  // namespace cyclotome
