#include "cyclotome/report.hpp"

namespace cyclotome {

Json to_json(const Field& f) {
  return Json{{"p", f.p()},
              {"k", f.k()},
              {"q", f.q()},
              {"modulus", f.modulus()},
              {"g", f.generator().value},
              {"ell", f.ell()},
              {"m", f.odd_part()}};
}

Json to_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

namespace {

Json histogram_json(const std::map<std::uint64_t, std::uint64_t>& h) {
  Json out = Json::object();
  for (auto [value, count] : h) out[std::to_string(value)] = count;
  return out;
}

Json witness_json(const std::optional<NdrWitness>& w) {
  if (!w) return nullptr;
  const char* kind = w->kind == NdrWitness::Kind::pair              ? "pair"
                     : w->kind == NdrWitness::Kind::out_neighborhood ? "out_neighborhood"
                                                                     : "in_neighborhood";
  return Json{{"kind", kind}, {"u", w->u}, {"v", w->v}, {"observed", w->observed}};
}

}  // namespace

Json to_json(const NdrCertificate& c) {
  std::map<std::uint64_t, std::uint64_t> hist(c.pair_histogram.begin(), c.pair_histogram.end());
  return Json{{"n", c.n},
              {"is_regular", c.is_regular},
              {"is_ndr_definitional", c.is_ndr_definitional},
              {"is_ndr_pairwise", c.is_ndr_pairwise},
              {"pair_histogram", histogram_json(hist)},
              {"definitional_reason", std::string(to_string(c.definitional_reason))},
              {"pairwise_reason", std::string(to_string(c.pairwise_reason))},
              {"definitional_witness", witness_json(c.definitional_witness)},
              {"pairwise_witness", witness_json(c.pairwise_witness)}};
}

Json to_json(const DifferenceSpectrum& s) {
  Json j{{"n", s.n}, {"D", s.set}, {"values", s.values}};
  j["lambda"] = s.lambda ? Json(*s.lambda) : Json(nullptr);
  j["S_D"] = s.sd;
  std::map<std::uint64_t, std::uint64_t> hist;
  for (std::uint64_t a = 1; a < s.n; ++a) ++hist[s.diff[a]];
  j["value_counts"] = histogram_json(hist);
  return j;
}

Json to_json(const AdsCertificate& c) {
  return Json{{"is_ads", c.is_ads},
              {"params", {c.n, c.k, c.lambda}},
              {"split", {c.sd_size, c.complement_size}},
              {"classification", std::string(to_string(c.classification))}};
}

Json to_json(const CanonicalSpectrumReport& r) {
  Json closed = Json::array();
  for (const auto& z : r.closed_form) closed.push_back(to_json(z));
  return Json{{"q", r.q},
              {"s", r.s ? Json(*r.s) : Json(nullptr)},
              {"closed_form", closed},
              {"multiplicities", r.multiplicities},
              {"unassigned", r.unassigned},
              {"max_error", r.max_error},
              {"matches", r.matches}};
}

Json to_json(const QuasiRandomCertificate& c) {
  return Json{{"lambda_second", c.lambda_second}, {"lower_bound", c.lower_bound}, {"ratio", c.ratio}};
}

Json to_json(const ModulusProfile& p) {
  return Json{{"S_D", std::string(to_string(p.sd_class))},
              {"modulus_on_squares", p.on_squares},
              {"modulus_on_nonsquares", p.on_nonsquares},
              {"max_spread", p.max_spread},
              {"assignment_consistent", p.assignment_consistent}};
}

Json to_json(const AutReport& r, bool with_elements) {
  Json j{{"n", r.n}, {"order", r.order}};
  if (with_elements) j["elements"] = r.elements;
  return j;
}

Json to_json(const std::vector<ArcOrbit>& orbits) {
  Json arr = Json::array();
  for (const ArcOrbit& o : orbits) {
    arr.push_back(Json{{"representative", {o.representative.first, o.representative.second}}, {"size", o.arcs.size()}});
  }
  return arr;
}

Json to_json(const CycleCensus& c) {
  Json counts = Json::object();
  for (unsigned k = 3; k < c.counts.size(); ++k) counts[std::to_string(k)] = c.counts[k];
  return Json{{"max_length", c.max_length}, {"counts", counts}, {"method", c.method}};
}

Json to_json(const ExtremalityReport& r) {
  return Json{{"n", r.n},
              {"labeled_regular_count", r.labeled_regular_count},
              {"ct_isomorph_count", r.ct_isomorph_count},
              {"ct_c4", r.ct_c4},
              {"ct_c5", r.ct_c5},
              {"min_c4", r.min_c4},
              {"min_c4_attainers", r.min_c4_attainers},
              {"min_c4_exactly_ct", r.min_c4_exactly_ct},
              {"max_c5", r.max_c5},
              {"max_c5_attainers", r.max_c5_attainers},
              {"max_c5_exactly_ct", r.max_c5_exactly_ct},
              {"c4_histogram", histogram_json(r.c4_histogram)},
              {"c5_histogram", histogram_json(r.c5_histogram)}};
}

Json to_json(const SzekeresResult& r) {
  return Json{{"field_intersection", r.field_intersection},
              {"transported", r.transported},
              {"multiplier", r.multiplier},
              {"image", r.image},
              {"transported_ads", to_json(r.transported_ads)},
              {"image_ads", to_json(r.image_ads)},
              {"vertex_map", r.vertex_map},
              {"isomorphism_certified", r.isomorphism_certified}};
}

Json to_json(const CyclotomicIsomorphism& iso) {
  return Json{{"shift", iso.shift},
              {"multiplier", iso.multiplier.value},
              {"target_set", iso.target_set},
              {"certified", iso.certified}};
}

Json sweep_summary(const SweepReport& r, bool with_timing) {
  Json j{{"N", r.bound}, {"count", r.count}};
  if (with_timing) j["seconds"] = r.seconds;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cyclotome
