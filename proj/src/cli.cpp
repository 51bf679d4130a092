#include "cyclotome/cli.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "cyclotome/cyclotomy.hpp"
#include "cyclotome/report.hpp"

namespace cyclotome {

namespace {

std::string set_text(const std::vector<std::uint64_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

const char* flag(bool b) { return b ? "true" : "false"; }

std::vector<std::uint64_t> parse_set(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty()) continue;
    if (!std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw Error(ErrorCode::Malformed, "set entries must be non-negative integers: " + item);
    }
    out.push_back(std::stoull(item));
  }
  return out;
}

Json header(const std::string& command) { return Json{{"schema", kSchemaVersion}, {"command", command}}; }

struct VerifyResult {
  Json json;
  bool ndr_definitional = false;
  bool ndr_pairwise = false;
  bool ads = false;
  bool canonical = false;
  std::optional<std::uint64_t> s;
  SdClass sd = SdClass::not_applicable;
};

VerifyResult run_verify(std::uint64_t q, const SpectrumTolerances& tol) {
  if (q % 8 != 5) throw Error(ErrorCode::WrongResidue, "verify needs q = 5 (mod 8), got " + std::to_string(q));
  const Field field = field_of_order(q);
  const ConnectionSet conn = cyclotomic_connection_set(field);
  const Tournament t = cayley_tournament(conn);
  const AdditiveGroup group = conn.group();

  VerifyResult r;
  const NdrCertificate ndr = ndr_check(t);
  const AdsCertificate ads = is_almost_difference_set(group, conn.elements(), (q - 1) / 2, (q - 5) / 4);
  const DifferenceSpectrum spec = difference_spectrum(group, conn.elements());
  const CanonicalSpectrumReport canon = verify_canonical_spectrum(field, tol);
  r.s = square_gate(q);
  r.ndr_definitional = ndr.is_ndr_definitional;
  r.ndr_pairwise = ndr.is_ndr_pairwise;
  r.ads = ads.is_ads;
  r.canonical = canon.matches;
  r.sd = ads.classification;

  Json& j = r.json;
  j = header("verify");
  j["q"] = q;
  j["field"] = to_json(field);
  j["D"] = conn.elements();
  j["square_gate"] = r.s ? Json(*r.s) : Json(nullptr);
  j["ndr"] = to_json(ndr);
  j["ads"] = to_json(ads);
  j["S_D"] = spec.two_valued() ? Json(spec.sd) : Json(nullptr);
  j["spectrum"] = to_json(canon);
  j["quasirandom"] = to_json(quasirandom_certificate(cayley_spectrum(conn)));
  const bool ndr_both = r.ndr_definitional && r.ndr_pairwise;
  j["all_pass"] = ndr_both && r.ads && r.canonical;
  j["square_gate_agrees"] = r.s.has_value() == ndr_both;
  return r;
}

void add_tolerance_flags(CLI::App* cmd, SpectrumTolerances& tol) {
  cmd->add_option("--match-tol", tol.match_scale, "canonical match tolerance, scaled by sqrt(q)")
      ->capture_default_str();
  cmd->add_option("--assign-tol", tol.assign_scale, "cluster assignment rejection threshold, scaled by sqrt(q)")
      ->capture_default_str();
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclotomic tournaments: construction, NDR certification, spectra and prime sweeps", "cyclotome"};
  app.require_subcommand(1);
  std::string format = "json";

  // construct
  auto* construct = app.add_subcommand("construct", "build CT_q and write it in the text matrix format");
  std::uint64_t construct_q = 0;
  std::string construct_out;
  construct->add_option("q", construct_q, "field order (odd prime power)")->required();
  construct->add_option("--out", construct_out, "write the tournament matrix to this path ('-' for stdout)");
  construct->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  // verify
  auto* verify = app.add_subcommand("verify", "NDR, ADS, S_D and spectrum certificates for CT_q, q = 5 (mod 8)");
  std::uint64_t verify_q = 0;
  SpectrumTolerances verify_tol;
  verify->add_option("q", verify_q)->required();
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  add_tolerance_flags(verify, verify_tol);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "count primes s^2 + 4");
  std::uint64_t max_s = 0, max_q = 0, verify_upto = 0;
  unsigned jobs = 1;
  bool quiet = false, no_timing = false, prime_powers = false;
  auto* opt_s = sweep->add_option("--max-s", max_s, "largest s");
  auto* opt_q = sweep->add_option("--max-q", max_q, "largest q = s^2 + 4");
  opt_s->excludes(opt_q);
  sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  sweep->add_option("--verify-upto", verify_upto, "run verify on every hit q <= this bound");
  sweep->add_flag("--quiet", quiet, "do not stream individual hits");
  sweep->add_flag("--no-timing", no_timing, "omit wall time from the summary");
  sweep->add_flag("--prime-powers", prime_powers, "also scan for prime powers s^2 + 4 with exponent > 1");
  SpectrumTolerances sweep_tol;

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of CT_q via character sums");
  std::uint64_t spectrum_q = 0;
  bool list_eigenvalues = false;
  SpectrumTolerances spectrum_tol;
  spectrum->add_option("q", spectrum_q)->required();
  spectrum->add_flag("--eigenvalues", list_eigenvalues, "include every eigenvalue");
  add_tolerance_flags(spectrum, spectrum_tol);

  // ads
  auto* ads = app.add_subcommand("ads", "difference spectrum and almost-difference-set certificate");
  std::uint64_t ads_q = 0, cyclic_n = 0;
  std::string ads_set;
  std::optional<std::uint64_t> ads_lambda;
  ads->add_option("q", ads_q, "field order; D defaults to the CT_q connection set");
  ads->add_option("--cyclic", cyclic_n, "use Z/nZ instead of a field");
  ads->add_option("--set", ads_set, "comma-separated candidate set");
  ads->add_option("--lambda", ads_lambda, "lambda to certify (default (n-5)/4)");

  // structure
  auto* structure = app.add_subcommand("structure", "automorphisms, arc orbits, isomorphisms and cycle counts of CT_q");
  std::uint64_t structure_q = 0;
  bool want_aut = false, want_orbits = false, want_elements = false, want_extremality = false;
  unsigned cycles = 0;
  std::vector<unsigned> shifts;
  structure->add_option("q", structure_q)->required();
  structure->add_flag("--aut", want_aut, "enumerate the automorphism group");
  structure->add_flag("--orbits", want_orbits, "arc orbits under the automorphism group");
  structure->add_flag("--elements", want_elements, "list every automorphism");
  structure->add_option("--cycles", cycles, "cycle census up to this length");
  structure->add_option("--isomorphism", shifts, "certify x -> g^i x onto the shifted quartic union");
  structure->add_flag("--extremality", want_extremality, "exhaustive c4/c5 sweep over regular tournaments on q vertices");

  // ndr9
  auto* ndr9 = app.add_subcommand("ndr9", "F_19 construction of the rotational NDR_9");
  ndr9->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (*construct) {
      const Field field = field_of_order(construct_q);
      const ConnectionSet conn = cyclotomic_connection_set(field);
      const Tournament t = cayley_tournament(conn).with_label("CT_" + std::to_string(construct_q));
      if (!construct_out.empty() && construct_out != "-") {
        std::ofstream file(construct_out);
        if (!file) throw Error(ErrorCode::Malformed, "cannot write " + construct_out);
        file << t.to_text();
      }
      if (construct_out == "-") out << t.to_text();
      if (format == "text") {
        out << "CT_" << construct_q << " over " << field.name() << " g=" << field.generator().value
            << " ell=" << field.ell() << "\nD=" << set_text(conn.elements()) << "\n";
      } else {
        Json j = header("construct");
        j["q"] = construct_q;
        j["field"] = to_json(field);
        j["ell"] = field.ell();
        j["D"] = conn.elements();
        j["label"] = t.label();
        out << dump(j);
      }
      return kExitOk;
    }

    if (*verify) {
      const VerifyResult r = run_verify(verify_q, verify_tol);
      if (format == "text") {
        out << "q=" << verify_q << " s=" << (r.s ? std::to_string(*r.s) : "none")
            << " ndr_definitional=" << flag(r.ndr_definitional) << " ndr_pairwise=" << flag(r.ndr_pairwise)
            << " ads=" << flag(r.ads) << " S_D=" << to_string(r.sd) << " canonical_spectrum=" << flag(r.canonical)
            << "\n";
      } else {
        out << dump(r.json);
      }
      return kExitOk;
    }

    if (*sweep) {
      std::uint64_t bound = max_s;
      if (*opt_q) bound = max_q >= 5 ? isqrt(max_q - 4) : 0;
      if (!*opt_s && !*opt_q) throw Error(ErrorCode::Malformed, "sweep needs --max-s or --max-q");
      const SweepReport rep = sweep_s2_plus_4(bound, {jobs, !quiet || verify_upto > 0});
      if (!quiet) {
        for (const PrimeHit& h : rep.hits) out << h.s << " " << h.q << " " << h.kind_label() << "\n";
      }
      Json summary = header("sweep");
      summary.update(sweep_summary(rep, !no_timing));
      if (prime_powers) {
        Json pp = Json::array();
        for (const PrimeHit& h : prime_power_scan(bound)) {
          if (!quiet) out << h.s << " " << h.q << " " << h.kind_label() << "\n";
          pp.push_back(Json{{"s", h.s}, {"q", h.q}, {"kind", h.kind_label()}});
        }
        summary["prime_powers"] = pp;
      }
      if (verify_upto > 0) {
        Json verified = Json::array();
        bool all_ok = true;
        for (const PrimeHit& h : rep.hits) {
          if (h.q > verify_upto) break;
          const VerifyResult r = run_verify(h.q, sweep_tol);
          const bool ok = r.ndr_definitional && r.ndr_pairwise && r.ads && r.canonical;
          all_ok = all_ok && ok;
          if (!quiet) out << "verify " << h.q << " " << (ok ? "ok" : "FAIL") << "\n";
          verified.push_back(Json{{"q", h.q},
                                  {"s", h.s},
                                  {"ndr_definitional", r.ndr_definitional},
                                  {"ndr_pairwise", r.ndr_pairwise},
                                  {"ads", r.ads},
                                  {"canonical_spectrum", r.canonical}});
        }
        summary["verified"] = verified;
        summary["all_verified"] = all_ok;
      }
      out << dump(summary);
      return kExitOk;
    }

    if (*spectrum) {
      const Field field = field_of_order(spectrum_q);
      const ConnectionSet conn = cyclotomic_connection_set(field);
      const EigenvalueSet es = cayley_spectrum(conn);
      Json j = header("spectrum");
      j["q"] = spectrum_q;
      j["field"] = to_json(field);
      j["perron"] = to_json(es.perron());
      j["quasirandom"] = to_json(quasirandom_certificate(es));
      if (spectrum_q % 8 == 5) {
        const CanonicalSpectrumReport canon = verify_canonical_spectrum(field, spectrum_tol);
        j["canonical"] = to_json(canon);
        if (canon.matches) j["modulus_profile"] = to_json(modulus_profile(field, spectrum_tol.match_scale));
      }
      if (list_eigenvalues) {
        Json values = Json::array();
        for (const auto& z : es.values) values.push_back(to_json(z));
        j["eigenvalues"] = values;
      }
      out << dump(j);
      return kExitOk;
    }

    if (*ads) {
      std::optional<AdditiveGroup> group;
      std::vector<std::uint64_t> D;
      if (cyclic_n > 0) {
        if (ads_set.empty()) throw Error(ErrorCode::Malformed, "--cyclic needs --set");
        group = AdditiveGroup::cyclic(cyclic_n);
        D = parse_set(ads_set);
      } else {
        if (ads_q == 0) throw Error(ErrorCode::Malformed, "ads needs q or --cyclic n");
        const Field field = field_of_order(ads_q);
        group = AdditiveGroup::of_field(field);
        D = ads_set.empty() ? cyclotomic_connection_set(field).elements() : parse_set(ads_set);
      }
      const DifferenceSpectrum spec = difference_spectrum(*group, D);
      const std::uint64_t n = group->order();
      std::uint64_t lambda = n >= 5 ? (n - 5) / 4 : 0;
      if (ads_lambda) lambda = *ads_lambda;
      Json j = header("ads");
      j["group"] = group->name();
      j["spectrum"] = to_json(spec);
      j["certificate"] = to_json(is_almost_difference_set(*group, D, D.size(), lambda));
      if (spec.two_valued()) {
        const SdClassification cls = classify_sd(*group, spec);
        j["classification"] = std::string(to_string(cls.cls));
        j["shortcut_agrees"] = cls.shortcut_agrees;
        if (is_ads_spectrum(spec)) j["character_identity_error"] = verify_character_identity(*group, spec);
      }
      out << dump(j);
      return kExitOk;
    }

    if (*structure) {
      Json j = header("structure");
      j["q"] = structure_q;
      if (want_extremality) {
        j["extremality"] = to_json(regular_tournament_extremality(structure_q));
        out << dump(j);
        return kExitOk;
      }
      const Field field = field_of_order(structure_q);
      const Tournament t = cyclotomic_tournament(field);
      if (want_aut || want_orbits) {
        const AutReport aut = enumerate_automorphisms(t);
        j["automorphisms"] = to_json(aut, want_elements);
        if (field.k() == 1) {
          std::set<Permutation> affine;
          for (const AffineMap& m : affine_automorphisms(field, t)) affine.insert(m.to_permutation(field));
          j["automorphisms"]["affine_count"] = affine.size();
          j["automorphisms"]["all_affine"] =
              affine == std::set<Permutation>(aut.elements.begin(), aut.elements.end());
        }
        if (want_orbits) {
          const auto orbits = arc_orbits(t, aut);
          Json arr = to_json(orbits);
          if (field.ell() == 2) {
            const auto quartic = CyclotomicTable::build(field, 4);
            for (std::size_t i = 0; i < orbits.size(); ++i) {
              const auto [tail, head] = orbits[i].representative;
              arr[i]["difference_class"] = quartic.class_of(field.sub({head}, {tail}));
            }
          }
          j["arc_orbits"] = arr;
        }
      }
      if (cycles > 0) j["cycles"] = to_json(cycle_census(t, cycles));
      if (!shifts.empty()) {
        Json arr = Json::array();
        for (unsigned i : shifts) arr.push_back(to_json(cyclotomic_isomorphism(field, i)));
        j["isomorphisms"] = arr;
      }
      out << dump(j);
      return kExitOk;
    }

    if (*ndr9) {
      const SzekeresResult r = szekeres_ndr9();
      const AdditiveGroup z9 = AdditiveGroup::cyclic(9);
      const NdrCertificate ndr = ndr_check(cayley_tournament(ConnectionSet::make(z9, r.image)));
      if (format == "text") {
        out << set_text(r.field_intersection) << " in F_19 -> " << set_text(r.transported) << " in Z/9Z -> "
            << set_text(r.image) << " under x -> " << r.multiplier << "x\n"
            << "ads(9,4,1)=" << flag(r.transported_ads.is_ads && r.image_ads.is_ads)
            << " isomorphism=" << flag(r.isomorphism_certified)
            << " ndr=" << flag(ndr.is_ndr_definitional && ndr.is_ndr_pairwise) << "\n";
      } else {
        Json j = header("ndr9");
        j["chain"] = to_json(r);
        j["ndr"] = to_json(ndr);
        out << dump(j);
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_resource_guard() ? kExitGuard : kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInvalid;
}

}  // namespace cyclotome
