#include "cyclotome/tourney.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "cyclotome/cyclotomy.hpp"

namespace cyclotome {

void Tournament::validate() const {
  for (std::size_t u = 0; u < n_; ++u) {
    if (arc(u, u)) throw Error(ErrorCode::Malformed, "loop at vertex " + std::to_string(u));
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (arc(u, v) == arc(v, u)) {
        throw Error(ErrorCode::Malformed, "vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                              " need exactly one arc between them");
      }
    }
  }
}

Tournament Tournament::from_text(std::string_view text, std::string label) {
  std::istringstream in{std::string(text)};
  std::size_t n = 0;
  if (!(in >> n)) throw Error(ErrorCode::Malformed, "tournament text must start with the vertex count");
  Tournament t(n, std::move(label));
  for (std::size_t u = 0; u < n; ++u) {
    std::string line;
    if (!(in >> line) || line.size() != n) {
      throw Error(ErrorCode::Malformed, "row " + std::to_string(u) + " must have " + std::to_string(n) + " characters");
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (line[v] == '1') {
        t.set_arc(u, v);
      } else if (line[v] != '0') {
        throw Error(ErrorCode::Malformed, "rows may only contain 0 and 1");
      }
    }
  }
  std::string trailing;
  if (in >> trailing) throw Error(ErrorCode::Malformed, "trailing data after the last row");
  t.validate();
  return t;
}

std::string Tournament::to_text() const {
  std::string out = std::to_string(n_) + "\n";
  out.reserve(out.size() + n_ * (n_ + 1));
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) out.push_back(arc(u, v) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

std::size_t Tournament::outdegree(std::size_t u) const {
  std::size_t d = 0;
  for (std::uint64_t w : row(u)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

Tournament Tournament::reversed() const {
  Tournament t(n_, label_.empty() ? label_ : label_ + "^R");
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) {
      if (u != v && !arc(u, v)) t.set_arc(u, v);
    }
  }
  return t;
}

ConnectionSet ConnectionSet::make(AdditiveGroup group, std::vector<std::uint64_t> elements) {
  const std::uint64_t n = group.order();
  require_table_size(n, "connection set");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  std::vector<bool> member(n, false);
  for (std::uint64_t d : elements) {
    if (d >= n) throw Error(ErrorCode::NotSkew, std::to_string(d) + " is not an element of " + group.name());
    if (d == 0) throw Error(ErrorCode::NotSkew, "connection set contains 0");
    member[d] = true;
  }
  for (std::uint64_t x = 1; x < n; ++x) {
    if (member[x] == member[group.neg(x)]) {
      throw Error(ErrorCode::NotSkew, "exactly one of " + std::to_string(x) + " and its negative must lie in D");
    }
  }

  ConnectionSet conn(std::move(group));
  conn.elements_ = std::move(elements);
  conn.member_ = std::move(member);
  return conn;
}

ConnectionSet cyclotomic_connection_set(const Field& field) {
  const unsigned ell = field.ell();
  const auto table = CyclotomicTable::build(field, 1U << ell);
  return ConnectionSet::make(AdditiveGroup::of_field(field), table.union_of(0, 1U << (ell - 1)));
}

Tournament cayley_tournament(const ConnectionSet& conn) {
  const AdditiveGroup& g = conn.group();
  const auto n = static_cast<std::size_t>(g.order());
  std::string label = "Cay(" + g.name() + ", {";
  for (std::size_t i = 0; i < conn.elements().size(); ++i) {
    if (i > 0) label += ",";
    label += std::to_string(conn.elements()[i]);
  }
  label += "})";
  return Tournament::build(
      n, [&](std::size_t u, std::size_t v) { return conn.contains(g.sub(v, u)); }, std::move(label));
}

Tournament cyclotomic_tournament(const Field& field) {
  return cayley_tournament(cyclotomic_connection_set(field)).with_label("CT_" + std::to_string(field.q()));
}

DegreeProfile degree_profile(const Tournament& t) {
  DegreeProfile prof;
  const std::size_t n = t.size();
  prof.outdegrees.reserve(n);
  for (std::size_t u = 0; u < n; ++u) prof.outdegrees.push_back(t.outdegree(u));
  auto all_in = [&](std::size_t lo, std::size_t hi) {
    return std::all_of(prof.outdegrees.begin(), prof.outdegrees.end(),
                       [&](std::size_t d) { return d >= lo && d <= hi; });
  };
  if (n % 2 == 1) {
    prof.is_regular = all_in((n - 1) / 2, (n - 1) / 2);
  } else if (n > 0) {
    prof.is_near_regular = all_in(n / 2 - 1, n / 2);
  }
  return prof;
}

std::size_t common_out_neighbors(const Tournament& t, std::size_t u, std::size_t v) {
  if (u == v) throw Error(ErrorCode::SameVertex, "common out-neighbours need two distinct vertices");
  if (u >= t.size() || v >= t.size()) throw Error(ErrorCode::OutOfRange, "vertex out of range");
  return intersection_count(t.row(u), t.row(v));
}

PairProfile pair_profile(const Tournament& t) {
  PairProfile prof;
  const std::size_t n = t.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const std::size_t c = intersection_count(t.row(u), t.row(v));
      ++prof.histogram[c];
      prof.ordered_total += 2 * c;
    }
  }
  return prof;
}

std::string_view to_string(NdrReason r) {
  switch (r) {
    case NdrReason::ok: return "ok";
    case NdrReason::order_not_1_mod_4: return "order_not_1_mod_4";
    case NdrReason::not_regular: return "not_regular";
    case NdrReason::pair_count_out_of_range: return "pair_count_out_of_range";
    case NdrReason::neighborhood_not_near_regular: return "neighborhood_not_near_regular";
  }
  return "unknown";
}

namespace {

// In-neighbourhood rows, i.e. the transpose of the adjacency matrix.
std::vector<std::uint64_t> in_rows(const Tournament& t) {
  const std::size_t n = t.size(), w = t.words_per_row();
  std::vector<std::uint64_t> cols(n * w, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (t.arc(u, v)) cols[v * w + u / 64] |= std::uint64_t{1} << (u % 64);
    }
  }
  return cols;
}

template <typename Fn>
void for_each_bit(std::span<const std::uint64_t> row, Fn&& fn) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    std::uint64_t word = row[i];
    while (word != 0) {
      fn(i * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
}

// Every vertex of the induced subtournament on `subset` has out-degree m/2 or
// m/2 - 1 (m = |subset|, even). Returns the first violating vertex.
std::optional<std::pair<std::size_t, std::size_t>> first_not_near_regular(const Tournament& t,
                                                                          std::span<const std::uint64_t> subset) {
  std::size_t m = 0;
  for (std::uint64_t w : subset) m += static_cast<std::size_t>(std::popcount(w));
  std::optional<std::pair<std::size_t, std::size_t>> bad;
  if (m % 2 != 0) {
    bad = std::pair<std::size_t, std::size_t>{t.size(), m};
    return bad;
  }
  for_each_bit(subset, [&](std::size_t w) {
    if (bad) return;
    const std::size_t d = intersection_count(t.row(w), subset);
    if (d + 1 != m / 2 && d != m / 2) bad = std::pair{w, d};
  });
  return bad;
}

}  // namespace

NdrCertificate ndr_check(const Tournament& t) {
  NdrCertificate cert;
  const std::size_t n = t.size();
  cert.n = n;
  cert.is_regular = degree_profile(t).is_regular;
  cert.pair_histogram = pair_profile(t).histogram;

  if (n % 4 != 1) {
    cert.definitional_reason = cert.pairwise_reason = NdrReason::order_not_1_mod_4;
    return cert;
  }
  if (!cert.is_regular) {
    cert.definitional_reason = cert.pairwise_reason = NdrReason::not_regular;
    return cert;
  }

  // Pairwise route.
  const std::size_t hi = (n - 1) / 4, lo = hi - 1;
  cert.is_ndr_pairwise = true;
  for (std::size_t u = 0; u < n && cert.is_ndr_pairwise; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const std::size_t c = intersection_count(t.row(u), t.row(v));
      if (c != lo && c != hi) {
        cert.is_ndr_pairwise = false;
        cert.pairwise_reason = NdrReason::pair_count_out_of_range;
        cert.pairwise_witness = NdrWitness{NdrWitness::Kind::pair, u, v, c};
        break;
      }
    }
  }

  // Definitional route: induced out- and in-neighbourhoods.
  const std::vector<std::uint64_t> cols = in_rows(t);
  const std::size_t w = t.words_per_row();
  cert.is_ndr_definitional = true;
  for (std::size_t v = 0; v < n; ++v) {
    if (auto bad = first_not_near_regular(t, t.row(v))) {
      cert.is_ndr_definitional = false;
      cert.definitional_witness = NdrWitness{NdrWitness::Kind::out_neighborhood, v, bad->first, bad->second};
      break;
    }
    if (auto bad = first_not_near_regular(t, std::span<const std::uint64_t>(cols.data() + v * w, w))) {
      cert.is_ndr_definitional = false;
      cert.definitional_witness = NdrWitness{NdrWitness::Kind::in_neighborhood, v, bad->first, bad->second};
      break;
    }
  }
  if (!cert.is_ndr_definitional) cert.definitional_reason = NdrReason::neighborhood_not_near_regular;
  return cert;
}

}  // namespace cyclotome
