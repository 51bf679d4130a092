#include "cyclotome/structure.hpp"

#include <algorithm>
#include <numeric>

#include "cyclotome/cyclotomy.hpp"
#include "cyclotome/error.hpp"

namespace cyclotome {

Permutation AffineMap::to_permutation(const Field& f) const {
  Permutation perm(f.q());
  for (std::uint64_t x = 0; x < f.q(); ++x) perm[x] = static_cast<std::uint32_t>(apply(f, {x}).value);
  return perm;
}

namespace {

struct VertexData {
  std::size_t n;
  std::vector<std::size_t> common;  // n x n common out-neighbour counts
  std::vector<std::vector<std::size_t>> fingerprint;  // outdegree, then sorted row of `common`
};

VertexData vertex_data(const Tournament& t) {
  const std::size_t n = t.size();
  VertexData d{n, std::vector<std::size_t>(n * n, 0), {}};
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v) d.common[u * n + v] = intersection_count(t.row(u), t.row(v));
    }
  }
  d.fingerprint.resize(n);
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<std::size_t> row;
    for (std::size_t v = 0; v < n; ++v) {
      if (v != u) row.push_back(d.common[u * n + v]);
    }
    std::sort(row.begin(), row.end());
    row.insert(row.begin(), t.outdegree(u));
    d.fingerprint[u] = std::move(row);
  }
  return d;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Tournament& a, const Tournament& b, std::size_t limit)
      : a_(a), b_(b), da_(vertex_data(a)), db_(vertex_data(b)), limit_(limit) {}

  std::vector<Permutation> run() {
    const std::size_t n = a_.size();
    if (n != b_.size()) return {};
    auto fa = da_.fingerprint, fb = db_.fingerprint;
    std::sort(fa.begin(), fa.end());
    std::sort(fb.begin(), fb.end());
    if (fa != fb) return {};

    // Rarest fingerprints first.
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::vector<std::size_t> class_size(n, 0);
    for (std::size_t u = 0; u < n; ++u) {
      class_size[u] = static_cast<std::size_t>(std::count(fa.begin(), fa.end(), da_.fingerprint[u]));
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t x, std::size_t y) { return class_size[x] < class_size[y]; });

    image_.assign(n, kUnmapped);
    used_.assign(n, false);
    extend(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  static constexpr std::uint32_t kUnmapped = static_cast<std::uint32_t>(-1);

  bool consistent(std::size_t u, std::size_t v, std::size_t depth) const {
    const std::size_t n = a_.size();
    for (std::size_t i = 0; i < depth; ++i) {
      const std::size_t w = order_[i];
      const std::size_t fw = image_[w];
      if (a_.arc(w, u) != b_.arc(fw, v)) return false;
      if (da_.common[w * n + u] != db_.common[fw * n + v]) return false;
    }
    return true;
  }

  void extend(std::size_t depth) {
    if (found_.size() >= limit_) return;
    const std::size_t n = a_.size();
    if (depth == n) {
      found_.emplace_back(image_.begin(), image_.end());
      return;
    }
    const std::size_t u = order_[depth];
    for (std::size_t v = 0; v < n; ++v) {
      if (used_[v] || da_.fingerprint[u] != db_.fingerprint[v] || !consistent(u, v, depth)) continue;
      image_[u] = static_cast<std::uint32_t>(v);
      used_[v] = true;
      extend(depth + 1);
      used_[v] = false;
      image_[u] = kUnmapped;
      if (found_.size() >= limit_) return;
    }
  }

  const Tournament& a_;
  const Tournament& b_;
  VertexData da_, db_;
  std::size_t limit_;
  std::vector<std::size_t> order_;
  std::vector<std::uint32_t> image_;
  std::vector<bool> used_;
  std::vector<Permutation> found_;
};

}  // namespace

std::vector<Permutation> find_isomorphisms(const Tournament& a, const Tournament& b, std::size_t limit) {
  return IsomorphismSearch(a, b, limit).run();
}

std::optional<Permutation> find_isomorphism(const Tournament& a, const Tournament& b) {
  auto found = find_isomorphisms(a, b, 1);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

AutReport enumerate_automorphisms(const Tournament& t, std::size_t cap) {
  if (t.size() > cap) {
    throw Error(ErrorCode::TooLarge, "automorphism search is limited to " + std::to_string(cap) + " vertices, got " +
                                         std::to_string(t.size()));
  }
  AutReport rep;
  rep.n = t.size();
  rep.elements = find_isomorphisms(t, t);
  rep.order = rep.elements.size();
  return rep;
}

bool is_automorphism(const Tournament& t, const Permutation& perm) {
  const std::size_t n = t.size();
  if (perm.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::uint32_t x : perm) {
    if (x >= n || seen[x]) return false;
    seen[x] = true;
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && t.arc(u, v) != t.arc(perm[u], perm[v])) return false;
    }
  }
  return true;
}

bool affine_is_automorphism(const Field& field, const Tournament& t, const AffineMap& map) {
  if (map.a.value == 0) throw Error(ErrorCode::ZeroIndex, "affine map needs a nonzero multiplier");
  if (t.size() != field.q()) throw Error(ErrorCode::Malformed, "tournament is not over " + field.name());
  return is_automorphism(t, map.to_permutation(field));
}

std::vector<AffineMap> affine_automorphisms(const Field& field, const Tournament& t) {
  std::vector<AffineMap> out;
  for (std::uint64_t a = 1; a < field.q(); ++a) {
    for (std::uint64_t b = 0; b < field.q(); ++b) {
      const AffineMap m{{a}, {b}};
      if (affine_is_automorphism(field, t, m)) out.push_back(m);
    }
  }
  return out;
}

std::vector<ArcOrbit> arc_orbits(const Tournament& t, const AutReport& aut) {
  const std::size_t n = t.size();
  std::vector<std::size_t> parent(n * n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  for (const Permutation& perm : aut.elements) {
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (u == v || !t.arc(u, v)) continue;
        const std::size_t x = find(u * n + v), y = find(perm[u] * n + perm[v]);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
    }
  }

  std::map<std::size_t, ArcOrbit> by_root;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v || !t.arc(u, v)) continue;
      by_root[find(u * n + v)].arcs.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
    }
  }
  std::vector<ArcOrbit> out;
  for (auto& [root, orbit] : by_root) {
    orbit.representative = *std::min_element(orbit.arcs.begin(), orbit.arcs.end());
    out.push_back(std::move(orbit));
  }
  std::sort(out.begin(), out.end(),
            [](const ArcOrbit& x, const ArcOrbit& y) { return x.representative < y.representative; });
  return out;
}

CyclotomicIsomorphism cyclotomic_isomorphism(const Field& field, unsigned i) {
  if (field.ell() != 2) throw Error(ErrorCode::WrongResidue, "quartic class isomorphisms need q = 5 (mod 8)");
  if (i >= 4) throw Error(ErrorCode::BadIndex, "class shift must be in 0..3");
  const auto table = CyclotomicTable::build(field, 4);
  const AdditiveGroup group = AdditiveGroup::of_field(field);

  CyclotomicIsomorphism iso;
  iso.shift = i;
  iso.multiplier = field.pow(field.generator(), i);
  iso.target_set = table.union_of(i, 2);
  iso.map = AffineMap{iso.multiplier, field.zero()}.to_permutation(field);

  const Tournament source = cayley_tournament(ConnectionSet::make(group, table.union_of(0, 2)));
  const Tournament target = cayley_tournament(ConnectionSet::make(group, iso.target_set));
  iso.certified = true;
  for (std::size_t u = 0; u < source.size() && iso.certified; ++u) {
    for (std::size_t v = 0; v < source.size(); ++v) {
      if (u != v && source.arc(u, v) != target.arc(iso.map[u], iso.map[v])) {
        iso.certified = false;
        break;
      }
    }
  }
  return iso;
}

namespace {

void census_dfs(const std::vector<std::uint64_t>& out, std::size_t start, std::size_t last, std::uint64_t visited,
                unsigned length, unsigned max_length, std::vector<std::uint64_t>& counts) {
  if (length >= 3 && ((out[last] >> start) & 1U)) ++counts[length];
  if (length == max_length) return;
  // Only vertices above `start` may appear after it.
  std::uint64_t next = out[last] & ~visited & ~((std::uint64_t{2} << start) - 1);
  while (next != 0) {
    const auto w = static_cast<std::size_t>(std::countr_zero(next));
    next &= next - 1;
    census_dfs(out, start, w, visited | (std::uint64_t{1} << w), length + 1, max_length, counts);
  }
}

}  // namespace

CycleCensus cycle_census(const Tournament& t, unsigned max_length) {
  const std::size_t n = t.size();
  if (n > kMaxCensusVertices) {
    throw Error(ErrorCode::TooLarge, "cycle census is limited to " + std::to_string(kMaxCensusVertices) + " vertices");
  }
  if (max_length < 3) throw Error(ErrorCode::OutOfRange, "cycle lengths start at 3");

  std::vector<std::uint64_t> out(n, 0);
  for (std::size_t u = 0; u < n; ++u) out[u] = t.row(u).empty() ? 0 : t.row(u)[0];

  CycleCensus census;
  census.max_length = max_length;
  census.counts.assign(max_length + 1, 0);
  const unsigned depth = static_cast<unsigned>(std::min<std::size_t>(max_length, n));
  for (std::size_t s = 0; s < n; ++s) census_dfs(out, s, s, std::uint64_t{1} << s, 1, depth, census.counts);
  return census;
}

namespace {

// Orients the edges of K_n in order, keeping every in- and out-degree <= (n-1)/2.
template <typename Visit>
void each_regular_tournament(std::size_t n, Visit&& visit) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  const std::size_t half = (n - 1) / 2;
  std::vector<std::size_t> outdeg(n, 0), indeg(n, 0);
  std::vector<bool> forward(edges.size(), false);

  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == edges.size()) {
      visit(Tournament::build(
          n,
          [&](std::size_t u, std::size_t v) {
            if (u < v) {
              const auto it = std::find(edges.begin(), edges.end(), std::pair{u, v});
              return static_cast<bool>(forward[static_cast<std::size_t>(it - edges.begin())]);
            }
            const auto it = std::find(edges.begin(), edges.end(), std::pair{v, u});
            return !forward[static_cast<std::size_t>(it - edges.begin())];
          },
          ""));
      return;
    }
    const auto [u, v] = edges[i];
    for (bool dir : {true, false}) {
      const std::size_t tail = dir ? u : v, head = dir ? v : u;
      if (outdeg[tail] == half || indeg[head] == half) continue;
      ++outdeg[tail];
      ++indeg[head];
      forward[i] = dir;
      self(self, i + 1);
      --outdeg[tail];
      --indeg[head];
    }
  };
  rec(rec, 0);
}

}  // namespace

ExtremalityReport regular_tournament_extremality(std::size_t n) {
  if (n != 5 && n != 7) throw Error(ErrorCode::UnsupportedN, "extremality sweeps support n = 5 or 7 only");

  const Tournament ct = cyclotomic_tournament(Field::make(n));
  const CycleCensus ct_census = cycle_census(ct, 5);

  ExtremalityReport rep;
  rep.n = n;
  rep.ct_c4 = ct_census[4];
  rep.ct_c5 = ct_census[5];

  struct Sample {
    std::uint64_t c4, c5;
    bool is_ct;
  };
  std::vector<Sample> samples;
  each_regular_tournament(n, [&](const Tournament& t) {
    const CycleCensus c = cycle_census(t, 5);
    samples.push_back({c[4], c[5], find_isomorphism(t, ct).has_value()});
  });

  rep.labeled_regular_count = samples.size();
  rep.min_c4 = samples.front().c4;
  rep.max_c5 = samples.front().c5;
  for (const Sample& s : samples) {
    rep.min_c4 = std::min(rep.min_c4, s.c4);
    rep.max_c5 = std::max(rep.max_c5, s.c5);
    ++rep.c4_histogram[s.c4];
    ++rep.c5_histogram[s.c5];
    if (s.is_ct) ++rep.ct_isomorph_count;
  }
  bool c4_exact = true, c5_exact = true;
  for (const Sample& s : samples) {
    if (s.c4 == rep.min_c4) ++rep.min_c4_attainers;
    if (s.c5 == rep.max_c5) ++rep.max_c5_attainers;
    if ((s.c4 == rep.min_c4) != s.is_ct) c4_exact = false;
    if ((s.c5 == rep.max_c5) != s.is_ct) c5_exact = false;
  }
  rep.min_c4_exactly_ct = c4_exact;
  rep.max_c5_exactly_ct = c5_exact;
  return rep;
}

}  // namespace cyclotome
