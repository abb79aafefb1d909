#include "negcurve/classify.hpp"
#include "negcurve/effective.hpp"
#include "negcurve/parallel.hpp"
#include "negcurve/polytope.hpp"

#include <algorithm>
#include <set>

namespace negcurve {

namespace {

bool lattice_supported(const Configuration& cfg) {
  return cfg.kind != ConfigKind::VeryGeneralCubic;
}

bool has_cubic_transform(const Configuration& cfg) {
  return cfg.s > 9 && (cfg.kind == ConfigKind::HesseTorsion || cfg.kind == ConfigKind::VeryGeneralCubic);
}

NegativeClass make_negative(const Configuration& cfg, const DivisorClass& c, Origin origin) {
  return {c, classify_negative_type(c), origin, certify_class(cfg, c)};
}

std::set<DivisorClass> orbit_of(const std::vector<Permutation>& group, const DivisorClass& c) {
  std::set<DivisorClass> out;
  for (const auto& g : group) out.insert(permute_class(g, c));
  return out;
}

void sort_classes(std::vector<NegativeClass>& v) {
  std::sort(v.begin(), v.end(), [](const NegativeClass& a, const NegativeClass& b) {
    if (a.origin != b.origin) return a.origin < b.origin;
    return a.cls < b.cls;
  });
}

struct SearchState {
  const Configuration& cfg;
  std::int64_t d;
  std::vector<std::vector<int>> lines_at;  // line ids through each point
  std::vector<std::vector<int>> lines;
  std::set<DivisorClass> known;
  std::vector<DivisorClass> found;
  std::vector<bool> settled;  // found[j] already certified modulo p
  std::vector<std::size_t> orbit_sizes;
  std::size_t visited = 0;
  std::size_t moving = 0;

  std::vector<std::int64_t> k;
  std::vector<std::int64_t> line_sum;
  const ModularSections* sections = nullptr;  // prunes non-effective prefixes when set
  // inverses of the non-identity symmetries; only lexicographically largest
  // members of each orbit are visited
  std::vector<Permutation> inverses;
  std::vector<bool> below_first;  // point i lies in the orbit of point 0, so k_i <= k_0
  std::size_t group_order = 1;

  SearchState(const Configuration& c, std::int64_t degree) : cfg(c), d(degree) {
    lines = cfg.lines;
    for (const auto& p : cfg.special_pairs) lines.push_back({p[0], p[1]});
    lines_at.resize(static_cast<std::size_t>(cfg.s));
    for (std::size_t l = 0; l < lines.size(); ++l)
      for (int p : lines[l]) lines_at[p].push_back(static_cast<int>(l));
    k.assign(static_cast<std::size_t>(cfg.s), 0);
    line_sum.assign(lines.size(), 0);
    below_first.assign(static_cast<std::size_t>(cfg.s), false);
  }

  void set_group(const std::vector<Permutation>& group) {
    group_order = group.size();
    below_first.assign(static_cast<std::size_t>(cfg.s), false);
    for (const auto& g : group) {
      below_first[g[0]] = true;
      if (g == group.front()) continue;
      Permutation inv(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) inv[g[i]] = static_cast<int>(i);
      inverses.push_back(std::move(inv));
    }
  }

  // False when some symmetry maps the first i multiplicities to a larger prefix.
  bool canonical_prefix(int i) const {
    for (const auto& inv : inverses)
      for (int t = 0; t < i && inv[t] < i; ++t) {
        if (k[inv[t]] > k[t]) return false;
        if (k[inv[t]] < k[t]) break;
      }
    return true;
  }

  std::size_t orbit_size() const {
    std::size_t stab = 1;
    for (const auto& inv : inverses) {
      bool fixed = true;
      for (int t = 0; t < cfg.s && fixed; ++t) fixed = k[inv[t]] == k[t];
      stab += fixed;
    }
    return group_order / stab;
  }

  // Largest k with k(k-1) <= budget.
  static std::int64_t genus_cap(std::int64_t budget) {
    std::int64_t k = 0;
    while ((k + 1) * k <= budget) ++k;
    return k;
  }

  // sq = sum k^2 so far, gen = sum k(k-1) so far; `basis` spans the forms
  // with the multiplicities placed so far (unused without sections).
  void place(int i, std::int64_t sq, std::int64_t gen, const ModularSections::Basis& basis) {
    const std::int64_t genus_budget = (d - 1) * (d - 2) - gen;
    const std::int64_t remaining = cfg.s - i;
    const std::int64_t cap = std::min(d, genus_cap(genus_budget));
    // remaining sum k^2 = sum k(k-1) + sum k <= genus_budget + remaining * cap
    if (sq + genus_budget + remaining * cap < d * d + 1) return;
    if (!canonical_prefix(i)) return;
    if (i == cfg.s) {
      ++visited;
      DivisorClass c(d, Eigen::Map<const Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>>(k.data(), cfg.s));
      if (sq <= d * d || known.count(c)) return;
      bool certified = false;
      if (sections) {
        // at least N - conditions sections: such a class moves and is no negative curve
        const std::int64_t lower = static_cast<std::int64_t>((d + 1) * (d + 2) / 2) - condition_count(c);
        if (lower >= 2) {
          ++moving;
          return;
        }
        // one section mod p and at least one over the field: exactly one, and the
        // reduction of that form is basis[0], so a nonzero partial mod p is nonzero
        if (lower == 1 && basis.size() == 1) {
          certified = true;
          for (int p = 0; p < cfg.s && certified; ++p)
            if (sections->partials_vanish(basis.front(), p, static_cast<int>(k[p]))) certified = false;
        }
      }
      found.push_back(std::move(c));
      settled.push_back(certified);
      orbit_sizes.push_back(orbit_size());
      return;
    }
    std::int64_t ub = below_first[i] ? std::min(cap, k[0]) : cap;
    for (int l : lines_at[i]) ub = std::min(ub, d - line_sum[l]);
    ModularSections::Basis cur = basis;
    for (std::int64_t v = 0; v <= ub; ++v) {
      if (sections && v > 0) {
        sections->restrict(cur, i, static_cast<int>(v) - 1);
        if (cur.empty()) break;
      }
      k[i] = v;
      for (int l : lines_at[i]) line_sum[l] += v;
      place(i + 1, sq + v * v, gen + v * (v - 1), cur);
      for (int l : lines_at[i]) line_sum[l] -= v;
    }
    k[i] = 0;
  }
};

}  // namespace

const char* to_string(Origin o) {
  switch (o) {
    case Origin::Exceptional: return "exceptional";
    case Origin::Line: return "line";
    case Origin::CubicTransform: return "cubic_transform";
    case Origin::Search: return "search";
  }
  return "?";
}

Certificate certify_class(const Configuration& cfg, const DivisorClass& c) {
  Certificate cert;
  cert.self_intersection = self_intersection(c);
  cert.canonical_degree = canonical_degree(c);
  cert.genus = arithmetic_genus(c);
  for (int i = 0; i < c.points(); ++i)
    if (c.mults(i) < 0) cert.violated.push_back("E" + std::to_string(i + 1) + ": " + std::to_string(c.mults(i)));
  if (lattice_supported(cfg)) {
    for (const auto& l : line_classes(cfg, cfg.context())) {
      const auto p = intersection_number(c, l);
      if (p < 0) cert.violated.push_back("L(" + to_string(l) + "): " + std::to_string(p));
      cert.line_products.push_back(p);
    }
  }
  if (cert.genus < 0) cert.violated.push_back("genus: " + std::to_string(cert.genus));
  return cert;
}

FilterResult filter_candidate(const Configuration& cfg, const DivisorClass& c) {
  if (c.points() != cfg.s) throw DimensionError("candidate has the wrong number of points");
  if (c.degree <= 0) throw std::invalid_argument("filter_candidate needs positive degree");
  const auto lines = line_classes(cfg, cfg.context());
  if (std::find(lines.begin(), lines.end(), c) != lines.end())
    throw std::invalid_argument("candidate " + to_string(c) + " is a line class of the configuration");
  FilterResult res;
  res.certificate = certify_class(cfg, c);
  res.reasons = res.certificate.violated;
  res.passes = res.reasons.empty();
  return res;
}

std::vector<NegativeClass> known_negative_classes(const Configuration& cfg) {
  const auto ctx = cfg.context();
  std::vector<NegativeClass> out;
  for (int i = 0; i < cfg.s; ++i) out.push_back(make_negative(cfg, exceptional<std::int64_t>(ctx, i), Origin::Exceptional));
  if (lattice_supported(cfg))
    for (const auto& l : line_classes(cfg, ctx))
      if (self_intersection(l) < 0) out.push_back(make_negative(cfg, l, Origin::Line));
  if (has_cubic_transform(cfg)) {
    DivisorClass cubic(ctx);
    cubic.degree = 3;
    cubic.mults.setOnes();
    out.push_back(make_negative(cfg, cubic, Origin::CubicTransform));
  }
  sort_classes(out);
  return out;
}

ClassificationReport search_negative(const Configuration& cfg, std::int64_t d_max, bool use_symmetry) {
  if (!lattice_supported(cfg))
    throw UnsupportedConfiguration(std::string("search needs incidence data; ") + to_string(cfg.kind) + " has none");
  if (d_max < 1) throw std::invalid_argument("search needs d_max >= 1");

  ClassificationReport rep;
  rep.kind = cfg.kind;
  rep.m = cfg.m;
  rep.s = cfg.s;
  rep.d_max = d_max;
  rep.assumption =
      "0 <= k_i <= d for every candidate (C.(H - E_i) >= 0 for an irreducible curve other than a line); "
      "irreducibility approximated by C.E_i >= 0, C.L >= 0 for configuration lines, genus >= 0";
  rep.effectivity = cfg.has_coordinates()
                        ? "a negative curve is the unique member of its linear system and has exactly the stated "
                          "multiplicities; prefixes with no form modulo a prime p = 1 (mod order) are pruned, a class "
                          "with one expected and one modular section is settled mod p, the rest decided exactly over "
                          "the cyclotomic field"
                        : "not checked: configuration has no coordinates";
  rep.line_classes = line_classes(cfg, cfg.context());
  rep.negative_classes = known_negative_classes(cfg);
  std::set<DivisorClass> known;
  for (const auto& n : rep.negative_classes) known.insert(n.cls);

  const auto group = use_symmetry ? symmetry_group(cfg) : symmetry_group(Configuration{cfg.kind, cfg.m, cfg.s});
  rep.symmetry_order = group.size();
  for (auto& n : rep.negative_classes) n.orbit_size = orbit_of(group, n.cls).size();

  // One task per (d, k_1) prefix.
  std::vector<std::pair<std::int64_t, std::int64_t>> tasks;
  for (std::int64_t d = 1; d <= d_max; ++d)
    for (std::int64_t k0 = 0; k0 <= d; ++k0) tasks.emplace_back(d, k0);
  std::vector<std::vector<DivisorClass>> found(tasks.size());
  std::vector<std::vector<bool>> settled(tasks.size());
  std::vector<std::vector<std::size_t>> orbit_sizes(tasks.size());
  std::vector<std::size_t> visited(tasks.size(), 0), moving(tasks.size(), 0);
  std::vector<std::optional<ModularSections>> sections(static_cast<std::size_t>(d_max) + 1);
  if (cfg.has_coordinates())
    for (std::int64_t d = 1; d <= d_max; ++d) sections[d].emplace(cfg, static_cast<int>(d));
  parallel_for(tasks.size(), [&](std::size_t t) {
    const auto [d, k0] = tasks[t];
    SearchState st(cfg, d);
    st.known = known;
    st.set_group(group);
    if (sections[d]) st.sections = &*sections[d];
    const std::int64_t budget = (d - 1) * (d - 2) - k0 * (k0 - 1);
    if (budget < 0) return;
    for (int l : st.lines_at[0])
      if (k0 > d - st.line_sum[l]) return;
    ModularSections::Basis basis;
    if (st.sections) {
      basis = st.sections->full();
      for (std::int64_t v = 1; v <= k0 && !basis.empty(); ++v) st.sections->restrict(basis, 0, static_cast<int>(v) - 1);
      if (basis.empty()) return;
    }
    st.k[0] = k0;
    for (int l : st.lines_at[0]) st.line_sum[l] += k0;
    st.place(1, k0 * k0, k0 * (k0 - 1), basis);
    found[t] = std::move(st.found);
    settled[t] = std::move(st.settled);
    orbit_sizes[t] = std::move(st.orbit_sizes);
    visited[t] = st.visited;
    moving[t] = st.moving;
  });

  std::vector<DivisorClass> candidates;
  std::vector<bool> modular_ok;
  std::vector<std::size_t> orbit;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    rep.searched += visited[t];
    rep.excluded_moving += moving[t];
    candidates.insert(candidates.end(), found[t].begin(), found[t].end());
    modular_ok.insert(modular_ok.end(), settled[t].begin(), settled[t].end());
    orbit.insert(orbit.end(), orbit_sizes[t].begin(), orbit_sizes[t].end());
  }

  const bool lemma_applies = cfg.s == 9;
  const auto lemma_rows = lemma_applies ? support_sets(lemma_system(3)) : std::vector<std::vector<int>>{};
  enum class Verdict { Keep, NotEffective, Moving, ExtraMultiplicity };
  std::vector<Verdict> verdicts(candidates.size(), Verdict::Keep);
  std::vector<Certificate> certs(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t i) {
    const auto& c = candidates[i];
    auto f = filter_candidate(cfg, c);
    if (!f.passes) throw std::logic_error("search produced a class failing the filter: " + to_string(c));
    if (lemma_applies) {
      // k/d satisfies every configuration line and has sum of squares > 1,
      // so by the 3 x 3 bound it must break one of the twelve triples.
      const bool breaks_one = std::any_of(lemma_rows.begin(), lemma_rows.end(), [&](const std::vector<int>& r) {
        return c.mults(r[0]) + c.mults(r[1]) + c.mults(r[2]) > c.degree;
      });
      if (!breaks_one) throw std::logic_error("negative candidate " + to_string(c) + " contradicts the 3 x 3 bound");
    }
    if (modular_ok[i]) {
      f.certificate.sections = 1;
    } else if (cfg.has_coordinates()) {
      const auto basis = sections_basis_exact(cfg, c);
      f.certificate.sections = basis.size();
      if (basis.empty()) {
        verdicts[i] = Verdict::NotEffective;
      } else if (basis.size() >= 2) {
        verdicts[i] = Verdict::Moving;
      } else {
        for (int p = 0; p < cfg.s; ++p)
          if (partials_vanish_exact(cfg, basis.front(), static_cast<int>(c.degree), p, static_cast<int>(c.mults(p)))) {
            verdicts[i] = Verdict::ExtraMultiplicity;
            break;
          }
      }
    }
    certs[i] = std::move(f.certificate);
  });
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    switch (verdicts[i]) {
      case Verdict::Keep:
        rep.negative_classes.push_back(
            {candidates[i], classify_negative_type(candidates[i]), Origin::Search, std::move(certs[i]), orbit[i]});
        rep.search_classes_total += orbit[i];
        break;
      case Verdict::NotEffective: ++rep.excluded_not_effective; break;
      case Verdict::Moving: ++rep.excluded_moving; break;
      case Verdict::ExtraMultiplicity: ++rep.excluded_extra_multiplicity; break;
    }
  }
  sort_classes(rep.negative_classes);
  rep.b_value = 0;
  for (const auto& n : rep.negative_classes) rep.b_value = std::min(rep.b_value, n.certificate.self_intersection);
  return rep;
}

Reduction cremona_reduce(const Configuration& cfg, const DivisorClass& c) {
  const auto moves = bound_moves(cfg);
  if (moves.empty()) throw std::invalid_argument("cremona_reduce needs a configuration with triangles");
  if (c.points() != cfg.s) throw DimensionError("class has the wrong number of points");
  if (c.degree <= 0) throw std::invalid_argument("cremona_reduce needs positive degree");
  Reduction r{c, {}};
  while (r.terminal.degree > 1) {
    const CremonaMove* failing = nullptr;
    for (const auto& m : moves) {
      const auto& t = m.triangle;
      if (r.terminal.mults(t[0]) + r.terminal.mults(t[1]) + r.terminal.mults(t[2]) > r.terminal.degree) {
        failing = &m;
        break;
      }
    }
    if (!failing) break;
    DivisorClass next = apply(r.terminal, *failing);
    if (next.degree >= r.terminal.degree) throw std::logic_error("Cremona reduction did not lower the degree");
    r.terminal = std::move(next);
    r.moves.push_back(*failing);
  }
  return r;
}

std::vector<DivisorClass> symmetry_orbit(const Configuration& cfg, const DivisorClass& c) {
  const auto orbit = orbit_of(symmetry_group(cfg), c);
  return {orbit.begin(), orbit.end()};
}

std::int64_t adjunction_floor(const DivisorClass& c) {
  return -2 - canonical_degree(c);
}

BncReport bnc_bound(const Configuration& cfg) {
  BncReport rep;
  switch (cfg.kind) {
    case ConfigKind::HesseTorsion:
      if (cfg.m == 3) {
        rep.b = -2;
        rep.formula = "b = -2";
      } else if (cfg.m >= 4) {
        rep.b = 9 - static_cast<std::int64_t>(cfg.m) * cfg.m;
        rep.formula = "b = 9 - m^2";
        rep.formula_only = true;
      } else {
        throw UnsupportedConfiguration("b(X) is not available for 2-torsion points");
      }
      break;
    case ConfigKind::DualHesse:
      rep.b = -2;
      rep.formula = "b = -2";
      break;
    case ConfigKind::VeryGeneralCubic:
      rep.b = std::min<std::int64_t>(-1, 9 - cfg.s);
      rep.formula = "b = min(-1, 9 - s)";
      break;
    case ConfigKind::FermatZm:
      throw UnsupportedConfiguration("b(X) is open for the Fermat points Z(m)");
  }
  if (lattice_supported(cfg)) rep.line_classes = line_classes(cfg, cfg.context());
  rep.negative_classes = known_negative_classes(cfg);
  std::int64_t least = 0;
  for (const auto& n : rep.negative_classes) least = std::min(least, n.certificate.self_intersection);
  if (least != rep.b) throw std::logic_error("b(X) differs from the least self-intersection of the known classes");
  return rep;
}

}  // namespace negcurve
