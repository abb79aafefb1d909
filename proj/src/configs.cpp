#include "negcurve/configs.hpp"
#include "negcurve/parallel.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace negcurve {

namespace {

Triple sorted_triple(int a, int b, int c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

// Pairs not contained in any line of size >= 3.
std::vector<Pair> uncovered_pairs(int n, const std::vector<std::vector<int>>& lines) {
  std::set<Pair> covered;
  for (const auto& l : lines)
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = i + 1; j < l.size(); ++j) covered.insert({l[i], l[j]});
  std::vector<Pair> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!covered.count({i, j})) out.push_back({i, j});
  return out;
}

void certify(const Configuration& cfg) {
  if (!cfg.has_coordinates()) return;
  for (const auto& t : cfg.collinear_triples)
    if (!collinear(cfg.points[t[0]], cfg.points[t[1]], cfg.points[t[2]]))
      throw std::logic_error("collinear triple with nonzero determinant");
  for (const auto& t : cfg.triangles)
    if (collinear(cfg.points[t[0]], cfg.points[t[1]], cfg.points[t[2]]))
      throw std::logic_error("Cremona triangle is degenerate");
}

}  // namespace

const char* to_string(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::HesseTorsion: return "hesse_torsion";
    case ConfigKind::DualHesse: return "dual_hesse";
    case ConfigKind::FermatZm: return "fermat_zm";
    case ConfigKind::VeryGeneralCubic: return "very_general_cubic";
  }
  return "?";
}

std::vector<Triple> collinear_triples_by_det(const std::vector<ProjPoint>& points) {
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<Triple>> per_first(static_cast<std::size_t>(n));
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    const int a = static_cast<int>(i);
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (collinear(points[a], points[b], points[c])) per_first[i].push_back({a, b, c});
  });
  std::vector<Triple> out;
  for (auto& v : per_first) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<std::vector<int>> maximal_lines(int n, const std::vector<Triple>& triples) {
  const std::set<Triple> members(triples.begin(), triples.end());
  std::set<std::vector<int>> lines;
  for (const auto& t : triples) {
    std::vector<int> line{t[0], t[1]};
    for (int x = 0; x < n; ++x)
      if (x != t[0] && x != t[1] && members.count(sorted_triple(t[0], t[1], x))) line.push_back(x);
    std::sort(line.begin(), line.end());
    lines.insert(std::move(line));
  }
  return {lines.begin(), lines.end()};
}

std::optional<std::vector<int>> find_triple_isomorphism(int n, const std::vector<Triple>& a,
                                                        const std::vector<Triple>& b) {
  if (a.size() != b.size()) return std::nullopt;
  const std::set<Triple> target(b.begin(), b.end());
  // Triples of a indexed by their largest element, so each is checked once
  // all three of its points are mapped.
  std::vector<std::vector<Triple>> closing(static_cast<std::size_t>(n));
  for (const auto& t : a) closing[*std::max_element(t.begin(), t.end())].push_back(t);
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<bool(int)> extend = [&](int i) {
    if (i == n) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      image[i] = v;
      bool ok = true;
      for (const auto& t : closing[i])
        if (!target.count(sorted_triple(image[t[0]], image[t[1]], image[t[2]]))) {
          ok = false;
          break;
        }
      if (!ok) continue;
      used[v] = true;
      if (extend(i + 1)) return true;
      used[v] = false;
    }
    image[i] = -1;
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

std::vector<ProjPoint> fermat_cubic_flexes() {
  const auto e = [](int k) { return CycloNum::zeta_power(3, k); };
  const CycloNum zero(3, Rational(0));
  const CycloNum one(3, Rational(1));
  std::vector<ProjPoint> out;
  for (int k : {1, 2, 0}) out.emplace_back(one, -e(k), zero);
  for (int k : {1, 2, 0}) out.emplace_back(one, zero, -e(k));
  for (int k : {1, 2, 0}) out.emplace_back(zero, one, -e(k));
  return out;
}

Configuration build_hesse_torsion(int m) {
  if (m < 2) throw std::invalid_argument("hesse_torsion needs m >= 2");
  Configuration cfg;
  cfg.kind = ConfigKind::HesseTorsion;
  cfg.m = m;
  cfg.s = m * m;
  for (int b = 0; b < m; ++b)
    for (int a = 0; a < m; ++a) cfg.group_labels.push_back({a, b});
  const auto& g = cfg.group_labels;
  const auto zero_sum = [m](int x, int y, int z) { return (x + y + z) % m == 0; };
  for (int i = 0; i < cfg.s; ++i)
    for (int j = i + 1; j < cfg.s; ++j) {
      for (int k = j + 1; k < cfg.s; ++k)
        if (zero_sum(g[i][0], g[j][0], g[k][0]) && zero_sum(g[i][1], g[j][1], g[k][1]))
          cfg.collinear_triples.push_back({i, j, k});
      // the tangent at one point meets the cubic again at the other: -a-b in {a, b}
      const bool tangent_i = zero_sum(g[i][0], g[i][0], g[j][0]) && zero_sum(g[i][1], g[i][1], g[j][1]);
      const bool tangent_j = zero_sum(g[i][0], g[j][0], g[j][0]) && zero_sum(g[i][1], g[j][1], g[j][1]);
      if (tangent_i || tangent_j) cfg.special_pairs.push_back({i, j});
    }
  for (const auto& t : cfg.collinear_triples) cfg.lines.push_back({t[0], t[1], t[2]});

  if (m == 3) {
    const auto flexes = fermat_cubic_flexes();
    const auto relabel =
        find_triple_isomorphism(cfg.s, cfg.collinear_triples, collinear_triples_by_det(flexes));
    if (!relabel) throw std::logic_error("flex coordinates do not realize the 3-torsion triples");
    cfg.order = 3;
    for (int i = 0; i < cfg.s; ++i) cfg.points.push_back(flexes[(*relabel)[i]]);
    certify(cfg);
  }
  return cfg;
}

Configuration build_dual_hesse() {
  const auto e = [](int k) { return CycloNum::zeta_power(3, k); };
  const CycloNum one(3, Rational(1));
  Configuration cfg;
  cfg.kind = ConfigKind::DualHesse;
  cfg.m = 3;
  cfg.s = 9;
  cfg.order = 3;
  // rows of Q1..Q9: y = e, 1, e^2; within a row x = e, 1, e^2
  for (int y : {1, 0, 2})
    for (int x : {1, 0, 2}) cfg.points.emplace_back(e(x), e(y), one);
  cfg.collinear_triples = collinear_triples_by_det(cfg.points);
  cfg.lines = maximal_lines(cfg.s, cfg.collinear_triples);
  cfg.special_pairs = uncovered_pairs(cfg.s, cfg.lines);
  cfg.triangles = {{0, 5, 7}, {1, 3, 8}, {2, 4, 6}};

  std::set<Pair> edges;
  for (const auto& t : cfg.triangles)
    edges.insert({{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}});
  if (std::set<Pair>(cfg.special_pairs.begin(), cfg.special_pairs.end()) != edges)
    throw std::logic_error("dual Hesse special pairs differ from the triangle edges");
  certify(cfg);
  return cfg;
}

Configuration build_fermat_zm(int m) {
  if (m < 1) throw std::invalid_argument("fermat_zm needs m >= 1");
  Configuration cfg;
  cfg.kind = ConfigKind::FermatZm;
  cfg.m = m;
  cfg.s = m * m;
  cfg.order = m;
  const CycloNum one(m, Rational(1));
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b)
      cfg.points.emplace_back(one, CycloNum::zeta_power(m, a), CycloNum::zeta_power(m, b));
  cfg.collinear_triples = collinear_triples_by_det(cfg.points);
  cfg.lines = maximal_lines(cfg.s, cfg.collinear_triples);
  cfg.special_pairs = uncovered_pairs(cfg.s, cfg.lines);
  certify(cfg);
  return cfg;
}

Configuration build_very_general_cubic(int s) {
  if (s < 1) throw std::invalid_argument("very_general_cubic needs s >= 1");
  Configuration cfg;
  cfg.kind = ConfigKind::VeryGeneralCubic;
  cfg.s = s;
  return cfg;
}

std::vector<DivisorClass> line_classes(const Configuration& cfg, const LatticeContext& ctx) {
  if (ctx.s != cfg.s)
    throw DimensionError("lattice has " + std::to_string(ctx.s) + " points, configuration has " +
                         std::to_string(cfg.s));
  std::vector<DivisorClass> out;
  for (const auto& l : cfg.lines) out.push_back(line_through(ctx, l));
  for (const auto& p : cfg.special_pairs) out.push_back(line_through(ctx, {p[0], p[1]}));
  return out;
}

namespace {

CycloNum galois(const CycloNum& z, int u) {
  CycloNum out(z.order(), Rational(0));
  for (Eigen::Index j = 0; j < z.coeffs().size(); ++j)
    if (z.coeffs()(j) != 0) out = out + CycloNum(z.order(), z.coeffs()(j)) * CycloNum::zeta_power(z.order(), u * j);
  return out;
}

std::string point_key(const std::array<CycloNum, 3>& c) {
  std::size_t lead = 0;
  while (c[lead].is_zero()) ++lead;
  const CycloNum inv = c[lead].inverse();
  return to_string(c[0] * inv) + ":" + to_string(c[1] * inv) + ":" + to_string(c[2] * inv);
}

}  // namespace

std::vector<Permutation> symmetry_group(const Configuration& cfg) {
  Permutation id(static_cast<std::size_t>(cfg.s));
  std::iota(id.begin(), id.end(), 0);
  if (!cfg.has_coordinates()) return {id};
  const int n = cfg.order;
  std::map<std::string, int> index;
  for (int i = 0; i < cfg.s; ++i) index[point_key(cfg.points[i].coords)] = i;

  std::vector<CycloNum> roots;
  for (int j = 0; j < n; ++j) {
    roots.push_back(CycloNum::zeta_power(n, j));
    if (n % 2 == 1) roots.push_back(-roots.back());
  }
  std::set<Permutation> group;
  for (int u = 1; u <= std::max(n, 1); ++u) {
    if (std::gcd(u, n) != 1) continue;
    std::vector<std::array<CycloNum, 3>> conj;
    for (const auto& p : cfg.points)
      conj.push_back({galois(p.coords[0], u), galois(p.coords[1], u), galois(p.coords[2], u)});
    std::array<int, 3> axes{0, 1, 2};
    do {
      for (const auto& r1 : roots)
        for (const auto& r2 : roots) {
          Permutation g(static_cast<std::size_t>(cfg.s));
          bool ok = true;
          for (int i = 0; i < cfg.s && ok; ++i) {
            const auto& c = conj[i];
            const auto it = index.find(point_key({c[axes[0]], r1 * c[axes[1]], r2 * c[axes[2]]}));
            if (it == index.end()) ok = false;
            else g[i] = it->second;
          }
          if (ok) group.insert(g);
        }
    } while (std::next_permutation(axes.begin(), axes.end()));
  }
  return {group.begin(), group.end()};
}

DivisorClass permute_class(const Permutation& g, const DivisorClass& c) {
  if (static_cast<int>(g.size()) != c.points()) throw DimensionError("permutation and class differ in size");
  DivisorClass out = c;
  for (int i = 0; i < c.points(); ++i) out.mults(g[i]) = c.mults(i);
  return out;
}

}  // namespace negcurve
