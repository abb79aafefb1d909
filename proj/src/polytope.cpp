#include "negcurve/polytope.hpp"
#include "negcurve/linalg.hpp"
#include "negcurve/parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace negcurve {

namespace {

using Key = std::vector<Rational>;

// Binomial coefficients saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

// The lexicographically rank-th r-subset of {0..n-1}.
std::vector<int> unrank_combination(int n, int r, std::uint64_t rank) {
  std::vector<int> c;
  int next = 0;
  for (int pos = 0; pos < r; ++pos) {
    for (int v = next;; ++v) {
      const std::uint64_t block = binomial(static_cast<std::uint64_t>(n - v - 1), static_cast<std::uint64_t>(r - pos - 1));
      if (rank < block) {
        c.push_back(v);
        next = v + 1;
        break;
      }
      rank -= block;
    }
  }
  return c;
}

bool next_combination(std::vector<int>& c, int n) {
  const int r = static_cast<int>(c.size());
  int i = r - 1;
  while (i >= 0 && c[i] == n - r + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
  return true;
}

// All constraints as integer rows a.x <= b: scaled rows of A, then -x_i <= 0.
struct IntegerConstraints {
  MatrixX<Integer> a;
  VectorX<Integer> b;
  MatrixX<std::int64_t> a64;
  VectorX<std::int64_t> b64;
  bool small = false;

  explicit IntegerConstraints(const ConstraintSystem& sys) {
    VectorX<Integer> scales;
    const MatrixX<Integer> rows = clear_row_denominators(sys.rows, &scales);
    const Eigen::Index r = sys.num_rows();
    const Eigen::Index n = sys.n;
    a = MatrixX<Integer>::Zero(r + n, n);
    b = VectorX<Integer>::Zero(r + n);
    a.topRows(r) = rows;
    b.head(r) = scales;
    for (Eigen::Index i = 0; i < n; ++i) a(r + i, i) = -1;

    const Integer limit(std::int64_t{1} << 24);
    small = true;
    for (Eigen::Index i = 0; i < a.rows() && small; ++i) {
      if (abs(b(i)) > limit) small = false;
      for (Eigen::Index j = 0; j < n && small; ++j)
        if (abs(a(i, j)) > limit) small = false;
    }
    if (small) {
      a64 = a.unaryExpr([](const Integer& v) { return v.convert_to<std::int64_t>(); });
      b64 = b.unaryExpr([](const Integer& v) { return v.convert_to<std::int64_t>(); });
    }
  }

  Eigen::Index dim() const { return a.cols(); }
  Eigen::Index size() const { return a.rows(); }

  // Solves the square system of the chosen constraints; returns the point
  // when it is nonsingular and satisfies every constraint.
  std::optional<RationalVector> feasible_vertex(const std::vector<int>& subset) const {
    const Eigen::Index n = dim();
    if (small) {
      try {
        MatrixX<std::int64_t> m(n, n);
        VectorX<std::int64_t> rhs(n);
        for (Eigen::Index i = 0; i < n; ++i) {
          m.row(i) = a64.row(subset[i]);
          rhs(i) = b64(subset[i]);
        }
        const auto sol = bareiss_solve<std::int64_t>(m, rhs);
        if (!sol) return std::nullopt;
        const __int128 den = sol->denominator;
        for (Eigen::Index i = 0; i < size(); ++i) {
          __int128 lhs = 0;
          for (Eigen::Index j = 0; j < n; ++j)
            if (a64(i, j) != 0) lhs += static_cast<__int128>(a64(i, j)) * sol->numerators(j);
          if (lhs > static_cast<__int128>(b64(i)) * den) return std::nullopt;
        }
        RationalVector x(n);
        for (Eigen::Index j = 0; j < n; ++j) x(j) = Rational(sol->numerators(j), sol->denominator);
        return x;
      } catch (const ArithmeticOverflow&) {
        // retry with arbitrary precision below
      }
    }
    MatrixX<Integer> m(n, n);
    VectorX<Integer> rhs(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      m.row(i) = a.row(subset[i]);
      rhs(i) = b(subset[i]);
    }
    const auto sol = bareiss_solve<Integer>(m, rhs);
    if (!sol) return std::nullopt;
    for (Eigen::Index i = 0; i < size(); ++i) {
      Integer lhs(0);
      for (Eigen::Index j = 0; j < n; ++j) lhs += a(i, j) * sol->numerators(j);
      if (lhs > b(i) * sol->denominator) return std::nullopt;
    }
    RationalVector x(n);
    for (Eigen::Index j = 0; j < n; ++j) x(j) = Rational(sol->numerators(j), sol->denominator);
    return x;
  }
};

// Cheap sufficient test: every coordinate is capped by a nonnegative row.
bool obviously_bounded(const ConstraintSystem& sys) {
  for (Eigen::Index j = 0; j < sys.n; ++j) {
    bool capped = false;
    for (Eigen::Index i = 0; i < sys.num_rows() && !capped; ++i)
      capped = sys.rows(i, j) > 0 && (sys.rows.row(i).array() >= Rational(0)).all();
    if (!capped) return false;
  }
  return true;
}

// Looks for an extreme ray of the recession cone {d >= 0, A d <= 0}, scaled
// so that sum d = 1: n-1 tight cone constraints plus the normalisation.
std::optional<RationalVector> recession_ray(const ConstraintSystem& sys) {
  const Eigen::Index n = sys.n;
  const Eigen::Index r = sys.num_rows();
  RationalMatrix cone(r + n, n);
  cone.topRows(r) = sys.rows;
  cone.bottomRows(n) = -RationalMatrix::Identity(n, n);
  std::vector<int> c(static_cast<std::size_t>(n - 1));
  std::iota(c.begin(), c.end(), 0);
  do {
    RationalMatrix m(n, n);
    for (Eigen::Index i = 0; i + 1 < n; ++i) m.row(i) = cone.row(c[i]);
    m.row(n - 1).setConstant(Rational(1));
    RationalVector rhs = RationalVector::Zero(n);
    rhs(n - 1) = 1;
    const auto d = solve_exact(m, rhs);
    if (!d) continue;
    const RationalVector lhs = cone * *d;
    if ((lhs.array() <= Rational(0)).all()) return *d;
  } while (n > 1 && next_combination(c, static_cast<int>(r + n)));
  return std::nullopt;
}

void validate(const ConstraintSystem& sys) {
  if (sys.n < 1 || sys.rows.cols() != sys.n)
    throw EmptySystem("constraint system has no variables or mismatched row length");
  if (obviously_bounded(sys)) return;
  if (auto ray = recession_ray(sys)) throw UnboundedSystem("constraint system is unbounded", *ray);
}

VertexCert certify(const ConstraintSystem& sys, RationalVector x) {
  VertexCert v{std::move(x), {}};
  v.tight = active_constraints(sys, v.point);
  return v;
}

}  // namespace

ConstraintSystem lemma_system(int k) {
  if (k < 1) throw std::invalid_argument("lemma_system needs k >= 1");
  if (k > 8) throw std::length_error("lemma_system: k! + 2k rows overflow the supported range for k > 8");
  const Eigen::Index n = k * k;
  std::vector<std::vector<int>> supports;
  for (int i = 0; i < k; ++i) {
    std::vector<int> s;
    for (int j = 0; j < k; ++j) s.push_back(i * k + j);
    supports.push_back(s);
  }
  for (int j = 0; j < k; ++j) {
    std::vector<int> s;
    for (int i = 0; i < k; ++i) s.push_back(i * k + j);
    supports.push_back(s);
  }
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> s;
    for (int i = 0; i < k; ++i) s.push_back(i * k + perm[i]);
    supports.push_back(s);
  } while (std::next_permutation(perm.begin(), perm.end()));

  ConstraintSystem sys;
  sys.n = n;
  sys.rows = RationalMatrix::Zero(static_cast<Eigen::Index>(supports.size()), n);
  for (std::size_t r = 0; r < supports.size(); ++r)
    for (int v : supports[r]) sys.rows(static_cast<Eigen::Index>(r), v) = 1;
  return sys;
}

std::vector<std::vector<int>> support_sets(const ConstraintSystem& sys) {
  std::vector<std::vector<int>> out;
  for (Eigen::Index i = 0; i < sys.num_rows(); ++i) {
    std::vector<int> s;
    for (Eigen::Index j = 0; j < sys.n; ++j)
      if (sys.rows(i, j) != 0) s.push_back(static_cast<int>(j));
    out.push_back(std::move(s));
  }
  return out;
}

bool is_feasible(const ConstraintSystem& sys, const RationalVector& x) {
  if (x.size() != sys.n) throw DimensionError("point has wrong dimension");
  if ((x.array() < Rational(0)).any()) return false;
  const RationalVector lhs = sys.rows * x;
  return (lhs.array() <= Rational(1)).all();
}

std::vector<int> active_constraints(const ConstraintSystem& sys, const RationalVector& x) {
  std::vector<int> out;
  const RationalVector lhs = sys.rows * x;
  for (Eigen::Index i = 0; i < lhs.size(); ++i)
    if (lhs(i) == 1) out.push_back(static_cast<int>(i));
  for (Eigen::Index j = 0; j < sys.n; ++j)
    if (x(j) == 0) out.push_back(static_cast<int>(sys.num_rows() + j));
  return out;
}

RationalMatrix constraint_matrix(const ConstraintSystem& sys, const std::vector<int>& indices) {
  RationalMatrix m = RationalMatrix::Zero(static_cast<Eigen::Index>(indices.size()), sys.n);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const Eigen::Index c = indices[i];
    if (c < sys.num_rows())
      m.row(static_cast<Eigen::Index>(i)) = sys.rows.row(c);
    else
      m(static_cast<Eigen::Index>(i), c - sys.num_rows()) = -1;
  }
  return m;
}

std::vector<VertexCert> vertices(const ConstraintSystem& sys, std::uint64_t max_subsets) {
  validate(sys);
  const IntegerConstraints cons(sys);
  const int total_constraints = static_cast<int>(cons.size());
  const int n = static_cast<int>(sys.n);
  const std::uint64_t total = binomial(static_cast<std::uint64_t>(total_constraints), static_cast<std::uint64_t>(n));
  if (total > max_subsets)
    throw std::length_error(total == std::numeric_limits<std::uint64_t>::max()
                                ? "vertex enumeration needs more than 2^64 tight-set solves; use lemma probe"
                                : "vertex enumeration needs " + std::to_string(total) + " tight-set solves; use lemma probe");

  const std::uint64_t chunk = std::max<std::uint64_t>(1, std::min<std::uint64_t>(20000, total / 8 + 1));
  const std::size_t chunks = static_cast<std::size_t>((total + chunk - 1) / chunk);
  std::vector<std::set<Key>> found(chunks);
  parallel_for(chunks, [&](std::size_t ci) {
    const std::uint64_t begin = ci * chunk;
    const std::uint64_t end = std::min(total, begin + chunk);
    std::vector<int> subset = unrank_combination(total_constraints, n, begin);
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      if (auto x = cons.feasible_vertex(subset)) found[ci].insert(to_std(*x));
      next_combination(subset, total_constraints);
    }
  });

  std::set<Key> all;
  for (auto& f : found) all.merge(f);
  std::vector<VertexCert> out;
  out.reserve(all.size());
  for (const auto& key : all) {
    RationalVector x(n);
    std::copy(key.begin(), key.end(), x.begin());
    out.push_back(certify(sys, std::move(x)));
  }
  return out;
}

Rational sum_squares(const RationalVector& x) {
  Rational s(0);
  for (const auto& v : x) s += v * v;
  return s;
}

SumSquaresMax max_sum_squares(const ConstraintSystem& sys) {
  auto verts = vertices(sys);
  if (verts.empty()) throw EmptySystem("polytope has no vertices");
  SumSquaresMax out;
  out.num_vertices = verts.size();
  out.value = sum_squares(verts.front().point);
  for (auto& v : verts) {
    const Rational val = sum_squares(v.point);
    if (val > out.value) {
      out.value = val;
      out.argmax.clear();
    }
    if (val == out.value) out.argmax.push_back(std::move(v));
  }
  return out;
}

GiantCover giant_cover_check() {
  const std::array<std::array<int, 2>, 4> pairs{{{2, 3}, {4, 7}, {9, 5}, {6, 8}}};
  const auto supports = support_sets(lemma_system(3));
  GiantCover out;
  out.all_covered = true;
  for (int mask = 0; mask < 16; ++mask) {
    GiantWitness w;
    for (int p = 0; p < 4; ++p) w.giants[p] = pairs[p][(mask >> p) & 1];
    for (const auto& s : supports) {
      const bool inside = std::all_of(s.begin(), s.end(), [&](int v) {
        return std::find(w.giants.begin(), w.giants.end(), v + 1) != w.giants.end();
      });
      if (inside) {
        w.cover = Triple{s[0] + 1, s[1] + 1, s[2] + 1};
        break;
      }
    }
    if (!w.cover) out.all_covered = false;
    out.witnesses.push_back(w);
  }
  return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct WalkResult {
  Rational best;
  std::set<Key> best_points;
  std::set<Key> visited;
  std::size_t solves = 0;
};

// One restart: start at a unit-vector vertex, wander for a quarter of the
// budget, then only accept non-decreasing moves between adjacent bases.
WalkResult random_walk(const ConstraintSystem& sys, const IntegerConstraints& cons,
                       const std::vector<std::vector<int>>& supports, std::size_t budget,
                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = static_cast<int>(sys.n);
  const int r = static_cast<int>(sys.num_rows());
  const int total = r + n;
  const int start = std::uniform_int_distribution<int>(0, n - 1)(rng);

  std::vector<int> basis;
  for (int j = 0; j < n; ++j)
    if (j != start) basis.push_back(r + j);
  for (int i = 0; i < r; ++i)
    if (std::find(supports[i].begin(), supports[i].end(), start) != supports[i].end()) {
      basis.push_back(i);
      break;
    }
  std::sort(basis.begin(), basis.end());

  WalkResult res;
  auto x = cons.feasible_vertex(basis);
  ++res.solves;
  if (!x) throw std::logic_error("unit vector basis is not a vertex");
  Rational current = sum_squares(*x);
  res.best = current;
  res.best_points.insert(to_std(*x));
  res.visited.insert(to_std(*x));

  std::uniform_int_distribution<int> pick_out(0, n - 1);
  std::uniform_int_distribution<int> pick_in(0, total - 1);
  while (res.solves < budget) {
    std::vector<int> trial = basis;
    const int in = pick_in(rng);
    if (std::binary_search(trial.begin(), trial.end(), in)) continue;
    trial[pick_out(rng)] = in;
    std::sort(trial.begin(), trial.end());
    auto y = cons.feasible_vertex(trial);
    ++res.solves;
    if (!y) continue;
    const Rational val = sum_squares(*y);
    auto key = to_std(*y);
    res.visited.insert(key);
    if (val > res.best) {
      res.best = val;
      res.best_points.clear();
    }
    if (val == res.best) res.best_points.insert(key);
    if (res.solves < budget / 4 || val >= current) {
      basis = std::move(trial);
      current = val;
    }
  }
  return res;
}

}  // namespace

ProbeReport conjecture_probe(int k, std::size_t budget, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("conjecture_probe needs k >= 2");
  const ConstraintSystem sys = lemma_system(k);
  ProbeReport rep;
  rep.k = k;
  rep.dimension = sys.n;
  rep.num_rows = sys.num_rows();

  if (k <= 3) {
    auto exact = max_sum_squares(sys);
    rep.method = "exact";
    rep.value = exact.value;
    rep.argmax = std::move(exact.argmax);
    rep.num_vertices = exact.num_vertices;
    rep.solves = static_cast<std::size_t>(binomial(static_cast<std::uint64_t>(sys.num_constraints()),
                                                   static_cast<std::uint64_t>(sys.n)));
    if (rep.value <= 1) {
      rep.status = "proved <= 1 by vertex enumeration";
    } else {
      rep.refutation = rep.argmax.front();
      rep.status = "refuted by vertex enumeration";
    }
    return rep;
  }

  const IntegerConstraints cons(sys);
  const auto supports = support_sets(sys);
  const std::size_t per_restart = 250;
  const std::size_t restarts = std::max<std::size_t>(1, budget / per_restart);
  std::vector<WalkResult> walks(restarts);
  parallel_for(restarts, [&](std::size_t i) {
    const std::size_t share = budget / restarts + (i < budget % restarts ? 1 : 0);
    walks[i] = random_walk(sys, cons, supports, std::max<std::size_t>(share, 1), splitmix64(seed + i));
  });

  rep.method = "probe";
  rep.lower_bound_only = true;
  rep.value = walks.front().best;
  std::set<Key> best_points, visited;
  for (auto& w : walks) {
    rep.solves += w.solves;
    visited.merge(w.visited);
    if (w.best > rep.value) {
      rep.value = w.best;
      best_points.clear();
    }
    if (w.best == rep.value) best_points.merge(w.best_points);
  }
  rep.num_vertices = visited.size();
  for (const auto& key : best_points) {
    RationalVector x(sys.n);
    std::copy(key.begin(), key.end(), x.begin());
    rep.argmax.push_back(certify(sys, std::move(x)));
  }
  if (rep.value > 1) {
    rep.refutation = rep.argmax.front();
    rep.status = "refuted: vertex with sum of squares > 1";
  } else {
    rep.status = "lower bound only: no vertex with sum of squares > 1 found";
  }
  return rep;
}

}  // namespace negcurve
