#pragma once

// Exact vertex enumeration for polytopes {x >= 0, A x <= 1} and maximisation
// of the convex function sum x_i^2 over them.
//
// Constraint indices: 0..R-1 are the rows of A, R..R+n-1 are x_i >= 0.

#include "negcurve/configs.hpp"
#include "negcurve/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace negcurve {

struct UnboundedSystem : std::runtime_error {
  UnboundedSystem(std::string what, RationalVector ray_) : std::runtime_error(std::move(what)), ray(std::move(ray_)) {}
  RationalVector ray;  // nonzero d >= 0 with A d <= 0
};

struct EmptySystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConstraintSystem {
  Eigen::Index n = 0;
  RationalMatrix rows;  // each row a with a.x <= 1

  Eigen::Index num_rows() const { return rows.rows(); }
  Eigen::Index num_constraints() const { return rows.rows() + n; }
};

struct VertexCert {
  RationalVector point;
  std::vector<int> tight;  // sorted active constraint indices
};

/// Row sums, column sums and permutation sums of a k x k matrix (row-major
/// variables), each <= 1. Throws std::length_error for k > 8.
ConstraintSystem lemma_system(int k);

/// The rows of a 0/1 system as sorted 0-based index sets.
std::vector<std::vector<int>> support_sets(const ConstraintSystem& sys);

bool is_feasible(const ConstraintSystem& sys, const RationalVector& x);
std::vector<int> active_constraints(const ConstraintSystem& sys, const RationalVector& x);
/// The rows of the tight constraints, for certificate rank checks.
RationalMatrix constraint_matrix(const ConstraintSystem& sys, const std::vector<int>& indices);

/// Every vertex, deduplicated and sorted lexicographically. Enumerates all
/// n-subsets of the constraints, so the caller should keep C(R+n, n) modest;
/// more than `max_subsets` candidate sets throws std::length_error.
std::vector<VertexCert> vertices(const ConstraintSystem& sys, std::uint64_t max_subsets = 200'000'000);

struct SumSquaresMax {
  Rational value;
  std::vector<VertexCert> argmax;
  std::size_t num_vertices = 0;
};

/// The maximum is attained at a vertex because the objective is convex.
SumSquaresMax max_sum_squares(const ConstraintSystem& sys);

Rational sum_squares(const RationalVector& x);

struct GiantWitness {
  std::array<int, 4> giants{};  // 1-based variable indices, one per pair
  std::optional<Triple> cover;  // 1-based inequality triple inside the giants
};

struct GiantCover {
  bool all_covered = false;
  std::vector<GiantWitness> witnesses;  // 16 choices, first pair element = bit 0
};

/// Checks that for every choice of larger element in (m2,m3), (m4,m7),
/// (m9,m5), (m6,m8) three of the four chosen indices form one of the twelve
/// inequality triples of the 3 x 3 system.
GiantCover giant_cover_check();

struct ProbeReport {
  int k = 0;
  std::string method;  // "exact" or "probe"
  Rational value;      // exact maximum, or best value found
  bool lower_bound_only = false;
  std::vector<VertexCert> argmax;
  std::size_t num_vertices = 0;  // enumerated (exact) or distinct visited (probe)
  std::size_t solves = 0;
  std::optional<VertexCert> refutation;  // vertex with value > 1
  std::string status;
  Eigen::Index dimension = 0;
  Eigen::Index num_rows = 0;
};

/// Exact for k <= 3. For k >= 4 a randomized walk over adjacent bases with
/// exact evaluation; the result is only a lower bound on the maximum.
ProbeReport conjecture_probe(int k, std::size_t budget, std::uint64_t seed);

}  // namespace negcurve
