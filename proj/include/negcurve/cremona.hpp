#pragma once

// Standard quadratic Cremona transformations acting on the Picard lattice,
// orbit enumeration of (-1)-classes and the hexal/trace/DOT emitters.

#include "negcurve/configs.hpp"
#include "negcurve/lattice.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace negcurve {

struct CremonaMove {
  Triple triangle{};  // 0-based, distinct
  int label = 0;      // i for phi_i when bound to a configuration triangle, 0 otherwise

  std::string name() const;
};

/// The moves phi_1, phi_2, ... of the configuration's triangles.
std::vector<CremonaMove> bound_moves(const Configuration& cfg);

/// Parses "phi2" (or "2") against the bound moves of cfg.
CremonaMove parse_move(const Configuration& cfg, std::string_view text);

/// With k = d - k_i - k_j - k_l: degree d + k and base multiplicities + k.
template <typename Int>
DivisorClassT<Int> apply(const DivisorClassT<Int>& c, const CremonaMove& t) {
  for (int i : t.triangle)
    if (i < 0 || i >= c.points()) throw DimensionError("Cremona base point out of range");
  if (t.triangle[0] == t.triangle[1] || t.triangle[0] == t.triangle[2] || t.triangle[1] == t.triangle[2])
    throw std::invalid_argument("Cremona base points must be distinct");
  const Int k = c.degree - c.mults(t.triangle[0]) - c.mults(t.triangle[1]) - c.mults(t.triangle[2]);
  DivisorClassT<Int> out = c;
  out.degree += k;
  for (int i : t.triangle) out.mults(i) += k;
  return out;
}

struct TraceRow {
  std::optional<CremonaMove> move;  // empty for the seed row
  DivisorClass cls;
};

std::vector<TraceRow> trace(const DivisorClass& seed, const std::vector<CremonaMove>& moves);

/// CSV with header move,d,k1..ks; the seed row has an empty move field.
std::string trace_csv(const std::vector<TraceRow>& rows);

/// Thrown for orbit seeds that are not (-1)-classes; carries the certificate.
struct NotMinusOneClass : std::invalid_argument {
  NotMinusOneClass(const DivisorClass& c, std::int64_t self, std::int64_t canon);
  DivisorClass cls;
  std::int64_t self_intersection;
  std::int64_t canonical_degree;
};

struct OrbitNode {
  DivisorClass cls;
  int depth = 0;
};

struct OrbitEdge {
  int from = 0;
  int to = 0;
  int label = 0;
};

struct OrbitOptions {
  std::int64_t max_degree = std::numeric_limits<std::int64_t>::max();
  int max_depth = std::numeric_limits<int>::max();
  bool forbid_backtrack = true;
};

struct OrbitGraph {
  std::vector<OrbitNode> nodes;  // ids in BFS order
  std::vector<OrbitEdge> edges;  // only between consecutive depths
  std::vector<int> seeds;
  std::vector<DivisorClass> exceptional_hits;  // children equal to some E_i, sorted
  std::map<DivisorClass, int> index;

  std::optional<int> find(const DivisorClass& c) const;
  std::vector<int> parents(int id) const;
  int max_depth() const;
};

/// Breadth-first closure of the seeds under the configuration's moves.
OrbitGraph orbit(const Configuration& cfg, const std::vector<DivisorClass>& seeds,
                 const OrbitOptions& options);

/// Rows of node degrees by depth in the left-to-right diagram order: nodes
/// of a row are sorted by the mean position of their parents in the previous
/// row, then by incoming move label, then by class.
std::vector<std::vector<std::int64_t>> hexal(const OrbitGraph& g, int depth);

std::string hexal_csv(const std::vector<std::vector<std::int64_t>>& rows);

/// One node per class in id order (label = degree, tooltip = class), one edge
/// per orbit edge labelled phi_i.
std::string to_dot(const OrbitGraph& g);

}  // namespace negcurve
