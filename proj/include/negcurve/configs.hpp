#pragma once

// Point configurations with certified incidence data.
//
// Indices are 0-based in memory; every textual or JSON form is 1-based.

#include "negcurve/cyclo.hpp"
#include "negcurve/lattice.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace negcurve {

using Triple = std::array<int, 3>;
using Pair = std::array<int, 2>;

enum class ConfigKind { HesseTorsion, DualHesse, FermatZm, VeryGeneralCubic };

const char* to_string(ConfigKind kind);

struct Configuration {
  ConfigKind kind = ConfigKind::DualHesse;
  int m = 0;      // torsion order or Fermat order; 0 when not applicable
  int s = 0;      // number of points
  int order = 0;  // cyclotomic order of the coordinates; 0 without coordinates
  std::vector<ProjPoint> points;
  std::vector<std::array<int, 2>> group_labels;  // (a, b) in Z_m x Z_m
  std::vector<Triple> collinear_triples;         // sorted, duplicate-free
  std::vector<std::vector<int>> lines;           // maximal collinear subsets, sorted
  std::vector<Pair> special_pairs;               // pairs on no line with >= 3 points
  std::vector<Triple> triangles;                 // Cremona bases, phi_1, phi_2, ...

  LatticeContext context() const { return LatticeContext(s); }
  bool has_coordinates() const { return !points.empty(); }
};

/// Points Z_m x Z_m in row-major order (a fastest); lines are zero-sum triples.
/// For m = 3 coordinates from the Fermat cubic flexes are attached.
Configuration build_hesse_torsion(int m);

/// The nine affine triple points Q1..Q9 of the Fermat arrangement
/// (x^3-y^3)(y^3-z^3)(z^3-x^3) with the triangles of phi_1, phi_2, phi_3.
Configuration build_dual_hesse();

/// Z(m) = {(1 : e^a : e^b) : 1 <= a, b <= m}, a major.
Configuration build_fermat_zm(int m);

/// s very general points on a cubic: lattice data only.
Configuration build_very_general_cubic(int s);

/// The nine flexes of x^3 + y^3 + z^3 in the order P1..P9 of the usual list
/// (1:-e:0), (1:-e^2:0), (1:-1:0), (1:0:-e), ... with e = zeta_3.
std::vector<ProjPoint> fermat_cubic_flexes();

/// Line classes: one per maximal line (1; 1 on its points), then one per
/// special pair. Throws DimensionError when ctx.s differs from cfg.s.
std::vector<DivisorClass> line_classes(const Configuration& cfg, const LatticeContext& ctx);

/// All 3-subsets with vanishing det3, by exhaustive sweep.
std::vector<Triple> collinear_triples_by_det(const std::vector<ProjPoint>& points);

/// Maximal collinear subsets implied by a triple system.
std::vector<std::vector<int>> maximal_lines(int n, const std::vector<Triple>& triples);

/// Point permutations induced by the maps x -> M sigma(x), where M is a
/// monomial matrix with entries +-zeta^j and sigma is an automorphism of the
/// cyclotomic field, that carry the point set to itself. Each such map sends
/// curves to curves preserving degree, multiplicities and irreducibility.
/// Sorted; the identity comes first. Without coordinates only the identity.
using Permutation = std::vector<int>;
std::vector<Permutation> symmetry_group(const Configuration& cfg);

/// The class with k'_{g(i)} = k_i.
DivisorClass permute_class(const Permutation& g, const DivisorClass& c);

/// Bijection f with {f(i),f(j),f(k)} in b for every {i,j,k} in a, if one exists.
std::optional<std::vector<int>> find_triple_isomorphism(int n, const std::vector<Triple>& a,
                                                        const std::vector<Triple>& b);

}  // namespace negcurve
