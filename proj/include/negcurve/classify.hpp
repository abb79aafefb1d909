#pragma once

// Negative-curve candidates: necessary irreducibility filters, a pruned
// exhaustive search, Cremona reduction and b(X).

#include "negcurve/configs.hpp"
#include "negcurve/cremona.hpp"
#include "negcurve/lattice.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace negcurve {

struct UnsupportedConfiguration : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Origin { Exceptional, Line, CubicTransform, Search };

const char* to_string(Origin o);

struct Certificate {
  std::vector<std::int64_t> line_products;  // C.L for L in line_classes(cfg), same order
  std::vector<std::string> violated;
  std::int64_t self_intersection = 0;
  std::int64_t canonical_degree = 0;
  std::int64_t genus = 0;
  std::optional<std::size_t> sections;  // dimension of the degree-d forms, when coordinates exist
};

struct NegativeClass {
  DivisorClass cls;
  NegativeType type = NegativeType::NonNegative;
  Origin origin = Origin::Search;
  Certificate certificate;
  std::size_t orbit_size = 1;  // classes in its orbit under symmetry_group(cfg)
};

struct ClassificationReport {
  ConfigKind kind = ConfigKind::DualHesse;
  int m = 0;
  int s = 0;
  std::int64_t d_max = 0;
  std::string assumption;
  std::vector<DivisorClass> line_classes;
  // sorted by origin, then class; known classes are listed in full, search
  // classes by the lexicographically largest member of each symmetry orbit
  std::vector<NegativeClass> negative_classes;
  std::size_t symmetry_order = 1;
  std::size_t search_classes_total = 0;  // search classes counted with their orbits
  std::int64_t b_value = 0;
  std::size_t searched = 0;  // complete orbit representatives visited by the search
  std::string effectivity;
  // candidates passing the intersection filters but rejected for lack of a
  // unique member with exactly these multiplicities
  std::size_t excluded_not_effective = 0;
  std::size_t excluded_moving = 0;
  std::size_t excluded_extra_multiplicity = 0;
};

struct FilterResult {
  bool passes = false;
  std::vector<std::string> reasons;  // one per failed condition
  Certificate certificate;
  std::size_t orbit_size = 1;  // classes in its orbit under symmetry_group(cfg)
};

Certificate certify_class(const Configuration& cfg, const DivisorClass& c);

/// c.E_i >= 0, c.L >= 0 for every line class L, arithmetic genus >= 0.
/// Throws std::invalid_argument for non-positive degree or a known line or
/// exceptional class.
FilterResult filter_candidate(const Configuration& cfg, const DivisorClass& c);

/// Exceptionals, negative line classes and, for s > 9 points on a cubic,
/// the class (3; 1, ..., 1).
std::vector<NegativeClass> known_negative_classes(const Configuration& cfg);

/// All classes (d; k) with 1 <= d <= d_max, 0 <= k_i <= d, c^2 < 0 that pass
/// filter_candidate, merged with the known negative classes. When the points
/// have coordinates a class is kept only if exactly one degree-d curve has
/// these multiplicities and none of its multiplicities is larger. Search
/// classes are reported once per orbit of symmetry_group(cfg), or each on
/// its own when use_symmetry is false.
ClassificationReport search_negative(const Configuration& cfg, std::int64_t d_max, bool use_symmetry = true);

/// Every class in the orbit of c under symmetry_group(cfg), sorted.
std::vector<DivisorClass> symmetry_orbit(const Configuration& cfg, const DivisorClass& c);

struct Reduction {
  DivisorClass terminal;
  std::vector<CremonaMove> moves;  // applying them in reverse to terminal gives the input
};

/// Applies the lowest-index move whose triangle inequality k_i+k_j+k_l <= d
/// fails until all hold or the degree drops to 1 or below.
Reduction cremona_reduce(const Configuration& cfg, const DivisorClass& c);

std::int64_t adjunction_floor(const DivisorClass& c);

struct BncReport {
  std::int64_t b = 0;
  bool formula_only = false;  // true when the value rests on the formula and known classes alone
  std::string formula;
  std::vector<DivisorClass> line_classes;
  std::vector<NegativeClass> negative_classes;
};

BncReport bnc_bound(const Configuration& cfg);

}  // namespace negcurve
