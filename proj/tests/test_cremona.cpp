#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "negcurve/cremona.hpp"
#include "support/properties.hpp"

#include <algorithm>

using namespace negcurve;

namespace {

const Configuration& dual() {
  static const Configuration cfg = build_dual_hesse();
  return cfg;
}

DivisorClass seed() { return line_through(dual().context(), {0, 5}); }

// The k = d - k_i - k_j - k_l rule written out for the test.
DivisorClass by_hand(DivisorClass c, Triple t) {
  const auto k = c.degree - c.mults(t[0]) - c.mults(t[1]) - c.mults(t[2]);
  c.degree += k;
  for (int i : t) c.mults(i) += k;
  return c;
}

std::vector<std::int64_t> degrees_at(const OrbitGraph& g, int depth) {
  std::vector<std::int64_t> out;
  for (const auto& n : g.nodes)
    if (n.depth == depth) out.push_back(n.cls.degree);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("single moves follow the table") {
  const auto m = bound_moves(dual());
  REQUIRE(m.size() == 3);
  const auto a = apply(seed(), m[1]);
  CHECK(a == DivisorClass{2, {1, 1, 0, 1, 0, 1, 0, 0, 1}});
  const auto b = apply(a, m[2]);
  CHECK(b == DivisorClass{4, {1, 1, 2, 1, 2, 1, 2, 0, 1}});
  CHECK(apply(b, m[0]) == DivisorClass{6, {3, 1, 2, 1, 2, 3, 2, 2, 1}});
  CHECK_THROWS_AS(apply(seed(), CremonaMove{{0, 0, 1}, 0}), std::invalid_argument);
  CHECK_THROWS_AS(apply(seed(), CremonaMove{{0, 1, 9}, 0}), DimensionError);
}

TEST_CASE("move parsing") {
  CHECK(parse_move(dual(), "phi2").triangle == Triple{1, 3, 8});
  CHECK(parse_move(dual(), "3").label == 3);
  CHECK(parse_move(dual(), "phi1").name() == "phi1");
  CHECK_THROWS_AS(parse_move(dual(), "phi4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_move(dual(), "psi1"), std::invalid_argument);
}

TEST_CASE("trace") {
  const auto m = bound_moves(dual());
  const auto rows = trace(seed(), {m[1], m[2], m[0], m[1], m[2]});
  REQUIRE(rows.size() == 6);
  std::vector<std::int64_t> deg;
  for (const auto& r : rows) deg.push_back(r.cls.degree);
  CHECK(deg == std::vector<std::int64_t>{1, 2, 4, 6, 9, 12});
  CHECK(rows.back().cls == DivisorClass{12, {3, 4, 5, 4, 5, 3, 5, 2, 4}});
  CHECK_FALSE(rows.front().move.has_value());
  const auto empty = trace(seed(), {});
  CHECK(empty.size() == 1);
  CHECK(trace_csv(empty) == "move,d,k1,k2,k3,k4,k5,k6,k7,k8,k9\n,1,1,0,0,0,0,1,0,0,0\n");
}

TEST_CASE("orbit without backtracking") {
  OrbitOptions opt;
  opt.max_degree = 16;
  const auto g = orbit(dual(), {seed()}, opt);
  const std::vector<std::vector<std::int64_t>> expect{{1}, {2, 2}, {4, 4}, {5, 6, 6}, {8, 9, 9}, {10, 10, 12, 12}, {14, 14, 16, 16}};
  for (int d = 0; d < 7; ++d) CHECK(degrees_at(g, d) == expect[d]);

  const auto m = bound_moves(dual());
  const DivisorClass merge{5, {1, 2, 2, 2, 2, 1, 2, 0, 2}};
  const auto via32 = by_hand(by_hand(by_hand(seed(), m[1].triangle), m[2].triangle), m[1].triangle);
  const auto via23 = by_hand(by_hand(by_hand(seed(), m[2].triangle), m[1].triangle), m[2].triangle);
  CHECK(via32 == merge);
  CHECK(via23 == merge);
  const auto id = g.find(merge);
  REQUIRE(id);
  CHECK(g.nodes[*id].depth == 3);
  CHECK(g.parents(*id).size() == 2);
  for (const auto& e : g.edges) CHECK(g.nodes[e.to].depth == g.nodes[e.from].depth + 1);
}

TEST_CASE("orbit seeds must be (-1)-classes") {
  try {
    orbit(dual(), {DivisorClass{1, {1, 1, 1, 0, 0, 0, 0, 0, 0}}}, {});
    FAIL("accepted a (-2)-class");
  } catch (const NotMinusOneClass& e) {
    CHECK(e.self_intersection == -2);
    CHECK(e.canonical_degree == 0);
  }
}

TEST_CASE("all seeds with backtracking reach the exceptional classes") {
  std::vector<DivisorClass> seeds;
  for (const auto& p : dual().special_pairs) seeds.push_back(line_through(dual().context(), {p[0], p[1]}));
  OrbitOptions opt;
  opt.max_degree = 1;
  opt.forbid_backtrack = false;
  const auto g = orbit(dual(), seeds, opt);
  CHECK(g.nodes.size() == 9);
  REQUIRE(g.exceptional_hits.size() == 9);
  for (int i = 0; i < 9; ++i)
    CHECK(std::count(g.exceptional_hits.begin(), g.exceptional_hits.end(), exceptional(dual().context(), i)) == 1);
  CHECK(apply(seed(), bound_moves(dual())[0]) == exceptional(dual().context(), 7));
}

TEST_CASE("hexal rows") {
  OrbitOptions opt;
  opt.max_depth = 6;
  const auto g = orbit(dual(), {seed()}, opt);
  const auto rows = hexal(g, 6);
  const std::vector<std::vector<std::int64_t>> table{{1}, {2, 2}, {4, 4}, {6, 5, 6}, {9, 8, 9}, {12, 10, 10, 12}, {16, 14, 14, 16}};
  CHECK(rows == table);
  for (const auto& r : rows) CHECK(std::equal(r.begin(), r.end(), r.rbegin()));
  CHECK(hexal(g, 0) == std::vector<std::vector<std::int64_t>>{{1}});
  CHECK(hexal_csv({{1}, {2, 2}}) == "1\n2,2\n");
}

TEST_CASE("dot output is ordered by node id") {
  OrbitOptions opt;
  opt.max_degree = 2;
  const auto dot = to_dot(orbit(dual(), {seed()}, opt));
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("n0") < dot.find("n1"));
  CHECK(dot.find("phi2") != std::string::npos);
}

TEST_CASE("involution and isometry on random classes") {
  CHECK(props::cremona_involution_isometry(10000, 3) == "");
}

TEST_CASE("every orbit node is a (-1)-class") { CHECK(props::orbit_nodes_minus_one(40) == ""); }
