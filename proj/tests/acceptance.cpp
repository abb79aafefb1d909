// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is the number of failed criteria.

#include "negcurve/classify.hpp"
#include "negcurve/cli.hpp"
#include "negcurve/polytope.hpp"
#include "support/properties.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace negcurve;

namespace {

// pinned limits
constexpr double kLemmaSeconds = 300.0;
constexpr double kPairSeconds = 1.0;
constexpr double kSearchSeconds = 600.0;
constexpr std::uint64_t kLemmaTightSets = 293930;
constexpr std::uint64_t kPairTightSets = 210;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string cli(std::vector<std::string> args, int* code = nullptr) {
  std::ostringstream out, err;
  const int c = run(args, out, err);
  if (code) *code = c;
  return out.str();
}

Outcome lemma_proof() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto sys = lemma_system(3);
  const auto tight_sets = binomial(static_cast<std::uint64_t>(sys.num_constraints()), static_cast<std::uint64_t>(sys.n));
  const auto m = max_sum_squares(sys);
  const double secs = seconds_since(t0);
  o.require(sys.num_rows() == 12, "system does not have 12 rows");
  o.require(tight_sets <= kLemmaTightSets, "too many candidate tight sets");
  o.require(m.value == 1, "maximum is " + to_string(m.value));
  o.require(m.num_vertices == 938, "vertex count changed: " + std::to_string(m.num_vertices));
  o.require(secs < kLemmaSeconds, "took " + std::to_string(secs) + " s");
  int code = -1;
  const auto j = nlohmann::json::parse(cli({"lemma", "verify", "--k", "3"}, &code));
  o.require(code == 0 && j["max_value"] == "1/1", "CLI did not report 1/1");
  if (o.pass)
    o.detail = "max 1/1 over " + std::to_string(m.num_vertices) + " vertices from " + std::to_string(tight_sets) +
               " tight sets in " + std::to_string(secs) + " s";
  return o;
}

Outcome pair_generalization() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto sys = lemma_system(2);
  const auto m = max_sum_squares(sys);
  const double secs = seconds_since(t0);
  std::size_t tight_sets = 0;
  const auto expect = oracle::brute_force_vertices(oracle::lemma_rows(2), 4, &tight_sets);
  std::set<std::vector<Rational>> got;
  for (const auto& v : vertices(sys)) got.insert({v.point.begin(), v.point.end()});
  o.require(sys.num_rows() == 6, "system does not have 6 rows");
  o.require(tight_sets == kPairTightSets, "oracle saw " + std::to_string(tight_sets) + " tight sets");
  o.require(got == expect, "vertex set differs from the Cramer oracle");
  o.require(m.value == 1, "maximum is " + to_string(m.value));
  o.require(secs < kPairSeconds, "took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = "max 1/1, " + std::to_string(got.size()) + " vertices, equal to the Cramer oracle";
  return o;
}

Outcome giants() {
  Outcome o;
  const auto g = giant_cover_check();
  o.require(g.all_covered, "some giant choice is uncovered");
  o.require(g.witnesses.size() == 16, "expected 16 choices");
  const auto rows = support_sets(lemma_system(3));
  for (const auto& w : g.witnesses) {
    if (!w.cover) continue;
    std::vector<int> t{(*w.cover)[0] - 1, (*w.cover)[1] - 1, (*w.cover)[2] - 1};
    o.require(std::find(rows.begin(), rows.end(), t) != rows.end(), "cover is not an inequality triple");
    for (int i : *w.cover) o.require(std::count(w.giants.begin(), w.giants.end(), i) == 1, "cover uses a non-giant");
  }
  if (o.pass) o.detail = "all 16 giant choices covered";
  return o;
}

Outcome trace_table() {
  Outcome o;
  std::ifstream f(std::string(NEGCURVE_GOLDEN_DIR) + "/cremona_trace.csv", std::ios::binary);
  std::ostringstream golden;
  golden << f.rdbuf();
  int code = -1;
  const auto csv = cli({"cremona", "trace", "--moves", "phi2,phi3,phi1,phi2,phi3"}, &code);
  o.require(code == 0, "trace failed");
  o.require(!golden.str().empty() && csv == golden.str(), "CSV differs from the golden file");
  // rows as printed: degree, then Q1 Q6 Q8 | Q2 Q4 Q9 | Q3 Q5 Q7
  const std::vector<std::array<int, 10>> table{{1, 1, 1, 0, 0, 0, 0, 0, 0, 0},  {2, 1, 1, 0, 1, 1, 1, 0, 0, 0},
                                               {4, 1, 1, 0, 1, 1, 1, 2, 2, 2},  {6, 3, 3, 2, 1, 1, 1, 2, 2, 2},
                                               {9, 3, 3, 2, 4, 4, 4, 2, 2, 2},  {12, 3, 3, 2, 4, 4, 4, 5, 5, 5}};
  constexpr std::array<int, 9> point{0, 5, 7, 1, 3, 8, 2, 4, 6};
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  for (const auto& row : table) {
    std::getline(lines, line);
    std::vector<std::int64_t> fields;
    std::istringstream cells(line.substr(line.find(',') + 1));
    for (std::string cell; std::getline(cells, cell, ',');) fields.push_back(std::stoll(cell));
    o.require(fields.size() == 10 && fields[0] == row[0], "degree mismatch in row " + line);
    for (int i = 0; i < 9 && fields.size() == 10; ++i)
      o.require(fields[point[i] + 1] == row[i + 1], "multiplicity mismatch in row " + line);
  }
  if (o.pass) o.detail = "six rows equal the golden CSV and the grouped table";
  return o;
}

Outcome orbit_and_hexal() {
  Outcome o;
  const auto cfg = build_dual_hesse();
  const auto seed = line_through(cfg.context(), {0, 5});
  OrbitOptions opt;
  opt.max_degree = 16;
  const auto g = orbit(cfg, {seed}, opt);
  const std::vector<std::multiset<std::int64_t>> expect{{1}, {2, 2}, {4, 4}, {5, 6, 6}, {8, 9, 9}, {10, 10, 12, 12}, {14, 14, 16, 16}};
  for (int d = 0; d < 7; ++d) {
    std::multiset<std::int64_t> got;
    for (const auto& n : g.nodes)
      if (n.depth == d) got.insert(n.cls.degree);
    o.require(got == expect[d], "degree multiset differs at depth " + std::to_string(d));
  }
  OrbitOptions shallow;
  shallow.max_depth = 6;
  const auto rows = hexal(orbit(cfg, {seed}, shallow), 6);
  const std::vector<std::vector<std::int64_t>> table{{1}, {2, 2}, {4, 4}, {6, 5, 6}, {9, 8, 9}, {12, 10, 10, 12}, {16, 14, 14, 16}};
  o.require(rows == table, "hexal differs from the table");
  for (const auto& r : rows) o.require(std::equal(r.begin(), r.end(), r.rbegin()), "hexal row is not symmetric");
  o.require(cli({"cremona", "hexal", "--depth", "6"}) == "1\n2,2\n4,4\n6,5,6\n9,8,9\n12,10,10,12\n16,14,14,16\n",
            "hexal CSV differs");
  const auto merge = g.find(DivisorClass{5, {1, 2, 2, 2, 2, 1, 2, 0, 2}});
  o.require(merge && g.nodes[*merge].depth == 3 && g.parents(*merge).size() == 2, "merge node lacks two parents");
  if (o.pass) o.detail = "depth multisets, hexal rows and the degree-5 merge all match";
  return o;
}

Outcome configurations() {
  Outcome o;
  const auto hesse = build_hesse_torsion(3);
  const std::set<Triple> listed{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8},
                                {0, 4, 8}, {1, 5, 6}, {2, 3, 7}, {0, 5, 7}, {1, 3, 8}, {2, 4, 6}};
  o.require(std::set<Triple>(hesse.collinear_triples.begin(), hesse.collinear_triples.end()) == listed &&
                hesse.collinear_triples.size() == 12,
            "hesse triples differ from the listed twelve");
  const auto dual = build_dual_hesse();
  o.require(dual.collinear_triples.size() == 9, "dual hesse does not have 9 triples");
  for (const auto& t : dual.collinear_triples)
    o.require(collinear(dual.points[t[0]], dual.points[t[1]], dual.points[t[2]]), "uncertified triple");
  o.require(dual.special_pairs.size() == 9, "dual hesse does not have 9 special pairs");
  std::set<Pair> edges;
  for (const auto& t : dual.triangles)
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) edges.insert({t[a], t[b]});
  o.require(std::set<Pair>(dual.special_pairs.begin(), dual.special_pairs.end()) == edges, "pairs are not the triangle edges");
  o.require(dual.triangles == std::vector<Triple>{{0, 5, 7}, {1, 3, 8}, {2, 4, 6}}, "wrong triangles");
  for (const auto& t : dual.triangles)
    o.require(!collinear(dual.points[t[0]], dual.points[t[1]], dual.points[t[2]]), "a triangle is collinear");
  const auto fermat = build_fermat_zm(3);
  const auto iso = find_triple_isomorphism(9, fermat.collinear_triples, dual.collinear_triples);
  o.require(iso.has_value(), "no bijection found");
  if (iso) {
    std::set<Triple> mapped;
    for (const auto& t : fermat.collinear_triples) {
      Triple u{(*iso)[t[0]], (*iso)[t[1]], (*iso)[t[2]]};
      std::sort(u.begin(), u.end());
      mapped.insert(u);
    }
    o.require(mapped == std::set<Triple>(dual.collinear_triples.begin(), dual.collinear_triples.end()) &&
                  std::set<int>(iso->begin(), iso->end()).size() == 9,
              "bijection does not carry triples to triples");
    if (o.pass) {
      o.detail = "12 hesse triples, 9 dual triples, 9 pairs on 3 triangles; fermat(3) -> dual via";
      for (int i : *iso) o.detail += " " + std::to_string(i + 1);
    }
  }
  return o;
}

Outcome desk_classification() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto hesse = build_hesse_torsion(3);
  const auto h = search_negative(hesse, 10);
  std::size_t lines = 0, exceptional = 0;
  for (const auto& n : h.negative_classes) {
    o.require(n.origin != Origin::Search, "hesse search found " + to_string(n.cls));
    lines += n.origin == Origin::Line && n.type == NegativeType::MinusTwo;
    exceptional += n.origin == Origin::Exceptional && n.type == NegativeType::MinusOne;
  }
  o.require(lines == 12 && exceptional == 9 && h.negative_classes.size() == 21, "hesse list is not 9 + 12");
  const auto dual = build_dual_hesse();
  const auto d = search_negative(dual, 10);
  for (const auto& n : d.negative_classes) {
    const bool allowed = (n.origin == Origin::Line && n.type == NegativeType::MinusTwo) || n.type == NegativeType::MinusOne;
    o.require(allowed, "dual hesse class that is neither a line nor a (-1)-class: " + to_string(n.cls));
  }
  const double secs = seconds_since(t0);
  o.require(secs < kSearchSeconds, "took " + std::to_string(secs) + " s");
  if (o.pass)
    o.detail = "hesse: 9 exceptional + 12 lines; dual hesse: lines and " + std::to_string(d.search_classes_total) +
               " (-1)-classes; " + std::to_string(secs) + " s";
  return o;
}

Outcome bnc_values() {
  Outcome o;
  const auto check = [&](const Configuration& cfg, std::int64_t b, const std::string& name) {
    const auto r = bnc_bound(cfg);
    std::int64_t least = 0;
    for (const auto& n : r.negative_classes) least = std::min(least, n.certificate.self_intersection);
    o.require(r.b == b, name + " gives " + std::to_string(r.b));
    o.require(least == b, name + " minimum over its classes is " + std::to_string(least));
  };
  check(build_hesse_torsion(3), -2, "hesse_torsion(3)");
  check(build_hesse_torsion(4), -7, "hesse_torsion(4)");
  check(build_hesse_torsion(5), -16, "hesse_torsion(5)");
  const std::array<std::pair<int, std::int64_t>, 4> cubic{{{5, -1}, {9, -1}, {10, -1}, {12, -3}}};
  for (const auto& [s, b] : cubic) check(build_very_general_cubic(s), b, "cubic(" + std::to_string(s) + ")");
  if (o.pass) o.detail = "-2, -7, -16 and -1, -1, -1, -3";
  return o;
}

Outcome property_suites() {
  Outcome o;
  const auto step = [&](const std::string& failure) { o.require(failure.empty(), failure); };
  step(props::cremona_involution_isometry(10000, 3));
  step(props::lattice_symmetry_parity(10000, 7));
  for (int m : {3, 4, 5, 12}) step(props::cyclo_field_axioms(m, 1000, 100 + m));
  step(props::orbit_nodes_minus_one(40));
  if (o.pass) o.detail = "10^4 lattice and Cremona classes, 10^3 field triples per order, orbit nodes to degree 40";
  return o;
}

Outcome fermat_exploration() {
  Outcome o;
  const std::vector<std::string> args{"classify", "search", "--kind", "fermat-zm", "--m", "4", "--max-degree", "6"};
  const auto t0 = std::chrono::steady_clock::now();
  int code = -1;
  const auto first = cli(args, &code);
  const double secs = seconds_since(t0);
  o.require(code == 0, "search exited with " + std::to_string(code));
  o.require(first == cli(args), "two runs differ");
  const auto j = nlohmann::json::parse(first);
  const auto lines = j["line_classes"].size();
  std::size_t search = 0;
  for (const auto& n : j["negative_classes"]) {
    const auto& c = n["certificate"];
    o.require(c.contains("self_intersection") && c["self_intersection"].get<std::int64_t>() < 0, "bad certificate");
    o.require(c["line_products"].size() == lines, "certificate misses line products");
    if (n["origin"] == "search") {
      ++search;
      o.require(c["violated"].empty(), "search certificate lists violations");
      o.require(c["sections"] == 1, "search class without a unique section");
    }
  }
  if (o.pass)
    o.detail = "b = " + std::to_string(j["b_value"].get<std::int64_t>()) + ", " + std::to_string(search) + " orbits (" +
               std::to_string(j["found_by_search_with_orbits"].get<std::size_t>()) + " classes), " +
               std::to_string(secs) + " s per run, byte-identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"lemma proof", lemma_proof},
      {"k=2 generalization", pair_generalization},
      {"giant covering", giants},
      {"Cremona trace table", trace_table},
      {"orbit diagram and hexal", orbit_and_hexal},
      {"configurations", configurations},
      {"desk-scale classification", desk_classification},
      {"bounded negativity values", bnc_values},
      {"property suites", property_suites},
      {"Fermat Z(4) exploration", fermat_exploration},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first << ": " << o.detail << std::endl;
  }
  return failed;
}
