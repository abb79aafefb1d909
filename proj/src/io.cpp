#include "negcurve/io.hpp"

namespace negcurve {

namespace {

template <typename Range>
Json one_based(const Range& r) {
  Json out = Json::array();
  for (int v : r) out.push_back(v + 1);
  return out;
}

Json rationals(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json tight_json(const VertexCert& v) {
  // nonnegativity constraints keep their offset past the rows
  return one_based(v.tight);
}

Json certificate_json(const Certificate& c) {
  return {{"self_intersection", c.self_intersection},
          {"canonical_degree", c.canonical_degree},
          {"genus", c.genus},
          {"line_products", c.line_products},
          {"violated", c.violated},
          {"sections", c.sections ? Json(*c.sections) : Json(nullptr)}};
}

Json class_list(const std::vector<DivisorClass>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(to_string(c));
  return out;
}

}  // namespace

Json to_json(const Configuration& cfg) {
  Json j;
  j["kind"] = to_string(cfg.kind);
  j["m"] = cfg.m;
  j["s"] = cfg.s;
  j["order"] = cfg.order;
  Json pts = Json::array();
  for (const auto& p : cfg.points) {
    Json row = Json::array();
    for (const auto& c : p.coords) row.push_back(to_string(c));
    pts.push_back(row);
  }
  j["points"] = pts;
  Json labels = Json::array();
  for (const auto& g : cfg.group_labels) labels.push_back({g[0], g[1]});
  j["group_labels"] = labels;
  Json triples = Json::array();
  for (const auto& t : cfg.collinear_triples) triples.push_back(one_based(t));
  j["collinear_triples"] = triples;
  Json lines = Json::array();
  for (const auto& l : cfg.lines) lines.push_back(one_based(l));
  j["lines"] = lines;
  Json pairs = Json::array();
  for (const auto& p : cfg.special_pairs) pairs.push_back(one_based(p));
  j["special_pairs"] = pairs;
  Json tris = Json::array();
  for (const auto& t : cfg.triangles) tris.push_back(one_based(t));
  j["triangles"] = tris;
  return j;
}

Json to_json(const VertexCert& v) {
  return {{"point", rationals(v.point)}, {"tight", tight_json(v)}};
}

Json lemma_json(int k, const ConstraintSystem& sys, const SumSquaresMax& m) {
  Json argmax = Json::array();
  for (const auto& v : m.argmax) argmax.push_back(rationals(v.point));
  Json certs = Json::array();
  for (const auto& v : m.argmax) certs.push_back(to_json(v));
  Json j;
  j["k"] = k;
  j["dimension"] = sys.n;
  j["num_rows"] = sys.num_rows();
  j["max_value"] = to_string(m.value);
  j["argmax"] = argmax;
  j["argmax_certificates"] = certs;
  j["num_vertices"] = m.num_vertices;
  j["method"] = "exact";
  j["refutation"] = m.value > 1 ? to_json(m.argmax.front()) : Json(nullptr);
  j["status"] = m.value <= 1 ? "proved <= 1 by vertex enumeration" : "refuted by vertex enumeration";
  return j;
}

Json to_json(const ProbeReport& p) {
  Json argmax = Json::array();
  for (const auto& v : p.argmax) argmax.push_back(rationals(v.point));
  Json j;
  j["k"] = p.k;
  j["dimension"] = p.dimension;
  j["num_rows"] = p.num_rows;
  j["max_value"] = to_string(p.value);
  j["argmax"] = argmax;
  j["num_vertices"] = p.num_vertices;
  j["method"] = p.method;
  j["refutation"] = p.refutation ? to_json(*p.refutation) : Json(nullptr);
  j["lower_bound"] = p.lower_bound_only;
  j["solves"] = p.solves;
  j["status"] = p.status;
  return j;
}

Json to_json(const GiantCover& g) {
  Json rows = Json::array();
  for (const auto& w : g.witnesses)
    rows.push_back({{"giants", w.giants}, {"cover", w.cover ? Json(*w.cover) : Json(nullptr)}});
  return {{"all_covered", g.all_covered}, {"choices", g.witnesses.size()}, {"witnesses", rows}};
}

Json to_json(const NegativeClass& n) {
  return {{"class", to_string(n.cls)},
          {"type", to_string(n.type)},
          {"origin", to_string(n.origin)},
          {"orbit_size", n.orbit_size},
          {"certificate", certificate_json(n.certificate)}};
}

Json to_json(const ClassificationReport& r) {
  Json classes = Json::array();
  std::size_t from_search = 0;
  for (const auto& n : r.negative_classes) {
    classes.push_back(to_json(n));
    if (n.origin == Origin::Search) ++from_search;
  }
  Json j;
  j["kind"] = to_string(r.kind);
  j["m"] = r.m;
  j["s"] = r.s;
  j["max_degree"] = r.d_max;
  j["assumption"] = r.assumption;
  j["b_value"] = r.b_value;
  j["effectivity"] = r.effectivity;
  j["searched"] = r.searched;
  j["excluded_not_effective"] = r.excluded_not_effective;
  j["excluded_moving"] = r.excluded_moving;
  j["excluded_extra_multiplicity"] = r.excluded_extra_multiplicity;
  j["symmetry_order"] = r.symmetry_order;
  j["found_by_search"] = from_search;
  j["found_by_search_with_orbits"] = r.search_classes_total;
  j["line_classes"] = class_list(r.line_classes);
  j["negative_classes"] = classes;
  return j;
}

Json to_json(const BncReport& b, const Configuration& cfg) {
  Json classes = Json::array();
  for (const auto& n : b.negative_classes) classes.push_back(to_json(n));
  Json j;
  j["kind"] = to_string(cfg.kind);
  j["m"] = cfg.m;
  j["s"] = cfg.s;
  j["b"] = b.b;
  j["formula"] = b.formula;
  j["formula_only"] = b.formula_only;
  j["line_classes"] = class_list(b.line_classes);
  j["negative_classes"] = classes;
  return j;
}

Json to_json(const OrbitGraph& g) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    nodes.push_back({{"id", i}, {"class", to_string(g.nodes[i].cls)}, {"degree", g.nodes[i].cls.degree},
                     {"depth", g.nodes[i].depth}});
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"move", "phi" + std::to_string(e.label)}});
  Json hits = Json::array();
  for (const auto& h : g.exceptional_hits) hits.push_back(to_string(h));
  Json seeds = Json::array();
  for (int s : g.seeds) seeds.push_back(s);
  return {{"seeds", seeds}, {"nodes", nodes}, {"edges", edges}, {"exceptional_hits", hits}};
}

}  // namespace negcurve
