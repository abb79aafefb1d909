#include "negcurve/cremona.hpp"

#include <algorithm>
#include <sstream>

namespace negcurve {

std::string CremonaMove::name() const {
  if (label > 0) return "phi" + std::to_string(label);
  return "cremona(" + std::to_string(triangle[0] + 1) + "," + std::to_string(triangle[1] + 1) + "," +
         std::to_string(triangle[2] + 1) + ")";
}

std::vector<CremonaMove> bound_moves(const Configuration& cfg) {
  std::vector<CremonaMove> out;
  for (std::size_t i = 0; i < cfg.triangles.size(); ++i)
    out.push_back({cfg.triangles[i], static_cast<int>(i) + 1});
  return out;
}

CremonaMove parse_move(const Configuration& cfg, std::string_view text) {
  std::string_view digits = text;
  if (digits.substr(0, 3) == "phi") digits.remove_prefix(3);
  const auto moves = bound_moves(cfg);
  for (const auto& m : moves)
    if (digits == std::to_string(m.label)) return m;
  throw std::invalid_argument("unknown Cremona move '" + std::string(text) + "'");
}

std::vector<TraceRow> trace(const DivisorClass& seed, const std::vector<CremonaMove>& moves) {
  std::vector<TraceRow> rows{{std::nullopt, seed}};
  for (const auto& m : moves) rows.push_back({m, apply(rows.back().cls, m)});
  return rows;
}

std::string trace_csv(const std::vector<TraceRow>& rows) {
  std::ostringstream out;
  out << "move,d";
  const int s = rows.empty() ? 0 : rows.front().cls.points();
  for (int i = 1; i <= s; ++i) out << ",k" << i;
  out << '\n';
  for (const auto& r : rows) {
    out << (r.move ? r.move->name() : "") << ',' << r.cls.degree;
    for (int i = 0; i < r.cls.points(); ++i) out << ',' << r.cls.mults(i);
    out << '\n';
  }
  return out.str();
}

NotMinusOneClass::NotMinusOneClass(const DivisorClass& c, std::int64_t self, std::int64_t canon)
    : std::invalid_argument("orbit seed " + to_string(c) + " is not a (-1)-class: C^2 = " +
                            std::to_string(self) + ", C.K = " + std::to_string(canon)),
      cls(c),
      self_intersection(self),
      canonical_degree(canon) {}

std::optional<int> OrbitGraph::find(const DivisorClass& c) const {
  if (auto it = index.find(c); it != index.end()) return it->second;
  return std::nullopt;
}

std::vector<int> OrbitGraph::parents(int id) const {
  std::vector<int> out;
  for (const auto& e : edges)
    if (e.to == id) out.push_back(e.from);
  return out;
}

int OrbitGraph::max_depth() const {
  int d = -1;
  for (const auto& n : nodes) d = std::max(d, n.depth);
  return d;
}

OrbitGraph orbit(const Configuration& cfg, const std::vector<DivisorClass>& seeds,
                 const OrbitOptions& options) {
  const auto moves = bound_moves(cfg);
  if (moves.empty()) throw std::invalid_argument("configuration has no Cremona triangles");

  OrbitGraph g;
  std::vector<std::vector<int>> incoming;
  for (const auto& s : seeds) {
    if (s.points() != cfg.s) throw DimensionError("orbit seed has the wrong number of points");
    const auto self = self_intersection(s);
    const auto canon = canonical_degree(s);
    if (self != -1 || canon != -1) throw NotMinusOneClass(s, self, canon);
    if (g.find(s)) continue;
    g.index.emplace(s, static_cast<int>(g.nodes.size()));
    g.seeds.push_back(static_cast<int>(g.nodes.size()));
    g.nodes.push_back({s, 0});
    incoming.emplace_back();
  }

  std::set<DivisorClass> hits;
  for (std::size_t u = 0; u < g.nodes.size(); ++u) {
    const int depth = g.nodes[u].depth;
    if (depth >= options.max_depth) continue;
    for (const auto& mv : moves) {
      if (options.forbid_backtrack &&
          std::find(incoming[u].begin(), incoming[u].end(), mv.label) != incoming[u].end())
        continue;
      DivisorClass child = apply(g.nodes[u].cls, mv);
      if (child == g.nodes[u].cls) continue;
      if (child.degree <= 0) {
        if (exceptional_index(child) >= 0) hits.insert(child);
        continue;
      }
      if (child.degree > options.max_degree) continue;
      int to;
      if (auto known = g.find(child)) {
        to = *known;
        if (g.nodes[to].depth != depth + 1) continue;
      } else {
        to = static_cast<int>(g.nodes.size());
        g.index.emplace(child, to);
        g.nodes.push_back({std::move(child), depth + 1});
        incoming.emplace_back();
      }
      g.edges.push_back({static_cast<int>(u), to, mv.label});
      incoming[to].push_back(mv.label);
    }
  }
  g.exceptional_hits.assign(hits.begin(), hits.end());
  return g;
}

std::vector<std::vector<std::int64_t>> hexal(const OrbitGraph& g, int depth) {
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<int> position(g.nodes.size(), -1);
  for (int r = 0; r <= depth; ++r) {
    std::vector<int> row;
    for (std::size_t id = 0; id < g.nodes.size(); ++id)
      if (g.nodes[id].depth == r) row.push_back(static_cast<int>(id));
    if (row.empty()) break;
    if (r > 0) {
      struct Key {
        std::int64_t sum = 0;
        std::int64_t count = 0;
        int label = 0;
      };
      std::vector<Key> keys(g.nodes.size());
      for (const auto& e : g.edges) {
        if (g.nodes[e.to].depth != r) continue;
        Key& k = keys[e.to];
        k.sum += position[e.from];
        ++k.count;
        k.label = k.count == 1 ? e.label : std::min(k.label, e.label);
      }
      std::sort(row.begin(), row.end(), [&](int a, int b) {
        const Key& ka = keys[a];
        const Key& kb = keys[b];
        const std::int64_t lhs = ka.sum * kb.count;
        const std::int64_t rhs = kb.sum * ka.count;
        if (lhs != rhs) return lhs < rhs;
        if (ka.label != kb.label) return ka.label < kb.label;
        return g.nodes[a].cls < g.nodes[b].cls;
      });
    }
    std::vector<std::int64_t> degrees;
    for (std::size_t i = 0; i < row.size(); ++i) {
      position[row[i]] = static_cast<int>(i);
      degrees.push_back(g.nodes[row[i]].cls.degree);
    }
    rows.push_back(std::move(degrees));
  }
  return rows;
}

std::string hexal_csv(const std::vector<std::vector<std::int64_t>>& rows) {
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
  return out.str();
}

std::string to_dot(const OrbitGraph& g) {
  std::ostringstream out;
  out << "digraph cremona_orbit {\n";
  for (std::size_t id = 0; id < g.nodes.size(); ++id)
    out << "  n" << id << " [label=\"" << g.nodes[id].cls.degree << "\", tooltip=\""
        << to_string(g.nodes[id].cls) << "\"];\n";
  for (const auto& e : g.edges)
    out << "  n" << e.from << " -> n" << e.to << " [label=\"phi" << e.label << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace negcurve
