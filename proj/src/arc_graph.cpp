#include "knotzeta/arc_graph.hpp"

#include <map>
#include <utility>

#include "knotzeta/error.hpp"

namespace knotzeta {

std::string_view to_string(WeightLabel label) {
  switch (label) {
    case WeightLabel::T1: return "T1";
    case WeightLabel::T2: return "T2";
    case WeightLabel::S1: return "S1";
    case WeightLabel::S2: return "S2";
  }
  return "?";
}

ArcGraph::ArcGraph(std::vector<std::string> vertex_names, std::vector<Edge> edges, std::vector<StrandEnds> strands)
    : names_(std::move(vertex_names)), edges_(std::move(edges)), strands_(std::move(strands)), out_(names_.size()) {
  const int n = static_cast<int>(names_.size());
  std::map<std::pair<int, int>, int> seen;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& edge = edges_[e];
    if (edge.from < 0 || edge.from >= n || edge.to < 0 || edge.to >= n) {
      throw PreconditionError("edge endpoint out of range");
    }
    auto [it, fresh] = seen.emplace(std::pair{edge.from, edge.to}, static_cast<int>(e));
    if (!fresh) {
      throw DiagramError("two edges from " + names_[edge.from] + " to " + names_[edge.to] +
                         " (crossings " + std::to_string(edges_[it->second].crossing + 1) + " and " +
                         std::to_string(edge.crossing + 1) + ")");
    }
    out_[edge.from].push_back(static_cast<int>(e));
  }
}

std::optional<int> ArcGraph::edge_between(int from, int to) const {
  for (int e : out_[from]) {
    if (edges_[e].to == to) return e;
  }
  return std::nullopt;
}

ArcGraph build_arc_graph(const Tangle& t) {
  std::vector<Edge> edges;
  for (std::size_t ci = 0; ci < t.crossings().size(); ++ci) {
    const auto& c = t.crossings()[ci];
    const bool positive = c.sign == Sign::positive;
    const int id = static_cast<int>(ci);
    edges.push_back({c.under_in, c.under_out, positive ? WeightLabel::T1 : WeightLabel::T2, id});
    edges.push_back({c.under_in, c.over, positive ? WeightLabel::S1 : WeightLabel::S2, id});
  }
  return ArcGraph(t.arc_names(), std::move(edges), t.strands());
}

ArcGraph build_arc_graph(const KnotDiagram& d) { return build_arc_graph(as_tangle(d)); }

WeightSpec<QPoly> alexander_spec() { return alexander_spec_power(1); }

WeightSpec<QPoly> alexander_spec_power(int n) {
  const QPoly one = QPoly::one();
  const QPoly up = QPoly::monomial(Rational(1), n);
  const QPoly down = QPoly::monomial(Rational(1), -n);
  return {up, down, one - up, one - down};
}

int vertex_index(const ArcGraph& g, std::string_view name) {
  for (std::size_t v = 0; v < g.n_vertices(); ++v) {
    if (g.vertex_names()[v] == name) return static_cast<int>(v);
  }
  throw PreconditionError("no vertex named " + std::string(name));
}

}  // namespace knotzeta
