#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotzeta/knot_model.hpp"
#include "knotzeta/laurent.hpp"
#include "knotzeta/matrix.hpp"

namespace knotzeta {

/// T1/T2: go-under at a positive/negative crossing. S1/S2: jump-up.
enum class WeightLabel : int { T1 = 0, T2 = 1, S1 = 2, S2 = 3 };

std::string_view to_string(WeightLabel label);
inline bool is_go_straight(WeightLabel l) { return l == WeightLabel::T1 || l == WeightLabel::T2; }

struct Edge {
  int from = 0;
  int to = 0;
  WeightLabel label = WeightLabel::T1;
  int crossing = 0;  // 0-based crossing index in the source tangle
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted directed graph on the arcs of a tangle. Vertices are 0-based.
/// At most one edge per ordered pair; loops are allowed.
class ArcGraph {
 public:
  ArcGraph(std::vector<std::string> vertex_names, std::vector<Edge> edges, std::vector<StrandEnds> strands = {});

  std::size_t n_vertices() const noexcept { return names_.size(); }
  const std::vector<std::string>& vertex_names() const noexcept { return names_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<StrandEnds>& strands() const noexcept { return strands_; }
  /// Ids of edges leaving v, in increasing order.
  const std::vector<int>& out_edges(int v) const { return out_[v]; }
  std::optional<int> edge_between(int from, int to) const;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<StrandEnds> strands_;
  std::vector<std::vector<int>> out_;
};

/// Per crossing (over j, under_in i, under_out k): i -> k labeled T, i -> j labeled S.
/// Throws DiagramError when two crossings would produce the same ordered pair.
ArcGraph build_arc_graph(const Tangle& t);
ArcGraph build_arc_graph(const KnotDiagram& d);

/// Weight for each label, indexed by WeightLabel.
template <class T>
using WeightSpec = std::array<T, 4>;

/// {T1: t, T2: t^-1, S1: 1 - t, S2: 1 - t^-1}.
WeightSpec<QPoly> alexander_spec();
/// Same spec with t -> u^n, as used for comparing a diagram with its n-cable.
WeightSpec<QPoly> alexander_spec_power(int n);

template <class T>
std::vector<T> edge_weights(const ArcGraph& g, const WeightSpec<T>& spec) {
  std::vector<T> w;
  w.reserve(g.edges().size());
  for (const auto& e : g.edges()) w.push_back(spec[static_cast<int>(e.label)]);
  return w;
}

inline std::vector<Rational> evaluate_weights(const std::vector<QPoly>& w, const Rational& t0) {
  std::vector<Rational> out;
  out.reserve(w.size());
  for (const auto& p : w) out.push_back(eval(p, t0));
  return out;
}

/// W[i][j] = weight of the edge i -> j.
template <class T>
Matrix<T> weight_matrix(const ArcGraph& g, const std::vector<T>& weights) {
  if (weights.size() != g.edges().size()) throw PreconditionError("one weight per edge is required");
  Matrix<T> w(g.n_vertices(), g.n_vertices());
  for (std::size_t e = 0; e < weights.size(); ++e) w(g.edges()[e].from, g.edges()[e].to) = weights[e];
  return w;
}

/// L = D_out - W with the root rows and columns removed. A loop adds to the
/// out-degree and to W alike, so it cancels on the diagonal.
template <class T>
Matrix<T> laplacian(const ArcGraph& g, const std::vector<T>& weights, const std::vector<int>& roots) {
  for (int r : roots) {
    if (r < 0 || r >= static_cast<int>(g.n_vertices())) throw PreconditionError("unknown root vertex " + std::to_string(r));
  }
  Matrix<T> l(g.n_vertices(), g.n_vertices());
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& edge = g.edges()[e];
    l(edge.from, edge.from) += weights[e];
    l(edge.from, edge.to) -= weights[e];
  }
  std::vector<std::size_t> drop(roots.begin(), roots.end());
  return l.without(drop, drop);
}

/// I - W, the matrix whose determinant the zeta function inverts.
template <class T>
Matrix<T> identity_minus(const Matrix<T>& w) {
  return Matrix<T>::identity(w.rows(), RingTraits<T>::one()) - w;
}

/// Index of the vertex with the given name.
int vertex_index(const ArcGraph& g, std::string_view name);

}  // namespace knotzeta
