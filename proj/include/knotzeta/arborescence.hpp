#pragma once

#include <cstddef>
#include <vector>

#include "knotzeta/arc_graph.hpp"
#include "knotzeta/knot_model.hpp"
#include "knotzeta/verdict.hpp"

namespace knotzeta {

inline constexpr std::size_t default_arborescence_cap = 1'000'000;

/// One out-edge per non-root vertex, no cycles, every path ends at a root.
struct Arborescence {
  /// chosen[v] is the edge id leaving v, or -1 for a root.
  std::vector<int> chosen;
  int go_straights = 0;  // T-labeled edges
  int jumps = 0;         // S-labeled edges

  std::vector<int> edges() const;
};

/// All arborescences rooted at `roots`, ordered lexicographically by the
/// chosen edge of each vertex in increasing vertex order. Throws LimitError
/// once more than `cap` have been found.
std::vector<Arborescence> enumerate_arborescences(const ArcGraph& g, const std::vector<int>& roots,
                                                  std::size_t cap = default_arborescence_cap);

/// Sum over arborescences of the product of their edge weights.
template <class T>
T tree_polynomial(const ArcGraph& g, const std::vector<T>& weights, const std::vector<int>& roots,
                  std::size_t cap = default_arborescence_cap) {
  T sum{};
  for (const auto& a : enumerate_arborescences(g, roots, cap)) {
    T term = RingTraits<T>::one();
    for (int e : a.edges()) term *= weights[e];
    sum += term;
  }
  return sum;
}

/// det of the rooted Laplacian minor against the arborescence sum.
template <class T>
Verdict matrix_tree_check(const ArcGraph& g, const std::vector<T>& weights, const std::vector<int>& roots,
                          std::size_t cap = default_arborescence_cap) {
  const T lhs = det(laplacian(g, weights, roots));
  const T rhs = tree_polynomial(g, weights, roots, cap);
  return compare("matrix-tree", lhs == rhs, to_string(lhs), to_string(rhs));
}

/// Sum of (-1)^go_straights * 2^jumps over arborescences of the uncut arc
/// graph rooted at `root`. Equals +-det(K) for a knot.
Integer determinant_via_trees(const KnotDiagram& d, ArcId root);

}  // namespace knotzeta
