#include "knotzeta/arborescence.hpp"

#include "knotzeta/error.hpp"

namespace knotzeta {

std::vector<int> Arborescence::edges() const {
  std::vector<int> out;
  for (int e : chosen) {
    if (e >= 0) out.push_back(e);
  }
  return out;
}

namespace {

class Enumerator {
 public:
  Enumerator(const ArcGraph& g, const std::vector<int>& roots, std::size_t cap)
      : g_(g), cap_(cap), is_root_(g.n_vertices(), false), chosen_(g.n_vertices(), -1) {
    for (int r : roots) {
      if (r < 0 || r >= static_cast<int>(g.n_vertices())) throw PreconditionError("unknown root vertex");
      is_root_[r] = true;
    }
    for (std::size_t v = 0; v < g.n_vertices(); ++v) {
      if (!is_root_[v]) free_.push_back(static_cast<int>(v));
    }
  }

  std::vector<Arborescence> run() {
    descend(0);
    return std::move(found_);
  }

 private:
  // Following chosen edges from `to` would come back to `from`.
  bool closes_cycle(int from, int to) const {
    int v = to;
    while (true) {
      if (v == from) return true;
      if (is_root_[v] || chosen_[v] < 0) return false;
      v = g_.edges()[chosen_[v]].to;
    }
  }

  void descend(std::size_t depth) {
    if (depth == free_.size()) {
      Arborescence a;
      a.chosen = chosen_;
      for (int e : a.edges()) {
        if (is_go_straight(g_.edges()[e].label)) {
          ++a.go_straights;
        } else {
          ++a.jumps;
        }
      }
      if (found_.size() >= cap_) {
        throw LimitError("more than " + std::to_string(cap_) + " arborescences");
      }
      found_.push_back(std::move(a));
      return;
    }
    const int v = free_[depth];
    for (int e : g_.out_edges(v)) {
      if (closes_cycle(v, g_.edges()[e].to)) continue;
      chosen_[v] = e;
      descend(depth + 1);
      chosen_[v] = -1;
    }
  }

  const ArcGraph& g_;
  std::size_t cap_;
  std::vector<bool> is_root_;
  std::vector<int> chosen_;
  std::vector<int> free_;
  std::vector<Arborescence> found_;
};

}  // namespace

std::vector<Arborescence> enumerate_arborescences(const ArcGraph& g, const std::vector<int>& roots, std::size_t cap) {
  if (roots.empty()) throw PreconditionError("an arborescence needs at least one root");
  return Enumerator(g, roots, cap).run();
}

Integer determinant_via_trees(const KnotDiagram& d, ArcId root) {
  if (root.value < 1 || root.value > d.n_arcs()) throw PreconditionError("unknown arc " + std::to_string(root.value));
  const ArcGraph g = build_arc_graph(d);
  Integer sum = 0;
  for (const auto& a : enumerate_arborescences(g, {root.value - 1})) {
    Integer term = 1;
    term <<= a.jumps;
    if (a.go_straights % 2 != 0) term = -term;
    sum += term;
  }
  return sum;
}

}  // namespace knotzeta
