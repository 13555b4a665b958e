#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "knotzeta/arborescence.hpp"
#include "knotzeta/arc_graph.hpp"
#include "knotzeta/error.hpp"
#include "oracles.hpp"

using namespace knotzeta;

namespace {

const QPoly t = QPoly::t();
const QPoly one = QPoly::one();

struct RandomGraph {
  ArcGraph graph;
  std::vector<Rational> weights;
  std::vector<int> roots;
};

RandomGraph random_graph(std::mt19937_64& rng, int max_vertices) {
  const int n = 1 + static_cast<int>(rng() % max_vertices);
  std::vector<std::string> names;
  for (int v = 0; v < n; ++v) names.push_back(std::to_string(v + 1));
  std::vector<Edge> edges;
  std::vector<Rational> weights;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (rng() % 3 == 0) continue;
      edges.push_back({a, b, static_cast<WeightLabel>(rng() % 4), 0});
      Rational w = oracle::random_rational(rng);
      if (is_zero(w)) w = 1;
      weights.push_back(w);
    }
  }
  std::vector<int> roots;
  while (roots.empty()) {
    for (int v = 0; v < n; ++v) {
      if (rng() % 3 == 0) roots.push_back(v);
    }
  }
  return {ArcGraph(names, edges), weights, roots};
}

}  // namespace

TEST_CASE("trefoil arc graph") {
  const auto g = build_arc_graph(test_corpus::get("trefoil"));
  CHECK(g.n_vertices() == 3);
  REQUIRE(g.edges().size() == 6);
  for (int v = 0; v < 3; ++v) {
    const auto straight = g.edge_between(v, (v + 1) % 3);
    const auto jump = g.edge_between(v, (v + 2) % 3);
    REQUIRE(straight.has_value());
    REQUIRE(jump.has_value());
    CHECK(g.edges()[*straight].label == WeightLabel::T1);
    CHECK(g.edges()[*jump].label == WeightLabel::S1);
    CHECK(g.out_edges(v).size() == 2);
  }
  const auto w = weight_matrix(g, edge_weights(g, alexander_spec()));
  CHECK(w(0, 1) == t);
  CHECK(w(0, 2) == one - t);
  CHECK(w(0, 0).is_zero());

  const std::vector<Rational> ones(g.edges().size(), Rational(1));
  const auto adj = weight_matrix(g, ones);
  for (int v = 0; v < 3; ++v) CHECK(adj(v, 0) + adj(v, 1) + adj(v, 2) == Rational(2));
}

TEST_CASE("cut graph and unknot graph") {
  const auto tc = cut(test_corpus::get("trefoil"), {ArcId{1}});
  const auto g = build_arc_graph(tc);
  CHECK(g.n_vertices() == 4);
  CHECK(g.out_edges(tc.strands().front().terminal).empty());
  const auto u = build_arc_graph(KnotDiagram::unknot());
  CHECK(u.n_vertices() == 1);
  CHECK(u.edges().empty());
  const auto w = weight_matrix(u, std::vector<Rational>{});
  CHECK(w.rows() == 1);
  CHECK(is_zero(w(0, 0)));
}

TEST_CASE("duplicate ordered pairs are rejected") {
  CHECK_THROWS_AS(ArcGraph({"a", "b"}, {{0, 1, WeightLabel::T1, 0}, {0, 1, WeightLabel::S1, 1}}), DiagramError);
}

TEST_CASE("weight specs") {
  const auto spec = alexander_spec();
  const std::array<Rational, 4> at_minus_one{Rational(-1), Rational(-1), Rational(2), Rational(2)};
  const std::array<Rational, 4> at_one{Rational(1), Rational(1), Rational(0), Rational(0)};
  for (int i = 0; i < 4; ++i) {
    CHECK(eval(spec[i], Rational(-1)) == at_minus_one[i]);
    CHECK(eval(spec[i], Rational(1)) == at_one[i]);
  }
  CHECK(spec[0] + spec[2] == one);
  CHECK(spec[1] + spec[3] == one);
  const auto sq = alexander_spec_power(2);
  CHECK(sq[0] == t * t);
  CHECK(sq[2] == one - t * t);
}

TEST_CASE("property: every arc graph row sums to one under the Alexander weights") {
  for (const auto& [name, d] : test_corpus::all()) {
    CAPTURE(name);
    const auto g = build_arc_graph(d);
    const auto w = weight_matrix(g, edge_weights(g, alexander_spec()));
    for (std::size_t v = 0; v < g.n_vertices(); ++v) {
      if (g.out_edges(static_cast<int>(v)).empty()) continue;
      QPoly row;
      for (std::size_t j = 0; j < g.n_vertices(); ++j) row += w(v, j);
      CHECK(row == one);
    }
  }
}

TEST_CASE("laplacian minors") {
  const auto g = build_arc_graph(test_corpus::get("trefoil"));
  const auto l = laplacian(g, edge_weights(g, alexander_spec()), {0});
  REQUIRE(l.rows() == 2);
  CHECK(l(0, 0) == one);
  CHECK(l(0, 1) == -t);
  CHECK(l(1, 0) == t - one);
  CHECK(l(1, 1) == one);
  const std::vector<Rational> ones(g.edges().size(), Rational(1));
  const auto l1 = laplacian(g, ones, {0});
  CHECK(l1(0, 0) == Rational(2));
  CHECK(l1(0, 1) == Rational(-1));
  CHECK(laplacian(g, ones, {0, 1, 2}).rows() == 0);
  CHECK_THROWS_AS(laplacian(g, ones, {3}), PreconditionError);
}

TEST_CASE("trefoil arborescences") {
  const auto g = build_arc_graph(test_corpus::get("trefoil"));
  const auto trees = enumerate_arborescences(g, {0});
  REQUIRE(trees.size() == 3);
  std::vector<std::vector<std::pair<int, int>>> shapes;
  for (const auto& a : trees) {
    std::vector<std::pair<int, int>> s;
    for (int e : a.edges()) s.emplace_back(g.edges()[e].from, g.edges()[e].to);
    std::sort(s.begin(), s.end());
    shapes.push_back(s);
  }
  std::sort(shapes.begin(), shapes.end());
  const std::vector<std::vector<std::pair<int, int>>> expected{
      {{1, 0}, {2, 0}}, {{1, 0}, {2, 1}}, {{1, 2}, {2, 0}}};
  CHECK(shapes == expected);
  CHECK(tree_polynomial(g, edge_weights(g, alexander_spec()), {0}) == t * t - t + one);
  CHECK(tree_polynomial(g, std::vector<Rational>(6, Rational(1)), {0}) == Rational(3));
  CHECK(matrix_tree_check(g, edge_weights(g, alexander_spec()), {0}).passed());
  CHECK_THROWS_AS(enumerate_arborescences(g, {0}, 2), LimitError);
  CHECK_THROWS_AS(enumerate_arborescences(g, {}), PreconditionError);
}

TEST_CASE("degenerate arborescence cases") {
  const ArcGraph single({"a"}, {});
  CHECK(enumerate_arborescences(single, {0}).size() == 1);
  const ArcGraph pair({"a", "b"}, {});
  CHECK(enumerate_arborescences(pair, {0}).empty());
  const std::vector<Rational> none;
  CHECK(is_zero(tree_polynomial(pair, none, {0})));
  CHECK(matrix_tree_check(pair, none, {0}).passed());
}

TEST_CASE("determinant from signed tree counts") {
  CHECK(determinant_via_trees(test_corpus::get("trefoil"), ArcId{1}) == 3);
  CHECK(determinant_via_trees(KnotDiagram::unknot(), ArcId{1}) == 1);
  const Integer fig = determinant_via_trees(test_corpus::get("figure_eight"), ArcId{1});
  CHECK(abs(fig) == 5);
}

TEST_CASE("property: directed matrix-tree theorem against brute force") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const auto [g, w, roots] = random_graph(rng, 5);
    const auto brute = oracle::brute_arborescences(g, roots);
    auto fast = enumerate_arborescences(g, roots);
    std::vector<std::vector<int>> fast_sets;
    for (const auto& a : fast) {
      auto e = a.edges();
      std::sort(e.begin(), e.end());
      fast_sets.push_back(e);
    }
    std::sort(fast_sets.begin(), fast_sets.end());
    auto brute_sorted = brute;
    std::sort(brute_sorted.begin(), brute_sorted.end());
    CHECK(fast_sets == brute_sorted);

    Rational sum = 0;
    for (const auto& ids : brute) {
      Rational term = 1;
      for (int e : ids) term *= w[e];
      sum += term;
    }
    CHECK(oracle::leibniz_det(laplacian(g, w, roots), Rational(1)) == sum);
    CHECK(det(laplacian(g, w, roots)) == sum);
  }
}

TEST_CASE("property: tree polynomial equals the Laplacian minor on corpus graphs") {
  for (const auto& [name, d] : test_corpus::all()) {
    CAPTURE(name);
    const auto g = build_arc_graph(d);
    const auto w = edge_weights(g, alexander_spec());
    for (int r = 0; r < static_cast<int>(g.n_vertices()); ++r) CHECK(matrix_tree_check(g, w, {r}).passed());
  }
}
