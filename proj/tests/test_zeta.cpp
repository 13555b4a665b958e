#include <random>
#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "knotzeta/alexander.hpp"
#include "knotzeta/error.hpp"
#include "knotzeta/zeta.hpp"
#include "oracles.hpp"

using namespace knotzeta;

namespace {

const QPoly t = QPoly::t();
const QPoly one = QPoly::one();

ArcGraph cut_graph(const std::string& name, int arc) { return build_arc_graph(cut(test_corpus::get(name), {ArcId{arc}})); }

KnotDiagram mirror_signs(const KnotDiagram& d) {
  auto xs = d.crossings();
  for (auto& x : xs) x.sign = x.sign == Sign::positive ? Sign::negative : Sign::positive;
  return KnotDiagram(d.n_arcs(), xs);
}

std::set<std::vector<int>> as_set(const std::vector<Cycle>& cycles) {
  std::set<std::vector<int>> s;
  for (const auto& c : cycles) s.insert(c.edges);
  return s;
}

}  // namespace

TEST_CASE("prime cycles of small graphs") {
  const auto g = cut_graph("trefoil", 1);
  const auto primes = prime_cycles(g, 6);
  REQUIRE(primes.size() == 1);
  CHECK(primes[0].length() == 2);
  const auto& s = cut(test_corpus::get("trefoil"), {ArcId{1}}).strands().front();
  for (int e : primes[0].edges) {
    CHECK(g.edges()[e].from != s.initial);
    CHECK(g.edges()[e].from != s.terminal);
  }

  CHECK(prime_cycles(ArcGraph({"a"}, {}), 5).empty());

  const auto uncut = prime_cycles(build_arc_graph(test_corpus::get("trefoil")), 3);
  int len2 = 0, len3 = 0;
  for (const auto& c : uncut) {
    len2 += c.length() == 2;
    len3 += c.length() == 3;
  }
  CHECK(len2 == 3);
  CHECK(len3 == 2);
  CHECK(uncut.size() == 5);
  CHECK_THROWS_AS(prime_cycles(g, 0), PreconditionError);
}

TEST_CASE("property: prime cycles match exhaustive search") {
  for (const auto& [name, d] : test_corpus::all()) {
    CAPTURE(name);
    const auto g = build_arc_graph(d);
    CHECK(as_set(prime_cycles(g, 6)) == oracle::brute_prime_cycles(g, 6));
  }
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    std::vector<std::string> names(n, "v");
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (rng() % 2) edges.push_back({a, b, WeightLabel::T1, 0});
      }
    }
    const ArcGraph g(names, edges);
    const auto fast = prime_cycles(g, 5);
    CHECK(as_set(fast) == oracle::brute_prime_cycles(g, 5));
    for (const auto& c : fast) CHECK(is_primitive_closed_walk(g, c.edges));
  }
}

TEST_CASE("primitive closed walks") {
  const auto g = build_arc_graph(test_corpus::get("trefoil"));
  const auto p = prime_cycles(g, 2);
  REQUIRE_FALSE(p.empty());
  auto doubled = p[0].edges;
  doubled.insert(doubled.end(), p[0].edges.begin(), p[0].edges.end());
  CHECK_FALSE(is_primitive_closed_walk(g, doubled));
  CHECK(is_primitive_closed_walk(g, p[0].edges));
  CHECK_FALSE(is_primitive_closed_walk(g, {p[0].edges[0]}));
}

TEST_CASE("trace identity") {
  const auto g = cut_graph("trefoil", 1);
  const auto w = edge_weights(g, alexander_spec());
  const auto wm = weight_matrix(g, w);
  CHECK(trace(wm * wm) == QPoly(Rational(2)) * t * (one - t));
  CHECK(closed_walk_sums(g, w, 2)[2] == trace(wm * wm));
  CHECK(trace_identity_check(g, w, 6).passed());
  const auto uncut = build_arc_graph(test_corpus::get("trefoil"));
  CHECK(trace_identity_check(uncut, edge_weights(uncut, alexander_spec()), 6).passed());
  CHECK(trace(weight_matrix(uncut, edge_weights(uncut, alexander_spec()))).is_zero());
  const auto kink = build_arc_graph(test_corpus::get("unknot_kinked"));
  QPoly loops;
  for (std::size_t e = 0; e < kink.edges().size(); ++e) {
    if (kink.edges()[e].from == kink.edges()[e].to) loops += alexander_spec()[static_cast<int>(kink.edges()[e].label)];
  }
  CHECK(trace(weight_matrix(kink, edge_weights(kink, alexander_spec()))) == loops);
}

TEST_CASE("euler product") {
  const auto g = cut_graph("trefoil", 1);
  const auto w = edge_weights(g, alexander_spec());
  for (int len = 2; len <= 10; ++len) {
    CHECK(zeta_partial_product(g, evaluate_weights(w, Rational(1, 2)), len).value == Rational(4, 3));
  }
  CHECK(euler_check(g, w, Rational(1, 2), 40).passed());
  CHECK(zeta_partial_product(ArcGraph({"a", "b"}, {{0, 1, WeightLabel::T1, 0}}), {Rational(5)}, 10).value ==
        Rational(1));
  CHECK(euler_check(cut_graph("figure_eight", 4), edge_weights(cut_graph("figure_eight", 4), alexander_spec()),
                    Rational(1, 10), 40)
            .status == Status::skipped);
}

TEST_CASE("property: partial Euler products grow with the horizon for positive knots") {
  for (const auto& d : {test_corpus::get("trefoil"), mirror_signs(test_corpus::get("5_1"))}) {
    const auto g = build_arc_graph(cut(d, {ArcId{1}}));
    const auto w = evaluate_weights(edge_weights(g, alexander_spec()), Rational(1, 2));
    Rational previous = 1;
    for (int len = 1; len <= 14; ++len) {
      const Rational value = zeta_partial_product(g, w, len).value;
      CHECK(value >= previous);
      previous = value;
    }
  }
}

TEST_CASE("determinant formula") {
  const auto g = cut_graph("trefoil", 1);
  const auto w = edge_weights(g, alexander_spec());
  CHECK(canonicalize(det(identity_minus(weight_matrix(g, w)))).poly == t * t - t + one);
  CHECK(determinant_formula_check(g, w, Rational(1, 2)).passed());
  const ArcGraph empty({"a"}, {});
  CHECK(determinant_formula_check(empty, {}, Rational(1, 2)).passed());
  const auto fig = cut_graph("figure_eight", 1);
  CHECK_FALSE(determinant_formula_check(fig, edge_weights(fig, alexander_spec()), Rational(2, 3)).failed());
}

TEST_CASE("path sums") {
  const auto tre = cut(test_corpus::get("trefoil"), {ArcId{1}});
  CHECK(path_sum_check(tre, {Rational(1, 2)}).passed());
  CHECK(path_sum_check(tre, {Rational(1)}).passed());
  CHECK(path_sum_check(cut(test_corpus::get("figure_eight"), {ArcId{1}}), {Rational(2, 3)}).passed());
  const auto pts = sample_points(0, 20);
  CHECK(pts.size() == 20);
  CHECK(std::set<Rational>(pts.begin(), pts.end()).size() == 20);
  CHECK(pts == sample_points(0, 20));
  for (const auto& p : pts) CHECK_FALSE(is_zero(p));
}

TEST_CASE("composition") {
  const auto tre = cut(test_corpus::get("trefoil"), {ArcId{1}});
  const auto fig = cut(test_corpus::get("figure_eight"), {ArcId{1}});
  const QPoly delta = t * t - t + one;
  CHECK(canonicalize(zeta_determinant(build_arc_graph(compose(tre, tre)))).poly == delta * delta);
  CHECK(composition_check(tre, tre).passed());
  CHECK(composition_check(tre, fig).passed());
  const auto strand = cut(KnotDiagram::unknot(), {ArcId{1}});
  CHECK(composition_check(tre, strand).passed());
  CHECK(canonicalize(zeta_determinant(build_arc_graph(compose(tre, strand)))).poly == delta);
}

TEST_CASE("cabling") {
  const auto tre = cut(test_corpus::get("trefoil"), {ArcId{1}});
  CHECK(cabling_check(tre, 1, {Rational(1, 2)}).passed());
  CHECK(cabling_check(tre, 2, {Rational(1, 2)}).passed());
  CHECK(cabling_check(tre, 3, {Rational(2, 3)}).passed());
}
