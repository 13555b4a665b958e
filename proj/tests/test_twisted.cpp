#include "corpus.hpp"
#include "doctest.h"
#include "knotzeta/alexander.hpp"
#include "knotzeta/error.hpp"
#include "knotzeta/twisted.hpp"
#include "oracles.hpp"

using namespace knotzeta;

namespace {

Representation dihedral(const std::string& name, std::uint32_t p) {
  const auto& d = test_corpus::get(name);
  return dihedral_representation(d, p, nonconstant_coloring(fox_colorings(d, p)));
}

}  // namespace

TEST_CASE("coloring spaces") {
  CHECK(fox_colorings(test_corpus::get("trefoil"), 3).dimension() == 2);
  CHECK(fox_colorings(KnotDiagram::unknot(), 5).dimension() == 1);
  CHECK(fox_colorings(test_corpus::get("figure_eight"), 5).dimension() == 2);
  CHECK(fox_colorings(test_corpus::get("figure_eight"), 3).dimension() == 1);
  CHECK(fox_colorings(test_corpus::get("5_2"), 7).dimension() == 2);
  CHECK_THROWS_AS(nonconstant_coloring(fox_colorings(test_corpus::get("trefoil"), 5)), PreconditionError);
}

TEST_CASE("property: colorings satisfy every crossing relation") {
  for (const auto& [name, d] : test_corpus::all()) {
    for (std::uint32_t p : {3U, 5U, 7U}) {
      CAPTURE(name);
      CAPTURE(p);
      const auto space = fox_colorings(d, p);
      const PrimeField f(p);
      for (const auto& c : space.basis) {
        for (const auto& x : d.crossings()) {
          CHECK(c[x.over.value - 1] * f(2) == c[x.under_in.value - 1] + c[x.under_out.value - 1]);
        }
      }
      const bool divides = knot_determinant(d) % p == 0;
      CHECK((space.dimension() > 1) == divides);
    }
  }
}

TEST_CASE("dihedral representations") {
  CHECK(least_prime_congruent_one(3) == 7);
  CHECK(least_prime_congruent_one(5) == 11);
  CHECK(least_prime_congruent_one(7) == 29);
  const auto& tre = test_corpus::get("trefoil");
  const PrimeField f3(3);
  const auto rho = dihedral_representation(tre, 3, {f3(0), f3(1), f3(2)});
  CHECK(rho.field.modulus() == 7);
  CHECK(rho.dim == 2);
  const PrimeField f7(7);
  CHECK(rho.images[1](0, 1) == f7(2));
  CHECK(rho.images[1](1, 0) == f7(4));
  CHECK(rho.images[0](0, 1) == f7(1));
  CHECK(verify_representation(wirtinger(tre), rho).passed());
  CHECK_THROWS_AS(dihedral_representation(tre, 3, {f3(1), f3(1), f3(1)}), PreconditionError);
  CHECK(dihedral("figure_eight", 5).field.modulus() == 11);
}

TEST_CASE("representation verification") {
  const auto p = wirtinger(test_corpus::get("trefoil"));
  CHECK(verify_representation(p, trivial_representation(3)).passed());
  CHECK(verify_representation(p, trivial_representation(3, 2, 7)).passed());
  CHECK(verify_representation(p, dihedral("trefoil", 3)).passed());

  Representation bad = trivial_representation(3, 2, 7);
  const PrimeField f7(7);
  bad.images[0](0, 1) = f7(1);
  const auto v = verify_representation(p, bad);
  CHECK(v.failed());
  CHECK(v.detail.find("violated relator") != std::string::npos);

  Representation singular = trivial_representation(3, 2, 7);
  singular.images[2](0, 0) = f7(0);
  CHECK_THROWS_AS(verify_representation(p, singular), PreconditionError);
  CHECK_THROWS_AS(verify_representation(p, trivial_representation(2)), PreconditionError);
}

TEST_CASE("twisted alexander matrix") {
  const auto& tre = test_corpus::get("trefoil");
  const auto p = wirtinger(tre);
  const auto rho = dihedral("trefoil", 3);
  const auto m = twisted_alexander_matrix(p, rho, p.relators.size() - 1);
  CHECK(m.rows() == 4);
  CHECK(m.cols() == 6);
  const PrimeField f7(7);
  for (std::size_t r = 0; r + 1 < p.relators.size(); ++r) {
    const std::size_t g = static_cast<std::size_t>(p.relator_arcs[r].value - 1);
    CHECK(m(2 * r, 2 * g) == FpPoly(f7(1)));
    CHECK(m(2 * r, 2 * g + 1).is_zero());
    CHECK(m(2 * r + 1, 2 * g).is_zero());
    CHECK(m(2 * r + 1, 2 * g + 1) == FpPoly(f7(1)));
  }

  const PrimeField q(default_field);
  const auto scalar = twisted_alexander_matrix(p, trivial_representation(3), std::nullopt);
  const auto fox = alexander_matrix(p);
  REQUIRE(scalar.rows() == fox.rows());
  for (std::size_t r = 0; r < fox.rows(); ++r) {
    for (std::size_t c = 0; c < fox.cols(); ++c) CHECK(scalar(r, c) == reduce_mod(fox(r, c), q));
  }
}

TEST_CASE("twisted polynomials") {
  const auto& tre = test_corpus::get("trefoil");
  const PrimeField q(default_field);
  const auto triv = twisted_alexander_polynomial(tre, trivial_representation(3));
  const FpPoly t = FpPoly::monomial(q(1), 1);
  const FpPoly one(q(1));
  CHECK(canonicalize(triv.numerator).poly == t * t - t + one);
  CHECK(triv.denominator == t - one);
  const auto unknot = twisted_alexander_polynomial(KnotDiagram::unknot(), trivial_representation(1));
  CHECK(unknot.minor == FpPoly(Fp(1)));
  CHECK(twisted_cofactor_check(tre, dihedral("trefoil", 3)).passed());
  CHECK(twisted_cofactor_check(test_corpus::get("figure_eight"), dihedral("figure_eight", 5)).passed());
}

TEST_CASE("property: twisted checks on the corpus") {
  for (const auto& [name, d] : test_corpus::all()) {
    CAPTURE(name);
    CHECK(trivial_reduction_check(d).passed());
    const auto triv = trivial_representation(d.n_arcs());
    CHECK(block_identity_check(d, triv).passed());
    CHECK(twisted_trace_check(d, triv, 6).passed());
    for (std::uint32_t p : {3U, 5U, 7U}) {
      if (knot_determinant(d) % p != 0) continue;
      CAPTURE(p);
      const auto rho = dihedral(name, p);
      CHECK(verify_representation(wirtinger(d), rho).passed());
      CHECK(block_identity_check(d, rho).passed());
      CHECK(fundamental_formula_check(d, rho).passed());
      CHECK(column_independence_check(d, rho).passed());
      CHECK(twisted_trace_check(d, rho, 6).passed());
      CHECK_FALSE(twisted_cofactor_check(d, rho).failed());
    }
  }
}

TEST_CASE("trivial representation collapses to the scalar arc graph") {
  const auto& fig = test_corpus::get("figure_eight");
  const auto blocks = twisted_weight_graph(fig, trivial_representation(fig.n_arcs()));
  const auto g = build_arc_graph(fig);
  const auto w = weight_matrix(g, edge_weights(g, alexander_spec()));
  const auto b = blocks.assemble();
  const PrimeField q(default_field);
  REQUIRE(b.rows() == w.rows());
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) CHECK(b(i, j) == reduce_mod(w(i, j), q));
  }
}
