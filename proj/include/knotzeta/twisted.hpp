#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "knotzeta/alexander.hpp"
#include "knotzeta/arc_graph.hpp"
#include "knotzeta/knot_model.hpp"
#include "knotzeta/matrix.hpp"
#include "knotzeta/modular.hpp"
#include "knotzeta/verdict.hpp"

namespace knotzeta {

/// Images of the Wirtinger generators in GL(dim, F_q).
struct Representation {
  int dim = 1;
  PrimeField field{2};
  std::vector<Matrix<Fp>> images;
};

/// Large word-size prime used for the trivial representation.
inline constexpr std::uint32_t default_field = 2147483647U;

/// Every generator maps to the identity.
Representation trivial_representation(int generators, int dim = 1, std::uint32_t q = default_field);

/// Passes iff every image is invertible and every relator maps to the
/// identity; a failure names the first violated relator (1-based).
Verdict verify_representation(const Presentation& p, const Representation& rho);

/// rho(word) as a matrix.
Matrix<Fp> evaluate_word(const Representation& rho, const GroupWord& w);

/// Solutions mod p of 2 c(over) = c(under_in) + c(under_out) at every crossing.
struct ColoringSpace {
  std::uint32_t p = 0;
  std::vector<std::vector<Fp>> basis;
  std::size_t dimension() const noexcept { return basis.size(); }
};

ColoringSpace fox_colorings(const KnotDiagram& d, std::uint32_t p);

/// A nonconstant coloring from the space, shifted so that arc 1 has color 0.
/// Throws PreconditionError when only constant colorings exist.
std::vector<Fp> nonconstant_coloring(const ColoringSpace& space);

/// Least prime q with q = 1 (mod p).
std::uint32_t least_prime_congruent_one(std::uint32_t p);

/// x_a -> [[0, w^c_a], [w^-c_a, 0]] over F_q, where q is the least prime
/// congruent to 1 mod p and w = g^((q-1)/p) for the least primitive root g.
Representation dihedral_representation(const KnotDiagram& d, std::uint32_t p, const std::vector<Fp>& coloring);

/// Blocks Phi(d r_i / d x_j) with Phi(x) = t rho(x). `dropped` removes one
/// relator (0-based); nullopt keeps them all.
PolyMatrix<Fp> twisted_alexander_matrix(const Presentation& p, const Representation& rho,
                                        std::optional<std::size_t> dropped);

struct TwistedPolynomial {
  /// Canonical (monic, minimal exponent 0) numerator and denominator after gcd reduction.
  FpPoly numerator;
  FpPoly denominator;
  /// Generator column (0-based) whose block was removed.
  int column = 0;
  /// Relator dropped (0-based).
  std::size_t dropped = 0;
  /// Raw determinants before reduction.
  FpPoly minor;
  FpPoly column_det;
};

/// det(A with block column k removed) / det(Phi(x_k) - I), reduced. When k
/// is not given, the first column with nonvanishing denominator is used.
TwistedPolynomial twisted_alexander_polynomial(const KnotDiagram& d, const Representation& rho,
                                               std::optional<int> column = std::nullopt,
                                               std::optional<std::size_t> dropped = std::nullopt);

/// Columns k whose denominator det(Phi(x_k) - I) is nonzero.
std::vector<int> admissible_columns(const Representation& rho);

/// Block weights on the uncut arc graph: the go-under edge of a crossing
/// carries Phi(x_i x_j^e x_k^-1), the jump edge carries
/// Phi(x_i x_j x_k^-1 x_j^-1 - x_i) at a positive crossing and
/// Phi(x_i x_j^-1 - x_i x_j^-1 x_k^-1) at a negative one.
struct BlockWeights {
  ArcGraph graph;
  int dim = 1;
  std::vector<Matrix<FpPoly>> blocks;  // one per edge

  Matrix<FpPoly> assemble() const;
};

BlockWeights twisted_weight_graph(const KnotDiagram& d, const Representation& rho);

/// I - B against the full twisted Alexander matrix, rows aligned by under_in arc.
Verdict block_identity_check(const KnotDiagram& d, const Representation& rho);

/// Sum_j A_ij (Phi(x_j) - I) = 0 for every relator row i.
Verdict fundamental_formula_check(const KnotDiagram& d, const Representation& rho);

/// tr(B^m) against the sum over closed walks of the trace of the ordered
/// block product, m <= L.
Verdict twisted_trace_check(const KnotDiagram& d, const Representation& rho, int max_len);

/// For every pair of admissible columns: N_k D_j = N_j D_k up to a unit.
Verdict column_independence_check(const KnotDiagram& d, const Representation& rho);

/// Trivial 1-dimensional representation gives Delta / (t - 1), compared in F_q.
Verdict trivial_reduction_check(const KnotDiagram& d, std::uint32_t q = default_field);

/// The twisted minor by Bareiss against Laplace expansion.
Verdict twisted_cofactor_check(const KnotDiagram& d, const Representation& rho);

}  // namespace knotzeta
