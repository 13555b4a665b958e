#include "knotzeta/twisted.hpp"

#include "knotzeta/error.hpp"

namespace knotzeta {

namespace {

using Block = Matrix<FpPoly>;

Matrix<Fp> fp_identity(const Representation& rho) { return Matrix<Fp>::identity(rho.dim, rho.field.one()); }

// Phi(w) = t^{exponent sum} rho(w).
Block phi_word(const Representation& rho, const GroupWord& w, long long coefficient = 1) {
  const Matrix<Fp> m = evaluate_word(rho, w);
  const int e = exponent_sum(w);
  const Fp c = rho.field(coefficient);
  Block b(rho.dim, rho.dim);
  for (int i = 0; i < rho.dim; ++i) {
    for (int j = 0; j < rho.dim; ++j) b(i, j) = FpPoly::monomial(c * m(i, j), e);
  }
  return b;
}

Block phi(const Representation& rho, const GroupRingElem& x) {
  Block b(rho.dim, rho.dim);
  for (const auto& [w, c] : x.terms()) b = b + phi_word(rho, w, c);
  return b;
}

Block block_identity(int m) { return Block::identity(m, FpPoly::one()); }

void put_block(Block& big, std::size_t row, std::size_t col, const Block& b) {
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) big(row * b.rows() + i, col * b.cols() + j) = b(i, j);
  }
}

void add_block(Block& big, std::size_t row, std::size_t col, const Block& b) {
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) big(row * b.rows() + i, col * b.cols() + j) += b(i, j);
  }
}

Block get_block(const Block& big, std::size_t row, std::size_t col, int m) {
  Block b(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) b(i, j) = big(row * m + i, col * m + j);
  }
  return b;
}

std::vector<std::size_t> block_columns(std::size_t block, int m) {
  std::vector<std::size_t> cols;
  for (int i = 0; i < m; ++i) cols.push_back(block * m + i);
  return cols;
}

FpPoly column_denominator(const Representation& rho, int k) {
  Block b = phi_word(rho, {{k, 1}}) - block_identity(rho.dim);
  return det(b);
}

std::pair<FpPoly, FpPoly> reduced_fraction(const FpPoly& num, const FpPoly& den) {
  const auto q = divide_exact(num, den);
  return {canonicalize(q.numerator).poly, q.exact ? FpPoly::one() : canonicalize(q.denominator).poly};
}

std::string fraction_string(const FpPoly& n, const FpPoly& d) { return "(" + to_string(n) + ") / (" + to_string(d) + ")"; }

}  // namespace

Representation trivial_representation(int generators, int dim, std::uint32_t q) {
  Representation rho;
  rho.dim = dim;
  rho.field = PrimeField(q);
  rho.images.assign(generators, Matrix<Fp>::identity(dim, rho.field.one()));
  for (auto& img : rho.images) {
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) img(i, j) = i == j ? rho.field.one() : rho.field.zero();
    }
  }
  return rho;
}

Matrix<Fp> evaluate_word(const Representation& rho, const GroupWord& w) {
  Matrix<Fp> m = fp_identity(rho);
  for (const auto& l : w) {
    if (l.generator < 0 || l.generator >= static_cast<int>(rho.images.size())) {
      throw PreconditionError("no image for generator x" + std::to_string(l.generator + 1));
    }
    if (l.exponent > 0) {
      m = m * rho.images[l.generator];
    } else {
      auto inv = inverse_matrix(rho.images[l.generator], rho.field.one());
      if (!inv) throw PreconditionError("image of x" + std::to_string(l.generator + 1) + " is not invertible");
      m = m * *inv;
    }
  }
  return m;
}

Verdict verify_representation(const Presentation& p, const Representation& rho) {
  if (static_cast<int>(rho.images.size()) != p.generators) {
    throw PreconditionError("representation has " + std::to_string(rho.images.size()) + " images for " +
                            std::to_string(p.generators) + " generators");
  }
  for (std::size_t g = 0; g < rho.images.size(); ++g) {
    const auto& img = rho.images[g];
    if (img.rows() != static_cast<std::size_t>(rho.dim) || img.cols() != static_cast<std::size_t>(rho.dim)) {
      throw PreconditionError("image of x" + std::to_string(g + 1) + " has the wrong size");
    }
    if (is_zero(det(img))) throw PreconditionError("image of x" + std::to_string(g + 1) + " is not invertible");
  }
  const Matrix<Fp> id = fp_identity(rho);
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    if (!(evaluate_word(rho, p.relators[r]) == id)) {
      return compare("representation", false, "relator " + std::to_string(r + 1) + " = " + to_string(p.relators[r]),
                     "identity", {}, "violated relator " + std::to_string(r + 1));
    }
  }
  return compare("representation", true, "identity", "identity", {},
                 std::to_string(p.relators.size()) + " relators over F_" + std::to_string(rho.field.modulus()));
}

ColoringSpace fox_colorings(const KnotDiagram& d, std::uint32_t p) {
  const PrimeField field(p);
  if (p == 2) throw PreconditionError("colorings need an odd prime");
  Matrix<Fp> system(d.crossings().size(), d.n_arcs(), field.zero());
  for (std::size_t c = 0; c < d.crossings().size(); ++c) {
    const auto& x = d.crossings()[c];
    system(c, x.over.value - 1) += field(2);
    system(c, x.under_in.value - 1) -= field.one();
    system(c, x.under_out.value - 1) -= field.one();
  }
  return ColoringSpace{p, nullspace(system, field.one())};
}

std::vector<Fp> nonconstant_coloring(const ColoringSpace& space) {
  for (const auto& v : space.basis) {
    bool constant = true;
    for (const auto& c : v) constant = constant && c == v.front();
    if (constant) continue;
    std::vector<Fp> shifted;
    for (const auto& c : v) shifted.push_back(c - v.front());
    return shifted;
  }
  throw PreconditionError("only constant colorings exist mod " + std::to_string(space.p));
}

std::uint32_t least_prime_congruent_one(std::uint32_t p) {
  for (std::uint64_t q = std::uint64_t{p} + 1;; q += p) {
    if (is_prime(q)) return static_cast<std::uint32_t>(q);
  }
}

Representation dihedral_representation(const KnotDiagram& d, std::uint32_t p, const std::vector<Fp>& coloring) {
  if (coloring.size() != static_cast<std::size_t>(d.n_arcs())) {
    throw PreconditionError("coloring needs one color per arc");
  }
  bool constant = true;
  for (const auto& c : coloring) constant = constant && c == coloring.front();
  if (constant) throw PreconditionError("a constant coloring gives an abelian representation");

  Representation rho;
  rho.dim = 2;
  rho.field = PrimeField(least_prime_congruent_one(p));
  const std::uint32_t q = rho.field.modulus();
  const Fp omega = pow(rho.field.primitive_root(), (q - 1) / p);
  for (const auto& c : coloring) {
    const std::uint64_t e = static_cast<std::uint64_t>(Fp(c.value(), p).value());
    Matrix<Fp> img(2, 2, rho.field.zero());
    img(0, 1) = pow(omega, e);
    img(1, 0) = pow(omega, (p - e) % p);
    rho.images.push_back(img);
  }
  const Verdict v = verify_representation(wirtinger(d), rho);
  if (!v.passed()) throw PreconditionError("not a coloring: " + v.detail);
  return rho;
}

PolyMatrix<Fp> twisted_alexander_matrix(const Presentation& p, const Representation& rho,
                                        std::optional<std::size_t> dropped) {
  if (static_cast<int>(rho.images.size()) != p.generators) throw PreconditionError("representation size mismatch");
  if (dropped && *dropped >= p.relators.size()) throw PreconditionError("dropped relator out of range");
  const std::size_t rows = p.relators.size() - (dropped ? 1 : 0);
  Block a(rows * rho.dim, static_cast<std::size_t>(p.generators) * rho.dim);
  std::size_t out = 0;
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    if (dropped && *dropped == r) continue;
    for (int g = 0; g < p.generators; ++g) put_block(a, out, g, phi(rho, fox_derivative(p.relators[r], g)));
    ++out;
  }
  return a;
}

std::vector<int> admissible_columns(const Representation& rho) {
  std::vector<int> cols;
  for (int k = 0; k < static_cast<int>(rho.images.size()); ++k) {
    if (!column_denominator(rho, k).is_zero()) cols.push_back(k);
  }
  return cols;
}

TwistedPolynomial twisted_alexander_polynomial(const KnotDiagram& d, const Representation& rho,
                                               std::optional<int> column, std::optional<std::size_t> dropped) {
  if (!d.is_knot()) throw PreconditionError("twisted Alexander polynomials are computed for knots only");
  const Presentation p = wirtinger(d);
  if (!verify_representation(p, rho).passed()) throw PreconditionError("not a representation of the knot group");

  TwistedPolynomial result;
  if (column) {
    if (*column < 0 || *column >= p.generators) throw PreconditionError("column out of range");
    if (column_denominator(rho, *column).is_zero()) {
      throw PreconditionError("det(Phi(x_k) - 1) vanishes for k = " + std::to_string(*column + 1));
    }
    result.column = *column;
  } else {
    const auto cols = admissible_columns(rho);
    if (cols.empty()) throw PreconditionError("det(Phi(x_k) - 1) vanishes for every k");
    result.column = cols.front();
  }

  std::optional<std::size_t> drop;
  if (!p.relators.empty()) drop = dropped.value_or(p.relators.size() - 1);
  result.dropped = drop.value_or(0);
  const auto a = twisted_alexander_matrix(p, rho, drop);
  result.minor = det(a.without({}, block_columns(result.column, rho.dim)));
  result.column_det = column_denominator(rho, result.column);
  std::tie(result.numerator, result.denominator) = reduced_fraction(result.minor, result.column_det);
  return result;
}

Matrix<FpPoly> BlockWeights::assemble() const {
  Block b(graph.n_vertices() * dim, graph.n_vertices() * dim);
  for (std::size_t e = 0; e < blocks.size(); ++e) add_block(b, graph.edges()[e].from, graph.edges()[e].to, blocks[e]);
  return b;
}

BlockWeights twisted_weight_graph(const KnotDiagram& d, const Representation& rho) {
  BlockWeights bw{build_arc_graph(d), rho.dim, {}};
  for (const auto& e : bw.graph.edges()) {
    const auto& c = d.crossings()[e.crossing];
    const int i = c.under_in.value - 1;
    const int j = c.over.value - 1;
    const int k = c.under_out.value - 1;
    if (is_go_straight(e.label)) {
      bw.blocks.push_back(phi_word(rho, {{i, 1}, {j, to_int(c.sign)}, {k, -1}}));
    } else if (c.sign == Sign::positive) {
      bw.blocks.push_back(phi_word(rho, {{i, 1}, {j, 1}, {k, -1}, {j, -1}}) - phi_word(rho, {{i, 1}}));
    } else {
      bw.blocks.push_back(phi_word(rho, {{i, 1}, {j, -1}}) - phi_word(rho, {{i, 1}, {j, -1}, {k, -1}}));
    }
  }
  return bw;
}

Verdict block_identity_check(const KnotDiagram& d, const Representation& rho) {
  const Presentation p = wirtinger(d);
  const auto a = twisted_alexander_matrix(p, rho, std::nullopt);
  const auto b = twisted_weight_graph(d, rho).assemble();
  const auto ib = Block::identity(b.rows(), FpPoly::one()) - b;
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    const std::size_t v = static_cast<std::size_t>(p.relator_arcs[r].value - 1);
    for (int g = 0; g < p.generators; ++g) {
      const Block lhs = get_block(a, r, g, rho.dim);
      const Block rhs = get_block(ib, v, g, rho.dim);
      if (!(lhs == rhs)) {
        return compare("block-identity", false, "A block (" + std::to_string(r + 1) + "," + std::to_string(g + 1) + ")",
                       "(I-B) block (" + std::to_string(v + 1) + "," + std::to_string(g + 1) + ")");
      }
    }
  }
  return compare("block-identity", true, "equal", "equal", {}, std::to_string(p.relators.size()) + " block rows");
}

Verdict fundamental_formula_check(const KnotDiagram& d, const Representation& rho) {
  const Presentation p = wirtinger(d);
  const auto a = twisted_alexander_matrix(p, rho, std::nullopt);
  std::vector<Block> gens;
  for (int g = 0; g < p.generators; ++g) gens.push_back(phi_word(rho, {{g, 1}}) - block_identity(rho.dim));
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    Block sum(rho.dim, rho.dim);
    for (int g = 0; g < p.generators; ++g) sum = sum + get_block(a, r, g, rho.dim) * gens[g];
    if (!(sum == Block(rho.dim, rho.dim))) {
      return compare("fundamental-formula", false, "row " + std::to_string(r + 1) + " nonzero", "0");
    }
  }
  return compare("fundamental-formula", true, "0", "0");
}

Verdict twisted_trace_check(const KnotDiagram& d, const Representation& rho, int max_len) {
  if (max_len < 1) throw PreconditionError("trace check needs L >= 1");
  const std::string horizon = "L=" + std::to_string(max_len);
  const BlockWeights bw = twisted_weight_graph(d, rho);
  const Block b = bw.assemble();

  std::vector<FpPoly> walks(max_len + 1);
  struct Walker {
    const BlockWeights& bw;
    std::vector<FpPoly>& walks;
    int max_len;
    int start;
    void go(int v, int depth, const Block& acc) {
      if (depth > 0 && v == start) walks[depth] += trace(acc);
      if (depth == max_len) return;
      for (int e : bw.graph.out_edges(v)) go(bw.graph.edges()[e].to, depth + 1, acc * bw.blocks[e]);
    }
  };
  for (std::size_t v = 0; v < bw.graph.n_vertices(); ++v) {
    Walker{bw, walks, max_len, static_cast<int>(v)}.go(static_cast<int>(v), 0, block_identity(rho.dim));
  }

  Block power = b;
  for (int m = 1; m <= max_len; ++m) {
    if (m > 1) power = power * b;
    const FpPoly tr = trace(power);
    if (!(tr == walks[m])) {
      return compare("twisted-trace", false, "tr(B^" + std::to_string(m) + ") = " + to_string(tr),
                     "closed walks: " + to_string(walks[m]), horizon);
    }
  }
  return compare("twisted-trace", true, "equal", "equal", horizon);
}

Verdict column_independence_check(const KnotDiagram& d, const Representation& rho) {
  const auto cols = admissible_columns(rho);
  std::vector<TwistedPolynomial> polys;
  for (int k : cols) polys.push_back(twisted_alexander_polynomial(d, rho, k));
  for (std::size_t a = 0; a < polys.size(); ++a) {
    for (std::size_t b = a + 1; b < polys.size(); ++b) {
      const auto lhs = canonicalize(polys[a].numerator * polys[b].denominator);
      const auto rhs = canonicalize(polys[b].numerator * polys[a].denominator);
      if (!(lhs == rhs)) {
        return compare("column-independence", false,
                       "k=" + std::to_string(cols[a] + 1) + ": " + fraction_string(polys[a].numerator, polys[a].denominator),
                       "k=" + std::to_string(cols[b] + 1) + ": " + fraction_string(polys[b].numerator, polys[b].denominator));
      }
    }
  }
  if (polys.empty()) return skipped("column-independence", "no admissible column");
  return compare("column-independence", true, fraction_string(polys.front().numerator, polys.front().denominator),
                 fraction_string(polys.back().numerator, polys.back().denominator), {},
                 std::to_string(polys.size()) + " admissible columns");
}

Verdict trivial_reduction_check(const KnotDiagram& d, std::uint32_t q) {
  const PrimeField field(q);
  const auto tw = twisted_alexander_polynomial(d, trivial_representation(d.n_arcs(), 1, q));
  const FpPoly delta = reduce_mod(alexander_polynomial(d).poly.poly, field);
  const FpPoly t_minus_one = FpPoly::monomial(field.one(), 1) - FpPoly::monomial(field.one(), 0);
  const auto [n, den] = reduced_fraction(delta, t_minus_one);
  const bool ok = n == tw.numerator && den == tw.denominator;
  return compare("trivial-reduction", ok, fraction_string(tw.numerator, tw.denominator), fraction_string(n, den),
                 {}, "F_" + std::to_string(q));
}

Verdict twisted_cofactor_check(const KnotDiagram& d, const Representation& rho) {
  const auto tw = twisted_alexander_polynomial(d, rho);
  const Presentation p = wirtinger(d);
  if (p.relators.empty()) return compare("twisted-cofactor", true, "1", "1");
  const auto a = twisted_alexander_matrix(p, rho, tw.dropped).without({}, block_columns(tw.column, rho.dim));
  if (a.rows() > 8) return skipped("twisted-cofactor", "minor of size " + std::to_string(a.rows()) + " exceeds 8");
  const FpPoly oracle = det_cofactor(a, FpPoly::one());
  return compare("twisted-cofactor", oracle == tw.minor, to_string(tw.minor), to_string(oracle), {},
                 std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " minor");
}

}  // namespace knotzeta
