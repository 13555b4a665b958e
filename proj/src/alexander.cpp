#include "knotzeta/alexander.hpp"

#include "knotzeta/arborescence.hpp"
#include "knotzeta/arc_graph.hpp"
#include "knotzeta/error.hpp"
#include "knotzeta/zeta.hpp"

namespace knotzeta {

GroupRingElem GroupRingElem::word(const GroupWord& w, long long coefficient) {
  GroupRingElem x;
  x.add(w, coefficient);
  return x;
}

void GroupRingElem::add(const GroupWord& w, long long coefficient) {
  if (coefficient == 0) return;
  auto [it, fresh] = terms_.try_emplace(freely_reduced(w), coefficient);
  if (!fresh) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) {
  for (const auto& [w, c] : b.terms_) a.add(w, -c);
  return a;
}

std::string to_string(const GroupRingElem& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : x.terms()) {
    const bool negative = c < 0;
    const long long mag = negative ? -c : c;
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (mag != 1) s += std::to_string(mag) + (w.empty() ? "" : " ");
    if (mag != 1 && w.empty()) continue;
    s += to_string(w);
  }
  return s;
}

GroupRingElem fox_derivative(const GroupWord& w, int generator) {
  GroupRingElem result;
  GroupWord prefix;
  for (const auto& letter : w) {
    if (letter.generator == generator) {
      if (letter.exponent > 0) {
        result.add(prefix, 1);
      } else {
        result.add(prefix * GroupWord{letter}, -1);
      }
    }
    prefix.push_back(letter);
  }
  return result;
}

QPoly abelianize(const GroupRingElem& x) {
  QPoly p;
  for (const auto& [w, c] : x.terms()) p.add_term(exponent_sum(w), Rational(static_cast<long>(c)));
  return p;
}

PolyMatrix<Rational> alexander_matrix(const Presentation& p) {
  PolyMatrix<Rational> a(p.relators.size(), p.generators);
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    for (int g = 0; g < p.generators; ++g) a(r, g) = abelianize(fox_derivative(p.relators[r], g));
  }
  return a;
}

AlexanderPolynomial alexander_polynomial(const KnotDiagram& d, std::optional<ArcId> row, std::optional<ArcId> col,
                                         Convention convention) {
  if (!d.is_knot()) throw PreconditionError("the Alexander polynomial is computed for knots only");
  const int n = d.n_arcs();
  const ArcId r = row.value_or(ArcId{n});
  const ArcId c = col.value_or(ArcId{n});
  for (ArcId a : {r, c}) {
    if (a.value < 1 || a.value > n) throw PreconditionError("unknown arc " + std::to_string(a.value));
  }

  QPoly minor = QPoly::one();
  if (!d.crossings().empty()) {
    // Relators are ordered by under_in, so relator a-1 belongs to arc a.
    const auto a = alexander_matrix(wirtinger(d));
    minor = det(a.without({static_cast<std::size_t>(r.value - 1)}, {static_cast<std::size_t>(c.value - 1)}));
  }

  AlexanderPolynomial result;
  if (convention == Convention::minor) {
    result.poly = canonicalize(minor);
    return result;
  }
  const auto q = divide_exact(minor, QPoly::t() - QPoly::one());
  result.poly = canonicalize(q.numerator);
  result.exact = q.exact;
  result.denominator = q.denominator;
  return result;
}

Integer knot_determinant(const KnotDiagram& d) {
  const Rational v = eval(alexander_polynomial(d).poly.poly, Rational(-1));
  return abs(v.get_num());
}

Verdict fox_equals_arcgraph_check(const KnotDiagram& d) {
  const Presentation p = wirtinger(d);
  const auto fox = alexander_matrix(p);
  const ArcGraph g = build_arc_graph(d);
  const auto iw = identity_minus(weight_matrix(g, edge_weights(g, alexander_spec())));
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    const std::size_t v = static_cast<std::size_t>(p.relator_arcs[r].value - 1);
    for (std::size_t j = 0; j < iw.cols(); ++j) {
      if (!(fox(r, j) == iw(v, j))) {
        return compare("fox-arcgraph", false,
                       "Fox(" + std::to_string(r + 1) + "," + std::to_string(j + 1) + ") = " + to_string(fox(r, j)),
                       "(I-W)(" + std::to_string(v + 1) + "," + std::to_string(j + 1) + ") = " + to_string(iw(v, j)));
      }
    }
  }
  return compare("fox-arcgraph", true, "equal", "equal", {},
                 std::to_string(p.relators.size()) + " rows");
}

Verdict triple_check(const KnotDiagram& d, ArcId cut_arc) {
  const auto minor = alexander_polynomial(d, cut_arc, cut_arc).poly;

  const Tangle t = cut(d, {cut_arc});
  const ArcGraph g = build_arc_graph(t);
  const auto weights = edge_weights(g, alexander_spec());
  std::vector<int> roots{t.strands().front().initial};
  if (t.strands().front().terminal != roots.front()) roots.push_back(t.strands().front().terminal);
  const auto trees = canonicalize(tree_polynomial(g, weights, roots));
  const auto zeta = canonicalize(zeta_determinant(g));

  const bool ok = minor == trees && trees == zeta;
  std::string rhs = to_string(trees.poly);
  if (!(trees == zeta)) rhs += " | det(I-W) " + to_string(zeta.poly);
  return compare("triple", ok, to_string(minor.poly), rhs, "cut=" + std::to_string(cut_arc.value));
}

Verdict multiplicativity_check(const KnotDiagram& d1, const KnotDiagram& d2) {
  const auto sum = alexander_polynomial(connected_sum(d1, d2)).poly;
  const auto product = canonicalize(alexander_polynomial(d1).poly.poly * alexander_polynomial(d2).poly.poly);
  return compare("multiplicativity", sum == product, to_string(sum.poly), to_string(product.poly));
}

Verdict split_check(const KnotDiagram& d1, const KnotDiagram& d2) {
  const KnotDiagram link = split_union(d1, d2);
  const Presentation p = wirtinger(link);
  const std::size_t g = static_cast<std::size_t>(p.generators);
  if (p.relators.size() < g) {
    return compare("split", true, "0", "0", {},
                   std::to_string(p.relators.size()) + " relators for " + std::to_string(g) +
                       " generators, every minor of size " + std::to_string(g - 1) + " has a zero row");
  }
  const auto a = alexander_matrix(p);
  const std::size_t last = p.relators.size() - 1;
  for (std::size_t col = 0; col < g; ++col) {
    const QPoly m = det(a.without({last}, {col}));
    if (!m.is_zero()) {
      return compare("split", false, to_string(m), "0", {}, "column " + std::to_string(col + 1));
    }
  }
  return compare("split", true, "0", "0", {}, std::to_string(g) + " minors");
}

}  // namespace knotzeta
