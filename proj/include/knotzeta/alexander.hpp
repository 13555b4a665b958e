#pragma once

#include <map>
#include <optional>
#include <string>

#include "knotzeta/group_word.hpp"
#include "knotzeta/knot_model.hpp"
#include "knotzeta/laurent.hpp"
#include "knotzeta/matrix.hpp"
#include "knotzeta/verdict.hpp"

namespace knotzeta {

/// Element of the integral group ring of a free group: freely reduced words
/// with nonzero integer coefficients.
class GroupRingElem {
 public:
  using Terms = std::map<GroupWord, long long>;

  GroupRingElem() = default;
  static GroupRingElem word(const GroupWord& w, long long coefficient = 1);

  void add(const GroupWord& w, long long coefficient);
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  GroupRingElem& operator+=(const GroupRingElem& o);
  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
  friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b);
  friend bool operator==(const GroupRingElem&, const GroupRingElem&) = default;

 private:
  Terms terms_;
};

std::string to_string(const GroupRingElem& x);

/// Free derivative d w / d x_generator (0-based generator).
GroupRingElem fox_derivative(const GroupWord& w, int generator);

/// Every generator goes to t.
QPoly abelianize(const GroupRingElem& x);

/// (relators x generators) matrix of abelianized Fox derivatives.
PolyMatrix<Rational> alexander_matrix(const Presentation& p);

enum class Convention { minor, eq10 };

struct AlexanderPolynomial {
  CanonicalPoly<Rational> poly;
  /// Under Convention::eq10, whether (t - 1) divided the minor; otherwise the
  /// reduced denominator is kept in `denominator`.
  bool exact = true;
  QPoly denominator = QPoly::one();
};

/// Canonical determinant of the Alexander matrix with the relator of arc
/// `row` and the column of arc `col` removed (both default to the last arc).
/// Throws PreconditionError for links.
AlexanderPolynomial alexander_polynomial(const KnotDiagram& d, std::optional<ArcId> row = std::nullopt,
                                         std::optional<ArcId> col = std::nullopt,
                                         Convention convention = Convention::minor);

/// |Delta(-1)|.
Integer knot_determinant(const KnotDiagram& d);

/// Alexander matrix == I - W of the arc graph, row by row via each relator's under_in arc.
Verdict fox_equals_arcgraph_check(const KnotDiagram& d);

/// Minor, tree polynomial of the cut graph, and det(I - W) of the cut graph agree canonically.
Verdict triple_check(const KnotDiagram& d, ArcId cut_arc);

/// canonical Delta(d1 # d2) == canonical Delta(d1) * Delta(d2).
Verdict multiplicativity_check(const KnotDiagram& d1, const KnotDiagram& d2);

/// Every minor of the split union's Alexander matrix obtained by deleting
/// the last relator and one generator column is identically zero.
Verdict split_check(const KnotDiagram& d1, const KnotDiagram& d2);

}  // namespace knotzeta
