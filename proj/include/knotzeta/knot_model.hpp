#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotzeta/group_word.hpp"

namespace knotzeta {

enum class Sign : int { negative = -1, positive = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }

/// 1-based arc number; consecutive along the orientation of each component.
struct ArcId {
  int value = 0;
  friend auto operator<=>(const ArcId&, const ArcId&) = default;
};

struct Crossing {
  ArcId over;
  ArcId under_in;
  ArcId under_out;
  Sign sign = Sign::positive;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Arcs first..last, traversed in increasing order and wrapping back to first.
struct Component {
  ArcId first;
  ArcId last;
  friend bool operator==(const Component&, const Component&) = default;
};

/// An oriented knot or link diagram given by its arcs and signed crossings.
///
/// Construction validates the diagram and stores crossings sorted by
/// under_in, so two diagrams with the same data compare equal regardless of
/// input order. A component without under-crossings is a single arc.
class KnotDiagram {
 public:
  KnotDiagram(int n_arcs, std::vector<Crossing> crossings);

  /// The 0-crossing unknot: one arc, no crossings.
  static KnotDiagram unknot() { return KnotDiagram(1, {}); }

  int n_arcs() const noexcept { return n_arcs_; }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const std::vector<Component>& components() const noexcept { return components_; }
  bool is_knot() const noexcept { return components_.size() == 1; }

  /// Index into crossings() of the crossing where `arc` ends, if any.
  std::optional<std::size_t> terminal_crossing(ArcId arc) const;
  /// Index into crossings() of the crossing where `arc` starts, if any.
  std::optional<std::size_t> initial_crossing(ArcId arc) const;

  friend bool operator==(const KnotDiagram& a, const KnotDiagram& b) {
    return a.n_arcs_ == b.n_arcs_ && a.crossings_ == b.crossings_;
  }

 private:
  int n_arcs_;
  std::vector<Crossing> crossings_;
  std::vector<Component> components_;
  std::vector<std::optional<std::size_t>> ends_at_;
  std::vector<std::optional<std::size_t>> starts_at_;
};

/// Reads the crossing-list format:
///
///   # comment
///   X+ 3 1 2        <- X<sign> <over> <under_in> <under_out>
///   O 4             <- arc 4 is a component without under-crossings
///
/// Statements are separated by newlines or '/'. Throws ParseError with
/// line/column for syntax problems and DiagramError for invalid diagrams.
KnotDiagram parse_pd(std::string_view text);

/// Canonical text form: crossings sorted by under_in, then `O` lines.
std::string render_pd(const KnotDiagram& d);

/// Wirtinger presentation: generator x_a per arc a, and per crossing
/// (over j, under_in i, under_out k, sign e) the relator x_i x_j^e x_k^-1 x_j^-e.
struct Presentation {
  int generators = 0;
  std::vector<GroupWord> relators;
  /// under_in arc of the crossing each relator came from.
  std::vector<ArcId> relator_arcs;
};

Presentation wirtinger(const KnotDiagram& d);

// ---------------------------------------------------------------------------
// Tangles

/// Crossing with 0-based arc indices into a Tangle.
struct TangleCrossing {
  int over = 0;
  int under_in = 0;
  int under_out = 0;
  Sign sign = Sign::positive;
  friend bool operator==(const TangleCrossing&, const TangleCrossing&) = default;
};

/// Boundary arcs of one string: the strand starts on `initial` and ends on `terminal`.
struct StrandEnds {
  int initial = 0;
  int terminal = 0;
  friend bool operator==(const StrandEnds&, const StrandEnds&) = default;
};

/// Arc-level tangle data. A knot diagram is the tangle with no strands.
///
/// Invariants: every arc is under_in of at most one crossing and under_out
/// of at most one crossing; a terminal arc is never under_in; an initial
/// arc is never under_out.
class Tangle {
 public:
  Tangle(std::vector<std::string> arc_names, std::vector<TangleCrossing> crossings,
         std::vector<StrandEnds> strands);

  std::size_t n_arcs() const noexcept { return names_.size(); }
  const std::vector<std::string>& arc_names() const noexcept { return names_; }
  const std::vector<TangleCrossing>& crossings() const noexcept { return crossings_; }
  const std::vector<StrandEnds>& strands() const noexcept { return strands_; }

  std::optional<std::size_t> terminal_crossing(int arc) const { return ends_at_[arc]; }
  std::optional<std::size_t> initial_crossing(int arc) const { return starts_at_[arc]; }

 private:
  std::vector<std::string> names_;
  std::vector<TangleCrossing> crossings_;
  std::vector<StrandEnds> strands_;
  std::vector<std::optional<std::size_t>> ends_at_;
  std::vector<std::optional<std::size_t>> starts_at_;
};

/// The uncut diagram viewed as a tangle; arc a becomes index a-1 named "a".
Tangle as_tangle(const KnotDiagram& d);

/// Cuts each listed arc just before the crossing where it ends.
///
/// The arc is replaced by an initial half a' (keeping only the under_in
/// incidence) followed by a terminal half a'' (keeping under_out and all
/// over incidences). An arc without under-crossings is not split; it is both
/// ends of its strand.
Tangle cut(const KnotDiagram& d, const std::vector<ArcId>& arcs);

/// Glues the terminal end of t1 to the initial end of t2 (both 1-string).
Tangle compose(const Tangle& t1, const Tangle& t2);

/// Joins the two ends of a 1-string tangle and renumbers arcs along the
/// orientation, starting after the joined arc (which receives the last number
/// of its component).
KnotDiagram close(const Tangle& t);

/// Cuts the highest-numbered arc of each knot and joins d1's terminal end to
/// d2's initial end.
KnotDiagram connected_sum(const KnotDiagram& d1, const KnotDiagram& d2);

/// Disjoint union; d2's arcs are renumbered after d1's.
KnotDiagram split_union(const KnotDiagram& d1, const KnotDiagram& d2);

/// Blackboard-framed n-cable of a 1-string tangle. Each crossing becomes an
/// n x n grid of crossings with the same sign; each under-strand copy is split
/// into n pieces inside the grid.
Tangle cable(const Tangle& t, int n);

}  // namespace knotzeta
