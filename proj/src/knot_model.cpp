#include "knotzeta/knot_model.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "knotzeta/error.hpp"

namespace knotzeta {

namespace {

std::string arc_str(int a) { return std::to_string(a); }

}  // namespace

// ---------------------------------------------------------------------------
// KnotDiagram

KnotDiagram::KnotDiagram(int n_arcs, std::vector<Crossing> crossings)
    : n_arcs_(n_arcs), crossings_(std::move(crossings)) {
  if (n_arcs_ < 1) throw DiagramError("empty diagram");
  for (const auto& c : crossings_) {
    for (ArcId a : {c.over, c.under_in, c.under_out}) {
      if (a.value < 1 || a.value > n_arcs_) {
        throw DiagramError("dangling arc reference: arc " + arc_str(a.value) + " (diagram has " +
                           arc_str(n_arcs_) + " arcs)");
      }
    }
  }
  std::stable_sort(crossings_.begin(), crossings_.end(),
                   [](const Crossing& a, const Crossing& b) { return a.under_in < b.under_in; });

  ends_at_.assign(n_arcs_ + 1, std::nullopt);
  starts_at_.assign(n_arcs_ + 1, std::nullopt);
  for (std::size_t ci = 0; ci < crossings_.size(); ++ci) {
    const auto& c = crossings_[ci];
    if (ends_at_[c.under_in.value]) {
      throw DiagramError("arc " + arc_str(c.under_in.value) + " is under_in at two crossings");
    }
    if (starts_at_[c.under_out.value]) {
      throw DiagramError("arc " + arc_str(c.under_out.value) + " is under_out at two crossings");
    }
    ends_at_[c.under_in.value] = ci;
    starts_at_[c.under_out.value] = ci;
  }
  for (int a = 1; a <= n_arcs_; ++a) {
    if (ends_at_[a].has_value() != starts_at_[a].has_value()) {
      throw DiagramError("non-closed component at arc " + arc_str(a));
    }
  }

  std::vector<bool> seen(n_arcs_ + 1, false);
  for (int a = 1; a <= n_arcs_; ++a) {
    if (seen[a]) continue;
    int cur = a;
    seen[a] = true;
    while (ends_at_[cur]) {
      const int next = crossings_[*ends_at_[cur]].under_out.value;
      if (next == a) break;
      if (next != cur + 1) {
        throw DiagramError("arc numbering violation: arc " + arc_str(cur) + " is followed by arc " +
                           arc_str(next) + ", expected " + arc_str(cur + 1) + " or " + arc_str(a));
      }
      cur = next;
      seen[cur] = true;
    }
    components_.push_back(Component{ArcId{a}, ArcId{cur}});
  }
}

std::optional<std::size_t> KnotDiagram::terminal_crossing(ArcId arc) const {
  if (arc.value < 1 || arc.value > n_arcs_) throw PreconditionError("unknown arc " + arc_str(arc.value));
  return ends_at_[arc.value];
}

std::optional<std::size_t> KnotDiagram::initial_crossing(ArcId arc) const {
  if (arc.value < 1 || arc.value > n_arcs_) throw PreconditionError("unknown arc " + arc_str(arc.value));
  return starts_at_[arc.value];
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(std::string_view statement, int column_offset) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < statement.size()) {
    while (i < statement.size() && std::isspace(static_cast<unsigned char>(statement[i]))) ++i;
    if (i == statement.size()) break;
    const std::size_t start = i;
    while (i < statement.size() && !std::isspace(static_cast<unsigned char>(statement[i]))) ++i;
    tokens.push_back({std::string(statement.substr(start, i - start)), column_offset + static_cast<int>(start)});
  }
  return tokens;
}

int parse_arc(const Token& tok, int line) {
  if (tok.text.empty() || tok.text.size() > 9 ||
      !std::all_of(tok.text.begin(), tok.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError("expected a positive arc number, found '" + tok.text + "'", line, tok.column);
  }
  const int v = std::stoi(tok.text);
  if (v < 1) throw ParseError("arc numbers start at 1", line, tok.column);
  return v;
}

}  // namespace

KnotDiagram parse_pd(std::string_view text) {
  std::vector<Crossing> crossings;
  std::set<int> free_arcs;
  std::set<int> mentioned;
  int max_arc = 0;
  bool any = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;

    std::size_t seg_start = 0;
    while (seg_start <= line.size()) {
      const std::size_t slash = std::min(line.find('/', seg_start), line.size());
      const auto tokens = tokenize(line.substr(seg_start, slash - seg_start), static_cast<int>(seg_start) + 1);
      seg_start = slash + 1;
      if (tokens.empty()) continue;
      any = true;
      const Token& head = tokens.front();
      if (head.text == "X+" || head.text == "X-") {
        if (tokens.size() != 4) {
          const int col = tokens.size() > 4 ? tokens[4].column : head.column;
          throw ParseError("a crossing needs exactly three arcs: X<sign> <over> <under_in> <under_out>", line_no, col);
        }
        Crossing c;
        c.sign = head.text[1] == '+' ? Sign::positive : Sign::negative;
        c.over = ArcId{parse_arc(tokens[1], line_no)};
        c.under_in = ArcId{parse_arc(tokens[2], line_no)};
        c.under_out = ArcId{parse_arc(tokens[3], line_no)};
        for (ArcId a : {c.over, c.under_in, c.under_out}) {
          mentioned.insert(a.value);
          max_arc = std::max(max_arc, a.value);
        }
        crossings.push_back(c);
      } else if (head.text == "O") {
        if (tokens.size() != 2) {
          throw ParseError("a crossingless component needs exactly one arc: O <arc>", line_no, head.column);
        }
        const int a = parse_arc(tokens[1], line_no);
        free_arcs.insert(a);
        mentioned.insert(a);
        max_arc = std::max(max_arc, a);
      } else {
        throw ParseError("unknown statement '" + head.text + "' (expected X+, X- or O)", line_no, head.column);
      }
    }
    if (eol == text.size()) break;
  }
  if (!any) throw ParseError("empty diagram", 1, 1);

  for (int a = 1; a <= max_arc; ++a) {
    if (!mentioned.count(a)) throw DiagramError("arc numbering has a gap: arc " + arc_str(a) + " never appears");
  }
  std::set<int> under;
  for (const auto& c : crossings) {
    for (ArcId a : {c.under_in, c.under_out}) {
      if (free_arcs.count(a.value)) {
        throw DiagramError("arc " + arc_str(a.value) + " is declared crossingless but passes under a crossing");
      }
      under.insert(a.value);
    }
  }
  for (int a = 1; a <= max_arc; ++a) {
    if (!under.count(a) && !free_arcs.count(a)) {
      throw DiagramError("arc " + arc_str(a) + " never passes under a crossing; a crossingless loop needs 'O " +
                         arc_str(a) + "'");
    }
  }
  return KnotDiagram(max_arc, std::move(crossings));
}

std::string render_pd(const KnotDiagram& d) {
  std::ostringstream out;
  for (const auto& c : d.crossings()) {
    out << "X" << (c.sign == Sign::positive ? '+' : '-') << ' ' << c.over.value << ' ' << c.under_in.value << ' '
        << c.under_out.value << '\n';
  }
  for (const auto& comp : d.components()) {
    if (!d.terminal_crossing(comp.first)) out << "O " << comp.first.value << '\n';
  }
  return out.str();
}

Presentation wirtinger(const KnotDiagram& d) {
  Presentation p;
  p.generators = d.n_arcs();
  for (const auto& c : d.crossings()) {
    const int e = to_int(c.sign);
    p.relators.push_back({{c.under_in.value - 1, 1},
                          {c.over.value - 1, e},
                          {c.under_out.value - 1, -1},
                          {c.over.value - 1, -e}});
    p.relator_arcs.push_back(c.under_in);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Tangle

Tangle::Tangle(std::vector<std::string> arc_names, std::vector<TangleCrossing> crossings,
               std::vector<StrandEnds> strands)
    : names_(std::move(arc_names)), crossings_(std::move(crossings)), strands_(std::move(strands)) {
  const int n = static_cast<int>(names_.size());
  auto check = [n](int a) {
    if (a < 0 || a >= n) throw DiagramError("tangle arc index " + std::to_string(a) + " out of range");
  };
  ends_at_.assign(n, std::nullopt);
  starts_at_.assign(n, std::nullopt);
  for (std::size_t ci = 0; ci < crossings_.size(); ++ci) {
    const auto& c = crossings_[ci];
    check(c.over);
    check(c.under_in);
    check(c.under_out);
    if (ends_at_[c.under_in]) throw DiagramError("tangle arc " + names_[c.under_in] + " ends at two crossings");
    if (starts_at_[c.under_out]) throw DiagramError("tangle arc " + names_[c.under_out] + " starts at two crossings");
    ends_at_[c.under_in] = ci;
    starts_at_[c.under_out] = ci;
  }
  for (const auto& s : strands_) {
    check(s.initial);
    check(s.terminal);
    if (ends_at_[s.terminal]) throw DiagramError("terminal arc " + names_[s.terminal] + " passes under a crossing");
    if (starts_at_[s.initial]) throw DiagramError("initial arc " + names_[s.initial] + " starts at a crossing");
  }
}

Tangle as_tangle(const KnotDiagram& d) {
  std::vector<std::string> names;
  for (int a = 1; a <= d.n_arcs(); ++a) names.push_back(arc_str(a));
  std::vector<TangleCrossing> crossings;
  for (const auto& c : d.crossings()) {
    crossings.push_back({c.over.value - 1, c.under_in.value - 1, c.under_out.value - 1, c.sign});
  }
  return Tangle(std::move(names), std::move(crossings), {});
}

Tangle cut(const KnotDiagram& d, const std::vector<ArcId>& arcs) {
  if (arcs.empty()) throw PreconditionError("cut needs at least one arc");
  std::set<int> to_cut;
  for (ArcId a : arcs) {
    if (a.value < 1 || a.value > d.n_arcs()) throw PreconditionError("unknown arc " + arc_str(a.value));
    to_cut.insert(a.value);
  }

  std::vector<std::string> names;
  std::vector<int> head(d.n_arcs() + 1);  // index used where the arc is under_in
  std::vector<int> body(d.n_arcs() + 1);  // index used as under_out and over
  for (int a = 1; a <= d.n_arcs(); ++a) {
    if (to_cut.count(a) && d.terminal_crossing(ArcId{a})) {
      head[a] = static_cast<int>(names.size());
      names.push_back(arc_str(a) + "'");
      body[a] = static_cast<int>(names.size());
      names.push_back(arc_str(a) + "''");
    } else {
      head[a] = body[a] = static_cast<int>(names.size());
      names.push_back(arc_str(a));
    }
  }
  std::vector<TangleCrossing> crossings;
  for (const auto& c : d.crossings()) {
    crossings.push_back({body[c.over.value], head[c.under_in.value], body[c.under_out.value], c.sign});
  }
  std::vector<StrandEnds> strands;
  for (int a : to_cut) strands.push_back({head[a], body[a]});
  return Tangle(std::move(names), std::move(crossings), std::move(strands));
}

Tangle compose(const Tangle& t1, const Tangle& t2) {
  if (t1.strands().size() != 1 || t2.strands().size() != 1) {
    throw PreconditionError("composition expects two 1-string tangles");
  }
  const StrandEnds e1 = t1.strands().front();
  const StrandEnds e2 = t2.strands().front();

  std::vector<std::string> names;
  std::vector<int> map1(t1.n_arcs(), -1);
  std::vector<int> map2(t2.n_arcs(), -1);
  for (std::size_t a = 0; a < t1.n_arcs(); ++a) {
    if (static_cast<int>(a) == e1.terminal) continue;
    map1[a] = static_cast<int>(names.size());
    names.push_back("1:" + t1.arc_names()[a]);
  }
  const int joined = static_cast<int>(names.size());
  names.push_back("1:" + t1.arc_names()[e1.terminal] + "|2:" + t2.arc_names()[e2.initial]);
  map1[e1.terminal] = joined;
  map2[e2.initial] = joined;
  for (std::size_t a = 0; a < t2.n_arcs(); ++a) {
    if (map2[a] >= 0) continue;
    map2[a] = static_cast<int>(names.size());
    names.push_back("2:" + t2.arc_names()[a]);
  }

  std::vector<TangleCrossing> crossings;
  for (const auto& c : t1.crossings()) crossings.push_back({map1[c.over], map1[c.under_in], map1[c.under_out], c.sign});
  for (const auto& c : t2.crossings()) crossings.push_back({map2[c.over], map2[c.under_in], map2[c.under_out], c.sign});
  return Tangle(std::move(names), std::move(crossings), {{map1[e1.initial], map2[e2.terminal]}});
}

KnotDiagram close(const Tangle& t) {
  if (t.strands().size() != 1) throw PreconditionError("closure expects a 1-string tangle");
  const StrandEnds ends = t.strands().front();
  const int n = static_cast<int>(t.n_arcs());
  auto rep = [&](int a) { return a == ends.terminal ? ends.initial : a; };
  auto successor = [&](int a) -> std::optional<int> {
    // The joined arc ends where the initial half ends.
    auto c = t.terminal_crossing(a);
    if (!c) return std::nullopt;
    return rep(t.crossings()[*c].under_out);
  };

  std::vector<int> number(n, 0);
  int next = 1;
  auto walk_component = [&](int start_after) {
    auto s = successor(start_after);
    if (!s) {
      number[start_after] = next++;
      return;
    }
    int cur = *s;
    while (true) {
      number[cur] = next++;
      if (cur == start_after) break;
      cur = *successor(cur);
    }
  };
  walk_component(ends.initial);
  for (int a = 0; a < n; ++a) {
    if (rep(a) != a || number[a] != 0) continue;
    // Previous arc of a closed loop, so the loop is numbered starting at a.
    int prev = a;
    if (successor(a)) {
      while (*successor(prev) != a) prev = *successor(prev);
    }
    walk_component(prev);
  }

  std::vector<Crossing> crossings;
  for (const auto& c : t.crossings()) {
    crossings.push_back({ArcId{number[rep(c.over)]}, ArcId{number[rep(c.under_in)]}, ArcId{number[rep(c.under_out)]},
                         c.sign});
  }
  return KnotDiagram(next - 1, std::move(crossings));
}

KnotDiagram connected_sum(const KnotDiagram& d1, const KnotDiagram& d2) {
  if (!d1.is_knot() || !d2.is_knot()) throw PreconditionError("connected sum expects two knot diagrams");
  return close(compose(cut(d1, {ArcId{d1.n_arcs()}}), cut(d2, {ArcId{d2.n_arcs()}})));
}

KnotDiagram split_union(const KnotDiagram& d1, const KnotDiagram& d2) {
  std::vector<Crossing> crossings = d1.crossings();
  const int off = d1.n_arcs();
  for (const auto& c : d2.crossings()) {
    crossings.push_back({ArcId{c.over.value + off}, ArcId{c.under_in.value + off}, ArcId{c.under_out.value + off}, c.sign});
  }
  return KnotDiagram(d1.n_arcs() + d2.n_arcs(), std::move(crossings));
}

Tangle cable(const Tangle& t, int n) {
  if (n < 1) throw PreconditionError("cable needs n >= 1");
  if (t.strands().size() != 1) throw PreconditionError("cable expects a 1-string tangle");
  if (n == 1) return t;

  std::vector<std::string> names;
  auto copy = [n](int arc, int s) { return arc * n + s; };
  for (std::size_t a = 0; a < t.n_arcs(); ++a) {
    for (int s = 0; s < n; ++s) names.push_back(t.arc_names()[a] + "#" + std::to_string(s + 1));
  }

  std::vector<TangleCrossing> crossings;
  for (std::size_t ci = 0; ci < t.crossings().size(); ++ci) {
    const auto& c = t.crossings()[ci];
    // Copies are numbered left to right along the strand; the under strand
    // meets the over band from its right edge at a positive crossing and from
    // its left edge at a negative one.
    std::vector<int> order(n);
    for (int s = 0; s < n; ++s) order[s] = c.sign == Sign::positive ? n - 1 - s : s;
    for (int r = 0; r < n; ++r) {
      std::vector<int> pieces{copy(c.under_in, r)};
      for (int q = 1; q < n; ++q) {
        pieces.push_back(static_cast<int>(names.size()));
        names.push_back("c" + std::to_string(ci + 1) + "#" + std::to_string(r + 1) + "." + std::to_string(q));
      }
      pieces.push_back(copy(c.under_out, r));
      for (int s = 0; s < n; ++s) {
        crossings.push_back({copy(c.over, order[s]), pieces[s], pieces[s + 1], c.sign});
      }
    }
  }
  std::vector<StrandEnds> strands;
  const StrandEnds e = t.strands().front();
  for (int s = 0; s < n; ++s) strands.push_back({copy(e.initial, s), copy(e.terminal, s)});
  return Tangle(std::move(names), std::move(crossings), std::move(strands));
}

}  // namespace knotzeta
