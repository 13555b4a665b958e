// knotzeta: Alexander-type invariants and their cross-checks from the command line.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "knotzeta/alexander.hpp"
#include "knotzeta/arborescence.hpp"
#include "knotzeta/error.hpp"
#include "knotzeta/json_io.hpp"
#include "knotzeta/suites.hpp"
#include "knotzeta/twisted.hpp"
#include "knotzeta/zeta.hpp"

#ifndef KNOTZETA_DEFAULT_CORPUS
#define KNOTZETA_DEFAULT_CORPUS "corpus"
#endif

namespace fs = std::filesystem;
using namespace knotzeta;

namespace {

constexpr int exit_input = 2;
constexpr int exit_inconsistent = 3;

struct Options {
  std::vector<std::string> inputs;
  std::optional<int> root;
  std::string cut_list;
  std::string convention = "minor";
  std::string rep_file;
  std::optional<std::uint32_t> dihedral;
  int max_len = 40;
  std::string t_text;
  std::optional<int> n;
  std::uint64_t seed = 0;
  bool json = false;
  std::string check;
  std::string suite;
  std::string format = "json";
};

fs::path corpus_dir() {
  if (const char* env = std::getenv("KNOTZETA_CORPUS"); env != nullptr && *env != '\0') return env;
  return KNOTZETA_DEFAULT_CORPUS;
}

std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError("cannot read " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A path, a file name inside the corpus, or an inline "X+ 3 1 2 / ..." diagram.
NamedDiagram resolve_diagram(const std::string& arg) {
  std::error_code ec;
  if (fs::is_regular_file(arg, ec)) return load_diagram_file(arg);
  const fs::path in_corpus = corpus_dir() / arg;
  if (fs::is_regular_file(in_corpus, ec)) return load_diagram_file(in_corpus);
  const fs::path with_ext = corpus_dir() / (arg + ".knot");
  if (fs::is_regular_file(with_ext, ec)) return load_diagram_file(with_ext);
  if (arg.find(' ') != std::string::npos) return NamedDiagram{"inline", parse_pd(arg)};
  throw InputError("cannot read diagram '" + arg + "'");
}

KnotDiagram first_diagram(const Options& o) {
  if (o.inputs.empty()) throw InputError("a diagram argument is required");
  return resolve_diagram(o.inputs.front()).diagram;
}

std::vector<ArcId> parse_arcs(const std::string& list) {
  std::vector<ArcId> arcs;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const int a = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      arcs.push_back(ArcId{a});
    } catch (const std::logic_error&) {
      throw InputError("bad arc number '" + item + "' in --cut");
    }
  }
  return arcs;
}

Rational t_or(const Options& o, const Rational& fallback) { return o.t_text.empty() ? fallback : parse_rational(o.t_text); }

void print(const Json& j) { std::cout << j.dump() << '\n'; }

Json verdict_doc(const Verdict& v) { return verdict_json(v); }

int status_code(const Verdict& v) { return v.failed() ? exit_inconsistent : 0; }

// --------------------------------------------------------------------------

int cmd_alexander(const Options& o) {
  const KnotDiagram d = first_diagram(o);
  std::optional<ArcId> root;
  if (o.root) root = ArcId{*o.root};
  const Convention conv = o.convention == "eq10" ? Convention::eq10 : Convention::minor;
  const auto a = alexander_polynomial(d, root, root, conv);
  Json out;
  out["poly"] = coefficients_json(a.poly.poly);
  if (conv == Convention::eq10) {
    out["exact"] = a.exact;
    out["denominator"] = coefficients_json(canonicalize(a.denominator).poly);
  }
  out["det"] = knot_determinant(d).get_si();
  if (o.json) {
    out["unit"] = to_string(a.poly.unit);
    out["text"] = to_string(a.poly.poly);
  }
  print(out);
  return 0;
}

int cmd_det(const Options& o) {
  const KnotDiagram d = first_diagram(o);
  Json out;
  out["det"] = knot_determinant(d).get_si();
  if (o.json) {
    const ArcId root{o.root.value_or(d.n_arcs())};
    out["tree_sum"] = determinant_via_trees(d, root).get_si();
    out["root"] = root.value;
  }
  print(out);
  return 0;
}

int cmd_twisted(const Options& o) {
  const KnotDiagram d = first_diagram(o);
  Representation rho;
  if (!o.rep_file.empty()) {
    Json j;
    try {
      j = Json::parse(read_text(o.rep_file));
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("malformed representation file: ") + e.what());
    }
    rho = parse_representation(j);
  } else if (o.dihedral) {
    rho = dihedral_representation(d, *o.dihedral, nonconstant_coloring(fox_colorings(d, *o.dihedral)));
  } else {
    rho = trivial_representation(d.n_arcs());
  }
  std::optional<int> column;
  if (o.root) column = *o.root - 1;
  const auto tw = twisted_alexander_polynomial(d, rho, column);
  Json out;
  out["field"] = rho.field.modulus();
  out["dim"] = rho.dim;
  out["column"] = tw.column + 1;
  out["numerator"] = coefficients_json(tw.numerator);
  out["denominator"] = coefficients_json(tw.denominator);
  out["unit"] = "c t^k, c in F_" + std::to_string(rho.field.modulus());
  if (o.json) out["representation"] = representation_json(rho);
  print(out);
  return 0;
}

int cmd_tree_poly(const Options& o) {
  const KnotDiagram d = first_diagram(o);
  ArcGraph g = build_arc_graph(d);
  std::vector<int> roots;
  if (!o.cut_list.empty()) {
    const Tangle t = cut(d, parse_arcs(o.cut_list));
    g = build_arc_graph(t);
    for (const auto& s : t.strands()) {
      roots.push_back(s.initial);
      if (s.terminal != s.initial) roots.push_back(s.terminal);
    }
  } else {
    const int r = o.root.value_or(d.n_arcs());
    if (r < 1 || r > d.n_arcs()) throw PreconditionError("unknown arc " + std::to_string(r));
    roots.push_back(r - 1);
  }
  const auto w = edge_weights(g, alexander_spec());
  const QPoly p = tree_polynomial(g, w, roots);
  Json out;
  out["poly"] = coefficients_json(p);
  out["arborescences"] = enumerate_arborescences(g, roots).size();
  if (o.json) {
    const auto c = canonicalize(p);
    out["canonical"] = canonical_json(c);
    Json names = Json::array();
    for (int r : roots) names.push_back(g.vertex_names()[r]);
    out["roots"] = names;
  }
  print(out);
  return 0;
}

Tangle one_string(const KnotDiagram& d, const Options& o) {
  auto arcs = parse_arcs(o.cut_list);
  if (arcs.empty()) arcs.push_back(ArcId{d.n_arcs()});
  if (arcs.size() != 1) throw PreconditionError("this check needs exactly one cut arc");
  return cut(d, arcs);
}

int cmd_zeta(const Options& o) {
  const KnotDiagram d = first_diagram(o);
  Verdict v;
  if (o.check == "trace") {
    const ArcGraph g = o.cut_list.empty() ? build_arc_graph(d) : build_arc_graph(cut(d, parse_arcs(o.cut_list)));
    v = trace_identity_check(g, edge_weights(g, alexander_spec()), std::min(o.max_len, 12));
  } else if (o.check == "euler") {
    const ArcGraph g = build_arc_graph(one_string(d, o));
    v = euler_comparison(g, edge_weights(g, alexander_spec()), t_or(o, Rational(1, 2)), o.max_len);
  } else if (o.check == "path-sum") {
    v = path_sum_check(one_string(d, o), o.t_text.empty() ? sample_points(o.seed, 20)
                                                           : std::vector<Rational>{parse_rational(o.t_text)});
  } else if (o.check == "composition") {
    if (o.inputs.size() < 2) throw InputError("composition needs two diagrams");
    const KnotDiagram d2 = resolve_diagram(o.inputs[1]).diagram;
    v = composition_check(cut(d, {ArcId{d.n_arcs()}}), cut(d2, {ArcId{d2.n_arcs()}}));
  } else if (o.check == "cable") {
    const std::vector<Rational> us = o.t_text.empty() ? std::vector<Rational>{Rational(1, 2), Rational(2, 3)}
                                                      : std::vector<Rational>{parse_rational(o.t_text)};
    v = cabling_check(one_string(d, o), o.n.value_or(2), us);
  } else {
    throw InputError("unknown check '" + o.check + "'");
  }
  print(verdict_doc(v));
  return status_code(v);
}

int cmd_verify(const Options& o) {
  std::vector<NamedDiagram> corpus = load_corpus(corpus_dir());
  for (const auto& in : o.inputs) {
    NamedDiagram extra = resolve_diagram(in);
    extra.name = "input:" + extra.name;
    corpus.push_back(std::move(extra));
  }
  SuiteOptions so;
  so.seed = o.seed;
  so.max_len = o.max_len;
  so.cable_n = o.n;
  if (!o.t_text.empty()) so.t = parse_rational(o.t_text);
  const auto results = run_suite(o.suite, corpus, so);

  std::size_t passed = 0, failed = 0, skipped_count = 0;
  for (const auto& v : results) {
    passed += v.passed();
    failed += v.failed();
    skipped_count += v.status == Status::skipped;
  }
  if (o.json) {
    Json reports = Json::array();
    for (const auto& v : results) reports.push_back(verdict_json(v));
    print(Json{{"suite", o.suite},
               {"seed", o.seed},
               {"passed", passed},
               {"failed", failed},
               {"skipped", skipped_count},
               {"reports", reports}});
  } else {
    for (const auto& v : results) {
      std::cout << to_string(v.status) << ' ' << v.check;
      if (v.failed()) std::cout << "  lhs: " << v.lhs << "  rhs: " << v.rhs;
      if (!v.passed() && !v.detail.empty()) std::cout << "  (" << v.detail << ')';
      std::cout << '\n';
    }
    std::cout << passed << " passed, " << failed << " failed, " << skipped_count << " skipped\n";
  }
  return failed == 0 ? 0 : exit_inconsistent;
}

int cmd_export(const Options& o) {
  const KnotDiagram d = first_diagram(o);
  if (o.format == "json") {
    print(diagram_json(d));
    return 0;
  }
  const ArcGraph g = o.cut_list.empty() ? build_arc_graph(d) : build_arc_graph(cut(d, parse_arcs(o.cut_list)));
  if (o.format == "graph") {
    print(graph_json(g));
  } else if (o.format == "dot") {
    std::cout << graph_dot(g);
  } else if (o.format == "pd") {
    std::cout << render_pd(d);
  } else {
    throw InputError("unknown export format '" + o.format + "'");
  }
  return 0;
}

void print_error(const std::string& kind, const std::string& message, std::optional<int> line = std::nullopt,
                 std::optional<int> column = std::nullopt) {
  Json err{{"kind", kind}, {"message", message}};
  if (line) err["line"] = *line;
  if (column) err["column"] = *column;
  std::cerr << Json{{"error", err}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alexander polynomials, arborescence sums and zeta checks for knot diagrams"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* sub, bool many_inputs = false) {
    auto* in = sub->add_option("diagram", o.inputs, "diagram file, corpus name, or inline crossing list");
    if (!many_inputs) in->expected(0, 1);
    sub->add_flag("--json", o.json, "detailed JSON output");
  };

  auto* alexander = app.add_subcommand("alexander", "canonical Alexander polynomial and determinant");
  common(alexander);
  alexander->add_option("--root", o.root, "arc whose relator row and generator column are deleted");
  alexander->add_option("--convention", o.convention, "minor (default) or eq10 (divide by t - 1)")
      ->check(CLI::IsMember({"minor", "eq10"}));

  auto* det_cmd = app.add_subcommand("det", "knot determinant");
  common(det_cmd);
  det_cmd->add_option("--root", o.root, "root arc for the arborescence sum (with --json)");

  auto* twisted = app.add_subcommand("twisted", "twisted Alexander polynomial");
  common(twisted);
  twisted->add_option("--rep", o.rep_file, "representation JSON file");
  twisted->add_option("--dihedral", o.dihedral, "odd prime p; uses a dihedral representation from a p-coloring");
  twisted->add_option("--root", o.root, "generator column to delete (default: first admissible)");

  auto* tree = app.add_subcommand("tree-poly", "arborescence polynomial of the arc graph");
  common(tree);
  tree->add_option("--root", o.root, "root arc of the uncut graph");
  tree->add_option("--cut", o.cut_list, "comma-separated arcs to cut; roots become the cut ends");

  auto* zeta = app.add_subcommand("zeta", "zeta function checks");
  common(zeta, true);
  zeta->add_option("--check", o.check, "trace, euler, path-sum, composition or cable")
      ->required()
      ->check(CLI::IsMember({"trace", "euler", "path-sum", "composition", "cable"}));
  zeta->add_option("--cut", o.cut_list, "arcs to cut");
  zeta->add_option("--max-len", o.max_len, "cycle length horizon")->check(CLI::PositiveNumber);
  zeta->add_option("--t", o.t_text, "rational sample point a/b");
  zeta->add_option("--n", o.n, "cable multiplicity")->check(CLI::PositiveNumber);
  zeta->add_option("--seed", o.seed, "seed for sample points");

  auto* verify = app.add_subcommand("verify", "run verification suites over the corpus");
  verify->add_option("suite", o.suite, "matrix-tree, triple, zeta, path-sum, composition, cable, twisted or all")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("diagrams", o.inputs, "extra diagrams");
  verify->add_flag("--json", o.json, "emit one JSON document instead of text lines");
  verify->add_option("--seed", o.seed, "seed for randomized instances");
  verify->add_option("--max-len", o.max_len, "Euler product horizon")->check(CLI::PositiveNumber);
  verify->add_option("--n", o.n, "cable multiplicity")->check(CLI::PositiveNumber);
  verify->add_option("--t", o.t_text, "sample point for cable and Euler checks");

  auto* export_cmd = app.add_subcommand("export", "diagram or arc graph export");
  common(export_cmd);
  export_cmd->add_option("--format", o.format, "json (diagram), graph (arc graph JSON), dot, pd")
      ->check(CLI::IsMember({"json", "graph", "dot", "pd"}));
  export_cmd->add_option("--cut", o.cut_list, "arcs to cut before building the graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("usage", e.what());
    return exit_input;
  }

  try {
    if (alexander->parsed()) return cmd_alexander(o);
    if (det_cmd->parsed()) return cmd_det(o);
    if (twisted->parsed()) return cmd_twisted(o);
    if (tree->parsed()) return cmd_tree_poly(o);
    if (zeta->parsed()) return cmd_zeta(o);
    if (verify->parsed()) return cmd_verify(o);
    if (export_cmd->parsed()) return cmd_export(o);
  } catch (const ParseError& e) {
    print_error(e.kind(), e.what(), e.line(), e.column());
    return exit_input;
  } catch (const InconsistencyError& e) {
    print_error(e.kind(), e.what());
    return exit_inconsistent;
  } catch (const Error& e) {
    print_error(e.kind(), e.what());
    return exit_input;
  }
  return exit_input;
}
