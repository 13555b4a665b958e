#include "knotzeta/suites.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include "knotzeta/alexander.hpp"
#include "knotzeta/arborescence.hpp"
#include "knotzeta/error.hpp"
#include "knotzeta/twisted.hpp"
#include "knotzeta/zeta.hpp"

namespace knotzeta {

namespace {

struct Task {
  std::string id;
  std::function<Verdict()> run;
};

using Tasks = std::vector<Task>;

std::string padded(int i) {
  std::ostringstream out;
  out << std::setw(3) << std::setfill('0') << i;
  return out.str();
}

std::vector<std::vector<int>> cut_sets(int n, int max_size) {
  std::vector<std::vector<int>> sets;
  for (int a = 1; a <= n; ++a) sets.push_back({a});
  if (max_size >= 2) {
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) sets.push_back({a, b});
    }
  }
  return sets;
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

std::vector<int> tangle_roots(const Tangle& t) {
  std::vector<int> roots;
  for (const auto& s : t.strands()) {
    roots.push_back(s.initial);
    if (s.terminal != s.initial) roots.push_back(s.terminal);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// --------------------------------------------------------------------------

void matrix_tree_tasks(Tasks& tasks, const std::vector<NamedDiagram>& corpus, const SuiteOptions& o) {
  std::mt19937_64 rng(o.seed);
  for (int i = 0; i < o.random_graphs; ++i) {
    auto g = std::make_shared<WeightedDigraph>(random_weighted_digraph(rng, 6));
    tasks.push_back({"matrix-tree/random/" + padded(i), [g] { return matrix_tree_check(g->graph, g->weights, g->roots); }});
  }
  for (const auto& [name, d] : corpus) {
    if (!d.is_knot()) continue;
    const auto diagram = std::make_shared<KnotDiagram>(d);
    for (const auto& roots : cut_sets(d.n_arcs(), 2)) {
      tasks.push_back({"matrix-tree/" + name + "/roots=" + join(roots), [diagram, roots] {
                         const ArcGraph g = build_arc_graph(*diagram);
                         std::vector<int> r;
                         for (int a : roots) r.push_back(a - 1);
                         return matrix_tree_check(g, edge_weights(g, alexander_spec()), r);
                       }});
      tasks.push_back({"cut-trees/" + name + "/cut=" + join(roots), [diagram, roots] {
                         const ArcGraph g = build_arc_graph(*diagram);
                         std::vector<std::size_t> drop;
                         for (int a : roots) drop.push_back(static_cast<std::size_t>(a - 1));
                         const auto iw = identity_minus(weight_matrix(g, edge_weights(g, alexander_spec())));
                         const QPoly minor = det(iw.without(drop, drop));
                         std::vector<ArcId> arcs;
                         for (int a : roots) arcs.push_back(ArcId{a});
                         const Tangle t = cut(*diagram, arcs);
                         const ArcGraph cg = build_arc_graph(t);
                         const QPoly trees = tree_polynomial(cg, edge_weights(cg, alexander_spec()), tangle_roots(t));
                         return compare("cut-trees", minor == trees, to_string(minor), to_string(trees));
                       }});
    }
    tasks.push_back({"signed-trees/" + name, [diagram] {
                       const Integer expected = knot_determinant(*diagram);
                       std::string values;
                       bool ok = true;
                       for (int a = 1; a <= diagram->n_arcs(); ++a) {
                         const Integer v = determinant_via_trees(*diagram, ArcId{a});
                         ok = ok && abs(v) == expected;
                         values += (values.empty() ? "" : " ") + v.get_str();
                       }
                       return compare("signed-trees", ok, values, expected.get_str());
                     }});
    tasks.push_back({"root-independence/" + name, [diagram] {
                       const ArcGraph g = build_arc_graph(*diagram);
                       const auto w = edge_weights(g, alexander_spec());
                       const auto first = canonicalize(tree_polynomial(g, w, {0}));
                       for (int a = 1; a < diagram->n_arcs(); ++a) {
                         const auto other = canonicalize(tree_polynomial(g, w, {a}));
                         if (!(other == first)) {
                           return compare("root-independence", false, to_string(first.poly), to_string(other.poly),
                                          {}, "root " + std::to_string(a + 1));
                         }
                       }
                       return compare("root-independence", true, to_string(first.poly), to_string(first.poly));
                     }});
  }
}

void triple_tasks(Tasks& tasks, const std::vector<NamedDiagram>& corpus, const SuiteOptions&) {
  for (const auto& [name, d] : corpus) {
    if (!d.is_knot()) continue;
    const auto diagram = std::make_shared<KnotDiagram>(d);
    for (int a = 1; a <= d.n_arcs(); ++a) {
      tasks.push_back({"triple/" + name + "/cut=" + std::to_string(a), [diagram, a] { return triple_check(*diagram, ArcId{a}); }});
    }
    tasks.push_back({"fox-arcgraph/" + name, [diagram] { return fox_equals_arcgraph_check(*diagram); }});
    tasks.push_back({"minor-independence/" + name, [diagram] {
                       const auto base = alexander_polynomial(*diagram).poly;
                       for (int i = 1; i <= diagram->n_arcs(); ++i) {
                         for (int j = 1; j <= diagram->n_arcs(); ++j) {
                           const auto m = alexander_polynomial(*diagram, ArcId{i}, ArcId{j}).poly;
                           if (!(m == base)) {
                             return compare("minor-independence", false, to_string(base.poly), to_string(m.poly), {},
                                            "minor (" + std::to_string(i) + "," + std::to_string(j) + ")");
                           }
                         }
                       }
                       return compare("minor-independence", true, to_string(base.poly), to_string(base.poly));
                     }});
    tasks.push_back({"symmetry/" + name, [diagram] {
                       const QPoly delta = alexander_polynomial(*diagram).poly.poly;
                       QPoly mirrored;
                       for (const auto& [e, c] : delta.terms()) mirrored.add_term(-e, c);
                       const auto a = canonicalize(delta);
                       const auto b = canonicalize(mirrored);
                       const Rational at_one = eval(delta, Rational(1));
                       const bool ok = a == b && (at_one == 1 || at_one == -1);
                       return compare("symmetry", ok, to_string(a.poly) + " at 1: " + to_string(at_one),
                                      to_string(b.poly));
                     }});
  }
}

const std::vector<Rational>& euler_candidates() {
  static const std::vector<Rational> points{Rational(1, 2), Rational(2), Rational(1, 3), Rational(3),
                                            Rational(2, 3), Rational(3, 2), Rational(1, 10), Rational(10)};
  return points;
}

void zeta_tasks(Tasks& tasks, const std::vector<NamedDiagram>& corpus, const SuiteOptions& o) {
  for (const auto& [name, d] : corpus) {
    const auto diagram = std::make_shared<KnotDiagram>(d);
    tasks.push_back({"trace/" + name + "/uncut", [diagram, o] {
                       const ArcGraph g = build_arc_graph(*diagram);
                       return trace_identity_check(g, edge_weights(g, alexander_spec()), o.trace_len);
                     }});
    if (!d.is_knot()) continue;
    for (int a = 1; a <= d.n_arcs(); ++a) {
      tasks.push_back({"determinant-formula/" + name + "/cut=" + std::to_string(a), [diagram, a, o] {
                         const ArcGraph g = build_arc_graph(cut(*diagram, {ArcId{a}}));
                         const auto w = edge_weights(g, alexander_spec());
                         const Rational t0 = o.t ? *o.t : best_convergence_point(g, w, euler_candidates());
                         return determinant_formula_check(g, w, t0, o.trace_len, o.max_len);
                       }});
    }
  }
}

void path_sum_tasks(Tasks& tasks, const std::vector<NamedDiagram>& corpus, const SuiteOptions& o) {
  const auto samples = std::make_shared<std::vector<Rational>>(sample_points(o.seed, o.path_samples));
  for (const auto& [name, d] : corpus) {
    if (!d.is_knot()) continue;
    const auto diagram = std::make_shared<KnotDiagram>(d);
    for (int a = 1; a <= d.n_arcs(); ++a) {
      tasks.push_back({"path-sum/" + name + "/cut=" + std::to_string(a),
                       [diagram, a, samples] { return path_sum_check(cut(*diagram, {ArcId{a}}), *samples); }});
    }
  }
}

void composition_tasks(Tasks& tasks, const std::vector<NamedDiagram>& corpus, const SuiteOptions&) {
  std::vector<std::size_t> knots;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (corpus[i].diagram.is_knot()) knots.push_back(i);
  }
  for (std::size_t x = 0; x < knots.size(); ++x) {
    for (std::size_t y = x; y < knots.size(); ++y) {
      const auto d1 = std::make_shared<KnotDiagram>(corpus[knots[x]].diagram);
      const auto d2 = std::make_shared<KnotDiagram>(corpus[knots[y]].diagram);
      const std::string pair = corpus[knots[x]].name + "+" + corpus[knots[y]].name;
      tasks.push_back({"composition/" + pair, [d1, d2] {
                         return composition_check(cut(*d1, {ArcId{d1->n_arcs()}}), cut(*d2, {ArcId{d2->n_arcs()}}));
                       }});
      tasks.push_back({"multiplicativity/" + pair, [d1, d2] { return multiplicativity_check(*d1, *d2); }});
      tasks.push_back({"split/" + pair, [d1, d2] { return split_check(*d1, *d2); }});
    }
  }
}

void cable_tasks(Tasks& tasks, const std::vector<NamedDiagram>& corpus, const SuiteOptions& o) {
  const std::vector<int> ns = o.cable_n ? std::vector<int>{*o.cable_n} : std::vector<int>{2, 3};
  const std::vector<Rational> us = o.t ? std::vector<Rational>{*o.t} : std::vector<Rational>{Rational(1, 2), Rational(2, 3)};
  for (const auto& [name, d] : corpus) {
    if (!d.is_knot()) continue;
    const auto diagram = std::make_shared<KnotDiagram>(d);
    for (int n : ns) {
      tasks.push_back({"cable/" + name + "/n=" + std::to_string(n),
                       [diagram, n, us] { return cabling_check(cut(*diagram, {ArcId{diagram->n_arcs()}}), n, us); }});
    }
  }
}

// All nonconstant colorings spanned by the basis, capped for large spaces.
std::vector<std::vector<Fp>> all_nonconstant_colorings(const ColoringSpace& space, std::size_t cap) {
  std::vector<std::vector<Fp>> out;
  const std::size_t dim = space.dimension();
  std::vector<std::uint32_t> coeff(dim, 0);
  while (out.size() < cap) {
    std::vector<Fp> c(space.basis.front().size(), Fp(0, space.p));
    for (std::size_t b = 0; b < dim; ++b) {
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += Fp(coeff[b], space.p) * space.basis[b][i];
    }
    bool constant = true;
    for (const auto& x : c) constant = constant && x == c.front();
    if (!constant) out.push_back(c);
    std::size_t pos = 0;
    while (pos < dim && ++coeff[pos] == space.p) coeff[pos++] = 0;
    if (pos == dim) break;
  }
  return out;
}

void twisted_tasks(Tasks& tasks, const std::vector<NamedDiagram>& corpus, const SuiteOptions&) {
  for (const auto& [name, d] : corpus) {
    if (!d.is_knot()) continue;
    const auto diagram = std::make_shared<KnotDiagram>(d);
    tasks.push_back({"twisted-trivial/" + name + "/reduction", [diagram] { return trivial_reduction_check(*diagram); }});
    tasks.push_back({"twisted-trivial/" + name + "/block-identity", [diagram] {
                       return block_identity_check(*diagram, trivial_representation(diagram->n_arcs()));
                     }});
    tasks.push_back({"twisted-trivial/" + name + "/trace", [diagram] {
                       return twisted_trace_check(*diagram, trivial_representation(diagram->n_arcs()), 6);
                     }});
    const Integer det_k = knot_determinant(d);
    for (std::uint32_t p : {3U, 5U, 7U}) {
      if (det_k % p != 0) continue;
      const std::string prefix = "twisted/" + name + "/p=" + std::to_string(p) + "/";
      tasks.push_back({prefix + "coloring-space", [diagram, p] {
                         const auto space = fox_colorings(*diagram, p);
                         const auto colorings = all_nonconstant_colorings(space, 1000);
                         const Presentation pres = wirtinger(*diagram);
                         for (const auto& c : colorings) {
                           const Verdict v = verify_representation(pres, dihedral_representation(*diagram, p, c));
                           if (!v.passed()) return v;
                         }
                         return compare("coloring-space", !colorings.empty(), std::to_string(colorings.size()) + " representations",
                                        "dimension " + std::to_string(space.dimension()));
                       }});
      auto rep = [diagram, p] {
        return dihedral_representation(*diagram, p, nonconstant_coloring(fox_colorings(*diagram, p)));
      };
      tasks.push_back({prefix + "block-identity", [diagram, rep] { return block_identity_check(*diagram, rep()); }});
      tasks.push_back({prefix + "fundamental-formula", [diagram, rep] { return fundamental_formula_check(*diagram, rep()); }});
      tasks.push_back({prefix + "column-independence", [diagram, rep] { return column_independence_check(*diagram, rep()); }});
      tasks.push_back({prefix + "cofactor", [diagram, rep] { return twisted_cofactor_check(*diagram, rep()); }});
      tasks.push_back({prefix + "trace", [diagram, rep] {
                         if (diagram->crossings().size() > 8) return skipped("twisted-trace", "more than 8 crossings");
                         return twisted_trace_check(*diagram, rep(), 6);
                       }});
    }
  }
}

Verdict run_guarded(const Task& task) {
  Verdict v;
  try {
    v = task.run();
  } catch (const std::exception& e) {
    v = compare(task.id, false, std::string("exception: ") + e.what(), "no exception");
  }
  v.check = task.id;
  return v;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"matrix-tree", "triple", "zeta", "path-sum",
                                              "composition", "cable",  "twisted", "all"};
  return names;
}

std::vector<Verdict> run_suite(std::string_view suite, const std::vector<NamedDiagram>& corpus,
                               const SuiteOptions& options) {
  Tasks tasks;
  const bool all = suite == "all";
  bool known = all;
  auto want = [&](std::string_view s) {
    known = known || suite == s;
    return all || suite == s;
  };
  if (want("matrix-tree")) matrix_tree_tasks(tasks, corpus, options);
  if (want("triple")) triple_tasks(tasks, corpus, options);
  if (want("zeta")) zeta_tasks(tasks, corpus, options);
  if (want("path-sum")) path_sum_tasks(tasks, corpus, options);
  if (want("composition")) composition_tasks(tasks, corpus, options);
  if (want("cable")) cable_tasks(tasks, corpus, options);
  if (want("twisted")) twisted_tasks(tasks, corpus, options);
  if (!known) throw InputError("unknown suite '" + std::string(suite) + "'");

  std::vector<Verdict> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = run_guarded(tasks[i]);
  };
  const unsigned n_threads = std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(), 16U));
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::sort(results.begin(), results.end(), [](const Verdict& a, const Verdict& b) { return a.check < b.check; });
  return results;
}

WeightedDigraph random_weighted_digraph(std::mt19937_64& rng, int max_vertices) {
  const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vertices));
  std::vector<std::string> names;
  for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v + 1));
  std::vector<Edge> edges;
  std::vector<Rational> weights;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (rng() % 2 == 0) continue;
      edges.push_back({a, b, WeightLabel::T1, static_cast<int>(edges.size())});
      long num = 0;
      while (num == 0) num = static_cast<long>(rng() % 19) - 9;
      Rational w(num, static_cast<long>(rng() % 9) + 1);
      w.canonicalize();
      weights.push_back(w);
    }
  }
  std::vector<int> roots;
  while (roots.empty()) {
    for (int v = 0; v < n; ++v) {
      if (rng() % 3 == 0) roots.push_back(v);
    }
  }
  return WeightedDigraph{ArcGraph(std::move(names), std::move(edges)), std::move(weights), std::move(roots)};
}

namespace {

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw InputError("cannot read " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

NamedDiagram load_diagram_file(const std::filesystem::path& file) {
  return NamedDiagram{file.stem().string(), parse_pd(read_file(file))};
}

std::vector<NamedDiagram> load_corpus(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) throw InputError("corpus directory " + dir.string() + " not found");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".knot") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<NamedDiagram> out;
  for (const auto& f : files) out.push_back(load_diagram_file(f));
  return out;
}

}  // namespace knotzeta
