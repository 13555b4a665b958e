#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "knotzeta/arc_graph.hpp"
#include "knotzeta/knot_model.hpp"
#include "knotzeta/rational.hpp"
#include "knotzeta/verdict.hpp"

namespace knotzeta {

struct NamedDiagram {
  std::string name;
  KnotDiagram diagram;
};

/// Every *.knot file in `dir`, sorted by file name; the name drops the extension.
std::vector<NamedDiagram> load_corpus(const std::filesystem::path& dir);
NamedDiagram load_diagram_file(const std::filesystem::path& file);

struct SuiteOptions {
  std::uint64_t seed = 0;
  int trace_len = 8;
  int max_len = 40;
  int random_graphs = 200;
  int path_samples = 20;
  /// Overrides for the cable suite; defaults are n in {2, 3} and u in {1/2, 2/3}.
  std::optional<int> cable_n;
  /// Overrides the sample point of the cable and Euler checks.
  std::optional<Rational> t;
};

/// matrix-tree, triple, zeta, path-sum, composition, cable, twisted, all.
const std::vector<std::string>& suite_names();

/// Runs the checks of a suite concurrently and returns them sorted by check id.
/// An exception inside a check becomes a failed verdict carrying the message.
std::vector<Verdict> run_suite(std::string_view suite, const std::vector<NamedDiagram>& corpus,
                               const SuiteOptions& options);

/// Random digraph for matrix-tree checks: 1..max_vertices vertices, each
/// ordered pair (loops included) present with probability 1/2, nonzero
/// rational weights with numerator and denominator below 10, and a random
/// nonempty root set.
struct WeightedDigraph {
  ArcGraph graph;
  std::vector<Rational> weights;
  std::vector<int> roots;
};

WeightedDigraph random_weighted_digraph(std::mt19937_64& rng, int max_vertices);

}  // namespace knotzeta
