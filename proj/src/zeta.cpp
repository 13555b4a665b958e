#include "knotzeta/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <random>

#include "knotzeta/error.hpp"

namespace knotzeta {

namespace {

// Lyndon-word search over edge ids (Fredricksen-Kessler-Maiorana): a word
// extended letter by letter stays a pre-necklace, and it is a necklace of a
// primitive word exactly when its period equals its length.
class PrimeSearch {
 public:
  PrimeSearch(const ArcGraph& g, int max_len) : g_(g), max_len_(max_len) {}

  std::vector<Cycle> run() {
    for (std::size_t e0 = 0; e0 < g_.edges().size(); ++e0) {
      first_ = static_cast<int>(e0);
      start_ = g_.edges()[e0].from;
      compute_distances();
      if (dist_[g_.edges()[e0].to] + 1 > max_len_) continue;
      word_.assign(1, first_);
      extend(g_.edges()[e0].to, 1);
    }
    return std::move(found_);
  }

 private:
  // Shortest number of edges (ids >= first_) from each vertex back to start_.
  void compute_distances() {
    const int unreachable = std::numeric_limits<int>::max() / 2;
    dist_.assign(g_.n_vertices(), unreachable);
    dist_[start_] = 0;
    std::vector<std::vector<int>> incoming(g_.n_vertices());
    for (std::size_t e = first_; e < g_.edges().size(); ++e) incoming[g_.edges()[e].to].push_back(g_.edges()[e].from);
    std::deque<int> queue{start_};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int u : incoming[v]) {
        if (dist_[u] == unreachable) {
          dist_[u] = dist_[v] + 1;
          queue.push_back(u);
        }
      }
    }
  }

  void extend(int v, int period) {
    const int len = static_cast<int>(word_.size());
    if (v == start_ && period == len) found_.push_back(Cycle{word_});
    if (len == max_len_) return;
    for (int e : g_.out_edges(v)) {
      if (e < first_) continue;
      const int compare_with = word_[len - period];
      if (e < compare_with) continue;
      const int to = g_.edges()[e].to;
      if (dist_[to] + len + 1 > max_len_) continue;
      word_.push_back(e);
      extend(to, e == compare_with ? period : len + 1);
      word_.pop_back();
    }
  }

  const ArcGraph& g_;
  int max_len_;
  int first_ = 0;
  int start_ = 0;
  std::vector<int> dist_;
  std::vector<int> word_;
  std::vector<Cycle> found_;
};

Integer product_tree(std::vector<Integer>& xs, std::size_t lo, std::size_t hi) {
  if (hi - lo == 0) return 1;
  if (hi - lo == 1) return xs[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return product_tree(xs, lo, mid) * product_tree(xs, mid, hi);
}

std::string approx(const Rational& q) {
  std::ostringstream out;
  out.precision(12);
  out << q.get_d();
  return out.str();
}

}  // namespace

std::vector<Cycle> prime_cycles(const ArcGraph& g, int max_len) {
  if (max_len < 1) throw PreconditionError("max_len must be at least 1");
  auto primes = PrimeSearch(g, max_len).run();
  std::sort(primes.begin(), primes.end(), [](const Cycle& a, const Cycle& b) { return a.edges < b.edges; });
  return primes;
}

bool is_primitive_closed_walk(const ArcGraph& g, const std::vector<int>& edges) {
  const std::size_t n = edges.size();
  if (n == 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.edges()[edges[i]].to != g.edges()[edges[(i + 1) % n]].from) return false;
  }
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = edges[i] == edges[i - d];
    if (periodic) return false;
  }
  return true;
}

double spectral_radius_estimate(const ArcGraph& g, const std::vector<Rational>& weights) {
  const std::size_t n = g.n_vertices();
  if (n == 0) return 0.0;
  std::vector<double> m(n * n, 0.0);
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    m[g.edges()[e].from * n + g.edges()[e].to] = std::abs(weights[e].get_d());
  }
  for (int squaring = 0; squaring < 4; ++squaring) {
    std::vector<double> r(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (m[i * n + k] == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) r[i * n + j] += m[i * n + k] * m[k * n + j];
      }
    }
    m = std::move(r);
  }
  double norm = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < n; ++i) col += m[i * n + j];
    norm = std::max(norm, col);
  }
  return std::pow(norm, 1.0 / 16.0);
}

EulerProduct zeta_partial_product(const ArcGraph& g, const std::vector<Rational>& weights, int max_len) {
  EulerProduct result;
  result.spectral_estimate = spectral_radius_estimate(g, weights);
  result.divergent = result.spectral_estimate >= 1.0;
  const auto primes = prime_cycles(g, max_len);
  result.primes = primes.size();

  std::vector<Integer> numerators;
  std::vector<Integer> denominators;
  numerators.reserve(primes.size());
  denominators.reserve(primes.size());
  for (const auto& p : primes) {
    const Rational w = cycle_weight(p, weights);
    const Integer a = w.get_num();
    const Integer b = w.get_den();
    if (a == b) throw InconsistencyError("a prime cycle has weight 1; the Euler factor has a pole");
    numerators.push_back(b);
    denominators.push_back(b - a);
  }
  result.value = Rational(product_tree(numerators, 0, numerators.size()),
                          product_tree(denominators, 0, denominators.size()));
  result.value.canonicalize();
  return result;
}

Verdict euler_check(const ArcGraph& g, const std::vector<QPoly>& weights, const Rational& t0, int max_len) {
  const std::string horizon = "max_len=" + std::to_string(max_len) + ", t=" + to_string(t0);
  const auto w0 = evaluate_weights(weights, t0);
  const double rho = spectral_radius_estimate(g, w0);
  std::ostringstream rho_text;
  rho_text.precision(6);
  rho_text << rho;
  if (rho >= 1.0) {
    return skipped("euler", "spectral radius estimate " + rho_text.str() + " >= 1, product diverges", horizon);
  }
  const double tail = std::pow(rho, max_len + 1) / (1.0 - rho);
  if (tail > euler_tolerance) {
    return skipped("euler",
                   "spectral radius estimate " + rho_text.str() + " leaves a tail bound above tolerance at this horizon",
                   horizon);
  }
  if (is_zero(det(identity_minus(weight_matrix(g, w0))))) {
    return skipped("euler", "det(I - W) vanishes at this point", horizon);
  }
  return euler_comparison(g, weights, t0, max_len);
}

Verdict euler_comparison(const ArcGraph& g, const std::vector<QPoly>& weights, const Rational& t0, int max_len) {
  const std::string horizon = "max_len=" + std::to_string(max_len) + ", t=" + to_string(t0);
  const auto w0 = evaluate_weights(weights, t0);
  const Rational d = det(identity_minus(weight_matrix(g, w0)));
  if (is_zero(d)) throw PreconditionError("det(I - W) vanishes at t=" + to_string(t0));
  const EulerProduct product = zeta_partial_product(g, w0, max_len);
  const Rational target = inverse(d);
  const double error = std::abs(Rational(product.value - target).get_d());
  std::ostringstream rho_text;
  rho_text.precision(6);
  rho_text << product.spectral_estimate;
  std::string detail = std::to_string(product.primes) + " primes, rho ~ " + rho_text.str();
  if (product.divergent) detail += ", warning: product diverges at this point";
  return compare("euler", error <= euler_tolerance, approx(product.value), approx(target), horizon, detail);
}

Rational best_convergence_point(const ArcGraph& g, const std::vector<QPoly>& weights,
                                const std::vector<Rational>& candidates) {
  if (candidates.empty()) throw PreconditionError("no candidate points");
  Rational best = candidates.front();
  double best_rho = std::numeric_limits<double>::infinity();
  for (const auto& t0 : candidates) {
    const double rho = spectral_radius_estimate(g, evaluate_weights(weights, t0));
    if (rho < best_rho) {
      best_rho = rho;
      best = t0;
    }
  }
  return best;
}

Verdict determinant_formula_check(const ArcGraph& g, const std::vector<QPoly>& weights, const Rational& t0,
                                  int trace_len, int max_len) {
  return combine("determinant-formula",
                 {trace_identity_check(g, weights, trace_len), euler_check(g, weights, t0, max_len)});
}

std::vector<Rational> sample_points(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<Rational> out;
  while (out.size() < count) {
    const long num = static_cast<long>(rng() % 199) - 99;
    const long den = static_cast<long>(rng() % 97) + 1;
    if (num == 0) continue;
    Rational q(num, den);
    q.canonicalize();
    if (std::find(out.begin(), out.end(), q) != out.end()) continue;
    out.push_back(q);
  }
  return out;
}

Verdict path_sum_check(const Tangle& t, const std::vector<Rational>& samples) {
  if (t.strands().size() != 1) throw PreconditionError("the path-sum check needs a 1-string tangle");
  const ArcGraph g = build_arc_graph(t);
  const auto weights = edge_weights(g, alexander_spec());
  const int from = t.strands().front().initial;
  const int to = t.strands().front().terminal;
  const std::size_t n = g.n_vertices();

  std::size_t used = 0;
  std::vector<std::string> skipped_points;
  for (const auto& t0 : samples) {
    const auto a = identity_minus(weight_matrix(g, evaluate_weights(weights, t0)));
    std::vector<Rational> e(n, Rational(0));
    e[to] = 1;
    const auto x = solve(a, e);
    if (!x) {
      skipped_points.push_back(to_string(t0));
      continue;
    }
    ++used;
    if ((*x)[from] != 1) {
      return compare("path-sum", false, to_string((*x)[from]), "1", "t=" + to_string(t0));
    }
  }
  std::string detail = std::to_string(used) + " samples";
  if (!skipped_points.empty()) {
    detail += ", singular at";
    for (const auto& s : skipped_points) detail += " " + s;
  }
  if (used == 0) return skipped("path-sum", "every sample was singular");
  return compare("path-sum", true, "1", "1", std::to_string(samples.size()) + " samples", detail);
}

QPoly zeta_determinant(const ArcGraph& g) {
  return det(identity_minus(weight_matrix(g, edge_weights(g, alexander_spec()))));
}

Verdict composition_check(const Tangle& t1, const Tangle& t2) {
  const QPoly lhs = zeta_determinant(build_arc_graph(compose(t1, t2)));
  const QPoly rhs = zeta_determinant(build_arc_graph(t1)) * zeta_determinant(build_arc_graph(t2));
  return compare("composition", lhs == rhs, to_string(lhs), to_string(rhs));
}

Verdict cabling_check(const Tangle& t, int n, const std::vector<Rational>& samples) {
  const ArcGraph base = build_arc_graph(t);
  const ArcGraph cabled = build_arc_graph(cable(t, n));
  const auto base_weights = edge_weights(base, alexander_spec());
  const auto cable_weights = edge_weights(cabled, alexander_spec());
  const std::string horizon = "n=" + std::to_string(n);
  for (const auto& u : samples) {
    if (is_zero(u)) throw PreconditionError("cable samples must be nonzero");
    Rational un = 1;
    for (int i = 0; i < n; ++i) un *= u;
    const Rational lhs = det(identity_minus(weight_matrix(cabled, evaluate_weights(cable_weights, u))));
    const Rational rhs = det(identity_minus(weight_matrix(base, evaluate_weights(base_weights, un))));
    if (lhs != rhs) {
      return compare("cable", false, to_string(lhs), to_string(rhs), horizon + ", u=" + to_string(u));
    }
  }
  std::string points;
  for (const auto& u : samples) points += (points.empty() ? "" : " ") + to_string(u);
  return compare("cable", true, "equal", "equal", horizon + ", u in {" + points + "}",
                 std::to_string(cabled.n_vertices()) + " cable vertices");
}

}  // namespace knotzeta
