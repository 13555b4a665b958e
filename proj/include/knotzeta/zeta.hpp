#pragma once

#include <cstdint>
#include <vector>

#include "knotzeta/arc_graph.hpp"
#include "knotzeta/knot_model.hpp"
#include "knotzeta/verdict.hpp"

namespace knotzeta {

/// A prime cycle stored as its rotation-least edge sequence (a Lyndon word
/// over edge ids). Consecutive edges meet head to tail, and so do the last
/// and the first.
struct Cycle {
  std::vector<int> edges;
  std::size_t length() const noexcept { return edges.size(); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Every prime cycle of length <= max_len, each exactly once, in
/// lexicographic order of the edge words.
std::vector<Cycle> prime_cycles(const ArcGraph& g, int max_len);

/// True when the word closes up in g and is not a proper power of a shorter word.
bool is_primitive_closed_walk(const ArcGraph& g, const std::vector<int>& edges);

template <class T>
T cycle_weight(const Cycle& c, const std::vector<T>& weights) {
  T w = RingTraits<T>::one();
  for (int e : c.edges) w *= weights[e];
  return w;
}

/// sums[m] = total weight of closed walks of length m with a marked start
/// vertex, for m = 0..max_len (sums[0] counts the empty walks).
template <class T>
std::vector<T> closed_walk_sums(const ArcGraph& g, const std::vector<T>& weights, int max_len) {
  std::vector<T> sums(max_len + 1);
  struct Walker {
    const ArcGraph& g;
    const std::vector<T>& w;
    std::vector<T>& sums;
    int max_len;
    int start;
    void go(int v, int depth, const T& acc) {
      if (depth > 0 && v == start) sums[depth] += acc;
      if (depth == max_len) return;
      for (int e : g.out_edges(v)) go(g.edges()[e].to, depth + 1, acc * w[e]);
    }
  };
  for (std::size_t v = 0; v < g.n_vertices(); ++v) {
    Walker{g, weights, sums, max_len, static_cast<int>(v)}.go(static_cast<int>(v), 0, RingTraits<T>::one());
  }
  return sums;
}

/// For m <= L: tr(W^m) against the enumerated closed walks and against the
/// rotations of prime powers; then sum_{p, j} w(p)^j / j against
/// sum_m tr(W^m) / m. All exact.
template <class T>
Verdict trace_identity_check(const ArcGraph& g, const std::vector<T>& weights, int max_len) {
  const std::string horizon = "L=" + std::to_string(max_len);
  if (max_len < 1) throw PreconditionError("trace identity needs L >= 1");
  const Matrix<T> w = weight_matrix(g, weights);
  const auto walks = closed_walk_sums(g, weights, max_len);
  const auto primes = prime_cycles(g, max_len);
  for (const auto& p : primes) {
    if (!is_primitive_closed_walk(g, p.edges)) {
      return compare("trace", false, "non-primitive cycle in prime list", "", horizon);
    }
  }

  std::vector<T> from_primes(max_len + 1);
  T log_primes{};
  for (const auto& p : primes) {
    const T base = cycle_weight(p, weights);
    const int len = static_cast<int>(p.length());
    T power = base;
    for (int j = 1; j * len <= max_len; ++j) {
      from_primes[j * len] += T(Rational(len)) * power;
      log_primes += T(Rational(1, j)) * power;
      power *= base;
    }
  }

  Matrix<T> power = w;
  T log_traces{};
  for (int m = 1; m <= max_len; ++m) {
    if (m > 1) power = power * w;
    const T tr = trace(power);
    if (!(tr == walks[m])) {
      return compare("trace", false, "tr(W^" + std::to_string(m) + ") = " + to_string(tr),
                     "closed walks: " + to_string(walks[m]), horizon);
    }
    if (!(tr == from_primes[m])) {
      return compare("trace", false, "tr(W^" + std::to_string(m) + ") = " + to_string(tr),
                     "prime powers: " + to_string(from_primes[m]), horizon);
    }
    log_traces += T(Rational(1, m)) * tr;
  }
  return compare("trace", log_traces == log_primes, to_string(log_traces), to_string(log_primes), horizon,
                 std::to_string(primes.size()) + " primes");
}

/// Estimate of the spectral radius of |W| as ||(|W|)^16||_1^(1/16).
double spectral_radius_estimate(const ArcGraph& g, const std::vector<Rational>& weights);

struct EulerProduct {
  Rational value;
  std::size_t primes = 0;
  double spectral_estimate = 0.0;
  /// The estimate is >= 1: the product need not converge.
  bool divergent = false;
};

/// prod over primes P with length <= max_len of (1 - w(P))^-1, exactly.
/// Throws InconsistencyError if some prime has weight exactly 1.
EulerProduct zeta_partial_product(const ArcGraph& g, const std::vector<Rational>& weights, int max_len);

inline constexpr double euler_tolerance = 1e-6;

/// Partial Euler product at t0 against 1 / det(I - W)(t0). Skipped when the
/// spectral estimate signals divergence, or when the geometric tail bound at
/// this horizon already exceeds the tolerance.
Verdict euler_check(const ArcGraph& g, const std::vector<QPoly>& weights, const Rational& t0, int max_len);
/// Always compares, even where the product cannot converge; the detail carries a warning then.
Verdict euler_comparison(const ArcGraph& g, const std::vector<QPoly>& weights, const Rational& t0, int max_len);

/// The candidate point with the smallest spectral estimate, for Euler checks.
Rational best_convergence_point(const ArcGraph& g, const std::vector<QPoly>& weights,
                                const std::vector<Rational>& candidates);

/// trace_identity_check at L plus euler_check at (t0, max_len).
Verdict determinant_formula_check(const ArcGraph& g, const std::vector<QPoly>& weights, const Rational& t0,
                                  int trace_len = 8, int max_len = 40);

/// Deterministic sample points: nonzero rationals with small numerators and denominators.
std::vector<Rational> sample_points(std::uint64_t seed, std::size_t count);

/// For a 1-string tangle: the total weight of walks from the initial to the
/// terminal vertex, read off (I - W)^-1, is 1 at every sample.
Verdict path_sum_check(const Tangle& t, const std::vector<Rational>& samples);

/// det(I - W) of the composite equals the product of the two determinants.
Verdict composition_check(const Tangle& t1, const Tangle& t2);

/// det(I - W) of the n-cable at u equals det(I - W) of the tangle at u^n.
Verdict cabling_check(const Tangle& t, int n, const std::vector<Rational>& samples);

/// det(I - W) under the Alexander weights.
QPoly zeta_determinant(const ArcGraph& g);

}  // namespace knotzeta
