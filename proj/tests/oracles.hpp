#pragma once

// Slow, obviously-correct reference computations. Nothing here calls into the
// library's determinant, arborescence or cycle code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "knotzeta/arc_graph.hpp"
#include "knotzeta/knot_model.hpp"
#include "knotzeta/laurent.hpp"
#include "knotzeta/matrix.hpp"

namespace oracle {

using knotzeta::Matrix;
using knotzeta::QPoly;
using knotzeta::Rational;

/// Leibniz expansion over all permutations.
template <class T>
T leibniz_det(const Matrix<T>& a, const T& one) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T sum = one - one;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    T term = one;
    for (std::size_t i = 0; i < n; ++i) term = term * a(i, perm[i]);
    if (inversions % 2 == 0) {
      sum = sum + term;
    } else {
      sum = sum - term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

/// Every choice of one out-edge per non-root vertex, kept when following the
/// choices from any vertex reaches a root. Returns the chosen edge sets.
inline std::vector<std::vector<int>> brute_arborescences(const knotzeta::ArcGraph& g, const std::vector<int>& roots) {
  const int n = static_cast<int>(g.n_vertices());
  std::vector<char> is_root(n, 0);
  for (int r : roots) is_root[r] = 1;
  std::vector<int> free;
  for (int v = 0; v < n; ++v) {
    if (!is_root[v]) free.push_back(v);
  }
  std::vector<std::vector<int>> choices(n);
  for (int id = 0; id < static_cast<int>(g.edges().size()); ++id) {
    const auto& e = g.edges()[id];
    if (e.from != e.to) choices[e.from].push_back(id);
  }
  std::vector<std::vector<int>> found;
  std::vector<std::size_t> pick(free.size(), 0);
  for (int v : free) {
    if (choices[v].empty()) return found;
  }
  while (true) {
    std::vector<int> next(n, -1);
    for (std::size_t i = 0; i < free.size(); ++i) next[free[i]] = g.edges()[choices[free[i]][pick[i]]].to;
    bool ok = true;
    for (int v : free) {
      int cur = v;
      for (int steps = 0; steps <= n && !is_root[cur]; ++steps) cur = next[cur];
      if (!is_root[cur]) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<int> ids;
      for (std::size_t i = 0; i < free.size(); ++i) ids.push_back(choices[free[i]][pick[i]]);
      std::sort(ids.begin(), ids.end());
      found.push_back(ids);
    }
    std::size_t i = 0;
    while (i < free.size() && ++pick[i] == choices[free[i]].size()) pick[i++] = 0;
    if (i == free.size()) break;
  }
  return found;
}

/// All edge sequences of length <= max_len forming a closed walk, reduced to
/// those that are primitive and lexicographically least among their rotations.
inline std::set<std::vector<int>> brute_prime_cycles(const knotzeta::ArcGraph& g, int max_len) {
  std::set<std::vector<int>> primes;
  const int m = static_cast<int>(g.edges().size());
  std::vector<int> walk;
  auto is_canonical_prime = [](const std::vector<int>& w) {
    const std::size_t len = w.size();
    for (std::size_t r = 1; r < len; ++r) {
      std::vector<int> rot(w.begin() + r, w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + r);
      if (rot <= w) return false;  // equal means periodic, smaller means not least
    }
    return true;
  };
  auto extend = [&](auto&& self) -> void {
    const auto& edges = g.edges();
    if (!walk.empty() && edges[walk.back()].to == edges[walk.front()].from && is_canonical_prime(walk)) {
      primes.insert(walk);
    }
    if (static_cast<int>(walk.size()) == max_len) return;
    for (int e = 0; e < m; ++e) {
      if (!walk.empty() && edges[e].from != edges[walk.back()].to) continue;
      walk.push_back(e);
      self(self);
      walk.pop_back();
    }
  };
  extend(extend);
  return primes;
}

/// Alexander matrix written down crossing by crossing: the row of the crossing
/// whose under-incoming arc is i carries 1 at i, -t^e at the outgoing under arc
/// and t^e - 1 (positive) or t^-1 - 1 (negative) at the over arc.
inline Matrix<QPoly> crossing_matrix(const knotzeta::KnotDiagram& d) {
  const std::size_t n = static_cast<std::size_t>(d.n_arcs());
  Matrix<QPoly> m(n, n);
  const QPoly t = QPoly::t();
  const QPoly t_inv = QPoly::monomial(Rational(1), -1);
  const QPoly one = QPoly::one();
  for (std::size_t r = 0; r < d.crossings().size(); ++r) {
    const auto& c = d.crossings()[r];
    const bool positive = c.sign == knotzeta::Sign::positive;
    m(r, c.under_in.value - 1) += one;
    m(r, c.under_out.value - 1) -= positive ? t : t_inv;
    m(r, c.over.value - 1) += positive ? t - one : t_inv - one;
  }
  return m;
}

/// Alexander polynomial from the crossing matrix with the last row and column
/// deleted, by Leibniz expansion, then shifted and sign-normalized.
inline QPoly alexander(const knotzeta::KnotDiagram& d) {
  if (d.crossings().empty()) return QPoly::one();
  const std::size_t n = static_cast<std::size_t>(d.n_arcs());
  const auto minor = crossing_matrix(d).without({n - 1}, {n - 1});
  QPoly p = leibniz_det(minor, QPoly::one());
  if (p.is_zero()) return p;
  p = p.shifted(-p.min_exponent());
  if (sgn(p.leading()) < 0) p = -p;
  return p;
}

// Hand-rolled generators for property tests.

inline Rational random_rational(std::mt19937_64& rng, int span = 9, int den = 7) {
  const long num = static_cast<long>(rng() % (2 * span + 1)) - span;
  const long d = static_cast<long>(rng() % den) + 1;
  Rational q(num, d);
  q.canonicalize();
  return q;
}

inline QPoly random_poly(std::mt19937_64& rng, int max_terms = 4, int exp_span = 3) {
  QPoly p;
  const int terms = static_cast<int>(rng() % (max_terms + 1));
  for (int i = 0; i < terms; ++i) {
    p.add_term(static_cast<int>(rng() % (2 * exp_span + 1)) - exp_span, random_rational(rng));
  }
  return p;
}

template <class T, class Gen>
Matrix<T> random_matrix(std::size_t n, Gen&& gen) {
  Matrix<T> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = gen();
  }
  return m;
}

}  // namespace oracle
