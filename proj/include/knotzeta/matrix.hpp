#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "knotzeta/error.hpp"
#include "knotzeta/laurent.hpp"

namespace knotzeta {

/// Dense row-major matrix over a commutative ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& one) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  /// Copy with the listed rows and columns removed.
  Matrix without(const std::vector<std::size_t>& drop_rows, const std::vector<std::size_t>& drop_cols) const {
    auto keep = [](std::size_t n, const std::vector<std::size_t>& drop) {
      std::vector<std::size_t> kept;
      for (std::size_t i = 0; i < n; ++i) {
        if (std::find(drop.begin(), drop.end(), i) == drop.end()) kept.push_back(i);
      }
      return kept;
    };
    for (auto r : drop_rows) {
      if (r >= rows_) throw PreconditionError("row index out of range");
    }
    for (auto c : drop_cols) {
      if (c >= cols_) throw PreconditionError("column index out of range");
    }
    const auto kr = keep(rows_, drop_rows);
    const auto kc = keep(cols_, drop_cols);
    Matrix m(kr.size(), kc.size());
    for (std::size_t i = 0; i < kr.size(); ++i) {
      for (std::size_t j = 0; j < kc.size(); ++j) m(i, j) = (*this)(kr[i], kc[j]);
    }
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("matrix product dimension mismatch");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!is_zero(b(k, j))) m(i, j) += aik * b(k, j);
        }
      }
    }
    return m;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw PreconditionError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class C>
using PolyMatrix = Matrix<LaurentPoly<C>>;

/// Multiplicative identity for the coefficient types used with Matrix.
template <class T>
struct RingTraits {
  static T one() { return T(1); }
};
template <class C>
struct RingTraits<LaurentPoly<C>> {
  static LaurentPoly<C> one() { return LaurentPoly<C>::one(); }
};

template <class T>
T trace(const Matrix<T>& m) {
  T sum{};
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) sum += m(i, i);
  return sum;
}

/// Determinant over the Laurent ring by fraction-free elimination.
///
/// Each row is first multiplied by t^-k_i so all entries are ordinary
/// polynomials; Bareiss elimination then runs in C[t], where every division
/// is exact, and the accumulated shift sum(k_i) is restored at the end.
template <class C>
LaurentPoly<C> det(PolyMatrix<C> a) {
  using P = LaurentPoly<C>;
  if (!a.square()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return P::one();

  int shift = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<int> low;
    for (std::size_t j = 0; j < n; ++j) {
      if (!a(i, j).is_zero()) low = low ? std::min(*low, a(i, j).min_exponent()) : a(i, j).min_exponent();
    }
    if (!low) return P{};
    shift += *low;
    for (std::size_t j = 0; j < n; ++j) a(i, j) = a(i, j).shifted(-*low);
  }

  bool negate = false;
  P previous = P::one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return P{};
    if (pivot != k) {
      a.swap_rows(pivot, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        P numerator = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        auto [q, r] = divmod(numerator, previous);
        if (!r.is_zero()) throw InconsistencyError("Bareiss step left a remainder");
        a(i, j) = std::move(q);
      }
      a(i, k) = P{};
    }
    previous = a(k, k);
  }
  P result = a(n - 1, n - 1).shifted(shift);
  return negate ? -result : result;
}

/// Determinant over a field by Gaussian elimination.
template <class C>
C det(Matrix<C> a) {
  if (!a.square()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  C result(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && is_zero(a(pivot, k))) ++pivot;
    if (pivot == n) return C(0);
    if (pivot != k) {
      a.swap_rows(pivot, k);
      result = -result;
    }
    result *= a(k, k);
    const C inv = inverse(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(a(i, k))) continue;
      const C factor = a(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
  }
  return result;
}

/// Laplace expansion along the first row. Exponential; intended as an
/// independent cross-check for small matrices.
template <class T>
T det_cofactor(const Matrix<T>& a, const T& one) {
  if (!a.square()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return one;
  if (n == 1) return a(0, 0);
  T sum{};
  for (std::size_t j = 0; j < n; ++j) {
    if (is_zero(a(0, j))) continue;
    T term = a(0, j) * det_cofactor(a.without({0}, {j}), one);
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

/// Reduced row echelon form in place over a field; returns the pivot columns.
template <class C>
std::vector<std::size_t> rref(Matrix<C>& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && is_zero(a(p, col))) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, row);
    const C inv = inverse(a(row, col));
    for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || is_zero(a(i, col))) continue;
      const C factor = a(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= factor * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Basis of {x : a x = 0}, one vector per free column, with a 1 in that column.
template <class C>
std::vector<std::vector<C>> nullspace(Matrix<C> a, const C& one) {
  const auto pivots = rref(a);
  std::vector<std::vector<C>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<C> v(a.cols(), one - one);
    v[free] = one;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves a x = b for square nonsingular a; nullopt when a is singular.
template <class C>
std::optional<std::vector<C>> solve(const Matrix<C>& a, const std::vector<C>& b) {
  if (!a.square() || b.size() != a.rows()) throw PreconditionError("solve: shape mismatch");
  const std::size_t n = a.rows();
  Matrix<C> aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  if (n == 0) return std::vector<C>{};
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots.back() != n - 1) return std::nullopt;
  std::vector<C> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

/// Inverse over a field; nullopt when a is singular.
template <class C>
std::optional<Matrix<C>> inverse_matrix(const Matrix<C>& a, const C& one) {
  if (!a.square()) throw PreconditionError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix<C> aug(n, 2 * n, one - one);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = one;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix<C> inv(n, n, one - one);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  }
  return inv;
}

/// Entrywise evaluation of a polynomial matrix at t = x.
template <class C>
Matrix<C> eval(const PolyMatrix<C>& m, const C& x) {
  Matrix<C> r(m.rows(), m.cols(), C(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = eval(m(i, j), x);
  }
  return r;
}

}  // namespace knotzeta
