#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "knotzeta/error.hpp"
#include "knotzeta/modular.hpp"
#include "knotzeta/rational.hpp"

namespace knotzeta {

/// Finite sum  sum_e c_e t^e  with integer exponents. Zero coefficients are
/// never stored; the zero polynomial has no terms.
template <class C>
class LaurentPoly {
 public:
  using coefficient_type = C;
  using Terms = std::map<int, C>;

  LaurentPoly() = default;
  explicit LaurentPoly(const C& constant) { add_term(0, constant); }
  explicit LaurentPoly(Terms terms) {
    for (auto& [e, c] : terms) add_term(e, c);
  }

  static LaurentPoly monomial(const C& c, int exponent) {
    LaurentPoly p;
    p.add_term(exponent, c);
    return p;
  }
  /// The indeterminate t.
  static LaurentPoly t() { return monomial(C(1), 1); }
  static LaurentPoly one() { return LaurentPoly(C(1)); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  int min_exponent() const { return nonzero().terms_.begin()->first; }
  int max_exponent() const { return nonzero().terms_.rbegin()->first; }
  const C& leading() const { return nonzero().terms_.rbegin()->second; }
  C coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? C(0) : it->second;
  }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

  void add_term(int exponent, const C& c) {
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  /// Multiplication by t^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
  }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    }
    return r;
  }
  friend LaurentPoly operator*(const C& s, const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [e, c] : p.terms_) r.add_term(e, s * c);
    return r;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
      if (e != ib->first || !(c == ib->second)) return false;
      ++ib;
    }
    return true;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  static bool is_zero_coeff(const C& c) { return knotzeta::is_zero(c); }
  const LaurentPoly& nonzero() const {
    if (terms_.empty()) throw PreconditionError("operation undefined on the zero polynomial");
    return *this;
  }

  Terms terms_;
};

using QPoly = LaurentPoly<Rational>;
using FpPoly = LaurentPoly<Fp>;

template <class C>
bool is_zero(const LaurentPoly<C>& p) {
  return p.is_zero();
}

template <class C>
LaurentPoly<C> pow(LaurentPoly<C> base, unsigned exponent) {
  auto result = LaurentPoly<C>::one();
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

/// Human-readable form in the variable t, highest degree first: "t^2 - t + 1".
template <class C>
std::string to_string(const LaurentPoly<C>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string coeff = to_string(c);
    bool negative = !coeff.empty() && coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << coeff;
      continue;
    }
    if (coeff != "1") out << coeff << (coeff.find('/') != std::string::npos ? " " : "");
    out << 't';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

/// Exact evaluation at a nonzero point (or at zero when no negative exponents occur).
template <class C>
C eval(const LaurentPoly<C>& p, const C& x) {
  if (is_zero(x) && !p.is_zero() && p.min_exponent() < 0) {
    throw PreconditionError("cannot evaluate a negative power of t at t = 0");
  }
  C sum(0);
  for (const auto& [e, c] : p.terms()) {
    C power(1);
    const C base = e < 0 ? inverse(x) : x;
    for (int k = 0; k < (e < 0 ? -e : e); ++k) power *= base;
    sum += c * power;
  }
  return sum;
}

/// Quotient and remainder of ordinary polynomials (no negative exponents) over a field.
template <class C>
std::pair<LaurentPoly<C>, LaurentPoly<C>> divmod(const LaurentPoly<C>& num, const LaurentPoly<C>& den) {
  if (den.is_zero()) throw PreconditionError("polynomial division by zero");
  if ((!num.is_zero() && num.min_exponent() < 0) || den.min_exponent() < 0) {
    throw PreconditionError("divmod expects ordinary polynomials");
  }
  LaurentPoly<C> quotient;
  LaurentPoly<C> rem = num;
  const int d = den.max_exponent();
  const C lead_inv = inverse(den.leading());
  while (!rem.is_zero() && rem.max_exponent() >= d) {
    const int shift = rem.max_exponent() - d;
    const C factor = rem.leading() * lead_inv;
    quotient.add_term(shift, factor);
    rem -= LaurentPoly<C>::monomial(factor, shift) * den;
  }
  return {quotient, rem};
}

/// Splits p = t^k * q with q an ordinary polynomial having nonzero constant term.
template <class C>
std::pair<int, LaurentPoly<C>> split_shift(const LaurentPoly<C>& p) {
  if (p.is_zero()) return {0, p};
  const int k = p.min_exponent();
  return {k, p.shifted(-k)};
}

/// Monic greatest common divisor of two ordinary polynomials (units t^k stripped).
template <class C>
LaurentPoly<C> gcd(LaurentPoly<C> a, LaurentPoly<C> b) {
  a = split_shift(a).second;
  b = split_shift(b).second;
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = split_shift(r).second;
  }
  if (a.is_zero()) return a;
  return inverse(a.leading()) * a;
}

/// Exact quotient in the Laurent ring; throws InconsistencyError if den does not divide num.
template <class C>
LaurentPoly<C> exact_quotient(const LaurentPoly<C>& num, const LaurentPoly<C>& den) {
  if (den.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (num.is_zero()) return num;
  auto [kn, n] = split_shift(num);
  auto [kd, d] = split_shift(den);
  auto [q, r] = divmod(n, d);
  if (!r.is_zero()) throw InconsistencyError("inexact polynomial division");
  return q.shifted(kn - kd);
}

/// Result of divide_exact: either an exact Laurent quotient (denominator == 1)
/// or a fraction reduced by the polynomial gcd.
template <class C>
struct Quotient {
  LaurentPoly<C> numerator;
  LaurentPoly<C> denominator;
  bool exact = true;
};

template <class C>
Quotient<C> divide_exact(const LaurentPoly<C>& num, const LaurentPoly<C>& den) {
  if (den.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (num.is_zero()) return {num, LaurentPoly<C>::one(), true};
  auto [kn, n] = split_shift(num);
  auto [kd, d] = split_shift(den);
  const auto g = gcd(n, d);
  auto n_red = exact_quotient(n, g);
  auto d_red = exact_quotient(d, g);
  if (d_red.is_constant()) {
    return {inverse(d_red.leading()) * n_red.shifted(kn - kd), LaurentPoly<C>::one(), true};
  }
  // Normalize the denominator to be monic so the pair is unique.
  const C lead = inverse(d_red.leading());
  return {lead * n_red.shifted(kn - kd), lead * d_red, false};
}

// ---------------------------------------------------------------------------
// Canonical representatives up to units  c * t^k.

/// p == scalar * t^shift * canonical.
template <class C>
struct Unit {
  C scalar{1};
  int shift = 0;
};

template <class C>
struct CanonicalPoly {
  LaurentPoly<C> poly;
  Unit<C> unit;

  friend bool operator==(const CanonicalPoly& a, const CanonicalPoly& b) { return a.poly == b.poly; }
};

/// Scalar removed during canonicalization: the sign over Q (magnitude is kept),
/// the leading coefficient over F_p (result is monic).
inline Rational normalizing_scalar(const Rational& leading) { return Rational(sgn(leading) < 0 ? -1 : 1); }
inline Fp normalizing_scalar(const Fp& leading) { return leading; }

template <class C>
CanonicalPoly<C> canonicalize(const LaurentPoly<C>& p) {
  if (p.is_zero()) return {p, Unit<C>{C(1), 0}};
  const int k = p.min_exponent();
  const C s = normalizing_scalar(p.leading());
  return {inverse(s) * p.shifted(-k), Unit<C>{s, k}};
}

inline std::string to_string(const Unit<Rational>& u) {
  return "(-1)^" + std::string(sgn(u.scalar) < 0 ? "1" : "0") + " t^" + std::to_string(u.shift);
}
inline std::string to_string(const Unit<Fp>& u) {
  return to_string(u.scalar) + " t^" + std::to_string(u.shift);
}

/// Reduces a rational polynomial into F_p (denominators must be invertible mod p).
FpPoly reduce_mod(const QPoly& p, const PrimeField& field);

}  // namespace knotzeta
