#pragma once

#include <cstdint>
#include <string>

namespace knotzeta {

/// Element of a prime field F_p with the modulus carried at runtime.
///
/// An element built from a plain integer without a modulus is "unbound": it
/// behaves as that integer until it meets a bound element, at which point it
/// is reduced into the bound element's field. This lets generic code write
/// `C(0)` and `C(1)` without knowing the field. Mixing two different moduli
/// throws.
class Fp {
 public:
  Fp() = default;
  Fp(int value) : value_(value) {}  // NOLINT: implicit integer literal promotion
  Fp(std::int64_t value, std::uint32_t modulus);

  std::uint32_t modulus() const noexcept { return modulus_; }
  bool bound() const noexcept { return modulus_ != 0; }
  /// Representative in [0, p) for bound elements, the raw integer otherwise.
  std::int64_t value() const noexcept { return value_; }

  friend Fp operator+(const Fp& a, const Fp& b);
  friend Fp operator-(const Fp& a, const Fp& b);
  friend Fp operator*(const Fp& a, const Fp& b);
  friend Fp operator/(const Fp& a, const Fp& b) { return a * inverse(b); }
  Fp operator-() const;
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  friend bool operator==(const Fp& a, const Fp& b);

  friend Fp inverse(const Fp& a);
  friend Fp pow(Fp base, std::uint64_t exponent);

 private:
  std::int64_t value_ = 0;
  std::uint32_t modulus_ = 0;
};

inline bool is_zero(const Fp& a) { return a.value() == 0; }
std::string to_string(const Fp& a);

/// Deterministic primality test for 32-bit moduli.
bool is_prime(std::uint64_t n);

/// Validated factory for elements of F_p.
class PrimeField {
 public:
  /// Throws PreconditionError unless p is a prime below 2^32.
  explicit PrimeField(std::uint64_t p);

  std::uint32_t modulus() const noexcept { return p_; }
  Fp operator()(std::int64_t value) const { return Fp(value, p_); }
  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1, p_); }
  /// Least primitive root modulo p.
  Fp primitive_root() const;

 private:
  std::uint32_t p_;
};

}  // namespace knotzeta
