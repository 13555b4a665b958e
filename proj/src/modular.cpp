#include "knotzeta/modular.hpp"

#include <vector>

#include "knotzeta/error.hpp"

namespace knotzeta {

namespace {

std::int64_t reduce(std::int64_t v, std::uint32_t p) {
  const auto m = static_cast<std::int64_t>(p);
  v %= m;
  return v < 0 ? v + m : v;
}

std::uint32_t common_modulus(const Fp& a, const Fp& b) {
  if (a.bound() && b.bound() && a.modulus() != b.modulus()) {
    throw PreconditionError("mixing elements of F_" + std::to_string(a.modulus()) + " and F_" +
                            std::to_string(b.modulus()));
  }
  return a.bound() ? a.modulus() : b.modulus();
}

std::int64_t lifted(const Fp& a, std::uint32_t p) {
  return (p != 0 && !a.bound()) ? reduce(a.value(), p) : a.value();
}

}  // namespace

Fp::Fp(std::int64_t value, std::uint32_t modulus) : value_(value), modulus_(modulus) {
  if (modulus_ != 0) value_ = reduce(value_, modulus_);
}

Fp operator+(const Fp& a, const Fp& b) {
  const auto p = common_modulus(a, b);
  return Fp(lifted(a, p) + lifted(b, p), p);
}

Fp operator-(const Fp& a, const Fp& b) {
  const auto p = common_modulus(a, b);
  return Fp(lifted(a, p) - lifted(b, p), p);
}

Fp operator*(const Fp& a, const Fp& b) {
  const auto p = common_modulus(a, b);
  if (p == 0) return Fp(a.value() * b.value(), 0);
  const auto prod = static_cast<std::uint64_t>(lifted(a, p)) * static_cast<std::uint64_t>(lifted(b, p));
  return Fp(static_cast<std::int64_t>(prod % p), p);
}

Fp Fp::operator-() const { return Fp(-value_, modulus_); }

bool operator==(const Fp& a, const Fp& b) {
  const auto p = common_modulus(a, b);
  return lifted(a, p) == lifted(b, p);
}

Fp pow(Fp base, std::uint64_t exponent) {
  Fp result(1, base.modulus());
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

Fp inverse(const Fp& a) {
  if (a.value() == 0) throw PreconditionError("division by zero in prime field");
  if (!a.bound()) {
    if (a.value() == 1 || a.value() == -1) return a;
    throw PreconditionError("cannot invert an integer outside a prime field");
  }
  return pow(a, a.modulus() - 2);
}

std::string to_string(const Fp& a) { return std::to_string(a.value()); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
  if (p >= (std::uint64_t{1} << 32U) || !is_prime(p)) {
    throw PreconditionError(std::to_string(p) + " is not a prime below 2^32");
  }
}

Fp PrimeField::primitive_root() const {
  if (p_ == 2) return one();
  std::vector<std::uint64_t> factors;
  std::uint64_t m = p_ - 1;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (std::int64_t g = 2;; ++g) {
    bool generator = true;
    for (auto f : factors) {
      if (pow((*this)(g), (p_ - 1) / f) == one()) {
        generator = false;
        break;
      }
    }
    if (generator) return (*this)(g);
  }
}

}  // namespace knotzeta
