#include "knotzeta/laurent.hpp"

namespace knotzeta {

FpPoly reduce_mod(const QPoly& p, const PrimeField& field) {
  FpPoly r;
  const Integer q = field.modulus();
  for (const auto& [e, c] : p.terms()) {
    const Integer num = c.get_num() % q;
    const Integer den = c.get_den() % q;
    if (den == 0) throw PreconditionError("denominator divisible by the field characteristic");
    r.add_term(e, field(num.get_si()) / field(den.get_si()));
  }
  return r;
}

}  // namespace knotzeta
