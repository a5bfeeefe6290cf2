#include "fischerlab/fischer/khavinson.hpp"

#include "fischerlab/error.hpp"

namespace fischerlab {

Poly khavinson_psi(std::span<const Scalar> phi_coeffs) {
  constexpr std::size_t kArity = 3;
  bool non_constant = false;
  for (std::size_t k = 0; k < phi_coeffs.size(); ++k) {
    if (phi_coeffs[k].field() != Field::Qi)
      throw FieldMismatch("phi coefficients must be Qi scalars");
    if (k >= 1 && !phi_coeffs[k].is_zero()) non_constant = true;
  }
  if (!non_constant) throw InvalidArgument("phi must be non-constant");

  // z = x1 + i x2
  Poly z = Poly::variable(kArity, Field::Qi, 0) +
           Scalar::imaginary_unit() * Poly::variable(kArity, Field::Qi, 1);
  Poly phi(kArity, Field::Qi);
  Poly z_power = Poly::constant(kArity, Scalar::one(Field::Qi));
  for (std::size_t k = 0; k < phi_coeffs.size(); ++k) {
    phi += phi_coeffs[k] * z_power;
    if (k + 1 < phi_coeffs.size()) z_power = z_power * z;
  }
  const Poly base = Poly::variable(kArity, Field::Qi, 2) - phi;
  return base * base;
}

}  // namespace fischerlab
