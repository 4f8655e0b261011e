#include "schwarzian/schwarzian.hpp"

#include <cmath>

#include "schwarzian/errors.hpp"

namespace schwarzian {

namespace {

void require_in_disk(Complex z) {
  if (!(std::abs(z) < 1.0)) throw DomainError("Schwarzian evaluation needs |z| < 1");
}

}  // namespace

SchwarzianSample make_sample(Complex z, Complex value) {
  const double u = 1.0 - std::norm(z);
  return {z, value, u * u * std::abs(value)};
}

SchwarzianSample schwarzian(const JanowskiParams& params, const SchwarzFunction& w, Complex z) {
  require_in_disk(z);
  const double a = params.A();
  const double b = params.B();
  const auto [psi, dpsi] = w.psi_value_and_derivative(z);
  const Complex den = 1.0 + b * z * psi;
  const Complex value = (a - b) * (dpsi - 0.5 * (a + b) * psi * psi) / (den * den);
  return make_sample(z, value);
}

SchwarzianSample schwarzian_of_K(const JanowskiParams& params, Complex z) {
  require_in_disk(z);
  const double a = params.A();
  const double b = params.B();
  const Complex den = 1.0 + b * z;
  return make_sample(z, -(a * a - b * b) / (2.0 * den * den));
}

SchwarzianSample schwarzian_of_f0(const JanowskiParams& params, Complex z) {
  require_in_disk(z);
  const double a = params.A();
  const double b = params.B();
  const Complex z2 = z * z;
  const Complex den = 1.0 + b * z2;
  return make_sample(z, (a - b) * (2.0 - (a + b) * z2) / (2.0 * den * den));
}

}  // namespace schwarzian
