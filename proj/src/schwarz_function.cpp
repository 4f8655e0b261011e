#include "schwarzian/schwarz_function.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "schwarzian/errors.hpp"

namespace schwarzian {

namespace {

constexpr double kZeroRadius = 0.95;

}  // namespace

BlaschkeProduct::BlaschkeProduct(double rotation, std::vector<Complex> zeros)
    : rotation_(rotation), zeros_(std::move(zeros)) {
  for (const Complex& a : zeros_) {
    if (!(std::abs(a) < 1.0)) throw DomainError("Blaschke zeros must lie in the open unit disk");
  }
}

std::pair<Complex, Complex> BlaschkeProduct::value_and_derivative(Complex z) const {
  Complex value = std::polar(1.0, rotation_);
  Complex deriv{0.0, 0.0};
  for (const Complex& a : zeros_) {
    const Complex den = 1.0 - std::conj(a) * z;
    const Complex factor = (z - a) / den;
    const Complex factor_deriv = (1.0 - std::norm(a)) / (den * den);
    deriv = deriv * factor + value * factor_deriv;
    value *= factor;
  }
  return {value, deriv};
}

Complex BlaschkeProduct::operator()(Complex z) const { return value_and_derivative(z).first; }

Complex BlaschkeProduct::derivative(Complex z) const { return value_and_derivative(z).second; }

Complex eval_blaschke(const BlaschkeProduct& b, Complex z) { return b(z); }

Complex eval_blaschke_deriv(const BlaschkeProduct& b, Complex z) { return b.derivative(z); }

const BlaschkeProduct& SchwarzFunction::psi() const {
  if (!psi_) throw PreconditionError("the zero Schwarz function has no Blaschke factor");
  return *psi_;
}

std::pair<Complex, Complex> SchwarzFunction::psi_value_and_derivative(Complex z) const {
  if (!psi_) return {Complex{}, Complex{}};
  return psi_->value_and_derivative(z);
}

Complex SchwarzFunction::psi_value(Complex z) const { return psi_value_and_derivative(z).first; }

Complex SchwarzFunction::psi_derivative(Complex z) const {
  return psi_value_and_derivative(z).second;
}

Complex SchwarzFunction::derivative(Complex z) const {
  const auto [psi, dpsi] = psi_value_and_derivative(z);
  return psi + z * dpsi;
}

Complex eval_omega(const SchwarzFunction& w, Complex z) { return w(z); }

Complex eval_omega_deriv(const SchwarzFunction& w, Complex z) { return w.derivative(z); }

DieudonneGap dieudonne_gap(const SchwarzFunction& w, Complex z0) {
  const double r = std::abs(z0);
  if (!(r > 0.0 && r < 1.0)) throw DomainError("Dieudonne gap needs 0 < |z0| < 1");
  const auto [psi, dpsi] = w.psi_value_and_derivative(z0);
  // omega'(z0) - omega(z0)/z0 = z0 psi'(z0).
  const double lhs = std::abs(z0 * dpsi);
  const double omega_abs2 = std::norm(z0 * psi);
  const double rhs = (r * r - omega_abs2) / (r * (1.0 - r * r));
  return {lhs, rhs};
}

SchwarzFunction random_schwarz(int degree, std::uint64_t seed) {
  if (degree < 0) throw DomainError("Blaschke degree must be non-negative");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double two_pi = 2.0 * std::numbers::pi;
  const double rotation = two_pi * unit(rng);
  std::vector<Complex> zeros;
  zeros.reserve(static_cast<std::size_t>(degree));
  for (int j = 0; j < degree; ++j) {
    // Area-uniform in the disk of radius kZeroRadius.
    const double radius = kZeroRadius * std::sqrt(unit(rng));
    zeros.push_back(std::polar(radius, two_pi * unit(rng)));
  }
  return SchwarzFunction(BlaschkeProduct(rotation, std::move(zeros)));
}

}  // namespace schwarzian
