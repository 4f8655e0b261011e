#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace schwarzian {

using Complex = std::complex<double>;

/// Finite Blaschke product e^{i theta} prod_j (z - a_j) / (1 - conj(a_j) z).
/// Degree 0 is the unimodular constant e^{i theta}.
class BlaschkeProduct {
 public:
  BlaschkeProduct() = default;
  /// Throws DomainError if any zero has |a_j| >= 1.
  explicit BlaschkeProduct(double rotation, std::vector<Complex> zeros = {});

  double rotation() const { return rotation_; }
  const std::vector<Complex>& zeros() const { return zeros_; }
  std::size_t degree() const { return zeros_.size(); }

  Complex operator()(Complex z) const;
  /// Exact derivative by the product rule.
  Complex derivative(Complex z) const;
  /// Value and derivative in one pass.
  std::pair<Complex, Complex> value_and_derivative(Complex z) const;

 private:
  double rotation_ = 0.0;
  std::vector<Complex> zeros_;
};

Complex eval_blaschke(const BlaschkeProduct& b, Complex z);
Complex eval_blaschke_deriv(const BlaschkeProduct& b, Complex z);

/// Schwarz function stored as omega(z) = z psi(z), with psi a finite Blaschke
/// product or identically zero.
class SchwarzFunction {
 public:
  /// omega = z (psi == 1).
  SchwarzFunction() : psi_(BlaschkeProduct{}) {}
  explicit SchwarzFunction(BlaschkeProduct psi) : psi_(std::move(psi)) {}

  static SchwarzFunction zero() { return SchwarzFunction(std::nullopt); }
  static SchwarzFunction identity() { return SchwarzFunction(BlaschkeProduct{}); }

  bool is_zero() const { return !psi_.has_value(); }
  /// Throws PreconditionError for the zero function.
  const BlaschkeProduct& psi() const;

  Complex psi_value(Complex z) const;
  Complex psi_derivative(Complex z) const;
  std::pair<Complex, Complex> psi_value_and_derivative(Complex z) const;

  Complex operator()(Complex z) const { return z * psi_value(z); }
  Complex derivative(Complex z) const;

  /// Blaschke degree of omega itself (degree of psi plus one), 0 for omega == 0.
  std::size_t blaschke_degree() const { return psi_ ? psi_->degree() + 1 : 0; }

 private:
  explicit SchwarzFunction(std::optional<BlaschkeProduct> psi) : psi_(std::move(psi)) {}
  std::optional<BlaschkeProduct> psi_;
};

Complex eval_omega(const SchwarzFunction& w, Complex z);
Complex eval_omega_deriv(const SchwarzFunction& w, Complex z);

struct DieudonneGap {
  double lhs;  ///< |omega'(z0) - omega(z0)/z0|
  double rhs;  ///< (|z0|^2 - |omega(z0)|^2) / (|z0| (1 - |z0|^2))
};

/// Both sides of the Dieudonne region-of-variability inequality at z0.
/// Throws DomainError unless 0 < |z0| < 1.
DieudonneGap dieudonne_gap(const SchwarzFunction& w, Complex z0);

/// Blaschke factor psi with `degree` zeros uniform in the disk of radius
/// 0.95 and a uniform rotation in [0, 2 pi). Deterministic in `seed`.
SchwarzFunction random_schwarz(int degree, std::uint64_t seed);

}  // namespace schwarzian
