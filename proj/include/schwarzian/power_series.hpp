#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace schwarzian {

using Complex = std::complex<double>;

/// Truncated Taylor series sum_{n=0}^{N} c_n z^n with a fixed order N.
/// Binary operations require equal orders and truncate at that order.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order);
  /// Pads with zeros or truncates `coeffs` to order + 1 terms.
  PowerSeries(std::size_t order, std::vector<Complex> coeffs);

  static PowerSeries constant(std::size_t order, Complex c);
  /// The series of z.
  static PowerSeries identity(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Complex>& coefficients() const { return coeffs_; }

  Complex operator[](std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Complex{}; }
  Complex& operator[](std::size_t n) { return coeffs_.at(n); }

  /// Same series at a lower or higher order (higher pads with zeros).
  PowerSeries truncated(std::size_t order) const;

  Complex evaluate(Complex z) const;

  PowerSeries& operator+=(const PowerSeries& rhs);
  PowerSeries& operator-=(const PowerSeries& rhs);
  PowerSeries& operator*=(Complex c);

 private:
  std::vector<Complex> coeffs_;
};

PowerSeries operator+(PowerSeries lhs, const PowerSeries& rhs);
PowerSeries operator-(PowerSeries lhs, const PowerSeries& rhs);
PowerSeries operator*(const PowerSeries& lhs, const PowerSeries& rhs);
PowerSeries operator*(PowerSeries s, Complex c);
PowerSeries operator*(Complex c, PowerSeries s);
PowerSeries operator/(const PowerSeries& num, const PowerSeries& den);

/// 1/s; throws DomainError if s[0] == 0.
PowerSeries reciprocal(const PowerSeries& s);
/// exp(s); throws DomainError unless s[0] == 0.
PowerSeries exp(const PowerSeries& s);
/// Antiderivative vanishing at 0 (the z^{N+1} term is dropped).
PowerSeries integral(const PowerSeries& s);
/// Term-wise derivative; the top coefficient becomes 0.
PowerSeries derivative(const PowerSeries& s);
/// z * s, truncated.
PowerSeries times_z(const PowerSeries& s);

}  // namespace schwarzian
