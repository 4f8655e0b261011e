#include "schwarzian/power_series.hpp"

#include <stdexcept>

#include "schwarzian/errors.hpp"

namespace schwarzian {

namespace {

void require_same_order(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order()) throw DomainError("power series orders differ");
}

}  // namespace

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1) {}

PowerSeries::PowerSeries(std::size_t order, std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

PowerSeries PowerSeries::constant(std::size_t order, Complex c) {
  PowerSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

PowerSeries PowerSeries::identity(std::size_t order) {
  PowerSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1.0;
  return s;
}

PowerSeries PowerSeries::truncated(std::size_t order) const { return PowerSeries(order, coeffs_); }

Complex PowerSeries::evaluate(Complex z) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
  return *this;
}

PowerSeries& PowerSeries::operator*=(Complex c) {
  for (Complex& x : coeffs_) x *= c;
  return *this;
}

PowerSeries operator+(PowerSeries lhs, const PowerSeries& rhs) { return lhs += rhs; }

PowerSeries operator-(PowerSeries lhs, const PowerSeries& rhs) { return lhs -= rhs; }

PowerSeries operator*(const PowerSeries& lhs, const PowerSeries& rhs) {
  require_same_order(lhs, rhs);
  const std::size_t n_max = lhs.order();
  PowerSeries out(n_max);
  for (std::size_t i = 0; i <= n_max; ++i) {
    if (lhs[i] == Complex{}) continue;
    for (std::size_t j = 0; i + j <= n_max; ++j) out[i + j] += lhs[i] * rhs[j];
  }
  return out;
}

PowerSeries operator*(PowerSeries s, Complex c) { return s *= c; }

PowerSeries operator*(Complex c, PowerSeries s) { return s *= c; }

PowerSeries reciprocal(const PowerSeries& s) {
  if (s[0] == Complex{}) throw DomainError("series reciprocal needs a nonzero constant term");
  const std::size_t n_max = s.order();
  PowerSeries out(n_max);
  out[0] = 1.0 / s[0];
  for (std::size_t n = 1; n <= n_max; ++n) {
    Complex acc{};
    for (std::size_t k = 1; k <= n; ++k) acc += s[k] * out[n - k];
    out[n] = -acc * out[0];
  }
  return out;
}

PowerSeries operator/(const PowerSeries& num, const PowerSeries& den) {
  require_same_order(num, den);
  return num * reciprocal(den);
}

PowerSeries exp(const PowerSeries& s) {
  if (s[0] != Complex{}) throw DomainError("series exp needs a zero constant term");
  // g = exp(s) satisfies g' = s' g, i.e. n g_n = sum_{k=1}^{n} k s_k g_{n-k}.
  const std::size_t n_max = s.order();
  PowerSeries out(n_max);
  out[0] = 1.0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    Complex acc{};
    for (std::size_t k = 1; k <= n; ++k) acc += static_cast<double>(k) * s[k] * out[n - k];
    out[n] = acc / static_cast<double>(n);
  }
  return out;
}

PowerSeries integral(const PowerSeries& s) {
  const std::size_t n_max = s.order();
  PowerSeries out(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) out[n] = s[n - 1] / static_cast<double>(n);
  return out;
}

PowerSeries derivative(const PowerSeries& s) {
  const std::size_t n_max = s.order();
  PowerSeries out(n_max);
  for (std::size_t n = 0; n < n_max; ++n) out[n] = static_cast<double>(n + 1) * s[n + 1];
  return out;
}

PowerSeries times_z(const PowerSeries& s) {
  const std::size_t n_max = s.order();
  PowerSeries out(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) out[n] = s[n - 1];
  return out;
}

}  // namespace schwarzian
