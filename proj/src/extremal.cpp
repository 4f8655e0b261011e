#include "schwarzian/extremal.hpp"

#include <cmath>
#include <numbers>

#include "schwarzian/bounds.hpp"
#include "schwarzian/errors.hpp"

namespace schwarzian {

std::string_view to_string(ExtremalKind k) {
  switch (k) {
    case ExtremalKind::K:
      return "K";
    case ExtremalKind::F0:
      return "f0";
    case ExtremalKind::FZPQ:
      return "fzpq";
  }
  return "?";
}

std::pair<int, int> choose_pq(const JanowskiParams& params) {
  const double sum = params.A() + params.B();
  if (sum <= 0.0) return {1, 1};
  if (params.B() >= 0.0) return {-1, 1};
  return {-1, -1};
}

bool is_admissible(const JanowskiParams& params, double z0) {
  if (!(std::abs(z0) < 1.0)) return false;
  if (classify(params) != Region::E3) return true;
  const auto [d1, d2] = e3_deltas(params);
  const double t = std::abs(z0);
  return t < d1 || t > d2;
}

double solve_b(const JanowskiParams& params, double z0) {
  if (!(std::abs(z0) < 1.0) || z0 == 0.0) throw DomainError("solve_b needs 0 < |z0| < 1");
  if (!is_admissible(params, z0)) {
    throw PreconditionError("z0 lies in the closed annulus [delta1, delta2]; no f_{z0,p,q}");
  }
  const auto [p, q] = choose_pq(params);
  const double s = params.abs_sum();
  const double two_q_b = 2.0 * q * std::abs(params.B());
  const double c = 2.0 - s * (1.0 - z0 * z0);
  return z0 * (c - two_q_b) / (c - two_q_b * z0 * z0);
}

ExtremalSpec make_fzpq(const JanowskiParams& params, double z0) {
  const double b = solve_b(params, z0);
  const auto [p, q] = choose_pq(params);
  return {ExtremalKind::FZPQ, z0, p, q, b};
}

SchwarzFunction schwarz_function_of(const ExtremalSpec& spec) {
  switch (spec.kind) {
    case ExtremalKind::K:
      return SchwarzFunction::identity();
    case ExtremalKind::F0:
      return SchwarzFunction(BlaschkeProduct(0.0, {Complex{0.0, 0.0}}));
    case ExtremalKind::FZPQ:
      return SchwarzFunction(
          BlaschkeProduct(spec.p == 1 ? 0.0 : std::numbers::pi, {Complex{spec.b, 0.0}}));
  }
  throw DomainError("unknown extremal kind");
}

double extremal_weighted_value(const JanowskiParams& params, double z0) {
  const ExtremalSpec spec = make_fzpq(params, z0);
  const double a = params.A();
  const double bb = params.B();
  const double b = spec.b;
  const double p = spec.p;
  // S(z) = (A - B)(-(A + B)(z - b)^2 + 2p(1 - b^2)) / (2 (1 - b z + B p z (z - b))^2).
  const double den = 1.0 - b * z0 + bb * p * z0 * (z0 - b);
  const double value =
      (a - bb) * (-(a + bb) * (z0 - b) * (z0 - b) + 2.0 * p * (1.0 - b * b)) / (2.0 * den * den);
  const double u = 1.0 - z0 * z0;
  return u * u * std::abs(value);
}

PowerSeries psi_series(const SchwarzFunction& w, std::size_t order) {
  if (w.is_zero()) return PowerSeries(order);
  const BlaschkeProduct& psi = w.psi();
  PowerSeries out = PowerSeries::constant(order, std::polar(1.0, psi.rotation()));
  for (const Complex& a : psi.zeros()) {
    // (z - a)/(1 - conj(a) z) = -a + sum_{n>=1} conj(a)^{n-1} (1 - |a|^2) z^n.
    PowerSeries factor(order);
    factor[0] = -a;
    Complex power{1.0, 0.0};
    for (std::size_t n = 1; n <= order; ++n) {
      factor[n] = power * (1.0 - std::norm(a));
      power *= std::conj(a);
    }
    out = out * factor;
  }
  return out;
}

PowerSeries series_from_schwarz(const JanowskiParams& params, const SchwarzFunction& w,
                                std::size_t order) {
  if (order < 2) throw DomainError("series order must be at least 2");
  const PowerSeries psi = psi_series(w, order);
  const PowerSeries one = PowerSeries::constant(order, 1.0);
  const PowerSeries log_deriv =
      (params.A() - params.B()) * (psi / (one + params.B() * times_z(psi)));
  return integral(exp(integral(log_deriv)));
}

PowerSeries K_series(const JanowskiParams& params, std::size_t order) {
  if (order < 2) throw DomainError("series order must be at least 2");
  const double a = params.A();
  const double b = params.B();
  PowerSeries out(order);
  if (a == 0.0) {
    // (1/B) log(1 + B z): a_n = (-1)^{n+1} B^{n-1} / n.
    double power = 1.0;
    for (std::size_t n = 1; n <= order; ++n) {
      out[n] = power / static_cast<double>(n);
      power *= -b;
    }
  } else if (b == 0.0) {
    // (e^{A z} - 1)/A: a_n = A^{n-1} / n!.
    double term = 1.0;
    for (std::size_t n = 1; n <= order; ++n) {
      out[n] = term;
      term *= a / static_cast<double>(n + 1);
    }
  } else {
    // ((1 + B z)^{A/B} - 1)/A: a_{n+1} = a_n (A - n B)/(n + 1).
    double term = 1.0;
    for (std::size_t n = 1; n <= order; ++n) {
      out[n] = term;
      term *= (a - static_cast<double>(n) * b) / static_cast<double>(n + 1);
    }
  }
  return out;
}

PowerSeries f0_series(const JanowskiParams& params, std::size_t order) {
  return series_from_schwarz(params, schwarz_function_of(ExtremalSpec::f0()), order);
}

PowerSeries fzpq_series(const JanowskiParams& params, const ExtremalSpec& spec, std::size_t order) {
  if (spec.kind != ExtremalKind::FZPQ) throw PreconditionError("fzpq_series needs an FZPQ spec");
  return series_from_schwarz(params, schwarz_function_of(spec), order);
}

PowerSeries subordination_residual(const JanowskiParams& params, const PowerSeries& f,
                                   const SchwarzFunction& w) {
  const std::size_t order = f.order();
  const PowerSeries d1 = derivative(f);
  const PowerSeries d2 = derivative(d1);
  const PowerSeries one = PowerSeries::constant(order, 1.0);
  const PowerSeries lhs = one + times_z(d2 / d1);
  const PowerSeries omega = times_z(psi_series(w, order));
  const PowerSeries rhs = (one + params.A() * omega) / (one + params.B() * omega);
  return lhs - rhs;
}

}  // namespace schwarzian
