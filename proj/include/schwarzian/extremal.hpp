#pragma once

#include <cstddef>
#include <string_view>
#include <utility>

#include "schwarzian/params.hpp"
#include "schwarzian/power_series.hpp"
#include "schwarzian/schwarz_function.hpp"

namespace schwarzian {

inline constexpr std::size_t kDefaultSeriesOrder = 32;

enum class ExtremalKind { K, F0, FZPQ };

std::string_view to_string(ExtremalKind k);

/// One of the extremal functions of C(A,B):
///  - K:    1 + z f''/f' = (1 + A z)/(1 + B z), i.e. w(z) = z;
///  - F0:   w(z) = z^2;
///  - FZPQ: w(z) = p z (z - b)/(1 - b z), tuned so that the pointwise bound
///          is attained at the real point z0.
struct ExtremalSpec {
  ExtremalKind kind = ExtremalKind::K;
  double z0 = 0.0;
  int p = 1;
  int q = 1;
  double b = 0.0;

  static ExtremalSpec k_function() { return {}; }
  static ExtremalSpec f0() { return {ExtremalKind::F0, 0.0, 1, 1, 0.0}; }
};

/// Sign pair (p, q): (1, 1) if A + B <= 0; (-1, 1) if A + B > 0 and B >= 0;
/// (-1, -1) if A + B > 0 and B < 0.
std::pair<int, int> choose_pq(const JanowskiParams& params);

/// True when s0(|z0|) lies in [0, |z0|): (A,B) in E1 or E2, or (A,B) in E3
/// with |z0| outside the closed annulus [delta1, delta2].
bool is_admissible(const JanowskiParams& params, double z0);

/// Solution b of z0 (z0 - b)/(1 - b z0) = q s0(|z0|).
/// Throws DomainError unless 0 < |z0| < 1 and PreconditionError for an
/// inadmissible z0.
double solve_b(const JanowskiParams& params, double z0);

/// Full (z0, p, q, b) tuple of the f_{z0,p,q} extremal.
ExtremalSpec make_fzpq(const JanowskiParams& params, double z0);

/// The Schwarz function w = z psi underlying an extremal.
SchwarzFunction schwarz_function_of(const ExtremalSpec& spec);

/// (1 - z0^2)^2 |S_{f_{z0,p,q}}(z0)| from the closed form of S in terms of b.
double extremal_weighted_value(const JanowskiParams& params, double z0);

/// Taylor coefficients of f (f(0) = 0, f'(0) = 1) from f''/f' = (A - B) psi / (1 + B z psi):
/// f' = exp(integral(f''/f')), f = integral(f').
PowerSeries series_from_schwarz(const JanowskiParams& params, const SchwarzFunction& w,
                                std::size_t order);
/// Series of a Blaschke product (or of psi == 0).
PowerSeries psi_series(const SchwarzFunction& w, std::size_t order);

/// Closed-form expansion of K_{A,B} by its A = 0 / B = 0 / generic branch.
PowerSeries K_series(const JanowskiParams& params, std::size_t order = kDefaultSeriesOrder);
PowerSeries f0_series(const JanowskiParams& params, std::size_t order = kDefaultSeriesOrder);
PowerSeries fzpq_series(const JanowskiParams& params, const ExtremalSpec& spec,
                        std::size_t order = kDefaultSeriesOrder);

/// Coefficients of 1 + z f''/f' - (1 + A w)/(1 + B w); the tail past order - 2
/// is not meaningful.
PowerSeries subordination_residual(const JanowskiParams& params, const PowerSeries& f,
                                   const SchwarzFunction& w);

}  // namespace schwarzian
