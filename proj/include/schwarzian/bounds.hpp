#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "schwarzian/params.hpp"
#include "schwarzian/schwarz_function.hpp"

namespace schwarzian {

// Auxiliary functions of the sharp bounds. `t` is a modulus in [0, 1).

/// Critical point 2|B| t^2 / (2 - |A+B| (1 - t^2)) of the majorant g(s).
double s0_of(const JanowskiParams& p, double t);
/// Gate polynomial 2 - |A+B| - 2|B| t + |A+B| t^2; s0(t) < t iff it is positive.
double k_poly(const JanowskiParams& p, double t);
/// (1 - t^2)(2 - |A+B|(1 - t^2)) / (2 - |A+B|(1 - t^2) - 2 B^2 t^2).
double gamma(const JanowskiParams& p, double t);
/// |A+B| (1 - t^2)^2 / (2 (1 - |B| t)^2); continuous extension at t = 1 when |B| = 1.
double gamma1(const JanowskiParams& p, double t);
/// Even quartic whose sign is the sign of gamma'(t) on (0, 1).
double h_poly(const JanowskiParams& p, double t);
double h_poly_derivative(const JanowskiParams& p, double t);

/// Zeros (delta1, delta2) of k_poly for parameters in E3. For B = -1 these
/// are (2/|A-1| - 1, 1). Throws PreconditionError outside E3.
std::pair<double, double> e3_deltas(const JanowskiParams& p);

/// (1 - sqrt(1 - B^2)) / |B|, the maximiser of gamma1 on (0, 1]. Requires B != 0.
double beta_of(const JanowskiParams& p);

/// Root of h in (0, 1) by bisection. Requires B != -1 and h(0) > 0,
/// otherwise throws PreconditionError.
double alpha_root(const JanowskiParams& p);

enum class PointwiseBranch { Interior, Annulus };

std::string_view to_string(PointwiseBranch b);

struct PointwiseBoundParts {
  double s0;
  std::optional<double> delta1;
  std::optional<double> delta2;
  PointwiseBranch branch;
  /// Bound on |S_f(z)|.
  double value;
};

/// Sharp bound on |S_f(z)| over C(A,B), with the case data that selected it.
/// Throws DomainError if |z| >= 1.
PointwiseBoundParts pointwise_bound_parts(const JanowskiParams& p, Complex z);
double pointwise_bound(const JanowskiParams& p, Complex z);

/// (1 - t^2)^2 times the pointwise bound at modulus t, evaluated without the
/// 1/(1 - t^2) factor so it stays accurate near t = 1.
double weighted_pointwise_bound(const JanowskiParams& p, double t);

enum class NormBranch { Bm1, AminusB, GammaAlpha, E3Formula };

std::string_view to_string(NormBranch b);
NormBranch norm_branch_from_string(std::string_view s);

struct NormBoundReport {
  JanowskiParams params;
  Region region;
  double bound;
  NormBranch branch;
  std::optional<double> alpha;
  /// bound / 2 when bound < 2: f extends to a k-quasiconformal map of the sphere.
  std::optional<double> qc_constant;
};

/// 2 |A^2 - B^2| (1 - sqrt(1 - B^2))^2 / B^4 on raw reals; the E3 norm.
double e3_norm_formula(double a, double b);

/// Supremum of the weighted bound over the interior set S (2 (A - B)/|A+B|)
/// and over the closed annulus ((A - B) gamma1(beta)), for E3 parameters.
double e3_interior_sup(const JanowskiParams& p);
double e3_annulus_sup(const JanowskiParams& p);

/// Sharp bound on the Schwarzian norm sup (1 - |z|^2)^2 |S_f(z)| over C(A,B).
NormBoundReport norm_bound(const JanowskiParams& p);

}  // namespace schwarzian
