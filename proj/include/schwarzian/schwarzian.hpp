#pragma once

#include "schwarzian/params.hpp"
#include "schwarzian/schwarz_function.hpp"

namespace schwarzian {

/// S_f(z) together with its hyperbolic weight (1 - |z|^2)^2 |S_f(z)|.
struct SchwarzianSample {
  Complex z;
  Complex value;
  double weighted;
};

SchwarzianSample make_sample(Complex z, Complex value);

/// Schwarzian of the C(A,B) function f with 1 + z f''/f' = (1 + A w)/(1 + B w),
/// w = z psi. Evaluated in the regular form
///   (A - B) [psi' - (A + B) psi^2 / 2] / (1 + B z psi)^2,
/// which is finite at z = 0. Throws DomainError if |z| >= 1.
SchwarzianSample schwarzian(const JanowskiParams& params, const SchwarzFunction& w, Complex z);

/// S_K(z) = -(A^2 - B^2) / (2 (1 + B z)^2) for the extremal K_{A,B}.
SchwarzianSample schwarzian_of_K(const JanowskiParams& params, Complex z);

/// S_{f0}(z) = (A - B)(2 - (A + B) z^2) / (2 (1 + B z^2)^2), where w = z^2.
SchwarzianSample schwarzian_of_f0(const JanowskiParams& params, Complex z);

}  // namespace schwarzian
