#include "schwarzian/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "schwarzian/errors.hpp"

namespace schwarzian {

double s0_of(const JanowskiParams& p, double t) {
  const double t2 = t * t;
  return 2.0 * std::abs(p.B()) * t2 / (2.0 - p.abs_sum() * (1.0 - t2));
}

double k_poly(const JanowskiParams& p, double t) {
  const double s = p.abs_sum();
  return 2.0 - s - 2.0 * std::abs(p.B()) * t + s * t * t;
}

double gamma(const JanowskiParams& p, double t) {
  const double s = p.abs_sum();
  const double b = p.B();
  const double u = 1.0 - t * t;
  const double c = 2.0 - s * u;
  return u * c / (c - 2.0 * b * b * t * t);
}

double gamma1(const JanowskiParams& p, double t) {
  const double s = p.abs_sum();
  const double abs_b = std::abs(p.B());
  if (abs_b == 1.0) {
    // (1 - t^2)/(1 - t) = 1 + t.
    return 0.5 * s * (1.0 + t) * (1.0 + t);
  }
  const double u = 1.0 - t * t;
  const double d = 1.0 - abs_b * t;
  return s * u * u / (2.0 * d * d);
}

double h_poly(const JanowskiParams& p, double t) {
  const double s = p.abs_sum();
  const double b2 = p.B() * p.B();
  const double t2 = t * t;
  return (2.0 - s) * (s + 2.0 * b2 - 2.0) - 2.0 * s * (2.0 - s) * t2 +
         s * (2.0 * b2 - s) * t2 * t2;
}

double h_poly_derivative(const JanowskiParams& p, double t) {
  const double s = p.abs_sum();
  const double b2 = p.B() * p.B();
  return -4.0 * t * s * (2.0 * (1.0 - b2 * t * t) - s * (1.0 - t * t));
}

std::pair<double, double> e3_deltas(const JanowskiParams& p) {
  if (classify(p) != Region::E3) throw PreconditionError("delta1/delta2 are defined for E3 only");
  const double s = p.abs_sum();
  if (p.B() == -1.0) return {2.0 / std::abs(p.A() - 1.0) - 1.0, 1.0};
  const double abs_b = std::abs(p.B());
  const double disc = std::sqrt(std::max(0.0, p.B() * p.B() - s * (2.0 - s)));
  return {(abs_b - disc) / s, (abs_b + disc) / s};
}

double beta_of(const JanowskiParams& p) {
  const double abs_b = std::abs(p.B());
  if (abs_b == 0.0) throw PreconditionError("beta is undefined for B = 0");
  return (1.0 - p.root()) / abs_b;
}

double alpha_root(const JanowskiParams& p) {
  if (p.B() == -1.0) throw PreconditionError("alpha is not used when B = -1");
  if (!(h_poly(p, 0.0) > 0.0)) {
    throw PreconditionError("h(0) <= 0: the (A-B) gamma(alpha) branch does not apply");
  }
  // h(0) > 0, h(1) = -4(1 - B^2) < 0 and h is strictly decreasing on (0, 1).
  double lo = 0.0;
  double hi = 1.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (h_poly(p, mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::abs(h_poly(p, lo)) <= std::abs(h_poly(p, hi)) ? lo : hi;
}

std::string_view to_string(PointwiseBranch b) {
  return b == PointwiseBranch::Interior ? "Interior" : "Annulus";
}

PointwiseBoundParts pointwise_bound_parts(const JanowskiParams& p, Complex z) {
  const double t = std::abs(z);
  if (!(t < 1.0)) throw DomainError("pointwise bound needs |z| < 1");
  const double s = p.abs_sum();
  const double a = p.A();
  const double b = p.B();

  PointwiseBoundParts parts{s0_of(p, t), std::nullopt, std::nullopt, PointwiseBranch::Interior, 0.0};
  if (classify(p) == Region::E3) {
    const auto [d1, d2] = e3_deltas(p);
    parts.delta1 = d1;
    parts.delta2 = d2;
    if (d1 <= t && t <= d2) parts.branch = PointwiseBranch::Annulus;
  }

  if (parts.branch == PointwiseBranch::Annulus) {
    const double d = 1.0 - std::abs(b) * t;
    parts.value = std::abs(a * a - b * b) / (2.0 * d * d);
  } else {
    const double u = 1.0 - t * t;
    const double c = 2.0 - s * u;
    parts.value = (a - b) * c / (u * (c - 2.0 * b * b * t * t));
  }
  return parts;
}

double pointwise_bound(const JanowskiParams& p, Complex z) { return pointwise_bound_parts(p, z).value; }

double weighted_pointwise_bound(const JanowskiParams& p, double t) {
  if (!(t >= 0.0 && t < 1.0)) throw DomainError("weighted bound needs 0 <= t < 1");
  const double scale = p.A() - p.B();
  if (classify(p) == Region::E3) {
    const auto [d1, d2] = e3_deltas(p);
    if (d1 <= t && t <= d2) return scale * gamma1(p, t);
  }
  return scale * gamma(p, t);
}

std::string_view to_string(NormBranch b) {
  switch (b) {
    case NormBranch::Bm1:
      return "Bm1";
    case NormBranch::AminusB:
      return "AminusB";
    case NormBranch::GammaAlpha:
      return "GammaAlpha";
    case NormBranch::E3Formula:
      return "E3Formula";
  }
  return "?";
}

NormBranch norm_branch_from_string(std::string_view s) {
  if (s == "Bm1") return NormBranch::Bm1;
  if (s == "AminusB") return NormBranch::AminusB;
  if (s == "GammaAlpha") return NormBranch::GammaAlpha;
  if (s == "E3Formula") return NormBranch::E3Formula;
  throw DomainError("unknown norm branch: " + std::string(s));
}

double e3_norm_formula(double a, double b) {
  const double root = std::sqrt(1.0 - b * b);
  const double b2 = b * b;
  return 2.0 * std::abs(a * a - b * b) * (1.0 - root) * (1.0 - root) / (b2 * b2);
}

double e3_interior_sup(const JanowskiParams& p) {
  if (classify(p) != Region::E3) throw PreconditionError("E3 parameters required");
  return 2.0 * (p.A() - p.B()) / p.abs_sum();
}

double e3_annulus_sup(const JanowskiParams& p) {
  if (classify(p) != Region::E3) throw PreconditionError("E3 parameters required");
  return (p.A() - p.B()) * gamma1(p, beta_of(p));
}

NormBoundReport norm_bound(const JanowskiParams& p) {
  NormBoundReport report{p, classify(p), 0.0, NormBranch::E3Formula, std::nullopt, std::nullopt};
  const double b = p.B();
  if (report.region == Region::E3) {
    report.bound = e3_norm_formula(p.A(), b);
  } else if (b == -1.0) {
    report.branch = NormBranch::Bm1;
    report.bound = 2.0;
  } else if (p.abs_sum() <= 2.0 * (1.0 - b * b)) {
    report.branch = NormBranch::AminusB;
    report.bound = p.A() - b;
  } else {
    report.branch = NormBranch::GammaAlpha;
    const double alpha = alpha_root(p);
    report.alpha = alpha;
    report.bound = (p.A() - b) * gamma(p, alpha);
  }
  if (report.bound < 2.0) report.qc_constant = 0.5 * report.bound;
  return report;
}

}  // namespace schwarzian
