#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "schwarzian/extremal.hpp"
#include "schwarzian/params.hpp"
#include "schwarzian/schwarz_function.hpp"

namespace schwarzian {

/// Polar grid for supremum searches over the disk. Radii are spaced evenly on
/// [0, 1 - boundary_margin]; the `refine_angles` best angles of the coarse
/// pass get `refine_iters` golden-section steps in radius.
struct GridSpec {
  int radial_points = 256;
  int angular_points = 128;
  double boundary_margin = 1e-4;
  int refine_iters = 40;
  int refine_angles = 8;

  /// Throws DomainError for non-positive counts or a margin outside (0, 1).
  void check() const;
};

struct Witness {
  Complex z;
  double weighted;
};

struct VerificationReport {
  double numeric_sup = 0.0;
  double closed_form = 0.0;
  /// Worst signed gap of the check (positive means the bound was exceeded).
  double max_violation = 0.0;
  std::vector<Witness> witnesses;
  std::size_t checks = 0;
  std::size_t violations = 0;
  double tolerance = 0.0;
  /// Largest |lhs - rhs| over cases where equality is expected.
  std::optional<double> max_equality_gap;

  bool passed() const { return violations == 0; }
};

struct SupResult {
  double value = 0.0;
  /// Up to five best points, best first.
  std::vector<Witness> witnesses;
};

/// Deterministic supremum of a non-negative function over the disk:
/// coarse polar grid, then golden-section refinement in radius.
SupResult grid_supremum(const std::function<double(Complex)>& weighted, const GridSpec& grid);

/// Numeric ||S_f|| for the f induced by w, compared with norm_bound.
VerificationReport numeric_norm(const JanowskiParams& params, const SchwarzFunction& w,
                                const GridSpec& grid = {});

/// Grid supremum of (1 - |z|^2)^2 pointwise_bound(params, z).
double grid_sup_of_pointwise_bound(const JanowskiParams& params, const GridSpec& grid = {});

/// Random (w, z) pairs, w of Blaschke degree <= 4 (plus w == 0), checked
/// against the pointwise bound with tolerance 1e-9.
VerificationReport check_pointwise_dominance(const JanowskiParams& params, int trials,
                                             std::uint64_t seed);

/// Attainment of the pointwise bound by f_{z0,p,q} at each z0 (1e-9), and for
/// E3 parameters the numeric norm of K_{A,B} against the closed form (1e-3).
/// Throws PreconditionError for an inadmissible z0.
VerificationReport check_sharpness(const JanowskiParams& params, std::span<const double> z0_list,
                                   const GridSpec& grid = {});

/// Dieudonne inequality on `trials` random w (tolerance 1e-10) and equality on
/// `trials` degree-2 Blaschke products w = z * (one factor) (tolerance 1e-9).
VerificationReport dieudonne_suite(int trials, std::uint64_t seed);

/// The extremal whose Schwarzian norm realises (or approaches) norm_bound.
/// For B = -1 outside E3 the bound is only approached as z0 -> 1, so the
/// witness is f_{z0,p,q} at the outer radius of `grid`.
ExtremalSpec norm_witness(const JanowskiParams& params, const GridSpec& grid = {});

}  // namespace schwarzian
