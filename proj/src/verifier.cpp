#include "schwarzian/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "schwarzian/bounds.hpp"
#include "schwarzian/errors.hpp"
#include "schwarzian/parallel.hpp"
#include "schwarzian/schwarzian.hpp"

namespace schwarzian {

namespace {

constexpr std::size_t kWitnessCount = 5;
constexpr double kIdentityTol = 1e-9;
constexpr double kDominanceTol = 1e-9;
constexpr double kDieudonneTol = 1e-10;
constexpr double kEqualityTol = 1e-9;
constexpr double kGridTol = 1e-3;

bool better(const Witness& a, const Witness& b) { return a.weighted > b.weighted; }

void keep_top(std::vector<Witness>& top, std::vector<Witness> more) {
  top.insert(top.end(), more.begin(), more.end());
  std::stable_sort(top.begin(), top.end(), better);
  if (top.size() > kWitnessCount) top.resize(kWitnessCount);
}

struct RadialBest {
  int index = 0;
  Witness best{};
};

// Golden-section maximisation of fn on [lo, hi]; returns the best point seen.
Witness golden_max(const std::function<double(Complex)>& fn, double angle, double lo, double hi,
                   int iters) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto eval = [&](double r) { return Witness{std::polar(r, angle), fn(std::polar(r, angle))}; };
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  Witness w1 = eval(x1);
  Witness w2 = eval(x2);
  Witness best = better(w2, w1) ? w2 : w1;
  for (int i = 0; i < iters; ++i) {
    if (w1.weighted >= w2.weighted) {
      hi = x2;
      x2 = x1;
      w2 = w1;
      x1 = hi - inv_phi * (hi - lo);
      w1 = eval(x1);
      if (better(w1, best)) best = w1;
    } else {
      lo = x1;
      x1 = x2;
      w1 = w2;
      x2 = lo + inv_phi * (hi - lo);
      w2 = eval(x2);
      if (better(w2, best)) best = w2;
    }
  }
  return best;
}

// Area-uniform point with min_r <= |z| <= max_r.
Complex random_point(std::mt19937_64& rng, double min_r, double max_r) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r2 = min_r * min_r + (max_r * max_r - min_r * min_r) * unit(rng);
  return std::polar(std::sqrt(r2), 2.0 * std::numbers::pi * unit(rng));
}

}  // namespace

void GridSpec::check() const {
  if (radial_points < 1 || angular_points < 1 || refine_iters < 0 || refine_angles < 0) {
    throw DomainError("grid counts must be positive");
  }
  if (!(boundary_margin > 0.0 && boundary_margin < 1.0)) {
    throw DomainError("boundary margin must lie in (0, 1)");
  }
}

SupResult grid_supremum(const std::function<double(Complex)>& weighted, const GridSpec& grid) {
  grid.check();
  const double r_max = 1.0 - grid.boundary_margin;
  const int nr = grid.radial_points;
  const int na = grid.angular_points;
  auto radius = [&](int i) { return nr == 1 ? r_max : r_max * i / (nr - 1); };
  auto angle = [&](int j) { return 2.0 * std::numbers::pi * j / na; };

  std::vector<RadialBest> per_angle(static_cast<std::size_t>(na));
  parallel_for(per_angle.size(), [&](std::size_t j) {
    const double theta = angle(static_cast<int>(j));
    RadialBest rb{0, {std::polar(radius(0), theta), -1.0}};
    for (int i = 0; i < nr; ++i) {
      const Complex z = std::polar(radius(i), theta);
      const double v = weighted(z);
      if (v > rb.best.weighted) rb = {i, {z, v}};
    }
    per_angle[j] = rb;
  });

  std::vector<int> order(static_cast<std::size_t>(na));
  for (int j = 0; j < na; ++j) order[static_cast<std::size_t>(j)] = j;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return per_angle[static_cast<std::size_t>(a)].best.weighted >
           per_angle[static_cast<std::size_t>(b)].best.weighted;
  });

  const std::size_t n_refine = std::min(order.size(), static_cast<std::size_t>(grid.refine_angles));
  std::vector<Witness> refined(n_refine);
  if (grid.refine_iters > 0 && nr > 1) {
    parallel_for(n_refine, [&](std::size_t k) {
      const int j = order[k];
      const RadialBest& rb = per_angle[static_cast<std::size_t>(j)];
      const double lo = radius(std::max(0, rb.index - 1));
      const double hi = radius(std::min(nr - 1, rb.index + 1));
      refined[k] = golden_max(weighted, angle(j), lo, hi, grid.refine_iters);
    });
  } else {
    refined.clear();
  }

  std::vector<Witness> top;
  std::vector<Witness> coarse;
  coarse.reserve(per_angle.size());
  for (const auto& rb : per_angle) coarse.push_back(rb.best);
  keep_top(top, std::move(coarse));
  keep_top(top, std::move(refined));
  return {top.empty() ? 0.0 : std::max(0.0, top.front().weighted), top};
}

VerificationReport numeric_norm(const JanowskiParams& params, const SchwarzFunction& w,
                                const GridSpec& grid) {
  const SupResult sup =
      grid_supremum([&](Complex z) { return schwarzian(params, w, z).weighted; }, grid);
  VerificationReport report;
  report.numeric_sup = sup.value;
  report.closed_form = norm_bound(params).bound;
  report.max_violation = report.numeric_sup - report.closed_form;
  report.witnesses = sup.witnesses;
  report.checks = 1;
  report.tolerance = kIdentityTol;
  report.violations = report.max_violation > report.tolerance ? 1 : 0;
  return report;
}

double grid_sup_of_pointwise_bound(const JanowskiParams& params, const GridSpec& grid) {
  return grid_supremum([&](Complex z) { return weighted_pointwise_bound(params, std::abs(z)); },
                       grid)
      .value;
}

VerificationReport check_pointwise_dominance(const JanowskiParams& params, int trials,
                                             std::uint64_t seed) {
  if (trials < 1) throw DomainError("trials must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> degree(0, 3);

  VerificationReport report;
  report.closed_form = norm_bound(params).bound;
  report.tolerance = kDominanceTol;
  report.max_violation = -std::numeric_limits<double>::infinity();
  std::vector<Witness> worst;
  for (int i = 0; i < trials; ++i) {
    // The first trial is w == 0, the slack case.
    const SchwarzFunction w = i == 0 ? SchwarzFunction::zero() : random_schwarz(degree(rng), rng());
    const Complex z = random_point(rng, 0.0, 0.99);
    const SchwarzianSample s = schwarzian(params, w, z);
    const double u = 1.0 - std::norm(z);
    const double gap = s.weighted - u * u * pointwise_bound(params, z);
    report.numeric_sup = std::max(report.numeric_sup, s.weighted);
    report.max_violation = std::max(report.max_violation, gap);
    if (gap > report.tolerance) ++report.violations;
    ++report.checks;
    keep_top(worst, {Witness{z, s.weighted}});
  }
  report.witnesses = std::move(worst);
  return report;
}

VerificationReport check_sharpness(const JanowskiParams& params, std::span<const double> z0_list,
                                   const GridSpec& grid) {
  for (const double z0 : z0_list) {
    if (z0 == 0.0 || !is_admissible(params, z0)) {
      throw PreconditionError("inadmissible z0 for the f_{z0,p,q} construction");
    }
  }
  VerificationReport report;
  report.closed_form = norm_bound(params).bound;
  report.tolerance = kIdentityTol;
  report.max_equality_gap = 0.0;
  for (const double z0 : z0_list) {
    const double extremal = extremal_weighted_value(params, z0);
    const double u = 1.0 - z0 * z0;
    const double target = u * u * pointwise_bound(params, z0);
    const double direct =
        schwarzian(params, schwarz_function_of(make_fzpq(params, z0)), z0).weighted;
    const double gap = std::max(std::abs(extremal - target), std::abs(direct - target));
    report.max_equality_gap = std::max(*report.max_equality_gap, gap);
    report.numeric_sup = std::max(report.numeric_sup, extremal);
    if (gap > kIdentityTol) ++report.violations;
    ++report.checks;
    keep_top(report.witnesses, {Witness{Complex{z0, 0.0}, extremal}});
  }
  report.max_violation = *report.max_equality_gap;
  if (classify(params) == Region::E3) {
    const VerificationReport k = numeric_norm(params, SchwarzFunction::identity(), grid);
    report.numeric_sup = k.numeric_sup;
    report.witnesses = k.witnesses;
    const double k_gap = std::abs(k.numeric_sup - report.closed_form);
    if (k_gap > kGridTol) ++report.violations;
    ++report.checks;
    report.max_violation = std::max(report.max_violation, k.numeric_sup - report.closed_form);
  }
  return report;
}

VerificationReport dieudonne_suite(int trials, std::uint64_t seed) {
  if (trials < 1) throw DomainError("trials must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> degree(0, 4);

  VerificationReport report;
  report.tolerance = kDieudonneTol;
  report.max_violation = -std::numeric_limits<double>::infinity();
  report.numeric_sup = -std::numeric_limits<double>::infinity();
  report.max_equality_gap = 0.0;
  for (int i = 0; i < trials; ++i) {
    const SchwarzFunction w = random_schwarz(degree(rng), rng());
    const Complex z0 = random_point(rng, 0.05, 0.95);
    const DieudonneGap g = dieudonne_gap(w, z0);
    const double gap = g.lhs - g.rhs;
    report.numeric_sup = std::max(report.numeric_sup, gap);
    report.max_violation = std::max(report.max_violation, gap);
    if (gap > kDieudonneTol) {
      ++report.violations;
      keep_top(report.witnesses, {Witness{z0, gap}});
    }
    ++report.checks;
  }
  for (int i = 0; i < trials; ++i) {
    // w = z * (single Blaschke factor): a degree-2 Blaschke product with w(0) = 0.
    const SchwarzFunction w = random_schwarz(1, rng());
    const Complex z0 = random_point(rng, 0.05, 0.95);
    const DieudonneGap g = dieudonne_gap(w, z0);
    const double gap = std::abs(g.lhs - g.rhs);
    report.max_equality_gap = std::max(*report.max_equality_gap, gap);
    if (gap > kEqualityTol) {
      ++report.violations;
      keep_top(report.witnesses, {Witness{z0, gap}});
    }
    ++report.checks;
  }
  return report;
}

ExtremalSpec norm_witness(const JanowskiParams& params, const GridSpec& grid) {
  const NormBoundReport nb = norm_bound(params);
  switch (nb.branch) {
    case NormBranch::E3Formula:
      return ExtremalSpec::k_function();
    case NormBranch::GammaAlpha:
      return make_fzpq(params, *nb.alpha);
    case NormBranch::Bm1:
      return make_fzpq(params, 1.0 - grid.boundary_margin);
    case NormBranch::AminusB:
      return ExtremalSpec::f0();
  }
  return ExtremalSpec::k_function();
}

}  // namespace schwarzian
