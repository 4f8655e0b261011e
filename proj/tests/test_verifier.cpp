#include <doctest.h>

#include <cmath>
#include <vector>

#include "schwarzian/bounds.hpp"
#include "schwarzian/errors.hpp"
#include "schwarzian/schwarzian.hpp"
#include "schwarzian/verifier.hpp"
#include "test_support.hpp"

using namespace schwarzian;
using schwarzian::testing::dense_max;
using schwarzian::testing::sample_params;

TEST_CASE("numeric_norm examples") {
  const auto zero = numeric_norm(validate(0.4, -0.3), SchwarzFunction::zero());
  CHECK(zero.numeric_sup == 0.0);
  CHECK(zero.passed());

  const auto convex = numeric_norm(validate(1.0, -1.0), schwarz_function_of(ExtremalSpec::f0()));
  CHECK(std::abs(convex.numeric_sup - 2.0) <= 1e-6);
  CHECK(convex.witnesses.size() == 5);
  CHECK(convex.witnesses.front().weighted == convex.numeric_sup);

  // Oracle: dense 1-D maximum of (1 - t^2)^2 |S_K(t)| over t in (0, 1).
  const JanowskiParams p = validate(-0.5, -1.0);
  const double oracle = dense_max(
      [&](double t) {
        return (1 - t * t) * (1 - t * t) * std::abs(p.A() * p.A() - 1.0) / (2 * (1 - t) * (1 - t));
      },
      0.0, 1.0 - 1e-6, 1e-6);
  const auto k = numeric_norm(p, SchwarzFunction::identity());
  CHECK(std::abs(oracle - 1.5) <= 1e-5);
  CHECK(std::abs(k.numeric_sup - 1.5) <= 1e-3);
  CHECK(std::abs(k.numeric_sup - oracle) <= 1e-3);
  CHECK(k.closed_form == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(k.max_violation <= 0.0);
}

TEST_CASE("GridSpec validation") {
  GridSpec g;
  CHECK_NOTHROW(g.check());
  g.radial_points = 0;
  CHECK_THROWS_AS(g.check(), DomainError);
  g = GridSpec{};
  g.boundary_margin = 0.0;
  CHECK_THROWS_AS(g.check(), DomainError);
}

TEST_CASE("the norm witness attains the bound on interior branches") {
  for (const auto& [a, b] : {std::pair{0.5, 0.0}, {0.5, -0.5}, {0.5, -0.95}, {0.9, 0.3}}) {
    const JanowskiParams p(a, b);
    const auto r = numeric_norm(p, schwarz_function_of(norm_witness(p)));
    CHECK(std::abs(r.numeric_sup - r.closed_form) <= 1e-6);
    CHECK(r.passed());
  }
}

TEST_CASE("the B = -1 norm witness approaches 2 at the grid boundary") {
  for (double a : {0.0, 0.3, 1.0}) {
    const JanowskiParams p(a, -1.0);
    const ExtremalSpec w = norm_witness(p);
    CHECK(w.kind == ExtremalKind::FZPQ);
    const auto r = numeric_norm(p, schwarz_function_of(w));
    CHECK(r.closed_form == 2.0);
    CHECK(std::abs(r.numeric_sup - 2.0) <= 5e-3);
    CHECK(r.passed());
  }
}

TEST_CASE("check_pointwise_dominance examples") {
  const auto convex = check_pointwise_dominance(validate(1.0, 0.0), 1000, 42);
  CHECK(convex.passed());
  CHECK(convex.max_violation <= 0.0);
  CHECK(convex.checks == 1000);

  // The first trial is w == 0: its gap is minus the full weighted bound.
  const auto single = check_pointwise_dominance(validate(0.3, -0.2), 1, 5);
  CHECK(single.numeric_sup == 0.0);
  CHECK(single.max_violation < 0.0);

  const JanowskiParams e3 = validate(-0.5, -1.0);
  const auto r = check_pointwise_dominance(e3, 2000, 7);
  CHECK(r.passed());
  CHECK(r.max_violation <= 1e-9);
  CHECK_THROWS_AS(check_pointwise_dominance(e3, 0, 1), DomainError);
}

TEST_CASE("dominance holds across all regions") {
  for (Region reg : {Region::E1, Region::E2, Region::E3}) {
    for (const auto& p : sample_params(reg, 5, 800 + static_cast<int>(reg))) {
      const auto r = check_pointwise_dominance(p, 1000, 3);
      CHECK(r.passed());
      CHECK(r.max_violation <= 1e-9);
    }
  }
}

TEST_CASE("check_sharpness examples") {
  std::vector<double> z0s;
  for (int k = 1; k <= 9; ++k) z0s.push_back(k / 10.0);
  const auto convex = check_sharpness(validate(1.0, -1.0), z0s);
  CHECK(convex.passed());
  CHECK(*convex.max_equality_gap <= 1e-10);
  CHECK(convex.checks == 9);

  const JanowskiParams ga = validate(0.5, -0.95);
  const double alpha = alpha_root(ga);
  const std::vector<double> at_alpha{alpha};
  const auto witness = check_sharpness(ga, at_alpha);
  CHECK(witness.passed());
  CHECK(std::abs(witness.numeric_sup - norm_bound(ga).bound) <= 1e-10);

  const auto e3 = check_sharpness(validate(-0.5, -1.0), std::vector<double>{0.1, -0.25});
  CHECK(e3.passed());
  CHECK(std::abs(e3.numeric_sup - 1.5) <= 1e-3);
  CHECK(e3.checks == 3);

  CHECK_THROWS_AS(check_sharpness(validate(-0.5, -1.0), std::vector<double>{0.5}), PreconditionError);
}

TEST_CASE("dieudonne_suite examples") {
  const auto r = dieudonne_suite(500, 9);
  CHECK(r.passed());
  CHECK(r.max_violation <= 1e-10);
  CHECK(*r.max_equality_gap <= 1e-9);
  CHECK(r.checks == 1000);

  // Degree-3 w: strict inequality at generic points.
  std::mt19937_64 rng(12);
  for (int i = 0; i < 500; ++i) {
    const SchwarzFunction w = random_schwarz(2, rng());
    const Complex z0 = std::polar(0.1 + 0.8 * (i % 100) / 100.0, 0.37 * i);
    const auto g = dieudonne_gap(w, z0);
    CHECK(g.lhs < g.rhs);
  }

  const SchwarzFunction rot(BlaschkeProduct(1.1, {}));
  const auto g = dieudonne_gap(rot, Complex(0.3, -0.2));
  CHECK(g.lhs == 0.0);
  CHECK(std::abs(g.rhs) <= 1e-15);
}

TEST_CASE("reports are deterministic") {
  const JanowskiParams p = validate(0.2, -0.7);
  const SchwarzFunction w = random_schwarz(3, 77);
  const auto a = numeric_norm(p, w);
  const auto b = numeric_norm(p, w);
  CHECK(a.numeric_sup == b.numeric_sup);
  REQUIRE(a.witnesses.size() == b.witnesses.size());
  for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
    CHECK(a.witnesses[i].z == b.witnesses[i].z);
    CHECK(a.witnesses[i].weighted == b.witnesses[i].weighted);
  }
  const auto d1 = check_pointwise_dominance(p, 300, 4);
  const auto d2 = check_pointwise_dominance(p, 300, 4);
  CHECK(d1.max_violation == d2.max_violation);
  CHECK(d1.numeric_sup == d2.numeric_sup);
  CHECK(dieudonne_suite(100, 3).max_violation == dieudonne_suite(100, 3).max_violation);
}

TEST_CASE("refining the grid never lowers the estimate") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const JanowskiParams p = sample_params(static_cast<Region>(seed % 3), 1, 900 + seed).front();
    const SchwarzFunction w = random_schwarz(static_cast<int>(seed % 4), seed);
    double prev = -1.0;
    // Nested grids: (n - 1) and the angle count double at every step. The
    // refinement step may land a few ulps apart on equal maxima.
    for (int level = 0; level < 4; ++level) {
      GridSpec g;
      g.radial_points = 16 * (1 << level) + 1;
      g.angular_points = 16 * (1 << level);
      g.refine_iters = 10 * (level + 1);
      const double sup = numeric_norm(p, w, g).numeric_sup;
      CHECK(sup >= prev - 1e-13);
      prev = sup;
    }
  }
}

TEST_CASE("grid sup of the weighted pointwise bound matches norm_bound") {
  for (Region r : {Region::E1, Region::E2, Region::E3}) {
    for (const auto& p : sample_params(r, 20, 950 + static_cast<int>(r))) {
      const double sup = grid_sup_of_pointwise_bound(p);
      CHECK(std::abs(sup - norm_bound(p).bound) <= 1e-5);
    }
  }
}
