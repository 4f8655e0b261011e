#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "schwarzian/errors.hpp"
#include "schwarzian/schwarz_function.hpp"
#include "test_support.hpp"

using namespace schwarzian;
using schwarzian::testing::random_disk_point;

namespace {

Complex central_difference(const std::function<Complex(Complex)>& f, Complex z, double h = 1e-6) {
  return (f(z + h) - f(z - h)) / (2.0 * h);
}

}  // namespace

TEST_CASE("eval_blaschke examples") {
  CHECK(std::abs(eval_blaschke(BlaschkeProduct(0.0, {0.0}), 0.5) - Complex(0.5)) < 1e-15);
  CHECK(std::abs(eval_blaschke(BlaschkeProduct(0.0, {}), Complex(0.3, -0.7)) - Complex(1.0)) < 1e-15);
  CHECK(std::abs(eval_blaschke(BlaschkeProduct(0.0, {0.5}), 0.5)) < 1e-15);
}

TEST_CASE("eval_blaschke_deriv examples") {
  CHECK(std::abs(eval_blaschke_deriv(BlaschkeProduct(0.0, {0.0}), 0.3) - Complex(1.0)) < 1e-15);
  CHECK(std::abs(eval_blaschke_deriv(BlaschkeProduct(1.2, {}), Complex(0.1, 0.2))) == 0.0);

  const BlaschkeProduct b(0.0, {0.5, -0.5});
  const Complex fd = central_difference([&](Complex z) { return b(z); }, 0.0);
  CHECK(std::abs(fd) < 1e-8);
  CHECK(std::abs(eval_blaschke_deriv(b, 0.0) - fd) < 1e-8);
}

TEST_CASE("Blaschke products are unimodular on the circle") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SchwarzFunction w = random_schwarz(static_cast<int>(seed % 6), seed);
    const BlaschkeProduct& b = w.psi();
    for (int k = 0; k < 64; ++k) {
      const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * k / 64.0);
      CHECK(std::abs(std::abs(b(z)) - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("zeros must lie inside the disk") {
  CHECK_THROWS_AS(BlaschkeProduct(0.0, {Complex(1.0, 0.0)}), DomainError);
  CHECK_THROWS_AS(BlaschkeProduct(0.0, {Complex(0.8, 0.7)}), DomainError);
}

TEST_CASE("eval_omega examples") {
  const SchwarzFunction zero = SchwarzFunction::zero();
  CHECK(eval_omega(zero, 0.7) == Complex(0.0));
  CHECK(eval_omega_deriv(zero, 0.7) == Complex(0.0));
  CHECK(zero.blaschke_degree() == 0);

  const SchwarzFunction square(BlaschkeProduct(0.0, {0.0}));
  CHECK(std::abs(eval_omega(square, Complex(0.3, 0.4)) - Complex(0.3, 0.4) * Complex(0.3, 0.4)) < 1e-15);
  CHECK(std::abs(eval_omega_deriv(square, 0.5) - Complex(1.0)) < 1e-15);
  CHECK(square.blaschke_degree() == 2);

  const SchwarzFunction id = SchwarzFunction::identity();
  CHECK(eval_omega(id, Complex(0.2, -0.1)) == Complex(0.2, -0.1));
  CHECK(eval_omega_deriv(id, Complex(0.2, -0.1)) == Complex(1.0));
}

TEST_CASE("dieudonne_gap examples") {
  const auto square = dieudonne_gap(SchwarzFunction(BlaschkeProduct(0.0, {0.0})), 0.5);
  CHECK(square.lhs == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(square.rhs == doctest::Approx(0.5).epsilon(1e-14));

  const auto id = dieudonne_gap(SchwarzFunction::identity(), 0.5);
  CHECK(id.lhs == 0.0);
  CHECK(std::abs(id.rhs) < 1e-15);

  const auto cube = dieudonne_gap(SchwarzFunction(BlaschkeProduct(0.0, {0.0, 0.0})), 0.5);
  CHECK(cube.lhs == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(cube.rhs == doctest::Approx(0.625).epsilon(1e-14));

  CHECK_THROWS_AS(dieudonne_gap(SchwarzFunction::identity(), 0.0), DomainError);
  CHECK_THROWS_AS(dieudonne_gap(SchwarzFunction::identity(), Complex(0.6, 0.8)), DomainError);
}

TEST_CASE("random_schwarz examples") {
  const SchwarzFunction rot = random_schwarz(0, 99);
  const Complex ratio = rot(Complex(0.3, 0.1)) / Complex(0.3, 0.1);
  CHECK(std::abs(std::abs(ratio) - 1.0) < 1e-15);
  CHECK(std::abs(rot(Complex(-0.5, 0.2)) / Complex(-0.5, 0.2) - ratio) < 1e-15);

  const SchwarzFunction a = random_schwarz(2, 1);
  const SchwarzFunction b = random_schwarz(2, 1);
  CHECK(a.psi().zeros() == b.psi().zeros());
  CHECK(a.psi().rotation() == b.psi().rotation());
  CHECK(random_schwarz(2, 2).psi().zeros() != a.psi().zeros());

  const SchwarzFunction w = random_schwarz(3, 7);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const Complex z = random_disk_point(rng, 0.999);
    CHECK(std::abs(w(z)) <= std::abs(z) + 1e-12);
  }
  for (const Complex& zero : w.psi().zeros()) CHECK(std::abs(zero) <= 0.95);
  CHECK_THROWS_AS(random_schwarz(-1, 0), DomainError);
}

TEST_CASE("Schwarz lemma bound on generated functions") {
  std::mt19937_64 rng(2024);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SchwarzFunction w = random_schwarz(static_cast<int>(seed % 5), seed);
    CHECK(w(0.0) == Complex(0.0));
    for (int i = 0; i < 1000; ++i) {
      const Complex z = random_disk_point(rng, 0.99);
      REQUIRE(std::abs(w(z)) <= std::abs(z) + 1e-12);
    }
  }
}

TEST_CASE("Dieudonne inequality, and equality for degree-2 Blaschke products") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> radius(0.05, 0.95);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const SchwarzFunction w = random_schwarz(static_cast<int>(seed % 5), seed);
    const SchwarzFunction two = random_schwarz(1, seed + 1000);
    REQUIRE(two.blaschke_degree() == 2);
    for (int i = 0; i < 20; ++i) {
      const Complex z0 = std::polar(radius(rng), angle(rng));
      const auto g = dieudonne_gap(w, z0);
      CHECK(g.lhs <= g.rhs + 1e-10);
      const auto eq = dieudonne_gap(two, z0);
      CHECK(std::abs(eq.lhs - eq.rhs) <= 1e-9);
    }
  }
}

TEST_CASE("analytic derivatives match central differences") {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const SchwarzFunction w = random_schwarz(static_cast<int>(seed % 5), seed);
    for (int i = 0; i < 25; ++i) {
      const Complex z = random_disk_point(rng, 0.9);
      const Complex fd_psi = central_difference([&](Complex x) { return w.psi_value(x); }, z);
      const Complex fd_omega = central_difference([&](Complex x) { return w(x); }, z);
      const Complex d_psi = w.psi_derivative(z);
      const Complex d_omega = w.derivative(z);
      CHECK(std::abs(d_psi - fd_psi) <= 1e-7 * std::max(1.0, std::abs(d_psi)));
      CHECK(std::abs(d_omega - fd_omega) <= 1e-7 * std::max(1.0, std::abs(d_omega)));
    }
  }
}
