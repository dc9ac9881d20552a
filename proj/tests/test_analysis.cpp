#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "orlicz/analysis.hpp"
#include "orlicz/dp1d.hpp"

using namespace orlicz;

namespace {

GridFunction constant(double c, double lo = 0.0, double hi = 1.0, int n = 513) {
  return GridFunction::sample(lo, hi, n, [c](double) { return c; });
}

PhiFunction dp_family() {
  return PhiFunction::double_phase(1.1, 2.0, CoefficientFunction::negative_part_power(0.5));
}

}  // namespace

TEST_CASE("grid function basics") {
  const GridFunction u = GridFunction::sample(0.0, 1.0, 101, [](double x) { return x * x; });
  CHECK(u.spacing() == doctest::Approx(0.01));
  CHECK(u(0.505) == doctest::Approx(0.505 * 0.505).epsilon(1e-3));
  CHECK_THROWS_AS(u(1.5), DomainError);
  CHECK_THROWS_AS(GridFunction(0.0, 1.0, {1.0}), DomainError);
  CHECK_THROWS_AS(GridFunction(0.0, 1.0, {1.0, std::nan("")}), DomainError);
  const GridFunction du = u.derivative();
  CHECK(du(0.5) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("modular closed forms") {
  const PhiFunction square = PhiFunction::power(2.0);
  CHECK(modular(square, constant(1.0)) == doctest::Approx(1.0).epsilon(1e-14));
  const GridFunction id = GridFunction::sample(0.0, 1.0, 201, [](double x) { return x; });
  CHECK(modular(square, id) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("modular quadrature order under refinement") {
  // smooth coefficient, smooth u: Simpson gains at least two orders per halving
  const PhiFunction phi = PhiFunction::double_phase(
      1.1, 2.0, CoefficientFunction::from("exp", [](double x) { return std::exp(-x * x); }));
  double prev_change = -1.0;
  double prev = 0.0;
  for (int n : {65, 129, 257, 513}) {
    const GridFunction u =
        GridFunction::sample(-1.0, 1.0, n, [](double x) { return std::cos(x) + 1.5; });
    const double v = modular(phi, u);
    if (prev != 0.0) {
      const double change = std::abs(v - prev);
      if (prev_change > 0.0) CHECK(change <= prev_change / 4.0 + 1e-14);
      prev_change = change;
    }
    prev = v;
  }
}

TEST_CASE("luxemburg norm") {
  const PhiFunction square = PhiFunction::power(2.0);
  CHECK(luxemburg_norm(square, constant(2.0)) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(luxemburg_norm(square, constant(0.0)) == 0.0);
  // homogeneity
  const GridFunction u =
      GridFunction::sample(0.0, 1.0, 257, [](double x) { return std::sin(3.0 * x) + 2.0; });
  CHECK(luxemburg_norm(square, u.scaled(3.0)) ==
        doctest::Approx(3.0 * luxemburg_norm(square, u)).epsilon(1e-8));
  // unit ball property
  const double nrm = luxemburg_norm(square, u);
  CHECK(modular(square, u.scaled(1.0 / nrm)) <= 1.0 + 1e-8);

  // double-phase norm of u = 1 on (-1, 0): root of lambda^{-1.1} + (2/3) lambda^{-2} = 1.
  // The sqrt coefficient has an endpoint derivative singularity, so a dense
  // grid keeps the quadrature error below the comparison tolerance.
  const PhiFunction dp = dp_family();
  const GridFunction one = constant(1.0, -1.0, 0.0, 32769);
  const double expected = oracles::bisect_root(
      [](double l) { return std::pow(l, -1.1) + (2.0 / 3.0) * std::pow(l, -2.0) - 1.0; }, 0.5,
      4.0);
  CHECK(luxemburg_norm(dp, one) == doctest::Approx(expected).epsilon(1e-6));
}

TEST_CASE("luxemburg equals lebesgue for pure powers") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> amp(0.2, 3.0);
  for (int k = 0; k < 100; ++k) {
    const double a = amp(rng), b = amp(rng), w = amp(rng);
    const GridFunction u = GridFunction::sample(
        0.0, 2.0, 129, [&](double x) { return a + b * std::sin(w * 3.0 * x); });
    const double p = 1.0 + amp(rng);
    const double lux = luxemburg_norm(PhiFunction::power(p), u);
    const double leb = lebesgue_norm(u, p);
    CHECK(lux == doctest::Approx(leb).epsilon(1e-8));
  }
}

TEST_CASE("lebesgue norms") {
  CHECK(lebesgue_norm(constant(3.0), ExtReal::inf(), true) == 3.0);
  CHECK(lebesgue_norm(constant(3.0), 2.0, true) == doctest::Approx(3.0).epsilon(1e-12));
  const GridFunction id = GridFunction::sample(0.0, 1.0, 201, [](double x) { return x; });
  CHECK(lebesgue_norm(id, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(lebesgue_norm(id, -1.0), DomainError);
}

TEST_CASE("integral mean power") {
  const Ball ball = Ball::interval(1.0, 2.0);
  const GridFunction c = constant(4.0, 0.5, 2.5, 801);
  for (double ell : {-2.0, -0.5, 0.5, 1.0, 3.0}) {
    CHECK(integral_mean_power(c, ell, ball).value == doctest::Approx(4.0).epsilon(1e-12));
  }
  // harmonic mean of x on (1,2) is 1/ln 2
  const GridFunction id = GridFunction::sample(0.5, 2.5, 2001, [](double x) { return x; });
  CHECK(integral_mean_power(id, -1.0, ball).value ==
        doctest::Approx(1.0 / std::log(2.0)).epsilon(1e-7));
  CHECK_THROWS_AS(integral_mean_power(id, 0.0, ball), DomainError);
  const GridFunction with_zero =
      GridFunction::sample(0.5, 2.5, 101, [](double x) { return x - 1.2; });
  CHECK_THROWS_AS(integral_mean_power(with_zero, -1.0, ball), DomainError);
  // clip flag on denormal-range values
  const GridFunction tiny = constant(1e-305, 0.5, 2.5, 101);
  const auto pm = integral_mean_power(tiny, -1.0, ball);
  CHECK(pm.clipped);

  // monotone in ell (power mean inequality)
  const GridFunction v =
      GridFunction::sample(0.5, 2.5, 513, [](double x) { return 1.0 + 0.5 * std::sin(x); });
  double prev = 0.0;
  for (double ell : {-3.0, -1.0, -0.25, 0.5, 1.0, 2.0, 4.0}) {
    const double m = integral_mean_power(v, ell, ball).value;
    if (prev != 0.0) CHECK(prev <= m * (1.0 + 1e-9));
    prev = m;
  }
}

TEST_CASE("ess bounds") {
  const Ball ball = Ball::interval(0.25, 0.75);
  const GridFunction c = constant(2.5);
  const auto cb = ess_bounds(c, ball);
  CHECK(cb.inf == 2.5);
  CHECK(cb.sup == 2.5);
  const GridFunction inc = GridFunction::sample(0.0, 1.0, 401, [](double x) { return x; });
  const auto ib = ess_bounds(inc, ball);
  CHECK(ib.inf == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(ib.sup == doctest::Approx(0.75).epsilon(1e-10));
  CHECK_THROWS_AS(ess_bounds(inc, Ball::interval(2.0, 3.0)), DomainError);
}

TEST_CASE("holder ratio") {
  const PhiFunction square = PhiFunction::power(2.0);
  const GridFunction one = constant(1.0, 0.0, 1.0, 257);
  // ||1||_{t^2} = 1 and ||1||_{t^2/4} = 1/2, so the ratio is exactly 2
  const double r = holder_check(square, one, one);
  CHECK(r == doctest::Approx(2.0).epsilon(1e-5));
  CHECK(r <= 2.0 * (1.0 + 1e-6));
  CHECK(holder_check(square, constant(0.0, 0.0, 1.0, 257), one) == 0.0);

  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  const PhiFunction dp = dp_family();
  for (int k = 0; k < 40; ++k) {
    const double a = coef(rng), b = coef(rng), c = coef(rng), d = coef(rng);
    const GridFunction u = GridFunction::sample(
        -1.0, 1.0, 65, [&](double x) { return a + b * x + c * x * x + 0.1; });
    const GridFunction v = GridFunction::sample(
        -1.0, 1.0, 65, [&](double x) { return d + c * x - a * x * x + 0.1; });
    CHECK(holder_check(dp, u, v) <= 2.0 * (1.0 + 1e-6));
  }
  CHECK_THROWS_AS(holder_check(square, one, constant(1.0, 0.0, 2.0, 257)),
                  PreconditionError);
}

TEST_CASE("modular cross-checks the closed-form double-phase energy") {
  // The telescoped energy c * u(-x0+2r) equals the modular of the
  // flux-gradient pairing c * u' over the ball; the phi-modular itself sits
  // inside the [energy/q, energy/p] band fixed by p <= t phi'/phi <= q.
  orlicz::dp::DPParams d{1.1, 2.0, 0.5, 1.3, 0.0, 1.0};
  const double x0 = std::pow(1.3, -18.0);
  const double r = 0.08;
  d.x_left = -x0 - 2.0 * r;
  d.x_right = -x0 + 2.0 * r;
  const orlicz::dp::ExactDPSolution sol(d);
  const double en = orlicz::dp::energy(sol, r);

  const GridFunction du =
      GridFunction::sample(d.x_left, d.x_right, 16385, [&](double x) { return sol.derivative(x); });
  const PhiFunction pairing = PhiFunction::custom(
      "flux-pairing", [](double, double t) { return 1.3 * t; });
  CHECK(modular(pairing, du) == doctest::Approx(en).epsilon(1e-6));

  const PhiFunction phi = sol.phi();
  const double phi_modular = modular(phi, du);
  CHECK(phi_modular >= en / 2.0 * (1.0 - 1e-9));
  CHECK(phi_modular <= en / 1.1 * (1.0 + 1e-9));
}

TEST_CASE("sobolev norm") {
  const PhiFunction square = PhiFunction::power(2.0);
  const GridFunction lin =
      GridFunction::sample(0.0, 1.0, 129, [](double x) { return 2.0 * x; });
  // ||2x||_2 + ||2||_2 = 2/sqrt(3) + 2
  CHECK(sobolev_norm(square, lin) ==
        doctest::Approx(2.0 / std::sqrt(3.0) + 2.0).epsilon(1e-6));
}
