#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "orlicz/psi.hpp"

using namespace orlicz;

namespace {

PhiFunction dp_family(double p = 1.1, double q = 2.0, double alpha = 0.5) {
  return PhiFunction::double_phase(p, q, CoefficientFunction::negative_part_power(alpha));
}

}  // namespace

TEST_CASE("constant-coefficient reductions") {
  // ball entirely in {a = 0}: phi^- = t^p and psi_r(t) = t^p / p
  const PsiR psi(dp_family(), Ball::interval(0.1, 0.9));
  CHECK(psi(2.0) == doctest::Approx(std::pow(2.0, 1.1) / 1.1).epsilon(1e-8));
  const PsiR psi_pow(PhiFunction::power(2.0), Ball::interval(-0.3, 0.4));
  CHECK(psi_pow(1.0) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("exact double-phase closed form away from the degeneracy") {
  // on [-0.75,-0.25] the sampled infimum of a(x)=(-x)^{1/2} is 0.5 at the
  // right endpoint, and psi_r(t) = t^p/p + 0.5 t^q/q exactly
  const PsiR psi(dp_family(), Ball::interval(-0.75, -0.25));
  for (double t : {0.2, 1.0, 7.3, 120.0}) {
    const double expect = std::pow(t, 1.1) / 1.1 + 0.5 * std::pow(t, 2.0) / 2.0;
    CHECK(psi(t) == doctest::Approx(expect).epsilon(1e-7));
  }
  CHECK(psi(0.0) == 0.0);
  CHECK_THROWS_AS(psi(-1.0), DomainError);
}

TEST_CASE("direct quadrature oracle at 10x resolution") {
  const PhiFunction phi = dp_family();
  const Ball ball({-0.5}, 0.25);
  const PsiR psi(phi, ball);
  const SamplingSpec spec;
  const auto xs = ball.samples(spec.x_count);
  for (double t : {0.5, 10.0}) {
    const double oracle = oracles::psi_direct_quadrature(phi, xs, 1.1, t);
    CHECK(psi(t) == doctest::Approx(oracle).epsilon(2e-5));
  }
}

TEST_CASE("sandwich with derived constants") {
  const PhiFunction phi = dp_family();
  const Ball ball({-0.5}, 0.25);
  const PsiR psi(phi, ball);
  const auto [c1, c2] = sandwich_constants(1.1, 2.0);
  for (double t : log_grid(1e-3, 1e3, 4)) {
    const double lower = psi.phi_min(t);
    CHECK(psi(t) >= c1 * lower * (1.0 - 1e-9));
    CHECK(psi(t) <= c2 * lower * (1.0 + 1e-9));
  }
}

TEST_CASE("convexity, strict growth, (Inc)_p") {
  const PsiR psi(dp_family(), Ball::interval(-0.4, 0.2));
  const auto ts = log_grid(1e-4, 1e4, 6);
  double prev = 0.0;
  for (double t : ts) {
    const double v = psi(t);
    CHECK(v > prev);
    prev = v;
  }
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    const double mid = 0.5 * (ts[i] + ts[i + 1]);
    CHECK(psi(mid) <= 0.5 * (psi(ts[i]) + psi(ts[i + 1])) * (1.0 + 1e-9));
  }
  double ratio_prev = 0.0;
  for (double t : ts) {
    const double r = psi(t) / std::pow(t, 1.1);
    CHECK(r >= ratio_prev * (1.0 - 1e-9));
    ratio_prev = r;
  }
}

TEST_CASE("preconditions") {
  const PhiFunction undeclared =
      PhiFunction::custom("bare", [](double, double t) { return t * t; });
  CHECK_THROWS_AS(PsiR(undeclared, Ball::interval(0.0, 1.0)), PreconditionError);
  SamplingSpec empty;
  empty.x_count = 0;
  CHECK_THROWS_AS(PsiR(dp_family(), Ball::interval(0.0, 1.0), empty), PreconditionError);
  CHECK_THROWS_AS(sandwich_constants(0.5, 2.0), DomainError);
}

TEST_CASE("one-shot helper matches the cached object") {
  const PhiFunction phi = dp_family();
  const Ball ball = Ball::interval(0.2, 0.6);
  CHECK(psi_r(phi, ball, 3.0) == doctest::Approx(PsiR(phi, ball)(3.0)));
}
