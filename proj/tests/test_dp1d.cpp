#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "orlicz/dp1d.hpp"

using namespace orlicz;
using namespace orlicz::dp;

namespace {

DPParams fig_params(double c) { return DPParams{1.1, 2.0, 0.5, c, -1.0, 1.0}; }

}  // namespace

TEST_CASE("closed-form solution, figure parameters") {
  const ExactDPSolution sol(fig_params(1.4));
  CHECK(sol.x0() == doctest::Approx(std::pow(1.4, -18.0)).epsilon(1e-14));
  CHECK(sol.alpha2() == doctest::Approx(0.5));
  // u(-x0) = 2c - 2c^{-8}
  CHECK(sol(-sol.x0()) ==
        doctest::Approx(2.0 * 1.4 - 2.0 * std::pow(1.4, -8.0)).epsilon(1e-13));
  CHECK(sol(-1.0) == 0.0);
  // right boundary values of the caption family stay in [2, 32]
  for (double c : {1.01, 1.1, 1.2, 1.3, 1.4}) {
    const ExactDPSolution s(fig_params(c));
    const double u1 = s(1.0);
    CHECK(u1 >= 2.0);
    CHECK(u1 <= 32.0);
  }
}

TEST_CASE("flux identity phi'(x, u'(x)) = c") {
  for (double c : {1.05, 1.2, 1.4}) {
    const ExactDPSolution sol(fig_params(c));
    const PhiFunction phi = sol.phi();
    for (double x : stratified_samples(-1.0, 1.0, 1000)) {
      CHECK(phi.derivative(x, sol.derivative(x)) == doctest::Approx(c).epsilon(1e-12));
    }
  }
}

TEST_CASE("quadrature fallback agrees with the closed form") {
  const ExactDPSolution sol(fig_params(1.3));
  for (double x : stratified_samples(-1.0, 1.0, 37)) {
    const double closed = sol(x);
    const double quad = sol.quadrature_value(x);
    if (closed > 0.0) {
      CHECK(quad == doctest::Approx(closed).epsilon(1e-9));
    } else {
      CHECK(std::abs(quad) < 1e-12);
    }
  }
}

TEST_CASE("affine branch when the degenerate region is absent") {
  // x_left right of -x0: constant slope c^{1/(p-1)}
  DPParams p{1.1, 2.0, 0.5, 1.4, -0.001, 1.0};
  const ExactDPSolution sol(p);
  REQUIRE_FALSE(sol.degenerate_region_present());
  const double slope = std::pow(1.4, 10.0);
  for (double x : {-0.001, 0.3, 1.0}) {
    CHECK(sol(x) == doctest::Approx((x + 0.001) * slope).epsilon(1e-13));
    CHECK(sol.derivative(x) == doctest::Approx(slope));
  }
}

TEST_CASE("logarithmic branch at alpha = q - 1") {
  DPParams p{1.5, 2.0, 1.0, 1.2, -1.0, 1.0};
  const ExactDPSolution sol(p);
  CHECK(sol.alpha2() == 0.0);
  for (double x : {-0.9, -0.5, -2.0 * sol.x0()}) {
    if (x > -sol.x0()) continue;
    CHECK(sol(x) == doctest::Approx(sol.quadrature_value(x)).epsilon(1e-9));
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(ExactDPSolution(DPParams{1.0, 2.0, 0.5, 1.0, -1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(ExactDPSolution(DPParams{1.1, 2.0, 0.5, -1.0, -1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(ExactDPSolution(DPParams{1.1, 2.0, -0.5, 1.0, -1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(harnack_quotient(0.5, -1.0), DomainError);
  CHECK_THROWS_AS(energy(ExactDPSolution(fig_params(1.2)), 0.0), DomainError);
}

TEST_CASE("harnack quotient closed form") {
  // rho = 4, alpha2 = 1/2: 1 + 0.5*4/(sqrt(9)-1) = 2 exactly
  CHECK(harnack_quotient(0.5, 4.0) == 2.0);
  // Taylor limit 3/2 as rho -> 0, for several alpha2
  for (double a2 : {-0.5, 0.2, 0.5, 0.9}) {
    CHECK(harnack_quotient(a2, 1e-8) == doctest::Approx(1.5).epsilon(1e-7));
  }
  CHECK(harnack_quotient(0.0, 1e-8) == doctest::Approx(1.5).epsilon(1e-7));
  // asymptotic alpha2 2^{-alpha2} rho^{1-alpha2}
  const double asym = 0.5 * std::pow(2.0, -0.5) * std::pow(1e6, 0.5);
  CHECK(harnack_quotient(0.5, 1e6) == doctest::Approx(asym).epsilon(0.05));
  // strictly increasing on a long log grid
  double prev = 0.0;
  for (double rho : log_grid_n(1e-6, 1e8, 100)) {
    const double v = harnack_quotient(0.5, rho);
    CHECK(v > prev);
    prev = v;
  }
  // member overload agrees
  const ExactDPSolution sol(fig_params(1.4));
  CHECK(harnack_quotient(sol, 4.0 * sol.x0()) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("energy telescopes and matches the modular band") {
  const ExactDPSolution sol(fig_params(1.3));
  const double r = 0.1;
  const double en = energy(sol, r);
  // closed form c * u(-x0+2r) under the u(-x0-2r) = 0 normalization
  DPParams shifted = sol.params();
  shifted.x_left = -sol.x0() - 2.0 * r;
  const ExactDPSolution norm_sol(shifted);
  CHECK(en == doctest::Approx(1.3 * norm_sol(-sol.x0() + 2.0 * r)).epsilon(1e-13));
  // telescoping against direct quadrature of c u'
  const double quad = 1.3 * norm_sol.quadrature_value(-sol.x0() + 2.0 * r);
  CHECK(en == doctest::Approx(quad).epsilon(1e-9));
  // modular of phi(x, u') sits inside [energy/q, energy/p]
  const PhiFunction phi = sol.phi();
  const double modular_quad = oracles::integrate_reference(
      [&](double x) { return phi(x, norm_sol.derivative(x)); }, shifted.x_left,
      -sol.x0() + 2.0 * r, 18, 1e-9);
  CHECK(modular_quad >= en / 2.0 * (1.0 - 1e-6));
  CHECK(modular_quad <= en / 1.1 * (1.0 + 1e-6));

  // near-affine regime r << x0: the slope is constant across B(-x0, 2r) up
  // to O(r/x0) and the energy collapses to 4 r c^{p/(p-1)}
  DPParams aff{1.1, 2.0, 0.5, 1.4, -1.0, 1.0};
  const ExactDPSolution asol(aff);
  const double r2 = 1e-5 * asol.x0();
  CHECK(energy(asol, r2) ==
        doctest::Approx(4.0 * r2 * std::pow(1.4, 11.0)).epsilon(5e-5));
}

TEST_CASE("sharpness sweep classifications") {
  SharpnessSweepConfig cfg;
  cfg.x0_sequence = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8};
  cfg.grid_nodes = 2049;

  // alpha = 0.5, s = 2: 1 + 1/2 - 5/9 > 0, bounded
  cfg.alpha = 0.5;
  cfg.s = 2.0;
  const ExperimentTable bounded = sharpness_sweep(cfg);
  CHECK(bounded.metadata().at("norm_bounded") == "bounded");
  CHECK(bounded.at(0, "norm_bounded") == 1.0);

  // hypothetical alpha = 1.8: 1.5 - 2 < 0, diverging
  cfg.alpha = 1.8;
  const ExperimentTable diverging = sharpness_sweep(cfg);
  CHECK(diverging.metadata().at("norm_bounded") == "diverging");

  // s = inf: criterion 1 - alpha/(q-p); alpha = 0.5 bounded
  cfg.alpha = 0.5;
  cfg.s = ExtReal::inf();
  const ExperimentTable sup_sweep = sharpness_sweep(cfg);
  CHECK(sup_sweep.metadata().at("norm_bounded") == "bounded");

  // the log-ball quotient increases along every sweep
  double prev = 1.0;
  for (std::size_t r = 0; r < sup_sweep.rows().size(); ++r) {
    const double qv = sup_sweep.at(r, "harnack_quotient");
    CHECK(qv > prev);
    prev = qv;
  }
  CHECK_THROWS_AS(
      sharpness_sweep([] {
        SharpnessSweepConfig c;
        c.x0_sequence = {2.0};
        return c;
      }()),
      DomainError);
}

TEST_CASE("sup/inf against integral means along a sweep") {
  // ess sup ~ (mean of u^s)^{1/s} and ess inf ~ (mean of u^{-s})^{-1/s} on
  // B(-x0, r), with constants independent of c and r; likewise the closed
  // norm and mean-power scalings c^{1/(p-1)} r^{1+1/s} and c^{1/(q-1)} r^{a2}.
  const double s = 2.0;
  double sup_lo = 1e300, sup_hi = 0.0;
  double inf_lo = 1e300, inf_hi = 0.0;
  double nrm_lo = 1e300, nrm_hi = 0.0;
  double neg_lo = 1e300, neg_hi = 0.0;
  for (int m = 2; m <= 8; m += 2) {
    const double x0 = std::pow(10.0, -m);
    const double r = x0 * std::log(1.0 / x0);
    DPParams d{1.1, 2.0, 0.5, c_for_x0(1.1, 2.0, 0.5, x0), -x0 - 2.0 * r, -x0 + 2.0 * r};
    const ExactDPSolution sol(d);
    const GridFunction u = sol.sample(8193);
    const Ball inner({-x0}, r);

    const auto eb = ess_bounds(u, inner);
    // the solution is increasing: node extrema sit at the ball ends
    CHECK(eb.inf == doctest::Approx(sol(-x0 - r)).epsilon(1e-3));
    CHECK(eb.sup == doctest::Approx(sol(-x0 + r)).epsilon(1e-3));

    const double mean_s = integral_mean_power(u, s, inner).value;
    const double mean_neg = integral_mean_power(u, -s, inner).value;
    sup_lo = std::min(sup_lo, eb.sup / mean_s);
    sup_hi = std::max(sup_hi, eb.sup / mean_s);
    inf_lo = std::min(inf_lo, eb.inf / mean_neg);
    inf_hi = std::max(inf_hi, eb.inf / mean_neg);

    const double slope = std::pow(d.c, 1.0 / 0.1);
    const GridFunction u2 = sol.sample(-x0 - 2.0 * r, -x0 + 2.0 * r, 8193);
    const double nrm = lebesgue_norm(u2, s) / (slope * std::pow(r, 1.0 + 1.0 / s));
    nrm_lo = std::min(nrm_lo, nrm);
    nrm_hi = std::max(nrm_hi, nrm);
    const double neg = mean_neg / (std::pow(d.c, 1.0 / 1.0) * std::pow(r, sol.alpha2()));
    neg_lo = std::min(neg_lo, neg);
    neg_hi = std::max(neg_hi, neg);
  }
  CHECK(sup_hi / sup_lo < 3.0);
  CHECK(inf_hi / inf_lo < 3.0);
  CHECK(nrm_hi / nrm_lo < 3.0);
  CHECK(neg_hi / neg_lo < 3.0);
  CHECK(sup_hi < 10.0);
  CHECK(inf_lo > 0.1);
}

TEST_CASE("norm classification flips at the threshold exponent") {
  // s = 2 threshold (1 + 1/2)(q - p) = 1.35; at the threshold the norms
  // still diverge through the polylog factor
  HarnackSweepConfig cfg;
  cfg.alpha_list = {1.2, 1.35};
  cfg.x0_sequence = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  cfg.grid_nodes = 2049;
  const ExperimentTable t = harnack_sweep(cfg);
  CHECK(t.at(0, "norm_bounded") == 1.0);
  CHECK(t.at(t.rows().size() - 1, "norm_bounded") == 0.0);
}

TEST_CASE("norm boundedness rule") {
  CHECK(norm_sequence_bounded(1.1, 2.0, 0.5, 2.0));
  CHECK_FALSE(norm_sequence_bounded(1.1, 2.0, 1.8, 2.0));
  CHECK(norm_sequence_bounded(1.1, 2.0, 0.5, ExtReal::inf()));
  CHECK_FALSE(norm_sequence_bounded(1.1, 2.0, 0.95, ExtReal::inf()));
}

TEST_CASE("supersolution residuals") {
  const ExactDPSolution fast(fig_params(1.3));
  const ExactDPSolution slow(fig_params(1.1));
  const GrowthField field = fast.field();

  // exact solution: equality up to quadrature error
  const Profile exact = profile_of(fast);
  const Profile hat = hat_profile(-0.8, -0.1, 0.7);
  const double res_exact = verify_supersolution(field, exact, hat);
  CHECK(std::abs(res_exact) <= 1e-6 * 2.0 * 1.3);

  // pointwise minimum with the flux dropping across the crossing:
  // residual = (c_fast - c_slow) h(x*) > 0
  const Profile mn = min_supersolution(fast, slow, 0.1);
  const Profile hat2 = hat_profile(-0.6, 0.1, 0.8);
  const double res_min = verify_supersolution(field, mn, hat2);
  CHECK(res_min >= -1e-8);
  CHECK(res_min == doctest::Approx((1.3 - 1.1) * hat2.value(0.1)).epsilon(1e-6));

  // pointwise maximum: subsolution witness, residual < 0
  const Profile mx = max_subsolution(fast, slow, 0.1);
  CHECK(verify_supersolution(field, mx, hat2) < -1e-6);

  // grid-based route agrees in sign for the minimum
  const GridFunction ug = GridFunction::sample(-1.0, 1.0, 8193, mn.value);
  const GridFunction hg = GridFunction::sample(-1.0, 1.0, 8193, hat2.value);
  CHECK(verify_supersolution(field, ug, hg) > 0.0);

  // boundary precondition
  CHECK_THROWS_AS(verify_supersolution(field, exact, profile_of(slow)), PreconditionError);
}

TEST_CASE("caccioppoli two-sided check") {
  const ExactDPSolution fast(fig_params(1.3));
  const ExactDPSolution slow(fig_params(1.1));
  const Profile w = min_supersolution(fast, slow, 0.0);
  const PhiFunction phi = fast.phi();
  const Ball ball({0.0}, 0.6);
  const PsiR psi(phi, ball);
  CaccioppoliConfig cfg{1.0, 2.0, 0.5, ball, 1.1, std::nullopt};

  const GridFunction u1 = GridFunction::sample(-1.0, 1.0, 4097, w.value);
  const auto res1 =
      verify_caccioppoli(phi, [&psi](double t) { return psi(t); }, u1, cfg, fast.field());
  CHECK(std::isfinite(res1.ratio));
  CHECK(res1.ratio > 0.0);

  const GridFunction u2 = GridFunction::sample(-1.0, 1.0, 8193, w.value);
  const auto res2 =
      verify_caccioppoli(phi, [&psi](double t) { return psi(t); }, u2, cfg, fast.field());
  CHECK(res2.ratio == doctest::Approx(res1.ratio).epsilon(0.02));

  // exact solution: also finite and refinement-stable
  const GridFunction ue1 = GridFunction::sample(-1.0, 1.0, 4097, [&](double x) { return fast(x); });
  const GridFunction ue2 = GridFunction::sample(-1.0, 1.0, 8193, [&](double x) { return fast(x); });
  const auto re1 =
      verify_caccioppoli(phi, [&psi](double t) { return psi(t); }, ue1, cfg, fast.field());
  const auto re2 =
      verify_caccioppoli(phi, [&psi](double t) { return psi(t); }, ue2, cfg, fast.field());
  CHECK(std::isfinite(re1.ratio));
  CHECK(re1.ratio > 0.0);
  CHECK(re2.ratio == doctest::Approx(re1.ratio).epsilon(0.02));

  // constant u: the left side vanishes with the gradient
  const GridFunction flat = GridFunction::sample(-1.0, 1.0, 1025, [](double) { return 3.0; });
  const auto res_flat =
      verify_caccioppoli(phi, [&psi](double t) { return psi(t); }, flat, cfg, fast.field());
  CHECK(res_flat.lhs == 0.0);
  CHECK(res_flat.ratio == 0.0);

  CaccioppoliConfig bad = cfg;
  bad.ell = 0.5;  // <= 1/p1 = 1/1.1
  CHECK_THROWS_AS(
      verify_caccioppoli(phi, [&psi](double t) { return psi(t); }, u1, bad, fast.field()),
      PreconditionError);
}

TEST_CASE("weak harnack ratio") {
  const GridFunction flat = GridFunction::sample(-1.0, 1.0, 1024, [](double) { return 2.0; });
  for (double ell0 : {0.5, 1.0, 2.0}) {
    CHECK(std::abs(weak_harnack_ratio(flat, 0.25, 0.0, ell0) - 1.0) <= 1e-13);
  }
  // diagnostic variant without +R
  CHECK(std::abs(weak_harnack_ratio(flat, 0.25, 0.0, 1.0, false) - 1.0) <= 1e-13);
  CHECK_THROWS_AS(weak_harnack_ratio(flat, 2.0, 0.0, 1.0), DomainError);
}

TEST_CASE("weak harnack dichotomy on norm-budget balls") {
  HarnackSweepConfig cfg;
  cfg.alpha_list = {0.5, 1.5};
  cfg.x0_sequence = {1e-2, 1e-4, 1e-6, 1e-8};
  cfg.grid_nodes = 2049;
  const ExperimentTable t = harnack_sweep(cfg);
  REQUIRE(t.rows().size() == 8);
  // below threshold (0.5 < 1.35): budget-ball ratio grows monotonically
  double prev = 0.0;
  for (std::size_t r = 0; r < 4; ++r) {
    const double v = t.at(r, "whr_budget");
    CHECK(v > prev);
    prev = v;
  }
  CHECK(prev > 100.0);
  CHECK(t.at(0, "norm_bounded") == 1.0);
  // admissible (1.5 >= 1.35): ratio stays in a narrow band
  double lo = 1e300, hi = 0.0;
  for (std::size_t r = 4; r < 8; ++r) {
    const double v = t.at(r, "whr_budget");
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(hi / lo <= 10.0);
}

TEST_CASE("limiting exponent") {
  CHECK(limiting_exponent(2.0, 3).value() == doctest::Approx(3.0));
  CHECK(limiting_exponent(1.5, 2).value() == doctest::Approx(2.0));
  CHECK_FALSE(limiting_exponent(2.0, 2).is_finite());
  CHECK_FALSE(limiting_exponent(5.0, 3).is_finite());
  CHECK_THROWS_AS(limiting_exponent(1.0, 3), DomainError);
}

TEST_CASE("p-laplace nonintegrability") {
  std::vector<double> eps;
  for (int m = 1; m <= 8; ++m) eps.push_back(std::pow(10.0, -m));
  const auto rep = p_laplace_nonintegrability(2.0, 3, eps);
  const double four_pi = 4.0 * std::numbers::pi_v<double>;
  CHECK(rep.expected_slope == doctest::Approx(four_pi).epsilon(1e-12));
  CHECK(rep.slope == doctest::Approx(four_pi).epsilon(0.01));
  for (std::size_t i = 0; i < eps.size(); ++i) {
    CHECK(rep.partial[i] == doctest::Approx(four_pi * std::log(1.0 / eps[i])).epsilon(1e-9));
    CHECK(rep.partial[i] == doctest::Approx(rep.closed_form[i]).epsilon(1e-9));
  }
  // convergent regime: increments decrease geometrically
  const auto conv = p_laplace_nonintegrability(2.0, 3, eps, 0.9);
  for (std::size_t i = 2; i < conv.partial.size(); ++i) {
    const double inc_prev = conv.partial[i - 1] - conv.partial[i - 2];
    const double inc = conv.partial[i] - conv.partial[i - 1];
    CHECK(inc < inc_prev);
    CHECK(inc > 0.0);
  }
  // p >= n: the infinite-exponent branch reports sup growth
  const auto infb = p_laplace_nonintegrability(2.0, 2, eps);
  CHECK(infb.infinite_exponent);
  CHECK(infb.slope == 1.0);
  CHECK_THROWS_AS(p_laplace_nonintegrability(2.0, 3, {2.0}), DomainError);
}

TEST_CASE("hypothesis quantities") {
  // x-independent phi = omega: the beta integrand is identically 1
  const PhiFunction pw = PhiFunction::power(2.0);
  const GridFunction u =
      GridFunction::sample(-1.0, 1.0, 513, [](double x) { return 1.0 + x * x; });
  const Ball ball({0.0}, 0.5);
  for (double beta : {1.0, 2.0, 5.0}) {
    const auto hq = hypothesis_quantities(pw, pw, u, ball, beta);
    CHECK(hq.beta_mean == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(hq.degenerate);
  }
  CHECK_THROWS_AS(hypothesis_quantities(pw, pw, u, ball, 0.5), DomainError);

  // along the sweep both diagnostics stay finite; the beta mean is a mean of
  // ratios >= 1 by construction
  SharpnessSweepConfig cfg;
  cfg.alpha = 0.5;
  cfg.s = 2.0;
  cfg.x0_sequence = {1e-2, 1e-4, 1e-6, 1e-8};
  cfg.grid_nodes = 2049;
  const ExperimentTable t = sharpness_sweep(cfg);
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    CHECK(t.at(r, "betabound_mean") >= 1.0 - 1e-9);
    CHECK(std::isfinite(t.at(r, "betabound_mean")));
    CHECK(std::isfinite(t.at(r, "vbound_scaled")));
    CHECK(t.at(r, "vbound_scaled") > 0.0);
  }
}
