#ifndef ORLICZ_DP1D_HPP
#define ORLICZ_DP1D_HPP

#include <functional>
#include <optional>
#include <vector>

#include "orlicz/analysis.hpp"
#include "orlicz/phi.hpp"
#include "orlicz/psi.hpp"
#include "orlicz/table.hpp"

namespace orlicz::dp {

// Parameters of the one-dimensional double-phase equation with coefficient
// a(x) = max{-x, 0}^alpha. The Hölder reading of alpha needs alpha <= 1;
// larger values are admitted as hypothetical growth exponents for sweeps.
struct DPParams {
  double p;
  double q;
  double alpha;
  double c;
  double x_left;
  double x_right;

  void validate() const;
};

// Closed-form increasing solution of phi'(x, u') = c with u(x_left) = 0.
// The flux transition sits at -x0; alpha2 = 1 - alpha/(q-1) is the growth
// exponent of the degenerate branch.
class ExactDPSolution {
 public:
  explicit ExactDPSolution(DPParams params);

  const DPParams& params() const { return params_; }
  double x0() const { return x0_; }
  double alpha2() const { return alpha2_; }
  bool degenerate_region_present() const { return params_.x_left < -x0_; }

  double operator()(double x) const;       // u(x)
  double derivative(double x) const;       // u'(x)
  // Antiderivative of u' by adaptive quadrature; the solver's independent
  // fallback route, split at the flux transition.
  double quadrature_value(double x, double rel_tol = 1e-10) const;

  PhiFunction phi() const;                 // the max-form double phase integrand
  GrowthField field() const;               // canonical flux, nu = p, lambda = q
  GridFunction sample(int node_count) const;
  GridFunction sample(double lo, double hi, int node_count) const;

 private:
  double primitive(double x) const;  // int_{x_left}^{x} of the degenerate branch
  double p() const;
  double q() const;
  DPParams params_;
  double x0_;
  double alpha2_;
  double slope_;  // c^{1/(p-1)}
};

ExactDPSolution solve_double_phase_1d(const DPParams& params);

// c such that the flux transition lands at the requested x0.
double c_for_x0(double p, double q, double alpha, double x0);

// u(-x0+r)/u(-x0) for the solution normalized by u(-x0-2r) = 0:
//   1 + alpha2 * rho / ((1+2 rho)^{alpha2} - 1),  rho = r / x0,
// with the log limit at alpha2 = 0. Strictly increasing in rho.
double harnack_quotient(double alpha2, double rho);
double harnack_quotient(const ExactDPSolution& sol, double r);

// Flux-times-increment energy int phi(x, u') over B(-x0, 2r) in the
// telescoped closed form c * u(-x0 + 2r), again normalized by u(-x0-2r) = 0.
double energy(const ExactDPSolution& sol, double r);

// Sweep of the counterexample family along a shrinking x0 sequence with
// r = x0 log(1/x0). Records the Harnack quotient (log ball and a fixed
// domain-scale ball), the L^s norm over B(-x0, 2r) against its predicted
// scaling, the energy against its predicted scaling and the hypothesis
// diagnostics; classifies the norm sequence bounded/diverging.
struct SharpnessSweepConfig {
  double p = 1.1;
  double q = 2.0;
  double alpha = 0.5;
  ExtReal s = 2.0;
  std::vector<double> x0_sequence;
  double domain_radius = 0.5;  // fixed-scale ball for the blow-up column
  int grid_nodes = 4097;
};
ExperimentTable sharpness_sweep(const SharpnessSweepConfig& cfg);

// True when the predicted L^s scaling exponent 1 + 1/s - alpha/(q-p) is
// positive, i.e. the norms stay bounded along the sweep.
bool norm_sequence_bounded(double p, double q, double alpha, ExtReal s);

// Weak-Harnack ratio sweep over (alpha, x0) rows. Besides the log-radius
// quantities of sharpness_sweep it evaluates the ratio on the norm-budget
// ball: the largest radius keeping ||u||_{L^s(B(-x0,2r))} at the budget d0.
// On those balls the ratio stays in a band when alpha >= (1+1/s)(q-p) and
// blows up polynomially below the threshold.
struct HarnackSweepConfig {
  double p = 1.1;
  double q = 2.0;
  std::vector<double> alpha_list;
  ExtReal s = 2.0;
  std::vector<double> x0_sequence;
  double ell0 = 1.0;
  double norm_budget = 1.0;
  double radius_cap = 0.5;
  int grid_nodes = 4097;
};
ExperimentTable harnack_sweep(const HarnackSweepConfig& cfg);

// Largest radius with c^{1/(p-1)} r^{1+1/s} = d0 (capped), the norm-budget
// ball of the sweep above.
double norm_budget_radius(double p, double q, double alpha, ExtReal s, double x0,
                          double d0, double cap);

// Piecewise-C1 profile with explicit breakpoints; the supersolution test
// fixtures (exact solutions, their shifted minima) live here.
struct Profile {
  std::function<double(double)> value;
  std::function<double(double)> deriv;
  std::vector<double> breakpoints;
  double lo;
  double hi;
};

Profile profile_of(const ExactDPSolution& sol);
Profile shifted_profile(Profile f, double offset);
// Pointwise min/max; crossings are located by scan + bisection and recorded
// as breakpoints.
Profile min_profile(const Profile& f, const Profile& g);
Profile max_profile(const Profile& f, const Profile& g);

// min(u_fast, u_slow + shift) with the shift placing the crossing at x_c.
// The flux drops c_fast -> c_slow across the crossing, so the minimum is a
// genuine non-solution supersolution (1-D lattice property); the max is the
// matching subsolution witness.
Profile min_supersolution(const ExactDPSolution& fast, const ExactDPSolution& slow,
                          double crossing_x);
Profile max_subsolution(const ExactDPSolution& fast, const ExactDPSolution& slow,
                        double crossing_x);

// Hat test function: 0 at lo/hi, peak at apex.
Profile hat_profile(double lo, double apex, double hi, double height = 1.0);

// int f(x, u') h' dx for the growth field; >= 0 up to quadrature error for
// supersolutions, = 0 for exact solutions. h must vanish at the ends.
double verify_supersolution(const GrowthField& field, const Profile& u, const Profile& h);
double verify_supersolution(const GrowthField& field, const GridFunction& u,
                            const GridFunction& h);

// Trapezoid cutoff: 1 on B_{sigma R}, linear ramp to 0 on the shell.
struct CutoffFunction {
  double center;
  double inner;  // sigma R
  double outer;  // R
  double operator()(double x) const;
  double slope_bound() const { return 1.0 / (outer - inner); }
};

struct CaccioppoliConfig {
  double ell;         // > 1/p1
  double s_exponent;  // >= q
  double sigma;       // in (0,1)
  Ball ball;
  double p1;          // lower growth exponent of psi
  std::optional<CutoffFunction> cutoff;  // default: trapezoid on (sigma, 1) R

  CutoffFunction effective_cutoff() const;
};

struct CaccioppoliResult {
  double lhs;            // int phi(x,|u'|) psi(v)^{-ell} eta^s
  double rhs_integral;   // int psi(v)^{-ell} phi(x,v) eta^{s-q}
  double ratio;          // lhs / rhs_integral
  // (s Lambda / ((1-sigma)(p1 ell - 1) nu))^q; reference scale only, the
  // true bound carries an extra factor depending on L_q.
  double reference_constant;
};

// Both sides of the Caccioppoli bound with v = (u+R)/R on the given grid.
// The bound's constant is only known up to an L_q-dependent factor, so the
// verification notion is ratio finiteness plus grid-refinement stability.
CaccioppoliResult verify_caccioppoli(const PhiFunction& phi,
                                     const std::function<double(double)>& psi,
                                     const GridFunction& u, const CaccioppoliConfig& cfg,
                                     const GrowthField& growth);

// (integral mean of (u+R)^{ell0} over B_{2R})^{1/ell0} / (ess inf_{B_R} u + R).
// `include_radius_shift = false` drops both +R terms (diagnostic only).
double weak_harnack_ratio(const GridFunction& u, double R, double center, double ell0,
                          bool include_radius_shift = true);

// l(p) = n(p-1)/(n-p) for p < n, infinity otherwise.
ExtReal limiting_exponent(double p, int dim);

struct NonintegrabilityReport {
  bool infinite_exponent = false;      // p >= n branch
  double exponent_used = 0.0;          // ell actually integrated
  std::vector<double> eps;             // shrinking inner radii
  std::vector<double> partial;         // int_{eps<|x|<1} u_p^ell dx (quadrature)
  std::vector<double> closed_form;     // exact antiderivative values
  double slope = 0.0;                  // fitted d(partial)/d ln(1/eps)
  double expected_slope = 0.0;         // omega_{n-1} when ell = l(p)
};

// Radial integrals of u_p(x) = |x|^{-(n-p)/(p-1)} between eps and 1. With
// ell = l(p) the integrand collapses to |x|^{-n} and the partials grow like
// omega_{n-1} ln(1/eps); exponent_factor rescales ell to probe convergence.
// For p >= n the report switches to the sup growth of log(1/|x|).
NonintegrabilityReport p_laplace_nonintegrability(double p, int dim,
                                                  const std::vector<double>& eps_sequence,
                                                  double exponent_factor = 1.0);

struct HypothesisQuantities {
  double lhs_vbound;     // omega^-_B( mean of (u+R)/R )
  double inv_measure;    // 1/|B|, the reference scale of the bound
  double scaled_vbound;  // |B| * lhs, bounded along sweeps iff the bound holds
  double beta_mean;      // mean of (phi(x,v)/phi^-_B(v))^beta over the ball
  bool degenerate = false;  // phi^-_B hit zero at some sampled v
};

HypothesisQuantities hypothesis_quantities(const PhiFunction& phi, const PhiFunction& omega,
                                           const GridFunction& u, const Ball& ball,
                                           double beta_exp,
                                           const SamplingSpec& spec = {});

}  // namespace orlicz::dp

#endif
