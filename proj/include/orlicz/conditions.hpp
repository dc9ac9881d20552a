#ifndef ORLICZ_CONDITIONS_HPP
#define ORLICZ_CONDITIONS_HPP

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "orlicz/phi.hpp"

namespace orlicz::conditions {

enum class Condition { A0, A1Omega, A1S, A1, AIncP, ADecQ };
enum class Verdict { Holds, Fails, Inconclusive };

std::string to_string(Condition c);
std::string to_string(Verdict v);

struct WorstSample {
  double x = std::numeric_limits<double>::quiet_NaN();
  double y = std::numeric_limits<double>::quiet_NaN();
  double t = std::numeric_limits<double>::quiet_NaN();
  double ball_radius = std::numeric_limits<double>::quiet_NaN();
};

// Verdict plus the witnesses that certify it on the sampled configuration.
// `margin` semantics per condition:
//   A0          : slack min(1 - phi(x, beta), phi(x, 1/beta) - 1) at the witness
//   A1 variants : mean per-octave drift of log2 beta_req over the small-ball
//                 tail (>= -band certifies holds; more negative decay fails)
//   aInc / aDec : L_refined / L_base - 1 (growth under refinement)
struct ConditionReport {
  Condition condition;
  Verdict verdict;
  std::optional<double> witness_beta;
  std::optional<double> witness_L;
  WorstSample worst;
  double margin = std::numeric_limits<double>::quiet_NaN();
  int vacuous_balls = 0;
  std::string detail;
};

// Search space for the (A1) family of checks. Ball measures should cover
// several decades so the window [1, 1/|B|] is actually exercised.
struct A1SearchSpec {
  std::vector<Ball> ball_family;
  SamplingSpec sampling;
  std::optional<double> s_star;  // exponent for (A1-s) when driven externally

  // Dyadic radii 2^-1 .. 2^-depth centered at the coefficient degeneracy.
  static A1SearchSpec dyadic(double center = 0.0, int depth = 12,
                             SamplingSpec sampling = {});
};

// Geometric beta grid {2^{-k/8}, k = 0..528}; the search floor of every
// beta witness.
double snap_to_beta_grid(double beta);
constexpr double beta_grid_floor() { return 1.26e-20; }  // just below 2^{-66}

// (A0): largest grid beta with phi(x, beta) <= 1 <= phi(x, 1/beta) at every
// sample of the interval (endpoints included).
ConditionReport check_a0(const PhiFunction& phi, double x_lo, double x_hi,
                         const SamplingSpec& spec = {});

// (aInc)_p / (aDec)_q: measured almost-monotonicity constant over a log t-grid;
// fails when the constant keeps growing as the grid widens.
struct IncDecSpec {
  double t_min = 1e-6;
  double t_max = 1e6;
  int t_per_decade = 16;
  double x_lo = -1.0;
  double x_hi = 1.0;
  int x_count = 16;
};
ConditionReport check_aInc(const PhiFunction& phi, double p, const IncDecSpec& spec = {});
ConditionReport check_aDec(const PhiFunction& phi, double q, const IncDecSpec& spec = {});

// (A1-omega): for each ball, the largest beta with
// phi^+_B(beta t) <= phi^-_B(t) on the window {t : omega^-_B(t) in [1, 1/|B|]},
// then a verdict from the small-ball trend of those per-ball betas ("a single
// beta works for every ball" extrapolated across radii).
ConditionReport check_a1_omega(const PhiFunction& phi, const PhiFunction& omega,
                               const A1SearchSpec& spec);
// (A1) = (A1-phi), (A1-s) = (A1-omega) with omega(t) = t^s.
ConditionReport check_a1(const PhiFunction& phi, const A1SearchSpec& spec);
ConditionReport check_a1_s(const PhiFunction& phi, double s, A1SearchSpec spec);

// inf / sup over samples of t phi'(x,t) / phi(x,t).
std::pair<double, double> estimate_exponent_range(const PhiFunction& phi,
                                                  const IncDecSpec& spec = {});

// Sampled check of declared Hölder data: max |a(x)-a(y)| / |x-y|^alpha.
double holder_quotient(const CoefficientFunction& a, double x_lo, double x_hi,
                       int samples = 128);

}  // namespace orlicz::conditions

#endif
