#ifndef ORLICZ_PSI_HPP
#define ORLICZ_PSI_HPP

#include <vector>

#include "orlicz/phi.hpp"

namespace orlicz {

// The auxiliary x-free function
//
//   psi_r(t) = int_0^t tau^{p-1} sup_{s in (0,tau]} phi^-_B(s) / s^p  dtau,
//
// with phi^-_B the sampled infimum over the ball. The inner sup is a running
// maximum over a log-spaced s-grid, the outer integral composite/adaptive
// Simpson with a cached cumulative prefix so repeated evaluation is cheap.
// Convex, strictly increasing, and equivalent to phi^-_B; see
// sandwich_constants for the explicit equivalence band.
class PsiR {
 public:
  PsiR(PhiFunction phi, Ball ball, SamplingSpec spec = {});

  double operator()(double t) const;
  double growth_exponent() const { return p_; }
  // Sampled infimum of phi(., s) over the ball (the same sample set the
  // construction uses).
  double phi_min(double s) const;
  const Ball& ball() const { return ball_; }

 private:
  double running_sup(double tau, std::size_t hint) const;
  double integrand(double tau, std::size_t hint) const;

  PhiFunction phi_;
  Ball ball_;
  SamplingSpec spec_;
  double p_;
  std::vector<double> x_samples_;
  std::vector<double> s_grid_;
  std::vector<double> sup_prefix_;  // running max of phi_min(s)/s^p on s_grid_
  std::vector<double> cum_;         // integral over [0, s_grid_[i]]
};

// One-shot evaluation (constructs the cache internally).
double psi_r(const PhiFunction& phi, const Ball& ball, double t,
             const SamplingSpec& spec = {});

// Equivalence band c1 * phi^-_B(t) <= psi_r(t) <= c2 * phi^-_B(t) implied by
// (aInc)_p with constant Lp and (aDec)_q with constant Lq:
//   c2 = Lp / p,   c1 = (2^p - 1) / (p 2^q Lq).
struct SandwichConstants {
  double c1;
  double c2;
};
SandwichConstants sandwich_constants(double p, double q, double Lp = 1.0, double Lq = 1.0);

}  // namespace orlicz

#endif
