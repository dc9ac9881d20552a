#include "orlicz/psi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace orlicz {

PsiR::PsiR(PhiFunction phi, Ball ball, SamplingSpec spec)
    : phi_(std::move(phi)), ball_(std::move(ball)), spec_(spec) {
  if (!phi_.declared_exponents()) {
    throw PreconditionError("psi_r: phi needs declared exponents (aInc)_p");
  }
  p_ = phi_.declared_exponents()->p;
  if (!(p_ >= 1.0)) throw PreconditionError("psi_r: need p >= 1");
  x_samples_ = ball_.samples(spec_.x_count);
  s_grid_ = log_grid(spec_.s_min, spec_.s_max, spec_.s_points_per_decade);

  sup_prefix_.resize(s_grid_.size());
  double running = 0.0;
  for (std::size_t i = 0; i < s_grid_.size(); ++i) {
    const double s = s_grid_[i];
    running = std::max(running, phi_min(s) / std::pow(s, p_));
    sup_prefix_[i] = running;
  }

  cum_.resize(s_grid_.size());
  // Head piece [0, s_min]: no grid history, the sup is g itself.
  cum_[0] = integrate([this](double tau) { return integrand(tau, 0); }, 0.0, s_grid_[0],
                      QuadratureControl{1e-14, 1e-9, 40});
  for (std::size_t i = 1; i < s_grid_.size(); ++i) {
    const double a = s_grid_[i - 1];
    const double b = s_grid_[i];
    const double m = 0.5 * (a + b);
    const double fa = std::pow(a, p_ - 1.0) * sup_prefix_[i - 1];
    const double fm = integrand(m, i);
    const double fb = std::pow(b, p_ - 1.0) * sup_prefix_[i];
    cum_[i] = cum_[i - 1] + (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  }
}

double PsiR::phi_min(double s) const {
  double m = std::numeric_limits<double>::infinity();
  for (double x : x_samples_) m = std::min(m, phi_(x, s));
  return m;
}

// Running sup over (0, tau]: grid history below tau plus the value at tau.
// `hint` is the cell index whose left neighbours are already folded in.
double PsiR::running_sup(double tau, std::size_t hint) const {
  double hist = hint > 0 ? sup_prefix_[hint - 1] : 0.0;
  return std::max(hist, phi_min(tau) / std::pow(tau, p_));
}

double PsiR::integrand(double tau, std::size_t hint) const {
  if (tau <= 0.0) return 0.0;
  return std::pow(tau, p_ - 1.0) * running_sup(tau, hint);
}

double PsiR::operator()(double t) const {
  if (!(t >= 0.0)) throw DomainError("psi_r: t must be >= 0");
  if (t == 0.0) return 0.0;
  if (t <= s_grid_.front()) {
    return integrate([this](double tau) { return integrand(tau, 0); }, 0.0, t,
                     QuadratureControl{1e-16, 1e-9, 40});
  }
  if (t >= s_grid_.back()) {
    double tail = integrate(
        [this](double tau) { return integrand(tau, s_grid_.size()); }, s_grid_.back(), t,
        QuadratureControl{1e-12, 1e-9, 48});
    return cum_.back() + tail;
  }
  const auto it = std::upper_bound(s_grid_.begin(), s_grid_.end(), t);
  const std::size_t j = static_cast<std::size_t>(it - s_grid_.begin()) - 1;
  const double a = s_grid_[j];
  if (t == a) return cum_[j];
  const double m = 0.5 * (a + t);
  const double fa = std::pow(a, p_ - 1.0) * sup_prefix_[j];
  const double fm = integrand(m, j + 1);
  const double fb = integrand(t, j + 1);
  return cum_[j] + (t - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double psi_r(const PhiFunction& phi, const Ball& ball, double t, const SamplingSpec& spec) {
  return PsiR(phi, ball, spec)(t);
}

SandwichConstants sandwich_constants(double p, double q, double Lp, double Lq) {
  if (!(p >= 1.0) || !(q >= p) || !(Lp >= 1.0) || !(Lq >= 1.0)) {
    throw DomainError("sandwich_constants: need 1 <= p <= q, Lp, Lq >= 1");
  }
  return {(std::pow(2.0, p) - 1.0) / (p * std::pow(2.0, q) * Lq), Lp / p};
}

}  // namespace orlicz
