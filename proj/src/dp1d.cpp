#include "orlicz/dp1d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace orlicz::dp {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

void DPParams::validate() const {
  if (!(p > 1.0)) throw DomainError("dp params: need p > 1");
  if (!(q > p)) throw DomainError("dp params: need q > p");
  if (!(q > 1.0)) throw DomainError("dp params: need q > 1");
  if (!(alpha > 0.0)) throw DomainError("dp params: need alpha > 0");
  if (!(c > 0.0)) throw DomainError("dp params: need c > 0");
  if (!(x_left < x_right)) throw DomainError("dp params: need x_left < x_right");
}

double c_for_x0(double p, double q, double alpha, double x0) {
  if (!(x0 > 0.0)) throw DomainError("c_for_x0: need x0 > 0");
  return std::pow(x0, -alpha * (p - 1.0) / (q - p));
}

ExactDPSolution::ExactDPSolution(DPParams params) : params_(params) {
  params_.validate();
  x0_ = std::pow(params_.c, -(1.0 / params_.alpha) * (q() - p()) / (p() - 1.0));
  alpha2_ = 1.0 - params_.alpha / (q() - 1.0);
  slope_ = std::pow(params_.c, 1.0 / (p() - 1.0));
}

double ExactDPSolution::primitive(double x) const {
  // int_{x_left}^{x} (c |y|^{-alpha})^{1/(q-1)} dy for x <= -x0
  const double cq = std::pow(params_.c, 1.0 / (q() - 1.0));
  const double aL = std::abs(params_.x_left);
  const double ax = std::abs(x);
  if (alpha2_ == 0.0) return cq * std::log(aL / ax);
  return cq * (std::pow(aL, alpha2_) - std::pow(ax, alpha2_)) / alpha2_;
}

double ExactDPSolution::operator()(double x) const {
  if (!degenerate_region_present()) return (x - params_.x_left) * slope_;
  if (x <= -x0_) return primitive(x);
  return primitive(-x0_) + (x + x0_) * slope_;
}

double ExactDPSolution::derivative(double x) const {
  if (!degenerate_region_present() || x >= -x0_) return slope_;
  return std::pow(params_.c * std::pow(std::abs(x), -params_.alpha), 1.0 / (q() - 1.0));
}

double ExactDPSolution::quadrature_value(double x, double rel_tol) const {
  const QuadratureControl ctl{1e-14, rel_tol, 52};
  const auto du = [this](double y) { return derivative(y); };
  if (!degenerate_region_present() || x <= -x0_) {
    return integrate(du, params_.x_left, x, ctl);
  }
  return integrate(du, params_.x_left, -x0_, ctl) + integrate(du, -x0_, x, ctl);
}

PhiFunction ExactDPSolution::phi() const {
  return PhiFunction::double_phase_max(
      p(), q(), CoefficientFunction::negative_part_power(params_.alpha));
}

GrowthField ExactDPSolution::field() const { return GrowthField::canonical(phi()); }

GridFunction ExactDPSolution::sample(int node_count) const {
  return sample(params_.x_left, params_.x_right, node_count);
}

GridFunction ExactDPSolution::sample(double lo, double hi, int node_count) const {
  return GridFunction::sample(lo, hi, node_count, [this](double x) { return (*this)(x); });
}

double ExactDPSolution::p() const { return params_.p; }
double ExactDPSolution::q() const { return params_.q; }

ExactDPSolution solve_double_phase_1d(const DPParams& params) {
  return ExactDPSolution(params);
}

double harnack_quotient(double alpha2, double rho) {
  if (!(rho > 0.0)) throw DomainError("harnack_quotient: need rho > 0");
  if (!(alpha2 < 1.0)) throw DomainError("harnack_quotient: need alpha2 < 1");
  const double l = std::log1p(2.0 * rho);
  if (alpha2 == 0.0) return 1.0 + rho / l;
  return 1.0 + alpha2 * rho / std::expm1(alpha2 * l);
}

double harnack_quotient(const ExactDPSolution& sol, double r) {
  return harnack_quotient(sol.alpha2(), r / sol.x0());
}

double energy(const ExactDPSolution& sol, double r) {
  if (!(r > 0.0)) throw DomainError("energy: need r > 0");
  const DPParams& d = sol.params();
  const double x0 = sol.x0();
  const double a2 = sol.alpha2();
  const double cq = std::pow(d.c, 1.0 / (d.q - 1.0));
  const double degenerate_rise =
      a2 == 0.0 ? cq * std::log((x0 + 2.0 * r) / x0)
                : cq * (std::pow(x0 + 2.0 * r, a2) - std::pow(x0, a2)) / a2;
  const double rise = degenerate_rise + 2.0 * r * std::pow(d.c, 1.0 / (d.p - 1.0));
  return d.c * rise;
}

bool norm_sequence_bounded(double p, double q, double alpha, ExtReal s) {
  return 1.0 + s.reciprocal_or_zero() - alpha / (q - p) > 0.0;
}

namespace {

// Classification of a norm sequence along x0 -> 0: fitted exponent of the
// norm with the polylog factor divided out. A strictly positive exponent
// makes the norms vanish; at exponent zero the remaining (log 1/x0)^{1+1/s}
// factor still diverges, so the tie band classifies as diverging. Returns
// 1 bounded, 0 diverging, -1 unclassified.
double classify_norm_sequence(const std::vector<double>& x0s,
                              const std::vector<double>& norms, ExtReal s) {
  if (x0s.size() < 3) return -1.0;
  const double log_exp = 1.0 + s.reciprocal_or_zero();
  std::vector<double> lx, lr;
  for (std::size_t i = 0; i < x0s.size(); ++i) {
    lx.push_back(std::log(x0s[i]));
    lr.push_back(std::log(norms[i]) - log_exp * std::log(std::log(1.0 / x0s[i])));
  }
  const std::size_t tail = lx.size() / 2;
  const double slope = fit_slope(std::span(lx).subspan(tail), std::span(lr).subspan(tail));
  return slope > 0.01 ? 1.0 : 0.0;
}

ExactDPSolution sweep_solution(double p, double q, double alpha, double x0, double r) {
  DPParams d;
  d.p = p;
  d.q = q;
  d.alpha = alpha;
  d.c = c_for_x0(p, q, alpha, x0);
  d.x_left = -x0 - 2.0 * r;
  d.x_right = -x0 + 2.0 * r;
  return ExactDPSolution(d);
}

}  // namespace

namespace {

void validate_x0_sequence(const std::vector<double>& x0s) {
  if (x0s.empty()) throw DomainError("sweep: empty x0 sequence");
  double prev = 1.0;
  for (double x0 : x0s) {
    if (!(x0 > 0.0 && x0 < 1.0)) {
      throw DomainError("sweep: x0 must lie in (0,1) so log(1/x0) > 0");
    }
    if (!(x0 < prev)) throw DomainError("sweep: x0 sequence must decrease toward 0");
    prev = x0;
  }
}

}  // namespace

ExperimentTable sharpness_sweep(const SharpnessSweepConfig& cfg) {
  validate_x0_sequence(cfg.x0_sequence);
  ExperimentTable table({"x0", "c", "r", "rho", "harnack_quotient",
                         "harnack_quotient_domain", "ls_norm", "predicted_norm",
                         "norm_ratio", "energy", "predicted_energy", "energy_ratio",
                         "vbound_scaled", "betabound_mean", "norm_bounded"});
  table.set_metadata("p", format_number(cfg.p));
  table.set_metadata("q", format_number(cfg.q));
  table.set_metadata("alpha", format_number(cfg.alpha));
  table.set_metadata("s", cfg.s.str());

  const double inv_s = cfg.s.reciprocal_or_zero();
  const double alpha2 = 1.0 - cfg.alpha / (cfg.q - 1.0);
  const double s_star = cfg.s.is_finite() ? cfg.s.value() / (1.0 + cfg.s.value()) : 1.0;
  const PhiFunction omega = PhiFunction::power(s_star);

  std::vector<double> x0s, norms;
  std::vector<std::vector<double>> rows;
  for (double x0 : cfg.x0_sequence) {
    const double r = x0 * std::log(1.0 / x0);
    const double rho = r / x0;
    const ExactDPSolution sol = sweep_solution(cfg.p, cfg.q, cfg.alpha, x0, r);
    const GridFunction u = sol.sample(cfg.grid_nodes);

    const double quotient = harnack_quotient(alpha2, rho);
    const double quotient_domain = harnack_quotient(alpha2, cfg.domain_radius / x0);
    const double norm = lebesgue_norm(u, cfg.s);
    const double predicted = std::pow(x0, 1.0 + inv_s - cfg.alpha / (cfg.q - cfg.p)) *
                             std::pow(std::log(1.0 / x0), 1.0 + inv_s);
    const double en = energy(sol, r);
    const double en_pred = std::pow(x0, 1.0 - cfg.p * cfg.alpha / (cfg.q - cfg.p)) * rho;

    const Ball inner({-x0}, r);
    const HypothesisQuantities hq =
        hypothesis_quantities(sol.phi(), omega, u, inner, 1.0);

    x0s.push_back(x0);
    norms.push_back(norm);
    rows.push_back({x0, sol.params().c, r, rho, quotient, quotient_domain, norm, predicted,
                    norm / predicted, en, en_pred, en / en_pred, hq.scaled_vbound,
                    hq.beta_mean, kNaN});
  }
  const double verdict = classify_norm_sequence(x0s, norms, cfg.s);
  for (auto& row : rows) {
    row.back() = verdict;
    table.add_row(std::move(row));
  }
  table.set_metadata("norm_bounded", verdict > 0.5 ? "bounded" : verdict == 0.0 ? "diverging" : "unclassified");
  return table;
}

double norm_budget_radius(double p, double q, double alpha, ExtReal s, double x0,
                          double d0, double cap) {
  const double c = c_for_x0(p, q, alpha, x0);
  const double slope = std::pow(c, 1.0 / (p - 1.0));
  double r;
  if (s.is_finite()) {
    r = std::pow(d0 / slope, 1.0 / (1.0 + 1.0 / s.value()));
  } else {
    r = d0 / slope;
  }
  return std::min(r, cap);
}

ExperimentTable harnack_sweep(const HarnackSweepConfig& cfg) {
  if (cfg.alpha_list.empty()) throw DomainError("harnack_sweep: need alpha values");
  validate_x0_sequence(cfg.x0_sequence);
  ExperimentTable table({"alpha", "x0", "c", "r_log", "harnack_quotient", "ls_norm",
                         "whr_log", "r_budget", "rho_budget", "whr_budget", "energy",
                         "vbound_scaled", "betabound_mean", "norm_bounded"});
  table.set_metadata("p", format_number(cfg.p));
  table.set_metadata("q", format_number(cfg.q));
  table.set_metadata("s", cfg.s.str());
  table.set_metadata("ell0", format_number(cfg.ell0));

  const double s_star = cfg.s.is_finite() ? cfg.s.value() / (1.0 + cfg.s.value()) : 1.0;
  const PhiFunction omega = PhiFunction::power(s_star);

  for (double alpha : cfg.alpha_list) {
    const double alpha2 = 1.0 - alpha / (cfg.q - 1.0);
    std::vector<double> x0s, norms;
    std::vector<std::vector<double>> rows;
    for (double x0 : cfg.x0_sequence) {
      const double r = x0 * std::log(1.0 / x0);
      const ExactDPSolution sol = sweep_solution(cfg.p, cfg.q, alpha, x0, r);
      const GridFunction u = sol.sample(cfg.grid_nodes);
      const double norm = lebesgue_norm(u, cfg.s);
      const double whr_log = weak_harnack_ratio(u, r, -x0, cfg.ell0);

      const double rb =
          norm_budget_radius(cfg.p, cfg.q, alpha, cfg.s, x0, cfg.norm_budget, cfg.radius_cap);
      const ExactDPSolution solb = sweep_solution(cfg.p, cfg.q, alpha, x0, rb);
      const GridFunction ub = solb.sample(cfg.grid_nodes);
      const double whr_budget = weak_harnack_ratio(ub, rb, -x0, cfg.ell0);

      const Ball inner({-x0}, r);
      const HypothesisQuantities hq = hypothesis_quantities(sol.phi(), omega, u, inner, 1.0);

      x0s.push_back(x0);
      norms.push_back(norm);
      rows.push_back({alpha, x0, sol.params().c, r, harnack_quotient(alpha2, r / x0), norm,
                      whr_log, rb, rb / x0, whr_budget, energy(sol, r), hq.scaled_vbound,
                      hq.beta_mean, kNaN});
    }
    const double verdict = classify_norm_sequence(x0s, norms, cfg.s);
    for (auto& row : rows) {
      row.back() = verdict;
      table.add_row(std::move(row));
    }
  }
  return table;
}

// ---------------------------------------------------------------------------
// Profiles and the supersolution test

Profile profile_of(const ExactDPSolution& sol) {
  Profile pr;
  pr.lo = sol.params().x_left;
  pr.hi = sol.params().x_right;
  pr.value = [sol](double x) { return sol(x); };
  pr.deriv = [sol](double x) { return sol.derivative(x); };
  if (sol.degenerate_region_present() && -sol.x0() < pr.hi) pr.breakpoints = {-sol.x0()};
  return pr;
}

Profile shifted_profile(Profile f, double offset) {
  auto base = f.value;
  f.value = [base, offset](double x) { return base(x) + offset; };
  return f;
}

namespace {

std::vector<double> merged_breakpoints(const Profile& f, const Profile& g, double lo,
                                       double hi) {
  std::vector<double> bp;
  for (double b : f.breakpoints) {
    if (b > lo && b < hi) bp.push_back(b);
  }
  for (double b : g.breakpoints) {
    if (b > lo && b < hi) bp.push_back(b);
  }
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
  return bp;
}

// Sign changes of f-g located by a scan plus bisection.
std::vector<double> crossings(const Profile& f, const Profile& g, double lo, double hi) {
  std::vector<double> found;
  const int n = 512;
  const auto d = [&](double x) { return f.value(x) - g.value(x); };
  double x_prev = lo;
  double d_prev = d(lo);
  for (int i = 1; i <= n; ++i) {
    const double x = lo + (hi - lo) * i / n;
    const double dx = d(x);
    if (d_prev == 0.0) {
      found.push_back(x_prev);
    } else if ((d_prev < 0.0) != (dx < 0.0)) {
      double a = x_prev, b = x;
      for (int it = 0; it < 80; ++it) {
        const double m = 0.5 * (a + b);
        if ((d(a) < 0.0) != (d(m) < 0.0)) {
          b = m;
        } else {
          a = m;
        }
      }
      found.push_back(0.5 * (a + b));
    }
    x_prev = x;
    d_prev = dx;
  }
  return found;
}

Profile combine(const Profile& f, const Profile& g, bool take_min) {
  Profile out;
  out.lo = std::max(f.lo, g.lo);
  out.hi = std::min(f.hi, g.hi);
  if (!(out.hi > out.lo)) throw PreconditionError("profiles do not overlap");
  auto fv = f.value;
  auto gv = g.value;
  auto fd = f.deriv;
  auto gd = g.deriv;
  if (take_min) {
    out.value = [fv, gv](double x) { return std::min(fv(x), gv(x)); };
    out.deriv = [fv, gv, fd, gd](double x) { return fv(x) <= gv(x) ? fd(x) : gd(x); };
  } else {
    out.value = [fv, gv](double x) { return std::max(fv(x), gv(x)); };
    out.deriv = [fv, gv, fd, gd](double x) { return fv(x) >= gv(x) ? fd(x) : gd(x); };
  }
  out.breakpoints = merged_breakpoints(f, g, out.lo, out.hi);
  for (double c : crossings(f, g, out.lo, out.hi)) out.breakpoints.push_back(c);
  std::sort(out.breakpoints.begin(), out.breakpoints.end());
  out.breakpoints.erase(std::unique(out.breakpoints.begin(), out.breakpoints.end()),
                        out.breakpoints.end());
  return out;
}

}  // namespace

Profile min_profile(const Profile& f, const Profile& g) { return combine(f, g, true); }
Profile max_profile(const Profile& f, const Profile& g) { return combine(f, g, false); }

namespace {

Profile crossing_pair(const ExactDPSolution& fast, const ExactDPSolution& slow,
                      double crossing_x, bool take_min) {
  if (!(fast.params().c > slow.params().c)) {
    throw PreconditionError("supersolution fixture: need c_fast > c_slow");
  }
  const double shift = fast(crossing_x) - slow(crossing_x);
  Profile pf = profile_of(fast);
  Profile ps = shifted_profile(profile_of(slow), shift);
  return take_min ? min_profile(pf, ps) : max_profile(pf, ps);
}

}  // namespace

Profile min_supersolution(const ExactDPSolution& fast, const ExactDPSolution& slow,
                          double crossing_x) {
  return crossing_pair(fast, slow, crossing_x, true);
}

Profile max_subsolution(const ExactDPSolution& fast, const ExactDPSolution& slow,
                        double crossing_x) {
  return crossing_pair(fast, slow, crossing_x, false);
}

Profile hat_profile(double lo, double apex, double hi, double height) {
  if (!(lo < apex && apex < hi) || !(height > 0.0)) {
    throw DomainError("hat_profile: need lo < apex < hi, height > 0");
  }
  Profile pr;
  pr.lo = lo;
  pr.hi = hi;
  const double up = height / (apex - lo);
  const double down = -height / (hi - apex);
  pr.value = [=](double x) {
    if (x <= lo || x >= hi) return 0.0;
    return x < apex ? (x - lo) * up : (hi - x) * (-down);
  };
  pr.deriv = [=](double x) { return x < apex ? up : down; };
  pr.breakpoints = {apex};
  return pr;
}

double verify_supersolution(const GrowthField& field, const Profile& u, const Profile& h) {
  const double lo = std::max(u.lo, h.lo);
  const double hi = std::min(u.hi, h.hi);
  if (!(hi > lo)) throw PreconditionError("verify_supersolution: empty overlap");
  const double scale = std::max(1.0, std::abs(h.value(0.5 * (lo + hi))));
  if (std::abs(h.value(h.lo)) > 1e-12 * scale || std::abs(h.value(h.hi)) > 1e-12 * scale) {
    throw PreconditionError("verify_supersolution: h must vanish at the boundary");
  }
  for (double x : stratified_samples(h.lo, h.hi, 64)) {
    if (h.value(x) < -1e-12 * scale) {
      throw PreconditionError("verify_supersolution: h must be non-negative");
    }
  }
  std::vector<double> cuts{lo};
  for (double b : merged_breakpoints(u, h, lo, hi)) cuts.push_back(b);
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<double> pieces;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    if (!(b > a)) continue;
    const double nudge = 1e-9 * (b - a);
    const auto integrand = [&](double x) {
      const double xc = std::clamp(x, a + nudge, b - nudge);
      return field.flux(xc, u.deriv(xc)) * h.deriv(xc);
    };
    pieces.push_back(integrate(integrand, a, b, QuadratureControl{1e-13, 1e-10, 44}));
  }
  return pairwise_sum(pieces);
}

double verify_supersolution(const GrowthField& field, const GridFunction& u,
                            const GridFunction& h) {
  if (u.size() != h.size() || u.lo() != h.lo() || u.hi() != h.hi()) {
    throw PreconditionError("verify_supersolution: u and h must share the grid");
  }
  double hmax = 0.0;
  for (double v : h.values()) hmax = std::max(hmax, std::abs(v));
  if (std::abs(h.value(0)) > 1e-12 * std::max(1.0, hmax) ||
      std::abs(h.value(h.size() - 1)) > 1e-12 * std::max(1.0, hmax)) {
    throw PreconditionError("verify_supersolution: h must vanish at the boundary");
  }
  for (double v : h.values()) {
    if (v < -1e-12 * std::max(1.0, hmax)) {
      throw PreconditionError("verify_supersolution: h must be non-negative");
    }
  }
  const GridFunction du = u.derivative();
  const GridFunction dh = h.derivative();
  std::vector<double> f(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    f[i] = field.flux(u.node(i), du.value(i)) * dh.value(i);
  }
  return composite_simpson(f, u.spacing());
}

// ---------------------------------------------------------------------------
// Caccioppoli

double CutoffFunction::operator()(double x) const {
  const double d = std::abs(x - center);
  if (d <= inner) return 1.0;
  if (d >= outer) return 0.0;
  return (outer - d) / (outer - inner);
}

CutoffFunction CaccioppoliConfig::effective_cutoff() const {
  if (cutoff) return *cutoff;
  const double R = ball.radius();
  return CutoffFunction{ball.center()[0], sigma * R, R};
}

CaccioppoliResult verify_caccioppoli(const PhiFunction& phi,
                                     const std::function<double(double)>& psi,
                                     const GridFunction& u, const CaccioppoliConfig& cfg,
                                     const GrowthField& growth) {
  if (!(cfg.ell > 1.0 / cfg.p1)) {
    throw PreconditionError("caccioppoli: need ell > 1/p1");
  }
  if (!(cfg.sigma > 0.0 && cfg.sigma < 1.0)) {
    throw PreconditionError("caccioppoli: need sigma in (0,1)");
  }
  if (!phi.declared_exponents()) {
    throw PreconditionError("caccioppoli: phi needs declared exponents");
  }
  const double q = phi.declared_exponents()->q;
  if (!(cfg.s_exponent >= q - 1e-12)) {
    throw PreconditionError("caccioppoli: need s >= q");
  }
  const CutoffFunction eta = cfg.effective_cutoff();
  const double R = cfg.ball.radius();
  const double center = cfg.ball.center()[0];
  const GridFunction du = u.derivative();

  std::vector<double> lhs_vals(u.size()), rhs_vals(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double x = u.node(i);
    const double e = eta(x);
    const double v = (u.value(i) + R) / R;
    const double psi_w = std::pow(psi(v), -cfg.ell);
    lhs_vals[i] =
        e > 0.0 ? phi(x, std::abs(du.value(i))) * psi_w * std::pow(e, cfg.s_exponent) : 0.0;
    const bool inside = std::abs(x - center) < R;
    double eta_pow;
    if (!inside) {
      eta_pow = 0.0;
    } else if (cfg.s_exponent - q <= 1e-12) {
      eta_pow = 1.0;
    } else {
      eta_pow = std::pow(e, cfg.s_exponent - q);
    }
    rhs_vals[i] = eta_pow > 0.0 ? psi_w * phi(x, v) * eta_pow : 0.0;
  }
  CaccioppoliResult res;
  res.lhs = composite_simpson(lhs_vals, u.spacing());
  res.rhs_integral = composite_simpson(rhs_vals, u.spacing());
  res.ratio = res.rhs_integral > 0.0 ? res.lhs / res.rhs_integral
                                     : (res.lhs == 0.0 ? 0.0 : kNaN);
  res.reference_constant = std::pow(
      cfg.s_exponent * growth.lambda / ((1.0 - cfg.sigma) * (cfg.p1 * cfg.ell - 1.0) * growth.nu),
      q);
  return res;
}

double weak_harnack_ratio(const GridFunction& u, double R, double center, double ell0,
                          bool include_radius_shift) {
  if (!(R > 0.0) || !(ell0 > 0.0)) {
    throw DomainError("weak_harnack_ratio: need R > 0 and ell0 > 0");
  }
  const double shift = include_radius_shift ? R : 0.0;
  const Ball outer({center}, 2.0 * R);
  const Ball inner({center}, R);
  const double num = integral_mean_power(u.shifted(shift), ell0, outer).value;
  const double den = ess_bounds(u, inner).inf + shift;
  if (!(den > 0.0)) throw DomainError("weak_harnack_ratio: denominator not positive");
  return num / den;
}

ExtReal limiting_exponent(double p, int dim) {
  if (!(p > 1.0)) throw DomainError("limiting_exponent: need p > 1");
  if (dim < 1) throw DomainError("limiting_exponent: need dim >= 1");
  const double n = dim;
  if (p < n) return ExtReal(n * (p - 1.0) / (n - p));
  return ExtReal::inf();
}

NonintegrabilityReport p_laplace_nonintegrability(double p, int dim,
                                                  const std::vector<double>& eps_sequence,
                                                  double exponent_factor) {
  if (!(p > 1.0)) throw DomainError("nonintegrability: need p > 1");
  if (eps_sequence.empty()) throw DomainError("nonintegrability: empty eps sequence");
  for (double e : eps_sequence) {
    if (!(e > 0.0 && e < 1.0)) throw DomainError("nonintegrability: eps must be in (0,1)");
  }
  NonintegrabilityReport rep;
  rep.eps = eps_sequence;
  const double n = dim;

  if (p >= n) {
    // l(p) = infinity; the borderline supersolution log(1/|x|) has sup
    // growth log(1/eps) on the annulus.
    rep.infinite_exponent = true;
    for (double e : eps_sequence) {
      rep.partial.push_back(std::log(1.0 / e));
      rep.closed_form.push_back(std::log(1.0 / e));
    }
    rep.slope = 1.0;
    rep.expected_slope = 1.0;
    return rep;
  }

  const double ell = exponent_factor * n * (p - 1.0) / (n - p);
  rep.exponent_used = ell;
  const double surface = 2.0 * std::pow(std::numbers::pi_v<double>, n / 2.0) /
                         std::tgamma(n / 2.0);
  rep.expected_slope = surface;
  // radial exponent of the integrand rho^{n-1} u_p^{ell}
  const double k = n - 1.0 - ell * (n - p) / (p - 1.0);
  std::vector<double> lninv;
  for (double e : eps_sequence) {
    // log substitution rho = e^t turns the power into a smooth exponential
    const double value = surface * integrate(
                                       [k](double t) { return std::exp((k + 1.0) * t); },
                                       std::log(e), 0.0, QuadratureControl{1e-13, 1e-11, 50});
    rep.partial.push_back(value);
    rep.closed_form.push_back(std::abs(k + 1.0) < 1e-14
                                  ? surface * std::log(1.0 / e)
                                  : surface * (1.0 - std::pow(e, k + 1.0)) / (k + 1.0));
    lninv.push_back(std::log(1.0 / e));
  }
  if (eps_sequence.size() >= 2) rep.slope = fit_slope(lninv, rep.partial);
  return rep;
}

HypothesisQuantities hypothesis_quantities(const PhiFunction& phi, const PhiFunction& omega,
                                           const GridFunction& u, const Ball& ball,
                                           double beta_exp, const SamplingSpec& spec) {
  if (!(beta_exp >= 1.0)) throw DomainError("hypothesis_quantities: need beta >= 1");
  const double R = ball.radius();
  HypothesisQuantities out{};
  const GridFunction v = u.shifted(R).scaled(1.0 / R);
  const double mean_v = integral_mean_power(v, 1.0, ball).value;

  const std::vector<double> xs = ball.samples(spec.x_count);
  double omega_inf = std::numeric_limits<double>::infinity();
  for (double x : xs) omega_inf = std::min(omega_inf, omega(x, mean_v));
  out.lhs_vbound = omega_inf;
  out.inv_measure = 1.0 / ball.measure();
  out.scaled_vbound = ball.measure() * omega_inf;

  bool degenerate = false;
  const GridFunction ratio_grid =
      GridFunction::sample(ball.lo(), ball.hi(), 513, [&](double x) {
        const double vx = (u(x) + R) / R;
        double pmin = std::numeric_limits<double>::infinity();
        for (double xx : xs) pmin = std::min(pmin, phi(xx, vx));
        if (!(pmin > 0.0)) {
          degenerate = true;
          return 0.0;
        }
        return std::pow(phi(x, vx) / pmin, beta_exp);
      });
  out.degenerate = degenerate;
  out.beta_mean =
      composite_simpson(ratio_grid.values(), ratio_grid.spacing()) / (ball.hi() - ball.lo());
  return out;
}

}  // namespace orlicz::dp
