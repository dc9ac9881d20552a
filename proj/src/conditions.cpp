#include "orlicz/conditions.hpp"

#include <algorithm>
#include <cmath>

namespace orlicz::conditions {

namespace {

constexpr int kBetaGridSteps = 528;  // {2^{-k/8}}, k = 0..528
constexpr double kTrendBand = 1e-3;  // per-octave drift below -band => fails

double beta_at(int k) { return std::pow(2.0, -static_cast<double>(k) / 8.0); }

}  // namespace

std::string to_string(Condition c) {
  switch (c) {
    case Condition::A0: return "A0";
    case Condition::A1Omega: return "A1-omega";
    case Condition::A1S: return "A1-s";
    case Condition::A1: return "A1";
    case Condition::AIncP: return "aInc";
    case Condition::ADecQ: return "aDec";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

double snap_to_beta_grid(double beta) {
  if (!(beta > 0.0)) return 0.0;
  if (beta >= 1.0) return 1.0;
  const int k = static_cast<int>(std::ceil(-8.0 * std::log2(beta) - 1e-12));
  return beta_at(std::min(k, kBetaGridSteps));
}

A1SearchSpec A1SearchSpec::dyadic(double center, int depth, SamplingSpec sampling) {
  A1SearchSpec spec;
  spec.sampling = sampling;
  for (int k = 1; k <= depth; ++k) {
    spec.ball_family.emplace_back(std::vector<double>{center}, std::pow(2.0, -k));
  }
  return spec;
}

// ---------------------------------------------------------------------------
// (A0)

namespace {

ConditionReport run_a0(const PhiFunction& phi, double x_lo, double x_hi,
                       const SamplingSpec& spec) {
  ConditionReport rep;
  rep.condition = Condition::A0;
  const std::vector<double> xs = stratified_samples(x_lo, x_hi, spec.x_count);

  const auto admissible = [&](double beta, double* slack, double* worst_x) {
    double s = std::numeric_limits<double>::infinity();
    double wx = xs.front();
    bool ok = true;
    for (double x : xs) {
      const double lo_slack = 1.0 - phi(x, beta);
      const double hi_slack = phi(x, 1.0 / beta) - 1.0;
      const double m = std::min(lo_slack, hi_slack);
      if (m < s) {
        s = m;
        wx = x;
      }
      if (m < 0.0) ok = false;
    }
    if (slack) *slack = s;
    if (worst_x) *worst_x = wx;
    return ok;
  };

  // Monotone in k (smaller beta is easier): binary-search the smallest
  // admissible k, i.e. the largest admissible beta.
  if (!admissible(beta_at(kBetaGridSteps), nullptr, &rep.worst.x)) {
    rep.verdict = Verdict::Fails;
    double slack;
    admissible(beta_at(kBetaGridSteps), &slack, &rep.worst.x);
    rep.margin = slack;
    rep.detail = "no beta in the 2^{-66} grid admissible";
    return rep;
  }
  int lo = 0, hi = kBetaGridSteps;
  if (admissible(beta_at(0), nullptr, nullptr)) {
    hi = 0;
  } else {
    while (hi - lo > 1) {
      const int mid = (lo + hi) / 2;
      if (admissible(beta_at(mid), nullptr, nullptr)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
  }
  rep.verdict = Verdict::Holds;
  rep.witness_beta = beta_at(hi);
  double slack, wx;
  admissible(beta_at(hi), &slack, &wx);
  rep.margin = slack;
  rep.worst.x = wx;
  return rep;
}

}  // namespace

ConditionReport check_a0(const PhiFunction& phi, double x_lo, double x_hi,
                         const SamplingSpec& spec) {
  ConditionReport base = run_a0(phi, x_lo, x_hi, spec);
  ConditionReport fine = run_a0(phi, x_lo, x_hi, spec.refined(2));
  if (base.verdict != fine.verdict) {
    fine.verdict = Verdict::Inconclusive;
    fine.detail = "verdict flipped under 2x sampling refinement";
  }
  return fine;
}

// ---------------------------------------------------------------------------
// (aInc)_p / (aDec)_q

namespace {

struct MonotonicityScan {
  double L = 1.0;
  WorstSample worst;
};

// L = sup over x and t1 < t2 of g(t1)/g(t2) for aInc (g = phi/t^p), and the
// mirror image (suffix max) for aDec.
MonotonicityScan scan_constant(const PhiFunction& phi, double expo, bool increasing,
                               double t_min, double t_max, int per_decade, double x_lo,
                               double x_hi, int x_count) {
  MonotonicityScan out;
  const std::vector<double> xs = stratified_samples(x_lo, x_hi, x_count);
  const std::vector<double> ts = log_grid(t_min, t_max, per_decade);
  for (double x : xs) {
    std::vector<double> g(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
      g[i] = phi(x, ts[i]) / std::pow(ts[i], expo);
    }
    if (increasing) {
      double prefix = g[0];
      double prefix_t = ts[0];
      for (std::size_t i = 1; i < ts.size(); ++i) {
        const double ratio = prefix / g[i];
        if (ratio > out.L) {
          out.L = ratio;
          out.worst = {x, prefix_t, ts[i], std::numeric_limits<double>::quiet_NaN()};
        }
        if (g[i] > prefix) {
          prefix = g[i];
          prefix_t = ts[i];
        }
      }
    } else {
      double prefix = g[0];
      double prefix_t = ts[0];
      for (std::size_t i = 1; i < ts.size(); ++i) {
        const double ratio = g[i] / prefix;
        if (ratio > out.L) {
          out.L = ratio;
          out.worst = {x, prefix_t, ts[i], std::numeric_limits<double>::quiet_NaN()};
        }
        if (g[i] < prefix) {
          prefix = g[i];
          prefix_t = ts[i];
        }
      }
    }
  }
  return out;
}

ConditionReport check_monotonicity(const PhiFunction& phi, double expo, bool increasing,
                                   const IncDecSpec& spec) {
  if (!(expo > 0.0)) throw DomainError("aInc/aDec: exponent must be > 0");
  ConditionReport rep;
  rep.condition = increasing ? Condition::AIncP : Condition::ADecQ;
  const MonotonicityScan base =
      scan_constant(phi, expo, increasing, spec.t_min, spec.t_max, spec.t_per_decade,
                    spec.x_lo, spec.x_hi, spec.x_count);
  // Refinement widens the grid by two decades per side and doubles density;
  // a genuine almost-monotone family keeps its constant, a violator grows.
  const MonotonicityScan fine =
      scan_constant(phi, expo, increasing, spec.t_min * 1e-2, spec.t_max * 1e2,
                    spec.t_per_decade * 2, spec.x_lo, spec.x_hi, spec.x_count * 2);
  const double growth = fine.L / base.L;
  rep.margin = growth - 1.0;
  rep.worst = fine.worst;
  rep.witness_L = std::max(base.L, fine.L);
  if (growth <= 1.0 + 1e-3) {
    rep.verdict = Verdict::Holds;
  } else if (growth > 2.0) {
    rep.verdict = Verdict::Fails;
    rep.detail = "constant grows under grid refinement (unbounded)";
    rep.witness_L.reset();
  } else {
    rep.verdict = Verdict::Inconclusive;
    rep.detail = "constant drifts under refinement; resolution limit";
  }
  return rep;
}

}  // namespace

ConditionReport check_aInc(const PhiFunction& phi, double p, const IncDecSpec& spec) {
  return check_monotonicity(phi, p, true, spec);
}

ConditionReport check_aDec(const PhiFunction& phi, double q, const IncDecSpec& spec) {
  return check_monotonicity(phi, q, false, spec);
}

// ---------------------------------------------------------------------------
// (A1-omega) and instances

namespace {

struct BallRequirement {
  double log2_inv_measure;
  double beta_req;
  double worst_t;
  double radius;
  double x_sup;  // where phi^+_B peaks at the binding configuration
  double y_inf;  // where phi^-_B is attained
};

struct BetaRequired {
  double beta;
  double x_sup;
  double y_inf;
};

// Largest beta with phi^+_B(beta t) <= phi^-_B(t), bisected on a log scale,
// with the extremal sample points recorded as the (x, y) witness pair.
BetaRequired beta_required(const std::vector<double>& xs, const PhiFunction& phi, double t) {
  double x_at_sup = xs.front();
  const auto phi_sup = [&](double u) {
    double m = -std::numeric_limits<double>::infinity();
    for (double x : xs) {
      const double v = phi(x, u);
      if (v > m) {
        m = v;
        x_at_sup = x;
      }
    }
    return m;
  };
  double target = std::numeric_limits<double>::infinity();
  double y_at_inf = xs.front();
  for (double x : xs) {
    const double v = phi(x, t);
    if (v < target) {
      target = v;
      y_at_inf = x;
    }
  }
  if (phi_sup(t) <= target) return {1.0, x_at_sup, y_at_inf};
  double llo = std::log(t) - 56.0;  // ~ t * 5e-25
  double lhi = std::log(t);
  if (phi_sup(std::exp(llo)) > target) return {0.0, x_at_sup, y_at_inf};
  for (int i = 0; i < 48; ++i) {
    const double mid = 0.5 * (llo + lhi);
    if (phi_sup(std::exp(mid)) <= target) {
      llo = mid;
    } else {
      lhi = mid;
    }
  }
  phi_sup(std::exp(lhi));  // refresh x_at_sup at the binding level
  return {std::exp(llo) / t, x_at_sup, y_at_inf};
}

struct A1Scan {
  std::vector<BallRequirement> balls;
  int vacuous = 0;
};

A1Scan scan_a1(const PhiFunction& phi, const PhiFunction& omega, const A1SearchSpec& spec,
               const SamplingSpec& sampling) {
  A1Scan scan;
  for (const Ball& ball : spec.ball_family) {
    const std::vector<double> xs = ball.samples(sampling.x_count);
    const auto omega_inf = [&](double t) {
      double m = std::numeric_limits<double>::infinity();
      for (double x : xs) m = std::min(m, omega(x, t));
      return m;
    };
    const double cap = 1.0 / ball.measure();
    if (omega_inf(sampling.s_max) < 1.0) {
      ++scan.vacuous;  // window empty within the sampled range
      continue;
    }
    double t_lo = inverse_left(omega_inf, 1.0, 1.0, 1e-10);
    t_lo = std::max(t_lo, 1e-12);
    double t_hi;
    if (omega_inf(t_lo) > cap) {
      ++scan.vacuous;
      continue;
    }
    t_hi = inverse_right(omega_inf, cap, std::max(t_lo, 1.0), 1e-10);
    if (!(t_hi >= t_lo)) {
      ++scan.vacuous;
      continue;
    }
    std::vector<double> ts;
    if (t_hi <= t_lo * (1.0 + 1e-12)) {
      ts = {t_lo};
    } else {
      ts = log_grid_n(t_lo, t_hi, sampling.t_points);
    }
    BallRequirement req;
    req.radius = ball.radius();
    req.log2_inv_measure = -std::log2(ball.measure());
    req.beta_req = std::numeric_limits<double>::infinity();
    req.worst_t = ts.front();
    req.x_sup = req.y_inf = ball.center()[0];
    for (double t : ts) {
      const BetaRequired b = beta_required(xs, phi, t);
      if (b.beta < req.beta_req) {
        req.beta_req = b.beta;
        req.worst_t = t;
        req.x_sup = b.x_sup;
        req.y_inf = b.y_inf;
      }
    }
    scan.balls.push_back(req);
  }
  return scan;
}

ConditionReport classify_a1(const A1Scan& scan, Condition label) {
  ConditionReport rep;
  rep.condition = label;
  rep.vacuous_balls = scan.vacuous;
  if (scan.balls.empty()) {
    rep.verdict = Verdict::Inconclusive;
    rep.detail = "every ball window was vacuous";
    return rep;
  }
  double beta_min = std::numeric_limits<double>::infinity();
  const BallRequirement* worst = nullptr;
  for (const auto& b : scan.balls) {
    if (b.beta_req < beta_min) {
      beta_min = b.beta_req;
      worst = &b;
    }
  }
  rep.worst = {worst->x_sup, worst->y_inf, worst->worst_t, worst->radius};
  if (!(beta_min > beta_grid_floor())) {
    rep.verdict = Verdict::Fails;
    rep.detail = "required beta fell below the search grid";
    rep.margin = -std::numeric_limits<double>::infinity();
    return rep;
  }
  // Small-ball trend of log2 beta_req against log2(1/|B|): a strictly
  // negative drift means no single beta survives all radii.
  if (scan.balls.size() >= 3) {
    std::vector<double> xs, ys;
    const std::size_t tail_start = scan.balls.size() / 2;
    for (std::size_t i = tail_start; i < scan.balls.size(); ++i) {
      xs.push_back(scan.balls[i].log2_inv_measure);
      ys.push_back(std::log2(scan.balls[i].beta_req));
    }
    if (xs.size() >= 2) {
      const double drift = fit_slope(xs, ys);
      rep.margin = drift;
      if (drift < -kTrendBand) {
        rep.verdict = Verdict::Fails;
        rep.detail = "per-ball beta decays with shrinking balls";
        return rep;
      }
    }
  }
  rep.verdict = Verdict::Holds;
  rep.witness_beta = snap_to_beta_grid(beta_min);
  return rep;
}

ConditionReport run_a1(const PhiFunction& phi, const PhiFunction& omega,
                       const A1SearchSpec& spec, Condition label,
                       const SamplingSpec& sampling) {
  return classify_a1(scan_a1(phi, omega, spec, sampling), label);
}

double family_hull_lo(const A1SearchSpec& spec) {
  double lo = std::numeric_limits<double>::infinity();
  for (const Ball& b : spec.ball_family) lo = std::min(lo, b.lo());
  return lo;
}

double family_hull_hi(const A1SearchSpec& spec) {
  double hi = -std::numeric_limits<double>::infinity();
  for (const Ball& b : spec.ball_family) hi = std::max(hi, b.hi());
  return hi;
}

}  // namespace

ConditionReport check_a1_omega(const PhiFunction& phi, const PhiFunction& omega,
                               const A1SearchSpec& spec) {
  if (spec.ball_family.empty()) throw PreconditionError("check_a1_omega: empty ball family");
  const ConditionReport a0 =
      check_a0(omega, family_hull_lo(spec), family_hull_hi(spec), spec.sampling);
  if (a0.verdict == Verdict::Fails) {
    throw PreconditionError("check_a1_omega: omega does not satisfy (A0)");
  }
  ConditionReport base = run_a1(phi, omega, spec, Condition::A1Omega, spec.sampling);
  ConditionReport fine =
      run_a1(phi, omega, spec, Condition::A1Omega, spec.sampling.refined(2));
  if (base.verdict != fine.verdict) {
    fine.verdict = Verdict::Inconclusive;
    fine.detail = "verdict flipped under 2x sampling refinement";
  }
  return fine;
}

ConditionReport check_a1(const PhiFunction& phi, const A1SearchSpec& spec) {
  ConditionReport rep = check_a1_omega(phi, phi, spec);
  rep.condition = Condition::A1;
  return rep;
}

ConditionReport check_a1_s(const PhiFunction& phi, double s, A1SearchSpec spec) {
  if (spec.s_star) s = *spec.s_star;
  if (!(s > 0.0)) throw DomainError("check_a1_s: s must be > 0");
  ConditionReport rep = check_a1_omega(phi, PhiFunction::power(s), spec);
  rep.condition = Condition::A1S;
  return rep;
}

// ---------------------------------------------------------------------------

std::pair<double, double> estimate_exponent_range(const PhiFunction& phi,
                                                  const IncDecSpec& spec) {
  if (!phi.has_derivative()) {
    throw UnsupportedOperation("estimate_exponent_range: family has no derivative");
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double x : stratified_samples(spec.x_lo, spec.x_hi, spec.x_count)) {
    for (double t : log_grid(spec.t_min, spec.t_max, spec.t_per_decade)) {
      const double ratio = t * phi.derivative(x, t) / phi(x, t);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
  }
  return {lo, hi};
}

double holder_quotient(const CoefficientFunction& a, double x_lo, double x_hi,
                       int samples) {
  if (!a.holder()) throw PreconditionError("holder_quotient: no declared Hölder data");
  const double alpha = a.holder()->exponent;
  const std::vector<double> xs = stratified_samples(x_lo, x_hi, samples);
  double worst = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const double d = std::abs(a(xs[i]) - a(xs[j]));
      worst = std::max(worst, d / std::pow(xs[j] - xs[i], alpha));
    }
  }
  return worst;
}

}  // namespace orlicz::conditions
