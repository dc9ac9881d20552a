#include "orlicz/phi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_nonneg_t(double t, const char* op) {
  if (!(t >= 0.0)) throw DomainError(std::string(op) + ": t must be >= 0");
}

// Conjugate of k t^p (p > 1): ((p-1)/p) (k p)^{-1/(p-1)} t^{p/(p-1)}.
double power_conjugate(double k, double p, double t) {
  if (t == 0.0) return 0.0;
  const double pprime = p / (p - 1.0);
  return (p - 1.0) / p * std::pow(k * p, -1.0 / (p - 1.0)) * std::pow(t, pprime);
}

}  // namespace

// ---------------------------------------------------------------------------
// CoefficientFunction

CoefficientFunction CoefficientFunction::constant(double value) {
  if (!(value >= 0.0)) throw DomainError("coefficient: constant must be >= 0");
  return CoefficientFunction("const:" + std::to_string(value),
                             [value](double) { return value; });
}

CoefficientFunction CoefficientFunction::negative_part_power(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("coefficient: alpha must be > 0");
  CoefficientFunction a("negpart^" + std::to_string(alpha), [alpha](double x) {
    return x < 0.0 ? std::pow(-x, alpha) : 0.0;
  });
  if (alpha <= 1.0) a.holder_ = HolderData{alpha, 1.0};
  return a;
}

CoefficientFunction CoefficientFunction::abs_power(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("coefficient: alpha must be > 0");
  CoefficientFunction a("abs^" + std::to_string(alpha),
                        [alpha](double x) { return std::pow(std::abs(x), alpha); });
  if (alpha <= 1.0) a.holder_ = HolderData{alpha, 1.0};
  return a;
}

CoefficientFunction CoefficientFunction::from(std::string name,
                                              std::function<double(double)> f) {
  return CoefficientFunction(std::move(name), std::move(f));
}

CoefficientFunction CoefficientFunction::with_holder(double exponent,
                                                     double constant) const {
  if (!(exponent > 0.0 && exponent <= 1.0) || !(constant >= 0.0)) {
    throw DomainError("coefficient: Hölder data needs exponent in (0,1], constant >= 0");
  }
  CoefficientFunction a = *this;
  a.holder_ = HolderData{exponent, constant};
  return a;
}

double CoefficientFunction::operator()(double x) const {
  const double v = eval_(x);
  if (!(v >= 0.0)) {
    throw DomainError("coefficient '" + name_ + "' negative at x = " + std::to_string(x));
  }
  return v;
}

// ---------------------------------------------------------------------------
// PhiFunction factories

PhiFunction PhiFunction::power(double p, double scale) {
  if (!(p > 0.0) || !(scale > 0.0)) throw DomainError("power: need p > 0, scale > 0");
  PhiFunction f;
  f.name_ = scale == 1.0 ? "power:" + std::to_string(p)
                         : "power:" + std::to_string(p) + "*" + std::to_string(scale);
  f.eval_ = [p, scale](double, double t) { return t == 0.0 ? 0.0 : scale * std::pow(t, p); };
  f.derivative_ = [p, scale](double, double t) { return scale * p * std::pow(t, p - 1.0); };
  f.inverse_ = [p, scale](double, double y) { return std::pow(y / scale, 1.0 / p); };
  if (p > 1.0) {
    f.conjugate_ = [p, scale](double, double t) { return power_conjugate(scale, p, t); };
  }
  f.declared_ = ExponentRange{p, p};
  return f;
}

PhiFunction PhiFunction::variable_exponent(CoefficientFunction pfun) {
  PhiFunction f;
  f.name_ = "varexp[" + pfun.name() + "]";
  f.eval_ = [pfun](double x, double t) { return t == 0.0 ? 0.0 : std::pow(t, pfun(x)); };
  f.derivative_ = [pfun](double x, double t) {
    const double p = pfun(x);
    return p * std::pow(t, p - 1.0);
  };
  f.inverse_ = [pfun](double x, double y) { return std::pow(y, 1.0 / pfun(x)); };
  f.conjugate_ = [pfun](double x, double t) {
    const double p = pfun(x);
    if (!(p > 1.0)) throw UnsupportedOperation("varexp conjugate: p(x) <= 1");
    return power_conjugate(1.0, p, t);
  };
  return f;
}

PhiFunction PhiFunction::double_phase(double p, double q, CoefficientFunction a) {
  if (!(p > 0.0) || !(q >= p)) throw DomainError("double_phase: need 0 < p <= q");
  PhiFunction f;
  f.name_ = "double-phase(p=" + std::to_string(p) + ",q=" + std::to_string(q) + ",a=" +
            a.name() + ")";
  f.eval_ = [p, q, a](double x, double t) {
    if (t == 0.0) return 0.0;
    return std::pow(t, p) + a(x) * std::pow(t, q);
  };
  f.derivative_ = [p, q, a](double x, double t) {
    return p * std::pow(t, p - 1.0) + a(x) * q * std::pow(t, q - 1.0);
  };
  f.declared_ = ExponentRange{p, q};
  return f;
}

PhiFunction PhiFunction::double_phase_max(double p, double q, CoefficientFunction a) {
  if (!(p > 0.0) || !(q > p)) throw DomainError("double_phase_max: need 0 < p < q");
  PhiFunction f;
  f.name_ = "double-phase-max(p=" + std::to_string(p) + ",q=" + std::to_string(q) +
            ",a=" + a.name() + ")";
  // phi(x,t) = int_0^t max{s^{p-1}, a s^{q-1}} ds; the branch crossing sits at
  // s_c = a^{-1/(q-p)}.
  f.eval_ = [p, q, a](double x, double t) {
    if (t == 0.0) return 0.0;
    const double ax = a(x);
    if (ax == 0.0) return std::pow(t, p) / p;
    const double sc = std::pow(ax, -1.0 / (q - p));
    if (t <= sc) return std::pow(t, p) / p;
    return std::pow(sc, p) / p + ax * (std::pow(t, q) - std::pow(sc, q)) / q;
  };
  f.derivative_ = [p, q, a](double x, double t) {
    return std::max(std::pow(t, p - 1.0), a(x) * std::pow(t, q - 1.0));
  };
  f.inverse_ = [p, q, a](double x, double y) {
    const double ax = a(x);
    if (ax == 0.0) return std::pow(p * y, 1.0 / p);
    const double sc = std::pow(ax, -1.0 / (q - p));
    const double y_c = std::pow(sc, p) / p;
    if (y <= y_c) return std::pow(p * y, 1.0 / p);
    return std::pow((y - y_c) * q / ax + std::pow(sc, q), 1.0 / q);
  };
  f.declared_ = ExponentRange{p, q};
  return f;
}

PhiFunction PhiFunction::power_log(CoefficientFunction pfun) {
  PhiFunction f;
  f.name_ = "power-log[" + pfun.name() + "]";
  const double e = std::exp(1.0);
  f.eval_ = [pfun, e](double x, double t) {
    return t == 0.0 ? 0.0 : std::pow(t, pfun(x)) * std::log(e + t);
  };
  f.derivative_ = [pfun, e](double x, double t) {
    const double p = pfun(x);
    return p * std::pow(t, p - 1.0) * std::log(e + t) + std::pow(t, p) / (e + t);
  };
  return f;
}

PhiFunction PhiFunction::weighted_power(double p, CoefficientFunction a) {
  if (!(p > 0.0)) throw DomainError("weighted_power: need p > 0");
  PhiFunction f;
  f.name_ = "weighted-power(p=" + std::to_string(p) + ",a=" + a.name() + ")";
  f.eval_ = [p, a](double x, double t) { return t == 0.0 ? 0.0 : a(x) * std::pow(t, p); };
  f.derivative_ = [p, a](double x, double t) { return a(x) * p * std::pow(t, p - 1.0); };
  f.inverse_ = [p, a](double x, double y) {
    const double ax = a(x);
    if (y == 0.0) return 0.0;
    if (ax == 0.0) {
      throw ConvergenceError("weighted_power inverse: phi(x,.) vanishes identically at x = " +
                                 std::to_string(x),
                             0.0);
    }
    return std::pow(y / ax, 1.0 / p);
  };
  if (p > 1.0) {
    f.conjugate_ = [p, a](double x, double t) {
      const double ax = a(x);
      if (ax == 0.0 && t > 0.0) {
        throw UnsupportedOperation("weighted_power conjugate: infinite (a(x) = 0)");
      }
      return t == 0.0 ? 0.0 : power_conjugate(ax, p, t);
    };
  }
  f.declared_ = ExponentRange{p, p};
  return f;
}

PhiFunction PhiFunction::custom(std::string name, Eval eval, std::optional<Eval> derivative,
                                std::optional<Eval> inverse,
                                std::optional<ExponentRange> declared) {
  PhiFunction f;
  f.name_ = std::move(name);
  f.eval_ = std::move(eval);
  if (derivative) f.derivative_ = std::move(*derivative);
  if (inverse) f.inverse_ = std::move(*inverse);
  if (declared) {
    if (!(declared->p <= declared->q)) {
      throw DomainError("declared exponents: need p <= q");
    }
    f.declared_ = *declared;
  }
  return f;
}

PhiFunction PhiFunction::with_declared_exponents(double p, double q) const {
  if (!(p <= q)) throw DomainError("declared exponents: need p <= q");
  PhiFunction f = *this;
  f.declared_ = ExponentRange{p, q};
  return f;
}

// ---------------------------------------------------------------------------
// PhiFunction operations

double PhiFunction::operator()(double x, double t) const {
  require_nonneg_t(t, "eval");
  return eval_(x, t);
}

double PhiFunction::derivative(double x, double t) const {
  if (!(t > 0.0)) throw DomainError("derivative: t must be > 0");
  if (!derivative_) {
    throw UnsupportedOperation("derivative: family '" + name_ + "' has none");
  }
  return derivative_(x, t);
}

double PhiFunction::inverse(double x, double y) const {
  if (!(y >= 0.0)) throw DomainError("inverse: y must be >= 0");
  if (y == 0.0) return 0.0;
  if (inverse_) return inverse_(x, y);
  return inverse_left([this, x](double t) { return eval_(x, t); }, y, 1.0, 1e-12);
}

double PhiFunction::conjugate(double x, double t) const {
  require_nonneg_t(t, "conjugate");
  if (t == 0.0) return 0.0;
  if (conjugate_) return conjugate_(x, t);
  if (!declared_ || !(declared_->p > 1.0)) {
    throw UnsupportedOperation(
        "conjugate: '" + name_ + "' needs declared exponents with p > 1 (sup may be infinite)");
  }
  // Scan a log grid for a bracket of the concave s -> s t - phi(x, s), then
  // ternary-refine to relative 1e-10 in s.
  const auto g = [&](double s) { return s * t - eval_(x, s); };
  double best_s = 1.0;
  double best_v = g(1.0);
  // march up / down by factor 2 until the profile decays on both sides
  double s = 1.0;
  int rising = 0;
  for (int i = 0; i < 2400; ++i) {
    s *= 2.0;
    if (s > 1e300) break;
    const double v = g(s);
    if (v > best_v) {
      best_v = v;
      best_s = s;
      rising = 0;
    } else if (++rising >= 3 && v < 0.0) {
      break;
    }
  }
  s = 1.0;
  rising = 0;
  for (int i = 0; i < 2400; ++i) {
    s /= 2.0;
    if (s < 1e-300) break;
    const double v = g(s);
    if (v > best_v) {
      best_v = v;
      best_s = s;
      rising = 0;
    } else if (++rising >= 3) {
      break;
    }
  }
  const double refined = ternary_max(g, best_s / 4.0, best_s * 4.0, 1e-10).second;
  return std::max(0.0, std::max(refined, best_v));
}

PhiFunction conjugate_function(const PhiFunction& phi) {
  std::optional<ExponentRange> dual;
  if (phi.declared_exponents()) {
    const double p = phi.declared_exponents()->p;
    const double q = phi.declared_exponents()->q;
    if (p > 1.0) dual = ExponentRange{q / (q - 1.0), p / (p - 1.0)};
  }
  return PhiFunction::custom(
      phi.name() + "*",
      [phi](double x, double t) { return phi.conjugate(x, t); },
      std::nullopt, std::nullopt, dual);
}

bool weak_phi_samples_ok(const PhiFunction& phi, double x_lo, double x_hi,
                         const SamplingSpec& spec) {
  const auto ts = log_grid(spec.s_min, spec.s_max, 8);
  for (double x : stratified_samples(x_lo, x_hi, spec.x_count)) {
    if (phi(x, 0.0) != 0.0) return false;
    double prev = 0.0;
    for (double t : ts) {
      const double v = phi(x, t);
      if (!(v >= prev) || !std::isfinite(v)) return false;
      prev = v;
    }
    if (!(prev > 1.0)) return false;  // no growth within the sampled range
  }
  return true;
}

// ---------------------------------------------------------------------------
// Ball

Ball::Ball(std::vector<double> center, double radius)
    : center_(std::move(center)), radius_(radius) {
  if (center_.empty()) throw DomainError("ball: dimension must be >= 1");
  if (!(radius_ > 0.0)) throw DomainError("ball: radius must be > 0");
}

Ball Ball::interval(double lo, double hi) {
  if (!(hi > lo)) throw DomainError("ball: need lo < hi");
  return Ball({0.5 * (lo + hi)}, 0.5 * (hi - lo));
}

double Ball::measure() const {
  const double n = dim();
  return std::pow(std::numbers::pi_v<double>, n / 2.0) /
         std::tgamma(n / 2.0 + 1.0) * std::pow(radius_, n);
}

double Ball::lo() const {
  if (dim() != 1) throw UnsupportedOperation("ball: lo() is 1-D only");
  return center_[0] - radius_;
}

double Ball::hi() const {
  if (dim() != 1) throw UnsupportedOperation("ball: hi() is 1-D only");
  return center_[0] + radius_;
}

std::vector<double> Ball::samples(int count) const {
  if (dim() != 1) throw UnsupportedOperation("ball: sampling is 1-D only");
  return stratified_samples(lo(), hi(), count);
}

double phi_inf_on_ball(const PhiFunction& phi, const Ball& ball, double t,
                       const SamplingSpec& spec) {
  double m = kInf;
  for (double x : ball.samples(spec.x_count)) m = std::min(m, phi(x, t));
  return m;
}

double phi_sup_on_ball(const PhiFunction& phi, const Ball& ball, double t,
                       const SamplingSpec& spec) {
  double m = -kInf;
  for (double x : ball.samples(spec.x_count)) m = std::max(m, phi(x, t));
  return m;
}

// ---------------------------------------------------------------------------

double sobolev_conjugate_inverse(const PhiFunction& omega, double t, int dim) {
  if (!(t > 0.0)) throw DomainError("sobolev_conjugate_inverse: t must be > 0");
  if (dim < 1) throw DomainError("sobolev_conjugate_inverse: dim must be >= 1");
  if (omega.declared_exponents() &&
      omega.declared_exponents()->q > static_cast<double>(dim) + 1e-12) {
    throw DomainError(
        "sobolev_conjugate_inverse: omega grows faster than t^n, conjugate not increasing");
  }
  return std::pow(t, -1.0 / dim) * omega.inverse(0.0, t);
}

double GrowthField::flux(double x, double xi) const {
  if (xi == 0.0) return 0.0;
  const double mag = phi.derivative(x, std::abs(xi));
  return xi > 0.0 ? mag : -mag;
}

GrowthField GrowthField::canonical(PhiFunction phi) {
  if (!phi.declared_exponents()) {
    throw PreconditionError("GrowthField::canonical: needs declared exponents");
  }
  const double nu = phi.declared_exponents()->p;
  const double lambda = phi.declared_exponents()->q;
  return GrowthField{std::move(phi), nu, lambda};
}

}  // namespace orlicz
