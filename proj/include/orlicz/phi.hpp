#ifndef ORLICZ_PHI_HPP
#define ORLICZ_PHI_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orlicz/errors.hpp"
#include "orlicz/numerics.hpp"

namespace orlicz {

// Non-negative coefficient x -> a(x) with optional declared Hölder data.
class CoefficientFunction {
 public:
  struct HolderData {
    double exponent;  // in (0, 1]
    double constant;  // >= 0
  };

  static CoefficientFunction constant(double value);
  // max{-x, 0}^alpha, the canonical one-sided degenerate weight.
  static CoefficientFunction negative_part_power(double alpha);
  // |x|^alpha, degenerate at the origin.
  static CoefficientFunction abs_power(double alpha);
  static CoefficientFunction from(std::string name, std::function<double(double)> f);

  CoefficientFunction with_holder(double exponent, double constant) const;

  double operator()(double x) const;
  const std::optional<HolderData>& holder() const { return holder_; }
  const std::string& name() const { return name_; }

 private:
  CoefficientFunction(std::string name, std::function<double(double)> f)
      : name_(std::move(name)), eval_(std::move(f)) {}
  std::string name_;
  std::function<double(double)> eval_;
  std::optional<HolderData> holder_;
};

struct ExponentRange {
  double p;
  double q;
};

// Sampling resolution knobs shared by psi_r and the condition checkers.
// Continua (inner sup over s, inf over x in a ball) are realized as
// deterministic grids; `refined` is the documented refinement knob.
struct SamplingSpec {
  int x_count = 64;              // stratified points per ball (plus endpoints/center)
  int s_points_per_decade = 512; // log grid density for the inner sup
  double s_min = 1e-8;
  double s_max = 1e8;
  int t_points = 24;             // window sampling in the (A1) checkers

  SamplingSpec refined(int factor = 2) const {
    SamplingSpec r = *this;
    r.x_count *= factor;
    r.s_points_per_decade *= factor;
    r.t_points *= factor;
    return r;
  }
};

// A generalized Orlicz integrand phi(x, t): non-decreasing in t, phi(x,0)=0.
// Value type; built-in families carry closed-form derivative/inverse/conjugate
// where available, everything else falls back to bracketing + bisection or
// grid-scan + ternary refinement. All methods are const and stateless, safe
// for concurrent use.
class PhiFunction {
 public:
  using Eval = std::function<double(double x, double t)>;

  static PhiFunction power(double p, double scale = 1.0);
  static PhiFunction variable_exponent(CoefficientFunction p);
  // Sum-form double phase t^p + a(x) t^q.
  static PhiFunction double_phase(double p, double q, CoefficientFunction a);
  // Max-form double phase: the antiderivative of max{t^{p-1}, a(x) t^{q-1}}.
  static PhiFunction double_phase_max(double p, double q, CoefficientFunction a);
  // t^{p(x)} log(e + t).
  static PhiFunction power_log(CoefficientFunction p);
  // a(x) t^p.
  static PhiFunction weighted_power(double p, CoefficientFunction a);
  static PhiFunction custom(std::string name, Eval eval,
                            std::optional<Eval> derivative = std::nullopt,
                            std::optional<Eval> inverse = std::nullopt,
                            std::optional<ExponentRange> declared = std::nullopt);

  PhiFunction with_declared_exponents(double p, double q) const;

  // phi(x, t); throws DomainError for t < 0.
  double operator()(double x, double t) const;
  // d/dt phi(x, t) for t > 0; UnsupportedOperation if the family has none.
  double derivative(double x, double t) const;
  bool has_derivative() const { return static_cast<bool>(derivative_); }
  // Left-continuous generalized inverse: smallest t with phi(x, t) >= y.
  double inverse(double x, double y) const;
  // Conjugate sup_{s>=0} (s t - phi(x, s)); needs declared p > 1 unless the
  // family has a closed form.
  double conjugate(double x, double t) const;

  const std::optional<ExponentRange>& declared_exponents() const { return declared_; }
  const std::string& name() const { return name_; }

 private:
  PhiFunction() = default;
  std::string name_;
  Eval eval_;
  Eval derivative_;
  Eval inverse_;
  Eval conjugate_;
  std::optional<ExponentRange> declared_;
};

// The conjugate as a PhiFunction value (numeric unless the base had a closed
// form); declared exponents become the dual pair (q', p').
PhiFunction conjugate_function(const PhiFunction& phi);

// Sampled check of the weak Phi-function axioms on [x_lo, x_hi]:
// phi(x, 0) = 0, t -> phi(x, t) non-decreasing on a log grid, and growth
// beyond 1 within the sampled range.
bool weak_phi_samples_ok(const PhiFunction& phi, double x_lo, double x_hi,
                         const SamplingSpec& spec = {});

// An n-dimensional ball; in 1-D an interval.
class Ball {
 public:
  Ball(std::vector<double> center, double radius);
  static Ball interval(double lo, double hi);

  int dim() const { return static_cast<int>(center_.size()); }
  double radius() const { return radius_; }
  const std::vector<double>& center() const { return center_; }
  double measure() const;  // n-ball volume; 2r in 1-D

  // 1-D accessors (throw for dim > 1).
  double lo() const;
  double hi() const;
  // Deterministic sample set of a 1-D ball: stratified + endpoints + center.
  std::vector<double> samples(int count) const;

 private:
  std::vector<double> center_;
  double radius_;
};

// Infimum / supremum of phi(., t) over the sampled ball.
double phi_inf_on_ball(const PhiFunction& phi, const Ball& ball, double t,
                       const SamplingSpec& spec = {});
double phi_sup_on_ball(const PhiFunction& phi, const Ball& ball, double t,
                       const SamplingSpec& spec = {});

// (omega#)^{-1}(t) = t^{-1/n} omega^{-1}(t); omega must not grow faster than
// t^n (declared upper exponent <= n) or the conjugate is not increasing.
double sobolev_conjugate_inverse(const PhiFunction& omega, double t, int dim);

// Growth field nu * phi(x,|xi|) <= f(x,xi).xi, |f(x,xi)||xi| <= Lambda * phi(x,|xi|).
// `flux` is the canonical 1-D field phi'(x,|xi|) sign(xi).
struct GrowthField {
  PhiFunction phi;
  double nu;
  double lambda;

  double flux(double x, double xi) const;
  // nu = p, lambda = q from the declared exponent range.
  static GrowthField canonical(PhiFunction phi);
};

}  // namespace orlicz

#endif
