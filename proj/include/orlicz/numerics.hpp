#ifndef ORLICZ_NUMERICS_HPP
#define ORLICZ_NUMERICS_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "orlicz/errors.hpp"

namespace orlicz {

// Extended real in [0, +inf]. Used for Lebesgue exponents s and the limiting
// exponent; infinity is a real state, never a float sentinel.
class ExtReal {
 public:
  constexpr ExtReal(double value) : value_(value), infinite_(false) {}  // NOLINT(google-explicit-constructor)
  static constexpr ExtReal inf() { return ExtReal(true); }

  constexpr bool is_finite() const { return !infinite_; }
  double value() const {
    if (infinite_) throw DomainError("ExtReal: value() on infinity");
    return value_;
  }
  // 1/s with the convention 1/inf = 0; used in exponents like 1 + 1/s.
  constexpr double reciprocal_or_zero() const { return infinite_ ? 0.0 : 1.0 / value_; }

  friend constexpr bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ && b.infinite_;
    return a.value_ == b.value_;
  }
  friend constexpr bool operator<(const ExtReal& a, const ExtReal& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }

  std::string str() const;

 private:
  explicit constexpr ExtReal(bool) : value_(0.0), infinite_(true) {}
  double value_;
  bool infinite_;
};

struct QuadratureControl {
  double abs_tol = 1e-12;
  double rel_tol = 1e-9;
  int max_depth = 48;
};

// Adaptive Simpson on [a, b]. Throws ConvergenceError (with the partial value)
// if the depth limit is reached before the tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureControl& ctl = {});

// Composite Simpson over uniformly spaced samples (3/8 rule patches an odd
// interval count, trapezoid for a single interval).
double composite_simpson(std::span<const double> values, double spacing);

// Deterministic pairwise summation.
double pairwise_sum(std::span<const double> values);

// Largest t in a geometric grid {seed * ratio^k} bracketing state for monotone
// inverses. Both inverses assume f non-decreasing and finite on (0, inf).
//
// inverse_left : smallest t with f(t) >= y  (left-continuous inverse)
// inverse_right: largest  t with f(t) <= y  (right-continuous inverse)
//
// Plateaus resolve to the stated endpoint by the bisection invariant.
double inverse_left(const std::function<double(double)>& f, double y,
                    double seed = 1.0, double rel_tol = 1e-12);
double inverse_right(const std::function<double(double)>& f, double y,
                     double seed = 1.0, double rel_tol = 1e-12);

// Maximum of a concave (or plateau-unimodal) function on [lo, hi] by ternary
// refinement; returns {argmax, max}.
std::pair<double, double> ternary_max(const std::function<double(double)>& f,
                                      double lo, double hi, double rel_tol = 1e-10);

// Log-spaced grid with `per_decade` points per decade,, endpoints included.
std::vector<double> log_grid(double lo, double hi, int per_decade);
// Log-spaced grid with a fixed total count >= 2.
std::vector<double> log_grid_n(double lo, double hi, int count);

// Stratified midpoints of [lo, hi] plus both endpoints and the midpoint,
// sorted. The deterministic realization of "a.e. x" sampling.
std::vector<double> stratified_samples(double lo, double hi, int count);

// Least-squares slope of y against x.
double fit_slope(std::span<const double> x, std::span<const double> y);

}  // namespace orlicz

#endif
