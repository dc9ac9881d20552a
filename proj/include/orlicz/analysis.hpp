#ifndef ORLICZ_ANALYSIS_HPP
#define ORLICZ_ANALYSIS_HPP

#include <functional>
#include <vector>

#include "orlicz/phi.hpp"

namespace orlicz {

// Samples of a scalar function on a uniform 1-D grid, with quadrature
// semantics (composite Simpson over the nodes).
class GridFunction {
 public:
  GridFunction(double lo, double hi, std::vector<double> values);
  static GridFunction sample(double lo, double hi, int node_count,
                             const std::function<double(double)>& f);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double spacing() const { return (hi_ - lo_) / (static_cast<double>(size()) - 1.0); }
  std::size_t size() const { return values_.size(); }
  double node(std::size_t i) const { return lo_ + spacing() * static_cast<double>(i); }
  double value(std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }

  // Linear interpolation inside [lo, hi].
  double operator()(double x) const;

  GridFunction map(const std::function<double(double)>& f) const;
  GridFunction shifted(double c) const;
  GridFunction scaled(double c) const;
  // Central differences in the interior, one-sided at the ends.
  GridFunction derivative() const;

 private:
  double lo_, hi_;
  std::vector<double> values_;
};

// rho_phi(u) = int phi(x, |u(x)|) dx over the grid interval.
double modular(const PhiFunction& phi, const GridFunction& u);

// inf{ lambda > 0 : rho_phi(u/lambda) <= 1 }, bisected to 1e-10 relative.
double luxemburg_norm(const PhiFunction& phi, const GridFunction& u);

// (int |u|^s)^{1/s}; normalized uses the integral mean. s = inf gives the
// grid essential sup. s <= 0 is rejected (use integral_mean_power).
double lebesgue_norm(const GridFunction& u, ExtReal s, bool normalized = false);

// ||u||_phi + ||u'||_phi with the grid derivative.
double sobolev_norm(const PhiFunction& phi, const GridFunction& u);

struct PowerMean {
  double value;
  bool clipped;  // u fell below the 1e-300 floor under a negative exponent
};

// (mean over ball of u^ell)^{1/ell}, ell != 0; ell < 0 requires u > 0.
PowerMean integral_mean_power(const GridFunction& u, double ell, const Ball& ball);

struct EssBounds {
  double inf;
  double sup;
};

// Node extrema inside the ball (grid semantics of ess inf / ess sup).
EssBounds ess_bounds(const GridFunction& u, const Ball& ball);

// int |u v| / (||u||_phi ||v||_{phi*}); bounded by 2 up to tolerance.
double holder_check(const PhiFunction& phi, const GridFunction& u, const GridFunction& v);

}  // namespace orlicz

#endif
