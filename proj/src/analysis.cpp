#include "orlicz/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace orlicz {

namespace {
constexpr double kClipFloor = 1e-300;
}

GridFunction::GridFunction(double lo, double hi, std::vector<double> values)
    : lo_(lo), hi_(hi), values_(std::move(values)) {
  if (!(hi_ > lo_)) throw DomainError("grid: need lo < hi");
  if (values_.size() < 2) throw DomainError("grid: need at least 2 nodes");
  for (double v : values_) {
    if (!std::isfinite(v)) throw DomainError("grid: values must be finite");
  }
}

GridFunction GridFunction::sample(double lo, double hi, int node_count,
                                  const std::function<double(double)>& f) {
  if (node_count < 2) throw DomainError("grid: need at least 2 nodes");
  std::vector<double> v(static_cast<std::size_t>(node_count));
  const double h = (hi - lo) / (node_count - 1);
  for (int i = 0; i < node_count; ++i) v[static_cast<std::size_t>(i)] = f(lo + h * i);
  return GridFunction(lo, hi, std::move(v));
}

double GridFunction::operator()(double x) const {
  if (x < lo_ - 1e-12 * (hi_ - lo_) || x > hi_ + 1e-12 * (hi_ - lo_)) {
    throw DomainError("grid: evaluation outside interval");
  }
  const double h = spacing();
  const double pos = (x - lo_) / h;
  const std::size_t i = std::min(values_.size() - 2, static_cast<std::size_t>(std::max(0.0, pos)));
  const double w = std::clamp(pos - static_cast<double>(i), 0.0, 1.0);
  return values_[i] * (1.0 - w) + values_[i + 1] * w;
}

GridFunction GridFunction::map(const std::function<double(double)>& f) const {
  std::vector<double> v(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) v[i] = f(values_[i]);
  return GridFunction(lo_, hi_, std::move(v));
}

GridFunction GridFunction::shifted(double c) const {
  return map([c](double v) { return v + c; });
}

GridFunction GridFunction::scaled(double c) const {
  return map([c](double v) { return v * c; });
}

GridFunction GridFunction::derivative() const {
  const double h = spacing();
  std::vector<double> d(values_.size());
  const std::size_t n = values_.size();
  d[0] = (values_[1] - values_[0]) / h;
  d[n - 1] = (values_[n - 1] - values_[n - 2]) / h;
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (values_[i + 1] - values_[i - 1]) / (2.0 * h);
  return GridFunction(lo_, hi_, std::move(d));
}

double modular(const PhiFunction& phi, const GridFunction& u) {
  std::vector<double> f(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) f[i] = phi(u.node(i), std::abs(u.value(i)));
  return composite_simpson(f, u.spacing());
}

double luxemburg_norm(const PhiFunction& phi, const GridFunction& u) {
  double umax = 0.0;
  for (double v : u.values()) umax = std::max(umax, std::abs(v));
  if (umax == 0.0) return 0.0;

  const auto rho = [&](double lambda) { return modular(phi, u.scaled(1.0 / lambda)); };

  double hi = 1.0;
  int guard = 0;
  while (rho(hi) > 1.0) {
    hi *= 2.0;
    if (hi > 1e150 || ++guard > 600) {
      throw ConvergenceError("luxemburg_norm: no finite bracket (modular stays above 1)", hi);
    }
  }
  double lo = hi;
  guard = 0;
  while (rho(lo / 2.0) <= 1.0) {
    lo /= 2.0;
    if (lo < 1e-150) return 0.0;
    if (++guard > 600) break;
  }
  lo /= 2.0;
  // invariant: rho(lo) > 1 >= rho(hi)
  while (hi - lo > 1e-10 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (rho(mid) <= 1.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double lebesgue_norm(const GridFunction& u, ExtReal s, bool normalized) {
  if (!s.is_finite()) {
    double m = 0.0;
    for (double v : u.values()) m = std::max(m, std::abs(v));
    return m;
  }
  const double se = s.value();
  if (!(se > 0.0)) {
    throw DomainError("lebesgue_norm: s must be > 0 (use integral_mean_power for s <= 0)");
  }
  std::vector<double> f(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) f[i] = std::pow(std::abs(u.value(i)), se);
  double integral = composite_simpson(f, u.spacing());
  if (normalized) integral /= (u.hi() - u.lo());
  return std::pow(integral, 1.0 / se);
}

double sobolev_norm(const PhiFunction& phi, const GridFunction& u) {
  return luxemburg_norm(phi, u) + luxemburg_norm(phi, u.derivative());
}

namespace {

// Trapezoid over the ball with linearly interpolated partial end cells;
// exact for constants.
double ball_integral(const GridFunction& u, const Ball& ball,
                     const std::function<double(double)>& transform) {
  if (ball.dim() != 1) throw UnsupportedOperation("ball integrals are 1-D");
  const double lo = ball.lo();
  const double hi = ball.hi();
  const double span = u.hi() - u.lo();
  if (lo < u.lo() - 1e-12 * span || hi > u.hi() + 1e-12 * span) {
    throw DomainError("ball exceeds the grid interval");
  }
  const double h = u.spacing();

  // node range strictly inside (lo, hi)
  const double eps = 1e-9 * h;
  std::size_t i0 = static_cast<std::size_t>(std::max(0.0, std::ceil((lo - u.lo()) / h - eps)));
  std::size_t i1 = static_cast<std::size_t>(
      std::min(static_cast<double>(u.size() - 1), std::floor((hi - u.lo()) / h + eps)));
  if (i0 > i1) {
    // ball inside one cell
    const double fa = transform(u(lo));
    const double fb = transform(u(hi));
    return 0.5 * (fa + fb) * (hi - lo);
  }
  std::vector<double> pieces;
  pieces.reserve(i1 - i0 + 3);
  // interior trapezoid
  for (std::size_t i = i0; i + 1 <= i1; ++i) {
    pieces.push_back(0.5 * (transform(u.value(i)) + transform(u.value(i + 1))) * h);
  }
  // partial end cells
  const double a_gap = u.node(i0) - lo;
  if (a_gap > eps) {
    pieces.push_back(0.5 * (transform(u(lo)) + transform(u.value(i0))) * a_gap);
  }
  const double b_gap = hi - u.node(i1);
  if (b_gap > eps) {
    pieces.push_back(0.5 * (transform(u.value(i1)) + transform(u(hi))) * b_gap);
  }
  return pairwise_sum(pieces);
}

}  // namespace

PowerMean integral_mean_power(const GridFunction& u, double ell, const Ball& ball) {
  if (ell == 0.0) throw DomainError("integral_mean_power: ell must be nonzero");
  bool clipped = false;
  const auto transform = [&](double v) {
    if (ell < 0.0) {
      if (v <= 0.0) {
        throw DomainError("integral_mean_power: non-positive value under negative exponent");
      }
      if (v < kClipFloor) {
        clipped = true;
        v = kClipFloor;
      }
    } else {
      v = std::abs(v);
    }
    return std::pow(v, ell);
  };
  const double integral = ball_integral(u, ball, transform);
  const double mean = integral / (ball.hi() - ball.lo());
  return {std::pow(mean, 1.0 / ell), clipped};
}

EssBounds ess_bounds(const GridFunction& u, const Ball& ball) {
  if (ball.dim() != 1) throw UnsupportedOperation("ess_bounds is 1-D");
  const double h = u.spacing();
  const double eps = 1e-9 * h;
  const double lo = std::max(ball.lo(), u.lo());
  const double hi = std::min(ball.hi(), u.hi());
  if (!(hi > lo)) throw DomainError("ess_bounds: ball does not meet the interval");
  const std::size_t i0 =
      static_cast<std::size_t>(std::max(0.0, std::ceil((lo - u.lo()) / h - eps)));
  const std::size_t i1 = static_cast<std::size_t>(
      std::min(static_cast<double>(u.size() - 1), std::floor((hi - u.lo()) / h + eps)));
  if (i0 > i1) throw DomainError("ess_bounds: no grid node inside the ball");
  double mn = std::numeric_limits<double>::infinity();
  double mx = -mn;
  for (std::size_t i = i0; i <= i1; ++i) {
    mn = std::min(mn, u.value(i));
    mx = std::max(mx, u.value(i));
  }
  return {mn, mx};
}

double holder_check(const PhiFunction& phi, const GridFunction& u, const GridFunction& v) {
  if (u.size() != v.size() || u.lo() != v.lo() || u.hi() != v.hi()) {
    throw PreconditionError("holder_check: u and v must share the grid");
  }
  std::vector<double> f(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) f[i] = std::abs(u.value(i) * v.value(i));
  const double product_integral = composite_simpson(f, u.spacing());
  const double nu = luxemburg_norm(phi, u);
  const double nv = luxemburg_norm(conjugate_function(phi), v);
  if (nu == 0.0 || nv == 0.0) return 0.0;
  return product_integral / (nu * nv);
}

}  // namespace orlicz
