#include "orlicz/numerics.hpp"

#include <algorithm>
#include <cstdio>

namespace orlicz {

std::string ExtReal::str() const {
  if (infinite_) return "inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value_);
  return buf;
}

namespace {

struct SimpsonState {
  const std::function<double(double)>* f;
  double abs_tol;
  double rel_tol;
  int max_depth;
  double scale;  // running magnitude estimate for the relative tolerance
};

double simpson(double fa, double fm, double fb, double a, double b) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(SimpsonState& st, double a, double b, double fa, double fm, double fb,
             double whole, double eps, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = (*st.f)(lm);
  const double frm = (*st.f)(rm);
  const double left = simpson(fa, flm, fm, a, m);
  const double right = simpson(fm, frm, fb, m, b);
  const double delta = left + right - whole;
  st.scale = std::max(st.scale, std::abs(left + right));
  const double goal = std::max({eps, st.abs_tol * (b - a) / 2.0, st.rel_tol * st.scale * 1e-2});
  if (std::abs(delta) <= 15.0 * goal || (b - a) < 1e-300) {
    return left + right + delta / 15.0;
  }
  if (depth >= st.max_depth) {
    throw ConvergenceError("adaptive quadrature: depth limit reached on [" +
                               std::to_string(a) + ", " + std::to_string(b) + "]",
                           left + right + delta / 15.0);
  }
  return adapt(st, a, m, fa, flm, fm, left, eps / 2.0, depth + 1) +
         adapt(st, m, b, fm, frm, fb, right, eps / 2.0, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureControl& ctl) {
  if (a == b) return 0.0;
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = simpson(fa, fm, fb, a, b);
  SimpsonState st{&f, ctl.abs_tol, ctl.rel_tol, ctl.max_depth, std::abs(whole)};
  const double eps = std::max(ctl.abs_tol, ctl.rel_tol * std::abs(whole));
  return sign * adapt(st, a, b, fa, fm, fb, whole, eps, 0);
}

double composite_simpson(std::span<const double> v, double h) {
  const std::size_t n = v.size();
  if (n < 2) throw PreconditionError("composite_simpson: need at least 2 nodes");
  if (n == 2) return 0.5 * h * (v[0] + v[1]);
  std::size_t intervals = n - 1;
  std::vector<double> terms;
  terms.reserve(n);
  std::size_t i = 0;
  // Pair off Simpson panels; if the interval count is odd, finish with 3/8.
  std::size_t simpson_end = (intervals % 2 == 0) ? intervals : intervals - 3;
  for (; i + 2 <= simpson_end; i += 2) {
    terms.push_back(h / 3.0 * (v[i] + 4.0 * v[i + 1] + v[i + 2]));
  }
  if (intervals % 2 != 0) {
    if (intervals == 1) {
      terms.push_back(0.5 * h * (v[0] + v[1]));
    } else {
      const std::size_t j = n - 4;
      terms.push_back(3.0 * h / 8.0 * (v[j] + 3.0 * v[j + 1] + 3.0 * v[j + 2] + v[j + 3]));
    }
  }
  return pairwise_sum(terms);
}

double pairwise_sum(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

namespace {

// Expands a bracket [lo, hi] with f(lo) < y <= f(hi) (or reports failure).
struct Bracket {
  double lo, hi;
};

Bracket expand_bracket(const std::function<double(double)>& f, double y, double seed) {
  double hi = seed;
  int guard = 0;
  while (f(hi) < y) {
    hi *= 4.0;
    if (hi > 1e300 || ++guard > 600) {
      throw ConvergenceError(
          "monotone inverse: no upper bracket below overflow bound; f(" +
              std::to_string(hi / 4.0) + ") = " + std::to_string(f(hi / 4.0)) +
              " < target " + std::to_string(y),
          hi / 4.0);
    }
  }
  double lo = std::min(seed, hi / 4.0);
  guard = 0;
  while (f(lo) >= y) {
    lo /= 4.0;
    if (lo < 1e-300) return {0.0, hi};  // inverse collapses to 0
    if (++guard > 600) break;
  }
  return {lo, hi};
}

}  // namespace

double inverse_left(const std::function<double(double)>& f, double y, double seed,
                    double rel_tol) {
  if (y <= 0.0) return 0.0;
  auto [lo, hi] = expand_bracket(f, y, seed);
  if (lo == 0.0 && f(hi * rel_tol) >= y) {
    // f already exceeds y arbitrarily close to 0.
    return 0.0;
  }
  // invariant: f(lo) < y <= f(hi)
  while (hi - lo > rel_tol * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) >= y) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double inverse_right(const std::function<double(double)>& f, double y, double seed,
                     double rel_tol) {
  if (f(seed) <= y) {
    double lo = seed;
    int guard = 0;
    while (f(lo * 4.0) <= y) {
      lo *= 4.0;
      if (lo > 1e300 || ++guard > 600) {
        throw ConvergenceError("monotone inverse: function stays below target", lo);
      }
    }
    double hi = lo * 4.0;
    while (hi - lo > rel_tol * hi) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (f(mid) <= y) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return lo;
  }
  double hi = seed;
  int guard = 0;
  while (f(hi / 4.0) > y) {
    hi /= 4.0;
    if (hi < 1e-300) return 0.0;
    if (++guard > 600) break;
  }
  double lo = hi / 4.0;
  while (hi - lo > rel_tol * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) <= y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::pair<double, double> ternary_max(const std::function<double(double)>& f, double lo,
                                      double hi, double rel_tol) {
  if (lo > hi) std::swap(lo, hi);
  int guard = 0;
  while (hi - lo > rel_tol * std::max(1e-300, hi) && ++guard < 400) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (f(m1) < f(m2)) {
      lo = m1;
    } else {
      hi = m2;
    }
  }
  const double s = 0.5 * (lo + hi);
  return {s, f(s)};
}

std::vector<double> log_grid(double lo, double hi, int per_decade) {
  if (!(lo > 0.0) || !(hi > lo)) throw PreconditionError("log_grid: need 0 < lo < hi");
  const double decades = std::log10(hi / lo);
  const int n = std::max(2, static_cast<int>(std::ceil(decades * per_decade)) + 1);
  return log_grid_n(lo, hi, n);
}

std::vector<double> log_grid_n(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi > lo) || count < 2) {
    throw PreconditionError("log_grid_n: need 0 < lo < hi, count >= 2");
  }
  std::vector<double> g(static_cast<std::size_t>(count));
  const double llo = std::log(lo);
  const double lhi = std::log(hi);
  for (int i = 0; i < count; ++i) {
    g[static_cast<std::size_t>(i)] = std::exp(llo + (lhi - llo) * i / (count - 1));
  }
  g.front() = lo;
  g.back() = hi;
  return g;
}

std::vector<double> stratified_samples(double lo, double hi, int count) {
  if (!(hi > lo) || count < 1) {
    throw PreconditionError("stratified_samples: need lo < hi, count >= 1");
  }
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(count) + 3);
  xs.push_back(lo);
  const double w = (hi - lo) / count;
  for (int i = 0; i < count; ++i) xs.push_back(lo + (i + 0.5) * w);
  xs.push_back(0.5 * (lo + hi));
  xs.push_back(hi);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

double fit_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw PreconditionError("fit_slope: need matching arrays of size >= 2");
  }
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw DomainError("fit_slope: degenerate abscissae");
  return (n * sxy - sx * sy) / denom;
}

}  // namespace orlicz
