#include "kpzlab/semiring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kpzlab {

namespace {

void check_no_nan(const GridFunction& f) {
  for (double v : f.values)
    if (std::isnan(v)) throw std::invalid_argument("invalid function");
}

// log of the trapezoid mass over one cell; cells touching -inf carry no mass
// (an isolated finite node is a null set for the density integral)
inline double cell_term(double a, double b, double log_half_step) {
  if (a == kNegInf || b == kNegInf) return kNegInf;
  return logaddexp(a, b) + log_half_step;
}

}  // namespace

double supn_integrate(const GridFunction& f, double n) {
  f.check();
  check_no_nan(f);
  if (n <= 0.0) throw std::invalid_argument("supn: n must be positive");
  const double log_half_step = std::log(0.5 * f.grid.step);
  LogSumAcc acc;
  for (std::size_t i = 0; i + 1 < f.values.size(); ++i)
    acc.add(cell_term(n * f.values[i], n * f.values[i + 1], log_half_step));
  for (const Atom& a : f.atoms) acc.add(n * f.atom_value(a) + a.log_weight);
  double v = acc.value();
  return v == kNegInf ? kNegInf : v / n;
}

GridFunction compose_supn(const GridFunction& f, const KernelSample& K,
                          double n) {
  f.check();
  check_no_nan(f);
  if (!f.grid.same_as(K.x_grid))
    throw std::invalid_argument("compose: grid mismatch");
  const std::size_t nx = K.x_grid.size();
  const std::size_t ny = K.y_grid.size();
  const double log_half_step = std::log(0.5 * f.grid.step);
  GridFunction out(K.y_grid);
  for (std::size_t j = 0; j < ny; ++j) {
    LogSumAcc acc;
    double prev = (f.values[0] == kNegInf || K.at(0, j) == kNegInf)
                      ? kNegInf
                      : n * (f.values[0] + K.at(0, j));
    for (std::size_t i = 1; i < nx; ++i) {
      double cur = (f.values[i] == kNegInf || K.at(i, j) == kNegInf)
                       ? kNegInf
                       : n * (f.values[i] + K.at(i, j));
      if (prev != kNegInf && cur != kNegInf)
        acc.add(logaddexp(prev, cur) + log_half_step);
      prev = cur;
    }
    for (const Atom& a : f.atoms) {
      double k = K.at(K.x_grid.nearest(a.location), j);
      if (k != kNegInf) acc.add(n * (f.atom_value(a) + k) + a.log_weight);
    }
    double v = acc.value();
    out.values[j] = v == kNegInf ? kNegInf : v / n;
  }
  return out;
}

GridFunction compose_max(const GridFunction& f, const KernelSample& K) {
  f.check();
  check_no_nan(f);
  if (!f.grid.same_as(K.x_grid))
    throw std::invalid_argument("compose: grid mismatch");
  const std::size_t nx = K.x_grid.size();
  const std::size_t ny = K.y_grid.size();
  GridFunction out(K.y_grid);
  for (std::size_t j = 0; j < ny; ++j) {
    double best = kNegInf;
    for (std::size_t i = 0; i < nx; ++i) {
      if (f.values[i] == kNegInf) continue;
      double k = K.at(i, j);
      if (k == kNegInf) continue;
      best = std::max(best, f.values[i] + k);
    }
    for (const Atom& a : f.atoms) {
      double k = K.at(K.x_grid.nearest(a.location), j);
      if (k != kNegInf) best = std::max(best, f.atom_value(a) + k);
    }
    out.values[j] = best;
  }
  return out;
}

KernelSample kernel_compose_max(const KernelSample& K1,
                                const KernelSample& K2) {
  if (!K1.y_grid.same_as(K2.x_grid))
    throw std::invalid_argument("compose: grid mismatch");
  KernelSample out(K1.x_grid, K2.y_grid);
  const std::size_t nx = K1.x_grid.size();
  const std::size_t nm = K1.y_grid.size();
  const std::size_t ny = K2.y_grid.size();
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t k = 0; k < ny; ++k) {
      double best = kNegInf;
      for (std::size_t j = 0; j < nm; ++j) {
        double a = K1.at(i, j);
        double b = K2.at(j, k);
        if (a == kNegInf || b == kNegInf) continue;
        best = std::max(best, a + b);
      }
      out.at(i, k) = best;
    }
  return out;
}

KernelSample line_metric(const GridFunction& f) {
  f.check();
  for (double v : f.values)
    if (!std::isfinite(v))
      throw std::invalid_argument("line metric: f must be finite on its grid");
  const std::size_t n = f.values.size();
  KernelSample K(f.grid, f.grid);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) K.at(i, j) = f.values[j] - f.values[i];
  return K;
}

namespace {

// supn of f restricted to the window [x-eps, x+eps] clipped to the grid;
// end cells are cut at the window edge (linear interpolation of f) so that
// windows narrower than one grid step still carry their mass
double window_supn(const GridFunction& f, double n, double x, double eps) {
  const GridSpec& g = f.grid;
  const double xl = std::max(x - eps, g.lo);
  const double xr = std::min(x + eps, g.hi);
  LogSumAcc acc;
  auto interp = [&](double s) {
    std::size_t i = std::min(static_cast<std::size_t>(
                                 std::max(0.0, (s - g.lo) / g.step)),
                             g.size() - 2);
    double a = f.values[i], b = f.values[i + 1];
    if (a == kNegInf || b == kNegInf) return kNegInf;
    double w = (s - g.point(i)) / g.step;
    return a + w * (b - a);
  };
  // walk cell boundaries between xl and xr, trapezoid on each piece
  double s = xl;
  double fs = interp(xl);
  while (s < xr) {
    std::size_t i = static_cast<std::size_t>(
        std::max(0.0, (s - g.lo) / g.step + 1e-12));
    double t = std::min(xr, g.point(std::min(i + 1, g.size() - 1)));
    if (t <= s) t = xr;
    double ft = interp(t);
    if (fs != kNegInf && ft != kNegInf)
      acc.add(logaddexp(n * fs, n * ft) + std::log(0.5 * (t - s)));
    s = t;
    fs = ft;
  }
  for (const Atom& a : f.atoms)
    if (std::abs(a.location - x) <= eps)
      acc.add(n * f.atom_value(a) + a.log_weight);
  double v = acc.value();
  return v == kNegInf ? kNegInf : v / n;
}

bool all_thick(const GridFunction& f, double n, std::size_t i0, std::size_t i1,
               double eps) {
  for (std::size_t i = i0; i <= i1; ++i) {
    double fx = f.values[i];
    if (fx == kNegInf) continue;
    if (window_supn(f, n, f.grid.point(i), eps) < fx - eps) return false;
  }
  return true;
}

}  // namespace

double thickness(const GridFunction& f, double n, double a_lo, double a_hi,
                 int ladder_depth) {
  f.check();
  check_no_nan(f);
  if (a_lo < f.grid.lo - 1e-12 || a_hi > f.grid.hi + 1e-12 || a_hi <= a_lo)
    throw std::invalid_argument("thickness: A must lie inside the grid");
  const double len = a_hi - a_lo;
  std::size_t i0 = f.grid.nearest(a_lo);
  std::size_t i1 = f.grid.nearest(a_hi);
  if (!all_thick(f, n, i0, i1, len)) return len;  // ladder exhausted at the top
  // thickness is monotone in eps, bisect over the dyadic ladder
  int lo = 0, hi = ladder_depth;  // 2^-lo works; 2^-hi unknown
  while (lo < hi) {
    int mid = (lo + hi + 1) / 2;
    if (all_thick(f, n, i0, i1, std::ldexp(len, -mid)))
      lo = mid;
    else
      hi = mid - 1;
  }
  return std::ldexp(len, -lo);
}

}  // namespace kpzlab
