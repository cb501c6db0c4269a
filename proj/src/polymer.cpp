#include "kpzlab/polymer.hpp"

#include <algorithm>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>
#include <cmath>
#include <stdexcept>

#include "kpzlab/logsum.hpp"
#include "kpzlab/rng.hpp"

namespace kpzlab {

double polygamma(double theta, int order) {
  if (theta <= 0.0) throw std::invalid_argument("polygamma: theta must be > 0");
  switch (order) {
    case 0:
      return boost::math::digamma(theta);
    case 1:
      return boost::math::trigamma(theta);
    case 2:
      return boost::math::polygamma(2, theta);
    default:
      throw std::invalid_argument("polygamma: order must be 0, 1 or 2");
  }
}

OYParams make_oy_params(double theta, double n) {
  if (n <= 0.0) throw std::invalid_argument("oy params: n must be > 0");
  OYParams p;
  p.theta = theta;
  p.n = n;
  p.psi0 = polygamma(theta, 0);
  p.psi1 = polygamma(theta, 1);
  p.psi2 = polygamma(theta, 2);
  p.a = -2.0 / p.psi2;
  p.b = p.a * p.psi1;
  p.c = theta * p.b - p.a * p.psi0;
  return p;
}

namespace {

// log of the trapezoid cell mass with e^{-inf} = 0 endpoint semantics
inline double oy_cell(double a, double b, double log_half_step) {
  if (a == kNegInf && b == kNegInf) return kNegInf;
  return logaddexp(a, b) + log_half_step;
}

// one layer of the prefix recursion: g <- B + log int e^{g - B}, in place,
// given the line increments for this layer
void oy_layer(std::vector<double>& g, const std::vector<double>& line,
              double step) {
  const double log_half_step = std::log(0.5 * step);
  const std::size_t m = g.size();
  LogSumAcc acc;
  double prev = g[0] - line[0];
  g[0] = kNegInf;
  for (std::size_t i = 1; i < m; ++i) {
    double cur = g[i] - line[i];
    acc.add(oy_cell(prev, cur, log_half_step));
    prev = cur;
    g[i] = line[i] + acc.value();
  }
}

}  // namespace

GridFunction oy_free_energy(int k, double x, GridSpec y_grid,
                            const std::vector<double>& drifts, uint64_t seed) {
  if (k < 1) throw std::invalid_argument("free energy: need k >= 1 lines");
  if (!drifts.empty() && static_cast<int>(drifts.size()) != k)
    throw std::invalid_argument("free energy: drifts length mismatch");
  if (std::abs(y_grid.lo - x) > 1e-9 * y_grid.step)
    throw std::invalid_argument("free energy: y grid must start at x");
  CounterRng rng(seed);
  const std::size_t m = y_grid.size();
  const double step = y_grid.step;
  const double sd = std::sqrt(step);  // variance-1 lines
  std::vector<double> line(m), g(m);

  // first line enters as its own metric B_1(y) - B_1(x)
  line[0] = 0.0;
  for (std::size_t i = 1; i < m; ++i) {
    double drift = drifts.empty() ? 0.0 : drifts[0];
    line[i] = line[i - 1] + drift * step + sd * rng.normal();
  }
  g = line;
  for (int j = 1; j < k; ++j) {
    double drift = drifts.empty() ? 0.0 : drifts[j];
    line[0] = 0.0;
    for (std::size_t i = 1; i < m; ++i)
      line[i] = line[i - 1] + drift * step + sd * rng.normal();
    oy_layer(g, line, step);
  }
  GridFunction out(y_grid);
  out.values = g;
  return out;
}

KernelSample oy_kernel(int k, GridSpec x_grid, GridSpec y_grid, double step,
                       uint64_t seed) {
  if (k < 1) throw std::invalid_argument("kernel: need k >= 1 lines");
  GridSpec tg{x_grid.lo, y_grid.hi, step};
  const std::size_t m = tg.size();
  CounterRng rng(seed);
  const double sd = std::sqrt(step);
  std::vector<std::vector<double>> lines(k, std::vector<double>(m));
  for (int j = 0; j < k; ++j) {
    lines[j][0] = 0.0;
    for (std::size_t i = 1; i < m; ++i)
      lines[j][i] = lines[j][i - 1] + sd * rng.normal();
  }
  KernelSample K(x_grid, y_grid);
  std::vector<double> g(m);
  for (std::size_t xi = 0; xi < x_grid.size(); ++xi) {
    std::size_t i0 = tg.nearest(x_grid.point(xi));
    // layer 1 relative to the start point
    for (std::size_t i = 0; i < m; ++i)
      g[i] = i >= i0 ? lines[0][i] - lines[0][i0] : kNegInf;
    for (int j = 1; j < k; ++j) {
      // prefix recursion, skipping everything left of the start
      const double log_half_step = std::log(0.5 * step);
      LogSumAcc acc;
      double prev = g[i0] - lines[j][i0];
      g[i0] = kNegInf;
      for (std::size_t i = i0 + 1; i < m; ++i) {
        double cur = g[i] - lines[j][i];
        acc.add(oy_cell(prev, cur, log_half_step));
        prev = cur;
        g[i] = lines[j][i] + acc.value();
      }
      for (std::size_t i = 0; i < i0; ++i) g[i] = kNegInf;
    }
    for (std::size_t yj = 0; yj < y_grid.size(); ++yj) {
      std::size_t iy = tg.nearest(y_grid.point(yj));
      if (iy > i0) K.at(xi, yj) = g[iy];
    }
  }
  return K;
}

double oy_scaled_kernel_sample(const OYParams& p, double x, double y,
                               uint64_t seed, double step) {
  const double n = p.n;
  const double n2 = n * n, n3 = n2 * n;
  const int k = static_cast<int>(std::ceil(p.a * n3));
  if (k < 1) throw std::invalid_argument("scaled kernel: need a n^3 >= 1");
  const double x0 = 2.0 * x * n2;
  const double y0 = p.b * n3 + 2.0 * y * n2;
  if (y0 <= x0)
    throw std::invalid_argument("scaled kernel: y domain does not cover x");
  GridSpec yg{x0, y0, step};
  GridFunction F = oy_free_energy(k, x0, yg, {}, seed);
  double f = F.values.back();
  return (f - p.c * n3 + 2.0 * (x - y) * n2 * p.psi1) / n;
}

std::vector<double> compose_bm_metric(double nu, double mu, double t_lo,
                                      const std::vector<double>& ys,
                                      double step, uint64_t seed) {
  double y_max = ys.empty() ? 0.0 : *std::max_element(ys.begin(), ys.end());
  GridSpec tg{t_lo, y_max, step};
  CounterRng rng(seed);
  const std::size_t m = tg.size();
  const double sd = std::sqrt(2.0 * step);  // variance 2
  std::vector<double> bn(m), bm(m);
  bn[0] = nu * t_lo;
  bm[0] = mu * t_lo;
  for (std::size_t i = 1; i < m; ++i) {
    bn[i] = bn[i - 1] + nu * step + sd * rng.normal();
    bm[i] = bm[i - 1] + mu * step + sd * rng.normal();
  }
  // G(y) = bm(y) + log int_{t_lo}^y e^{bn - bm}
  const double log_half_step = std::log(0.5 * step);
  LogSumAcc acc;
  std::vector<double> g(m, kNegInf);
  for (std::size_t i = 1; i < m; ++i) {
    acc.add(logaddexp(bn[i - 1] - bm[i - 1], bn[i] - bm[i]) + log_half_step);
    g[i] = bm[i] + acc.value();
  }
  std::vector<double> out;
  out.reserve(ys.size());
  for (double y : ys) out.push_back(g[tg.nearest(y)]);
  return out;
}

std::vector<double> compose_two_metrics(double nu, double mu,
                                        const std::vector<double>& ys,
                                        double step, uint64_t seed) {
  double y_max = ys.empty() ? 0.0 : *std::max_element(ys.begin(), ys.end());
  GridSpec tg{0.0, y_max, step};
  CounterRng rng(seed);
  const std::size_t m = tg.size();
  const double sd = std::sqrt(2.0 * step);
  std::vector<double> bn(m, 0.0), bm(m, 0.0);
  for (std::size_t i = 1; i < m; ++i) {
    bn[i] = bn[i - 1] + nu * step + sd * rng.normal();
    bm[i] = bm[i - 1] + mu * step + sd * rng.normal();
  }
  const double log_half_step = std::log(0.5 * step);
  LogSumAcc acc;
  std::vector<double> g(m, kNegInf);
  for (std::size_t i = 1; i < m; ++i) {
    acc.add(logaddexp(bn[i - 1] - bm[i - 1], bn[i] - bm[i]) + log_half_step);
    g[i] = bm[i] + acc.value();
  }
  std::vector<double> out;
  out.reserve(ys.size());
  for (double y : ys) out.push_back(g[tg.nearest(y)]);
  return out;
}

}  // namespace kpzlab
