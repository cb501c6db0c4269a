#include "kpzlab/brownian.hpp"

#include <algorithm>
#include <cmath>

namespace kpzlab {

PathSample sample_bm(double nu, GridSpec grid, uint64_t seed, double start) {
  if (grid.step <= 0.0) throw std::invalid_argument("bm: step must be positive");
  CounterRng rng(seed);
  PathSample p{grid, std::vector<double>(grid.size()), nu, seed};
  const double sd = std::sqrt(2.0 * grid.step);
  p.values[0] = start;
  for (std::size_t i = 1; i < p.values.size(); ++i)
    p.values[i] = p.values[i - 1] + nu * grid.step + sd * rng.normal();
  return p;
}

double path_interp(const PathSample& p, double t) {
  const GridSpec& g = p.grid;
  if (t <= g.lo) return p.values.front();
  if (t >= g.hi) return p.values.back();
  double u = (t - g.lo) / g.step;
  std::size_t i = std::min(static_cast<std::size_t>(u), g.size() - 2);
  double w = u - static_cast<double>(i);
  return p.values[i] + w * (p.values[i + 1] - p.values[i]);
}

GridFunction blp_sample(const DriftedEnsembleSpec& spec, GridSpec y_grid,
                        uint64_t seed) {
  spec.check();
  if (std::abs(y_grid.lo - spec.a) > 1e-9 * y_grid.step)
    throw std::invalid_argument("blp: y grid must start at a");
  const int n = spec.n();
  CounterRng rng(seed);
  GridFunction out(y_grid);
  std::vector<double> g(n);
  g[0] = spec.h[0];
  for (int l = 1; l < n; ++l) g[l] = std::max(spec.h[l], g[l - 1]);
  out.values[0] = g[n - 1];
  const double step = y_grid.step;
  const double sd = std::sqrt(2.0 * step);
  for (std::size_t k = 1; k < y_grid.size(); ++k) {
    g[0] += spec.nu[0] * step + sd * rng.normal();
    for (int l = 1; l < n; ++l) {
      double db = spec.nu[l] * step + sd * rng.normal();
      g[l] = std::max(g[l] + db, g[l - 1]);
    }
    out.values[k] = g[n - 1];
  }
  return out;
}

KernelSample blp_kernel(int n_lines, GridSpec x_grid, GridSpec y_grid,
                        double step, uint64_t seed) {
  if (n_lines < 1) throw std::invalid_argument("blp kernel: need lines");
  GridSpec tg{x_grid.lo, y_grid.hi, step};
  const std::size_t nt = tg.size();
  // shared driftless environment, line-major per time step
  CounterRng rng(seed);
  const double sd = std::sqrt(2.0 * step);
  std::vector<double> env(static_cast<std::size_t>(n_lines) * (nt - 1));
  for (std::size_t k = 0; k + 1 < nt; ++k)
    for (int l = 0; l < n_lines; ++l)
      env[k * n_lines + l] = sd * rng.normal();

  KernelSample K(x_grid, y_grid);
  std::vector<double> g(n_lines);
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    const std::size_t k0 = tg.nearest(x_grid.point(i));
    g[0] = 0.0;
    for (int l = 1; l < n_lines; ++l) g[l] = g[l - 1];  // jumps at time x
    std::size_t cur = k0;
    for (std::size_t j = 0; j < y_grid.size(); ++j) {
      std::size_t kj = tg.nearest(y_grid.point(j));
      if (kj < k0) continue;  // stays -inf
      for (; cur < kj; ++cur) {
        g[0] += env[cur * n_lines];
        for (int l = 1; l < n_lines; ++l)
          g[l] = std::max(g[l] + env[cur * n_lines + l], g[l - 1]);
      }
      K.at(i, j) = g[n_lines - 1];
    }
  }
  return K;
}

double blp2_exact(double h1, double h2, double tau, CounterRng& rng) {
  if (h1 > h2) throw std::invalid_argument("blp2: h must be nondecreasing");
  // D = B_1 - B_2 has variance 4 per unit time; running max given the
  // endpoint follows the reflection law
  // P(max <= m | D(tau) = d) = 1 - exp(-m(m - d)/(2 tau)).
  double d = 2.0 * std::sqrt(tau) * rng.normal();
  double u = rng.uniform();
  double m = 0.5 * (d + std::sqrt(d * d - 8.0 * tau * std::log1p(-u)));
  double sum1 = 2.0 * std::sqrt(tau) * rng.normal();  // Sigma(tau), indep of D
  double b2 = 0.5 * (sum1 - d);
  return b2 + std::max(h2, h1 + m);
}

double blp2_exact(double h1, double h2, double tau, uint64_t seed) {
  CounterRng rng(seed);
  return blp2_exact(h1, h2, tau, rng);
}

std::vector<double> ep_sample_conditioned(const DriftedEnsembleSpec& spec,
                                          double T, double step,
                                          const std::vector<double>& eval_points,
                                          uint64_t seed) {
  spec.check();
  const int n = spec.n();
  bool h_sep = true, nu_sep = true;
  for (int i = 0; i + 1 < n; ++i) {
    if (spec.nu[i] > spec.nu[i + 1])
      throw std::invalid_argument("conditioning needs nondecreasing nu");
    if (spec.h[i] >= spec.h[i + 1]) h_sep = false;
    if (spec.nu[i] >= spec.nu[i + 1]) nu_sep = false;
  }
  if (n > 1 && !h_sep && !nu_sep)
    throw std::invalid_argument(
        "conditioning needs strictly increasing h or nu");

  GridSpec tg{spec.a, T, step};
  const std::size_t nt = tg.size();
  const double sd = std::sqrt(2.0 * step);
  std::vector<std::vector<double>> lines(n, std::vector<double>(nt));
  CounterRng rng(seed);
  const long max_attempts = 2000000;
  for (long attempt = 0; attempt < max_attempts; ++attempt) {
    bool ok = true;
    for (int l = 0; l < n; ++l) lines[l][0] = spec.h[l];
    for (std::size_t k = 1; k < nt && ok; ++k) {
      for (int l = 0; l < n; ++l)
        lines[l][k] = lines[l][k - 1] + spec.nu[l] * step + sd * rng.normal();
      for (int l = 0; l + 1 < n; ++l)
        if (lines[l][k] >= lines[l + 1][k]) {
          ok = false;
          break;
        }
    }
    if (!ok) continue;
    std::vector<double> out;
    out.reserve(eval_points.size());
    for (double t : eval_points) out.push_back(lines[n - 1][tg.nearest(t)]);
    return out;
  }
  throw std::runtime_error("increase separation or shrink horizon");
}

PathSample classical_invert(const PathSample& path, GridSpec out_grid) {
  if (out_grid.lo <= 0.0)
    throw std::invalid_argument("classical inversion needs t > 0");
  PathSample out{out_grid, std::vector<double>(out_grid.size()), path.drift,
                 path.seed};
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    double t = out_grid.point(i);
    out.values[i] = t * path_interp(path, 1.0 / t);
  }
  return out;
}

PathSample time_invert(const PathSample& path, double a, GridSpec out_grid) {
  PathSample out{out_grid, std::vector<double>(out_grid.size()), path.drift,
                 path.seed};
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    double t = out_grid.point(i);
    if (std::abs(t + a) < 1e-12)
      throw std::invalid_argument("time inversion undefined at t = -a");
    out.values[i] = ((t + a) / a) * path_interp(path, -a * t / (t + a));
  }
  return out;
}

GridFunction wedge_curves(double n, double m, double a, GridSpec x_grid) {
  if (m >= n) throw std::invalid_argument("wedge curve: need m < n");
  GridFunction out(x_grid);
  const double tilt = std::sqrt(2.0 * n / a);
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    double x = x_grid.point(i);
    if (x + a < 0.0) continue;  // stays -inf
    out.values[i] = std::sqrt(8.0 * (n - m) * (x + a)) - x * tilt;
  }
  return out;
}

GridFunction density_approx(const GridFunction& f, double n, uint64_t seed,
                            double step) {
  f.check();
  for (double v : f.values)
    if (!std::isfinite(v))
      throw std::invalid_argument("density approx: f must be finite");
  const double a = std::pow(n, 0.25);
  const double b = f.grid.hi;  // support [x_lo, b], x_lo expected 0
  const int lines = static_cast<int>(n);
  const int m_n = std::min<int>(lines - 1,
                                static_cast<int>(std::floor(b * n / a)));
  if (step <= 0.0) step = 1e-2;

  // entry heights: line m+1 carries f(a m / n) - sqrt(8 a n) + m sqrt(2a/n)
  const double peak = std::sqrt(8.0 * a * n);
  const double gap = std::sqrt(2.0 * a / n);
  std::vector<double> h(lines, kNegInf);
  for (int m = 0; m <= m_n; ++m)
    h[m] = f.values[f.grid.nearest(a * m / n)] - peak + m * gap;

  // driftless variance-2 DP from -a to 0, tilt applied at readout
  GridSpec tg{-a, 0.0, step};
  CounterRng rng(seed);
  const double sd = std::sqrt(2.0 * step);
  std::vector<double> g(lines);
  g[0] = h[0];
  for (int l = 1; l < lines; ++l) g[l] = std::max(h[l], g[l - 1]);
  const double tilt = std::sqrt(2.0 * n / a);
  std::vector<double> top(tg.size());
  top[0] = g[lines - 1];
  for (std::size_t k = 1; k < tg.size(); ++k) {
    g[0] += sd * rng.normal();
    for (int l = 1; l < lines; ++l)
      g[l] = std::max(g[l] + sd * rng.normal(), g[l - 1]);
    top[k] = g[lines - 1];
  }

  GridFunction out(f.grid);
  for (std::size_t i = 0; i < f.grid.size(); ++i) {
    double u = f.grid.point(i);  // evaluate H_n at x = -u
    if (u < 0.0 || u > a) continue;
    std::size_t k = tg.nearest(-u);
    out.values[i] = top[k] + u * tilt;  // H_n(x) = G(x) - x * tilt at x = -u
  }
  return out;
}

}  // namespace kpzlab
