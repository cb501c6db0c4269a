#include "kpzlab/she.hpp"

#include <cmath>
#include <stdexcept>

#include "kpzlab/rng.hpp"

namespace kpzlab {

namespace {

std::vector<double> init_field(const GridFunction& init) {
  init.check();
  const double eps = init.grid.step;
  std::vector<double> z(init.grid.size(), 0.0);
  for (std::size_t i = 0; i < z.size(); ++i) {
    double v = init.values[i];
    if (v != kNegInf) {
      if (std::isnan(v) || std::isinf(v))
        throw std::invalid_argument("she: invalid initial condition");
      z[i] = std::exp(v);
    }
  }
  for (const Atom& a : init.atoms)
    z[init.grid.nearest(a.location)] += std::exp(a.log_weight) / eps;
  return z;
}

struct Stepper {
  double eps, delta, noise_sd, comp;
  long steps;

  Stepper(double eps_, double delta_req, double t_final, bool zero_noise) {
    eps = eps_;
    double dmax = 0.5 * eps * eps;
    double d = delta_req > 0.0 ? delta_req : dmax;
    if (d > dmax + 1e-15) throw std::invalid_argument("reduce delta");
    steps = static_cast<long>(std::ceil(t_final / d - 1e-9));
    if (steps < 1) steps = 1;
    delta = t_final / static_cast<double>(steps);
    noise_sd = zero_noise ? 0.0 : std::sqrt(delta / eps);
    comp = zero_noise ? 0.0 : -0.5 * delta / eps;
  }

  // one step in place; next holds scratch; rng used only when noisy
  void advance(std::vector<double>& z, std::vector<double>& next,
               CounterRng& rng) const {
    const std::size_t m = z.size();
    const double r = 0.5 * delta / (eps * eps);
    next[0] = 0.0;
    next[m - 1] = 0.0;
    for (std::size_t i = 1; i + 1 < m; ++i)
      next[i] = z[i] + r * (z[i + 1] - 2.0 * z[i] + z[i - 1]);
    if (noise_sd > 0.0) {
      for (std::size_t i = 1; i + 1 < m; ++i)
        next[i] *= std::exp(noise_sd * rng.normal() + comp);
    }
    z.swap(next);
    for (double v : z)
      if (!(std::abs(v) < 1e30)) throw std::runtime_error("reduce delta");
  }
};

}  // namespace

SHEField she_solve(const GridFunction& init, double t_final,
                   const SHEParams& params, uint64_t seed) {
  if (t_final <= 0.0) throw std::invalid_argument("she: t_final must be > 0");
  Stepper st(init.grid.step, params.delta, t_final, params.zero_noise);
  CounterRng rng(seed);
  std::vector<double> z = init_field(init);
  std::vector<double> scratch(z.size());
  for (long k = 0; k < st.steps; ++k) st.advance(z, scratch, rng);
  return SHEField{init.grid, t_final, std::move(z)};
}

KernelSample she_kernel(const std::vector<double>& xs,
                        const std::vector<double>& ys, GridSpec domain,
                        double t_final, const SHEParams& params,
                        uint64_t seed) {
  Stepper st(domain.step, params.delta, t_final, params.zero_noise);
  CounterRng rng(seed);
  const std::size_t m = domain.size();
  std::vector<std::vector<double>> z(xs.size(), std::vector<double>(m, 0.0));
  for (std::size_t q = 0; q < xs.size(); ++q)
    z[q][domain.nearest(xs[q])] = 1.0 / domain.step;
  std::vector<double> noise(m), scratch(m);
  for (long k = 0; k < st.steps; ++k) {
    if (st.noise_sd > 0.0)
      for (std::size_t i = 1; i + 1 < m; ++i)
        noise[i] = std::exp(st.noise_sd * rng.normal() + st.comp);
    for (auto& field : z) {
      const double r = 0.5 * st.delta / (st.eps * st.eps);
      scratch[0] = 0.0;
      scratch[m - 1] = 0.0;
      for (std::size_t i = 1; i + 1 < m; ++i) {
        scratch[i] = field[i] + r * (field[i + 1] - 2.0 * field[i] + field[i - 1]);
        if (st.noise_sd > 0.0) scratch[i] *= noise[i];
      }
      field.swap(scratch);
      for (double v : field)
        if (!(std::abs(v) < 1e30)) throw std::runtime_error("reduce delta");
    }
  }
  GridSpec xg{xs.front(), xs.back(),
              xs.size() > 1 ? (xs.back() - xs.front()) /
                                  static_cast<double>(xs.size() - 1)
                            : 1.0};
  GridSpec yg{ys.front(), ys.back(),
              ys.size() > 1 ? (ys.back() - ys.front()) /
                                  static_cast<double>(ys.size() - 1)
                            : 1.0};
  KernelSample K(xg, yg);
  for (std::size_t q = 0; q < xs.size(); ++q)
    for (std::size_t j = 0; j < ys.size(); ++j) {
      double v = z[q][domain.nearest(ys[j])];
      K.at(q, j) = v > 0.0 ? std::log(v) : kNegInf;
    }
  return K;
}

double kpz_scaled_kernel_sample(double n, double x, double y, double eps,
                                const SHEParams& params, uint64_t seed) {
  const double n2 = n * n, n3 = n2 * n;
  const double t = 2.0 * n3;
  const double xs = 2.0 * n2 * x, ys = 2.0 * n2 * y;
  const double pad = 6.0 * std::sqrt(t) + 1.0;
  GridSpec domain{std::min(xs, ys) - pad, std::max(xs, ys) + pad, eps};
  GridFunction init = GridFunction::narrow_wedge(domain, xs);
  SHEField field = she_solve(init, t, params, seed);
  double v = field.z[domain.nearest(ys)];
  if (v <= 0.0) return kNegInf;
  return (std::log(v) + n3 / 12.0) / n;
}

}  // namespace kpzlab
