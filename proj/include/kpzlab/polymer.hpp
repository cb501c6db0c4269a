#pragma once

#include <cstdint>
#include <vector>

#include "kpzlab/grid.hpp"

namespace kpzlab {

// Psi^(order)(theta) for order 0, 1, 2
double polygamma(double theta, int order);

// Scaling constants of the O'Connell-Yor kernel at inverse temperature theta.
struct OYParams {
  double theta = 1.0;
  double n = 1.0;
  double psi0 = 0.0, psi1 = 0.0, psi2 = 0.0;
  double a = 0.0, b = 0.0, c = 0.0;
};

OYParams make_oy_params(double theta, double n);

// Free energy F(x; y, k): iterated o_1 composition of k independent
// variance-1 Brownian line metrics, via the prefix-sum recursion
//   G_j(y) = B_j(y) + log int_x^y exp(G_{j-1}(s) - B_j(s)) ds
// in log space. drifts may be empty (all zero) or length k.
GridFunction oy_free_energy(int k, double x, GridSpec y_grid,
                            const std::vector<double>& drifts, uint64_t seed);

// F(x_i; y_j, k) on one shared environment, for supermodularity checks
KernelSample oy_kernel(int k, GridSpec x_grid, GridSpec y_grid, double step,
                       uint64_t seed);

// K_n(x,y) = (F(2xn^2; bn^3 + 2yn^2, ceil(an^3)) - cn^3 + 2(x-y)n^2 Psi') / n
double oy_scaled_kernel_sample(const OYParams& p, double x, double y,
                               uint64_t seed, double step = 0.02);

// (B_nu o_1 B-metric_mu)(y_i): variance-2 drifted Brownian function composed
// with an independent variance-2 line metric, integration truncated at t_lo
// (needs nu > mu for the untruncated integral to exist)
std::vector<double> compose_bm_metric(double nu, double mu, double t_lo,
                                      const std::vector<double>& ys,
                                      double step, uint64_t seed);

// (B-metric_nu o_1 B-metric_mu)(0, y_i), variance-2 lines
std::vector<double> compose_two_metrics(double nu, double mu,
                                        const std::vector<double>& ys,
                                        double step, uint64_t seed);

}  // namespace kpzlab
