#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kpzlab/grid.hpp"
#include "kpzlab/rng.hpp"

namespace kpzlab {

// (start time a, entry heights h, drifts nu) for edge processes and BLP.
// h nondecreasing; line n is the top line. nu ordering is not required here:
// the last-passage law is invariant under permuting nu, and the reorder test
// exercises exactly that. Conditioned sampling checks its own separation.
struct DriftedEnsembleSpec {
  double a = 0.0;
  std::vector<double> h;
  std::vector<double> nu;

  int n() const { return static_cast<int>(h.size()); }
  void check() const {
    if (h.empty() || h.size() != nu.size())
      throw std::invalid_argument("ensemble spec: h and nu must match, n >= 1");
    for (std::size_t i = 0; i + 1 < h.size(); ++i)
      if (h[i] > h[i + 1])
        throw std::invalid_argument("ensemble spec: h nondecreasing");
  }
};

// One sampled path on a uniform time grid.
struct PathSample {
  GridSpec grid;
  std::vector<double> values;
  double drift = 0.0;
  uint64_t seed = 0;
};

// Variance-2 Brownian motion with drift nu: increments nu*step + sqrt(2*step)*N.
PathSample sample_bm(double nu, GridSpec grid, uint64_t seed,
                     double start = 0.0);

// linear interpolation; clamps to the ends of the grid
double path_interp(const PathSample& p, double t);

// Brownian last passage across the ensemble: one dynamic-programming pass,
//   G_l(t) = max(G_l(t - step) + dB_l(t), G_{l-1}(t)),  G_l(a) = max(h_l, G_{l-1}(a)),
// returning the top-line value L on y_grid. y_grid must start at a.
GridFunction blp_sample(const DriftedEnsembleSpec& spec, GridSpec y_grid,
                        uint64_t seed);

// Last passage kernel on one shared driftless environment: K(x, y) = passage
// value entering line 1 at time x and exiting line n_lines at time y; -inf
// for y < x. x and y points are snapped to a common time grid of the given
// step spanning [x_lo, y_hi].
KernelSample blp_kernel(int n_lines, GridSpec x_grid, GridSpec y_grid,
                        double step, uint64_t seed);

// Exact sampler of the n = 2 BLP top value at time tau from start 0 with
// zero drifts: L = B_2(tau) + max(h2, h1 + max_{s <= tau} D(s)) where D is
// the variance-4 difference walk, its running maximum drawn from the exact
// conditional law given the endpoint.
double blp2_exact(double h1, double h2, double tau, CounterRng& rng);
double blp2_exact(double h1, double h2, double tau, uint64_t seed);

// Rejection sampler of n nonintersecting drifted Brownian lines on [a, T];
// returns the top line at the eval points. Throws
// "increase separation or shrink horizon" when the acceptance rate drops
// below 1e-6.
std::vector<double> ep_sample_conditioned(const DriftedEnsembleSpec& spec,
                                          double T, double step,
                                          const std::vector<double>& eval_points,
                                          uint64_t seed);

// classical time inversion g -> t*g(1/t); output at out_grid points, input
// read by linear interpolation
PathSample classical_invert(const PathSample& path, GridSpec out_grid);

// I_a g(t) = ((t+a)/a) * g(-a t/(t+a)); error when t = -a lands in out_grid
PathSample time_invert(const PathSample& path, double a, GridSpec out_grid);

// deterministic narrow-wedge curve sqrt(8(n-m)(x+a)) - x sqrt(2n/a); -inf
// left of -a
GridFunction wedge_curves(double n, double m, double a, GridSpec x_grid);

// Random approximation of the density f by one last-passage environment:
// entry heights f(a m / n) - sqrt(8an) + m sqrt(2a/n) on lines m+1 <= bn/a+1,
// driftless variance-2 lines from -a with a = n^{1/4}; returns
// x -> H_n(-x) on f's grid (tilt -x sqrt(2n/a) folded in).
GridFunction density_approx(const GridFunction& f, double n, uint64_t seed,
                            double step = 0.0);

}  // namespace kpzlab
