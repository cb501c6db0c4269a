#pragma once

#include <cstdint>
#include <vector>

#include "kpzlab/grid.hpp"

namespace kpzlab {

// Explicit scheme for dZ = (1/2) Z'' dt + Z dW:
//   Z <- (Z + (delta/2) * discrete Laplacian) * exp(xi sqrt(delta/eps) - delta/(2 eps))
// The multiplicative factor has mean one, so E Z solves the discrete heat
// equation exactly; positivity is preserved.
struct SHEParams {
  double delta = 0.0;       // time step; 0 picks eps^2 / 2
  bool zero_noise = false;  // deterministic heat-semigroup mode
};

struct SHEField {
  GridSpec grid;  // space grid; step is the eps of the scheme
  double time = 0.0;
  std::vector<double> z;
};

// init: log-density plus atoms. Z_i = exp(values_i) (with exp(-inf) = 0) and
// each atom adds mass exp(log_weight)/eps to its cell (delta initial
// condition). Dirichlet-zero boundaries; the caller supplies a domain wide
// enough that boundary mass is negligible.
SHEField she_solve(const GridFunction& init, double t_final,
                   const SHEParams& params, uint64_t seed);

// lockstep solves from several delta initial conditions sharing one noise
// realization; returns log Z(x_i -> y_j) at time t_final
KernelSample she_kernel(const std::vector<double>& xs,
                        const std::vector<double>& ys, GridSpec domain,
                        double t_final, const SHEParams& params, uint64_t seed);

// K_n(x,y) = (log Z(2n^2 x; 2n^2 y, 2n^3) + n^3/12) / n from a delta at
// 2n^2 x; returns -inf if the readout cell carries no mass
double kpz_scaled_kernel_sample(double n, double x, double y, double eps,
                                const SHEParams& params, uint64_t seed);

}  // namespace kpzlab
