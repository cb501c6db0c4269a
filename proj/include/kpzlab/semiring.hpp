#pragma once

#include "kpzlab/grid.hpp"

namespace kpzlab {

// Softmax analogue of sup: (1/n) log integral of e^{n f}, trapezoid rule in
// log-space plus the atom masses. -inf on empty support.
double supn_integrate(const GridFunction& f, double n);

// (f o_n K)(y) = supn_x(f(x) + K(x, y)); output lives on K's y grid.
GridFunction compose_supn(const GridFunction& f, const KernelSample& K,
                          double n);

// Max-plus composition; exact on the grid, atoms join as candidate points.
GridFunction compose_max(const GridFunction& f, const KernelSample& K);

// Max-plus kernel product (K1 * K2)(x, z) = max_y K1(x, y) + K2(y, z).
KernelSample kernel_compose_max(const KernelSample& K1, const KernelSample& K2);

// Line metric of a finite function: K(x, y) = f(y) - f(x) for x <= y,
// -inf below the diagonal.
KernelSample line_metric(const GridFunction& f);

// Smallest epsilon on the dyadic ladder eps_k = 2^-k (hi - lo) such that
// every grid point of [lo, hi] is eps-thick:
//   supn_{|y-x|<=eps} f(y) >= f(x) - eps.
double thickness(const GridFunction& f, double n, double a_lo, double a_hi,
                 int ladder_depth = 20);

}  // namespace kpzlab
