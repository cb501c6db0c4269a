#pragma once

#include <cstdint>
#include <vector>

namespace kpzlab {

// Top eigenvalue of sqrt(t-a)*G + h*I + diag(nu)*(t-a), where G is Hermitian
// with N(0,2) diagonal and N(0,1) real/imaginary off-diagonal parts. This
// scale matches variance-2 Brownian last passage: at n = 1 the law is
// Normal(h + nu_1 (t-a), 2(t-a)).
double pointed_ep_sample_gue(int n, double a, double h,
                             const std::vector<double>& nu, double t,
                             uint64_t seed);

// Top line at time tau of variance-2 nonintersecting motions started at h
// with a common drift nu, sampled exactly through the external-source
// representation lambda_max(diag(h) + sqrt(tau)*G) + nu*tau.
double parallel_ep_sample_gue(const std::vector<double>& h, double nu,
                              double tau, uint64_t seed);

// Top eigenvalue path of standard (variance-1) Hermitian Brownian motion,
// evaluated at the given increasing times; equals in law the top curve of n
// standard nonintersecting Brownian motions started at 0.
std::vector<double> dyson_top_path(int n, const std::vector<double>& times,
                                   uint64_t seed);

// One draw of (lambda_max - 2 sqrt(N)) N^{1/6} from the N x N GUE, via the
// beta = 2 tridiagonal ensemble (N(0,1) diagonal, chi_{2(N-k)}/sqrt(2)
// off-diagonal).
double gue_edge_sample(int N, uint64_t seed);

}  // namespace kpzlab
