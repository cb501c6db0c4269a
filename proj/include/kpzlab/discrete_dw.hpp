#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "kpzlab/rational.hpp"

namespace kpzlab {

// Signed measure on the integers; exact rational masses.
using SignedPmf = std::map<long, Rat>;

// State of the min-recursion process Y on Z^{down n} (weakly decreasing).
struct YState {
  std::vector<long> y;
  Rat p;  // Bernoulli parameter in (0,1)

  int n() const { return static_cast<int>(y.size()); }
  void check() const;
};

// Signed linear combination of nonintersecting-walk laws: the right side of
// the Dieker-Warren mixture identity.
struct SignedMixture {
  struct Entry {
    Rat weight;
    std::vector<long> start;
  };
  std::vector<Entry> entries;
  int n = 0;
  int r = 1;

  Rat weight_sum() const;
};

// One step of the recursion Y_k <- min(Y_k + xi_k, Y_{k-1}), k = 1..n.
YState y_step(const YState& state, const std::vector<int>& xi);

// Exact law of the bottom coordinate Y_n(t) by full enumeration over the
// 2^{nt} Bernoulli arrays. Computed twice -- via the recursion and via the
// lattice last-passage formula -- and asserted equal path by path.
SignedPmf y_law_exact(const YState& y0, int t);

// Vandermonde determinant prod_{i<j} (v_j - v_i).
double vandermonde(const std::vector<double>& v);
Rat vandermonde_rat(const std::vector<Rat>& v);

// hat shift: (z_1 - 1, ..., z_n - n)
std::vector<long> hat_shift(const std::vector<long>& z);

// c = 2^C(n,2) / (1! 2! ... (n-1)!)
Rat dw_constant(int n);

// Signed mixture over starts y + r*s, s_i in {0..n-i}; weights carry the
// binomial masses, alternating signs and the (hat-shifted, r-scaled)
// Vandermonde factor. Throws "initial condition not admissible" when some
// shifted start leaves the strictly ordered region.
SignedMixture dw_weights(const std::vector<long>& y, int r, int n);

// Exact law of the bottom coordinate Z_n(t) of n Bernoulli(p) walks
// conditioned to stay ordered, via the Karlin-McGregor determinant with the
// Vandermonde Doob ratio on hat-shifted coordinates.
SignedPmf z_law_exact(const std::vector<long>& z0, const Rat& p, int t);

// Max absolute discrepancy between the two sides of the mixture identity:
// LHS the exact Y_n(t) law averaged over the uniform start randomization,
// RHS the signed combination of Z_n(t) laws.
double dw_identity_check(const std::vector<long>& y, int r, const Rat& p,
                         int t, int n);

// Finite-difference toolbox checks behind the mixture identity: the binomial
// expansion of (-D)^n, commutation of D with convolution, and the product
// reduction for convolution powers of the uniform mass u = 1_{1..r}/r.
// All checks are exact in rational arithmetic.
bool finite_difference_identities(const SignedPmf& u_mass, int n,
                                  uint64_t seed);

// uniform mass on {1..r}
SignedPmf uniform_mass(int r);

}  // namespace kpzlab
