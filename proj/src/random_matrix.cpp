#include "kpzlab/random_matrix.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "kpzlab/rng.hpp"

namespace kpzlab {

namespace {

using Cplx = std::complex<double>;

// Hermitian Gaussian with diag N(0, 2*scale2) and offdiag re/im N(0, scale2);
// scale2 = 1 is the variance-2 Brownian convention, 1/2 the standard one.
Eigen::MatrixXcd hermitian_gaussian(int n, double scale2, CounterRng& rng) {
  const double sd = std::sqrt(scale2);
  Eigen::MatrixXcd g(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = Cplx(sd * std::sqrt(2.0) * rng.normal(), 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Cplx z(sd * rng.normal(), sd * rng.normal());
      g(i, j) = z;
      g(j, i) = std::conj(z);
    }
  return g;
}

double top_eigenvalue(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m,
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues()(m.rows() - 1);
}

}  // namespace

double pointed_ep_sample_gue(int n, double a, double h,
                             const std::vector<double>& nu, double t,
                             uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gue sampler: n must be >= 1");
  if (static_cast<int>(nu.size()) != n)
    throw std::invalid_argument("gue sampler: nu length mismatch");
  if (t <= a) throw std::invalid_argument("gue sampler: need t > a");
  CounterRng rng(seed);
  const double tau = t - a;
  Eigen::MatrixXcd m = std::sqrt(tau) * hermitian_gaussian(n, 1.0, rng);
  for (int i = 0; i < n; ++i) m(i, i) += Cplx(h + nu[i] * tau, 0.0);
  return top_eigenvalue(m);
}

double parallel_ep_sample_gue(const std::vector<double>& h, double nu,
                              double tau, uint64_t seed) {
  const int n = static_cast<int>(h.size());
  if (n < 1) throw std::invalid_argument("gue sampler: n must be >= 1");
  CounterRng rng(seed);
  Eigen::MatrixXcd m = std::sqrt(tau) * hermitian_gaussian(n, 1.0, rng);
  for (int i = 0; i < n; ++i) m(i, i) += Cplx(h[i], 0.0);
  return top_eigenvalue(m) + nu * tau;
}

std::vector<double> dyson_top_path(int n, const std::vector<double>& times,
                                   uint64_t seed) {
  CounterRng rng(seed);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  std::vector<double> out;
  out.reserve(times.size());
  double prev = 0.0;
  for (double t : times) {
    if (t < prev) throw std::invalid_argument("dyson path: times must increase");
    if (t > prev)
      m += std::sqrt(t - prev) * hermitian_gaussian(n, 0.5, rng);
    prev = t;
    out.push_back(t == 0.0 ? 0.0 : top_eigenvalue(m));
  }
  return out;
}

double gue_edge_sample(int N, uint64_t seed) {
  if (N < 100) throw std::invalid_argument("edge sampler: N must be >= 100");
  CounterRng rng(seed);
  Eigen::VectorXd diag(N), sub(N - 1);
  for (int i = 0; i < N; ++i) diag(i) = rng.normal();
  for (int k = 1; k < N; ++k)
    sub(k - 1) = rng.chi(2.0 * (N - k)) / std::sqrt(2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  double lmax = es.eigenvalues()(N - 1);
  return (lmax - 2.0 * std::sqrt(static_cast<double>(N))) *
         std::pow(static_cast<double>(N), 1.0 / 6.0);
}

}  // namespace kpzlab
