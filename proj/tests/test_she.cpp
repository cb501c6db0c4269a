#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "kpzlab/parallel.hpp"
#include "kpzlab/she.hpp"
#include "kpzlab/stats.hpp"

using namespace kpzlab;

namespace {

// independent reference: dense matrix power of the explicit Laplacian step
std::vector<double> heat_reference(const std::vector<double>& z0, double eps,
                                   double delta, long steps) {
  std::vector<double> z = z0, next(z0.size());
  const double r = 0.5 * delta / (eps * eps);
  for (long k = 0; k < steps; ++k) {
    next.front() = 0.0;
    next.back() = 0.0;
    for (std::size_t i = 1; i + 1 < z.size(); ++i)
      next[i] = z[i] + r * (z[i + 1] - 2.0 * z[i] + z[i - 1]);
    z.swap(next);
  }
  return z;
}

}  // namespace

TEST_CASE("zero-noise mode is the discrete heat semigroup, exactly") {
  GridSpec g{-3.0, 3.0, 0.1};
  GridFunction init = GridFunction::narrow_wedge(g, 0.0);
  SHEParams p;
  p.zero_noise = true;
  SHEField f = she_solve(init, 0.4, p, 1);

  std::vector<double> z0(g.size(), 0.0);
  z0[g.nearest(0.0)] = 1.0 / g.step;
  long steps = static_cast<long>(std::ceil(0.4 / (0.5 * g.step * g.step)));
  std::vector<double> ref = heat_reference(z0, g.step, 0.4 / steps, steps);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(f.z[i] == ref[i]);

  // and it is close to the continuum heat kernel
  double t = 0.4;
  for (double y : {-1.0, 0.0, 0.5}) {
    double hk = std::exp(-y * y / (2.0 * t)) / std::sqrt(2.0 * M_PI * t);
    CHECK(f.z[g.nearest(y)] == doctest::Approx(hk).epsilon(0.02));
  }
}

TEST_CASE("noisy solution stays nonnegative and is deterministic in the seed") {
  GridSpec g{-4.0, 4.0, 0.1};
  GridFunction init = GridFunction::narrow_wedge(g, 0.0);
  SHEParams p;
  SHEField a = she_solve(init, 1.0, p, 12345);
  SHEField b = she_solve(init, 1.0, p, 12345);
  CHECK(a.z == b.z);
  for (double v : a.z) CHECK(v >= 0.0);
}

TEST_CASE("mean field solves the heat equation") {
  GridSpec g{-5.0, 5.0, 0.1};
  GridFunction init = GridFunction::narrow_wedge(g, 0.0);
  SHEParams p;
  std::size_t m = 4000;
  std::vector<double> ys = {-1.0, 0.0, 1.0};
  std::vector<std::vector<double>> acc(ys.size(), std::vector<double>(m));
  replica_map(m, [&](std::size_t i) {
    SHEField f = she_solve(init, 1.0, p, 900 + i);
    for (std::size_t j = 0; j < ys.size(); ++j)
      acc[j][i] = f.z[g.nearest(ys[j])];
  });
  for (std::size_t j = 0; j < ys.size(); ++j) {
    double mean = 0.0;
    for (double v : acc[j]) mean += v;
    mean /= static_cast<double>(m);
    double hk = std::exp(-ys[j] * ys[j] / 2.0) / std::sqrt(2.0 * M_PI);
    CHECK(mean == doctest::Approx(hk).epsilon(0.08));
  }
}

TEST_CASE("oversized time step is rejected") {
  GridSpec g{-1.0, 1.0, 0.1};
  GridFunction init = GridFunction::constant(g, 0.0);
  SHEParams p;
  p.delta = 0.1;  // above eps^2 / 2 = 0.005
  CHECK_THROWS_WITH_AS(she_solve(init, 1.0, p, 1), "reduce delta",
                       std::invalid_argument);
}

TEST_CASE("lockstep kernel: quadrangle inequality within quadrature slack") {
  GridSpec domain{-6.0, 6.0, 0.15};
  std::vector<double> xs = {-0.3, 0.0, 0.3};
  std::vector<double> ys = {-0.3, 0.0, 0.3};
  SHEParams p;
  for (uint64_t seed = 0; seed < 50; ++seed) {
    KernelSample K = she_kernel(xs, ys, domain, 0.5, p, seed);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
      for (std::size_t j = 0; j + 1 < ys.size(); ++j)
        CHECK(K.at(i, j) + K.at(i + 1, j + 1) >=
              K.at(i, j + 1) + K.at(i + 1, j) - 1e-4);
  }
}

TEST_CASE("scaled kernel: shift invariance in law") {
  std::size_t m = 2000;
  std::vector<double> base(m), shifted(m);
  SHEParams p;
  replica_map(m, [&](std::size_t i) {
    base[i] = kpz_scaled_kernel_sample(1.0, 0.0, 0.0, 0.15, p, 100 + i);
    shifted[i] = kpz_scaled_kernel_sample(1.0, 0.5, 0.5, 0.15, p, 700000 + i);
  });
  CHECK(ks_two_sample(EmpiricalSample::from(base, 1),
                      EmpiricalSample::from(shifted, 2)) <= 0.05);
}
