#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "kpzlab/brownian.hpp"
#include "kpzlab/parallel.hpp"
#include "kpzlab/random_matrix.hpp"
#include "kpzlab/rng.hpp"
#include "kpzlab/stats.hpp"

using namespace kpzlab;

namespace {

std::vector<double> sample_many(std::size_t m, uint64_t seed,
                                double (*fn)(uint64_t)) {
  std::vector<double> v(m);
  replica_map(m, [&](std::size_t i) { v[i] = fn(seed + i); });
  return v;
}

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double variance(const std::vector<double>& v) {
  double m = mean(v), s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size() - 1);
}

}  // namespace

TEST_CASE("bm increment moments") {
  GridSpec g{0.0, 1.0, 1.0};
  std::size_t m = 100000;
  std::vector<double> v(m), w(m);
  replica_map(m, [&](std::size_t i) {
    v[i] = sample_bm(0.0, g, 10 + i).values[1];
    w[i] = sample_bm(3.0, g, 900000 + i).values[1];
  });
  CHECK(std::abs(mean(v)) < 0.02);
  CHECK(variance(v) == doctest::Approx(2.0).epsilon(0.025));
  CHECK(mean(w) == doctest::Approx(3.0).epsilon(0.01));
}

TEST_CASE("blp with one line reproduces the Brownian path") {
  GridSpec g{0.0, 1.0, 0.01};
  DriftedEnsembleSpec spec{0.0, {0.7}, {1.5}};
  GridFunction L = blp_sample(spec, g, 42);
  PathSample b = sample_bm(1.5, g, 42, 0.7);
  for (std::size_t i = 0; i < g.size(); ++i)
    CHECK(L.values[i] == doctest::Approx(b.values[i]).epsilon(1e-12));
}

TEST_CASE("blp monotone in entry heights") {
  GridSpec g{0.0, 1.0, 0.01};
  for (uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    DriftedEnsembleSpec lo{0.0, {0.0, 0.0, 0.0}, {0.0, 0.5, 1.0}};
    DriftedEnsembleSpec hi = lo;
    double c = 0.4;
    hi.h[2] += c;  // same seed, same environment
    GridFunction a = blp_sample(lo, g, seed);
    GridFunction b = blp_sample(hi, g, seed);
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(b.values[i] >= a.values[i]);
      CHECK(b.values[i] <= a.values[i] + c + 1e-12);
    }
  }
}

TEST_CASE("blp DP equals brute-force jump-time maximization at n = 2") {
  GridSpec g{0.0, 1.0, 0.02};
  const std::size_t m = g.size();
  for (uint64_t seed = 100; seed < 200; ++seed) {
    DriftedEnsembleSpec spec{0.0, {0.0, 0.0}, {0.0, 0.0}};
    GridFunction L = blp_sample(spec, g, seed);
    // replay the environment in the sampler's draw order
    CounterRng rng(seed);
    const double sd = std::sqrt(2.0 * g.step);
    std::vector<double> b1(m, 0.0), b2(m, 0.0);
    for (std::size_t k = 1; k < m; ++k) {
      b1[k] = b1[k - 1] + sd * rng.normal();
      b2[k] = b2[k - 1] + sd * rng.normal();
    }
    double best = -1e300;
    for (std::size_t k = 0; k < m; ++k)
      best = std::max(best, b1[k] + b2[m - 1] - b2[k]);
    CHECK(L.values[m - 1] == doctest::Approx(best).epsilon(1e-12));
  }
}

TEST_CASE("blp kernel satisfies the quadrangle inequality per sample") {
  GridSpec xg{0.0, 0.6, 0.2};
  GridSpec yg{1.0, 1.6, 0.2};
  for (uint64_t seed = 0; seed < 200; ++seed) {
    KernelSample K = blp_kernel(3, xg, yg, 0.005, seed);
    for (std::size_t i = 0; i + 1 < xg.size(); ++i)
      for (std::size_t j = 0; j + 1 < yg.size(); ++j)
        CHECK(K.at(i, j) + K.at(i + 1, j + 1) >=
              K.at(i, j + 1) + K.at(i + 1, j) - 1e-9);
  }
}

TEST_CASE("exact two-line sampler agrees with the DP in law") {
  std::size_t m = 20000;
  std::vector<double> exact(m), dp(m);
  GridSpec g{0.0, 1.0, 1e-4};
  replica_map(m, [&](std::size_t i) {
    exact[i] = blp2_exact(0.0, 0.5, 1.0, 7000000 + i);
    DriftedEnsembleSpec spec{0.0, {0.0, 0.5}, {0.0, 0.0}};
    dp[i] = blp_sample(spec, g, 8000000 + i).values.back();
  });
  double ks = ks_two_sample(EmpiricalSample::from(exact, 1),
                            EmpiricalSample::from(dp, 2));
  CHECK(ks <= 0.025);
}

TEST_CASE("pointed GUE sampler: scalar law and basics") {
  std::size_t m = 20000;
  std::vector<double> v(m), ref(m);
  replica_map(m, [&](std::size_t i) {
    v[i] = pointed_ep_sample_gue(1, 0.5, 0.3, {2.0}, 1.5, 100 + i);
    CounterRng rng(5000000 + i);
    ref[i] = 0.3 + 2.0 * 1.0 + std::sqrt(2.0 * 1.0) * rng.normal();
  });
  CHECK(ks_two_sample(EmpiricalSample::from(v, 1),
                      EmpiricalSample::from(ref, 2)) <= 0.02);
  CHECK_THROWS(pointed_ep_sample_gue(0, 0.0, 0.0, {}, 1.0, 1));
}

TEST_CASE("conditioned sampler: ordering and GUE cross-check") {
  // n=1 reduces to plain Brownian motion
  DriftedEnsembleSpec one{0.0, {0.2}, {1.0}};
  std::vector<double> v = ep_sample_conditioned(one, 2.0, 0.01, {1.0}, 3);
  CHECK(v.size() == 1);

  // pointed case vs the GUE route
  std::size_t m = 10000;
  std::vector<double> rej(m), gue(m);
  replica_map(m, [&](std::size_t i) {
    DriftedEnsembleSpec spec{0.0, {0.0, 0.0}, {0.0, 2.0}};
    rej[i] = ep_sample_conditioned(spec, 10.0, 0.01, {1.0}, 40000 + i)[0];
    gue[i] = pointed_ep_sample_gue(2, 0.0, 0.0, {0.0, 2.0}, 1.0, 70000 + i);
  });
  double ks = ks_two_sample(EmpiricalSample::from(rej, 1),
                            EmpiricalSample::from(gue, 2));
  CHECK(ks <= 0.03);
}

TEST_CASE("parallel external-source sampler matches rejection sampling") {
  std::size_t m = 5000;
  std::vector<double> ext(m), rej(m);
  replica_map(m, [&](std::size_t i) {
    ext[i] = parallel_ep_sample_gue({0.0, 1.0}, 0.5, 1.0, 910000 + i);
    DriftedEnsembleSpec spec{0.0, {0.0, 1.0}, {0.5, 0.5}};
    rej[i] = ep_sample_conditioned(spec, 20.0, 0.01, {1.0}, 640000 + i)[0];
  });
  double ks = ks_two_sample(EmpiricalSample::from(ext, 1),
                            EmpiricalSample::from(rej, 2));
  CHECK(ks <= 0.04);
}

TEST_CASE("classical inversion: linear functions and Brownian law") {
  GridSpec g{0.0, 2.0, 0.25};
  PathSample lin{g, {}, 0.0, 0};
  lin.values.resize(g.size());
  double nu = 1.3, mu = -0.4;
  for (std::size_t i = 0; i < g.size(); ++i)
    lin.values[i] = nu * g.point(i) + mu;
  GridSpec og{0.5, 2.0, 0.25};
  PathSample inv = classical_invert(lin, og);
  for (std::size_t i = 0; i < og.size(); ++i)
    CHECK(inv.values[i] ==
          doctest::Approx(mu * og.point(i) + nu).epsilon(1e-12));

  std::size_t m = 20000;
  std::vector<std::vector<double>> a(3, std::vector<double>(m)),
      b(3, std::vector<double>(m));
  double ts[3] = {0.5, 1.0, 2.0};
  replica_map(m, [&](std::size_t i) {
    PathSample p = sample_bm(nu, GridSpec{0.0, 2.0, 0.5}, 111 + i, mu);
    PathSample q = classical_invert(p, GridSpec{0.5, 2.0, 0.5});
    PathSample d = sample_bm(mu, GridSpec{0.0, 2.0, 0.5}, 777000 + i, nu);
    for (int j = 0; j < 3; ++j) {
      b[j][i] = q.values[q.grid.nearest(ts[j])];
      a[j][i] = d.values[d.grid.nearest(ts[j])];
    }
  });
  for (int j = 0; j < 3; ++j)
    CHECK(ks_two_sample(EmpiricalSample::from(a[j], 1),
                        EmpiricalSample::from(b[j], 2)) <= 0.02);
}

TEST_CASE("I_a inversion on linear functions") {
  double aa = 2.0;
  GridSpec in{-1.9, 0.0, 0.01};
  PathSample zero{in, std::vector<double>(in.size(), 0.0), 0.0, 0};
  GridSpec og{0.0, 3.0, 0.5};
  PathSample z = time_invert(zero, aa, og);
  for (double v : z.values) CHECK(v == 0.0);

  double d = 0.8, nu = -0.6;
  PathSample lin{in, {}, 0.0, 0};
  lin.values.resize(in.size());
  for (std::size_t i = 0; i < in.size(); ++i)
    lin.values[i] = d + nu * in.point(i);
  PathSample w = time_invert(lin, aa, og);
  for (std::size_t i = 0; i < og.size(); ++i)
    CHECK(w.values[i] ==
          doctest::Approx(d + (d / aa - nu) * og.point(i)).epsilon(1e-9));

  CHECK_THROWS(time_invert(lin, aa, GridSpec{-aa, 1.0, 0.5}));
}

TEST_CASE("wedge curves hit their stated peak") {
  double n = 10000.0, a = std::pow(n, 0.25);
  GridSpec xg{-a, 2.0, 0.001};
  GridFunction l0 = wedge_curves(n, 0.0, a, xg);
  CHECK(l0.values[xg.nearest(0.0)] ==
        doctest::Approx(std::sqrt(8.0 * a * n)).epsilon(1e-9));
  for (double m : {0.0, 5.0, 40.0}) {
    GridFunction lm = wedge_curves(n, m, a, xg);
    double peak = *std::max_element(lm.values.begin(), lm.values.end());
    CHECK(peak == doctest::Approx(std::sqrt(8.0 * a * n) -
                                  m * std::sqrt(2.0 * a / n))
                      .epsilon(1e-6));
    double at = xg.point(static_cast<std::size_t>(
        std::max_element(lm.values.begin(), lm.values.end()) -
        lm.values.begin()));
    CHECK(std::abs(at - (-a * m / n)) <= 2 * xg.step);
  }
}

// The full n = 1e4 "within 0.5 of f" demonstration is out of reach for a
// time-discretized environment: the passage value undershoots the continuum
// shape sqrt(8an) by roughly 2700 * step^(1/3), and the fluctuation scale of
// the exact law decays only like n^(-1/24). What is checkable: the profile is
// flat for flat f (entry maximization works), and the deterministic
// discretization deficit shrinks monotonically with the step.
TEST_CASE("density approximation: flatness and step convergence") {
  GridSpec fg{0.0, 1.0, 0.1};
  GridFunction f = GridFunction::constant(fg, 0.0);
  // the deficit tilts smoothly with u, so judge flatness after removing the
  // best-fit line: what remains is the environment fluctuation
  int flat = 0;
  const int reps = 10;
  for (int r = 0; r < reps; ++r) {
    GridFunction h = density_approx(f, 10000.0, 31000 + r, 2e-3);
    const std::size_t m = h.values.size();
    double su = 0, sv = 0, suu = 0, suv = 0;
    for (std::size_t i = 0; i < m; ++i) {
      double u = fg.point(i), v = h.values[i];
      su += u; sv += v; suu += u * u; suv += u * v;
    }
    double slope = (m * suv - su * sv) / (m * suu - su * su);
    double icpt = (sv - slope * su) / m;
    double lo = 1e300, hi = -1e300;
    for (std::size_t i = 0; i < m; ++i) {
      double res = h.values[i] - slope * fg.point(i) - icpt;
      lo = std::min(lo, res);
      hi = std::max(hi, res);
    }
    if (hi - lo <= 2.5) ++flat;
  }
  CHECK(flat >= 9);

  double prev = -1e300;
  for (double step : {8e-3, 2e-3, 5e-4}) {
    double mean = 0.0;
    for (int r = 0; r < 4; ++r) {
      GridFunction h = density_approx(f, 10000.0, 77000 + r, step);
      mean += h.values[fg.nearest(0.5)];
    }
    mean /= 4.0;
    CHECK(mean > prev);  // deficit shrinks toward 0 as the step refines
    prev = mean;
  }
  CHECK(prev < 0.0);
}

TEST_CASE("dyson path has the semicircle edge scale") {
  std::size_t m = 200;
  std::vector<double> tops(m);
  replica_map(m, [&](std::size_t i) {
    tops[i] = dyson_top_path(100, {0.5, 1.0}, 5150 + i)[1];
  });
  CHECK(mean(tops) == doctest::Approx(20.0).epsilon(0.07));
}

TEST_CASE("samplers are deterministic and schedule-independent") {
  std::vector<double> a(64), b(64);
  replica_map(64, [&](std::size_t i) { a[i] = blp2_exact(0.0, 1.0, 1.0, i); },
              ExecMode::Parallel);
  replica_map(64, [&](std::size_t i) { b[i] = blp2_exact(0.0, 1.0, 1.0, i); },
              ExecMode::Serial);
  CHECK(a == b);
}
