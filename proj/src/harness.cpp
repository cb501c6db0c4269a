#include "kpzlab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "kpzlab/brownian.hpp"
#include "kpzlab/discrete_dw.hpp"
#include "kpzlab/parallel.hpp"
#include "kpzlab/polymer.hpp"
#include "kpzlab/random_matrix.hpp"
#include "kpzlab/rng.hpp"
#include "kpzlab/she.hpp"
#include "kpzlab/stats.hpp"

namespace kpzlab {

void to_json(nlohmann::json& j, const TestReport& r) {
  j = nlohmann::json{{"test_id", r.test_id},       {"statistic", r.statistic},
                     {"threshold", r.threshold},   {"pass", r.pass},
                     {"replica_count", r.replica_count},
                     {"runtime", r.runtime}};
}

namespace {

// per-leg seed derivation: disjoint streams for the two sides of a KS test
uint64_t leg_seed(uint64_t seed, uint64_t leg) {
  return CounterRng::mix(seed + leg * 0x9e3779b97f4a7c15ULL);
}

Rat rat_from_double(double p) {
  // small-denominator continued-fraction fit; the grid only uses 1/2, 1/3
  long best_num = 1, best_den = 2;
  double best_err = 1e300;
  for (long den = 2; den <= 64; ++den) {
    long num = std::lround(p * den);
    if (num < 1 || num >= den) continue;
    double err = std::abs(p - static_cast<double>(num) / den);
    if (err < best_err) {
      best_err = err;
      best_num = num;
      best_den = den;
    }
  }
  return Rat(Int(best_num), Int(best_den));
}

std::vector<long> wide_start(int n, int r) {
  std::vector<long> y(n);
  for (int i = 0; i < n; ++i) y[i] = 2L * r * (n - 1 - i);
  return y;
}

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// ---- catalog entries -------------------------------------------------------

TestReport dw_exact(const ExperimentConfig& c, uint64_t) {
  TestReport r;
  r.threshold = c.get("threshold", 1e-10);
  double worst = 0.0;
  long cases = 0;
  if (c.has("n")) {
    int n = static_cast<int>(c.get("n", 2));
    int t = static_cast<int>(c.get("t", 1));
    int rr = static_cast<int>(c.get("r", 1));
    Rat p = rat_from_double(c.get("p", 0.5));
    worst = dw_identity_check(wide_start(n, rr), rr, p, t, n);
    cases = 1;
  } else {
    for (int n : {1, 2, 3})
      for (int t : {1, 2, 3})
        for (int rr : {1, 2})
          for (double pd : {0.5, 1.0 / 3.0}) {
            worst = std::max(worst, dw_identity_check(wide_start(n, rr), rr,
                                                      rat_from_double(pd), t, n));
            ++cases;
          }
  }
  r.statistic = worst;
  r.replica_count = cases;
  return r;
}

TestReport dw_routes(const ExperimentConfig& c, uint64_t) {
  // y_law_exact recomputes every path by the lattice route and throws if the
  // two values ever differ, so completing the grid is the statement
  TestReport r;
  r.threshold = c.get("threshold", 0.0);
  long cases = 0;
  for (int n : {1, 2, 3})
    for (int t : {1, 2, 3})
      for (double pd : {0.5, 1.0 / 3.0}) {
        YState y0{wide_start(n, 1), rat_from_double(pd)};
        y_law_exact(y0, t);
        ++cases;
      }
  // a larger stick-breaking shape
  y_law_exact(YState{wide_start(2, 1), Rat(Int(1), Int(2))}, 8);
  r.statistic = 0.0;
  r.replica_count = cases + 1;
  return r;
}

TestReport dw_weight_sum(const ExperimentConfig& c, uint64_t) {
  TestReport r;
  r.threshold = c.get("threshold", 1e-12);
  double worst = 0.0;
  long cases = 0;
  for (int n = 1; n <= 4; ++n)
    for (int rr = 1; rr <= 3; ++rr)
      for (long off : {-3L, 0L, 5L}) {
        std::vector<long> y = wide_start(n, rr);
        for (long& v : y) v += off;
        SignedMixture mix = dw_weights(y, rr, n);
        worst = std::max(worst, std::abs(to_double(mix.weight_sum()) - 1.0));
        ++cases;
      }
  r.statistic = worst;
  r.replica_count = cases;
  return r;
}

TestReport ep_blp(const ExperimentConfig& c, uint64_t seed) {
  TestReport r;
  r.threshold = c.get("threshold", 0.02);
  // the DP needs a step well below the 1e-3 cap: its sup-over-grid-times
  // undershoots the continuum passage value by ~sqrt(step), visible as KS bias
  const std::size_t m =
      static_cast<std::size_t>(c.replicas > 0 ? c.replicas : 50000);
  const double step = c.get("step", 1e-4);
  double worst = 0.0;
  int leg = 0;
  for (int n : {2, 3}) {
    std::vector<double> nu(n);
    for (int i = 0; i < n; ++i) nu[i] = i;
    std::vector<double> gue(m), blp(m);
    uint64_t s1 = leg_seed(seed, ++leg), s2 = leg_seed(seed, ++leg);
    GridSpec g{0.0, 1.0, step};
    replica_map(m, [&](std::size_t i) {
      gue[i] = pointed_ep_sample_gue(n, 0.0, 0.0, nu, 1.0, s1 + i);
      DriftedEnsembleSpec spec{0.0, std::vector<double>(n, 0.0), nu};
      blp[i] = blp_sample(spec, g, s2 + i).values.back();
    });
    worst = std::max(worst, ks_two_sample(EmpiricalSample::from(gue, s1),
                                          EmpiricalSample::from(blp, s2)));
  }
  r.statistic = worst;
  r.replica_count = static_cast<long>(m);
  return r;
}

TestReport reorder(const ExperimentConfig& c, uint64_t seed) {
  TestReport r;
  r.threshold = c.get("threshold", 0.02);
  const std::size_t m =
      static_cast<std::size_t>(c.replicas > 0 ? c.replicas : 50000);
  const double step = c.get("step", 1e-3);
  GridSpec g{0.0, 1.0, step};
  double worst = 0.0;
  int leg = 0;
  const std::vector<std::pair<std::vector<double>, std::vector<double>>>
      cases = {{{0.0, 1.0}, {1.0, 0.0}}, {{0.0, 1.0, 2.0}, {2.0, 0.0, 1.0}}};
  for (const auto& [nu, perm] : cases) {
    std::vector<double> a(m), b(m);
    uint64_t s1 = leg_seed(seed, ++leg), s2 = leg_seed(seed, ++leg);
    replica_map(m, [&](std::size_t i) {
      DriftedEnsembleSpec sa{0.0, std::vector<double>(nu.size(), 0.0), nu};
      DriftedEnsembleSpec sb{0.0, std::vector<double>(nu.size(), 0.0), perm};
      a[i] = blp_sample(sa, g, s1 + i).values.back();
      b[i] = blp_sample(sb, g, s2 + i).values.back();
    });
    worst = std::max(worst, ks_two_sample(EmpiricalSample::from(a, s1),
                                          EmpiricalSample::from(b, s2)));
  }
  r.statistic = worst;
  r.replica_count = static_cast<long>(m);
  return r;
}

TestReport burke_oy(const ExperimentConfig& c, uint64_t seed) {
  TestReport r;
  r.threshold = c.get("threshold", 0.02);
  const std::size_t m =
      static_cast<std::size_t>(c.replicas > 0 ? c.replicas : 50000);
  const double step = c.get("step", 0.005);
  const double nu = c.get("nu", 0.0), mu = c.get("mu", 1.0);
  double worst = 0.0;
  int leg = 0;
  for (double y : {1.0, 2.0}) {
    std::vector<double> fwd(m), swp(m);
    uint64_t s1 = leg_seed(seed, ++leg), s2 = leg_seed(seed, ++leg);
    replica_map(m, [&](std::size_t i) {
      fwd[i] = compose_two_metrics(nu, mu, {y}, step, s1 + i)[0];
      swp[i] = compose_two_metrics(mu, nu, {y}, step, s2 + i)[0];
    });
    worst = std::max(worst, ks_two_sample(EmpiricalSample::from(fwd, s1),
                                          EmpiricalSample::from(swp, s2)));
  }
  r.statistic = worst;
  r.replica_count = static_cast<long>(m);
  return r;
}

TestReport stat_oy(const ExperimentConfig& c, uint64_t seed) {
  TestReport r;
  r.threshold = c.get("threshold", 0.02);
  const std::size_t m =
      static_cast<std::size_t>(c.replicas > 0 ? c.replicas : 50000);
  const double step = c.get("step", 0.005);
  const double nu = c.get("nu", 2.0), mu = c.get("mu", 0.0);
  const double t_lo = c.get("t_lo", -15.0);
  std::vector<double> inc(m), ref(m);
  uint64_t s1 = leg_seed(seed, 1), s2 = leg_seed(seed, 2);
  replica_map(m, [&](std::size_t i) {
    std::vector<double> g =
        compose_bm_metric(nu, mu, t_lo, {0.0, 1.0}, step, s1 + i);
    inc[i] = g[1] - g[0];
    CounterRng rng(s2 + i);
    ref[i] = nu + std::sqrt(2.0) * rng.normal();
  });
  r.statistic = ks_two_sample(EmpiricalSample::from(inc, s1),
                              EmpiricalSample::from(ref, s2));
  r.replica_count = static_cast<long>(m);
  return r;
}

TestReport time_inv(const ExperimentConfig& c, uint64_t seed) {
  TestReport r;
  r.threshold = c.get("threshold", 0.02);
  const std::size_t m =
      static_cast<std::size_t>(c.replicas > 0 ? c.replicas : 50000);
  const double mu = c.get("mu", -0.4), nu = c.get("nu", 1.3);
  // grid nodes are the exact pullbacks of the evaluation times {0.5, 1, 2}
  GridSpec g{0.0, 2.0, 0.5};
  const double ts[3] = {0.5, 1.0, 2.0};
  std::vector<std::vector<double>> a(3, std::vector<double>(m)),
      b(3, std::vector<double>(m));
  uint64_t s1 = leg_seed(seed, 1), s2 = leg_seed(seed, 2);
  replica_map(m, [&](std::size_t i) {
    PathSample p = sample_bm(nu, g, s1 + i, mu);
    PathSample q = classical_invert(p, GridSpec{0.5, 2.0, 0.5});
    PathSample d = sample_bm(mu, g, s2 + i, nu);
    for (int j = 0; j < 3; ++j) {
      a[j][i] = q.values[q.grid.nearest(ts[j])];
      b[j][i] = d.values[d.grid.nearest(ts[j])];
    }
  });
  double worst = 0.0;
  for (int j = 0; j < 3; ++j)
    worst = std::max(worst, ks_two_sample(EmpiricalSample::from(a[j], s1),
                                          EmpiricalSample::from(b[j], s2)));
  r.statistic = worst;
  r.replica_count = static_cast<long>(m);
  return r;
}

// violation counters for the three quadrangle tests; statistic = count
long quad_violations(const KernelSample& K, double slack) {
  long bad = 0;
  for (std::size_t i = 0; i + 1 < K.x_grid.size(); ++i)
    for (std::size_t j = 0; j + 1 < K.y_grid.size(); ++j) {
      double lhs = K.at(i, j) + K.at(i + 1, j + 1);
      double rhs = K.at(i, j + 1) + K.at(i + 1, j);
      if (lhs < rhs - slack) ++bad;
    }
  return bad;
}

TestReport quad_blp(const ExperimentConfig& c, uint64_t seed) {
  TestReport r;
  r.threshold = c.get("threshold", 0.0);
  const std::size_t m =
      static_cast<std::size_t>(c.replicas > 0 ? c.replicas : 1000);
  GridSpec xg{0.0, 0.45, 0.15}, yg{1.0, 1.45, 0.15};
  std::vector<long> bad(m);
  uint64_t s1 = leg_seed(seed, 1);
  replica_map(m, [&](std::size_t i) {
    bad[i] = quad_violations(blp_kernel(3, xg, yg, 0.005, s1 + i), 1e-9);
  });
  long total = 0;
  for (long v : bad) total += v;
  r.statistic = static_cast<double>(total);
  r.replica_count = static_cast<long>(m);
  return r;
}

TestReport quad_oy(const ExperimentConfig& c, uint64_t seed) {
  TestReport r;
  r.threshold = c.get("threshold", 0.0);
  const std::size_t m =
      static_cast<std::size_t>(c.replicas > 0 ? c.replicas : 1000);
  GridSpec xg{0.0, 0.45, 0.15}, yg{1.0, 1.45, 0.15};
  std::vector<long> bad(m);
  uint64_t s1 = leg_seed(seed, 1);
  replica_map(m, [&](std::size_t i) {
    bad[i] = quad_violations(oy_kernel(2, xg, yg, 0.01, s1 + i), 1e-4);
  });
  long total = 0;
  for (long v : bad) total += v;
  r.statistic = static_cast<double>(total);
  r.replica_count = static_cast<long>(m);
  return r;
}

TestReport quad_kpz(const ExperimentConfig& c, uint64_t seed) {
  TestReport r;
  r.threshold = c.get("threshold", 0.0);
  const std::size_t m =
      static_cast<std::size_t>(c.replicas > 0 ? c.replicas : 1000);
  std::vector<double> xs = {0.0, 0.15, 0.3, 0.45};
  std::vector<double> ys = {1.0, 1.15, 1.3, 1.45};
  GridSpec domain{-5.0, 6.0, 0.15};
  SHEParams p;
  std::vector<long> bad(m);
  uint64_t s1 = leg_seed(seed, 1);
  replica_map(m, [&](std::size_t i) {
    bad[i] = quad_violations(she_kernel(xs, ys, domain, 0.5, p, s1 + i), 1e-4);
  });
  long total = 0;
  for (long v : bad) total += v;
  r.statistic = static_cast<double>(total);
  r.replica_count = static_cast<long>(m);
  return r;
}

TestReport she_heat(const ExperimentConfig& c, uint64_t seed) {
  TestReport r;
  r.threshold = c.get("threshold", 0.05);
  const std::size_t m =
      static_cast<std::size_t>(c.replicas > 0 ? c.replicas : 10000);
  GridSpec g{-7.0, 7.0, c.get("eps", 0.1)};
  GridFunction init = GridFunction::narrow_wedge(g, 0.0);
  SHEParams p;
  const std::vector<double> ys = {-2.0, -1.0, 0.0, 1.0, 2.0};
  std::vector<std::vector<double>> acc(ys.size(), std::vector<double>(m));
  uint64_t s1 = leg_seed(seed, 1);
  replica_map(m, [&](std::size_t i) {
    SHEField f = she_solve(init, 1.0, p, s1 + i);
    for (std::size_t j = 0; j < ys.size(); ++j)
      acc[j][i] = f.z[g.nearest(ys[j])];
  });
  double worst = 0.0;
  for (std::size_t j = 0; j < ys.size(); ++j) {
    double hk = std::exp(-ys[j] * ys[j] / 2.0) / std::sqrt(2.0 * M_PI);
    worst = std::max(worst, std::abs(mean_of(acc[j]) - hk) / hk);
  }
  r.statistic = worst;
  r.replica_count = static_cast<long>(m);
  return r;
}

TestReport mix_mc(const ExperimentConfig& c, uint64_t seed) {
  // n = 2, r = 1, h = (0, 2): the mixture has two parallel edge processes,
  // starts (0,2) weight +2 and (1,2) weight -1 after folding in the binomial
  // mass and c = 2. Both sides are sampled exactly.
  TestReport r;
  r.threshold = c.get("threshold", 3.0);
  const std::size_t m =
      static_cast<std::size_t>(c.replicas > 0 ? c.replicas : 100000);
  const double h1 = 0.0, h2 = 2.0, tau = 1.0;
  const double qs[3] = {-1.0, 0.0, 1.0};
  std::vector<std::vector<double>> lhs(3, std::vector<double>(m)),
      rhs(3, std::vector<double>(m));
  uint64_t s1 = leg_seed(seed, 1), s2 = leg_seed(seed, 2);
  auto functional = [](double L, double q) {
    return std::exp(-std::max(L - q, 0.0));
  };
  replica_map(m, [&](std::size_t i) {
    CounterRng rng(s1 + i);
    double u = rng.uniform();
    double L = blp2_exact(h1 + u, h2, tau, rng);
    CounterRng rng2(s2 + i);
    int s = rng2.next_u64() & 1;  // S_1 ~ Bernoulli(1/2)
    double ep = parallel_ep_sample_gue({h1 + s, h2}, 0.0, tau, rng2.next_u64());
    double delta = (h2 - h1) - s;  // Vandermonde of h/r + S
    double sign = s ? -1.0 : 1.0;
    for (int j = 0; j < 3; ++j) {
      lhs[j][i] = functional(L, qs[j]);
      rhs[j][i] = 2.0 * sign * delta * functional(ep, qs[j]);
    }
  });
  double worst = 0.0;
  for (int j = 0; j < 3; ++j) {
    double diff = mean_of(lhs[j]) - mean_of(rhs[j]);
    double se = std::sqrt(std::pow(bootstrap_se(lhs[j], 200, 11 + j), 2) +
                          std::pow(bootstrap_se(rhs[j], 200, 21 + j), 2));
    worst = std::max(worst, std::abs(diff) / se);
  }
  r.statistic = worst;
  r.replica_count = static_cast<long>(m);
  return r;
}

TestReport trend_oy(const ExperimentConfig& c, uint64_t seed) {
  TestReport r;
  r.threshold = c.get("threshold", 0.02);
  const std::size_t m =
      static_cast<std::size_t>(c.replicas > 0 ? c.replicas : 4000);
  const double theta = c.get("theta", 1.0);
  const double n_lo = c.get("n_lo", 2.0), n_hi = c.get("n_hi", 4.0);
  const double step = c.get("step", 0.02);
  EmpiricalSample ref = tw_reference(424242, 400, 10000);
  double ks[2];
  int leg = 0;
  for (double n : {n_lo, n_hi}) {
    OYParams p = make_oy_params(theta, n);
    std::vector<double> v(m);
    uint64_t s1 = leg_seed(seed, ++leg);
    replica_map(m, [&](std::size_t i) {
      v[i] = oy_scaled_kernel_sample(p, 0.0, 0.0, s1 + i, step);
    });
    ks[leg - 1] = ks_two_sample(EmpiricalSample::from(v, s1), ref);
  }
  r.statistic = ks[1] - ks[0];
  r.replica_count = static_cast<long>(m);
  return r;
}

TestReport trend_kpz(const ExperimentConfig& c, uint64_t seed) {
  TestReport r;
  r.threshold = c.get("threshold", 0.02);
  const std::size_t m =
      static_cast<std::size_t>(c.replicas > 0 ? c.replicas : 6000);
  // t=1 vs t=2 gives a convergence gap that clears the KS noise floor at 6e3
  const double n_lo = c.get("n_lo", 1.0), n_hi = c.get("n_hi", 2.0);
  const double eps = c.get("eps", 0.1);
  EmpiricalSample ref = tw_reference(424242, 400, 10000);
  SHEParams p;
  double ks[2];
  int leg = 0;
  for (double n : {n_lo, n_hi}) {
    std::vector<double> v(m);
    uint64_t s1 = leg_seed(seed, ++leg);
    replica_map(m, [&](std::size_t i) {
      v[i] = kpz_scaled_kernel_sample(n, 0.0, 0.0, eps, p, s1 + i);
    });
    ks[leg - 1] = ks_two_sample(EmpiricalSample::from(v, s1), ref);
  }
  r.statistic = ks[1] - ks[0];
  r.replica_count = static_cast<long>(m);
  return r;
}

TestReport wedge(const ExperimentConfig& c, uint64_t seed) {
  TestReport r;
  r.threshold = c.get("threshold", 0.05);
  const std::size_t m =
      static_cast<std::size_t>(c.replicas > 0 ? c.replicas : 1000);
  const int n = static_cast<int>(c.get("n", 100));
  const double alpha = c.get("alpha", 0.1);
  const double rn = static_cast<double>(n);
  std::vector<double> times;
  for (int k = 1; k <= 30; ++k) times.push_back(0.1 * k);
  std::vector<int> ok0(m), ok1(m);
  uint64_t s1 = leg_seed(seed, 1);
  replica_map(m, [&](std::size_t i) {
    std::vector<double> top = dyson_top_path(n, times, s1 + i);
    int g0 = 1, g1 = 1;
    for (std::size_t k = 0; k < times.size(); ++k) {
      double t = times[k];
      double lam = top[k] - std::sqrt(rn) * (t + 1.0);
      for (double h : {0.0, 1.0}) {
        double bound = std::pow(rn, alpha) + h * h -
                       (2.0 / 3.0) * std::abs(t - 1.0) * h * std::pow(rn, 0.25);
        if (lam > bound) (h == 0.0 ? g0 : g1) = 0;
      }
    }
    ok0[i] = g0;
    ok1[i] = g1;
  });
  long c0 = 0, c1 = 0;
  for (std::size_t i = 0; i < m; ++i) {
    c0 += ok0[i];
    c1 += ok1[i];
  }
  double frac = static_cast<double>(std::min(c0, c1)) / static_cast<double>(m);
  r.statistic = 1.0 - frac;  // fraction escaping the bound, worst h
  r.replica_count = static_cast<long>(m);
  return r;
}

}  // namespace

const std::vector<std::string>& identity_test_catalog() {
  static const std::vector<std::string> ids = {
      "DW-EXACT",  "DW-ROUTES", "DW-WEIGHTS", "EP-BLP",   "REORDER",
      "BURKE-OY",  "STAT-OY",   "TIMEINV",    "QUAD-BLP", "QUAD-OY",
      "QUAD-KPZ",  "SHE-HEAT",  "MIX-MC",     "TREND-OY", "TREND-KPZ",
      "WEDGE"};
  return ids;
}

TestReport run_identity_test(const std::string& test_id,
                             const ExperimentConfig& config, uint64_t seed) {
  using Fn = TestReport (*)(const ExperimentConfig&, uint64_t);
  static const std::map<std::string, Fn> dispatch = {
      {"DW-EXACT", dw_exact},   {"DW-ROUTES", dw_routes},
      {"DW-WEIGHTS", dw_weight_sum}, {"EP-BLP", ep_blp},
      {"REORDER", reorder},     {"BURKE-OY", burke_oy},
      {"STAT-OY", stat_oy},     {"TIMEINV", time_inv},
      {"QUAD-BLP", quad_blp},   {"QUAD-OY", quad_oy},
      {"QUAD-KPZ", quad_kpz},   {"SHE-HEAT", she_heat},
      {"MIX-MC", mix_mc},       {"TREND-OY", trend_oy},
      {"TREND-KPZ", trend_kpz}, {"WEDGE", wedge}};
  auto it = dispatch.find(test_id);
  if (it == dispatch.end())
    throw std::invalid_argument("unknown test id: " + test_id);
  auto t0 = std::chrono::steady_clock::now();
  TestReport r = it->second(config, seed);
  auto t1 = std::chrono::steady_clock::now();
  r.test_id = test_id;
  r.pass = r.statistic <= r.threshold;
  r.runtime = std::chrono::duration<double>(t1 - t0).count();
  return r;
}

const std::vector<std::string>& sample_experiment_catalog() {
  static const std::vector<std::string> ids = {"oy-kernel", "kpz-kernel",
                                               "blp2", "gue-edge"};
  return ids;
}

SampleRun run_sample_experiment(const std::string& sample_id,
                                const ExperimentConfig& c, uint64_t seed) {
  const std::size_t m =
      static_cast<std::size_t>(c.replicas > 0 ? c.replicas : 1000);
  std::vector<double> v(m);
  uint64_t base = leg_seed(seed, 1);
  if (sample_id == "oy-kernel") {
    OYParams p = make_oy_params(c.get("theta", 1.0), c.get("n", 1.0));
    double x = c.get("x", 0.0), y = c.get("y", 0.0);
    double step = c.get("step", 0.02);
    replica_map(m, [&](std::size_t i) {
      v[i] = oy_scaled_kernel_sample(p, x, y, base + i, step);
    });
  } else if (sample_id == "kpz-kernel") {
    double n = c.get("n", 1.0), x = c.get("x", 0.0), y = c.get("y", 0.0);
    double eps = c.get("eps", 0.1);
    SHEParams p;
    replica_map(m, [&](std::size_t i) {
      v[i] = kpz_scaled_kernel_sample(n, x, y, eps, p, base + i);
    });
  } else if (sample_id == "blp2") {
    double h1 = c.get("h1", 0.0), h2 = c.get("h2", 0.0);
    double tau = c.get("tau", 1.0);
    replica_map(m, [&](std::size_t i) {
      v[i] = blp2_exact(h1, h2, tau, base + i);
    });
  } else if (sample_id == "gue-edge") {
    int N = static_cast<int>(c.get("N", 400));
    replica_map(m, [&](std::size_t i) { v[i] = gue_edge_sample(N, base + i); });
  } else {
    throw std::invalid_argument("unknown sample id: " + sample_id);
  }
  SampleRun out;
  out.values = std::move(v);
  out.seeds.resize(m);
  for (std::size_t i = 0; i < m; ++i) out.seeds[i] = base + i;
  return out;
}

}  // namespace kpzlab
