#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kpzlab {

struct EmpiricalSample {
  std::vector<double> values;  // sorted ascending
  uint64_t seed_base = 0;
  long replica_count = 0;

  static EmpiricalSample from(std::vector<double> v, uint64_t seed);
};

// sup-norm distance between the two empirical CDFs, exact merge sweep
double ks_two_sample(const EmpiricalSample& a, const EmpiricalSample& b);

// bootstrap standard error of the sample mean
double bootstrap_se(const std::vector<double>& v, int n_boot, uint64_t seed);

// (lambda_max - 2 sqrt(N)) N^{1/6} samples of the N x N GUE, disk-cached by
// (N, m, seed) under KPZLAB_CACHE_DIR (default: current directory)
EmpiricalSample tw_reference(uint64_t seed, int N, std::size_t m);

std::string tw_cache_path(uint64_t seed, int N, std::size_t m);

}  // namespace kpzlab
