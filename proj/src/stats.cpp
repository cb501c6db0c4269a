#include "kpzlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "kpzlab/parallel.hpp"
#include "kpzlab/random_matrix.hpp"
#include "kpzlab/rng.hpp"

namespace kpzlab {

EmpiricalSample EmpiricalSample::from(std::vector<double> v, uint64_t seed) {
  std::sort(v.begin(), v.end());
  EmpiricalSample s;
  s.replica_count = static_cast<long>(v.size());
  s.values = std::move(v);
  s.seed_base = seed;
  return s;
}

double ks_two_sample(const EmpiricalSample& a, const EmpiricalSample& b) {
  if (a.values.empty() || b.values.empty())
    throw std::invalid_argument("ks: empty sample");
  const std::size_t na = a.values.size(), nb = b.values.size();
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < na && j < nb) {
    double x = std::min(a.values[i], b.values[j]);
    while (i < na && a.values[i] <= x) ++i;
    while (j < nb && b.values[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na -
                             static_cast<double>(j) / nb));
  }
  return d;
}

double bootstrap_se(const std::vector<double>& v, int n_boot, uint64_t seed) {
  if (v.empty()) throw std::invalid_argument("bootstrap: empty sample");
  CounterRng rng(seed);
  const std::size_t n = v.size();
  double sum = 0.0, sum2 = 0.0;
  for (int b = 0; b < n_boot; ++b) {
    double m = 0.0;
    for (std::size_t k = 0; k < n; ++k) m += v[rng.uniform_index(n)];
    m /= static_cast<double>(n);
    sum += m;
    sum2 += m * m;
  }
  double mean = sum / n_boot;
  return std::sqrt(std::max(0.0, sum2 / n_boot - mean * mean));
}

std::string tw_cache_path(uint64_t seed, int N, std::size_t m) {
  const char* dir = std::getenv("KPZLAB_CACHE_DIR");
  std::string base = dir && *dir ? dir : ".";
  char buf[128];
  std::snprintf(buf, sizeof buf, "/tw_N%d_m%zu_s%llu.bin", N, m,
                static_cast<unsigned long long>(seed));
  return base + buf;
}

namespace {

bool read_cache(const std::string& path, uint64_t seed, int N, std::size_t m,
                std::vector<double>& out) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) return false;
  char magic[4];
  uint32_t version = 0, n_stored = 0;
  uint64_t m_stored = 0, seed_stored = 0;
  bool ok = std::fread(magic, 1, 4, f) == 4 &&
            std::memcmp(magic, "KPZL", 4) == 0 &&
            std::fread(&version, 4, 1, f) == 1 && version == 1 &&
            std::fread(&n_stored, 4, 1, f) == 1 &&
            n_stored == static_cast<uint32_t>(N) &&
            std::fread(&m_stored, 8, 1, f) == 1 && m_stored == m &&
            std::fread(&seed_stored, 8, 1, f) == 1 && seed_stored == seed;
  if (ok) {
    out.resize(m);
    ok = std::fread(out.data(), 8, m, f) == m;
  }
  std::fclose(f);
  return ok;
}

void write_cache(const std::string& path, uint64_t seed, int N, std::size_t m,
                 const std::vector<double>& v) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) return;  // cache is best-effort
  uint32_t version = 1, n32 = static_cast<uint32_t>(N);
  uint64_t m64 = m, s64 = seed;
  std::fwrite("KPZL", 1, 4, f);
  std::fwrite(&version, 4, 1, f);
  std::fwrite(&n32, 4, 1, f);
  std::fwrite(&m64, 8, 1, f);
  std::fwrite(&s64, 8, 1, f);
  std::fwrite(v.data(), 8, m, f);
  std::fclose(f);
}

}  // namespace

EmpiricalSample tw_reference(uint64_t seed, int N, std::size_t m) {
  std::string path = tw_cache_path(seed, N, m);
  std::vector<double> v;
  if (!read_cache(path, seed, N, m, v)) {
    v.resize(m);
    replica_map(m, [&](std::size_t i) {
      v[i] = gue_edge_sample(N, CounterRng::mix(seed) + i);
    });
    write_cache(path, seed, N, m, v);
  }
  return EmpiricalSample::from(std::move(v), seed);
}

}  // namespace kpzlab
