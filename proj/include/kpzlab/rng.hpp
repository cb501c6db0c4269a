#pragma once

#include <cmath>
#include <cstdint>

namespace kpzlab {

// Counter-based splittable generator built on the splitmix64 finalizer.
// A generator is a pure function of (seed, stream, counter), so replicas can
// be assigned disjoint streams up front and produce identical output no
// matter how the replica loop is scheduled across threads.
class CounterRng {
 public:
  explicit CounterRng(uint64_t seed, uint64_t stream = 0)
      : key_(mix(mix(seed + 0x9e3779b97f4a7c15ULL) ^
                 mix(stream + 0xbf58476d1ce4e5b9ULL))),
        ctr_(0) {}

  static uint64_t mix(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  uint64_t next_u64() { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++ctr_); }

  // uniform on (0,1)
  double uniform() {
    uint64_t u = next_u64();
    return ((u >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // standard normal, Box-Muller with pair caching
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u = uniform();
    double v = uniform();
    double r = std::sqrt(-2.0 * std::log(u));
    double a = 6.283185307179586476925286766559 * v;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

  // Marsaglia-Tsang; valid for shape >= 1 (all we need: chi^2 with >= 2 dof)
  double gamma(double shape) {
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x = normal();
      double v = 1.0 + c * x;
      if (v <= 0.0) continue;
      v = v * v * v;
      double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  // chi-distributed with k degrees of freedom, k >= 2
  double chi(double k) { return std::sqrt(2.0 * gamma(0.5 * k)); }

  uint64_t uniform_index(uint64_t n) { return next_u64() % n; }

 private:
  uint64_t key_;
  uint64_t ctr_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

// Stateless keyed draw; used where an environment must be re-readable by
// (line, step) coordinates without storing it.
inline double keyed_normal(uint64_t seed, uint64_t a, uint64_t b) {
  uint64_t u1 = CounterRng::mix(CounterRng::mix(seed ^ 0x5851f42d4c957f2dULL) +
                                a * 0x9e3779b97f4a7c15ULL + b);
  uint64_t u2 = CounterRng::mix(u1 + 0x14057b7ef767814fULL);
  double x = ((u1 >> 11) + 0.5) * 0x1.0p-53;
  double y = ((u2 >> 11) + 0.5) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(x)) *
         std::cos(6.283185307179586476925286766559 * y);
}

}  // namespace kpzlab
