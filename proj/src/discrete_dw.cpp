#include "kpzlab/discrete_dw.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "kpzlab/rng.hpp"

namespace kpzlab {

namespace {
constexpr int kEnumerationBudget = 24;  // cap on n*t for full enumeration
}

void YState::check() const {
  if (y.empty()) throw std::invalid_argument("y state: empty");
  for (std::size_t i = 0; i + 1 < y.size(); ++i)
    if (y[i] < y[i + 1])
      throw std::invalid_argument("y state: coordinates must be nonincreasing");
  if (p <= Rat(0) || p >= Rat(1))
    throw std::invalid_argument("y state: p must lie in (0,1)");
}

Rat SignedMixture::weight_sum() const {
  Rat s(0);
  for (const Entry& e : entries) s += e.weight;
  return s;
}

YState y_step(const YState& state, const std::vector<int>& xi) {
  state.check();
  if (xi.size() != state.y.size())
    throw std::invalid_argument("y step: xi length mismatch");
  for (int b : xi)
    if (b != 0 && b != 1) throw std::invalid_argument("y step: xi not binary");
  YState out = state;
  out.y[0] = state.y[0] + xi[0];
  for (std::size_t k = 1; k < state.y.size(); ++k)
    out.y[k] = std::min(state.y[k] + xi[k], out.y[k - 1]);
  return out;
}

namespace {

// last-passage route: explicit enumeration of lattice paths. Lines are
// B_k(s) = -sum_{i<=s} xi(k,i) with entry heights -y0_k; a path entering on
// line l jumps down through lines l..n at nondecreasing times, collecting the
// line increments between consecutive jumps. Y_n(t) = -L(t).
long lattice_lpp_bottom(const std::vector<long>& y0,
                        const std::vector<std::vector<int>>& xi) {
  const int n = static_cast<int>(y0.size());
  const int t = static_cast<int>(xi.size());
  std::vector<std::vector<long>> b(n, std::vector<long>(t + 1, 0));
  for (int k = 0; k < n; ++k)
    for (int s = 1; s <= t; ++s) b[k][s] = b[k][s - 1] - xi[s - 1][k];

  long best = 0;
  bool any = false;
  // path on lines l..n-1 (0-indexed), jump off line k at time jt[k]
  std::function<void(int, int, long)> walk = [&](int k, int prev_time,
                                                 long acc) {
    if (k == n - 1) {
      long v = acc + b[k][t] - b[k][prev_time];
      if (!any || v > best) best = v;
      any = true;
      return;
    }
    for (int jt = prev_time; jt <= t; ++jt)
      walk(k + 1, jt, acc + b[k][jt] - b[k][prev_time]);
  };
  for (int l = 0; l < n; ++l) walk(l, 0, -y0[l]);
  return -best;
}

}  // namespace

SignedPmf y_law_exact(const YState& y0, int t) {
  y0.check();
  const int n = y0.n();
  const long long cells = static_cast<long long>(n) * t;
  if (cells > kEnumerationBudget)
    throw std::invalid_argument("y law: enumeration budget exceeded");
  const Rat q = Rat(1) - y0.p;
  std::vector<Rat> weight_by_ones(cells + 1);
  for (long long k = 0; k <= cells; ++k)
    weight_by_ones[k] =
        rat_pow(y0.p, static_cast<int>(k)) * rat_pow(q, static_cast<int>(cells - k));

  SignedPmf law;
  std::vector<std::vector<int>> xi(t, std::vector<int>(n, 0));
  const uint64_t total = 1ULL << cells;
  for (uint64_t mask = 0; mask < total; ++mask) {
    int ones = 0;
    for (long long b = 0; b < cells; ++b) {
      int bit = (mask >> b) & 1u;
      xi[b / n][b % n] = bit;
      ones += bit;
    }
    YState s = y0;
    for (int step = 0; step < t; ++step) s = y_step(s, xi[step]);
    long bottom = s.y[n - 1];
    if (bottom != lattice_lpp_bottom(y0.y, xi))
      throw std::logic_error("y law: recursion and last-passage routes differ");
    law[bottom] += weight_by_ones[ones];
  }
  return law;
}

double vandermonde(const std::vector<double>& v) {
  double d = 1.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) d *= v[j] - v[i];
  return d;
}

Rat vandermonde_rat(const std::vector<Rat>& v) {
  Rat d(1);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) d *= v[j] - v[i];
  return d;
}

std::vector<long> hat_shift(const std::vector<long>& z) {
  std::vector<long> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i)
    out[i] = z[i] - static_cast<long>(i + 1);
  return out;
}

Rat dw_constant(int n) {
  Int num = Int(1) << (n * (n - 1) / 2);
  Int den = 1;
  Int fact = 1;
  for (int i = 1; i < n; ++i) {
    fact *= i;
    den *= fact;
  }
  return Rat(num, den);
}

namespace {

bool strictly_decreasing(const std::vector<long>& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] <= v[i + 1]) return false;
  return true;
}

Rat vandermonde_hat_over_r(const std::vector<long>& z, int r) {
  std::vector<Rat> v;
  v.reserve(z.size());
  std::vector<long> h = hat_shift(z);
  for (long x : h) v.emplace_back(Int(x), Int(r));
  return vandermonde_rat(v);
}

void enumerate_s(int n, int i, std::vector<int>& s,
                 const std::function<void(const std::vector<int>&)>& visit) {
  if (i == n) {
    visit(s);
    return;
  }
  for (int v = 0; v <= n - 1 - i; ++v) {
    s[i] = v;
    enumerate_s(n, i + 1, s, visit);
  }
}

}  // namespace

SignedMixture dw_weights(const std::vector<long>& y, int r, int n) {
  if (static_cast<int>(y.size()) != n)
    throw std::invalid_argument("dw weights: y length mismatch");
  if (r < 1) throw std::invalid_argument("dw weights: r must be >= 1");
  // weight(s) = c' (-1)^{sum s} prod C(n-i, s_i) * Delta(hat(y + r s)) / r^C(n,2)
  // with c' = 1/(1! ... (n-1)!); equivalently c E[(-1)^S Delta(.)] with the
  // binomial masses of S folded in.
  Rat cprime(1);
  {
    Int fact = 1, den = 1;
    for (int i = 1; i < n; ++i) {
      fact *= i;
      den *= fact;
    }
    cprime = Rat(Int(1), den);
  }
  SignedMixture mix;
  mix.n = n;
  mix.r = r;
  std::vector<int> s(n, 0);
  enumerate_s(n, 0, s, [&](const std::vector<int>& sv) {
    std::vector<long> start(y);
    int parity = 0;
    Int binoms = 1;
    for (int i = 0; i < n; ++i) {
      start[i] += static_cast<long>(r) * sv[i];
      parity += sv[i];
      binoms *= binomial_int(n - 1 - i, sv[i]);
    }
    if (!strictly_decreasing(hat_shift(start)))
      throw std::invalid_argument("initial condition not admissible");
    Rat w = cprime * Rat(binoms) * vandermonde_hat_over_r(start, r);
    if (parity % 2) w = -w;
    mix.entries.push_back({w, start});
  });
  return mix;
}

namespace {

// t-step Bernoulli(p) kernel on the hat-shifted lattice
Rat bernoulli_kernel(long from, long to, const Rat& p, int t) {
  long k = to - from;
  if (k < 0 || k > t) return Rat(0);
  return Rat(binomial_int(t, static_cast<int>(k))) *
         rat_pow(p, static_cast<int>(k)) *
         rat_pow(Rat(1) - p, static_cast<int>(t - k));
}

Rat det_rat(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == Rat(0)) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == Rat(0)) continue;
      Rat f = m[row][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
    }
  }
  return det;
}

void enumerate_states(const std::vector<long>& z0, int t, int i,
                      std::vector<long>& z,
                      const std::function<void(const std::vector<long>&)>& visit) {
  const int n = static_cast<int>(z0.size());
  if (i == n) {
    visit(z);
    return;
  }
  for (int d = 0; d <= t; ++d) {
    z[i] = z0[i] + d;
    if (i > 0 && z[i] > z[i - 1]) continue;  // stay weakly decreasing
    enumerate_states(z0, t, i + 1, z, visit);
  }
}

}  // namespace

SignedPmf z_law_exact(const std::vector<long>& z0, const Rat& p, int t) {
  const int n = static_cast<int>(z0.size());
  if (static_cast<long long>(n) * t > kEnumerationBudget)
    throw std::invalid_argument("z law: enumeration budget exceeded");
  std::vector<long> h0 = hat_shift(z0);
  std::vector<Rat> h0r;
  for (long x : h0) h0r.emplace_back(Int(x));
  Rat d0 = vandermonde_rat(h0r);
  if (d0 == Rat(0)) throw std::invalid_argument("z law: Vandermonde of start is zero");

  SignedPmf law;
  Rat total(0);
  std::vector<long> z(n);
  enumerate_states(z0, t, 0, z, [&](const std::vector<long>& zv) {
    std::vector<long> hz = hat_shift(zv);
    if (!strictly_decreasing(hz)) return;
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = bernoulli_kernel(h0[i], hz[j], p, t);
    std::vector<Rat> hzr;
    for (long x : hz) hzr.emplace_back(Int(x));
    Rat prob = vandermonde_rat(hzr) / d0 * det_rat(std::move(m));
    if (prob == Rat(0)) return;
    if (prob < Rat(0))
      throw std::logic_error("z law: negative transition probability");
    law[zv[n - 1]] += prob;
    total += prob;
  });
  if (total != Rat(1))
    throw std::logic_error("z law: probabilities do not sum to one");
  return law;
}

namespace {

// distribution of R_i = sum of m iid uniforms on {1..r}: map value -> count
std::map<long, Int> uniform_sum_counts(int m, int r) {
  std::map<long, Int> c;
  c[0] = 1;
  for (int k = 0; k < m; ++k) {
    std::map<long, Int> next;
    for (const auto& [v, cnt] : c)
      for (int u = 1; u <= r; ++u) next[v + u] += cnt;
    c = std::move(next);
  }
  return c;
}

void accumulate_signed(SignedPmf& into, const SignedPmf& pmf, const Rat& w) {
  for (const auto& [k, v] : pmf) into[k] += w * v;
}

}  // namespace

double dw_identity_check(const std::vector<long>& y, int r, const Rat& p,
                         int t, int n) {
  if (static_cast<int>(y.size()) != n)
    throw std::invalid_argument("dw identity: y length mismatch");

  // LHS: Y_n(t) law, start y + R averaged over the uniform randomization
  SignedPmf lhs;
  std::vector<std::map<long, Int>> counts;
  Rat denom(1);
  for (int i = 0; i < n; ++i) {
    counts.push_back(uniform_sum_counts(n - 1 - i, r));
    denom *= rat_pow(Rat(Int(r)), n - 1 - i);
  }
  std::vector<long> rho(n, 0);
  std::function<void(int, Int)> rec = [&](int i, Int count) {
    if (i == n) {
      std::vector<long> start(y);
      for (int j = 0; j < n; ++j) start[j] += rho[j];
      for (std::size_t j = 0; j + 1 < start.size(); ++j)
        if (start[j] < start[j + 1])
          throw std::invalid_argument("initial condition not admissible");
      YState s{start, p};
      accumulate_signed(lhs, y_law_exact(s, t), Rat(count) / denom);
      return;
    }
    for (const auto& [v, cnt] : counts[i]) {
      rho[i] = v;
      rec(i + 1, count * cnt);
    }
  };
  rec(0, Int(1));

  // RHS: signed combination of conditioned-walk laws
  SignedPmf rhs;
  SignedMixture mix = dw_weights(y, r, n);
  for (const auto& entry : mix.entries)
    accumulate_signed(rhs, z_law_exact(entry.start, p, t), entry.weight);

  Rat worst(0);
  auto scan = [&](const SignedPmf& a, const SignedPmf& b) {
    for (const auto& [k, v] : a) {
      Rat diff = v;
      auto it = b.find(k);
      if (it != b.end()) diff -= it->second;
      if (diff < Rat(0)) diff = -diff;
      if (diff > worst) worst = diff;
    }
  };
  scan(lhs, rhs);
  scan(rhs, lhs);
  return to_double(worst);
}

SignedPmf uniform_mass(int r) {
  SignedPmf u;
  for (int v = 1; v <= r; ++v) u[v] = Rat(Int(1), Int(r));
  return u;
}

namespace {

SignedPmf convolve(const SignedPmf& a, const SignedPmf& b) {
  SignedPmf out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) out[i + j] += x * y;
  return out;
}

SignedPmf conv_power(const SignedPmf& a, int m) {
  SignedPmf out;
  out[0] = Rat(1);
  for (int k = 0; k < m; ++k) out = convolve(out, a);
  return out;
}

Rat eval(const SignedPmf& f, long j) {
  auto it = f.find(j);
  return it == f.end() ? Rat(0) : it->second;
}

SignedPmf forward_diff(const SignedPmf& f) {
  SignedPmf out;
  long lo = f.empty() ? 0 : f.begin()->first - 1;
  long hi = f.empty() ? 0 : f.rbegin()->first;
  for (long j = lo; j <= hi; ++j) {
    Rat v = eval(f, j + 1) - eval(f, j);
    if (v != Rat(0)) out[j] = v;
  }
  return out;
}

SignedPmf diff_power(SignedPmf f, int m) {
  for (int k = 0; k < m; ++k) f = forward_diff(f);
  return f;
}

// convolution can leave explicit zero entries behind; drop them before
// comparing supports
bool same_pmf(const SignedPmf& a, const SignedPmf& b) {
  for (const auto& [k, v] : a)
    if (v != eval(b, k)) return false;
  for (const auto& [k, v] : b)
    if (v != eval(a, k)) return false;
  return true;
}

}  // namespace

bool finite_difference_identities(const SignedPmf& u_mass, int n,
                                  uint64_t seed) {
  CounterRng rng(seed);
  // random integer-valued test function on a window
  SignedPmf g;
  for (long j = -6; j <= 6; ++j)
    g[j] = Rat(Int(static_cast<long>(rng.uniform_index(41)) - 20));

  // (i) binomial expansion of (-D)^n
  SignedPmf dng = diff_power(g, n);
  for (long j = -6; j <= 0; ++j) {
    Rat lhs(0);
    for (int l = 0; l <= n; ++l) {
      Rat term = Rat(binomial_int(n, l)) * eval(g, j + l);
      lhs += (l % 2) ? -term : term;
    }
    Rat rhs = (n % 2) ? -eval(dng, j) : eval(dng, j);
    if (lhs != rhs) return false;
  }

  // (ii) D commutes with convolution
  if (!same_pmf(forward_diff(convolve(u_mass, g)),
                convolve(forward_diff(u_mass), g)))
    return false;

  // (iii) product reduction: D^{n-i} (u^{*(n-i)}) = (Du)^{*(n-i)} per
  // coordinate of the product mass function
  SignedPmf du = forward_diff(u_mass);
  for (int i = 1; i <= n; ++i) {
    int m = n - i;
    if (!same_pmf(diff_power(conv_power(u_mass, m), m), conv_power(du, m)))
      return false;
  }
  return true;
}

}  // namespace kpzlab
