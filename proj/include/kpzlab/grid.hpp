#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "kpzlab/logsum.hpp"

namespace kpzlab {

// Uniform 1-D grid [lo, hi] with step > 0; node i sits at lo + i*step.
struct GridSpec {
  double lo = 0.0;
  double hi = 1.0;
  double step = 1.0;

  std::size_t size() const {
    return static_cast<std::size_t>(std::floor((hi - lo) / step)) + 1;
  }
  double point(std::size_t i) const { return lo + static_cast<double>(i) * step; }
  std::size_t nearest(double x) const {
    double t = (x - lo) / step;
    long i = std::lround(t);
    if (i < 0) i = 0;
    long n = static_cast<long>(size()) - 1;
    if (i > n) i = n;
    return static_cast<std::size_t>(i);
  }
  bool contains(double x) const {
    return x >= lo - 1e-12 * step && x <= hi + 1e-12 * step;
  }
  bool same_as(const GridSpec& o) const {
    double tol = 1e-9 * step;
    return std::abs(lo - o.lo) < tol && std::abs(hi - o.hi) < tol &&
           std::abs(step - o.step) < tol;
  }
};

// Point mass riding on top of a grid density. The mass carries the function
// value at the nearest grid node (0 when the density is -inf there, which is
// how a narrow wedge 0_a is encoded: all-(-inf) values plus one atom).
struct Atom {
  double location = 0.0;
  double log_weight = 0.0;
};

// Extended-real function on a uniform grid, the computational stand-in for an
// upper semicontinuous function. -inf marks points outside the support.
struct GridFunction {
  GridSpec grid;
  std::vector<double> values;
  std::vector<Atom> atoms;

  GridFunction() = default;
  explicit GridFunction(GridSpec g, double fill = kNegInf)
      : grid(g), values(g.size(), fill) {}

  void check() const {
    if (values.size() != grid.size())
      throw std::invalid_argument("grid function: values length mismatch");
    for (const Atom& a : atoms)
      if (!grid.contains(a.location))
        throw std::invalid_argument("grid function: atom outside grid");
  }

  // function value carried at an atom location: the grid value when finite,
  // otherwise 0 (a pure point mass, e.g. a narrow wedge)
  double atom_value(const Atom& a) const {
    double v = values[grid.nearest(a.location)];
    return std::isfinite(v) ? v : 0.0;
  }

  static GridFunction narrow_wedge(GridSpec g, double location) {
    GridFunction f(g);
    f.atoms.push_back({location, 0.0});
    return f;
  }
  static GridFunction constant(GridSpec g, double c) {
    GridFunction f(g);
    for (double& v : f.values) v = c;
    return f;
  }
};

// One realization of a two-variable kernel K(x, y) on a product grid,
// row-major in x. -inf where the model does not define the kernel.
struct KernelSample {
  GridSpec x_grid;
  GridSpec y_grid;
  std::vector<double> values;

  KernelSample() = default;
  KernelSample(GridSpec xg, GridSpec yg, double fill = kNegInf)
      : x_grid(xg), y_grid(yg), values(xg.size() * yg.size(), fill) {}

  double& at(std::size_t i, std::size_t j) {
    return values[i * y_grid.size() + j];
  }
  double at(std::size_t i, std::size_t j) const {
    return values[i * y_grid.size() + j];
  }
};

}  // namespace kpzlab
