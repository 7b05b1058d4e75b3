#pragma once

#include <limits>
#include <memory>
#include <span>
#include <vector>

#include "cesaro/errors.hpp"

namespace cesaro {

enum class GridScheme { Uniform, GeometricNearZero, UniformInPsi, Custom };

/// Cell widths standing in for Lebesgue measure on the sampled interval:
/// midpoint rule on interior points, half-cells at the two ends.
/// Widths sum to x_N - x_1 exactly.
struct CellMeasure {
    std::vector<double> widths;
    double total = 0.0;

    static CellMeasure of(std::span<const double> points);
};

/// Strictly increasing sample abscissas x_1 < ... < x_N inside the open
/// interval (0, l), l finite or +infinity. Immutable after construction;
/// safe to share across threads.
class Grid {
  public:
    Grid(std::vector<double> points, double l, GridScheme scheme);

    std::size_t size() const { return points_.size(); }
    double operator[](std::size_t i) const { return points_[i]; }
    std::span<const double> points() const { return points_; }
    double x_min() const { return points_.front(); }
    double x_max() const { return points_.back(); }
    double l() const { return l_; }
    GridScheme scheme() const { return scheme_; }

    const CellMeasure& measure() const { return measure_; }
    double cell_width(std::size_t i) const { return measure_.widths[i]; }

    bool same_points(const Grid& other) const;

  private:
    std::vector<double> points_;
    double l_;
    GridScheme scheme_;
    CellMeasure measure_;
};

using GridPtr = std::shared_ptr<const Grid>;

/// Build a grid of n points on [x_min, x_max] inside (0, l).
/// For l = infinity a finite x_max is required. UniformInPsi placement needs
/// a weight-supplied transform; use make_grid_in_psi from weight.hpp.
GridPtr make_grid(double l, std::size_t n, GridScheme scheme, double x_min,
                  double x_max);

/// Real values sampled on a grid — the computational stand-in for a
/// measurable function on (0, l). Values must all be finite.
struct SampledFunction {
    GridPtr grid;
    std::vector<double> values;

    SampledFunction(GridPtr g, std::vector<double> v);

    std::size_t size() const { return values.size(); }
    double x(std::size_t i) const { return (*grid)[i]; }
};

/// Sample a callable on a grid.
template <class F>
SampledFunction sample(GridPtr grid, F&& fn) {
    std::vector<double> v(grid->size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = fn((*grid)[i]);
    return SampledFunction{std::move(grid), std::move(v)};
}

/// Trapezoidal rule for f over [lo, hi] within the grid range, with linear
/// interpolation at the cut points. Exact for affine integrands.
double trapezoid_integral(const SampledFunction& f, double lo, double hi);

/// F with F(x_i) = integral of |f| over (0, x_i]. The leading cell (0, x_1]
/// uses the constant extension f(x_1); the rest is the trapezoidal rule.
/// F is nondecreasing.
SampledFunction cumulative_abs_integral(const SampledFunction& f);

} // namespace cesaro
