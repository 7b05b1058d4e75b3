#include "cesaro/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cesaro {

CellMeasure CellMeasure::of(std::span<const double> pts) {
    CellMeasure m;
    const std::size_t n = pts.size();
    m.widths.resize(n);
    m.widths.front() = 0.5 * (pts[1] - pts[0]);
    m.widths.back() = 0.5 * (pts[n - 1] - pts[n - 2]);
    for (std::size_t i = 1; i + 1 < n; ++i)
        m.widths[i] = 0.5 * (pts[i + 1] - pts[i - 1]);
    for (double w : m.widths) m.total += w;
    return m;
}

Grid::Grid(std::vector<double> points, double l, GridScheme scheme)
    : points_(std::move(points)), l_(l), scheme_(scheme) {
    if (points_.size() < 3)
        throw ValidationError("grid needs at least 3 points");
    if (!(l_ > 0.0))
        throw ValidationError("right endpoint l must be positive");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!std::isfinite(points_[i]))
            throw ValidationError("grid point is not finite");
        if (i > 0 && !(points_[i] > points_[i - 1]))
            throw ValidationError("grid points must be strictly increasing");
    }
    if (!(points_.front() > 0.0))
        throw ValidationError("grid must start strictly inside (0, l)");
    if (!(points_.back() < l_))
        throw ValidationError("grid must end strictly below l");
    measure_ = CellMeasure::of(points_);
}

bool Grid::same_points(const Grid& other) const {
    return points_ == other.points_ && l_ == other.l_;
}

GridPtr make_grid(double l, std::size_t n, GridScheme scheme, double x_min,
                  double x_max) {
    if (n < 3) throw ValidationError("make_grid: n must be at least 3");
    if (!(x_min > 0.0) || !std::isfinite(x_min))
        throw ValidationError("make_grid: x_min must be positive and finite");
    if (!std::isfinite(x_max)) {
        if (std::isinf(l))
            throw ValidationError(
                "make_grid: l is infinite, a finite truncation x_max is required");
        throw ValidationError("make_grid: x_max must be finite");
    }
    if (x_min >= x_max)
        throw ValidationError("make_grid: x_min must be below x_max");
    if (!(x_max < l))
        throw ValidationError("make_grid: x_max must be strictly below l");

    std::vector<double> pts(n);
    switch (scheme) {
        case GridScheme::Uniform: {
            const double dx = (x_max - x_min) / static_cast<double>(n - 1);
            for (std::size_t i = 0; i < n; ++i)
                pts[i] = x_min + static_cast<double>(i) * dx;
            break;
        }
        case GridScheme::GeometricNearZero: {
            const double step =
                std::log(x_max / x_min) / static_cast<double>(n - 1);
            for (std::size_t i = 0; i < n; ++i)
                pts[i] = x_min * std::exp(static_cast<double>(i) * step);
            break;
        }
        case GridScheme::UniformInPsi:
            throw ValidationError(
                "make_grid: uniform-in-psi needs a weight transform; use "
                "make_grid_in_psi");
        case GridScheme::Custom:
            throw ValidationError("make_grid: custom grids are built from points");
    }
    pts.front() = x_min;
    pts.back() = x_max;
    return std::make_shared<Grid>(std::move(pts), l, scheme);
}

SampledFunction::SampledFunction(GridPtr g, std::vector<double> v)
    : grid(std::move(g)), values(std::move(v)) {
    if (!grid) throw ValidationError("sampled function needs a grid");
    if (values.size() != grid->size())
        throw ValidationError("sampled function values do not match grid size");
    for (double x : values)
        if (!std::isfinite(x))
            throw ValidationError("sampled function value is not finite");
}

namespace {

// Linear interpolation of f at a point inside the grid range.
double interp(const SampledFunction& f, double x) {
    const auto pts = f.grid->points();
    auto it = std::lower_bound(pts.begin(), pts.end(), x);
    if (it == pts.begin()) return f.values.front();
    if (it == pts.end()) return f.values.back();
    const std::size_t j = static_cast<std::size_t>(it - pts.begin());
    const double t = (x - pts[j - 1]) / (pts[j] - pts[j - 1]);
    return f.values[j - 1] + t * (f.values[j] - f.values[j - 1]);
}

} // namespace

double trapezoid_integral(const SampledFunction& f, double lo, double hi) {
    const auto pts = f.grid->points();
    const double span = pts.back() - pts.front();
    const double slack = 1e-12 * span;
    if (lo > hi) throw ValidationError("trapezoid_integral: lo exceeds hi");
    if (lo < pts.front() - slack || hi > pts.back() + slack)
        throw ValidationError("trapezoid_integral: bounds outside grid range");
    lo = std::max(lo, pts.front());
    hi = std::min(hi, pts.back());
    if (lo == hi) return 0.0;

    const std::size_t first =
        static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), lo) -
                                 pts.begin());
    const std::size_t last =
        static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), hi) -
                                 pts.begin());

    // Both cuts inside one cell.
    if (first == last)
        return 0.5 * (interp(f, lo) + interp(f, hi)) * (hi - lo);

    double acc = 0.0;
    if (pts[first] > lo)
        acc += 0.5 * (interp(f, lo) + f.values[first]) * (pts[first] - lo);
    for (std::size_t i = first; i + 1 < last; ++i)
        acc += 0.5 * (f.values[i] + f.values[i + 1]) * (pts[i + 1] - pts[i]);
    if (last < pts.size() && pts[last] == hi) {
        acc += 0.5 * (f.values[last - 1] + f.values[last]) *
               (pts[last] - pts[last - 1]);
    } else {
        acc += 0.5 * (f.values[last - 1] + interp(f, hi)) * (hi - pts[last - 1]);
    }
    return acc;
}

SampledFunction cumulative_abs_integral(const SampledFunction& f) {
    const auto pts = f.grid->points();
    std::vector<double> acc(f.size());
    acc[0] = std::abs(f.values[0]) * pts[0];
    for (std::size_t i = 1; i < f.size(); ++i)
        acc[i] = acc[i - 1] + 0.5 *
                                  (std::abs(f.values[i - 1]) +
                                   std::abs(f.values[i])) *
                                  (pts[i] - pts[i - 1]);
    return SampledFunction{f.grid, std::move(acc)};
}

} // namespace cesaro
