#pragma once

#include <cstddef>
#include <vector>

#include "cesaro/weight.hpp"

namespace cesaro {

/// A Psi-affine function T(x) = slope * Psi(x) + intercept supporting the
/// majorant at the anchor point.
struct SupportLine {
    double slope = 0.0;
    double intercept = 0.0;
    double anchor = 0.0;

    double eval_at_u(double u) const { return slope * u + intercept; }
    double eval(double x, const PsiTransform& psi) const {
        return eval_at_u(psi.eval(x));
    }
};

/// Result of the three-point concavity test in Psi-coordinates.
struct ConcavityReport {
    bool psi_concave = true;
    std::size_t violation_index = 0;  // first i with a violating (i, i+1, i+2)
    double lhs = 0.0;                 // offending difference quotients
    double rhs = 0.0;
};

/// The essential Psi-concave majorant of |f|, stored as its breakpoints in
/// Psi-coordinates: knots (u_k, v_k) with u strictly increasing and
/// per-segment slopes strictly decreasing and nonnegative. Increasing u
/// means decreasing x; the trailing flat part (slope 0) is the running
/// maximum forced by Psi blowing up at 0. Immutable and thread-safe.
class Majorant {
  public:
    Majorant(std::vector<double> u, std::vector<double> v,
             std::vector<double> x, std::vector<std::size_t> grid_index,
             PsiTransform psi);

    std::size_t knot_count() const { return u_.size(); }
    std::span<const double> knots_u() const { return u_; }
    std::span<const double> knots_v() const { return v_; }
    std::span<const double> knots_x() const { return x_; }
    std::span<const std::size_t> knot_grid_index() const { return index_; }
    std::span<const double> slopes() const { return slope_; }
    const PsiTransform& psi() const { return psi_; }

    /// Piecewise-linear value in u-coordinates. Below the first knot
    /// (x beyond the grid toward l) the last support line continues,
    /// clipped at zero; above the last knot the value stays at the maximum.
    double eval_at_u(double u) const;
    double eval(double x) const;

    /// Right-continuous-in-x slope with respect to Psi: the slope of the
    /// segment containing u = Psi(x), taking at a breakpoint the segment on
    /// the smaller-u side (the larger of the two adjacent slopes).
    double slope_at_u(double u) const;
    double slope_at_x(double x) const;

    SupportLine support_line(double y) const;

  private:
    std::vector<double> u_, v_, x_, slope_;
    std::vector<std::size_t> index_;
    PsiTransform psi_;
};

/// Three-point difference-quotient test for Psi-concavity of f on its grid;
/// consecutive triples suffice. tol >= 0 is the allowed slack per triple.
ConcavityReport is_psi_concave(const SampledFunction& f,
                               const PsiTransform& psi, double tol);

/// Least Psi-concave majorant of the samples |f|: the upper concave hull of
/// the points (Psi(x_i), |f(x_i)|), with trailing slopes clamped to zero
/// (the running maximum toward x = 0). Dominates |f| at every grid point.
Majorant essential_majorant(const SampledFunction& f, const PsiTransform& psi);

inline double majorant_eval(const Majorant& m, double x) { return m.eval(x); }
inline double d_psi_plus(const Majorant& m, double x) {
    return m.slope_at_x(x);
}
inline SupportLine support_line(const Majorant& m, double y) {
    return m.support_line(y);
}

} // namespace cesaro
