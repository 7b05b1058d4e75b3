#include "cesaro/majorant.hpp"

#include <algorithm>
#include <cmath>

namespace cesaro {

Majorant::Majorant(std::vector<double> u, std::vector<double> v,
                   std::vector<double> x, std::vector<std::size_t> grid_index,
                   PsiTransform psi)
    : u_(std::move(u)), v_(std::move(v)), x_(std::move(x)),
      index_(std::move(grid_index)), psi_(std::move(psi)) {
    slope_.resize(u_.size() > 0 ? u_.size() - 1 : 0);
    for (std::size_t k = 0; k + 1 < u_.size(); ++k)
        slope_[k] = (v_[k + 1] - v_[k]) / (u_[k + 1] - u_[k]);
}

double Majorant::eval_at_u(double u) const {
    if (u_.size() == 1) return v_.front();
    if (u <= u_.front()) {
        // Continue the last support line toward l, clipped at zero.
        const double ext = v_.front() + slope_.front() * (u - u_.front());
        return std::max(ext, 0.0);
    }
    if (u >= u_.back()) return v_.back();
    const auto it = std::upper_bound(u_.begin(), u_.end(), u);
    const std::size_t j = static_cast<std::size_t>(it - u_.begin());
    const double t = (u - u_[j - 1]) / (u_[j] - u_[j - 1]);
    return v_[j - 1] + t * (v_[j] - v_[j - 1]);
}

double Majorant::slope_at_u(double u) const {
    if (slope_.empty()) return 0.0;
    if (u <= u_.front()) {
        // Within the clipped extension the slope persists, zero after the clip.
        const double ext = v_.front() + slope_.front() * (u - u_.front());
        return ext > 0.0 ? slope_.front() : 0.0;
    }
    if (u > u_.back()) return 0.0;
    // First knot with u_k >= u; the segment below it governs [x, x+dx).
    const auto it = std::lower_bound(u_.begin(), u_.end(), u);
    const std::size_t j = static_cast<std::size_t>(it - u_.begin());
    return slope_[j == 0 ? 0 : j - 1];
}

double Majorant::eval(double x) const {
    const double lo_guard = x_.back() * (1.0 - 1e-12);
    if (x < lo_guard)
        throw ValidationError("majorant eval: x below the grid range");
    if (!(x < psi_.l()))
        throw ValidationError("majorant eval: x outside (0, l)");
    return eval_at_u(psi_.eval(std::max(x, x_.back())));
}

double Majorant::slope_at_x(double x) const {
    const double lo_guard = x_.back() * (1.0 - 1e-12);
    if (x < lo_guard)
        throw ValidationError("majorant slope: x below the grid range");
    if (!(x < psi_.l()))
        throw ValidationError("majorant slope: x outside (0, l)");
    return slope_at_u(psi_.eval(std::max(x, x_.back())));
}

SupportLine Majorant::support_line(double y) const {
    const double a = slope_at_x(y);
    const double uy = psi_.eval(y);
    const double vy = eval_at_u(uy);
    return SupportLine{a, vy - a * uy, y};
}

ConcavityReport is_psi_concave(const SampledFunction& f,
                               const PsiTransform& psi, double tol) {
    if (tol < 0.0) throw ValidationError("is_psi_concave: tol must be >= 0");
    if (f.size() < 3)
        throw ValidationError("is_psi_concave: need at least 3 points");
    ConcavityReport r;
    std::vector<double> u(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) u[i] = psi.eval(f.x(i));
    for (std::size_t i = 0; i + 2 < f.size(); ++i) {
        const double q1 = (f.values[i] - f.values[i + 1]) / (u[i] - u[i + 1]);
        const double q2 =
            (f.values[i + 1] - f.values[i + 2]) / (u[i + 1] - u[i + 2]);
        if (!(q1 <= q2 + tol)) {
            r.psi_concave = false;
            r.violation_index = i;
            r.lhs = q1;
            r.rhs = q2;
            return r;
        }
    }
    return r;
}

Majorant essential_majorant(const SampledFunction& f, const PsiTransform& psi) {
    const std::size_t n = f.size();

    // Points in u-coordinates, u increasing (grid order reversed).
    std::vector<double> u(n), v(n);
    std::vector<std::size_t> gi(n);
    double vmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t g = n - 1 - i;
        u[i] = psi.eval(f.x(g));
        v[i] = std::abs(f.values[g]);
        gi[i] = g;
        vmax = std::max(vmax, v[i]);
    }
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(u[i] < u[i + 1]))
            throw ValidationError(
                "essential_majorant: psi is not strictly decreasing on the grid");

    // Monotone-chain upper hull. A candidate vertex b between hull point a
    // and incoming point c survives only if it lies strictly above the chord
    // a-c; near-collinear points are merged.
    std::vector<std::size_t> hull;
    hull.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        while (hull.size() >= 2) {
            const std::size_t a = hull[hull.size() - 2];
            const std::size_t b = hull[hull.size() - 1];
            const double lhs = (u[i] - u[a]) * (v[b] - v[a]);
            const double rhs = (u[b] - u[a]) * (v[i] - v[a]);
            const double scale = std::abs(lhs) + std::abs(rhs);
            if (lhs - rhs > 1e-12 * scale) break;
            hull.pop_back();
        }
        hull.push_back(i);
    }

    std::vector<double> hu, hv, hx;
    std::vector<std::size_t> hidx;
    for (std::size_t k : hull) {
        hu.push_back(u[k]);
        hv.push_back(v[k]);
        hx.push_back(f.x(gi[k]));
        hidx.push_back(gi[k]);
    }

    // Clamp trailing negative slopes to zero: beyond the peak vertex the
    // majorant continues at the running maximum (Psi(0+) = infinity forces
    // nonnegative slopes, i.e. the majorant decreases in x).
    std::size_t peak = 0;
    for (std::size_t k = 1; k < hv.size(); ++k)
        if (hv[k] > hv[peak]) peak = k;
    if (peak + 1 < hv.size()) {
        const double u_last = hu.back();
        const std::size_t idx_last = hidx.back();
        const double x_last = hx.back();
        hu.resize(peak + 1);
        hv.resize(peak + 1);
        hx.resize(peak + 1);
        hidx.resize(peak + 1);
        hu.push_back(u_last);
        hv.push_back(hv[peak]);
        hx.push_back(x_last);
        hidx.push_back(idx_last);
    }

    return Majorant{std::move(hu), std::move(hv), std::move(hx),
                    std::move(hidx), psi};
}

} // namespace cesaro
