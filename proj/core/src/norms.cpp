#include "cesaro/norms.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace cesaro {

namespace {

std::vector<double> weight_on_grid(const SampledFunction& f,
                                   const WeightSpec& wspec) {
    std::vector<double> w(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) w[i] = wspec.eval(f.x(i));
    return w;
}

} // namespace

SampledFunction apply_Aw(const SampledFunction& f, const WeightSpec& wspec) {
    SampledFunction acc = cumulative_abs_integral(f);
    const auto w = weight_on_grid(f, wspec);
    for (std::size_t i = 0; i < acc.size(); ++i) acc.values[i] *= w[i];
    return acc;
}

NormReport cesaro_norm(const SampledFunction& f, const WeightSpec& wspec) {
    const double p = wspec.p;
    const auto pts = f.grid->points();
    const SampledFunction awf = apply_Aw(f, wspec);

    // Trapezoid of (A_w f)^p over the grid range.
    double body = 0.0;
    {
        double prev = std::pow(awf.values[0], p);
        for (std::size_t i = 1; i < awf.size(); ++i) {
            const double cur = std::pow(awf.values[i], p);
            body += 0.5 * (prev + cur) * (pts[i] - pts[i - 1]);
            prev = cur;
        }
    }

    std::ostringstream note;
    // Head over (0, x_1): f extends as the constant f(x_1), so the
    // integrand is (w(x) |f(x_1)| x)^p. Closed form for power weights.
    double head = 0.0;
    if (wspec.kind == WeightKind::Power) {
        const double e = wspec.s * p + p + 1.0;
        const double c = std::pow(std::abs(f.values.front()), p);
        if (c == 0.0) {
            note << "head (0, x_1) vanishes, f(x_1) = 0; ";
        } else if (e <= 0.0) {
            head = std::numeric_limits<double>::infinity();
            note << "head integral over (0, x_1) diverges for this weight; ";
        } else {
            head = c * std::pow(pts.front(), e) / e;
            note << "head (0, x_1) added in closed form; ";
        }
    } else {
        note << "head (0, x_1) omitted for tabulated weight (truncation); ";
    }

    // Tail over (x_N, l): f vanishes there, so A_w f = w * F(x_N) and the
    // tail is F(x_N)^p * Psi(x_N).
    const SampledFunction cum = cumulative_abs_integral(f);
    const double tail =
        std::pow(cum.values.back(), p) * PsiTransform(wspec).eval(pts.back());
    note << "tail (x_N, l) = F(x_N)^p * Psi(x_N) added (f treated as zero "
            "beyond x_N)";

    NormReport r;
    r.method = NormMethod::Quadrature;
    r.value = std::pow(head + body + tail, 1.0 / p);
    r.truncation_note = note.str();
    return r;
}

SampledFunction apply_Bw(const SampledFunction& f, const WeightSpec& wspec) {
    const PsiTransform psi(wspec);
    const Majorant hat = essential_majorant(f, psi);
    std::vector<double> out(f.size());
    const double pm1 = wspec.p - 1.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        out[i] = std::pow(wspec.eval(f.x(i)), pm1) * hat.slope_at_x(f.x(i));
    return SampledFunction{f.grid, std::move(out)};
}

NormReport dual_norm(const SampledFunction& f, const WeightSpec& wspec) {
    const PsiTransform psi(wspec);
    const Majorant hat = essential_majorant(f, psi);
    const double q = wspec.q();

    double sum = 0.0;
    const auto u = hat.knots_u();
    const auto s = hat.slopes();
    for (std::size_t k = 0; k < s.size(); ++k)
        sum += std::pow(s[k], q) * (u[k + 1] - u[k]);

    NormReport r;
    r.method = NormMethod::SegmentSum;
    r.value = std::pow(sum, 1.0 / q);
    std::ostringstream note;
    const double head_mass =
        s.empty() ? 0.0 : std::pow(s.front(), q) * u.front();
    note << "u-range [" << u.front() << ", " << u.back()
         << "]; omitted q-mass below the grid is at most " << head_mass;
    r.truncation_note = note.str();
    return r;
}

NormReport dual_norm_quadrature(const SampledFunction& f,
                                const WeightSpec& wspec) {
    const PsiTransform psi(wspec);
    const Majorant hat = essential_majorant(f, psi);
    const double p = wspec.p;
    const double q = wspec.q();
    const auto pts = f.grid->points();

    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double mid = 0.5 * (pts[i] + pts[i + 1]);
        const double b =
            std::pow(wspec.eval(mid), p - 1.0) * hat.slope_at_x(mid);
        sum += std::pow(b, q) * (pts[i + 1] - pts[i]);
    }

    NormReport r;
    r.method = NormMethod::Quadrature;
    r.value = std::pow(sum, 1.0 / q);
    r.truncation_note = "midpoint-rule L_q quadrature of B_w f over the grid";
    return r;
}

double pairing(const SampledFunction& f, const SampledFunction& g) {
    if (!f.grid->same_points(*g.grid))
        throw ValidationError("pairing: functions live on different grids");
    std::vector<double> prod(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        prod[i] = f.values[i] * g.values[i];
    const SampledFunction fg{f.grid, std::move(prod)};
    return trapezoid_integral(fg, f.grid->x_min(), f.grid->x_max());
}

HolderReport holder_check(const SampledFunction& f, const SampledFunction& g,
                          const WeightSpec& wspec) {
    HolderReport r;
    r.lhs = std::abs(pairing(f, g));
    r.rhs = dual_norm(f, wspec).value * cesaro_norm(g, wspec).value;
    r.slack = r.rhs - r.lhs;
    return r;
}

DualMembershipReport dual_membership(const SampledFunction& f,
                                     const WeightSpec& wspec, double eta) {
    const PsiTransform psi(wspec);
    const Majorant hat = essential_majorant(f, psi);
    DualMembershipReport r;
    r.eta = eta;
    r.majorant_max = hat.eval(f.x(0));
    r.tail_value = hat.knots_v().front();
    r.tail_ratio = r.majorant_max > 0.0 ? r.tail_value / r.majorant_max : 0.0;
    r.tail_vanishes = r.tail_ratio <= eta;
    r.first_slope = hat.slopes().empty() ? 0.0 : hat.slopes().back();
    r.dual_norm_value = dual_norm(f, wspec).value;
    r.member = r.tail_vanishes;
    return r;
}

} // namespace cesaro
