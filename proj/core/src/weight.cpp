#include "cesaro/weight.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cesaro {

namespace {

void check_pl(double p, double l) {
    if (!(p > 1.0) || !std::isfinite(p))
        throw ValidationError("weight: p must satisfy 1 < p < infinity");
    if (!(l > 0.0))
        throw ValidationError("weight: l must be positive");
}

} // namespace

WeightSpec WeightSpec::power(double s, double p, double l) {
    check_pl(p, l);
    if (!std::isfinite(s)) throw ValidationError("weight: power exponent not finite");
    WeightSpec w;
    w.kind = WeightKind::Power;
    w.s = s;
    w.p = p;
    w.l = l;
    return w;
}

WeightSpec WeightSpec::tabulated(SampledFunction tbl, double p, double l,
                                 std::optional<double> head_exponent) {
    check_pl(p, l);
    if (tbl.grid->l() != l)
        throw ValidationError("weight: table right endpoint disagrees with l");
    WeightSpec w;
    w.kind = WeightKind::Tabulated;
    w.p = p;
    w.l = l;
    w.table = std::move(tbl);
    w.head_exponent = head_exponent;
    return w;
}

double WeightSpec::eval(double x) const {
    if (!(x > 0.0) || !(x < l))
        throw ValidationError("weight: evaluation point outside (0, l)");
    if (kind == WeightKind::Power) return std::pow(x, s);

    const auto& tbl = *table;
    const auto pts = tbl.grid->points();
    if (x < pts.front()) {
        if (!head_exponent)
            throw ValidationError(
                "weight: point below the table and no head exponent declared");
        return tbl.values.front() * std::pow(x / pts.front(), *head_exponent);
    }
    if (x > pts.back())
        throw ValidationError("weight: point beyond the tabulated range");
    auto it = std::lower_bound(pts.begin(), pts.end(), x);
    if (*it == x) return tbl.values[static_cast<std::size_t>(it - pts.begin())];
    const std::size_t j = static_cast<std::size_t>(it - pts.begin());
    const double t = (x - pts[j - 1]) / (pts[j] - pts[j - 1]);
    return tbl.values[j - 1] + t * (tbl.values[j] - tbl.values[j - 1]);
}

WeightDiagnosis validate_weight(const WeightSpec& spec) {
    WeightDiagnosis d;
    const double sp = spec.s * spec.p;
    const bool infinite_l = std::isinf(spec.l);

    if (spec.kind == WeightKind::Power) {
        d.positivity = {true, false, 0.0, "power weight is positive on (0, l)"};
        if (infinite_l) {
            d.tail_integrable.pass = sp < -1.0;
            d.tail_integrable.quantity = sp;
            d.tail_integrable.detail =
                d.tail_integrable.pass
                    ? "s*p < -1, tail integral converges"
                    : "s*p >= -1, tail integral diverges at infinity";
            d.head_divergent.pass = sp < -1.0;
            d.head_divergent.quantity = sp;
            d.head_divergent.detail =
                d.head_divergent.pass ? "s*p < -1, w^p diverges at 0"
                                      : "requires s*p < -1 when l is infinite";
        } else {
            d.tail_integrable = {true, false, sp,
                                 "finite l: tail integral is finite"};
            d.head_divergent.pass = sp <= -1.0;
            d.head_divergent.quantity = sp;
            d.head_divergent.detail =
                d.head_divergent.pass ? "s*p <= -1, w^p diverges at 0"
                                      : "s*p > -1, integral over (0, l) is finite";
        }
        return d;
    }

    const auto& tbl = *spec.table;
    const double wmin = *std::min_element(tbl.values.begin(), tbl.values.end());
    d.positivity.pass = wmin > 0.0;
    d.positivity.quantity = wmin;
    d.positivity.detail = d.positivity.pass
                              ? "all table samples positive"
                              : "table contains a nonpositive sample";

    double mass = 0.0;
    if (d.positivity.pass) {
        const auto pts = tbl.grid->points();
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            mass += 0.5 *
                    (std::pow(tbl.values[i], spec.p) +
                     std::pow(tbl.values[i + 1], spec.p)) *
                    (pts[i + 1] - pts[i]);
    }
    d.tail_integrable.pass = std::isfinite(mass);
    d.tail_integrable.quantity = mass;
    d.tail_integrable.detail =
        "table mass of w^p is finite; tail beyond the table treated as zero "
        "(truncation)";

    if (spec.head_exponent) {
        const double hp = *spec.head_exponent * spec.p;
        d.head_divergent.pass = hp <= -1.0;
        d.head_divergent.assumed = true;
        d.head_divergent.quantity = hp;
        d.head_divergent.detail =
            d.head_divergent.pass
                ? "assumed: declared head exponent gives divergence at 0"
                : "declared head exponent is too tame for divergence at 0";
    } else {
        d.head_divergent.pass = false;
        d.head_divergent.detail =
            "divergence at 0 cannot be verified from finitely many samples; "
            "declare a head exponent";
    }
    return d;
}

struct PsiTransform::Impl {
    WeightSpec spec;
    double sp = 0.0;       // s*p for power weights
    double l_term = 0.0;   // l^(sp+1), zero when l is infinite

    // Tabulated: right-cumulative trapezoid of w^p over the table grid.
    std::vector<double> psi_table;
    double head_hp = 0.0;     // head exponent times p
    double head_coef = 0.0;   // w(t_1)^p * t_1
    double psi_head = 0.0;    // psi at the table head t_1
};

PsiTransform::PsiTransform(WeightSpec spec) {
    const auto diag = validate_weight(spec);
    if (!diag.ok()) {
        std::ostringstream msg;
        msg << "weight fails its conditions:";
        if (!diag.positivity.pass) msg << " [positivity] " << diag.positivity.detail;
        if (!diag.tail_integrable.pass)
            msg << " [tail] " << diag.tail_integrable.detail;
        if (!diag.head_divergent.pass)
            msg << " [head] " << diag.head_divergent.detail;
        throw ValidationError(msg.str());
    }

    auto impl = std::make_shared<Impl>();
    impl->spec = std::move(spec);
    const auto& w = impl->spec;
    if (w.kind == WeightKind::Power) {
        impl->sp = w.s * w.p;
        impl->l_term = std::isinf(w.l) ? 0.0 : std::pow(w.l, impl->sp + 1.0);
    } else {
        const auto& tbl = *w.table;
        const auto pts = tbl.grid->points();
        const std::size_t n = pts.size();
        impl->psi_table.assign(n, 0.0);
        for (std::size_t i = n - 1; i-- > 0;)
            impl->psi_table[i] =
                impl->psi_table[i + 1] +
                0.5 *
                    (std::pow(tbl.values[i], w.p) +
                     std::pow(tbl.values[i + 1], w.p)) *
                    (pts[i + 1] - pts[i]);
        impl->head_hp = *w.head_exponent * w.p;
        impl->head_coef = std::pow(tbl.values.front(), w.p) * pts.front();
        impl->psi_head = impl->psi_table.front();
    }
    impl_ = std::move(impl);
}

const WeightSpec& PsiTransform::weight() const { return impl_->spec; }
double PsiTransform::l() const { return impl_->spec.l; }
double PsiTransform::p() const { return impl_->spec.p; }

double PsiTransform::eval(double x) const {
    const auto& im = *impl_;
    if (!(x > 0.0) || !(x < im.spec.l))
        throw ValidationError("psi: evaluation point outside (0, l)");

    if (im.spec.kind == WeightKind::Power) {
        if (im.sp == -1.0) return std::log(im.spec.l / x);
        return (std::pow(x, im.sp + 1.0) - im.l_term) / (-im.sp - 1.0);
    }

    const auto pts = im.spec.table->grid->points();
    if (x >= pts.back()) return 0.0;
    if (x >= pts.front()) {
        auto it = std::upper_bound(pts.begin(), pts.end(), x);
        const std::size_t j = static_cast<std::size_t>(it - pts.begin());
        const double t = (x - pts[j - 1]) / (pts[j] - pts[j - 1]);
        return im.psi_table[j - 1] +
               t * (im.psi_table[j] - im.psi_table[j - 1]);
    }
    // Head model below the table: w(t) = w(t_1) (t/t_1)^delta.
    const double r = x / pts.front();
    if (im.head_hp == -1.0) return im.psi_head + im.head_coef * std::log(1.0 / r);
    return im.psi_head +
           im.head_coef * (1.0 - std::pow(r, im.head_hp + 1.0)) /
               (im.head_hp + 1.0);
}

double PsiTransform::inverse(double u) const {
    const auto& im = *impl_;
    if (!(u > 0.0) || !std::isfinite(u))
        throw ValidationError("psi inverse: u must be positive and finite");

    if (im.spec.kind == WeightKind::Power) {
        if (im.sp == -1.0) return im.spec.l * std::exp(-u);
        return std::pow(im.l_term + (-im.sp - 1.0) * u, 1.0 / (im.sp + 1.0));
    }

    const auto& tab = im.psi_table;
    if (u <= im.psi_head) {
        // psi_table decreases along the grid; solve the linear interpolant.
        auto it = std::lower_bound(tab.begin(), tab.end(), u,
                                   [](double a, double b) { return a > b; });
        std::size_t j = static_cast<std::size_t>(it - tab.begin());
        if (j == 0) j = 1;
        if (j >= tab.size()) j = tab.size() - 1;
        const auto pts = im.spec.table->grid->points();
        const double denom = tab[j - 1] - tab[j];
        if (denom <= 0.0) return pts[j];
        const double t = (tab[j - 1] - u) / denom;
        return pts[j - 1] + t * (pts[j] - pts[j - 1]);
    }
    // Above the table head: invert the head model closed form.
    const auto pts = im.spec.table->grid->points();
    const double excess = u - im.psi_head;
    if (im.head_hp == -1.0)
        return pts.front() * std::exp(-excess / im.head_coef);
    const double inner = 1.0 - excess * (im.head_hp + 1.0) / im.head_coef;
    if (!(inner > 0.0))
        throw ValidationError("psi inverse: u above the reachable head range");
    return pts.front() * std::pow(inner, 1.0 / (im.head_hp + 1.0));
}

GridPtr make_grid_in_psi(const PsiTransform& psi, std::size_t n, double x_min,
                         double x_max) {
    if (n < 3) throw ValidationError("make_grid_in_psi: n must be at least 3");
    if (!(x_min > 0.0) || !(x_min < x_max) || !std::isfinite(x_max) ||
        !(x_max < psi.l()))
        throw ValidationError("make_grid_in_psi: need 0 < x_min < x_max < l");
    const double u_hi = psi.eval(x_min);
    const double u_lo = psi.eval(x_max);
    std::vector<double> pts(n);
    pts.front() = x_min;
    pts.back() = x_max;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double u = u_hi + (u_lo - u_hi) * static_cast<double>(i) /
                                    static_cast<double>(n - 1);
        pts[i] = psi.inverse(u);
    }
    return std::make_shared<Grid>(std::move(pts), psi.l(),
                                  GridScheme::UniformInPsi);
}

} // namespace cesaro
