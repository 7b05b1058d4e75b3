#pragma once

#include <random>

#include "cesaro/grid.hpp"
#include "cesaro/weight.hpp"

namespace cesaro::testing {

// The standard space Ces_2(0,1): w = 1/x, p = 2.
inline WeightSpec ces2() { return WeightSpec::power(-1.0, 2.0, 1.0); }

inline GridPtr geo_grid(std::size_t n = 10000, double x_min = 1e-6,
                        double x_max = 1.0 - 1e-5, double l = 1.0) {
    return make_grid(l, n, GridScheme::GeometricNearZero, x_min, x_max);
}

// Open indicator of (lo, hi) sampled pointwise.
inline SampledFunction indicator(GridPtr g, double lo, double hi) {
    return sample(std::move(g), [lo, hi](double x) {
        return (x > lo && x < hi) ? 1.0 : 0.0;
    });
}

// Random piecewise-constant function with `pieces` blocks, values in
// [0, hi], optionally forced to vanish at the last sample (the membership
// hypothesis class: majorant tail -> 0).
inline SampledFunction random_piecewise(GridPtr g, std::mt19937_64& rng,
                                        int pieces = 5, double hi = 2.0,
                                        bool vanish_right = true) {
    const std::size_t n = g->size();
    std::uniform_real_distribution<double> val(0.0, hi);
    std::uniform_int_distribution<std::size_t> cut(1, n - 1);
    std::vector<std::size_t> cuts{0, n};
    for (int k = 1; k < pieces; ++k) cuts.push_back(cut(rng));
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> v(n);
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        const double x = val(rng);
        for (std::size_t i = cuts[c]; i < cuts[c + 1]; ++i) v[i] = x;
    }
    if (vanish_right)
        for (std::size_t i = n - std::max<std::size_t>(1, n / 50); i < n; ++i)
            v[i] = 0.0;
    return SampledFunction{std::move(g), std::move(v)};
}

// Random smooth-ish positive function: a few scaled bumps.
inline SampledFunction random_smooth(GridPtr g, std::mt19937_64& rng,
                                     bool vanish_right = true) {
    std::uniform_real_distribution<double> amp(0.1, 1.5);
    std::uniform_real_distribution<double> loc(0.05, 0.95);
    std::uniform_real_distribution<double> wid(0.05, 0.5);
    const int bumps = 3;
    std::vector<double> a(bumps), c(bumps), w(bumps);
    for (int k = 0; k < bumps; ++k) {
        a[k] = amp(rng);
        c[k] = loc(rng);
        w[k] = wid(rng);
    }
    const double xmax = g->x_max();
    auto f = sample(std::move(g), [&](double x) {
        double s = 0.0;
        for (int k = 0; k < bumps; ++k) {
            const double t = (x - c[k]) / w[k];
            s += a[k] * std::exp(-t * t);
        }
        return s;
    });
    if (vanish_right) {
        // Taper to zero over the last 2% so the majorant tail vanishes.
        for (std::size_t i = 0; i < f.size(); ++i) {
            const double x = f.x(i);
            const double t = (xmax - x) / (0.02 * xmax);
            if (t < 1.0) f.values[i] *= std::max(t, 0.0);
        }
    }
    return f;
}

} // namespace cesaro::testing
