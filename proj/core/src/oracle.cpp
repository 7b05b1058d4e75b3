#include "cesaro/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace cesaro {

OracleResult brute_majorant(const SampledFunction& f, const PsiTransform& psi) {
    const std::size_t n = f.size();
    if (n > 200) throw ValidationError("brute_majorant: N must be <= 200");

    std::vector<double> u(n), v(n);
    double vmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        u[i] = psi.eval(f.x(i));
        v[i] = std::abs(f.values[i]);
        vmax = std::max(vmax, v[i]);
    }
    const double tol = 1e-12 * (1.0 + vmax);

    struct Line {
        double a, b;
    };
    std::vector<Line> lines;
    OracleResult r;

    auto dominates = [&](double a, double b) {
        for (std::size_t k = 0; k < n; ++k) {
            ++r.evaluations;
            if (a * u[k] + b < v[k] - tol) return false;
        }
        return true;
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double a = (v[j] - v[i]) / (u[j] - u[i]);
            if (a < 0.0) continue;
            const double b = v[i] - a * u[i];
            if (dominates(a, b)) lines.push_back({a, b});
        }

    // Horizontal lines at running maxima in u-order (only the global one
    // can dominate, but the filter decides).
    {
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return u[a] < u[b]; });
        double run = 0.0;
        for (std::size_t k : order) {
            run = std::max(run, v[k]);
            if (dominates(0.0, run)) lines.push_back({0.0, run});
        }
    }

    r.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (const Line& ln : lines) {
            ++r.evaluations;
            best = std::min(best, ln.a * u[i] + ln.b);
        }
        r.values[i] = best;
    }
    r.exhaustive = true;
    return r;
}

OracleResult brute_dual_norm(const SampledFunction& f, const WeightSpec& wspec,
                             std::size_t iters, std::uint64_t seed) {
    const std::size_t n = f.size();
    if (n > 200) throw ValidationError("brute_dual_norm: N must be <= 200");

    OracleResult r;
    std::vector<double> absf(n);
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
        absf[i] = std::abs(f.values[i]);
        any = any || absf[i] > 0.0;
    }
    if (!any) return r;

    // g = c .* sign f with c >= 0, scored in the same piecewise measure
    // model the segment sum lives in: each point carries the atom
    // c_i * width_i, the cumulative mass is a step function, and the
    // Cesaro integral of (w * cumulative)^p is exact in the Psi measure.
    // Scored this way the ratio never exceeds the certified dual norm.
    const auto& widths = f.grid->measure().widths;
    const PsiTransform psi(wspec);
    const double p = wspec.p;
    std::vector<double> U(n);
    for (std::size_t i = 0; i < n; ++i) U[i] = psi.eval(f.x(i));

    auto objective = [&](const std::vector<double>& c) -> double {
        ++r.evaluations;
        double pair = 0.0;
        for (std::size_t i = 0; i < n; ++i) pair += absf[i] * c[i] * widths[i];
        if (pair <= 0.0) return 0.0;
        double acc = 0.0, cum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            cum += c[i] * widths[i];
            const double below = i + 1 < n ? U[i + 1] : 0.0;
            if (cum > 0.0) acc += std::pow(cum, p) * (U[i] - below);
        }
        const double nrm = std::pow(acc, 1.0 / p);
        return nrm > 0.0 ? pair / nrm : 0.0;
    };

    std::vector<double> c = absf;
    double best = objective(c);
    static constexpr double kFactors[] = {0.0, 0.25, 0.5, 0.8, 1.25, 2.0, 4.0};

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    for (std::size_t it = 0; it < iters; ++it) {
        const std::size_t i = pick(rng);
        const double old = c[i];
        double local_best = best;
        double local_arg = old;
        for (double fac : kFactors) {
            c[i] = old > 0.0 ? old * fac : fac * unit(rng);
            const double val = objective(c);
            if (val > local_best) {
                local_best = val;
                local_arg = c[i];
            }
        }
        c[i] = local_arg;
        best = local_best;
    }

    r.scalar = best;
    r.exhaustive = false;
    return r;
}

OracleResult brute_combination_majorant(const SampledFunction& f,
                                        const PsiTransform& psi, int max_n) {
    const std::size_t n = f.size();
    if (n > 40)
        throw ValidationError("brute_combination_majorant: N must be <= 40");
    if (max_n < 1 || max_n > 3)
        throw ValidationError("brute_combination_majorant: max_n in {1,2,3}");

    std::vector<double> u(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
        u[i] = psi.eval(f.x(i));
        v[i] = std::abs(f.values[i]);
    }

    OracleResult r;
    r.values.assign(n, 0.0);

    for (std::size_t y = 0; y < n; ++y) {
        const double uy = u[y];
        // Running maximum over u <= uy: the limit of pairs against a far
        // point with vanishing value (u -> infinity side).
        double best = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            ++r.evaluations;
            if (u[k] <= uy) best = std::max(best, v[k]);
        }
        if (max_n >= 2) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (!(u[i] <= uy && uy <= u[j] && u[i] < u[j])) continue;
                    ++r.evaluations;
                    const double alpha = (u[j] - uy) / (u[j] - u[i]);
                    best = std::max(best, alpha * v[i] + (1.0 - alpha) * v[j]);
                }
        }
        if (max_n >= 3) {
            // One equality constraint leaves a segment of admissible weight
            // triples; sample its interior, the endpoints are pairs.
            static constexpr double kT[] = {0.25, 0.5, 0.75};
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    for (std::size_t k = j + 1; k < n; ++k) {
                        // Convex weights a,b,c with a u_i + b u_j + c u_k = uy.
                        // Parametrize by c and solve the 2x2 system.
                        if (!(u[i] <= uy && uy <= u[k])) continue;
                        for (double t : kT) {
                            ++r.evaluations;
                            const double c = t;
                            const double rhs_u = uy - c * u[k];
                            const double rhs_1 = 1.0 - c;
                            const double det = u[i] - u[j];
                            const double a = (rhs_u - rhs_1 * u[j]) / det;
                            const double b = rhs_1 - a;
                            if (a < 0.0 || b < 0.0) continue;
                            best = std::max(best,
                                            a * v[i] + b * v[j] + c * v[k]);
                        }
                    }
        }
        r.values[y] = best;
    }
    r.exhaustive = max_n >= 2;
    return r;
}

} // namespace cesaro
