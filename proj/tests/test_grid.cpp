#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"

using namespace cesaro;
using cesaro::testing::geo_grid;

TEST_CASE("make_grid uniform places an arithmetic progression") {
    auto g = make_grid(1.0, 3, GridScheme::Uniform, 0.25, 0.75);
    CHECK(g->size() == 3);
    CHECK((*g)[0] == doctest::Approx(0.25));
    CHECK((*g)[1] == doctest::Approx(0.5));
    CHECK((*g)[2] == doctest::Approx(0.75));
}

TEST_CASE("make_grid geometric has equal ratios") {
    // ratio (0.5/1e-3)^(1/3) = 500^(1/3)
    auto g = make_grid(1.0, 4, GridScheme::GeometricNearZero, 1e-3, 0.5);
    const double r = std::pow(500.0, 1.0 / 3.0);
    CHECK((*g)[0] == doctest::Approx(1e-3));
    CHECK((*g)[1] == doctest::Approx(1e-3 * r).epsilon(1e-12));
    CHECK((*g)[2] == doctest::Approx(1e-3 * r * r).epsilon(1e-12));
    CHECK((*g)[3] == doctest::Approx(0.5));
    CHECK((*g)[1] / (*g)[0] == doctest::Approx((*g)[2] / (*g)[1]));
}

TEST_CASE("make_grid rejects bad inputs") {
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(make_grid(inf, 3, GridScheme::Uniform, 1.0, inf),
                    ValidationError);
    CHECK_THROWS_AS(make_grid(1.0, 2, GridScheme::Uniform, 0.1, 0.9),
                    ValidationError);
    CHECK_THROWS_AS(make_grid(1.0, 5, GridScheme::Uniform, 0.9, 0.1),
                    ValidationError);
    CHECK_THROWS_AS(make_grid(1.0, 5, GridScheme::Uniform, 0.0, 0.9),
                    ValidationError);
    CHECK_THROWS_AS(make_grid(1.0, 5, GridScheme::Uniform, 0.1, 1.0),
                    ValidationError);
}

TEST_CASE("grid invariants reject bad point sets") {
    CHECK_THROWS_AS(Grid({0.3, 0.2, 0.5}, 1.0, GridScheme::Custom),
                    ValidationError);
    CHECK_THROWS_AS(Grid({-0.1, 0.2, 0.5}, 1.0, GridScheme::Custom),
                    ValidationError);
}

TEST_CASE("cell widths sum to the grid span") {
    auto g = geo_grid(200, 1e-4, 0.9);
    CHECK(g->measure().total ==
          doctest::Approx(g->x_max() - g->x_min()).epsilon(1e-12));
}

TEST_CASE("trapezoid: constant, degenerate and affine cases") {
    auto g = make_grid(1.0, 3, GridScheme::Uniform, 0.25, 0.75);
    auto one = sample(g, [](double) { return 1.0; });
    CHECK(trapezoid_integral(one, 0.25, 0.75) == doctest::Approx(0.5));
    CHECK(trapezoid_integral(one, 0.5, 0.5) == 0.0);
    CHECK_THROWS_AS(trapezoid_integral(one, 0.6, 0.4), ValidationError);
    CHECK_THROWS_AS(trapezoid_integral(one, 0.1, 0.75), ValidationError);

    // Exact for affine integrands.
    auto gu = make_grid(1.0, 101, GridScheme::Uniform, 0.05, 0.95);
    auto id = sample(gu, [](double x) { return x; });
    const double lo = gu->x_min(), hi = gu->x_max();
    CHECK(trapezoid_integral(id, lo, hi) ==
          doctest::Approx(0.5 * (hi * hi - lo * lo)).epsilon(1e-13));
}

TEST_CASE("trapezoid additivity and linearity on random data") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> val(-2.0, 2.0);
    auto g = geo_grid(300, 1e-3, 0.95);
    std::vector<double> a(g->size()), b(g->size());
    for (auto& x : a) x = val(rng);
    for (auto& x : b) x = val(rng);
    SampledFunction fa{g, a}, fb{g, b};

    std::uniform_real_distribution<double> pos(g->x_min(), g->x_max());
    for (int t = 0; t < 50; ++t) {
        double lo = pos(rng), mid = pos(rng), hi = pos(rng);
        if (lo > hi) std::swap(lo, hi);
        mid = std::clamp(mid, lo, hi);
        const double whole = trapezoid_integral(fa, lo, hi);
        const double split =
            trapezoid_integral(fa, lo, mid) + trapezoid_integral(fa, mid, hi);
        CHECK(split == doctest::Approx(whole).epsilon(1e-12));
    }

    std::vector<double> comb(g->size());
    for (std::size_t i = 0; i < g->size(); ++i)
        comb[i] = 3.0 * a[i] - 0.5 * b[i];
    SampledFunction fc{g, comb};
    const double lhs = trapezoid_integral(fc, g->x_min(), g->x_max());
    const double rhs = 3.0 * trapezoid_integral(fa, g->x_min(), g->x_max()) -
                       0.5 * trapezoid_integral(fb, g->x_min(), g->x_max());
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("cumulative_abs_integral: examples and monotonicity") {
    auto g = make_grid(1.0, 3, GridScheme::Uniform, 0.25, 0.75);
    auto one = sample(g, [](double) { return 1.0; });
    auto F = cumulative_abs_integral(one);
    CHECK(F.values[0] == doctest::Approx(0.25));
    CHECK(F.values[1] == doctest::Approx(0.5));
    CHECK(F.values[2] == doctest::Approx(0.75));

    auto zero = sample(g, [](double) { return 0.0; });
    for (double v : cumulative_abs_integral(zero).values) CHECK(v == 0.0);

    // Alternating signs integrate like the constant one.
    std::vector<double> alt{1.0, -1.0, 1.0};
    auto Falt = cumulative_abs_integral(SampledFunction{g, alt});
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(Falt.values[i] == doctest::Approx(F.values[i]));

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> val(-5.0, 5.0);
    auto gg = geo_grid(500, 1e-4, 0.9);
    std::vector<double> v(gg->size());
    for (auto& x : v) x = val(rng);
    auto Fr = cumulative_abs_integral(SampledFunction{gg, v});
    for (std::size_t i = 1; i < Fr.size(); ++i)
        CHECK(Fr.values[i] >= Fr.values[i - 1]);
}

TEST_CASE("sampled function validates its values") {
    auto g = make_grid(1.0, 3, GridScheme::Uniform, 0.25, 0.75);
    CHECK_THROWS_AS(SampledFunction(g, {1.0, 2.0}), ValidationError);
    CHECK_THROWS_AS(SampledFunction(g, {1.0, std::nan(""), 0.0}),
                    ValidationError);
}
