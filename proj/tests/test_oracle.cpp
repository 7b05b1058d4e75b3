#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cesaro/oracle.hpp"
#include "support.hpp"

using namespace cesaro;
using cesaro::testing::ces2;
using cesaro::testing::geo_grid;
using cesaro::testing::indicator;
using cesaro::testing::random_piecewise;

TEST_CASE("brute_majorant: closed-form and size-limit checks") {
    auto w = ces2();
    PsiTransform psi(w);

    // Psi-concave input comes back unchanged.
    auto g = geo_grid(60, 1e-3, 0.99);
    auto f = sample(g, [](double x) { return 1.0 - x; });
    auto r = brute_majorant(f, psi);
    CHECK(r.exhaustive);
    for (std::size_t i = 0; i < f.size(); ++i)
        CHECK(r.values[i] == doctest::Approx(f.values[i]).epsilon(1e-12));

    // Step function: min(Psi(x), 1) at interior points.
    auto g2 = geo_grid(200, 1e-4, 1.0 - 1e-4);
    auto step = indicator(g2, 0.0, 0.5);
    auto rs = brute_majorant(step, psi);
    for (std::size_t i = 0; i < step.size(); i += 11) {
        const double x = step.x(i);
        if (x < 0.5 - 5e-3 || x > 0.5 + 5e-3)
            CHECK(rs.values[i] ==
                  doctest::Approx(std::min(psi.eval(x), 1.0)).epsilon(5e-3));
    }

    auto big = geo_grid(300, 1e-3, 0.9);
    CHECK_THROWS_AS(
        brute_majorant(sample(big, [](double) { return 1.0; }), psi),
        ValidationError);
}

TEST_CASE("brute_dual_norm: convergence on the step and safety bound") {
    auto w = ces2();
    auto g = make_grid(1.0, 100, GridScheme::Uniform, 1e-4, 1.0 - 1e-4);
    auto f = indicator(g, 0.0, 0.5);
    const double certified = dual_norm(f, w).value;
    auto r = brute_dual_norm(f, w, 10000, 12345);
    CHECK_FALSE(r.exhaustive);
    CHECK(r.scalar >= 0.95);
    CHECK(r.scalar <= certified + 1e-8);

    auto zero = sample(g, [](double) { return 0.0; });
    CHECK(brute_dual_norm(zero, w, 100, 1).scalar == 0.0);
}

TEST_CASE("brute_dual_norm never exceeds the certified dual norm") {
    auto w = ces2();
    auto g = geo_grid(80, 1e-4, 1.0 - 1e-3);
    std::mt19937_64 rng(51);
    for (int t = 0; t < 10; ++t) {
        auto f = random_piecewise(g, rng);
        const double certified = dual_norm(f, w).value;
        auto r = brute_dual_norm(f, w, 2000, 1000 + t);
        CHECK(r.scalar <= certified + 1e-8);
    }
}

TEST_CASE("brute_dual_norm is reproducible per seed") {
    auto w = ces2();
    auto g = geo_grid(60, 1e-3, 0.99);
    std::mt19937_64 rng(52);
    auto f = random_piecewise(g, rng);
    const double a = brute_dual_norm(f, w, 1500, 7).scalar;
    const double b = brute_dual_norm(f, w, 1500, 7).scalar;
    CHECK(a == b);
}

TEST_CASE("combination oracle: n=1 gives the running maximum") {
    auto w = ces2();
    PsiTransform psi(w);
    auto g = geo_grid(20, 1e-2, 0.9);
    std::mt19937_64 rng(53);
    auto f = random_piecewise(g, rng, 4, 2.0, false);
    auto r1 = brute_combination_majorant(f, psi, 1);
    auto rm = brute_majorant(f, psi);
    for (std::size_t i = 0; i < f.size(); ++i) {
        // Running max toward x = 0 never exceeds the majorant.
        double run = 0.0;
        for (std::size_t j = i; j < f.size(); ++j)
            run = std::max(run, std::abs(f.values[j]));
        CHECK(r1.values[i] == doctest::Approx(run).epsilon(1e-12));
        CHECK(r1.values[i] <= rm.values[i] + 1e-12);
    }
}

TEST_CASE("combination oracle: pairs match brute_majorant, triples add nothing") {
    auto w = ces2();
    PsiTransform psi(w);
    std::mt19937_64 rng(54);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 5 + rng() % 30;
        auto g = geo_grid(n, 1e-3, 0.9);
        auto f = random_piecewise(g, rng, 4, 2.0, false);
        auto pairs = brute_combination_majorant(f, psi, 2);
        auto triples = brute_combination_majorant(f, psi, 3);
        auto hull = brute_majorant(f, psi);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(pairs.values[i] ==
                  doctest::Approx(hull.values[i]).epsilon(1e-12));
            CHECK(triples.values[i] ==
                  doctest::Approx(pairs.values[i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("combination oracle size limits") {
    auto w = ces2();
    PsiTransform psi(w);
    auto g = geo_grid(50, 1e-3, 0.9);
    auto f = sample(g, [](double) { return 1.0; });
    CHECK_THROWS_AS(brute_combination_majorant(f, psi, 2), ValidationError);
    auto g2 = geo_grid(20, 1e-3, 0.9);
    auto f2 = sample(g2, [](double) { return 1.0; });
    CHECK_THROWS_AS(brute_combination_majorant(f2, psi, 4), ValidationError);
}
