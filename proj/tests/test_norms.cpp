#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cesaro/norms.hpp"
#include "support.hpp"

using namespace cesaro;
using cesaro::testing::ces2;
using cesaro::testing::geo_grid;
using cesaro::testing::indicator;
using cesaro::testing::random_piecewise;
using cesaro::testing::random_smooth;

namespace {
GridPtr dense() { return geo_grid(10000, 1e-6, 1.0 - 1e-5); }
}

TEST_CASE("apply_Aw closed forms on Ces_2(0,1)") {
    auto w = ces2();
    auto g = dense();

    // f = 1: (1/x) * x = 1.
    auto a1 = apply_Aw(sample(g, [](double) { return 1.0; }), w);
    for (std::size_t i = 0; i < a1.size(); i += 999)
        CHECK(a1.values[i] == doctest::Approx(1.0).epsilon(1e-12));

    auto a0 = apply_Aw(sample(g, [](double) { return 0.0; }), w);
    for (double v : a0.values) CHECK(v == 0.0);

    // f = indicator of (1/2, 1): (1 - 0.5/x)+ sampled.
    auto ac = apply_Aw(indicator(g, 0.5, 1.0), w);
    for (std::size_t i = 0; i < ac.size(); i += 499) {
        const double x = ac.x(i);
        const double expect = x > 0.5 ? 1.0 - 0.5 / x : 0.0;
        CHECK(ac.values[i] == doctest::Approx(expect).scale(1.0).epsilon(5e-3));
    }
}

TEST_CASE("cesaro_norm closed forms") {
    auto w = ces2();
    auto g = dense();
    CHECK(cesaro_norm(sample(g, [](double) { return 1.0; }), w).value ==
          doctest::Approx(1.0).epsilon(1e-6));
    CHECK(cesaro_norm(sample(g, [](double) { return 0.0; }), w).value == 0.0);

    // ||chi_(1/2,1)|| = sqrt(3/4 - log 2), about 0.23844.
    auto gfine = geo_grid(200000, 1e-6, 1.0 - 1e-6);
    const double expect = std::sqrt(0.75 - std::log(2.0));
    CHECK(cesaro_norm(indicator(gfine, 0.5, 1.0), w).value ==
          doctest::Approx(expect).epsilon(5e-4));
}

TEST_CASE("cesaro_norm reports a divergent head honestly") {
    // s*p + p + 1 = 0: the constant extension of f below x_1 is not
    // integrable against w^p.
    auto w = WeightSpec::power(-1.5, 2.0, 1.0);
    auto g = geo_grid(100, 1e-3, 0.9);
    CHECK(std::isinf(cesaro_norm(sample(g, [](double) { return 1.0; }), w).value));
    // A function vanishing at x_1 has no head mass at all.
    auto f0 = indicator(g, 0.5, 0.9);
    const auto r = cesaro_norm(f0, w);
    CHECK(std::isfinite(r.value));
    CHECK(r.value > 0.0);
}

TEST_CASE("apply_Bw closed forms") {
    auto w = ces2();
    auto g = dense();

    // Step: B_w f = 1/x on (1/2,1), 0 on (0,1/2).
    auto bs = apply_Bw(indicator(g, 0.0, 0.5), w);
    for (std::size_t i = 0; i < bs.size(); i += 499) {
        const double x = bs.x(i);
        if (x < 0.5 - 1e-3)
            CHECK(bs.values[i] == 0.0);
        else if (x > 0.5 + 1e-3)
            CHECK(bs.values[i] == doctest::Approx(1.0 / x).epsilon(5e-3));
    }

    // Constant: zero.
    auto bc = apply_Bw(sample(g, [](double) { return 3.0; }), w);
    for (std::size_t i = 0; i < bc.size(); i += 999) CHECK(bc.values[i] == 0.0);

    // 1 - x: B_w f = x.
    auto bl = apply_Bw(sample(g, [](double x) { return 1.0 - x; }), w);
    for (double xq : {0.2, 0.5, 0.8}) {
        std::size_t i = 0;
        while (bl.x(i) < xq) ++i;
        CHECK(bl.values[i] == doctest::Approx(bl.x(i)).epsilon(5e-3));
    }
}

TEST_CASE("dual_norm closed forms via the segment sum") {
    auto w = ces2();
    auto g = dense();
    const auto r1 = dual_norm(sample(g, [](double x) { return 1.0 - x; }), w);
    CHECK(r1.method == NormMethod::SegmentSum);
    CHECK(r1.value == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-3));

    CHECK(dual_norm(indicator(g, 0.0, 0.5), w).value ==
          doctest::Approx(1.0).epsilon(1e-3));
    CHECK(dual_norm(sample(g, [](double) { return 0.0; }), w).value == 0.0);
}

TEST_CASE("the two dual-norm routes agree") {
    auto w = ces2();
    auto g = dense();
    std::mt19937_64 rng(21);
    for (int t = 0; t < 5; ++t) {
        auto f = random_smooth(g, rng);
        const double seg = dual_norm(f, w).value;
        const double quad = dual_norm_quadrature(f, w).value;
        CHECK(quad == doctest::Approx(seg).epsilon(1e-6));
    }
    // Piecewise data exercises the jump handling of the quadrature route.
    const double seg = dual_norm(indicator(g, 0.0, 0.5), w).value;
    const double quad = dual_norm_quadrature(indicator(g, 0.0, 0.5), w).value;
    CHECK(quad == doctest::Approx(seg).epsilon(1e-4));
}

TEST_CASE("pairing: closed form, zero, symmetry, grid mismatch") {
    auto g = dense();
    auto f = sample(g, [](double x) { return 1.0 - x; });
    auto one = sample(g, [](double) { return 1.0; });
    CHECK(pairing(f, one) == doctest::Approx(0.5).epsilon(1e-4));
    auto zero = sample(g, [](double) { return 0.0; });
    CHECK(pairing(f, zero) == 0.0);
    CHECK(pairing(f, one) == doctest::Approx(pairing(one, f)));
    auto g2 = geo_grid(50, 1e-3, 0.9);
    CHECK_THROWS_AS(pairing(f, sample(g2, [](double) { return 1.0; })),
                    ValidationError);
}

TEST_CASE("holder_check on the closed-form pair") {
    auto w = ces2();
    auto g = dense();
    auto f = sample(g, [](double x) { return 1.0 - x; });
    auto one = sample(g, [](double) { return 1.0; });
    const auto r = holder_check(f, one, w);
    CHECK(r.lhs == doctest::Approx(0.5).epsilon(1e-3));
    CHECK(r.rhs == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-3));
    CHECK(r.slack > 0.0);

    auto zero = sample(g, [](double) { return 0.0; });
    const auto rz = holder_check(f, zero, w);
    CHECK(rz.lhs == 0.0);
    CHECK(rz.slack == doctest::Approx(rz.rhs));
}

TEST_CASE("holder inequality on random pairs from the membership class") {
    auto w = ces2();
    auto g = geo_grid(800, 1e-5, 1.0 - 1e-4);
    std::mt19937_64 rng(22);
    for (int t = 0; t < 120; ++t) {
        auto f = t % 2 == 0 ? random_piecewise(g, rng) : random_smooth(g, rng);
        auto gfun = random_piecewise(g, rng, 4, 2.0, false);
        const auto r = holder_check(f, gfun, w);
        CHECK(r.lhs <= r.rhs * (1.0 + 1e-8) + 1e-12);
    }
}

TEST_CASE("dual membership reports the three conditions") {
    auto w = ces2();
    auto g = dense();

    auto member = dual_membership(indicator(g, 0.0, 0.5), w);
    CHECK(member.tail_value == doctest::Approx(0.0));
    CHECK(member.first_slope == doctest::Approx(0.0));
    CHECK(member.dual_norm_value == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(member.member);

    auto non = dual_membership(sample(g, [](double) { return 1.0; }), w);
    CHECK(non.tail_value == doctest::Approx(1.0));
    CHECK_FALSE(non.member);

    auto zero = dual_membership(sample(g, [](double) { return 0.0; }), w);
    CHECK(zero.member);
    CHECK(zero.dual_norm_value == 0.0);
}

TEST_CASE("norm axioms: homogeneity and triangle inequality") {
    auto w = ces2();
    auto g = geo_grid(600, 1e-5, 1.0 - 1e-4);
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> cdist(0.1, 5.0);
    for (int t = 0; t < 60; ++t) {
        auto f = random_piecewise(g, rng);
        auto h = random_smooth(g, rng);
        const double c = cdist(rng);

        auto cf = f;
        for (auto& v : cf.values) v *= -c;  // homogeneity includes the sign
        CHECK(cesaro_norm(cf, w).value ==
              doctest::Approx(c * cesaro_norm(f, w).value).epsilon(1e-12));
        CHECK(dual_norm(cf, w).value ==
              doctest::Approx(c * dual_norm(f, w).value).epsilon(1e-12));

        auto fh = f;
        for (std::size_t i = 0; i < fh.size(); ++i)
            fh.values[i] += h.values[i];
        CHECK(cesaro_norm(fh, w).value <=
              cesaro_norm(f, w).value + cesaro_norm(h, w).value + 1e-10);
        CHECK(dual_norm(fh, w).value <=
              dual_norm(f, w).value + dual_norm(h, w).value + 1e-10);
    }
}

TEST_CASE("cesaro norm is a lattice norm") {
    auto w = ces2();
    auto g = geo_grid(600, 1e-5, 1.0 - 1e-4);
    std::mt19937_64 rng(24);
    std::uniform_real_distribution<double> extra(0.0, 1.0);
    for (int t = 0; t < 40; ++t) {
        auto f = random_piecewise(g, rng, 5, 1.5, false);
        for (auto& v : f.values) v = std::abs(v);
        auto h = f;
        for (auto& v : h.values) v += extra(rng);
        CHECK(cesaro_norm(f, w).value <= cesaro_norm(h, w).value + 1e-12);
    }
}

TEST_CASE("dual norm of f equals dual norm of its majorant") {
    auto w = ces2();
    auto g = geo_grid(500, 1e-4, 1.0 - 1e-4);
    std::mt19937_64 rng(25);
    PsiTransform psi(w);
    for (int t = 0; t < 30; ++t) {
        auto f = random_piecewise(g, rng);
        Majorant m = essential_majorant(f, psi);
        std::vector<double> mv(g->size());
        for (std::size_t i = 0; i < g->size(); ++i) mv[i] = m.eval(f.x(i));
        const double a = dual_norm(f, w).value;
        const double b = dual_norm(SampledFunction{g, std::move(mv)}, w).value;
        CHECK(b == doctest::Approx(a).epsilon(1e-10));
    }
}

TEST_CASE("exponent identity (w^(p-1))^q = w^p") {
    std::mt19937_64 rng(26);
    std::uniform_real_distribution<double> pdist(1.1, 10.0);
    auto g = geo_grid(200, 1e-4, 0.9);
    for (int t = 0; t < 25; ++t) {
        const double p = pdist(rng);
        const double q = p / (p - 1.0);
        for (std::size_t i = 0; i < g->size(); i += 17) {
            const double w = 1.0 / (*g)[i];
            const double lhs = std::pow(std::pow(w, p - 1.0), q);
            const double rhs = std::pow(w, p);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
}
