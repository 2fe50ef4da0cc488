#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "singf/hypergeometric.hpp"

using singf::DivisionAlgebra;
using singf::HypergeomParams;
using singf::JackTable;
using singf::Partition;
using singf::SeriesResult;
using singf::Spectrum;
using singf::TruncationPolicy;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("0F0 at the zero spectrum is 1, and is etr elsewhere") {
    const HypergeomParams etr{{}, {}, DivisionAlgebra(1)};
    SeriesResult r = singf::hyp_matrix(etr, Spectrum::constant(3, 0.0), {30});
    REQUIRE(r.value == 1.0);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (int b : {1, 2, 4})
        for (int trial = 0; trial < 5; ++trial) {
            const Spectrum x({u(rng), u(rng), u(rng)});
            r = singf::hyp_matrix({{}, {}, DivisionAlgebra(b)}, x, {40});
            REQUIRE_THAT(r.value, WithinRel(std::exp(x.sum()), 1e-10));
        }
}

TEST_CASE("1F0 determinant identity") {
    const HypergeomParams p{{2.5}, {}, DivisionAlgebra(1)};
    const SeriesResult r = singf::hyp_matrix(p, Spectrum({0.3, 0.1}), {30});
    REQUIRE_THAT(r.value, WithinRel(std::pow(0.7 * 0.9, -2.5), 1e-8));
    REQUIRE(r.converged);
}

TEST_CASE("2F1 Euler relation on random spectra") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> us(0.0, 0.5);
    std::uniform_real_distribution<double> up(0.4, 3.0);
    for (int b : {1, 2, 4})
        for (int trial = 0; trial < 6; ++trial) {
            const DivisionAlgebra da(b);
            const double a = up(rng), bb = up(rng), c = up(rng) + 2.5;
            const Spectrum x({us(rng), us(rng)});
            const SeriesResult lhs = singf::hyp_matrix({{a, bb}, {c}, da}, x, {40});
            const SeriesResult rhs = singf::hyp_matrix({{c - a, c - bb}, {c}, da}, x, {40});
            double det_pow = 1.0;
            for (double v : x.values()) det_pow *= std::pow(1.0 - v, c - a - bb);
            CAPTURE(b, a, bb, c, x.values());
            REQUIRE_THAT(lhs.value, WithinRel(det_pow * rhs.value, 1e-7));
        }
}

TEST_CASE("scalar-matrix Kummer relation on random parameters") {
    // 2F1(a,b;c;-x I_n) = (1+x)^{-b n} 2F1(c-a,b;c;(x/(1+x)) I_n)
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> up(0.4, 2.5);
    std::uniform_real_distribution<double> ux(0.05, 0.7);
    const int n = 2;
    for (int b : {1, 2, 4})
        for (int trial = 0; trial < 6; ++trial) {
            const DivisionAlgebra da(b);
            const double a = up(rng), bb = up(rng), c = up(rng) + 2.5, x = ux(rng);
            const SeriesResult lhs =
                singf::hyp_matrix({{a, bb}, {c}, da}, Spectrum::constant(n, -x), {60});
            const SeriesResult rhs = singf::hyp_matrix({{c - a, bb}, {c}, da},
                                                       Spectrum::constant(n, x / (1.0 + x)), {60});
            CAPTURE(b, a, bb, c, x);
            REQUIRE_THAT(lhs.value,
                         WithinRel(std::pow(1.0 + x, -bb * n) * rhs.value, 1e-6));
        }
}

TEST_CASE("two-matrix series: zero first argument leaves only the empty partition") {
    const HypergeomParams p{{1.5, 2.0}, {3.0}, DivisionAlgebra(1)};
    const SeriesResult r =
        singf::hyp_two_matrix(p, Spectrum::constant(3, 0.0), Spectrum::ones(2), {20});
    REQUIRE(r.value == 1.0);
}

TEST_CASE("two-matrix series rejects n > m") {
    const HypergeomParams p{{1.5}, {}, DivisionAlgebra(1)};
    REQUIRE_THROWS_AS(
        singf::hyp_two_matrix(p, Spectrum::ones(2), Spectrum::ones(3), TruncationPolicy{10}),
        std::invalid_argument);
}

TEST_CASE("heterogeneous 1F0 against Stiefel-circle quadrature, n = 1, m = 2") {
    // integral over the unit circle: (1/2pi) int (1 - b1 (a1 cos^2 + a2 sin^2))^{-a} dtheta
    const double a = 1.7, a1 = 0.5, a2 = 0.2, b1 = 0.8;
    const int N = 4096;
    double quad = 0.0;
    for (int i = 0; i < N; ++i) {
        const double th = 2.0 * M_PI * (i + 0.5) / N;
        const double ct = std::cos(th), st = std::sin(th);
        quad += std::pow(1.0 - b1 * (a1 * ct * ct + a2 * st * st), -a);
    }
    quad /= N;
    const SeriesResult r = singf::hyp_two_matrix({{a}, {}, DivisionAlgebra(1)},
                                                 Spectrum({a1, a2}), Spectrum({b1}), {60});
    REQUIRE_THAT(r.value, WithinRel(quad, 1e-6));
}

TEST_CASE("identity-dimension ratio ties Pochhammers to Jack identity values") {
    // C_kappa(I_n) (m b/2)_kappa = C_kappa(I_m) (n b/2)_kappa for len(kappa) <= n
    for (int b : {1, 2, 4}) {
        const DivisionAlgebra da(b);
        JackTable table(da);
        const int m = 5, n = 3;
        for (int k = 0; k <= 6; ++k)
            for (const Partition& kappa : singf::enumerate_partitions(k, n)) {
                const double lhs = table.identity_value(kappa, n) *
                                   singf::pochhammer_beta(m * da.half_beta(), kappa, da);
                const double rhs = table.identity_value(kappa, m) *
                                   singf::pochhammer_beta(n * da.half_beta(), kappa, da);
                REQUIRE_THAT(lhs, WithinRel(rhs, 1e-11));
            }
    }
}

TEST_CASE("two-matrix reduction at b = ones(n)") {
    // with upper parameter m*b/2 present, the heterogeneous series collapses
    // to the one-matrix series with m*b/2 replaced by n*b/2
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.02, 0.2);
    for (int b : {1, 2}) {
        const DivisionAlgebra da(b);
        const int m = 3, n = 2;
        const double hb = da.half_beta();
        const Spectrum arg({-u(rng), -u(rng), -u(rng)});
        const double c = (m + n - 1) * hb + 1.0;
        const SeriesResult het = singf::hyp_two_matrix(
            {{(n + 10) * hb, m * hb}, {c}, da}, arg, Spectrum::ones(n), {40});
        const SeriesResult one =
            singf::hyp_matrix({{(n + 10) * hb, n * hb}, {c}, da}, arg, {40});
        REQUIRE_THAT(het.value, WithinRel(one.value, 1e-10));
    }
}

TEST_CASE("positive-series terms are non-negative for arguments in (0,1)") {
    const DivisionAlgebra da(1);
    const int m = 3, n = 2, p = 10;
    const double hb = 0.5;
    const HypergeomParams params{{(m - 1) * hb + 1.0, (n + p) * hb},
                                 {(m + n - 1) * hb + 1.0},
                                 da};
    JackTable table(da);
    const Spectrum y({0.4, 0.3, 0.1});
    const singf::JackValues vals = table.eval_all(y, 12, m);
    for (int k = 0; k <= 12; ++k)
        for (const Partition& kappa : singf::enumerate_partitions(k, m)) {
            double ratio;
            REQUIRE(singf::detail::pochhammer_ratio(params, kappa, &ratio));
            REQUIRE(ratio * vals.at(kappa) >= 0.0);
        }
}

TEST_CASE("zero lower-parameter Pochhammer raises") {
    const HypergeomParams p{{2.0}, {0.5}, DivisionAlgebra(1)};
    // (0.5)_{(1,1)} = 0.5 * 0 = 0 while the numerator survives
    REQUIRE_THROWS_AS(singf::hyp_matrix(p, Spectrum({0.1, 0.1}), TruncationPolicy{4}),
                      std::domain_error);
}

TEST_CASE("truncation bookkeeping has the prefix property") {
    const HypergeomParams p{{1.2}, {}, DivisionAlgebra(1)};
    const Spectrum x({0.2, 0.1});
    const SeriesResult full = singf::hyp_matrix(p, x, {12});
    const SeriesResult part = singf::hyp_matrix(p, x, {6});
    REQUIRE(part.degree_used == 6);
    REQUIRE(full.degree_used == 12);
    const SeriesResult again = singf::hyp_matrix(p, x, {6});
    REQUIRE(again.value == part.value);
    REQUIRE(std::abs(full.last_increment) < std::abs(part.last_increment));
}

TEST_CASE("tail tolerance reports early convergence degree") {
    const HypergeomParams p{{}, {}, DivisionAlgebra(1)};
    TruncationPolicy trunc{40, std::nullopt, 1e-12};
    const SeriesResult r = singf::hyp_matrix(p, Spectrum({0.05, 0.02}), trunc);
    REQUIRE(r.converged);
    REQUIRE(r.degree_used < 40);
    REQUIRE_THAT(r.value, WithinRel(std::exp(0.07), 1e-11));
}

TEST_CASE("divergent 1F0 arguments are flagged") {
    const HypergeomParams p{{1.5}, {}, DivisionAlgebra(1)};
    const SeriesResult r = singf::hyp_matrix(p, Spectrum({1.2, 0.1}), {10});
    REQUIRE_FALSE(r.converged);
}

TEST_CASE("exact finite summation sets the converged flag by construction") {
    const HypergeomParams p{{-2.0, 1.5}, {3.5}, DivisionAlgebra(1)};
    TruncationPolicy trunc{8, 2, std::nullopt};
    const SeriesResult r = singf::hyp_matrix(p, Spectrum({0.7, 0.4}), trunc);
    REQUIRE(r.converged);
}
