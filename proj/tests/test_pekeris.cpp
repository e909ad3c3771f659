#include <doctest.h>

#include <cmath>

#include "testutil.hpp"
#include "wsspectra/pekeris.hpp"

using namespace ws;
using testutil::fe56;

namespace {

// Exact centrifugal profile and its x-derivatives, dt / (1+x)^2 scaled out.
double vl(double x, double dt) { return dt / ((1.0 + x) * (1.0 + x)); }
double vl1(double x, double dt) { return -2.0 * dt / std::pow(1.0 + x, 3); }
double vl2(double x, double dt) { return 6.0 * dt / std::pow(1.0 + x, 4); }

// Matched profile and its analytic x-derivatives.
double vtilde(double x, double alpha, double dt, double C0, double C1, double C2) {
    const double s = 1.0 + std::exp(alpha * x);
    return dt * (C0 + C1 / s + C2 / (s * s));
}
double vtilde1(double x, double alpha, double dt, double C1, double C2) {
    const double t = std::exp(alpha * x);
    const double s = 1.0 + t;
    return -dt * alpha * t * (C1 / (s * s) + 2.0 * C2 / (s * s * s));
}
double vtilde2(double x, double alpha, double dt, double C1, double C2) {
    const double t = std::exp(alpha * x);
    const double s = 1.0 + t;
    return -dt * alpha * alpha * t *
           (C1 * (1.0 - t) / (s * s * s) + 2.0 * C2 * (1.0 - 2.0 * t) / (s * s * s * s));
}

double extremum_residual(double x, const PotentialParams& p, double dt) {
    const double t = std::exp(p.alpha() * x);
    return p.alpha() * p.V0 * t / ((1.0 + t) * (1.0 + t)) - 2.0 * dt / std::pow(1.0 + x, 3);
}

}  // namespace

TEST_CASE("extremum location for the published channels") {
    const auto p = fe56();
    const auto k = testutil::table_constants();
    SUBCASE("D=3 l=1") {
        const auto px = make_expansion(p, {0, 1, 3}, k);
        REQUIRE(px);
        CHECK(px->r_l == doctest::Approx(2.95578498158).epsilon(1e-8));
        const double dt = px->delta_tilde;
        const double scale = std::max(p.alpha() * p.V0 / 4.0, 2.0 * dt);
        CHECK(std::abs(extremum_residual(px->x_l, p, dt)) < 1e-12 * scale);
    }
    SUBCASE("D=4 l=0") {
        const auto px = make_expansion(p, {0, 0, 4}, k);
        REQUIRE(px);
        CHECK(px->r_l == doctest::Approx(2.56619312728).epsilon(1e-8));
    }
    SUBCASE("D=3 l=8 has no extremum") {
        CHECK(!solve_extremum(p, {0, 8, 3}, k));
        CHECK(!make_expansion(p, {0, 8, 3}, k));
    }
    SUBCASE("under CODATA constants the anchor shifts at the 2e-4 level") {
        const auto px = make_expansion(p, {0, 1, 3}, PhysicalConstants::codata2018());
        REQUIRE(px);
        CHECK(px->r_l == doctest::Approx(2.95508651595).epsilon(1e-9));
        CHECK(std::abs(px->r_l - 2.95578498158) / 2.95578498158 < 3e-4);
    }
}

TEST_CASE("closed-form coefficients at x_l = 0") {
    const auto p = fe56();
    const double alpha = p.alpha();
    const auto [C0, C1, C2] = pekeris_coefficients(p, 0.0);
    CHECK(C0 == doctest::Approx(1.0 - 4.0 / alpha + 12.0 / (alpha * alpha)).epsilon(1e-12));
    CHECK(C1 == doctest::Approx(8.0 / alpha - 48.0 / (alpha * alpha)).epsilon(1e-12));
    CHECK(C2 == doctest::Approx(48.0 / (alpha * alpha)).epsilon(1e-12));
}

TEST_CASE("matching system residuals stay below 1e-10 for random anchors") {
    testutil::ParamSampler gen(777);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = gen.params();
        const double x_l = gen.uniform(-0.8, 2.0);
        const auto [C0, C1, C2] = pekeris_coefficients(p, x_l);
        for (double r : matching_system_residuals(p, x_l, C0, C1, C2))
            CHECK(std::abs(r) < 1e-10);
    }
}

TEST_CASE("second-order match of the centrifugal profile at the anchor") {
    const auto k = PhysicalConstants::codata2018();
    testutil::ParamSampler gen(424242);
    int matched = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const auto p = gen.params();
        const auto c = gen.channel();
        const auto px = make_expansion(p, c, k);
        if (!px || px->bypass) continue;
        ++matched;
        const double dt = px->delta_tilde;
        const double alpha = p.alpha();
        const double x = px->x_l;
        CHECK(vtilde(x, alpha, dt, px->C0, px->C1, px->C2) ==
              doctest::Approx(vl(x, dt)).epsilon(1e-8));
        CHECK(vtilde1(x, alpha, dt, px->C1, px->C2) ==
              doctest::Approx(vl1(x, dt)).epsilon(1e-8));
        CHECK(vtilde2(x, alpha, dt, px->C1, px->C2) ==
              doctest::Approx(vl2(x, dt)).epsilon(1e-8));
    }
    CHECK(matched > 100);
}

TEST_CASE("analytic derivatives agree with the central-difference fallback") {
    const auto p = fe56();
    const auto k = testutil::table_constants();
    const auto px = make_expansion(p, {0, 2, 3}, k);
    REQUIRE(px);
    const double dt = px->delta_tilde;
    const double alpha = p.alpha();
    auto f = [&](double x) { return vtilde(x, alpha, dt, px->C0, px->C1, px->C2); };
    CHECK(vtilde1(px->x_l, alpha, dt, px->C1, px->C2) ==
          doctest::Approx(testutil::d1_central(f, px->x_l)).epsilon(1e-6));
    CHECK(vtilde2(px->x_l, alpha, dt, px->C1, px->C2) ==
          doctest::Approx(testutil::d2_central(f, px->x_l)).epsilon(1e-6));
}

TEST_CASE("K coefficients") {
    const auto p = fe56();
    const auto k = testutil::table_constants();
    const auto px = make_expansion(p, {0, 1, 3}, k);
    REQUIRE(px);
    const double dt = px->delta_tilde;
    SUBCASE("exact relations to the C coefficients") {
        CHECK(px->K0 == dt * px->C0);
        CHECK(px->K1 == p.V0 - dt * px->C1);
        CHECK(px->K2 == dt * px->C2);
    }
    SUBCASE("extremum-substituted forms agree") { CHECK(px->k_hyperbolic_dev < 1e-10); }
    SUBCASE("K2 positive and the depth condition holds for the bound channel") {
        CHECK(px->K2 > 0.0);
        const double lhs = p.V0 * p.R0 * p.R0 * p.R0;
        const double rhs = 8.0 * k.hbar2_over_2mu(p.mu) * 2.0 * p.a;  // l~(l~+1) = 2
        CHECK(lhs >= rhs);
    }
}

TEST_CASE("zero-centrifugal channel bypasses the expansion") {
    const auto p = fe56();
    const auto k = PhysicalConstants::codata2018();
    const auto px = make_expansion(p, {0, 0, 3}, k);
    REQUIRE(px);
    CHECK(px->bypass);
    CHECK(px->C0 == 0.0);
    CHECK(px->C1 == 0.0);
    CHECK(px->C2 == 0.0);
    CHECK(px->K0 == 0.0);
    CHECK(px->K1 == p.V0);
    CHECK(px->K2 == 0.0);
    for (double r : {0.1, 1.0, 4.0, 9.0})
        CHECK(approx_effective_potential(r, *px, p) == woods_saxon(r, p));
}

TEST_CASE("attractive centrifugal term has no extremum") {
    const auto p = fe56();
    const auto k = PhysicalConstants::codata2018();
    CHECK(!make_expansion(p, {0, 0, 2}, k));
}

TEST_CASE("matched potential saturates to K0 and matches the well at the anchor") {
    const auto p = fe56();
    const auto k = testutil::table_constants();
    const auto px = make_expansion(p, {0, 1, 3}, k);
    REQUIRE(px);
    CHECK(approx_effective_potential(p.R0 + 40.0 * p.a, *px, p) ==
          doctest::Approx(px->K0).epsilon(1e-12));
    const ChannelSpec c{0, 1, 3};
    CHECK(approx_effective_potential(px->r_l, *px, p) ==
          doctest::Approx(effective_potential(px->r_l, p, c, k)).epsilon(1e-8));
    CHECK(px->veff_min == doctest::Approx(effective_potential(px->r_l, p, c, k)).epsilon(1e-12));
}

TEST_CASE("channels with equal effective angular momentum produce identical expansions") {
    const auto k = PhysicalConstants::codata2018();
    testutil::ParamSampler gen(999);
    int verified = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const auto p = gen.params();
        const int l = gen.uniform_int(1, 6);
        const int D = gen.uniform_int(3, 6);
        const ChannelSpec c1{0, l, D}, c2{0, l - 1, D + 2};
        REQUIRE(c1.l_tilde() == c2.l_tilde());
        const auto a = make_expansion(p, c1, k);
        const auto b = make_expansion(p, c2, k);
        REQUIRE(a.has_value() == b.has_value());
        if (!a) continue;
        ++verified;
        CHECK(a->x_l == b->x_l);
        CHECK(a->K0 == b->K0);
        CHECK(a->K1 == b->K1);
        CHECK(a->K2 == b->K2);
    }
    CHECK(verified > 20);
}
