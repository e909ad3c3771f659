#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "testutil.hpp"
#include "wsspectra/susy_spectrum.hpp"

using namespace ws;
using testutil::fe56;

TEST_CASE("superpotential parameters of the D=3 l=1 channel") {
    const auto p = fe56();
    const auto k = testutil::table_constants();
    const ChannelSpec c{0, 1, 3};
    const auto px = make_expansion(p, c, k);
    REQUIRE(px);
    const auto sp = superpotential_params(p, c, k, *px);
    REQUIRE(sp);
    CHECK(sp->a_negative);
    CHECK(sp->b_positive);

    const double sc = p.a * p.a / k.hbar2_over_2mu(p.mu);
    const double beta_sq = sc * px->K1;
    const double gamma_sq = sc * px->K2;
    const double a = p.a;
    // constraint system residuals
    const auto e = nu_energy(p, c, k, *px);
    REQUIRE(e);
    const double eps0 = e->triple.epsilon;
    CHECK(sp->A * sp->A == doctest::Approx(eps0 * eps0 / (a * a)).epsilon(1e-10));
    CHECK(2.0 * sp->A * sp->B - sp->B / a ==
          doctest::Approx(-beta_sq / (a * a)).epsilon(1e-10));
    CHECK(sp->B * sp->B + sp->B / a == doctest::Approx(gamma_sq / (a * a)).epsilon(1e-10));
}

TEST_CASE("zero quadratic strength degenerates the superpotential") {
    const auto p = fe56();
    const auto k = PhysicalConstants::codata2018();
    const ChannelSpec c{0, 0, 3};
    const auto px = make_expansion(p, c, k);  // bypass, gamma^2 = 0
    REQUIRE(px);
    CHECK(!superpotential_params(p, c, k, *px));
    CHECK(!susy_ground_energy(p, c, k, *px));
}

TEST_CASE("ground-state energy equals the closed form at nr = 0") {
    const auto k = PhysicalConstants::codata2018();
    testutil::ParamSampler gen(5150);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const auto p = gen.params();
        const auto c = gen.channel(0);
        const auto px = make_expansion(p, c, k);
        if (!px) continue;
        const auto nu = nu_energy(p, c, k, *px);
        const auto e0 = susy_ground_energy(p, c, k, *px);
        if (!nu || !e0) continue;
        ++checked;
        CHECK(std::abs(nu->energy - *e0) / std::max(1.0, std::abs(nu->energy)) < 1e-12);
    }
    CHECK(checked > 100);
}

TEST_CASE("published energies through the supersymmetric route") {
    const auto p = fe56();
    const auto k = testutil::table_constants();
    auto ground = [&](int l, int D) {
        const auto px = make_expansion(p, {0, l, D}, k);
        REQUIRE(px);
        const auto e = susy_ground_energy(p, {0, l, D}, k, *px);
        REQUIRE(e);
        return *e;
    };
    CHECK(ground(1, 3) == doctest::Approx(-42.8980494).epsilon(5e-4));
    CHECK(ground(2, 4) == doctest::Approx(-24.7231461).epsilon(5e-4));

    const auto px = make_expansion(p, {1, 3, 3}, k);
    REQUIRE(px);
    const auto e13 = susy_energy(p, {1, 3, 3}, k, *px, 1);
    REQUIRE(e13);
    CHECK(e13->energy == doctest::Approx(-209.1611062).epsilon(5e-4));
}

TEST_CASE("excited energies: closed form, telescoping sum, and the other method") {
    const auto k = PhysicalConstants::codata2018();
    testutil::ParamSampler gen(8088);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const auto p = gen.params();
        auto c = gen.channel();
        const auto px = make_expansion(p, c, k);
        if (!px) continue;
        for (int nr = 0; nr <= 3; ++nr) {
            c.nr = nr;
            const auto nu = nu_energy(p, c, k, *px);
            const auto su = susy_energy(p, c, k, *px, nr);
            REQUIRE(nu.has_value() == su.has_value());
            if (!nu) break;
            ++checked;
            CHECK(std::abs(nu->energy - su->energy) / std::max(1.0, std::abs(nu->energy)) <
                  1e-12);
            CHECK(std::abs(su->energy - su->telescoped) /
                      std::max(1.0, std::abs(su->energy)) < 1e-10);
        }
    }
    CHECK(checked > 150);
}

TEST_CASE("nr = 0 recursion reduces to the ground state exactly") {
    const auto p = fe56();
    const auto k = testutil::table_constants();
    const ChannelSpec c{0, 2, 3};
    const auto px = make_expansion(p, c, k);
    REQUIRE(px);
    const auto e0 = susy_ground_energy(p, c, k, *px);
    const auto e = susy_energy(p, c, k, *px, 0);
    REQUIRE(e0);
    REQUIRE(e);
    CHECK(e->telescoped == *e0);  // empty residue sum
    CHECK(e->energy == doctest::Approx(*e0).epsilon(1e-14));
}

TEST_CASE("partner potentials") {
    const auto p = fe56();
    const auto k = testutil::table_constants();
    const ChannelSpec c{0, 1, 3};
    const auto px = make_expansion(p, c, k);
    REQUIRE(px);
    const auto sp = superpotential_params(p, c, k, *px);
    REQUIRE(sp);
    const double h2 = k.hbar2_over_2mu(p.mu);
    const auto e0 = susy_ground_energy(p, c, k, *px);
    REQUIRE(e0);

    SUBCASE("asymptotic limit of the first partner") {
        const auto [v1, v2] = partner_potentials(p.R0 + 45.0 * p.a, *sp, p, k);
        CHECK(v1 == doctest::Approx(h2 * sp->A * sp->A).epsilon(1e-9));
        CHECK(v1 == doctest::Approx(px->K0 - *e0).epsilon(1e-9));
        CHECK(v2 == doctest::Approx(h2 * sp->A * sp->A).epsilon(1e-9));
    }
    SUBCASE("partner difference equals twice the derivative term") {
        for (double r : {1.0, 2.5, 4.0, 6.0, 9.0}) {
            const auto [v1, v2] = partner_potentials(r, *sp, p, k);
            const double wp = superpotential_derivative(r, *sp, p, k);
            CHECK(v2 - v1 == doctest::Approx(2.0 * std::sqrt(h2) * wp).epsilon(1e-10));
        }
    }
    SUBCASE("first partner reproduces the matched potential up to the ground energy") {
        for (int i = 0; i <= 100; ++i) {
            const double r = 0.2 + 12.0 * i / 100.0;
            const auto [v1, v2] = partner_potentials(r, *sp, p, k);
            const double vt = approx_effective_potential(r, *px, p);
            CHECK(v1 + *e0 == doctest::Approx(vt).epsilon(1e-9));
        }
    }
    SUBCASE("Riccati residual vanishes on a grid") {
        for (int i = 0; i <= 100; ++i) {
            const double r = 0.2 + 12.0 * i / 100.0;
            const double w = superpotential(r, *sp, p, k);
            const double wp = superpotential_derivative(r, *sp, p, k);
            const double vt = approx_effective_potential(r, *px, p);
            const double residual = w * w - std::sqrt(h2) * wp + *e0 - vt;
            CHECK(std::abs(residual) < 1e-9);
        }
    }
    SUBCASE("shape-invariance residue is r-independent") {
        // difference of partner potentials at shifted parameters, sampled
        auto shifted = [&](double B) {
            SuperpotentialParams s = *sp;
            s.B = B;
            const double sc = p.a * p.a / h2;
            const double beta_sq = sc * px->K1;
            const double gamma_sq = sc * px->K2;
            s.A = (gamma_sq - beta_sq) / (2.0 * p.a * p.a * B) - 0.5 * B;
            return s;
        };
        const auto s0 = shifted(sp->B);            // B_0
        const auto s1 = shifted(sp->B - 1.0 / p.a);  // B_1
        double lo = 1e300, hi = -1e300;
        for (int i = 0; i < 100; ++i) {
            const double r = 0.3 + 11.0 * i / 99.0;
            const double v2 = partner_potentials(r, s0, p, k).second;
            const double v1 = partner_potentials(r, s1, p, k).first;
            const double diff = v2 - v1;
            lo = std::min(lo, diff);
            hi = std::max(hi, diff);
        }
        CHECK(hi - lo < 1e-9);
        CHECK(0.5 * (hi + lo) ==
              doctest::Approx(shape_invariance_residue(1, *sp, p, c, k, *px)).epsilon(1e-9));
    }
}

TEST_CASE("recursion window coincides with the admissibility bound") {
    const auto k = PhysicalConstants::codata2018();
    testutil::ParamSampler gen(60601);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = gen.params();
        const auto c = gen.channel();
        const auto px = make_expansion(p, c, k);
        if (!px || px->bypass) continue;
        ++checked;
        CHECK(susy_max_nr(p, c, k, *px) == max_nr(p, k, *px));
    }
    CHECK(checked > 80);
}

TEST_CASE("energies remain evaluable when the validity flags fail") {
    // a shallow wide well gives A > 0 while the closed form still evaluates
    const auto k = PhysicalConstants::codata2018();
    PotentialParams p{12.0, 7.5, 0.9, 1.8};
    bool saw_invalid_flags = false;
    for (int l = 1; l <= 6 && !saw_invalid_flags; ++l) {
        const ChannelSpec c{0, l, 3};
        const auto px = make_expansion(p, c, k);
        if (!px) continue;
        const auto sp = superpotential_params(p, c, k, *px);
        if (!sp) continue;
        if (sp->a_negative && sp->b_positive) continue;
        saw_invalid_flags = true;
        CHECK(susy_energy(p, c, k, *px, 0).has_value());
    }
    CHECK(saw_invalid_flags);
}
