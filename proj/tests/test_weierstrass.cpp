#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "e2surf/catenoid.hpp"
#include "e2surf/helicoid.hpp"
#include "e2surf/weierstrass.hpp"

using namespace e2surf;

TEST_CASE("h_potential: minimal-case values and agreement with zero_potential") {
    const MetricParams unit(1.0, 1.0);
    // real q: R = -2 i q^2 when lambda1 = 1
    const Complex r1 = h_potential(unit, 0.0, {0.7, 0.0});
    CHECK(std::abs(r1 - Complex{0.0, -2.0 * 0.49}) < 1e-15);

    const MetricParams m(2.0, 1.5);
    const Complex r2 = h_potential(m, 0.0, {0.0, 1.0});
    CHECK(std::abs(r2 - Complex{0.0, -2.0 * 1.5 * 1.5}) < 1e-14);

    CHECK(std::abs(h_potential(m, 0.0, {0.0, 0.0})) == 0.0);

    std::mt19937 rng(5);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) {
        const Complex q{d(rng), d(rng)};
        CHECK(std::abs(h_potential(m, 0.0, q) - zero_potential(m, q)) < 1e-12);
    }
}

TEST_CASE("zero_potential: unit-circle values, imaginary axis, sign structure") {
    const MetricParams m(2.0, 1.0);
    for (double b : {0.0, 0.4, 1.3, 2.8}) {
        const Complex q{std::cos(b), std::sin(b)};
        const double want = -2.0 * (4.0 * std::cos(b) * std::cos(b) + std::sin(b) * std::sin(b));
        CHECK(std::abs(zero_potential(m, q) - Complex{0.0, want}) < 1e-14);
    }
    const MetricParams m2(3.0, 1.0);
    const Complex it{0.0, 1.7};
    CHECK(std::abs(zero_potential(m2, it) - Complex{0.0, -2.0 * 1.7 * 1.7}) < 1e-14);
    CHECK(std::abs(zero_potential(m2, {0, 0})) == 0.0);

    std::mt19937 rng(6);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    for (int i = 0; i < 30; ++i) {
        const Complex R = zero_potential(m, {d(rng), d(rng)});
        CHECK(R.real() == 0.0);
        CHECK(R.imag() <= 0.0);
    }
}

TEST_CASE("sphere_normal: poles, equator, stereographic round trip") {
    const SphereNormal north = sphere_normal({0, 0});
    CHECK(north.N1 == 0.0);
    CHECK(north.N2 == 0.0);
    CHECK(north.N3 == 1.0);

    const SphereNormal eq = sphere_normal({1, 0});
    CHECK(eq.N1 == doctest::Approx(1.0));
    CHECK(std::abs(eq.N2) < 1e-16);
    CHECK(std::abs(eq.N3) < 1e-16);

    std::mt19937 rng(8);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int i = 0; i < 100; ++i) {
        const Complex g{d(rng), d(rng)};
        const SphereNormal n = sphere_normal(g);
        CHECK(std::abs(n.N1 * n.N1 + n.N2 * n.N2 + n.N3 * n.N3 - 1.0) < 1e-12);
        const Complex back = Complex{n.N1, n.N2} / (1.0 + n.N3);
        CHECK(std::abs(back - g) < 1e-12);
    }
}

TEST_CASE("pde_residual: degenerate constant map and the potential guard") {
    const MetricParams m(2.0, 1.0);
    const GaussMapValue constant{{0.8, 0.3}, {0, 0}, {0, 0}};
    CHECK(std::abs(pde_residual(m, constant, {0, 0})) == 0.0);

    const GaussMapValue at_zero{{0.0, 0.0}, {0.1, 0}, {0.1, 0}};
    CHECK_THROWS_AS(pde_residual(m, at_zero, {0, 0}), PotentialVanishes);
    CHECK_THROWS_AS(hopf(m, at_zero), PotentialVanishes);
}

TEST_CASE("eta_and_A: pole guard and the degenerate-parameter family") {
    const MetricParams m(2.0, 1.0);
    const GaussMapValue at_zero{{0.0, 0.0}, {0.1, 0}, {0.1, 0}};
    CHECK_THROWS_AS(eta_and_A(m, at_zero), GaussMapAtPole);
}

TEST_CASE("hopf: vanishes with g_z") {
    const MetricParams m(2.0, 1.0);
    const GaussMapValue gv{{0.5, 0.2}, {0, 0}, {0.3, -0.1}};
    CHECK(std::abs(hopf(m, gv).Q) == 0.0);
}

TEST_CASE("immersion differential: isotropy and A3 = eta/2 on helicoid data") {
    const MetricParams m(2.0, 1.0);
    const HelicoidProfile p(m, 0.5);
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> du(-1.5, 1.5), dv(-3.0, 3.0);
    for (int i = 0; i < 25; ++i) {
        const GaussMapData d = gauss_data(p, du(rng), dv(rng));
        const ImmersionDifferential imd = eta_and_A(m, d.gv);
        CHECK(std::abs(imd.A3 - 0.5 * imd.eta) < 1e-15);
        const Complex iso = imd.A1 * imd.A1 + imd.A2 * imd.A2 + imd.A3 * imd.A3;
        CHECK(std::abs(iso) < 1e-10);
    }
}

TEST_CASE("induced metric factor: closed forms for both families") {
    const MetricParams m(2.0, 1.0);
    const HelicoidProfile hp(m, 0.5);
    for (double u : {-0.8, 0.2, 1.1}) {
        for (double v : {-1.0, 0.6}) {
            const double rho2 = induced_metric_factor(m, gauss_data(hp, u, v).gv);
            const double bp = hp.b_prime(v);
            const double expect = hp.K() * hp.K() * std::cosh(m.lambda1() * u) *
                                  std::cosh(m.lambda1() * u) /
                                  ((m.lambda1() + bp) * (m.lambda1() + bp));
            CHECK(rho2 == doctest::Approx(expect).epsilon(1e-12));
        }
    }

    const OmegaPoint op = omega_check(m, 2.0, 0.5);
    const CatenoidProfile cp(m, op);
    for (double u : {-0.7, 0.3, 1.2}) {
        for (double v : {-0.5, 0.4}) {
            const double rho2 = induced_metric_factor(m, gauss_data(cp, u, v).gv);
            const double fp = cp.f_prime(u), pp = cp.phi_prime(u), B = cp.B(u);
            const double A = cp.f(u) + op.c * v;
            const double expect = (fp * fp + (op.c - pp) * (op.c - pp)) *
                                  std::cosh(A) * std::cosh(A) / (B * B);
            CHECK(rho2 == doctest::Approx(expect).epsilon(1e-12));
        }
    }

    const GaussMapValue branch{{0.5, 0.1}, {0, 0}, {0.2, 0}};
    CHECK(induced_metric_factor(m, branch) == 0.0);
}

TEST_CASE("mean_curvature_fd: planes and both minimal families") {
    const MetricParams m(2.0, 1.0);
    auto plane = [](double u, double v) { return GroupElement{u, v, 0.0}; };
    CHECK(std::abs(mean_curvature_fd(m, plane, 0.3, -0.2, 1e-3)) < 1e-6);

    const HelicoidProfile hp(m, 0.5);
    auto hel = [&](double u, double v) { return immerse(hp, u, v); };
    for (auto [u, v] : {std::pair{0.3, 0.5}, {-0.8, 1.1}, {0.9, -0.4}}) {
        CHECK(std::abs(mean_curvature_fd(m, hel, u, v, 1e-3)) < 1e-4);
    }

    const double tt = solve_theta_tilde(m, 2.0, 1e-12);
    const CatenoidProfile cp(m, omega_check(m, 2.0, tt));
    auto cat = [&](double u, double v) { return immerse(cp, u, v); };
    for (auto [u, v] : {std::pair{0.3, 0.2}, {0.9, -0.4}, {-0.5, 0.55}}) {
        CHECK(std::abs(mean_curvature_fd(m, cat, u, v, 1e-3)) < 1e-4);
    }

    auto degenerate = [](double, double) { return GroupElement{1.0, 2.0, 3.0}; };
    CHECK_THROWS_AS(mean_curvature_fd(m, degenerate, 0.0, 0.0, 1e-3), DegenerateMetric);
}
