#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "e2surf/catenoid.hpp"
#include "e2surf/numerics.hpp"
#include "e2surf/weierstrass.hpp"

using namespace e2surf;

namespace {

double dist(const GroupElement& a, const GroupElement& b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

// closed-form flat-case period functional and its bisection root
double flat_H(double c, double theta) {
    const double D2 = std::sin(theta) * std::sin(theta) / (c * c);
    const double s = std::sqrt(c * c + 2.0 * std::cos(theta) - D2);
    return (D2 + c * c - c * s) * M_PI / s;
}

double flat_theta_tilde(double c) {
    double lo = 1e-12, hi = M_PI / 2 - 1e-12;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (flat_H(c, mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("admissible range: theta_plus branches and rejection") {
    const MetricParams unit(1.0, 1.0);
    CHECK(omega_check(unit, 2.0, 0.0).theta_plus == doctest::Approx(M_PI));
    CHECK(omega_check(unit, 1.0, 0.0).theta_plus == doctest::Approx(M_PI / 2));
    CHECK_NOTHROW(omega_check(unit, 0.3, 0.0));
    CHECK_THROWS_AS(omega_check(unit, 1.0, M_PI / 2), OutsideOmega);
    CHECK_THROWS_AS(omega_check(unit, 1.0, -2.0), OutsideOmega);
    CHECK_THROWS_AS(omega_check(unit, -1.0, 0.0), std::invalid_argument);

    const MetricParams m(2.0, 1.0);
    CHECK(omega_check(m, 2.0, 0.0).theta_plus == doctest::Approx(M_PI / 2));
    const OmegaPoint op = omega_check(m, 2.0, 0.5);
    CHECK(op.D == doctest::Approx(std::sin(0.5) / 2.0));
}

TEST_CASE("profile: flat closed forms") {
    const MetricParams m(1.0, 1.0);
    const OmegaPoint op = omega_check(m, 2.0, 0.5);
    const CatenoidProfile p(m, op);
    const double speed = std::sqrt(4.0 + 2.0 * std::cos(0.5) - op.D * op.D);
    CHECK(std::abs(p.U() - M_PI / speed) < 1e-10);
    for (double u : {-1.1, 0.4, 0.9}) {
        CHECK(std::abs(p.phi(u) - speed * u) < 1e-11);
        CHECK(std::abs(p.f(u) - op.D * u) < 1e-11);
        CHECK(std::abs(p.G(u) - (op.c - speed) * u) < 1e-11);
    }
}

TEST_CASE("profile: half-turn midpoint, oddness, additive shifts") {
    const MetricParams m(2.0, 1.0);
    const OmegaPoint op = omega_check(m, 2.0, 0.5);
    const CatenoidProfile p(m, op);
    const double U = p.U();
    CHECK(std::abs(p.phi(0.5 * U) - 0.5 * M_PI) < 1e-10);
    CHECK(std::abs(p.phi(U) - M_PI) < 1e-10);
    for (int i = 0; i <= 40; ++i) {
        const double u = -0.95 * U + 1.9 * U * i / 40.0;
        CHECK(std::abs(p.phi(-u) + p.phi(u)) < 1e-10);
        CHECK(std::abs(p.f(-u) + p.f(u)) < 1e-10);
        CHECK(std::abs(p.G(-u) + p.G(u)) < 1e-10);
        CHECK(std::abs(p.phi(u + U) - p.phi(u) - M_PI) < 1e-10);
        CHECK(std::abs(p.f(u + U) - p.f(u) - p.fU()) < 1e-10);
        CHECK(std::abs(p.G(u + U) - p.G(u) - p.GU()) < 1e-10);
    }
    CHECK(std::abs(p.f(3.0 * U) - 3.0 * p.fU()) < 1e-9);
    CHECK(std::abs(p.f(1.5 * U) - 1.5 * p.fU()) < 1e-9);
}

TEST_CASE("profile: speed bounds and second-derivative identities") {
    const MetricParams m(2.0, 1.0);
    const OmegaPoint op = omega_check(m, 1.5, 0.6);
    const CatenoidProfile p(m, op);
    for (double u : {-1.0, -0.2, 0.5, 1.3}) {
        const double pp = p.phi_prime(u);
        CHECK(pp >= p.phi_prime_min() - 1e-12);
        CHECK(pp <= p.phi_prime_max() + 1e-12);
        const double fd_f = fd_derivative([&](double t) { return p.f_prime(t); }, u, 1, 1e-4);
        CHECK(std::abs(fd_f - p.f_second(u)) < 1e-8);
        const double fd_p = fd_derivative([&](double t) { return p.phi_prime(t); }, u, 1, 1e-4);
        CHECK(std::abs(fd_p - p.phi_second(u)) < 1e-8);
        // the displayed second-derivative forms
        const double L = m.lambda1() * m.lambda1() - m.lambda2() * m.lambda2();
        const double B = p.B(u), fp = p.f_prime(u);
        const double want_f = -2.0 * L * fp * pp * std::sin(p.phi(u)) * std::cos(p.phi(u)) / B;
        CHECK(p.f_second(u) == doctest::Approx(want_f).epsilon(1e-12));
        const double want_p = L * (fp * fp - pp * pp + op.c * op.c) * std::sin(p.phi(u)) *
                              std::cos(p.phi(u)) / B;
        CHECK(p.phi_second(u) == doctest::Approx(want_p).epsilon(1e-12));
    }
}

TEST_CASE("period functional: sign at zero angle, flat closed form, dual routes") {
    const MetricParams m(2.0, 1.0);
    CHECK(H_value(omega_check(m, 2.0, 0.0), m) < 0.0);

    const MetricParams flat(1.0, 1.0);
    const OmegaPoint op = omega_check(flat, 2.0, M_PI / 2);
    const double HU = H_value(op, flat);
    const double U = M_PI / std::sqrt(4.0 - 0.25);
    CHECK(std::abs(HU - U * (4.25 - 2.0 * std::sqrt(3.75))) < 1e-10);
    CHECK(HU > 0.0);

    for (auto [c, th] : {std::pair{1.5, 0.4}, {2.0, 0.7}, {5.0, 1.2}}) {
        const OmegaPoint q = omega_check(m, c, th);
        CHECK(std::abs(H_value(q, m) - H_value_integral(q, m)) < 1e-8);
    }
}

TEST_CASE("period root: flat oracle, defining property, large-c limit") {
    const MetricParams flat(1.0, 1.0);
    const double t2 = solve_theta_tilde(flat, 2.0, 1e-12);
    CHECK(std::abs(t2 - flat_theta_tilde(2.0)) < 1e-10);
    CHECK(std::abs(t2 - 1.2257630824021035) < 1e-9);

    const MetricParams m(2.0, 1.0);
    for (double c : {1.5, 3.0, 10.0}) {
        const double tt = solve_theta_tilde(m, c, 1e-12);
        const OmegaPoint op = omega_check(m, c, tt);
        CHECK(std::abs(H_value(op, m)) < 1e-12);
        CHECK(tt > 0.0);
        CHECK(tt < std::min(M_PI / 2, op.theta_plus));
    }

    const double t10 = solve_theta_tilde(flat, 10.0, 1e-12);
    const double t100 = solve_theta_tilde(flat, 100.0, 1e-12);
    CHECK(t100 > t10);
    CHECK(t10 > t2);
    CHECK(std::abs(t100 - M_PI / 2) < 0.05);
}

TEST_CASE("immersion: base point, lattice periodicity, symmetries") {
    const MetricParams m(2.0, 1.0);
    const double tt = solve_theta_tilde(m, 2.0, 1e-13);
    const CatenoidProfile p(m, omega_check(m, 2.0, tt));
    CHECK(std::abs(immerse(p, 0.0, 0.0).z) < 1e-14);

    const PeriodVector Z = period_vector(p);
    CHECK(Z.Z.imag() < 0.0);
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> du(-1.2, 1.2), dv(-1.0, 1.0);
    for (int i = 0; i < 30; ++i) {
        const double u = du(rng), v = dv(rng);
        const GroupElement a = immerse(p, u, v);
        CHECK(dist(immerse(p, u + Z.Z.real(), v + Z.Z.imag()), a) < 1e-6);
        const GroupElement half = immerse(p, u + 0.5 * Z.Z.real(), v + 0.5 * Z.Z.imag());
        CHECK(std::abs(half.x + a.x) < 1e-6);
        CHECK(std::abs(half.y + a.y) < 1e-6);
        CHECK(std::abs(half.z - a.z) < 1e-6);
        const GroupElement neg = immerse(p, -u, -v);
        CHECK(std::abs(neg.x - a.x) < 1e-6);
        CHECK(std::abs(neg.y + a.y) < 1e-6);
        CHECK(std::abs(neg.z + a.z) < 1e-6);
    }
}

TEST_CASE("period vector: flat form, obstruction off the root, x3 shift identity") {
    const MetricParams flat(1.0, 1.0);
    const double tt = flat_theta_tilde(2.0);
    const CatenoidProfile pf(flat, omega_check(flat, 2.0, tt));
    const PeriodVector Z = period_vector(pf, 1e-8);
    // flat: f(U) = D U, so Z = 2U - 2 i D U / c
    CHECK(Z.Z.real() == doctest::Approx(2.0 * pf.U()).epsilon(1e-13));
    CHECK(Z.Z.imag() == doctest::Approx(-2.0 * pf.omega().D * pf.U() / 2.0).epsilon(1e-9));

    const MetricParams m(2.0, 1.0);
    const CatenoidProfile off(m, omega_check(m, 2.0, 0.5));
    CHECK_THROWS_AS(period_vector(off, 1e-8), PeriodObstruction);
    // the height shift along Z equals (2 l1 l2 / c) H even off the root
    const double Zr = 2.0 * off.U(), Zi = -2.0 * off.fU() / 2.0;
    const double shift = immerse(off, 0.3 + Zr, -0.4 + Zi).z - immerse(off, 0.3, -0.4).z;
    CHECK(std::abs(shift - 2.0 * 2.0 * 1.0 * off.H() / 2.0) < 1e-10);
    CHECK(std::abs(shift) > 1e-3);
}

TEST_CASE("gauss map: equation residual and constant Hopf coefficient") {
    // window sized to keep |g| = exp(f + c v) in the numerically sane range
    for (auto [l1, c, th] : {std::tuple{1.0, 2.0, 0.8}, {2.0, 2.0, 0.5}, {5.0, 20.0, 1.0}}) {
        const MetricParams m(l1, 1.0);
        const CatenoidProfile p(m, omega_check(m, c, th));
        const Complex target = std::exp(Complex{0.0, -th}) / 8.0;
        std::mt19937 rng(47);
        std::uniform_real_distribution<double> du(-0.5, 0.5), dv(-0.25, 0.25);
        for (int i = 0; i < 40; ++i) {
            const GaussMapData d = gauss_data(p, du(rng), dv(rng));
            CHECK(std::abs(pde_residual(m, d.gv, d.gzz_bar)) < 1e-10);
            CHECK(std::abs(hopf(m, d.gv).Q - target) < 1e-10);
        }
    }
}

TEST_CASE("cross sections: closedness, slope law, antipodal symmetry, convexity") {
    const MetricParams m(2.0, 1.0);
    const double tt = solve_theta_tilde(m, 2.0, 1e-13);
    const CatenoidProfile p(m, omega_check(m, 2.0, tt));

    const CrossSection cs = cross_section(p, 0.7, 257);
    CHECK(dist(cs.samples.front().gamma, cs.samples.back().gamma) < 1e-8);
    for (const auto& s : cs.samples) {
        CHECK(std::abs(s.gamma.z - m.lambda1() * m.lambda2() * 0.7) < 1e-10);
    }

    // slope of the rotated curve: dxt1/dxt2 = -(l2/l1) tan(phi)
    for (const auto& s : cs.samples) {
        const double phi_red = s.phi - M_PI * std::floor(s.phi / M_PI + 0.5);
        if (std::abs(std::cos(phi_red)) < 0.2) continue;
        const double slope = s.xt1_prime / s.xt2_prime;
        CHECK(std::abs(slope - (-(m.lambda2() / m.lambda1()) * std::tan(phi_red))) < 1e-6);
    }

    // antipodal half-period symmetry of the rotated curve
    const int n = static_cast<int>(cs.samples.size());
    for (int i = 0; i + (n - 1) / 2 < n; ++i) {
        const auto& a = cs.samples[i];
        const auto& b = cs.samples[i + (n - 1) / 2];
        CHECK(std::abs(a.xt1 + b.xt1) < 1e-8);
        CHECK(std::abs(a.xt2 + b.xt2) < 1e-8);
    }

    CHECK(convexity_check(cs).pass);
    const CatenoidProfile pf(MetricParams(1.0, 1.0),
                             omega_check(MetricParams(1.0, 1.0), 2.0, flat_theta_tilde(2.0)));
    CHECK(convexity_check(cross_section(pf, 0.3, 301)).pass);
    CHECK_THROWS_AS(convexity_check(cross_section(p, 0.0, 2)), InsufficientSamples);
}

TEST_CASE("curvature: flat reduction and the intrinsic finite-difference oracle") {
    const MetricParams flat(1.0, 1.0);
    const OmegaPoint opf = omega_check(flat, 2.0, 0.5);
    const CatenoidProfile pf(flat, opf);
    for (double u : {-0.6, 0.8}) {
        for (double v : {-0.2, 0.5}) {
            const double A = opf.D * u + 2.0 * v;
            const double lap = laplacian_log_rho(pf, u, v);
            const double want = (4.0 + opf.D * opf.D) / (std::cosh(A) * std::cosh(A));
            CHECK(lap == doctest::Approx(want).epsilon(1e-10));
            const auto [rho2, kg] = curvature(pf, u, v);
            const double pp = pf.phi_prime(u);
            const double E = opf.D * opf.D + (pp - 2.0) * (pp - 2.0);
            const double wantk = -(4.0 + opf.D * opf.D) /
                                 (E * std::pow(std::cosh(A), 4));
            CHECK(kg == doctest::Approx(wantk).epsilon(1e-10));
        }
    }

    const MetricParams m(2.0, 1.0);
    const CatenoidProfile p(m, omega_check(m, 2.0, 0.5));
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> du(-1.0, 1.0), dv(-0.8, 0.8);
    for (int i = 0; i < 20; ++i) {
        const double u = du(rng), v = dv(rng);
        auto log_rho = [&](double uu, double vv) {
            return 0.5 * std::log(curvature(p, uu, vv).first);
        };
        const double lap =
            fd_derivative([&](double t) { return log_rho(t, v); }, u, 2, 1e-3) +
            fd_derivative([&](double t) { return log_rho(u, t); }, v, 2, 1e-3);
        const auto [rho2, kg] = curvature(p, u, v);
        CHECK(std::abs(kg - (-lap / rho2)) < 1e-4);
        CHECK(std::abs(lap - laplacian_log_rho(p, u, v)) < 1e-6);
    }
}

TEST_CASE("total curvature: flat limit 4 pi and anisotropic divergence") {
    const MetricParams flat(1.0, 1.0);
    const double tt = flat_theta_tilde(2.0);
    const CatenoidProfile pf(flat, omega_check(flat, 2.0, tt));
    const TotalCurvature2 t = total_abs_curvature(pf, 20.0);
    CHECK_FALSE(t.diverged);
    CHECK(std::abs(t.value - 4.0 * M_PI) < 1e-3);
    CHECK(total_abs_curvature(pf, 0.0).value == 0.0);

    const MetricParams m(2.0, 1.0);
    const CatenoidProfile pa(m, omega_check(m, 2.0, solve_theta_tilde(m, 2.0, 1e-12)));
    const double v20 = total_abs_curvature(pa, 20.0).value;
    const double v40 = total_abs_curvature(pa, 40.0).value;
    CHECK(v40 > 1.1 * v20);
    CHECK(total_abs_curvature(pa, 20.0).diverged);
}

TEST_CASE("limit study: pointwise targets and decreasing deviation") {
    const MetricParams m(2.0, 1.0);
    const std::vector<double> grid{-1.0, -0.5, 0.0, 0.5, 1.0};
    const auto rows = limit_study(m, {10.0, 50.0}, grid, grid);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1].deviation < rows[0].deviation);

    // the limiting plane parametrization itself
    const double tt = solve_theta_tilde(m, 50.0, 1e-12);
    const CatenoidProfile p(m, omega_check(m, 50.0, tt));
    const GroupElement at0 = immerse(p, 0.0, 2.0 * std::log(50.0) / 50.0);
    CHECK(std::abs(at0.x + 1.0 / (2.0 * m.lambda1())) < 0.01);
    CHECK(std::abs(at0.y) < 0.01);
    const GroupElement at90 = immerse(p, M_PI / 2 / 50.0, 2.0 * std::log(50.0) / 50.0);
    CHECK(std::abs(at90.y + 1.0 / (2.0 * m.lambda2())) < 0.01);
}

TEST_CASE("intersection shrink study: monotone decay and the explicit bound") {
    const MetricParams m(2.0, 1.0);
    const auto rows = intersection_shrink_study(m, {2.0, 5.0, 10.0, 50.0});
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].max_radius < rows[i - 1].max_radius);
    }
    CHECK(rows.back().max_radius < 0.001);
    for (const auto& r : rows) CHECK(r.max_radius > 0.0);

    // explicit coordinate bounds with the uniform A-bound, valid for c > l1^2
    const double l1 = m.lambda1(), l2 = m.lambda2();
    for (const auto& r : rows) {
        if (!(r.c > l1 * l1)) continue;
        const double c = r.c;
        const double root = std::sqrt(c * c - std::pow(l1, 4));
        const double a_bound = l1 * l1 * M_PI / (c * root) +
                               3.0 * M_PI * c / (std::sin(r.theta_tilde) * root);
        const double ch = std::cosh(a_bound), sh = std::sinh(a_bound);
        const double q = l1 * l1 / (c * c) + 2.0;
        const double bx1 = ((l1 + std::pow(l1, 3) / (c * c) * q) * ch +
                            (l1 * q + std::pow(l1, 3) / (c * c)) * sh) / (l2 * l2 * c * c);
        const double bx2 = ((l1 * l1 / l2 + l1 * l1 * l2 / (c * c) * q) * ch +
                            (l1 * l1 / l2 * q + l1 * l1 * l2 / (c * c)) * sh) / (l2 * l2 * c * c);
        CHECK(r.max_radius <= std::hypot(bx1, bx2));
    }
}

TEST_CASE("grid sampling: finiteness and thread consistency") {
    const MetricParams m(2.0, 1.0);
    const CatenoidProfile p(m, omega_check(m, 2.0, 0.5));
    const SurfaceGrid g1 = sample_grid(p, -1.0, 1.0, -1.0, 1.0, 7, 11, 1);
    const SurfaceGrid g3 = sample_grid(p, -1.0, 1.0, -1.0, 1.0, 7, 11, 3);
    REQUIRE(g1.samples.size() == 77u);
    for (std::size_t i = 0; i < g1.samples.size(); ++i) {
        CHECK(std::isfinite(g1.samples[i].pos.x));
        CHECK(g1.samples[i].pos.y == g3.samples[i].pos.y);
    }
}
