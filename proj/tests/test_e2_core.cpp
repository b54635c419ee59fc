#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "e2surf/e2_core.hpp"

using namespace e2surf;

namespace {

double dist(const GroupElement& a, const GroupElement& b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

GroupElement random_element(std::mt19937& rng) {
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    return {d(rng), d(rng), d(rng)};
}

}  // namespace

TEST_CASE("group law: identity, explicit product, inverse axiom") {
    const GroupElement e{0, 0, 0};
    CHECK(dist(multiply(e, {3, -1, 2}), {3, -1, 2}) == 0.0);

    const GroupElement r = multiply({1, 0, M_PI / 2}, {1, 0, 0});
    CHECK(r.x == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.y == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.z == doctest::Approx(M_PI / 2).epsilon(1e-15));

    const GroupElement p{2, 5, 1.3};
    CHECK(dist(multiply(p, inverse(p)), e) < 1e-15);
    CHECK(dist(multiply(inverse(p), p), e) < 1e-15);
}

TEST_CASE("inverse: closed form") {
    CHECK(dist(inverse({0, 0, 0}), {0, 0, 0}) == 0.0);
    CHECK(dist(inverse({1, 0, 0}), {-1, 0, 0}) < 1e-16);
    CHECK(dist(inverse({0, 0, 2.5}), {0, 0, -2.5}) < 1e-16);
}

TEST_CASE("group law: associativity on random triples") {
    std::mt19937 rng(42);
    for (int i = 0; i < 100; ++i) {
        const GroupElement p = random_element(rng), q = random_element(rng),
                           r = random_element(rng);
        CHECK(dist(multiply(multiply(p, q), r), multiply(p, multiply(q, r))) < 1e-12);
    }
}

TEST_CASE("metric params: normalization and rejection") {
    CHECK_THROWS_AS(MetricParams(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(MetricParams(1.0, -2.0), std::invalid_argument);
    const MetricParams m(1.0, 2.0);  // order normalized
    CHECK(m.lambda1() == 2.0);
    CHECK(m.lambda2() == 1.0);
    CHECK(m.lambda3() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(m.mu1() == doctest::Approx(-1.5));
    CHECK(m.mu2() == doctest::Approx(1.5));
    CHECK(m.mu3() == doctest::Approx(2.5));
    CHECK(m.mu3() >= m.lambda2() * m.lambda2());
}

TEST_CASE("frame: explicit values and orthonormality") {
    const MetricParams flat(1.0, 1.0);
    const auto E0 = frame_at(flat, {0, 0, 0});
    CHECK(E0[0].vx == doctest::Approx(1.0));
    CHECK(E0[1].vy == doctest::Approx(1.0));
    CHECK(E0[2].vz == doctest::Approx(1.0));

    const MetricParams m21(2.0, 1.0);
    const auto E1 = frame_at(m21, {0, 0, M_PI / 2});
    CHECK(std::abs(E1[0].vx) < 1e-16);
    CHECK(E1[0].vy == doctest::Approx(0.5));

    const MetricParams m31(3.0, 1.0);
    const GroupElement p{1, 1, 0.7};
    const auto E = frame_at(m31, p);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double expected = (i == j) ? 1.0 : 0.0;
            CHECK(metric_inner(m31, p, E[i], E[j]) == doctest::Approx(expected).epsilon(1e-14));
        }
    }
}

TEST_CASE("metric: explicit entries and the flat case") {
    const MetricParams m(2.0, 1.0);
    const CoordVector dz{0, 0, 1};
    CHECK(metric_inner(m, {0.3, -1.0, 0.9}, dz, dz) == doctest::Approx(0.25).epsilon(1e-15));

    const CoordVector dx{1, 0, 0};
    CHECK(metric_inner(m, {0, 0, 0}, dx, dx) == doctest::Approx(4.0).epsilon(1e-15));

    const MetricParams flat(1.0, 1.0);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int i = 0; i < 20; ++i) {
        const GroupElement p{d(rng), d(rng), d(rng)};
        const CoordVector u{d(rng), d(rng), d(rng)}, v{d(rng), d(rng), d(rng)};
        const double dot = u.vx * v.vx + u.vy * v.vy + u.vz * v.vz;
        CHECK(metric_inner(flat, p, u, v) == doctest::Approx(dot).epsilon(1e-13));
    }
}

TEST_CASE("metric: left-invariance under translation pushforward") {
    const MetricParams m(2.5, 1.0);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int i = 0; i < 30; ++i) {
        const GroupElement p = random_element(rng), q = random_element(rng);
        const CoordVector u{d(rng), d(rng), d(rng)}, v{d(rng), d(rng), d(rng)};
        const auto jac = left_translation_jacobian(p);
        const double before = metric_inner(m, q, u, v);
        const double after =
            metric_inner(m, multiply(p, q), push_forward(jac, u), push_forward(jac, v));
        CHECK(after == doctest::Approx(before).epsilon(1e-10));
    }
}

TEST_CASE("connection: table entries and the flat degeneration") {
    const MetricParams m(2.0, 1.0);
    const FrameVector n11 = connection(m, 1, 1);
    CHECK(n11.norm() == 0.0);
    const FrameVector n32 = connection(m, 3, 2);
    CHECK(n32.a1 == doctest::Approx(-m.mu3()));
    CHECK(n32.a2 == 0.0);
    CHECK(n32.a3 == 0.0);
    const FrameVector n12 = connection(m, 1, 2);
    CHECK(n12.a3 == doctest::Approx(m.mu1()));

    const MetricParams flat(1.0, 1.0);
    CHECK(connection(flat, 1, 2).norm() == 0.0);
    CHECK(connection(flat, 2, 1).norm() == 0.0);
}

TEST_CASE("connection: torsion-free against the bracket table, metric-compatible") {
    const MetricParams m(1.7, 0.6);
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            const FrameVector gij = connection(m, i, j);
            const FrameVector gji = connection(m, j, i);
            const FrameVector br = bracket(m, i, j);
            CHECK(gij.a1 - gji.a1 == doctest::Approx(br.a1));
            CHECK(gij.a2 - gji.a2 == doctest::Approx(br.a2));
            CHECK(gij.a3 - gji.a3 == doctest::Approx(br.a3));
            for (int k = 1; k <= 3; ++k) {
                // <nabla_{Ei} Ej, Ek> + <Ej, nabla_{Ei} Ek> = 0
                const FrameVector gik = connection(m, i, k);
                const double a = (j == 1 ? gik.a1 : j == 2 ? gik.a2 : gik.a3);
                const double b = (k == 1 ? gij.a1 : k == 2 ? gij.a2 : gij.a3);
                CHECK(a + b == doctest::Approx(0.0));
            }
        }
    }
}

TEST_CASE("bracket: finite-difference Lie bracket of the coordinate frame fields") {
    const MetricParams m(2.0, 1.0);
    std::mt19937 rng(3);
    const double h = 1e-5;
    for (int trial = 0; trial < 5; ++trial) {
        const GroupElement p = random_element(rng);
        for (int i = 1; i <= 3; ++i) {
            for (int j = 1; j <= 3; ++j) {
                auto field = [&](int idx, const GroupElement& q) {
                    return frame_at(m, q)[idx - 1];
                };
                auto shift = [&](const GroupElement& q, const CoordVector& dir, double s) {
                    return GroupElement{q.x + s * dir.vx, q.y + s * dir.vy, q.z + s * dir.vz};
                };
                const CoordVector Ei = field(i, p), Ej = field(j, p);
                // directional derivatives of the coordinate component fields
                const CoordVector ejp = field(j, shift(p, Ei, h)), ejm = field(j, shift(p, Ei, -h));
                const CoordVector eip = field(i, shift(p, Ej, h)), eim = field(i, shift(p, Ej, -h));
                const CoordVector lie{
                    (ejp.vx - ejm.vx - eip.vx + eim.vx) / (2 * h),
                    (ejp.vy - ejm.vy - eip.vy + eim.vy) / (2 * h),
                    (ejp.vz - ejm.vz - eip.vz + eim.vz) / (2 * h)};
                const FrameVector got = coord_to_frame(m, p, lie);
                const FrameVector want = bracket(m, i, j);
                CHECK(std::abs(got.a1 - want.a1) < 1e-6);
                CHECK(std::abs(got.a2 - want.a2) < 1e-6);
                CHECK(std::abs(got.a3 - want.a3) < 1e-6);
            }
        }
    }
}

TEST_CASE("unimodular map: L(u x v) = [u, v] with eigenvalues (l1^2, l2^2, 0)") {
    const MetricParams m(2.0, 1.5);
    auto L = [&](const FrameVector& a) {
        return FrameVector{m.lambda1() * m.lambda1() * a.a1,
                           m.lambda2() * m.lambda2() * a.a2, 0.0};
    };
    const FrameVector e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
    auto cross = [](const FrameVector& a, const FrameVector& b) {
        return FrameVector{a.a2 * b.a3 - a.a3 * b.a2, a.a3 * b.a1 - a.a1 * b.a3,
                           a.a1 * b.a2 - a.a2 * b.a1};
    };
    auto check_pair = [&](const FrameVector& u, const FrameVector& v, int i, int j) {
        const FrameVector lhs = L(cross(u, v));
        const FrameVector rhs = bracket(m, i, j);
        CHECK(lhs.a1 == doctest::Approx(rhs.a1));
        CHECK(lhs.a2 == doctest::Approx(rhs.a2));
        CHECK(lhs.a3 == doctest::Approx(rhs.a3));
    };
    check_pair(e1, e2, 1, 2);
    check_pair(e2, e3, 2, 3);
    check_pair(e3, e1, 3, 1);
}

TEST_CASE("curvature invariants: flat, explicit values, signature") {
    const auto flat = curvature_invariants(MetricParams(1.0, 1.0));
    CHECK(flat.ric1 == 0.0);
    CHECK(flat.ric2 == 0.0);
    CHECK(flat.ric3 == 0.0);
    CHECK(flat.scalar == 0.0);

    const auto c = curvature_invariants(MetricParams(2.0, 1.0));
    CHECK(c.ric1 == doctest::Approx(7.5));
    CHECK(c.ric2 == doctest::Approx(-7.5));
    CHECK(c.ric3 == doctest::Approx(-6.75));
    CHECK(c.scalar == doctest::Approx(7.5));

    const auto d = curvature_invariants(MetricParams(1.9, 0.4));
    CHECK(d.ric1 > 0.0);
    CHECK(d.ric2 < 0.0);
    CHECK(d.ric3 < 0.0);
    CHECK(d.scalar > 0.0);
}
