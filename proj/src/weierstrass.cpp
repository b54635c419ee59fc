#include "e2surf/weierstrass.hpp"

#include <array>
#include <cmath>

namespace e2surf {

namespace {

constexpr Complex kI{0.0, 1.0};

// l1^2 (q+qbar)^2 - l2^2 (q-qbar)^2, which is real and equals
// 4 [l1^2 Re(q)^2 + l2^2 Im(q)^2].
double potential_denominator(const MetricParams& m, Complex q) {
    const double x = q.real(), y = q.imag();
    return 4.0 * (m.lambda1() * m.lambda1() * x * x + m.lambda2() * m.lambda2() * y * y);
}

void require_potential(const MetricParams& m, Complex g) {
    const double scale = m.lambda1() * m.lambda1() * (1.0 + std::norm(g)) * (1.0 + std::norm(g));
    if (potential_denominator(m, g) <= 1e-14 * scale) {
        throw PotentialVanishes("potential vanishes at g = (" + std::to_string(g.real()) +
                                ", " + std::to_string(g.imag()) + ")");
    }
}

}  // namespace

Complex h_potential(const MetricParams& m, double H, Complex q) {
    const double q2 = std::norm(q);
    const Complex qsq = q * q;
    const double abs_1p = std::norm(1.0 + qsq);
    const double abs_1m = std::norm(1.0 - qsq);
    return H * (1.0 + q2) * (1.0 + q2) -
           0.5 * kI * (m.mu2() * abs_1p + m.mu1() * abs_1m + 4.0 * m.mu3() * q2);
}

Complex zero_potential(const MetricParams& m, Complex q) {
    return -0.5 * kI * potential_denominator(m, q);
}

Complex pde_residual(const MetricParams& m, const GaussMapValue& gv, Complex gzz_bar) {
    require_potential(m, gv.g);
    const double l1sq = m.lambda1() * m.lambda1();
    const double l2sq = m.lambda2() * m.lambda2();
    const Complex num = 2.0 * (l1sq * (gv.g + std::conj(gv.g)) - l2sq * (gv.g - std::conj(gv.g)));
    return gzz_bar - num * gv.gz * gv.gzbar / potential_denominator(m, gv.g);
}

HopfValue hopf(const MetricParams& m, const GaussMapValue& gv) {
    require_potential(m, gv.g);
    return {gv.gz * gv.gbar_z / potential_denominator(m, gv.g)};
}

ImmersionDifferential eta_and_A(const MetricParams& m, const GaussMapValue& gv) {
    if (!std::isfinite(gv.g.real()) || !std::isfinite(gv.g.imag()) || gv.g == Complex{0.0, 0.0}) {
        throw GaussMapAtPole("eta_and_A: Gauss map at 0 or non-finite");
    }
    require_potential(m, gv.g);
    const Complex gb = std::conj(gv.g);
    const Complex eta = 4.0 * gb * gv.gz / zero_potential(m, gv.g);
    return {0.25 * eta * (gb - 1.0 / gb),
            0.25 * kI * eta * (gb + 1.0 / gb),
            0.5 * eta,
            eta};
}

double induced_metric_factor(const MetricParams& m, const GaussMapValue& gv) {
    require_potential(m, gv.g);
    const double onep = 1.0 + std::norm(gv.g);
    const double R_abs = 0.5 * potential_denominator(m, gv.g);
    return 4.0 * onep * onep * std::norm(gv.gz) / (R_abs * R_abs);
}

SphereNormal sphere_normal(Complex g) {
    const double n2 = std::norm(g);
    const double den = 1.0 + n2;
    return {2.0 * g.real() / den, 2.0 * g.imag() / den, (1.0 - n2) / den};
}

namespace {

using Frame3 = std::array<double, 3>;

Frame3 to_frame(const MetricParams& m, const GroupElement& base, const CoordVector& v) {
    const FrameVector a = coord_to_frame(m, base, v);
    return {a.a1, a.a2, a.a3};
}

// 4th-order central difference of the immersion along one parameter.
CoordVector immersion_derivative(const ImmersionSampler& X, double u, double v,
                                 bool along_u, double h) {
    auto at = [&](double s) {
        return along_u ? X(u + s, v) : X(u, v + s);
    };
    const GroupElement p2 = at(2.0 * h), p1 = at(h), m1 = at(-h), m2 = at(-2.0 * h);
    return {(-p2.x + 8.0 * p1.x - 8.0 * m1.x + m2.x) / (12.0 * h),
            (-p2.y + 8.0 * p1.y - 8.0 * m1.y + m2.y) / (12.0 * h),
            (-p2.z + 8.0 * p1.z - 8.0 * m1.z + m2.z) / (12.0 * h)};
}

// Frame components of X_u or X_v at (u, v), taken at that point's own base.
Frame3 tangent_frame_components(const MetricParams& m, const ImmersionSampler& X,
                                double u, double v, bool along_u, double h) {
    const CoordVector d = immersion_derivative(X, u, v, along_u, h);
    return to_frame(m, X(u, v), d);
}

Frame3 connection_quadratic(const MetricParams& m, const Frame3& a) {
    // sum_{i,j} a_i a_j nabla_{E_i} E_j from the frame connection table
    Frame3 out{0.0, 0.0, 0.0};
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            const FrameVector gij = connection(m, i, j);
            const double w = a[i - 1] * a[j - 1];
            out[0] += w * gij.a1;
            out[1] += w * gij.a2;
            out[2] += w * gij.a3;
        }
    }
    return out;
}

}  // namespace

double mean_curvature_fd(const MetricParams& m, const ImmersionSampler& sampler,
                         double u, double v, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("mean_curvature_fd: h must be positive");

    auto frame_u = [&](double uu, double vv) {
        return tangent_frame_components(m, sampler, uu, vv, true, h);
    };
    auto frame_v = [&](double uu, double vv) {
        return tangent_frame_components(m, sampler, uu, vv, false, h);
    };

    auto fd4 = [&](const std::function<Frame3(double)>& g) {
        const Frame3 p2 = g(2.0 * h), p1 = g(h), m1 = g(-h), m2 = g(-2.0 * h);
        Frame3 out;
        for (int c = 0; c < 3; ++c) {
            out[c] = (-p2[c] + 8.0 * p1[c] - 8.0 * m1[c] + m2[c]) / (12.0 * h);
        }
        return out;
    };

    const Frame3 a = frame_u(u, v);
    const Frame3 b = frame_v(u, v);
    const Frame3 da_du = fd4([&](double s) { return frame_u(u + s, v); });
    const Frame3 db_dv = fd4([&](double s) { return frame_v(u, v + s); });

    const Frame3 qa = connection_quadratic(m, a);
    const Frame3 qb = connection_quadratic(m, b);
    const Frame3 cov_uu{da_du[0] + qa[0], da_du[1] + qa[1], da_du[2] + qa[2]};
    const Frame3 cov_vv{db_dv[0] + qb[0], db_dv[1] + qb[1], db_dv[2] + qb[2]};

    // frame is orthonormal and positively oriented: metric normal = cross product
    Frame3 n{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    const double nn = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    const double E = a[0] * a[0] + a[1] * a[1] + a[2] * a[2];
    if (E < 1e-12 || nn < 1e-18) {
        throw DegenerateMetric("mean_curvature_fd: degenerate tangent plane");
    }
    for (double& c : n) c /= nn;

    const double huu = cov_uu[0] * n[0] + cov_uu[1] * n[1] + cov_uu[2] * n[2];
    const double hvv = cov_vv[0] * n[0] + cov_vv[1] * n[1] + cov_vv[2] * n[2];
    return (huu + hvv) / (2.0 * E);
}

}  // namespace e2surf
