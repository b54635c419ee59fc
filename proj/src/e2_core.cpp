#include "e2surf/e2_core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace e2surf {

MetricParams::MetricParams(double l1, double l2) {
    if (!(l1 > 0.0) || !(l2 > 0.0)) {
        throw std::invalid_argument("MetricParams: lambda1 and lambda2 must be positive");
    }
    if (!std::isfinite(l1) || !std::isfinite(l2)) {
        throw std::invalid_argument("MetricParams: lambda values must be finite");
    }
    lambda1_ = std::max(l1, l2);
    lambda2_ = std::min(l1, l2);
    lambda3_ = 1.0 / (lambda1_ * lambda2_);
    mu1_ = 0.5 * (lambda2_ * lambda2_ - lambda1_ * lambda1_);
    mu2_ = -mu1_;
    mu3_ = 0.5 * (lambda1_ * lambda1_ + lambda2_ * lambda2_);
}

GroupElement multiply(const GroupElement& p, const GroupElement& q) {
    const double c = std::cos(p.z), s = std::sin(p.z);
    return {p.x + q.x * c - q.y * s,
            p.y + q.x * s + q.y * c,
            p.z + q.z};
}

GroupElement inverse(const GroupElement& p) {
    const double c = std::cos(p.z), s = std::sin(p.z);
    return {-p.x * c - p.y * s,
             p.x * s - p.y * c,
            -p.z};
}

std::array<CoordVector, 3> frame_at(const MetricParams& m, const GroupElement& p) {
    const double c = std::cos(p.z), s = std::sin(p.z);
    const double l1 = m.lambda1(), l2 = m.lambda2();
    return {CoordVector{c / l1, s / l1, 0.0},
            CoordVector{-s / l2, c / l2, 0.0},
            CoordVector{0.0, 0.0, l1 * l2}};
}

double metric_inner(const MetricParams& m, const GroupElement& p,
                    const CoordVector& u, const CoordVector& v) {
    const double c = std::cos(p.z), s = std::sin(p.z);
    const double l1 = m.lambda1(), l2 = m.lambda2();
    const double u1 = c * u.vx + s * u.vy, v1 = c * v.vx + s * v.vy;
    const double u2 = -s * u.vx + c * u.vy, v2 = -s * v.vx + c * v.vy;
    return l1 * l1 * u1 * v1 + l2 * l2 * u2 * v2 + u.vz * v.vz / (l1 * l1 * l2 * l2);
}

FrameVector connection(const MetricParams& m, int i, int j) {
    if (i < 1 || i > 3 || j < 1 || j > 3) {
        throw std::invalid_argument("connection: frame indices must lie in {1,2,3}");
    }
    const double mu1 = m.mu1(), mu2 = m.mu2(), mu3 = m.mu3();
    switch (i * 10 + j) {
        case 12: return {0.0, 0.0, mu1};
        case 21: return {0.0, 0.0, mu1};
        case 13: return {0.0, mu2, 0.0};
        case 23: return {mu2, 0.0, 0.0};
        case 31: return {0.0, mu3, 0.0};
        case 32: return {-mu3, 0.0, 0.0};
        default: return {0.0, 0.0, 0.0};  // diagonal entries vanish
    }
}

FrameVector bracket(const MetricParams& m, int i, int j) {
    if (i < 1 || i > 3 || j < 1 || j > 3) {
        throw std::invalid_argument("bracket: frame indices must lie in {1,2,3}");
    }
    const double l1sq = m.lambda1() * m.lambda1();
    const double l2sq = m.lambda2() * m.lambda2();
    switch (i * 10 + j) {
        case 23: return {l1sq, 0.0, 0.0};
        case 32: return {-l1sq, 0.0, 0.0};
        case 31: return {0.0, l2sq, 0.0};
        case 13: return {0.0, -l2sq, 0.0};
        default: return {0.0, 0.0, 0.0};  // [E1,E2] = 0 and diagonals
    }
}

CurvatureInvariants curvature_invariants(const MetricParams& m) {
    const double mu1 = m.mu1(), mu2 = m.mu2(), mu3 = m.mu3();
    return {2.0 * mu2 * mu3, 2.0 * mu1 * mu3, 3.0 * mu1 * mu2, 2.0 * mu2 * mu3};
}

std::array<std::array<double, 3>, 3> left_translation_jacobian(const GroupElement& p) {
    const double c = std::cos(p.z), s = std::sin(p.z);
    return {{{c, -s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0}}};
}

CoordVector push_forward(const std::array<std::array<double, 3>, 3>& jac, const CoordVector& v) {
    return {jac[0][0] * v.vx + jac[0][1] * v.vy + jac[0][2] * v.vz,
            jac[1][0] * v.vx + jac[1][1] * v.vy + jac[1][2] * v.vz,
            jac[2][0] * v.vx + jac[2][1] * v.vy + jac[2][2] * v.vz};
}

CoordVector frame_to_coord(const MetricParams& m, const GroupElement& p, const FrameVector& a) {
    const auto E = frame_at(m, p);
    return {a.a1 * E[0].vx + a.a2 * E[1].vx + a.a3 * E[2].vx,
            a.a1 * E[0].vy + a.a2 * E[1].vy + a.a3 * E[2].vy,
            a.a1 * E[0].vz + a.a2 * E[1].vz + a.a3 * E[2].vz};
}

FrameVector coord_to_frame(const MetricParams& m, const GroupElement& p, const CoordVector& v) {
    // The frame is g-orthonormal, so components are metric inner products.
    const auto E = frame_at(m, p);
    return {metric_inner(m, p, v, E[0]),
            metric_inner(m, p, v, E[1]),
            metric_inner(m, p, v, E[2])};
}

}  // namespace e2surf
