#pragma once

#include <array>
#include <cmath>

#include "e2surf/errors.hpp"

// Ambient geometry of the universal cover of the planar rigid-motion group:
// group law, two-parameter family of left-invariant metrics g(lambda1, lambda2),
// the orthonormal frame {E1, E2, E3}, its Levi-Civita connection and curvature.

namespace e2surf {

// A point of the group. Coordinates live on R^3 (universal cover); the
// z coordinate is never reduced mod 2*pi.
struct GroupElement {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

// Tangent vector in the coordinate frame {d/dx, d/dy, d/dz}.
struct CoordVector {
    double vx = 0.0;
    double vy = 0.0;
    double vz = 0.0;
};

// Tangent vector in the left-invariant orthonormal frame {E1, E2, E3}.
struct FrameVector {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;

    double norm() const { return std::sqrt(a1 * a1 + a2 * a2 + a3 * a3); }
};

// Metric parameters (lambda1, lambda2) with lambda1 >= lambda2 > 0 and the
// derived constants lambda3 = 1/(lambda1*lambda2), mu1, mu2, mu3.
// The constructor normalizes the order and rejects non-positive values.
class MetricParams {
public:
    MetricParams(double l1, double l2);

    double lambda1() const { return lambda1_; }
    double lambda2() const { return lambda2_; }
    double lambda3() const { return lambda3_; }
    double mu1() const { return mu1_; }
    double mu2() const { return mu2_; }
    double mu3() const { return mu3_; }

    bool flat() const { return lambda1_ == lambda2_; }

private:
    double lambda1_, lambda2_, lambda3_;
    double mu1_, mu2_, mu3_;
};

GroupElement multiply(const GroupElement& p, const GroupElement& q);
GroupElement inverse(const GroupElement& p);

// Coordinate components of E1, E2, E3 at p (they depend on p only through z).
std::array<CoordVector, 3> frame_at(const MetricParams& m, const GroupElement& p);

// Left-invariant metric evaluated at p on coordinate vectors.
double metric_inner(const MetricParams& m, const GroupElement& p,
                    const CoordVector& u, const CoordVector& v);

// nabla_{E_i} E_j in frame components, i, j in {1, 2, 3}.
FrameVector connection(const MetricParams& m, int i, int j);

// Lie bracket [E_i, E_j] in frame components.
FrameVector bracket(const MetricParams& m, int i, int j);

// Principal Ricci curvatures along E1, E2, E3 and the scalar curvature S.
struct CurvatureInvariants {
    double ric1, ric2, ric3, scalar;
};
CurvatureInvariants curvature_invariants(const MetricParams& m);

// Jacobian of left translation q -> p*q (constant in q); maps coordinate
// components of tangent vectors at q to coordinate components at p*q.
std::array<std::array<double, 3>, 3> left_translation_jacobian(const GroupElement& p);

CoordVector push_forward(const std::array<std::array<double, 3>, 3>& jac, const CoordVector& v);

// Conversions between the coordinate frame and {E1, E2, E3} at p.
CoordVector frame_to_coord(const MetricParams& m, const GroupElement& p, const FrameVector& a);
FrameVector coord_to_frame(const MetricParams& m, const GroupElement& p, const CoordVector& v);

}  // namespace e2surf
