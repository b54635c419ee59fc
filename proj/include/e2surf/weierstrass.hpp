#pragma once

#include <complex>
#include <functional>

#include "e2surf/e2_core.hpp"

// Representation machinery for conformal minimal immersions: the H-potential,
// the Gauss-map PDE residual, the Hopf differential, the components of the
// immersion differential, the induced conformal factor, and an independent
// finite-difference mean-curvature oracle.

namespace e2surf {

using Complex = std::complex<double>;

// Value of the projected Gauss map together with its Wirtinger derivatives.
// gbar_z is the z-derivative of conj(g) and always equals conj(gzbar).
struct GaussMapValue {
    Complex g;
    Complex gz;
    Complex gzbar;
    Complex gbar_z;

    GaussMapValue(Complex g_, Complex gz_, Complex gzbar_)
        : g(g_), gz(gz_), gzbar(gzbar_), gbar_z(std::conj(gzbar_)) {}
};

// Unit normal in the left-invariant frame.
struct SphereNormal {
    double N1, N2, N3;
};

// Components of X_z in the frame, A3 = eta/2.
struct ImmersionDifferential {
    Complex A1, A2, A3;
    Complex eta;
};

struct HopfValue {
    Complex Q;
};

// Gauss map value plus the mixed second derivative, as produced by the
// closed derivative formulas of the surface families.
struct GaussMapData {
    GaussMapValue gv;
    Complex gzz_bar;
};

// H-potential R(q); at H = 0 it coincides with zero_potential.
Complex h_potential(const MetricParams& m, double H, Complex q);

// Minimal-case potential R(q) = -(i/2) [l1^2 (q+qbar)^2 - l2^2 (q-qbar)^2].
// Purely imaginary with non-positive imaginary part.
Complex zero_potential(const MetricParams& m, Complex q);

// Residual of the Gauss-map equation
//   g_zzbar - 2 [l1^2(g+gbar) - l2^2(g-gbar)] g_z g_zbar / [l1^2(g+gbar)^2 - l2^2(g-gbar)^2];
// vanishes exactly on Gauss maps of minimal immersions.
// Throws PotentialVanishes when the denominator degenerates.
Complex pde_residual(const MetricParams& m, const GaussMapValue& gv, Complex gzz_bar);

// Hopf differential coefficient Q in dz^2.
HopfValue hopf(const MetricParams& m, const GaussMapValue& gv);

// eta = 4 gbar g_z / R(g) and the frame components of X_z.
// Throws GaussMapAtPole for g = 0 or non-finite g, PotentialVanishes if R ~ 0.
ImmersionDifferential eta_and_A(const MetricParams& m, const GaussMapValue& gv);

// Conformal factor rho^2 = 4 (1+|g|^2)^2 |g_z|^2 / |R(g)|^2.
double induced_metric_factor(const MetricParams& m, const GaussMapValue& gv);

// Inverse stereographic projection (from the south pole) of g.
SphereNormal sphere_normal(Complex g);

using ImmersionSampler = std::function<GroupElement(double u, double v)>;

// Mean curvature by pure finite differences of a black-box immersion:
// tangent vectors are converted to frame components, covariant derivatives
// assembled from the connection table, the normal taken as the frame cross
// product. Independent of the representation formulas above.
// Throws DegenerateMetric when <X_u, X_u> < 1e-12.
double mean_curvature_fd(const MetricParams& m, const ImmersionSampler& sampler,
                         double u, double v, double h = 1e-3);

}  // namespace e2surf
