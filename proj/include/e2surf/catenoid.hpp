#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "e2surf/e2_core.hpp"
#include "e2surf/numerics.hpp"
#include "e2surf/surface_grid.hpp"
#include "e2surf/weierstrass.hpp"

// The one-parameter catenoid family: properly embedded minimal annuli,
// periodic in the conformal parameter with lattice vector Z = 2U - 2i f(U)/c
// once the period function H(c, theta) is driven to zero at theta_tilde(c).

namespace e2surf {

// Admissible parameter pair (c, theta) with the derived quantities
// theta_plus (the admissibility bound for |theta|) and D = sin(theta)/c.
struct OmegaPoint {
    double c;
    double theta;
    double theta_plus;
    double D;
};

// Validates (c, theta); throws OutsideOmega when |theta| >= theta_plus.
OmegaPoint omega_check(const MetricParams& m, double c, double theta);

// Solved profile (phi, f, G) with the half period U (first u > 0 where
// phi = pi), end values f(U), G(U) and the period functional
// H = D f(U) + c G(U). Queries outside the solved span use
// phi(u+U) = phi(u) + pi, f(u+U) = f(u) + f(U), G(u+U) = G(u) + G(U).
// Immutable after construction.
class CatenoidProfile {
public:
    CatenoidProfile(const MetricParams& m, const OmegaPoint& op, double ode_tol = 1e-12);

    const MetricParams& metric() const { return m_; }
    const OmegaPoint& omega() const { return op_; }
    double U() const { return U_; }
    double fU() const { return fU_; }
    double GU() const { return GU_; }
    double H() const { return H_; }

    double phi(double u) const;
    double phi_prime(double u) const;   // sqrt(P(B)) from the first-order relation
    double phi_second(double u) const;
    double f(double u) const;
    double f_prime(double u) const;     // D B
    double f_second(double u) const;
    double G(double u) const;
    double G_prime(double u) const;     // (c - phi') / B
    double B(double u) const;           // lambda1^2 cos^2 phi + lambda2^2 sin^2 phi

    // positivity bounds of Lemma-type: min/max of P over B in [l2^2, l1^2]
    double phi_prime_min() const { return a1_; }
    double phi_prime_max() const { return a2_; }

    const OdeSolution& path() const { return *path_; }

private:
    std::pair<double, double> reduced(double u) const;

    MetricParams m_;
    OmegaPoint op_;
    double U_ = 0.0, fU_ = 0.0, GU_ = 0.0, H_ = 0.0;
    double a1_ = 0.0, a2_ = 0.0;
    std::shared_ptr<const OdeSolution> path_;
};

CatenoidProfile solve_profile(const OmegaPoint& op, const MetricParams& m,
                              double ode_tol = 1e-12);

// Period functional H(c, theta) = D f(U) + c G(U) from a solved profile.
double H_value(const OmegaPoint& op, const MetricParams& m, double ode_tol = 1e-12);

// The same functional through its endpoint-singular integral form,
// evaluated with the cos-substitution quadrature. Independent of the ODE path.
double H_value_integral(const OmegaPoint& op, const MetricParams& m, double tol = 1e-12);

// Unique root theta_tilde(c) of H(c, .) in (0, min(pi/2, theta_plus)).
// Brackets from below at theta = tol and from above at min(pi/2, theta_plus),
// expanding toward theta_plus when needed; throws BracketingFailed if no
// sign change appears before theta_plus.
double solve_theta_tilde(const MetricParams& m, double c, double tol,
                         double ode_tol = 1e-12);

GroupElement immerse(const CatenoidProfile& p, double u, double v);

// Gauss map and derivatives from the closed formulas.
GaussMapData gauss_data(const CatenoidProfile& p, double u, double v);

struct PeriodVector {
    Complex Z;
};

// Z = 2U - 2i f(U)/c; requires |H| <= tol (throws PeriodObstruction).
PeriodVector period_vector(const CatenoidProfile& p, double tol = 1e-8);

// Planar section of the surface with {x3 = lambda1 lambda2 mu}, sampled over
// one full period u in [0, 2U], together with the rotated planar curve
// (xt1, xt2) and its parameter derivatives.
struct CrossSectionSample {
    double u;
    GroupElement gamma;
    double xt1, xt2;
    double xt1_prime, xt2_prime;
    double phi;
};

struct CrossSection {
    double mu = 0.0;
    double U = 0.0;
    double lambda_ratio = 1.0;  // lambda2 / lambda1
    std::vector<CrossSectionSample> samples;
};

CrossSection cross_section(const CatenoidProfile& p, double mu, int n);

// Convexity of the rotated section: the slope -(lambda2/lambda1) tan(phi)
// must be strictly decreasing and xt2' < 0 on the open half-window
// (-U/2, U/2). Throws InsufficientSamples with fewer than 3 usable samples.
struct ConvexityResult {
    bool pass;
    double worst_slope_drop;  // smallest decrease between consecutive samples
    double worst_xt2_slope;   // largest (most positive) xt2'
};
ConvexityResult convexity_check(const CrossSection& cs);

// Conformal factor and Gauss curvature at (u, v).
std::pair<double, double> curvature(const CatenoidProfile& p, double u, double v);

double laplacian_log_rho(const CatenoidProfile& p, double u, double v);

// Total |K| over u in [-U, U], v in [-v_window, v_window]; the flag reports
// non-convergence under doubling of the v window.
struct TotalCurvature2 {
    double value;
    bool diverged;
};
TotalCurvature2 total_abs_curvature(const CatenoidProfile& p, double v_window);

// Rescaled-limit study: for each c, the sup-norm deviation of
// X_c(ut/c + i (2 ln c + vt)/c) from the limiting plane parametrization
// over the given (ut, vt) grid.
struct LimitRow {
    double c;
    double theta_tilde;
    double deviation;
};
std::vector<LimitRow> limit_study(const MetricParams& m, const std::vector<double>& c_list,
                                  const std::vector<double>& u_tilde,
                                  const std::vector<double>& v_tilde);

// Shrinking of the {x3 = 0} section: max radius sqrt(x1^2 + x2^2) per c.
struct ShrinkRow {
    double c;
    double theta_tilde;
    double max_radius;
};
std::vector<ShrinkRow> intersection_shrink_study(const MetricParams& m,
                                                 const std::vector<double>& c_list,
                                                 int n_samples = 256);

SurfaceGrid sample_grid(const CatenoidProfile& p, double u_min, double u_max,
                        double v_min, double v_max, int nu, int nv, int threads = 1);

}  // namespace e2surf
