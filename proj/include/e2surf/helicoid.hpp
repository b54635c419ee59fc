#pragma once

#include <memory>
#include <utility>

#include "e2surf/e2_core.hpp"
#include "e2surf/numerics.hpp"
#include "e2surf/surface_grid.hpp"
#include "e2surf/weierstrass.hpp"

// The one-parameter helicoid family: a minimal surface containing the
// x3-axis, ruled by straight lines in every plane {x3 = const}, and
// invariant under left multiplication by (0, 0, 2*x3(W)).

namespace e2surf {

// Solved angular profile b(v) with its half-turn length W and the height
// function x3(v). Queries outside the solved span use the translation
// relations b(v + W) = b(v) + pi and x3(v + W) = x3(v) + x3(W).
// Immutable after construction.
class HelicoidProfile {
public:
    HelicoidProfile(const MetricParams& m, double K, double ode_tol = 1e-12);

    const MetricParams& metric() const { return m_; }
    double K() const { return K_; }
    double W() const { return W_; }
    double x3W() const { return x3W_; }

    double b(double v) const;
    double b_prime(double v) const;       // from the defining first-order relation
    double b_second(double v) const;      // from the differentiated relation
    double x3(double v) const;
    double x3_prime(double v) const;

    const OdeSolution& path() const { return *path_; }

private:
    std::pair<double, double> reduced(double v) const;  // (v in core span, k)

    MetricParams m_;
    double K_;
    double W_ = 0.0;
    double x3W_ = 0.0;
    std::shared_ptr<const OdeSolution> path_;
};

// Solves the profile; K must satisfy 0 < |K| < 1 - 1e-6 (throws InvalidK).
HelicoidProfile solve_profile(const MetricParams& m, double K, double ode_tol = 1e-12);

// The immersion X(u + iv).
GroupElement immerse(const HelicoidProfile& p, double u, double v);

// Gauss map value and g_zzbar at (u, v), from the closed derivative formulas.
GaussMapData gauss_data(const HelicoidProfile& p, double u, double v);

// Intersection with {x3 = C}: the line {(k1 s, k2 s, C) : s = sinh(-lambda1 u)}.
struct HelicoidSection {
    double k1, k2, v0;
};
HelicoidSection cross_section(const HelicoidProfile& p, double C);

// Inverts the translation period 2*x3_K(W_K) = T by bisection in K. The
// period map is strictly increasing and covers (0, inf) for K in (0, 1),
// but only a bounded negative range for K in (-1, 0); throws NoRoot for
// unattainable (large negative) targets. A surface of period |T| is in any
// case invariant under the translation by T, via the group inverse.
double solve_K_for_period(const MetricParams& m, double T, double tol = 1e-10);

// Conformal factor and Gauss curvature at (u, v).
std::pair<double, double> curvature(const HelicoidProfile& p, double u, double v);

// Laplacian of log rho; |K| dA = |laplacian_log_rho| du dv.
double laplacian_log_rho(const HelicoidProfile& p, double u, double v);

// Total |K| over the fundamental piece v in [0, 2W), u truncated to
// [-u_window, u_window]. The flag reports failure to converge under
// doubling of the u window (the anisotropic case diverges).
struct TotalCurvature {
    double value;
    bool diverged;
};
TotalCurvature total_abs_curvature(const HelicoidProfile& p, double u_window);

SurfaceGrid sample_grid(const HelicoidProfile& p, double u_min, double u_max,
                        double v_min, double v_max, int nu, int nv, int threads = 1);

}  // namespace e2surf
