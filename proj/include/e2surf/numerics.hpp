#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "e2surf/errors.hpp"

// Deterministic numerical kernels: RK4 integration with cubic-Hermite dense
// output and event location, bracketed root finding, adaptive Gauss-Legendre
// quadrature (plus a cos-substitution wrapper for 1/sqrt(1-x^2) endpoint
// singularities), and central finite-difference stencils.

namespace e2surf {

using OdeRhs = std::function<void(double t, const std::vector<double>& y, std::vector<double>& dydt)>;

// Dense ODE solution on strictly increasing knots. Piecewise cubic Hermite
// interpolation through stored states and derivatives; reproduces the knot
// values exactly.
class OdeSolution {
public:
    OdeSolution(std::vector<double> knots,
                std::vector<std::vector<double>> values,
                std::vector<std::vector<double>> derivs);

    double t_min() const { return knots_.front(); }
    double t_max() const { return knots_.back(); }
    std::size_t dimension() const { return values_.front().size(); }
    std::size_t knot_count() const { return knots_.size(); }

    double value(double t, std::size_t component) const;
    double derivative(double t, std::size_t component) const;
    std::vector<double> state(double t) const;

    // First t > after with value(t, component) == level, located by sign
    // change across knot intervals followed by root refinement on the
    // interpolant. Throws NoRoot if no crossing lies in the solved span.
    double first_crossing(std::size_t component, double level, double after = 0.0) const;

    const std::vector<double>& knots() const { return knots_; }

private:
    std::size_t interval_of(double t) const;

    std::vector<double> knots_;
    std::vector<std::vector<double>> values_;
    std::vector<std::vector<double>> derivs_;
};

// Classical RK4 with step-halving (Richardson) error control: each step is
// accepted when the estimated local error is at most tol per unit step.
// Integrates from t0 to t1; t1 < t0 integrates backward. The returned knots
// are in increasing order either way. Deterministic for fixed inputs.
OdeSolution integrate_ode(const OdeRhs& rhs, const std::vector<double>& y0,
                          double t0, double t1, double tol);

// Integrates from 0 toward both endpoints (y0 is the state at t = 0) and
// merges the two runs into one solution. Requires t_min < 0 < t_max.
OdeSolution integrate_ode_bidirectional(const OdeRhs& rhs, const std::vector<double>& y0,
                                        double t_min, double t_max, double tol);

// Integrates forward from t0 in doubling chunks until the given state
// component reaches `level', then a little beyond. Intended for increasing
// components whose crossing time is not known a priori.
// Throws NoRoot if the level is not reached within max_span.
OdeSolution integrate_ode_to_level(const OdeRhs& rhs, const std::vector<double>& y0,
                                   double t0, std::size_t component, double level,
                                   double chunk, double tol, double max_span);

struct RootResult {
    double root = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

// Bracketed scalar root finding: bisection with secant acceleration that
// never leaves the bracket. Stops when |f| < tol or the bracket is at
// floating-point resolution. Requires a sign change on [lo, hi].
RootResult find_root(const std::function<double(double)>& f, double lo, double hi, double tol);

// Adaptive composite 15-point Gauss-Legendre quadrature of f on [a, b].
double quad(const std::function<double(double)>& f, double a, double b, double tol);

// Integral over [-1, 1] of f_smooth(x) / sqrt(1 - x^2), computed through the
// substitution x = cos(s) as the regular integral of f_smooth(cos s) on [0, pi].
double quad_singular(const std::function<double(double)>& f_smooth, double tol);

// 4th-order central difference, order in {1, 2}.
double fd_derivative(const std::function<double(double)>& f, double x, int order, double h);

}  // namespace e2surf
