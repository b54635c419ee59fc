#include "e2surf/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace e2surf {

namespace {

bool all_finite(const std::vector<double>& v) {
    for (double x : v) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

// One classical RK4 step of size h from (t, y); k1 = f(t, y) supplied by caller.
void rk4_step(const OdeRhs& rhs, double t, const std::vector<double>& y,
              const std::vector<double>& k1, double h, std::vector<double>& out,
              std::vector<double>& k2, std::vector<double>& k3, std::vector<double>& k4,
              std::vector<double>& tmp) {
    const std::size_t n = y.size();
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    rhs(t + 0.5 * h, tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    rhs(t + 0.5 * h, tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
    rhs(t + h, tmp, k4);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = y[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
}

}  // namespace

OdeSolution::OdeSolution(std::vector<double> knots,
                         std::vector<std::vector<double>> values,
                         std::vector<std::vector<double>> derivs)
    : knots_(std::move(knots)), values_(std::move(values)), derivs_(std::move(derivs)) {
    if (knots_.size() < 2 || knots_.size() != values_.size() || knots_.size() != derivs_.size()) {
        throw std::invalid_argument("OdeSolution: inconsistent knot arrays");
    }
    for (std::size_t k = 1; k < knots_.size(); ++k) {
        if (!(knots_[k] > knots_[k - 1])) {
            throw std::invalid_argument("OdeSolution: knots must be strictly increasing");
        }
    }
}

std::size_t OdeSolution::interval_of(double t) const {
    if (t < knots_.front() || t > knots_.back()) {
        throw std::out_of_range("OdeSolution: query t=" + std::to_string(t) +
                                " outside solved span [" + std::to_string(knots_.front()) +
                                ", " + std::to_string(knots_.back()) + "]");
    }
    auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
    std::size_t idx = static_cast<std::size_t>(it - knots_.begin());
    if (idx == 0) return 0;
    if (idx >= knots_.size()) return knots_.size() - 2;
    return idx - 1;
}

double OdeSolution::value(double t, std::size_t component) const {
    const std::size_t k = interval_of(t);
    const double h = knots_[k + 1] - knots_[k];
    const double s = (t - knots_[k]) / h;
    const double y0 = values_[k][component], y1 = values_[k + 1][component];
    const double d0 = derivs_[k][component] * h, d1 = derivs_[k + 1][component] * h;
    const double s2 = s * s, s3 = s2 * s;
    return (2.0 * s3 - 3.0 * s2 + 1.0) * y0 + (s3 - 2.0 * s2 + s) * d0 +
           (-2.0 * s3 + 3.0 * s2) * y1 + (s3 - s2) * d1;
}

double OdeSolution::derivative(double t, std::size_t component) const {
    const std::size_t k = interval_of(t);
    const double h = knots_[k + 1] - knots_[k];
    const double s = (t - knots_[k]) / h;
    const double y0 = values_[k][component], y1 = values_[k + 1][component];
    const double d0 = derivs_[k][component] * h, d1 = derivs_[k + 1][component] * h;
    const double s2 = s * s;
    const double dds = (6.0 * s2 - 6.0 * s) * y0 + (3.0 * s2 - 4.0 * s + 1.0) * d0 +
                       (-6.0 * s2 + 6.0 * s) * y1 + (3.0 * s2 - 2.0 * s) * d1;
    return dds / h;
}

std::vector<double> OdeSolution::state(double t) const {
    std::vector<double> out(dimension());
    for (std::size_t c = 0; c < out.size(); ++c) out[c] = value(t, c);
    return out;
}

double OdeSolution::first_crossing(std::size_t component, double level, double after) const {
    const double lo_t = std::max(after, knots_.front());
    for (std::size_t k = 0; k + 1 < knots_.size(); ++k) {
        if (knots_[k + 1] <= lo_t) continue;
        const double a = std::max(knots_[k], lo_t);
        const double b = knots_[k + 1];
        const double fa = value(a, component) - level;
        const double fb = value(b, component) - level;
        if (fa == 0.0) return a;
        if (fb == 0.0) return b;
        if (fa * fb < 0.0) {
            auto f = [&](double t) { return value(t, component) - level; };
            return find_root(f, a, b, 1e-14).root;
        }
    }
    throw NoRoot("first_crossing: level " + std::to_string(level) + " not reached in span");
}

namespace {

struct RawSolution {
    std::vector<double> ts;
    std::vector<std::vector<double>> ys;
    std::vector<std::vector<double>> fs;
};

// Integrates from (t0, y0) to t1, appending accepted knots (excluding t0
// itself when append_start is false, so runs can be concatenated).
void integrate_raw(const OdeRhs& rhs, const std::vector<double>& y0,
                   double t0, double t1, double tol, RawSolution& out, bool append_start) {
    if (!(tol > 0.0)) throw std::invalid_argument("integrate_ode: tol must be positive");
    if (t0 == t1) throw std::invalid_argument("integrate_ode: empty time span");
    const double dir = (t1 > t0) ? 1.0 : -1.0;
    const double span = std::abs(t1 - t0);
    const std::size_t n = y0.size();

    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
    std::vector<double> y_full(n), y_half(n), y_fine(n), k1h(n);

    rhs(t0, y0, k1);
    if (!all_finite(k1)) throw NonFinite("integrate_ode: rhs non-finite at start");
    if (append_start) {
        out.ts.push_back(t0);
        out.ys.push_back(y0);
        out.fs.push_back(k1);
    }

    double t = t0;
    std::vector<double> y = y0;
    double h = std::min(span, 1e-2);
    const double h_min = span * 1e-14;
    const double h_max = std::min(span, 0.1);

    std::vector<double> f_end(n);
    while (dir * (t1 - t) > 0.0) {
        h = std::min(h, std::abs(t1 - t));
        bool accepted = false;
        while (!accepted) {
            const double hs = dir * h;
            rk4_step(rhs, t, y, k1, hs, y_full, k2, k3, k4, tmp);
            rk4_step(rhs, t, y, k1, 0.5 * hs, y_half, k2, k3, k4, tmp);
            rhs(t + 0.5 * hs, y_half, k1h);
            if (!all_finite(k1h)) throw NonFinite("integrate_ode: rhs non-finite");
            rk4_step(rhs, t + 0.5 * hs, y_half, k1h, 0.5 * hs, y_fine, k2, k3, k4, tmp);

            double err = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                err = std::max(err, std::abs(y_fine[i] - y_full[i]));
            }
            err /= 15.0;  // Richardson estimate of the fine-solution local error
            if (!std::isfinite(err)) throw NonFinite("integrate_ode: state non-finite");

            // the dense interpolant must be as accurate as the knot states:
            // compare the cubic Hermite midpoint value with the computed one
            rhs(t + hs, y_fine, f_end);
            if (!all_finite(f_end)) throw NonFinite("integrate_ode: rhs non-finite");
            double interp_err = 0.0, ymax = 1.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double hermite_mid =
                    0.5 * (y[i] + y_fine[i]) + 0.125 * hs * (k1[i] - f_end[i]);
                interp_err = std::max(interp_err, std::abs(hermite_mid - y_half[i]));
                ymax = std::max({ymax, std::abs(y[i]), std::abs(y_fine[i])});
            }
            // gates floored at the roundoff level of the state scale, so
            // acceptance cannot be starved by floating-point noise
            const double err_gate = tol * h + 1e-15 * ymax;
            const double interp_gate = tol * h + 4e-15 * ymax;

            if ((err <= err_gate && interp_err <= interp_gate) || h <= h_min) {
                t += hs;
                y = y_fine;
                k1 = f_end;
                if (out.ts.size() > 10000000) {
                    throw NoConvergence("integrate_ode: step budget exhausted at t=" +
                                        std::to_string(t));
                }
                out.ts.push_back(t);
                out.ys.push_back(y);
                out.fs.push_back(k1);
                accepted = true;
                if (err < 0.05 * err_gate && interp_err < 0.05 * interp_gate) {
                    h = std::min(2.0 * h, h_max);
                }
            } else {
                h *= 0.5;
            }
        }
    }
}

OdeSolution seal(RawSolution&& raw, bool reversed) {
    if (reversed) {
        std::reverse(raw.ts.begin(), raw.ts.end());
        std::reverse(raw.ys.begin(), raw.ys.end());
        std::reverse(raw.fs.begin(), raw.fs.end());
    }
    return OdeSolution(std::move(raw.ts), std::move(raw.ys), std::move(raw.fs));
}

}  // namespace

OdeSolution integrate_ode(const OdeRhs& rhs, const std::vector<double>& y0,
                          double t0, double t1, double tol) {
    RawSolution raw;
    integrate_raw(rhs, y0, t0, t1, tol, raw, true);
    return seal(std::move(raw), t1 < t0);
}

OdeSolution integrate_ode_bidirectional(const OdeRhs& rhs, const std::vector<double>& y0,
                                        double t_min, double t_max, double tol) {
    if (!(t_min < 0.0) || !(t_max > 0.0)) {
        throw std::invalid_argument("integrate_ode_bidirectional: need t_min < 0 < t_max");
    }
    RawSolution back;
    integrate_raw(rhs, y0, 0.0, t_min, tol, back, true);
    std::reverse(back.ts.begin(), back.ts.end());
    std::reverse(back.ys.begin(), back.ys.end());
    std::reverse(back.fs.begin(), back.fs.end());
    // forward run starts at the shared t = 0 knot already in place
    integrate_raw(rhs, y0, 0.0, t_max, tol, back, false);
    return seal(std::move(back), false);
}

OdeSolution integrate_ode_to_level(const OdeRhs& rhs, const std::vector<double>& y0,
                                   double t0, std::size_t component, double level,
                                   double chunk, double tol, double max_span) {
    if (!(chunk > 0.0)) throw std::invalid_argument("integrate_ode_to_level: bad chunk");
    RawSolution raw;
    double t = t0;
    std::vector<double> y = y0;
    bool first = true;
    while (t - t0 < max_span) {
        const double next = std::min(t + chunk, t0 + max_span);
        integrate_raw(rhs, y, t, next, tol, raw, first);
        first = false;
        t = raw.ts.back();
        y = raw.ys.back();
        if (y[component] >= level) return seal(std::move(raw), false);
        chunk *= 2.0;
    }
    throw NoRoot("integrate_ode_to_level: level not reached within max span");
}

RootResult find_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("find_root: tol must be positive");
    if (lo > hi) std::swap(lo, hi);
    double fa = f(lo), fb = f(hi);
    if (fa == 0.0) return {lo, 0.0, 0};
    if (fb == 0.0) return {hi, 0.0, 0};
    if (fa * fb > 0.0) {
        throw NoSignChange("find_root: f(" + std::to_string(lo) + ") and f(" +
                           std::to_string(hi) + ") have the same sign");
    }

    double a = lo, b = hi;
    double x = a, fx = fa;
    int iters = 0;
    const int max_iters = 200;
    while (iters < max_iters) {
        ++iters;
        const double mid = 0.5 * (a + b);
        double cand = mid;
        // secant through the bracket endpoints, used only if it stays inside
        const double denom = fb - fa;
        if (denom != 0.0) {
            const double sec = a - fa * (b - a) / denom;
            const double margin = 0.01 * (b - a);
            if (sec > a + margin && sec < b - margin) cand = sec;
        }
        x = cand;
        fx = f(x);
        if (std::abs(fx) < tol) return {x, fx, iters};
        if (fa * fx < 0.0) {
            b = x;
            fb = fx;
        } else {
            a = x;
            fa = fx;
        }
        if (b - a <= std::numeric_limits<double>::epsilon() * (std::abs(a) + std::abs(b)) ||
            b - a < tol * 1e-3) {
            return {0.5 * (a + b), f(0.5 * (a + b)), iters};
        }
    }
    return {x, fx, iters};
}

namespace {

// 15-point Gauss-Legendre nodes/weights on [-1, 1] (symmetric half stored).
constexpr int kGlHalf = 8;
constexpr double kGlNodes[kGlHalf] = {
    0.0,
    0.2011940939974345223006283,
    0.3941513470775633698972074,
    0.5709721726085388475372267,
    0.7244177313601700474161861,
    0.8482065834104272162006483,
    0.9372733924007059043077589,
    0.9879925180204854284895657};
constexpr double kGlWeights[kGlHalf] = {
    0.2025782419255612728806202,
    0.1984314853271115764561183,
    0.1861610000155622110268006,
    0.1662692058169939335532009,
    0.1395706779261543144478048,
    0.1071592204671719350118695,
    0.0703660474881081247092674,
    0.0307532419961172683546284};

double gl15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double sum = kGlWeights[0] * f(mid);
    for (int i = 1; i < kGlHalf; ++i) {
        const double dx = half * kGlNodes[i];
        sum += kGlWeights[i] * (f(mid - dx) + f(mid + dx));
    }
    return sum * half;
}

double quad_adaptive(const std::function<double(double)>& f, double a, double b,
                     double tol, double whole, int depth) {
    if (depth > 40) {
        throw NoConvergence("quad: refinement limit reached on [" + std::to_string(a) +
                            ", " + std::to_string(b) + "]");
    }
    const double mid = 0.5 * (a + b);
    const double left = gl15(f, a, mid);
    const double right = gl15(f, mid, b);
    const double delta = left + right - whole;
    if (std::abs(delta) <= tol) return left + right;
    return quad_adaptive(f, a, mid, 0.5 * tol, left, depth + 1) +
           quad_adaptive(f, mid, b, 0.5 * tol, right, depth + 1);
}

}  // namespace

double quad(const std::function<double(double)>& f, double a, double b, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("quad: tol must be positive");
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    const double whole = gl15(f, a, b);
    if (!std::isfinite(whole)) throw NonFinite("quad: integrand non-finite");
    return sign * quad_adaptive(f, a, b, tol, whole, 0);
}

double quad_singular(const std::function<double(double)>& f_smooth, double tol) {
    return quad([&](double s) { return f_smooth(std::cos(s)); }, 0.0, M_PI, tol);
}

double fd_derivative(const std::function<double(double)>& f, double x, int order, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("fd_derivative: h must be positive");
    const double f2p = f(x + 2.0 * h), f1p = f(x + h);
    const double f1m = f(x - h), f2m = f(x - 2.0 * h);
    if (order == 1) {
        return (-f2p + 8.0 * f1p - 8.0 * f1m + f2m) / (12.0 * h);
    }
    if (order == 2) {
        return (-f2p + 16.0 * f1p - 30.0 * f(x) + 16.0 * f1m - f2m) / (12.0 * h * h);
    }
    throw std::invalid_argument("fd_derivative: order must be 1 or 2");
}

}  // namespace e2surf
