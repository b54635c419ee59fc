#include "e2surf/helicoid.hpp"

#include <cmath>
#include <thread>
#include <vector>

namespace e2surf {

namespace {

// lambda1^2 cos^2 b + lambda2^2 sin^2 b
double angular_weight(const MetricParams& m, double b) {
    const double cb = std::cos(b), sb = std::sin(b);
    return m.lambda1() * m.lambda1() * cb * cb + m.lambda2() * m.lambda2() * sb * sb;
}

double b_prime_of(const MetricParams& m, double K, double b) {
    return std::sqrt(m.lambda1() * m.lambda1() - K * angular_weight(m, b));
}

OdeRhs profile_rhs(const MetricParams& m, double K) {
    return [m, K](double, const std::vector<double>& y, std::vector<double>& dy) {
        const double bp = b_prime_of(m, K, y[0]);
        dy[0] = bp;
        dy[1] = m.lambda1() * m.lambda2() * K / (m.lambda1() + bp);
    };
}

}  // namespace

HelicoidProfile::HelicoidProfile(const MetricParams& m, double K, double ode_tol)
    : m_(m), K_(K) {
    if (!(std::abs(K) > 0.0) || std::abs(K) >= 1.0 - 1e-6 || !std::isfinite(K)) {
        throw InvalidK("helicoid parameter must satisfy 0 < |K| < 1 - 1e-6, got " +
                       std::to_string(K));
    }
    const auto rhs = profile_rhs(m_, K_);
    // hunt for the half turn first; b is strictly increasing with bounded speed
    const double chunk0 = M_PI / b_prime_of(m_, K_, 0.0) + 1.0;
    const OdeSolution hunt = integrate_ode_to_level(rhs, {0.0, 0.0}, 0.0, 0, M_PI,
                                                    chunk0, ode_tol, 1e7);
    W_ = hunt.first_crossing(0, M_PI);
    const double span = 2.0 * W_ + 1.0;
    path_ = std::make_shared<const OdeSolution>(
        integrate_ode_bidirectional(rhs, {0.0, 0.0}, -span, span, ode_tol));
    x3W_ = path_->value(W_, 1);
}

std::pair<double, double> HelicoidProfile::reduced(double v) const {
    if (v >= path_->t_min() && v <= path_->t_max()) return {v, 0.0};
    const double k = std::floor(v / W_ + 0.5);
    return {v - k * W_, k};
}

double HelicoidProfile::b(double v) const {
    const auto [vr, k] = reduced(v);
    return path_->value(vr, 0) + k * M_PI;
}

double HelicoidProfile::b_prime(double v) const {
    return b_prime_of(m_, K_, b(v));
}

double HelicoidProfile::b_second(double v) const {
    const double bv = b(v);
    return K_ * (m_.lambda1() * m_.lambda1() - m_.lambda2() * m_.lambda2()) *
           std::sin(bv) * std::cos(bv);
}

double HelicoidProfile::x3(double v) const {
    const auto [vr, k] = reduced(v);
    return path_->value(vr, 1) + k * x3W_;
}

double HelicoidProfile::x3_prime(double v) const {
    return m_.lambda1() * m_.lambda2() * K_ / (m_.lambda1() + b_prime(v));
}

HelicoidProfile solve_profile(const MetricParams& m, double K, double ode_tol) {
    return HelicoidProfile(m, K, ode_tol);
}

GroupElement immerse(const HelicoidProfile& p, double u, double v) {
    const double l1 = p.metric().lambda1(), l2 = p.metric().lambda2();
    const double bv = p.b(v), x3v = p.x3(v), x3p = p.x3_prime(v);
    const double sh = std::sinh(-l1 * u);
    const double pre = x3p * sh / (l1 * l1 * l2);
    return {pre * (std::cos(x3v) * std::sin(bv) / l1 + std::sin(x3v) * std::cos(bv) / l2),
            pre * (std::sin(x3v) * std::sin(bv) / l1 - std::cos(x3v) * std::cos(bv) / l2),
            x3v};
}

GaussMapData gauss_data(const HelicoidProfile& p, double u, double v) {
    const double l1 = p.metric().lambda1();
    const double bv = p.b(v), bp = p.b_prime(v), bpp = p.b_second(v);
    const Complex g = std::exp(-l1 * u) * Complex{std::cos(bv), std::sin(bv)};
    const Complex gz = 0.5 * (bp - l1) * g;
    const Complex gzbar = -0.5 * (bp + l1) * g;
    const Complex gzzbar = 0.25 * Complex{l1 * l1 - bp * bp, bpp} * g;
    return {GaussMapValue{g, gz, gzbar}, gzzbar};
}

HelicoidSection cross_section(const HelicoidProfile& p, double C) {
    // x3 is a strictly monotone bijection; reduce C by whole periods first.
    const double k = std::floor(C / p.x3W() + 0.5);
    const double Cr = C - k * p.x3W();
    const double W = p.W();
    auto f = [&](double v) { return p.x3(v) - Cr; };
    const double v0 = find_root(f, -0.75 * W, 0.75 * W, 1e-13).root + k * W;

    const double l1 = p.metric().lambda1(), l2 = p.metric().lambda2();
    const double bv = p.b(v0), x3v = p.x3(v0), x3p = p.x3_prime(v0);
    const double pre = x3p / (l1 * l1 * l2);
    return {pre * (std::cos(x3v) * std::sin(bv) / l1 + std::sin(x3v) * std::cos(bv) / l2),
            pre * (std::sin(x3v) * std::sin(bv) / l1 - std::cos(x3v) * std::cos(bv) / l2),
            v0};
}

double solve_K_for_period(const MetricParams& m, double T, double tol) {
    if (T == 0.0 || !std::isfinite(T)) {
        throw std::invalid_argument("solve_K_for_period: period must be non-zero and finite");
    }
    const double sign = (T > 0.0) ? 1.0 : -1.0;
    auto period_of = [&](double K) {
        const HelicoidProfile p(m, K);
        return 2.0 * p.x3W();
    };
    // K -> 2 x3_K(W_K) is strictly increasing through 0 but not odd: the
    // period diverges as K -> 1 while it stays bounded as K -> -1 (the
    // angular speed never degenerates for K < 0). Positive targets are
    // always attainable; negative ones only within the bounded range.
    // The upper probe stays strictly inside the admissible range.
    const double k_lo = 1e-9, k_hi = 1.0 - 1.01e-6;
    auto f = [&](double K) { return sign * period_of(sign * K) - std::abs(T); };
    if (f(k_hi) < 0.0) {
        throw NoRoot("solve_K_for_period: period " + std::to_string(T) +
                     " is not attainable; negative periods only reach " +
                     std::to_string(-period_of(-k_hi)) +
                     " (the surface of period |T| is still invariant under the "
                     "translation by T through the group inverse)");
    }
    if (f(k_lo) >= 0.0) {
        // |T| below the smallest resolvable period; k_lo already overshoots
        return sign * k_lo;
    }
    const RootResult r = find_root(f, k_lo, k_hi, tol);
    return sign * r.root;
}

std::pair<double, double> curvature(const HelicoidProfile& p, double u, double v) {
    const double l1 = p.metric().lambda1(), l2 = p.metric().lambda2();
    const double K = p.K();
    const double bv = p.b(v), bp = p.b_prime(v);
    const double L = l1 * l1 - l2 * l2;
    const double ch = std::cosh(l1 * u);
    const double ch2 = ch * ch;
    const double rho2 = K * K * ch2 / ((l1 + bp) * (l1 + bp));
    const double s2b = std::sin(2.0 * bv), c2b = std::cos(2.0 * bv);
    const double kg = -l1 * l1 * (l1 + bp) * (l1 + bp) / (K * K * ch2 * ch2) -
                      L * L * s2b * s2b / (4.0 * ch2) +
                      L * c2b * bp * (l1 + bp) / (K * ch2);
    return {rho2, kg};
}

double laplacian_log_rho(const HelicoidProfile& p, double u, double v) {
    const double l1 = p.metric().lambda1(), l2 = p.metric().lambda2();
    const double K = p.K();
    const double bv = p.b(v), bp = p.b_prime(v);
    const double L = l1 * l1 - l2 * l2;
    const double ch = std::cosh(l1 * u);
    const double s2b = std::sin(2.0 * bv), c2b = std::cos(2.0 * bv);
    return l1 * l1 / (ch * ch) - K * L * bp * c2b / (l1 + bp) +
           K * K * L * L * s2b * s2b / (4.0 * (l1 + bp) * (l1 + bp));
}

namespace {

double abs_curvature_integral(const HelicoidProfile& p, double u_window) {
    // |lap log rho| = |l1^2 sech^2(l1 u) + C(v)|; C is constant along u, so
    // hoist the profile evaluations out of the inner integral
    const double l1 = p.metric().lambda1(), l2 = p.metric().lambda2();
    const double K = p.K(), L = l1 * l1 - l2 * l2;
    auto inner = [&](double v) {
        const double bv = p.b(v), bp = p.b_prime(v);
        const double s2b = std::sin(2.0 * bv), c2b = std::cos(2.0 * bv);
        const double Cv = -K * L * bp * c2b / (l1 + bp) +
                          K * K * L * L * s2b * s2b / (4.0 * (l1 + bp) * (l1 + bp));
        return quad(
            [&](double u) {
                const double ch = std::cosh(l1 * u);
                return std::abs(l1 * l1 / (ch * ch) + Cv);
            },
            -u_window, u_window, 1e-6);
    };
    return quad(inner, 0.0, 2.0 * p.W(), 1e-5);
}

}  // namespace

TotalCurvature total_abs_curvature(const HelicoidProfile& p, double u_window) {
    if (!(u_window > 0.0)) throw std::invalid_argument("total_abs_curvature: window must be positive");
    const double v1 = abs_curvature_integral(p, u_window);
    const double v2 = abs_curvature_integral(p, 2.0 * u_window);
    const bool diverged = std::abs(v2 - v1) > 1e-4 * std::max(1.0, std::abs(v1));
    return {v1, diverged};
}

SurfaceGrid sample_grid(const HelicoidProfile& p, double u_min, double u_max,
                        double v_min, double v_max, int nu, int nv, int threads) {
    if (nu < 2 || nv < 2) throw std::invalid_argument("sample_grid: need at least 2x2 samples");
    SurfaceGrid grid{u_min, u_max, v_min, v_max, nu, nv, {}};
    grid.samples.resize(static_cast<std::size_t>(nu) * nv);

    auto fill_rows = [&](int iv_begin, int iv_end) {
        for (int iv = iv_begin; iv < iv_end; ++iv) {
            const double v = grid.v_at(iv);
            for (int iu = 0; iu < nu; ++iu) {
                const double u = grid.u_at(iu);
                SurfaceSample& s = grid.samples[static_cast<std::size_t>(iv) * nu + iu];
                s.pos = immerse(p, u, v);
                s.g = gauss_data(p, u, v).gv.g;
                const auto [rho2, kg] = curvature(p, u, v);
                s.rho2 = rho2;
                s.kgauss = kg;
            }
        }
    };

    const int n_threads = std::max(1, std::min(threads, nv));
    if (n_threads == 1) {
        fill_rows(0, nv);
    } else {
        std::vector<std::thread> pool;
        const int rows_per = (nv + n_threads - 1) / n_threads;
        for (int t = 0; t < n_threads; ++t) {
            const int lo = t * rows_per, hi = std::min(nv, lo + rows_per);
            if (lo >= hi) break;
            pool.emplace_back(fill_rows, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return grid;
}

}  // namespace e2surf
