#include "e2surf/catenoid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace e2surf {

namespace {

struct Hyper {
    double ch, sh;
};

// cosh/sinh from a single exponential of |A|, sign carried explicitly.
Hyper hyper(double A) {
    const double E = std::exp(std::abs(A));
    const double Ei = 1.0 / E;
    const double sh = 0.5 * (E - Ei);
    return {0.5 * (E + Ei), A < 0.0 ? -sh : sh};
}

double weight_of_phi(const MetricParams& m, double phi) {
    const double cp = std::cos(phi), sp = std::sin(phi);
    return m.lambda1() * m.lambda1() * cp * cp + m.lambda2() * m.lambda2() * sp * sp;
}

double P_of_B(const OmegaPoint& op, double B) {
    return op.c * op.c + 2.0 * std::cos(op.theta) * B - op.D * op.D * B * B;
}

// min and max of P over B in [lambda2^2, lambda1^2]
std::pair<double, double> P_range(const MetricParams& m, const OmegaPoint& op) {
    const double Blo = m.lambda2() * m.lambda2();
    const double Bhi = m.lambda1() * m.lambda1();
    const double pa = P_of_B(op, Blo), pb = P_of_B(op, Bhi);
    double pmin = std::min(pa, pb);
    double pmax = std::max(pa, pb);
    if (op.D != 0.0) {
        const double Bstar = std::cos(op.theta) / (op.D * op.D);
        if (Bstar > Blo && Bstar < Bhi) pmax = std::max(pmax, P_of_B(op, Bstar));
    }
    return {pmin, pmax};
}

// state: (phi, f, G)
OdeRhs profile_rhs(const MetricParams& m, const OmegaPoint& op) {
    return [m, op](double, const std::vector<double>& y, std::vector<double>& dy) {
        const double B = weight_of_phi(m, y[0]);
        const double P = P_of_B(op, B);
        if (!(P > 0.0)) {
            throw PositivityViolated("catenoid profile: P(B) <= 0 at phi = " +
                                     std::to_string(y[0]));
        }
        const double pp = std::sqrt(P);
        dy[0] = pp;
        dy[1] = op.D * B;
        dy[2] = (op.c - pp) / B;
    };
}

// forward solve on [0, just past U]; returns (U, f(U), G(U))
struct HalfSolve {
    double U, fU, GU;
};

HalfSolve solve_half(const MetricParams& m, const OmegaPoint& op, double ode_tol) {
    const auto rhs = profile_rhs(m, op);
    const auto [pmin, pmax] = P_range(m, op);
    (void)pmin;
    const double chunk0 = M_PI / std::sqrt(pmax) + 0.5;
    const OdeSolution s = integrate_ode_to_level(rhs, {0.0, 0.0, 0.0}, 0.0, 0, M_PI,
                                                 chunk0, ode_tol, 1e7);
    const double U = s.first_crossing(0, M_PI);
    return {U, s.value(U, 1), s.value(U, 2)};
}

}  // namespace

OmegaPoint omega_check(const MetricParams& m, double c, double theta) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw std::invalid_argument("omega_check: c must be positive and finite");
    }
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("omega_check: theta must be finite");
    }
    const double l1 = m.lambda1();
    const double theta_plus = (c > std::sqrt(2.0) * l1)
                                  ? M_PI
                                  : std::acos(1.0 - c * c / (l1 * l1));
    if (std::abs(theta) >= theta_plus) {
        throw OutsideOmega("(c, theta) = (" + std::to_string(c) + ", " + std::to_string(theta) +
                           ") outside the admissible range |theta| < " + std::to_string(theta_plus));
    }
    return {c, theta, theta_plus, std::sin(theta) / c};
}

CatenoidProfile::CatenoidProfile(const MetricParams& m, const OmegaPoint& op, double ode_tol)
    : m_(m), op_(op) {
    const auto [pmin, pmax] = P_range(m_, op_);
    if (!(pmin > 0.0)) {
        throw PositivityViolated("catenoid profile: P not positive on the weight range");
    }
    a1_ = std::sqrt(pmin);
    a2_ = std::sqrt(pmax);

    const HalfSolve half = solve_half(m_, op_, ode_tol);
    U_ = half.U;
    const double span = 2.0 * U_ + 1.0;
    path_ = std::make_shared<const OdeSolution>(
        integrate_ode_bidirectional(profile_rhs(m_, op_), {0.0, 0.0, 0.0}, -span, span, ode_tol));
    // re-locate the crossing on the final dense path for consistency
    U_ = path_->first_crossing(0, M_PI);
    fU_ = path_->value(U_, 1);
    GU_ = path_->value(U_, 2);
    H_ = op_.D * fU_ + op_.c * GU_;
}

std::pair<double, double> CatenoidProfile::reduced(double u) const {
    if (u >= path_->t_min() && u <= path_->t_max()) return {u, 0.0};
    const double k = std::floor(u / U_ + 0.5);
    return {u - k * U_, k};
}

double CatenoidProfile::phi(double u) const {
    const auto [ur, k] = reduced(u);
    return path_->value(ur, 0) + k * M_PI;
}

double CatenoidProfile::B(double u) const { return weight_of_phi(m_, phi(u)); }

double CatenoidProfile::phi_prime(double u) const {
    const double P = P_of_B(op_, B(u));
    if (!(P > 0.0)) throw PositivityViolated("phi_prime: P(B) <= 0");
    return std::sqrt(P);
}

double CatenoidProfile::phi_second(double u) const {
    const double L = m_.lambda1() * m_.lambda1() - m_.lambda2() * m_.lambda2();
    const double Bu = B(u);
    return L * (op_.D * op_.D * Bu - std::cos(op_.theta)) * std::sin(2.0 * phi(u));
}

double CatenoidProfile::f(double u) const {
    const auto [ur, k] = reduced(u);
    return path_->value(ur, 1) + k * fU_;
}

double CatenoidProfile::f_prime(double u) const { return op_.D * B(u); }

double CatenoidProfile::f_second(double u) const {
    const double L = m_.lambda1() * m_.lambda1() - m_.lambda2() * m_.lambda2();
    return -L * op_.D * phi_prime(u) * std::sin(2.0 * phi(u));
}

double CatenoidProfile::G(double u) const {
    const auto [ur, k] = reduced(u);
    return path_->value(ur, 2) + k * GU_;
}

double CatenoidProfile::G_prime(double u) const {
    return (op_.c - phi_prime(u)) / B(u);
}

CatenoidProfile solve_profile(const OmegaPoint& op, const MetricParams& m, double ode_tol) {
    return CatenoidProfile(m, op, ode_tol);
}

double H_value(const OmegaPoint& op, const MetricParams& m, double ode_tol) {
    const HalfSolve half = solve_half(m, op, ode_tol);
    return op.D * half.fU + op.c * half.GU;
}

double H_value_integral(const OmegaPoint& op, const MetricParams& m, double tol) {
    const double l1sq = m.lambda1() * m.lambda1();
    const double l2sq = m.lambda2() * m.lambda2();
    const double c = op.c, D = op.D, ct = std::cos(op.theta);
    return quad_singular(
        [&](double x) {
            const double B = l1sq * x * x + l2sq * (1.0 - x * x);
            const double P = P_of_B(op, B);
            const double sq = std::sqrt(P);
            return (D * D * B * (2.0 * c + sq) - 2.0 * c * ct) / ((c + sq) * sq);
        },
        tol);
}

double solve_theta_tilde(const MetricParams& m, double c, double tol, double ode_tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("solve_theta_tilde: tol must be positive");
    const OmegaPoint probe = omega_check(m, c, 0.0);
    const double theta_plus = probe.theta_plus;
    auto H = [&](double theta) {
        return H_value(omega_check(m, c, theta), m, ode_tol);
    };

    const double lo = std::min(tol, 1e-4);
    double hi = std::min(M_PI / 2.0, theta_plus) - 1e-9;
    while (H(hi) <= 0.0) {
        hi = 0.5 * (hi + theta_plus);
        if (theta_plus - hi < 1e-12) {
            throw BracketingFailed("solve_theta_tilde: no sign change below theta_plus");
        }
    }
    return find_root(H, lo, hi, tol).root;
}

GroupElement immerse(const CatenoidProfile& p, double u, double v) {
    const MetricParams& m = p.metric();
    const double l1 = m.lambda1(), l2 = m.lambda2();
    const double c = p.omega().c, D = p.omega().D;
    const double ll = l1 * l2;

    const double phi = p.phi(u);
    const double fp = p.f_prime(u);
    const double pp = p.phi_prime(u);
    const double B = p.B(u);
    const double A = p.f(u) + c * v;
    const double x3 = -ll * D * v + ll * p.G(u);

    const auto [chA, shA] = hyper(A);
    const double cx = std::cos(x3), sx = std::sin(x3);
    const double M1 = c * cx * chA - ll * D * sx * shA;
    const double M2 = c * cx * shA - ll * D * sx * chA;
    const double M3 = c * sx * shA + ll * D * cx * chA;
    const double M4 = c * sx * chA + ll * D * cx * shA;

    const double cp = std::cos(phi), sp = std::sin(phi);
    const double den = (c * c + ll * ll * D * D) * B;
    const double x1 = -(fp * cp * M1 / l1 - (c - pp) * sp * M2 / l1 -
                        (c - pp) * cp * M3 / l2 - fp * sp * M4 / l2) / den;
    const double x2 = -(fp * cp * M4 / l1 - (c - pp) * sp * M3 / l1 +
                        (c - pp) * cp * M2 / l2 + fp * sp * M1 / l2) / den;
    return {x1, x2, x3};
}

GaussMapData gauss_data(const CatenoidProfile& p, double u, double v) {
    const double c = p.omega().c;
    const double phi = p.phi(u), fp = p.f_prime(u), pp = p.phi_prime(u);
    const double fpp = p.f_second(u), ppp = p.phi_second(u);
    const double A = p.f(u) + c * v;
    const Complex g = std::exp(A) * Complex{std::cos(phi), std::sin(phi)};
    const Complex gz = 0.5 * Complex{fp, pp - c} * g;
    const Complex gzbar = 0.5 * Complex{fp, pp + c} * g;
    const Complex gzzbar =
        0.25 * Complex{fp * fp - pp * pp + fpp + c * c, ppp + 2.0 * fp * pp} * g;
    return {GaussMapValue{g, gz, gzbar}, gzzbar};
}

PeriodVector period_vector(const CatenoidProfile& p, double tol) {
    if (std::abs(p.H()) > tol) {
        throw PeriodObstruction("period_vector: H(c, theta) = " + std::to_string(p.H()) +
                                " is not zero; theta is not at the period root");
    }
    return {Complex{2.0 * p.U(), -2.0 * p.fU() / p.omega().c}};
}

CrossSection cross_section(const CatenoidProfile& p, double mu, int n) {
    if (n < 2) throw std::invalid_argument("cross_section: need at least 2 samples");
    const MetricParams& m = p.metric();
    const double l1 = m.lambda1(), l2 = m.lambda2();
    const double c = p.omega().c, D = p.omega().D;
    if (D == 0.0) {
        throw std::invalid_argument("cross_section: section parametrization requires theta != 0");
    }
    const double ll = l1 * l2;

    CrossSection cs;
    cs.mu = mu;
    cs.U = p.U();
    cs.lambda_ratio = l2 / l1;
    cs.samples.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double u = 2.0 * p.U() * i / (n - 1);
        const double phi = p.phi(u);
        const double fp = p.f_prime(u);
        const double pp = p.phi_prime(u);
        const double B = p.B(u);
        const double v = (p.G(u) - mu) / D;
        const double A = p.f(u) + c * v;
        const auto [chA, shA] = hyper(A);
        const double cp = std::cos(phi), sp = std::sin(phi);

        const double J1 = fp * cp * chA - (c - pp) * sp * shA;
        const double J2 = fp * cp * shA - (c - pp) * sp * chA;
        const double J3 = fp * sp * chA + (c - pp) * cp * shA;
        const double J4 = fp * sp * shA + (c - pp) * cp * chA;
        const double den = (c * c + ll * ll * D * D) * B;

        CrossSectionSample s;
        s.u = u;
        s.gamma = immerse(p, u, v);
        s.xt1 = -(c * J1 / l1 - l1 * D * J4) / den;
        s.xt2 = -(c * J3 / l2 + l2 * D * J2) / den;
        const double E = fp * fp + (c - pp) * (c - pp);
        s.xt1_prime = E * sp * chA / (l1 * D * B * B);
        s.xt2_prime = -E * cp * chA / (l2 * D * B * B);
        s.phi = phi;
        cs.samples.push_back(s);
    }
    return cs;
}

ConvexityResult convexity_check(const CrossSection& cs) {
    // collect samples whose parameter reduces into the open half-window
    // (-U/2, U/2), keeping away from the tan(phi) poles at the ends
    const double U = cs.U;
    struct Pt {
        double u_red, slope, xt2p;
    };
    std::vector<Pt> pts;
    for (const auto& s : cs.samples) {
        double ur = s.u - 2.0 * U * std::floor(s.u / (2.0 * U) + 0.5);
        if (std::abs(ur) < 0.5 * U * (1.0 - 1e-9)) {
            double phi_red = s.phi - M_PI * std::floor(s.phi / M_PI + 0.5);
            pts.push_back({ur, -cs.lambda_ratio * std::tan(phi_red), s.xt2_prime});
        }
    }
    if (pts.size() < 3) {
        throw InsufficientSamples("convexity_check: fewer than 3 samples in the half-window");
    }
    std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) { return a.u_red < b.u_red; });

    double worst_drop = std::numeric_limits<double>::infinity();
    double worst_xt2 = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        worst_xt2 = std::max(worst_xt2, pts[i].xt2p);
        if (i > 0) worst_drop = std::min(worst_drop, pts[i - 1].slope - pts[i].slope);
    }
    return {worst_drop > 0.0 && worst_xt2 < 0.0, worst_drop, worst_xt2};
}

std::pair<double, double> curvature(const CatenoidProfile& p, double u, double v) {
    const MetricParams& m = p.metric();
    const double L = m.lambda1() * m.lambda1() - m.lambda2() * m.lambda2();
    const double c = p.omega().c;
    const double phi = p.phi(u), fp = p.f_prime(u), pp = p.phi_prime(u);
    const double B = p.B(u);
    const double A = p.f(u) + c * v;
    const double ch = std::cosh(A), th = std::tanh(A);
    const double E = fp * fp + (c - pp) * (c - pp);
    const double rho2 = E * ch * ch / (B * B);
    const double s2p = std::sin(2.0 * phi), c2p = std::cos(2.0 * phi);
    const double kg = -B * B * (c * c + fp * fp) / (ch * ch * ch * ch * E) -
                      L * L * s2p * s2p / (4.0 * ch * ch) -
                      L * B * pp * ((pp - c) * c2p - fp * th * s2p) / (ch * ch * E);
    return {rho2, kg};
}

double laplacian_log_rho(const CatenoidProfile& p, double u, double v) {
    const MetricParams& m = p.metric();
    const double L = m.lambda1() * m.lambda1() - m.lambda2() * m.lambda2();
    const double c = p.omega().c;
    const double phi = p.phi(u), fp = p.f_prime(u), pp = p.phi_prime(u);
    const double B = p.B(u);
    const double A = p.f(u) + c * v;
    const double ch = std::cosh(A), th = std::tanh(A);
    const double E = fp * fp + (c - pp) * (c - pp);
    const double s2p = std::sin(2.0 * phi), c2p = std::cos(2.0 * phi);
    return (c * c + fp * fp) / (ch * ch) + L * L * s2p * s2p * E / (4.0 * B * B) +
           L * pp * ((pp - c) * c2p - fp * th * s2p) / B;
}

namespace {

double abs_curvature_integral(const CatenoidProfile& p, double v_window) {
    // Along a fixed u the integrand takes the form
    // |P sech^2(A) + C + S tanh(A)| with A = f(u) + c v; hoist the profile
    // evaluations out of the inner integral.
    const MetricParams& m = p.metric();
    const double L = m.lambda1() * m.lambda1() - m.lambda2() * m.lambda2();
    const double c = p.omega().c;
    auto inner = [&](double u) {
        const double phi = p.phi(u), fp = p.f_prime(u), pp = p.phi_prime(u);
        const double B = p.B(u), fu = p.f(u);
        const double s2p = std::sin(2.0 * phi), c2p = std::cos(2.0 * phi);
        const double E = fp * fp + (c - pp) * (c - pp);
        const double P = c * c + fp * fp;
        const double C = L * L * s2p * s2p * E / (4.0 * B * B) + L * pp * (pp - c) * c2p / B;
        const double S = -L * pp * fp * s2p / B;
        return quad(
            [&](double v) {
                const double A = fu + c * v;
                const double ch = std::cosh(A);
                return std::abs(P / (ch * ch) + C + S * std::tanh(A));
            },
            -v_window, v_window, 1e-6);
    };
    return quad(inner, -p.U(), p.U(), 1e-5);
}

}  // namespace

TotalCurvature2 total_abs_curvature(const CatenoidProfile& p, double v_window) {
    if (v_window < 0.0) throw std::invalid_argument("total_abs_curvature: negative window");
    if (v_window == 0.0) return {0.0, false};
    const double v1 = abs_curvature_integral(p, v_window);
    const double v2 = abs_curvature_integral(p, 2.0 * v_window);
    const bool diverged = std::abs(v2 - v1) > 1e-4 * std::max(1.0, std::abs(v1));
    return {v1, diverged};
}

std::vector<LimitRow> limit_study(const MetricParams& m, const std::vector<double>& c_list,
                                  const std::vector<double>& u_tilde,
                                  const std::vector<double>& v_tilde) {
    std::vector<LimitRow> rows;
    rows.reserve(c_list.size());
    for (double c : c_list) {
        const double tt = solve_theta_tilde(m, c, 1e-12);
        const CatenoidProfile p(m, omega_check(m, c, tt));
        double dev = 0.0;
        for (double ut : u_tilde) {
            for (double vt : v_tilde) {
                const GroupElement X = immerse(p, ut / c, (2.0 * std::log(c) + vt) / c);
                const double e1 = X.x + std::cos(ut) * std::exp(vt) / (2.0 * m.lambda1());
                const double e2 = X.y + std::sin(ut) * std::exp(vt) / (2.0 * m.lambda2());
                const double e3 = X.z;
                dev = std::max({dev, std::abs(e1), std::abs(e2), std::abs(e3)});
            }
        }
        rows.push_back({c, tt, dev});
    }
    return rows;
}

std::vector<ShrinkRow> intersection_shrink_study(const MetricParams& m,
                                                 const std::vector<double>& c_list,
                                                 int n_samples) {
    std::vector<ShrinkRow> rows;
    rows.reserve(c_list.size());
    for (double c : c_list) {
        const double tt = solve_theta_tilde(m, c, 1e-12);
        const CatenoidProfile p(m, omega_check(m, c, tt));
        const CrossSection cs = cross_section(p, 0.0, n_samples);
        double radius = 0.0;
        for (const auto& s : cs.samples) {
            radius = std::max(radius, std::hypot(s.gamma.x, s.gamma.y));
        }
        rows.push_back({c, tt, radius});
    }
    return rows;
}

SurfaceGrid sample_grid(const CatenoidProfile& p, double u_min, double u_max,
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
