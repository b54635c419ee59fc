// Command-line front end: surface generation with OBJ/CSV export, period
// solvers, cross sections, limit studies, and the verification report.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "e2surf/catenoid.hpp"
#include "e2surf/config.hpp"
#include "e2surf/errors.hpp"
#include "e2surf/helicoid.hpp"
#include "e2surf/mesh_io.hpp"
#include "e2surf/verification.hpp"

namespace {

using namespace e2surf;

int thread_cap_from_env() {
    const char* env = std::getenv("E2SURF_THREADS");
    if (!env) return 0;
    const int n = std::atoi(env);
    return n > 0 ? n : 0;
}

struct FlagState {
    std::string config_path;
    std::optional<double> lambda1, lambda2, K, c, theta;
    std::optional<double> u_min, u_max, v_min, v_max;
    std::optional<int> nu, nv;
    std::optional<double> ode_tol, quad_tol, root_tol;
    std::optional<double> level;
    std::optional<int> threads;
    std::string mesh_path, csv_path, report_path;
};

// flags override the config file, which overrides defaults
nlohmann::json merge_config(const FlagState& fl, const std::string& family) {
    nlohmann::json j;
    if (!fl.config_path.empty()) j = load_config_file(fl.config_path);
    j["family"] = family;
    auto set = [&](const char* key, const auto& opt) {
        if (opt) j[key] = *opt;
    };
    set("lambda1", fl.lambda1);
    set("lambda2", fl.lambda2);
    set("K", fl.K);
    set("c", fl.c);
    set("theta", fl.theta);
    set("section_level", fl.level);
    set("threads", fl.threads);
    if (fl.u_min || fl.u_max || fl.v_min || fl.v_max || fl.nu || fl.nv) {
        nlohmann::json g = j.contains("grid") ? j["grid"] : nlohmann::json::object();
        if (fl.u_min) g["u_min"] = *fl.u_min;
        if (fl.u_max) g["u_max"] = *fl.u_max;
        if (fl.v_min) g["v_min"] = *fl.v_min;
        if (fl.v_max) g["v_max"] = *fl.v_max;
        if (fl.nu) g["nu"] = *fl.nu;
        if (fl.nv) g["nv"] = *fl.nv;
        j["grid"] = g;
    }
    if (fl.ode_tol || fl.quad_tol || fl.root_tol) {
        nlohmann::json t = j.contains("tolerances") ? j["tolerances"] : nlohmann::json::object();
        if (fl.ode_tol) t["ode"] = *fl.ode_tol;
        if (fl.quad_tol) t["quad"] = *fl.quad_tol;
        if (fl.root_tol) t["root"] = *fl.root_tol;
        j["tolerances"] = t;
    }
    if (!fl.mesh_path.empty() || !fl.csv_path.empty() || !fl.report_path.empty()) {
        nlohmann::json o = j.contains("outputs") ? j["outputs"] : nlohmann::json::object();
        if (!fl.mesh_path.empty()) o["mesh"] = fl.mesh_path;
        if (!fl.csv_path.empty()) o["csv"] = fl.csv_path;
        if (!fl.report_path.empty()) o["report"] = fl.report_path;
        j["outputs"] = o;
    }
    return j;
}

int effective_threads(const RunConfig& cfg) {
    const int cap = thread_cap_from_env();
    if (cap > 0) return std::min(cfg.threads, cap);
    return cfg.threads;
}

void add_common_flags(CLI::App* cmd, FlagState& fl) {
    cmd->add_option("--config", fl.config_path, "JSON config file; flags override its fields");
    cmd->add_option("--lambda1", fl.lambda1, "metric parameter lambda1 (>= lambda2)");
    cmd->add_option("--lambda2", fl.lambda2, "metric parameter lambda2");
    cmd->add_option("--ode-tol", fl.ode_tol, "ODE tolerance per unit step");
    cmd->add_option("--quad-tol", fl.quad_tol, "quadrature tolerance");
    cmd->add_option("--root-tol", fl.root_tol, "root-finding tolerance");
    cmd->add_option("--threads", fl.threads, "row-parallel sampling threads");
}

void add_grid_flags(CLI::App* cmd, FlagState& fl) {
    cmd->add_option("--u-min", fl.u_min, "grid lower u");
    cmd->add_option("--u-max", fl.u_max, "grid upper u");
    cmd->add_option("--v-min", fl.v_min, "grid lower v");
    cmd->add_option("--v-max", fl.v_max, "grid upper v");
    cmd->add_option("--nu", fl.nu, "grid samples along u");
    cmd->add_option("--nv", fl.nv, "grid samples along v");
}

void export_outputs_helicoid(const RunConfig& cfg) {
    const MetricParams m(cfg.lambda1, cfg.lambda2);
    const HelicoidProfile p(m, cfg.K, cfg.tol.ode);
    std::cout << "helicoid: K=" << cfg.K << " W=" << format_sig17(p.W())
              << " x3(W)=" << format_sig17(p.x3W())
              << " period=" << format_sig17(2.0 * p.x3W()) << "\n";
    if (!cfg.mesh_path.empty()) {
        const SurfaceGrid grid =
            sample_grid(p, cfg.grid.u_min, cfg.grid.u_max, cfg.grid.v_min, cfg.grid.v_max,
                        cfg.grid.nu, cfg.grid.nv, effective_threads(cfg));
        export_mesh(grid, cfg.mesh_path);
        std::cout << "mesh: " << cfg.mesh_path << " (" << grid.samples.size() << " vertices)\n";
    }
    if (!cfg.csv_path.empty()) {
        const HelicoidSection sec = cross_section(p, cfg.section_level);
        std::vector<CurveSample> rows;
        for (int i = 0; i < 257; ++i) {
            const double u = cfg.grid.u_min + (cfg.grid.u_max - cfg.grid.u_min) * i / 256.0;
            const GroupElement q = immerse(p, u, sec.v0);
            rows.push_back({u, q.x, q.y, q.z});
        }
        export_curve(rows, cfg.csv_path);
        std::cout << "section: " << cfg.csv_path << " (x3 = " << cfg.section_level
                  << ", v0 = " << format_sig17(sec.v0) << ")\n";
    }
}

void export_outputs_catenoid(const RunConfig& cfg) {
    const MetricParams m(cfg.lambda1, cfg.lambda2);
    double theta;
    if (cfg.theta) {
        theta = *cfg.theta;
    } else {
        theta = solve_theta_tilde(m, cfg.c, std::max(cfg.tol.root, 1e-12), cfg.tol.ode);
    }
    const CatenoidProfile p(m, omega_check(m, cfg.c, theta), cfg.tol.ode);
    std::cout << "catenoid: c=" << cfg.c << " theta=" << format_sig17(theta)
              << " U=" << format_sig17(p.U()) << " f(U)=" << format_sig17(p.fU())
              << " H=" << format_sig17(p.H()) << "\n";
    if (!cfg.mesh_path.empty()) {
        const SurfaceGrid grid =
            sample_grid(p, cfg.grid.u_min, cfg.grid.u_max, cfg.grid.v_min, cfg.grid.v_max,
                        cfg.grid.nu, cfg.grid.nv, effective_threads(cfg));
        export_mesh(grid, cfg.mesh_path);
        std::cout << "mesh: " << cfg.mesh_path << " (" << grid.samples.size() << " vertices)\n";
    }
    if (!cfg.csv_path.empty()) {
        const CrossSection cs = cross_section(p, cfg.section_level, 257);
        std::vector<CurveSample> rows;
        for (const auto& s : cs.samples) {
            rows.push_back({s.u, s.gamma.x, s.gamma.y, s.gamma.z});
        }
        export_curve(rows, cfg.csv_path);
        std::cout << "section: " << cfg.csv_path << " (mu = " << cfg.section_level << ")\n";
    }
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal surface families in the rigid-motion group cover: "
                 "helicoids and catenoids with period solvers and verification"};
    app.require_subcommand(1);

    FlagState fl;

    // helicoid [solve-period]
    auto* hel = app.add_subcommand("helicoid", "generate a helicoid (mesh/section export)");
    add_common_flags(hel, fl);
    add_grid_flags(hel, fl);
    hel->add_option("--K", fl.K, "helicoid parameter, 0 < |K| < 1");
    hel->add_option("--C", fl.level, "section plane x3 = C for --csv");
    hel->add_option("--mesh", fl.mesh_path, "write a Wavefront OBJ mesh");
    hel->add_option("--csv", fl.csv_path, "write the x3 = C section as CSV");
    double period_T = 0.0;
    auto* solveT = hel->add_subcommand("solve-period", "find K whose translation period is T");
    solveT->add_option("--T", period_T, "target period")->required();

    // catenoid [solve-theta]
    auto* cat = app.add_subcommand("catenoid", "generate a catenoid (mesh/section export)");
    add_common_flags(cat, fl);
    add_grid_flags(cat, fl);
    cat->add_option("--c", fl.c, "catenoid parameter c > 0");
    cat->add_option("--theta", fl.theta, "override theta (skips the period solve)");
    cat->add_option("--mu", fl.level, "section plane x3 = lambda1*lambda2*mu for --csv");
    cat->add_option("--mesh", fl.mesh_path, "write a Wavefront OBJ mesh");
    cat->add_option("--csv", fl.csv_path, "write the mu-section as CSV");
    auto* solveTheta = cat->add_subcommand("solve-theta", "solve the period problem for theta");

    // cross-section
    auto* sec = app.add_subcommand("cross-section", "export a planar section as CSV");
    add_common_flags(sec, fl);
    std::string sec_family = "helicoid";
    sec->add_option("--family", sec_family, "helicoid or catenoid")->required();
    sec->add_option("--K", fl.K, "helicoid parameter");
    sec->add_option("--c", fl.c, "catenoid parameter");
    sec->add_option("--level", fl.level, "C (helicoid) or mu (catenoid)");
    sec->add_option("--csv", fl.csv_path, "output CSV path")->required();

    // verify
    auto* ver = app.add_subcommand("verify", "run the invariant suite, write a JSON report");
    add_common_flags(ver, fl);
    add_grid_flags(ver, fl);
    std::string ver_family = "helicoid";
    ver->add_option("--family", ver_family, "helicoid or catenoid")->required();
    ver->add_option("--K", fl.K, "helicoid parameter");
    ver->add_option("--c", fl.c, "catenoid parameter");
    ver->add_option("--theta", fl.theta, "catenoid theta override (negative control)");
    ver->add_option("--level", fl.level, "section level used by section checks");
    ver->add_option("--report", fl.report_path, "report path (JSON)");

    // limit-study
    auto* lim = app.add_subcommand("limit-study", "rescaled limits and section shrinking");
    add_common_flags(lim, fl);
    std::string c_list_text = "10,50,100";
    bool do_shrink = false;
    lim->add_option("--c-list", c_list_text, "comma-separated c values");
    lim->add_flag("--shrink", do_shrink, "also report x3=0 section radii");
    lim->add_option("--csv", fl.csv_path, "optional CSV output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (hel->parsed()) {
            nlohmann::json j = merge_config(fl, "helicoid");
            const RunConfig cfg = parse_config(j);
            const MetricParams m(cfg.lambda1, cfg.lambda2);
            if (solveT->parsed()) {
                const double K = solve_K_for_period(m, period_T, std::max(cfg.tol.root, 1e-10));
                const HelicoidProfile p(m, K, cfg.tol.ode);
                std::cout << "K=" << format_sig17(K)
                          << " period=" << format_sig17(2.0 * p.x3W())
                          << " W=" << format_sig17(p.W()) << "\n";
            } else {
                export_outputs_helicoid(cfg);
            }
        } else if (cat->parsed()) {
            nlohmann::json j = merge_config(fl, "catenoid");
            const RunConfig cfg = parse_config(j);
            const MetricParams m(cfg.lambda1, cfg.lambda2);
            if (solveTheta->parsed()) {
                const double tt = solve_theta_tilde(m, cfg.c, std::max(cfg.tol.root, 1e-12),
                                                    cfg.tol.ode);
                const CatenoidProfile p(m, omega_check(m, cfg.c, tt), cfg.tol.ode);
                std::cout << "theta_tilde=" << format_sig17(tt)
                          << " H=" << format_sig17(p.H()) << " U=" << format_sig17(p.U())
                          << " Z=" << format_sig17(2.0 * p.U()) << ""
                          << format_sig17(-2.0 * p.fU() / cfg.c) << "i\n";
            } else {
                export_outputs_catenoid(cfg);
            }
        } else if (sec->parsed()) {
            nlohmann::json j = merge_config(fl, sec_family);
            const RunConfig cfg = parse_config(j);
            if (cfg.family == Family::helicoid) {
                export_outputs_helicoid(cfg);
            } else {
                export_outputs_catenoid(cfg);
            }
        } else if (ver->parsed()) {
            nlohmann::json j = merge_config(fl, ver_family);
            const RunConfig cfg = parse_config(j);
            const VerificationReport rep = run_verification(cfg);
            if (!cfg.report_path.empty()) write_report(rep, cfg.report_path);
            for (const auto& c : rep.checks) {
                std::cout << (c.pass ? "PASS" : "FAIL") << ' ' << c.name << " value="
                          << format_sig17(c.value) << " tol=" << format_sig17(c.tol);
                if (!c.error.empty()) std::cout << " error=" << c.error;
                std::cout << "\n";
            }
            std::cout << "summary: " << rep.passed() << "/" << rep.total() << " passed\n";
            return rep.all_passed() ? 0 : 1;
        } else if (lim->parsed()) {
            nlohmann::json j = merge_config(fl, "catenoid");
            const RunConfig cfg = parse_config(j);
            const MetricParams m(cfg.lambda1, cfg.lambda2);
            const std::vector<double> cs = parse_list(c_list_text);
            std::vector<double> grid;
            for (int i = 0; i < 5; ++i) grid.push_back(-1.0 + 0.5 * i);
            std::vector<CurveSample> rows;
            if (do_shrink) {
                std::cout << "c,theta_tilde,max_radius\n";
                for (const auto& r : intersection_shrink_study(m, cs)) {
                    std::cout << format_sig17(r.c) << ',' << format_sig17(r.theta_tilde) << ','
                              << format_sig17(r.max_radius) << "\n";
                    rows.push_back({r.c, r.theta_tilde, r.max_radius, 0.0});
                }
            } else {
                std::cout << "c,theta_tilde,sup_deviation\n";
                for (const auto& r : limit_study(m, cs, grid, grid)) {
                    std::cout << format_sig17(r.c) << ',' << format_sig17(r.theta_tilde) << ','
                              << format_sig17(r.deviation) << "\n";
                    rows.push_back({r.c, r.theta_tilde, r.deviation, 0.0});
                }
            }
            if (!cfg.csv_path.empty()) export_curve(rows, cfg.csv_path);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
