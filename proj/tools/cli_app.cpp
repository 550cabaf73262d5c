#include "cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "zetasieve/appendixc.hpp"
#include "zetasieve/critline.hpp"
#include "zetasieve/errors.hpp"
#include "zetasieve/funceq.hpp"
#include "zetasieve/log.hpp"
#include "zetasieve/numeric_util.hpp"
#include "zetasieve/specfun.hpp"
#include "zetasieve/version.hpp"
#include "zetasieve/zerofind.hpp"

namespace zs::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr std::uint64_t kGridSeed = 0x5eed0dd5ull;

std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string iso_now() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

struct OutputSink {
    fs::path dir;
    std::vector<std::string> written;

    explicit OutputSink(const std::string& out_dir) : dir(out_dir) {
        fs::create_directories(dir);
    }

    fs::path write(const std::string& name, const std::string& content) {
        fs::path p = dir / name;
        std::ofstream f(p, std::ios::binary);
        f << content;
        f.close();
        written.push_back(p.string());
        return p;
    }

    void manifest(const std::string& command, const json& config) {
        json m;
        m["command"] = command;
        m["config"] = config;
        m["started_at"] = iso_now();
        m["tool_version"] = kVersion;
        m["outputs"] = written;
        std::ofstream f(dir / "manifest.json", std::ios::binary);
        f << m.dump(1) << "\n";
    }
};

// ---------------------------------------------------------------- verify --

struct GridSpec {
    double sigma0 = 0.05, sigma1 = 0.95;
    double rho0 = 0.5, rho1 = 80.0;
    int n = 200;
};

bool parse_grid(const std::string& text, GridSpec& g) {
    return std::sscanf(text.c_str(), "%lf:%lf:%lf:%lf:%d", &g.sigma0, &g.sigma1,
                       &g.rho0, &g.rho1, &g.n) == 5 &&
           g.n >= 0 && g.sigma0 <= g.sigma1 && g.rho0 <= g.rho1;
}

struct IdentityResult {
    std::string name;
    long n_points = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = true;

    void observe(double r) {
        ++n_points;
        max_residual = std::max(max_residual, std::fabs(r));
        pass = max_residual <= tolerance;
    }
};

int cmd_verify(const GridSpec& grid, double func_tol, bool no_logspace,
               const std::string& out_dir) {
    funceq::EvalPolicy policy;
    policy.allow_logspace = !no_logspace;

    IdentityResult functional{"functional_equation_residual", 0, 0.0, func_tol, true};
    IdentityResult pq_norm{"pq_norm_identity", 0, 0.0, 1e-9, true};
    IdentityResult chi_cross{"chi_factor_cross_representation", 0, 0.0, 1e-10, true};
    IdentityResult gamma0{"gamma_sq_sigma0", 0, 0.0, 1e-10, true};
    IdentityResult gamma_half{"gamma_sq_sigma_half", 0, 0.0, 1e-10, true};
    IdentityResult gamma1{"gamma_sq_sigma1", 0, 0.0, 1e-10, true};
    IdentityResult factor_sum{"critline_dr_plus_di", 0, 0.0, 0.0, true};
    IdentityResult factor_nsq{"critline_nsq_eq_drdi", 0, 0.0, 1e-9, true};
    IdentityResult factor_range{"critline_dr_in_unit_interval", 0, 0.0, 1e-9, true};
    IdentityResult endpoints{"appendixc_endpoint_closed_forms", 0, 0.0, 1e-9, true};

    json report;
    try {
        SplitMix64 rng(kGridSeed);
        for (int i = 0; i < grid.n; ++i) {
            StripPoint p{rng.uniform(grid.sigma0, grid.sigma1),
                         rng.uniform(grid.rho0, grid.rho1)};
            funceq::DecompositionQuad d = funceq::decompose(p);
            funceq::PQCoefficients pq = funceq::pq_coefficients(p, policy);
            const double denom = 1.0 + std::fabs(d.zr) + std::fabs(d.zi) +
                                 std::fabs(d.zr_ref) + std::fabs(d.zi_ref);
            const double ri = d.zi_ref + pq.q * d.zi + pq.p * d.zr;
            const double rr = d.zr_ref + pq.p * d.zi - pq.q * d.zr;
            functional.observe(std::max(std::fabs(ri), std::fabs(rr)) / denom);

            pq_norm.observe(funceq::pq_norm_residual(p, policy));

            Cplx chi = funceq::chi_factor(p, policy);
            chi_cross.observe(std::abs(Cplx(pq.q, pq.p) - chi) / std::abs(chi));
        }

        const double pi = 3.141592653589793238462643383279503;
        for (double rho : {0.5, 1.0, 2.0, 5.0, 10.0}) {
            double lhs0 = std::norm(specfun::gamma_complex({0.0, rho}));
            double rhs0 = pi / (rho * std::sinh(pi * rho));
            gamma0.observe((lhs0 - rhs0) / rhs0);

            double lhs_h = std::norm(specfun::gamma_complex({0.5, rho}));
            double rhs_h = pi / std::cosh(pi * rho);
            gamma_half.observe((lhs_h - rhs_h) / rhs_h);

            double lhs1 = std::norm(specfun::gamma_complex({1.0, rho}));
            double rhs1 = pi * rho / std::sinh(pi * rho);
            gamma1.observe((lhs1 - rhs1) / rhs1);
        }

        for (int k = 10; k <= 1000; ++k) {
            double rho = 0.1 * k;
            critline::CriticalLineFactors f = critline::factors(rho, policy);
            factor_sum.observe(f.dr + f.di - 1.0);
            factor_nsq.observe(f.n * f.n - f.dr * f.di);
            factor_range.observe(std::max(0.0, std::max(-f.dr, f.dr - 1.0)));
        }

        for (double rho = 0.5; rho <= 50.0; rho += 0.5) {
            auto [l0, l1] = appendixc::l_endpoints(rho);
            endpoints.observe(appendixc::l_function({0.0, rho}) - l0);
            endpoints.observe(appendixc::l_function({1.0, rho}) - l1);
        }

        appendixc::DlCalibration cal = appendixc::calibrate_dl_coefficient();
        report["calibration"] = {
            {"fitted_coefficient", cal.fitted},
            {"fit_spread", cal.fit_spread},
            {"printed_coefficient", appendixc::kDlSigmaPrinted},
            {"printed_matches", cal.printed_matches},
            {"adopted_coefficient", cal.adopted},
            {"chosen", cal.printed_matches ? "printed" : "calibrated"},
            {"max_fd_mismatch", cal.max_fd_mismatch},
            {"tolerance", 1e-6},
            {"pass", cal.adopted_matches && cal.max_fd_mismatch <= 1e-6}};
    } catch (const Error& e) {
        log::error("verify aborted: %s", e.what());
        std::fprintf(stderr, "evaluation error: %s\n", e.what());
        return kExitEvalError;
    }

    bool all_pass = report["calibration"]["pass"].get<bool>();
    report["identities"] = json::array();
    for (const IdentityResult* r :
         {&functional, &pq_norm, &chi_cross, &gamma0, &gamma_half, &gamma1,
          &factor_sum, &factor_nsq, &factor_range, &endpoints}) {
        report["identities"].push_back({{"name", r->name},
                                        {"n_points", r->n_points},
                                        {"max_residual", r->max_residual},
                                        {"tolerance", r->tolerance},
                                        {"pass", r->pass}});
        all_pass = all_pass && r->pass;
    }
    report["overall_pass"] = all_pass;
    report["tool_version"] = kVersion;
    report["grid"] = {{"sigma0", grid.sigma0}, {"sigma1", grid.sigma1},
                      {"rho0", grid.rho0},     {"rho1", grid.rho1},
                      {"n", grid.n}};

    OutputSink sink(out_dir);
    sink.write("verify_report.json", report.dump(1) + "\n");
    sink.manifest("verify", report["grid"]);

    for (const auto& ident : report["identities"]) {
        log::info("%-34s max %.3e tol %.3e %s", ident["name"].get<std::string>().c_str(),
                  ident["max_residual"].get<double>(), ident["tolerance"].get<double>(),
                  ident["pass"].get<bool>() ? "ok" : "FAIL");
    }
    std::printf("verify: %s (report: %s)\n", all_pass ? "all identities pass" : "FAILURES",
                (sink.dir / "verify_report.json").string().c_str());
    return all_pass ? kExitOk : kExitIdentityFailure;
}

// ----------------------------------------------------------------- zeros --

std::string records_csv(const std::vector<zerofind::ZeroRecord>& records) {
    std::string out = "rho,kind,residual,zeta_mag,bracket_lo,bracket_hi,iterations\n";
    for (const auto& r : records) {
        out += fmt_g(r.rho);
        out += ',';
        out += zerofind::to_string(r.kind);
        out += ',';
        out += fmt_g(r.residual);
        out += ',';
        out += fmt_g(r.zeta_mag);
        out += ',';
        out += fmt_g(r.bracket.first);
        out += ',';
        out += fmt_g(r.bracket.second);
        out += ',';
        out += std::to_string(r.iterations);
        out += '\n';
    }
    return out;
}

json records_json(const zerofind::ScanConfig& cfg, const zerofind::CampaignResult& res) {
    json j;
    j["tool_version"] = kVersion;
    j["config"] = {{"rho_min", cfg.rho_min}, {"rho_max", cfg.rho_max},
                   {"step", cfg.step},       {"refine_tol", cfg.refine_tol},
                   {"classify_tol", cfg.classify_tol}};
    j["records"] = json::array();
    for (const auto& r : res.records) {
        j["records"].push_back({{"rho", r.rho},
                                {"kind", zerofind::to_string(r.kind)},
                                {"residual", r.residual},
                                {"zeta_mag", r.zeta_mag},
                                {"bracket_lo", r.bracket.first},
                                {"bracket_hi", r.bracket.second},
                                {"iterations", r.iterations}});
    }
    j["failures"] = res.failures;
    return j;
}

int cmd_zeros(const zerofind::ScanConfig& cfg, const std::string& format,
              const std::string& out_dir) {
    zerofind::CampaignResult res;
    std::string fig1 = "rho,eq24_value,eq30_value\n";
    try {
        res = zerofind::run_campaign(cfg);
        for (long k = 0;; ++k) {
            double rho = cfg.rho_min + static_cast<double>(k) * cfg.step;
            if (rho > cfg.rho_max) break;
            fig1 += fmt_g(rho);
            fig1 += ',';
            fig1 += fmt_g(critline::half_zero_function(rho));
            fig1 += ',';
            fig1 += fmt_g(critline::full_zero_function(rho, 1));
            fig1 += '\n';
        }
    } catch (const Error& e) {
        std::fprintf(stderr, "evaluation error: %s\n", e.what());
        return kExitEvalError;
    }

    for (const auto& f : res.failures) log::warn("campaign: %s", f.c_str());

    OutputSink sink(out_dir);
    if (format == "csv" || format == "both") {
        sink.write("zero_records.csv", records_csv(res.records));
    }
    if (format == "json" || format == "both") {
        sink.write("zero_records.json", records_json(cfg, res).dump(1) + "\n");
    }
    sink.write("figure1.csv", fig1);
    sink.manifest("zeros", {{"rho_min", cfg.rho_min},
                            {"rho_max", cfg.rho_max},
                            {"step", cfg.step},
                            {"refine_tol", cfg.refine_tol},
                            {"format", format}});

    int full = 0;
    for (const auto& r : res.records) {
        if (r.kind == zerofind::ZeroKind::FullZero) ++full;
    }
    std::printf("zeros: %zu records (%d full zeros) in [%g, %g]; outputs in %s\n",
                res.records.size(), full, cfg.rho_min, cfg.rho_max,
                sink.dir.string().c_str());
    return kExitOk;
}

// ------------------------------------------------------------- appendixc --

int cmd_appendixc(double delta, const std::string& out_dir) {
    appendixc::RhoS rho_s;
    try {
        rho_s = appendixc::find_rho_s();
    } catch (const NoRootError& e) {
        std::fprintf(stderr, "no root: %s\n", e.what());
        return kExitNoRoot;
    } catch (const Error& e) {
        std::fprintf(stderr, "evaluation error: %s\n", e.what());
        return kExitEvalError;
    }

    const std::string header = "sigma,rho,l_value,rhs,b_value\n";
    std::string fig2 = header;
    for (double rho : {rho_s.value - delta, rho_s.value, rho_s.value + delta}) {
        for (int i = 0; i <= 100; ++i) {
            appendixc::LScanRow row = appendixc::scan_row(static_cast<double>(i) / 100.0, rho);
            fig2 += fmt_g(row.sigma);
            fig2 += ',';
            fig2 += fmt_g(row.rho);
            fig2 += ',';
            fig2 += fmt_g(row.l_value);
            fig2 += ',';
            fig2 += fmt_g(row.rhs);
            fig2 += ',';
            fig2 += fmt_g(row.b_value);
            fig2 += '\n';
        }
    }
    std::string fig3 = header;
    for (double sigma : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        for (int i = 0; i <= 200; ++i) {
            appendixc::LScanRow row = appendixc::scan_row(sigma, rho_s.value - 1.0 + 0.01 * i);
            fig3 += fmt_g(row.sigma);
            fig3 += ',';
            fig3 += fmt_g(row.rho);
            fig3 += ',';
            fig3 += fmt_g(row.l_value);
            fig3 += ',';
            fig3 += fmt_g(row.rhs);
            fig3 += ',';
            fig3 += fmt_g(row.b_value);
            fig3 += '\n';
        }
    }

    json rs = {{"rho_s", rho_s.value},
               {"bracket_lo", rho_s.bracket.first},
               {"bracket_hi", rho_s.bracket.second},
               {"alternative_root", rho_s.alternative}};

    OutputSink sink(out_dir);
    sink.write("fig2_l_scan.csv", fig2);
    sink.write("fig3_b_scan.csv", fig3);
    sink.write("rho_s.json", rs.dump(1) + "\n");
    sink.manifest("appendixc", {{"delta", delta}});

    std::printf("rho_s = %.9f  bracket [%.6f, %.6f]  alternative-definition root %.9f\n",
                rho_s.value, rho_s.bracket.first, rho_s.bracket.second, rho_s.alternative);
    return kExitOk;
}

// ------------------------------------------------------------------ eval --

int cmd_eval(double sigma, double rho) {
    try {
        StripPoint p{sigma, rho};
        EvalAccuracy acc;
        Cplx z = specfun::zeta_strip(p, acc);
        Cplx g = specfun::gamma_complex(p);
        funceq::PQCoefficients pq = funceq::pq_coefficients(p);
        std::printf("s      = %.15g + %.15g i\n", sigma, rho);
        std::printf("zeta   = %.15g + %.15g i   (bound %.3e)\n", z.real(), z.imag(),
                    acc.achieved_bound);
        std::printf("gamma  = %.15g + %.15g i\n", g.real(), g.imag());
        std::printf("P      = %.15g\nQ      = %.15g\n", pq.p, pq.q);
        if (rho > 0.0) {
            critline::CriticalLineFactors f = critline::factors(rho);
            std::printf("N      = %.15g\nD_R    = %.15g\nD_I    = %.15g\n", f.n, f.dr,
                        f.di);
        } else {
            std::printf("N, D_R, D_I require rho > 0\n");
        }
    } catch (const Error& e) {
        std::fprintf(stderr, "evaluation error: %s\n", e.what());
        return kExitEvalError;
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"critical-line sieve numerics for the zeta functional equation"};
    app.set_version_flag("--version", kVersion);
    app.set_config("--config", "", "flat key=value options file");
    app.require_subcommand(1);

    std::string out_dir = "out";
    app.add_option("--out", out_dir, "directory for output files")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run the identity suites");
    std::string grid_text;
    double verify_tol = 1e-8;
    bool no_logspace = false;
    verify->add_option("--grid", grid_text, "sigma0:sigma1:rho0:rho1:n");
    verify->add_option("--tol", verify_tol, "functional-equation residual tolerance")
        ->capture_default_str();
    verify->add_flag("--no-logspace", no_logspace,
                     "force direct evaluation (overflows for rho > ~225)");

    auto* zeros = app.add_subcommand("zeros", "scan, refine and classify roots");
    zerofind::ScanConfig cfg;
    std::string format = "csv";
    zeros->add_option("--min", cfg.rho_min, "lower rho")->required();
    zeros->add_option("--max", cfg.rho_max, "upper rho")->required();
    zeros->add_option("--step", cfg.step, "scan step")->capture_default_str();
    zeros->add_option("--tol", cfg.refine_tol, "refinement tolerance")->capture_default_str();
    zeros->add_option("--format", format, "csv|json|both")
        ->check(CLI::IsMember({"csv", "json", "both"}))
        ->capture_default_str();

    auto* apxc = app.add_subcommand("appendixc", "off-line candidate scan and rho_s");
    double delta = 0.5;
    apxc->add_option("--delta", delta, "rho offset for the L scan rows")
        ->capture_default_str();

    auto* eval = app.add_subcommand("eval", "print the key quantities at one point");
    double eval_sigma = 0.5, eval_rho = 0.0;
    eval->add_option("--sigma", eval_sigma, "real part")->required();
    eval->add_option("--rho", eval_rho, "imaginary part")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (verify->parsed()) {
        GridSpec grid;
        if (!grid_text.empty() && !parse_grid(grid_text, grid)) {
            std::fprintf(stderr, "usage error: bad --grid (want sigma0:sigma1:rho0:rho1:n)\n");
            return kExitUsage;
        }
        return cmd_verify(grid, verify_tol, no_logspace, out_dir);
    }
    if (zeros->parsed()) {
        if (!(cfg.rho_min > 0.0) || cfg.rho_min > cfg.rho_max || !(cfg.step > 0.0) ||
            cfg.step > 0.25 || !(cfg.refine_tol >= 1e-13)) {
            std::fprintf(stderr,
                         "usage error: need 0 < min <= max, 0 < step <= 0.25, tol >= 1e-13\n");
            return kExitUsage;
        }
        return cmd_zeros(cfg, format, out_dir);
    }
    if (apxc->parsed()) {
        if (!(delta > 0.0) || delta > 5.0) {
            std::fprintf(stderr, "usage error: --delta must lie in (0, 5]\n");
            return kExitUsage;
        }
        return cmd_appendixc(delta, out_dir);
    }
    if (eval->parsed()) {
        return cmd_eval(eval_sigma, eval_rho);
    }
    return kExitUsage;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

}  // namespace zs::cli
