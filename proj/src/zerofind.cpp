#include "zetasieve/zerofind.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "zetasieve/critline.hpp"
#include "zetasieve/errors.hpp"
#include "zetasieve/specfun.hpp"

namespace zs::zerofind {

void ScanConfig::validate() const {
    if (!(rho_min > 0.0) || !(rho_min <= rho_max)) {
        throw RangeError("scan range must satisfy 0 < rho_min <= rho_max");
    }
    if (!(step > 0.0 && step <= 0.25)) {
        throw RangeError("scan step must lie in (0, 0.25]");
    }
    if (!(refine_tol >= 1e-13)) {
        throw RangeError("refine_tol must be >= 1e-13");
    }
}

const char* to_string(ZeroKind k) {
    switch (k) {
        case ZeroKind::HalfZeroOfZetaR: return "HalfZeroOfZetaR";
        case ZeroKind::HalfZeroOfZetaI: return "HalfZeroOfZetaI";
        case ZeroKind::FullZero: return "FullZero";
        case ZeroKind::Unclassified: return "Unclassified";
    }
    return "Unclassified";
}

std::vector<std::pair<double, double>> scan_brackets(const ScanConfig& cfg,
                                                     const TargetFn& target) {
    cfg.validate();
    std::vector<std::pair<double, double>> brackets;
    double prev_t = cfg.rho_min;
    double prev_v = target(prev_t);
    if (!std::isfinite(prev_v)) throw NonFiniteSampleError("target non-finite at scan start");

    for (long k = 1;; ++k) {
        double t = cfg.rho_min + static_cast<double>(k) * cfg.step;
        if (t > cfg.rho_max) {
            if (cfg.rho_max - prev_t < 1e-12) break;
            t = cfg.rho_max;
        }
        double v = target(t);
        if (!std::isfinite(v)) {
            char msg[96];
            std::snprintf(msg, sizeof msg, "target non-finite at rho = %.12g", t);
            throw NonFiniteSampleError(msg);
        }
        if ((prev_v < 0.0 && v > 0.0) || (prev_v > 0.0 && v < 0.0)) {
            brackets.emplace_back(prev_t, t);
        }
        prev_t = t;
        prev_v = v;
        if (t >= cfg.rho_max) break;
    }
    return brackets;
}

RefineResult refine_root(std::pair<double, double> bracket, const TargetFn& target,
                         double tol) {
    double a = bracket.first, b = bracket.second;
    double fa = target(a), fb = target(b);
    if (!((fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0))) {
        throw RangeError("refine_root requires opposite signs at the bracket ends");
    }

    int it = 0;
    // Secant step when it lands strictly inside, bisection otherwise and on
    // every other iteration; width halves at least every two steps.
    while (b - a > tol && it < 200) {
        double x;
        if (it % 2 == 0 && fb != fa) {
            x = b - fb * (b - a) / (fb - fa);
            if (!(x > a && x < b)) x = 0.5 * (a + b);
        } else {
            x = 0.5 * (a + b);
        }
        double fx = target(x);
        ++it;
        if (fx == 0.0) {
            a = b = x;
            break;
        }
        if ((fx < 0.0) == (fa < 0.0)) {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
    }
    if (b - a > tol) throw NoConvergenceError("bracket failed to shrink in 200 iterations");

    RefineResult r;
    r.rho = 0.5 * (a + b);
    r.residual = std::fabs(target(r.rho));
    r.iterations = it;
    return r;
}

ZeroKind classify(double rho, const ScanConfig& cfg) {
    Cplx z = specfun::zeta_strip({0.5, rho});
    const bool re_small = std::fabs(z.real()) <= cfg.classify_tol;
    const bool im_small = std::fabs(z.imag()) <= cfg.classify_tol;
    if (re_small && im_small) return ZeroKind::FullZero;
    if (re_small) return ZeroKind::HalfZeroOfZetaR;
    if (im_small) return ZeroKind::HalfZeroOfZetaI;
    return ZeroKind::Unclassified;
}

CampaignResult run_campaign(const ScanConfig& cfg) {
    cfg.validate();
    CampaignResult out;

    const TargetFn targets[2] = {
        [](double r) { return critline::half_zero_function(r); },
        [](double r) { return critline::full_zero_function(r, 1); }};
    const char* names[2] = {"half-zero", "full-zero"};

    for (int ti = 0; ti < 2; ++ti) {
        std::vector<std::pair<double, double>> brackets;
        try {
            brackets = scan_brackets(cfg, targets[ti]);
        } catch (const Error& e) {
            out.failures.push_back(std::string(names[ti]) + " scan: " + e.what());
            continue;
        }
        for (const auto& br : brackets) {
            try {
                RefineResult rr = refine_root(br, targets[ti], cfg.refine_tol);
                ZeroRecord rec;
                rec.rho = rr.rho;
                rec.residual = rr.residual;
                rec.bracket = br;
                rec.iterations = rr.iterations;
                rec.zeta_mag = std::abs(specfun::zeta_strip({0.5, rr.rho}));
                rec.kind = classify(rr.rho, cfg);
                out.records.push_back(rec);
            } catch (const Error& e) {
                char msg[160];
                std::snprintf(msg, sizeof msg, "%s bracket [%.9g, %.9g]: %s", names[ti],
                              br.first, br.second, e.what());
                out.failures.emplace_back(msg);
            }
        }
    }

    std::sort(out.records.begin(), out.records.end(),
              [](const ZeroRecord& l, const ZeroRecord& r) { return l.rho < r.rho; });

    // The full-zero equation shares its D_R = 0 roots with the half-zero
    // equation; collapse those duplicates, keeping the sharper refinement.
    std::vector<ZeroRecord> dedup;
    for (const ZeroRecord& rec : out.records) {
        if (!dedup.empty() && rec.rho - dedup.back().rho <= 10.0 * cfg.refine_tol) {
            if (rec.residual < dedup.back().residual) dedup.back() = rec;
            continue;
        }
        dedup.push_back(rec);
    }
    out.records = std::move(dedup);
    return out;
}

}  // namespace zs::zerofind
