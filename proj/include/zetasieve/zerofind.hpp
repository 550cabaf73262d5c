#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "zetasieve/types.hpp"

namespace zs::zerofind {

struct ScanConfig {
    double rho_min = 10.0;
    double rho_max = 100.0;
    double step = 0.05;
    double refine_tol = 1e-10;
    double classify_tol = 1e-6;

    void validate() const;  // throws RangeError on violation
};

enum class ZeroKind { HalfZeroOfZetaR, HalfZeroOfZetaI, FullZero, Unclassified };

const char* to_string(ZeroKind k);

struct ZeroRecord {
    double rho = 0.0;
    ZeroKind kind = ZeroKind::Unclassified;
    double residual = 0.0;   // |target| at the refined root
    double zeta_mag = 0.0;   // |zeta(1/2 + i rho)|
    std::pair<double, double> bracket{0.0, 0.0};
    int iterations = 0;
};

using TargetFn = std::function<double(double)>;

/// Every consecutive grid pair with a strict sign change, ascending in rho.
std::vector<std::pair<double, double>> scan_brackets(const ScanConfig& cfg,
                                                     const TargetFn& target);

struct RefineResult {
    double rho = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

/// Safeguarded secant/bisection; converges to bracket width <= tol and is
/// deterministic for fixed inputs.
RefineResult refine_root(std::pair<double, double> bracket, const TargetFn& target,
                         double tol);

ZeroKind classify(double rho, const ScanConfig& cfg);

struct CampaignResult {
    std::vector<ZeroRecord> records;       // merged, ascending rho, deduplicated
    std::vector<std::string> failures;     // per-bracket diagnostics
};

/// Full pipeline over both sieve targets (the half-zero equation and the
/// m = 1 full-zero equation), with per-record |zeta| cross-check.
CampaignResult run_campaign(const ScanConfig& cfg);

}  // namespace zs::zerofind
