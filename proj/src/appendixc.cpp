#include "zetasieve/appendixc.hpp"

#include <cmath>

#include "zetasieve/errors.hpp"
#include "zetasieve/specfun.hpp"
#include "zetasieve/zerofind.hpp"

namespace zs::appendixc {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;
constexpr double kTwoPi = 6.283185307179586476925286766559;

void require_window(StripPoint p) {
    if (!(p.sigma >= specfun::kSigmaMin && p.sigma <= specfun::kSigmaMax)) {
        throw RangeError("sigma outside the working window [-1, 2]");
    }
    if (!(p.rho >= 0.0 && p.rho <= specfun::kRhoMax)) {
        throw RangeError("rho outside the working window [0, 500]");
    }
}

}  // namespace

double l_function(StripPoint p) {
    require_window(p);
    const double g_half = specfun::log_gamma(Cplx(0.5, p.rho)).real();
    const double g_sig = specfun::log_gamma(p.s()).real();
    return std::expm1((2.0 * p.sigma - 1.0) * 0.5 * kDlSigmaCoeff +
                      2.0 * (g_half - g_sig));
}

std::pair<double, double> l_endpoints(double rho) {
    if (!(rho > 0.0)) throw RangeError("rho must be positive");
    const double t = std::tanh(kPi * rho);
    return {rho * t / kTwoPi - 1.0, kTwoPi * t / rho - 1.0};
}

double b_factor(StripPoint p) {
    require_window(p);
    return kDlSigmaCoeff - 2.0 * specfun::digamma_complex(p).real();
}

double dl_dsigma(StripPoint p) {
    return (l_function(p) + 1.0) * b_factor(p);
}

double rhs_bound(StripPoint p) {
    return std::cos(kPi * p.sigma) / std::cosh(kPi * p.rho);
}

LScanRow scan_row(double sigma, double rho) {
    LScanRow row;
    row.sigma = sigma;
    row.rho = rho;
    row.l_value = l_function({sigma, rho});
    row.rhs = rhs_bound({sigma, rho});
    row.b_value = b_factor({sigma, rho});
    return row;
}

DlCalibration calibrate_dl_coefficient() {
    DlCalibration cal;
    cal.adopted = kDlSigmaCoeff;

    const double h = 1e-5;
    double lo = 1e300, hi = -1e300, acc = 0.0;
    int count = 0;  // 9 sigma x 6 rho = 54 calibration points
    for (double sigma = 0.1; sigma < 0.95; sigma += 0.1) {
        for (double rho = 2.0; rho <= 12.0; rho += 2.0) {
            const double fd =
                (l_function({sigma + h, rho}) - l_function({sigma - h, rho})) / (2.0 * h);
            const double lp1 = l_function({sigma, rho}) + 1.0;
            const double fitted =
                fd / lp1 + 2.0 * specfun::digamma_complex({sigma, rho}).real();
            lo = std::min(lo, fitted);
            hi = std::max(hi, fitted);
            acc += fitted;
            ++count;

            const double mismatch = std::fabs(dl_dsigma({sigma, rho}) - fd);
            cal.max_fd_mismatch = std::max(cal.max_fd_mismatch, mismatch);
        }
    }
    cal.fitted = acc / count;
    cal.fit_spread = hi - lo;
    cal.printed_matches = std::fabs(cal.fitted - kDlSigmaPrinted) <= 1e-6;
    cal.adopted_matches = std::fabs(cal.fitted - cal.adopted) <= 1e-6;
    return cal;
}

RhoS find_rho_s() {
    const auto h = [](double rho) {
        return l_endpoints(rho).first - 1.0 / std::cosh(kPi * rho);
    };
    const auto l0 = [](double rho) { return l_endpoints(rho).first; };

    zerofind::ScanConfig cfg;
    cfg.rho_min = 1.0;
    cfg.rho_max = 20.0;
    cfg.step = 0.01;
    cfg.refine_tol = 1e-12;

    auto brackets = zerofind::scan_brackets(cfg, h);
    if (brackets.empty()) throw NoRootError("L(0,rho) - sech(pi rho) has no sign change in [1, 20]");

    RhoS result;
    result.bracket = brackets.front();
    result.value = zerofind::refine_root(brackets.front(), h, cfg.refine_tol).rho;

    auto alt_brackets = zerofind::scan_brackets(cfg, l0);
    result.alternative =
        alt_brackets.empty()
            ? result.value
            : zerofind::refine_root(alt_brackets.front(), l0, cfg.refine_tol).rho;
    return result;
}

}  // namespace zs::appendixc
