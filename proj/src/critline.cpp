#include "zetasieve/critline.hpp"

#include <cmath>

#include "zetasieve/errors.hpp"
#include "zetasieve/numeric_util.hpp"
#include "zetasieve/specfun.hpp"

namespace zs::critline {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;
constexpr double kLn2Pi = 1.837877066409345483560659472811235;
constexpr double kSqrtPi = 1.7724538509055160272981674833411;

void require_rho(double rho) {
    if (!(rho > 0.0)) throw RangeError("rho must be positive");
    if (!(rho <= specfun::kRhoMax)) throw RangeError("rho outside the working window");
}

}  // namespace

CriticalLineFactors factors(double rho, funceq::EvalPolicy policy) {
    require_rho(rho);
    const double x = 0.5 * kPi * rho;

    double cp, cm;
    if (!policy.allow_logspace || rho <= policy.logspace_threshold) {
        Cplx g = specfun::gamma_complex({0.5, rho});
        const double ch = std::cosh(x), sh = std::sinh(x);
        cp = ch * g.real() + sh * g.imag();
        cm = -sh * g.real() + ch * g.imag();
        if (!std::isfinite(cp) || !std::isfinite(cm)) {
            throw OverflowError("factor assembly overflowed; log-space mode required");
        }
    } else {
        // cosh, sinh ~ e^x/2; exp(log|Gamma| + x) stays O(1) on the line.
        Cplx lg = specfun::log_gamma(Cplx(0.5, rho));
        const double cphi = std::cos(lg.imag()), sphi = std::sin(lg.imag());
        const double u = std::exp(-2.0 * x);
        const double scale = std::exp(lg.real() + x);
        cp = scale * 0.5 * ((cphi + sphi) + u * (cphi - sphi));
        cm = scale * 0.5 * ((sphi - cphi) + u * (sphi + cphi));
    }

    const double rho_pi = rho * kLn2Pi;
    const double c = std::cos(rho_pi), s = std::sin(rho_pi);
    CriticalLineFactors f;
    f.rho = rho;
    f.cp = cp;
    f.cm = cm;
    f.n = (cp * s - cm * c) / (2.0 * kSqrtPi);
    f.dr = 0.5 - (cp * c + cm * s) / (2.0 * kSqrtPi);
    f.di = 1.0 - f.dr;
    return f;
}

double half_zero_function(double rho) {
    CriticalLineFactors f = factors(rho);
    const double rho_pi = rho * kLn2Pi;
    return f.cm * std::cos(rho_pi) - f.cp * std::sin(rho_pi);
}

double full_zero_function(double rho, int m) {
    if (m != 1 && m != 2) throw RangeError("zero degree m must be 1 or 2");
    CriticalLineFactors f = factors(rho);
    Cplx d = specfun::zeta_rho_deriv({0.5, rho}, m);
    return f.dr * d.real() - f.n * d.imag();
}

AsymptoticRatios asymptotic_ratio(double rho) {
    if (!(rho > 1.0)) throw RangeError("asymptotic_ratio requires rho > 1");
    require_rho(rho);

    Cplx lg = specfun::log_gamma(Cplx(0.5, rho));
    const double phi = lg.imag();
    const double rho_pi = rho * kLn2Pi;
    const double rho_l = 0.5 * rho * std::log(0.25 + rho * rho);
    const double th = std::tanh(0.5 * kPi * rho);
    const double trp = std::tan(rho_pi);

    AsymptoticRatios r;
    r.exact = std::tan(phi);
    r.eq25_rhs = (th + trp) / (1.0 - th * trp);
    r.eq27_approx = -std::tan(rho - rho_l);
    r.eq28_tan = (std::sin(2.0 * rho_l) - std::cos(2.0 * rho)) /
                 (std::cos(2.0 * rho_l) - std::sin(2.0 * rho));
    r.pole_proximity = distance_to_tan_pole(phi) < 1e-3 ||
                       distance_to_tan_pole(rho_pi) < 1e-3 ||
                       distance_to_tan_pole(rho - rho_l) < 1e-3;
    return r;
}

}  // namespace zs::critline
