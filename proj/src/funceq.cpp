#include "zetasieve/funceq.hpp"

#include <cmath>

#include "zetasieve/errors.hpp"
#include "zetasieve/specfun.hpp"

namespace zs::funceq {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;
constexpr double kLn2Pi = 1.837877066409345483560659472811235;
constexpr double kLn2 = 0.69314718055994530941723212145818;

void require_strip_window(StripPoint p) {
    if (!(p.sigma >= specfun::kSigmaMin && p.sigma <= specfun::kSigmaMax)) {
        throw RangeError("sigma outside the working window [-1, 2]");
    }
    if (!(p.rho >= 0.0 && p.rho <= specfun::kRhoMax)) {
        throw RangeError("rho outside the working window [0, 500]");
    }
}

bool use_logspace(StripPoint p, const EvalPolicy& policy) {
    return policy.allow_logspace && p.rho > policy.logspace_threshold;
}

}  // namespace

DecompositionQuad decompose(StripPoint p) {
    require_strip_window(p);
    Cplx z = specfun::zeta_strip(p);
    Cplx w = specfun::zeta_strip({1.0 - p.sigma, p.rho});
    return {z.real(), z.imag(), w.real(), w.imag()};
}

PQCoefficients pq_coefficients(StripPoint p, EvalPolicy policy) {
    require_strip_window(p);
    const double rho_pi = p.rho * kLn2Pi;
    const double c = std::cos(rho_pi), s = std::sin(rho_pi);
    const double cs = std::cos(0.5 * kPi * p.sigma), ss = std::sin(0.5 * kPi * p.sigma);
    const double x = 0.5 * kPi * p.rho;

    if (!use_logspace(p, policy)) {
        Cplx g = specfun::gamma_complex(p);
        const double gr = g.real(), gi = g.imag();
        const double ch = std::cosh(x), sh = std::sinh(x);
        const double scale = 2.0 * std::exp(-p.sigma * kLn2Pi);
        PQCoefficients pq;
        pq.p = scale * ((-gr * s + gi * c) * ch * cs + (-gr * c - gi * s) * ss * sh);
        pq.q = scale * ((gr * c + gi * s) * ch * cs + (-gr * s + gi * c) * sh * ss);
        if (!std::isfinite(pq.p) || !std::isfinite(pq.q)) {
            throw OverflowError("P/Q direct assembly overflowed; log-space mode required");
        }
        return pq;
    }

    // cosh/sinh(x) ~ e^x/2 with the e^x absorbed into one bounded exponent:
    // exponent = log|Gamma| + pi rho/2 - sigma log(2 pi) + log 2.
    Cplx lg = specfun::log_gamma(p.s());
    const double cphi = std::cos(lg.imag()), sphi = std::sin(lg.imag());
    const double u = std::exp(-2.0 * x);
    const double scale = std::exp(lg.real() + x - p.sigma * kLn2Pi + kLn2);
    PQCoefficients pq;
    pq.p = scale * ((-cphi * s + sphi * c) * 0.5 * (1.0 + u) * cs +
                    (-cphi * c - sphi * s) * 0.5 * (1.0 - u) * ss);
    pq.q = scale * ((cphi * c + sphi * s) * 0.5 * (1.0 + u) * cs +
                    (-cphi * s + sphi * c) * 0.5 * (1.0 - u) * ss);
    return pq;
}

Cplx chi_factor(StripPoint p, EvalPolicy policy) {
    require_strip_window(p);
    const Cplx s = p.s();
    if (!use_logspace(p, policy)) {
        Cplx chi = 2.0 * specfun::gamma_complex(p) * std::cos(0.5 * kPi * s) *
                   std::exp(-s * kLn2Pi);
        if (!std::isfinite(chi.real()) || !std::isfinite(chi.imag())) {
            throw OverflowError("chi direct assembly overflowed; log-space mode required");
        }
        return chi;
    }
    // cos(pi s/2) = e^{pi rho/2} e^{-i pi sigma/2} (1 + e^{i pi sigma - pi rho}) / 2
    const double x = 0.5 * kPi * p.rho;
    Cplx lg = specfun::log_gamma(s);
    Cplx rest = std::log(1.0 + std::exp(Cplx(-2.0 * x, kPi * p.sigma)));
    Cplx exponent = lg + Cplx(x, -0.5 * kPi * p.sigma) + rest - s * kLn2Pi;
    return std::exp(exponent);
}

std::pair<double, double> functional_residuals(StripPoint p, EvalPolicy policy) {
    DecompositionQuad d = decompose(p);
    PQCoefficients pq = pq_coefficients(p, policy);
    double r_i = d.zi_ref + pq.q * d.zi + pq.p * d.zr;
    double r_r = d.zr_ref + pq.p * d.zi - pq.q * d.zr;
    return {r_i, r_r};
}

std::pair<double, double> sieve_residuals(StripPoint p, EvalPolicy policy) {
    DecompositionQuad d = decompose(p);
    PQCoefficients pq = pq_coefficients(p, policy);
    double g1 = pq.p * d.zr + (1.0 + pq.q) * d.zi;
    double g2 = pq.p * d.zi + (1.0 - pq.q) * d.zr;
    return {g1, g2};
}

double pq_norm_residual(StripPoint p, EvalPolicy policy) {
    require_strip_window(p);
    PQCoefficients pq = pq_coefficients(p, policy);
    const double lhs = pq.p * pq.p + pq.q * pq.q;

    double rhs;
    if (!use_logspace(p, policy)) {
        const double cosh_pr = std::cosh(kPi * p.rho);
        const double gsq = std::norm(specfun::gamma_complex(p));
        rhs = std::pow(2.0 * kPi, 1.0 - 2.0 * p.sigma) * cosh_pr / kPi * gsq *
              (1.0 + std::cos(kPi * p.sigma) / cosh_pr);
        if (!std::isfinite(rhs)) {
            throw OverflowError(
                "cosh(pi rho) overflows binary64 for rho > ~225; log-space mode required");
        }
    } else {
        // log cosh(pi rho) = pi rho + log1p(e^{-2 pi rho}) - log 2
        const double e2 = std::exp(-2.0 * kPi * p.rho);
        const double log_main = (1.0 - 2.0 * p.sigma) * kLn2Pi + kPi * p.rho +
                                std::log1p(e2) - kLn2 - std::log(kPi) +
                                2.0 * specfun::log_gamma(p.s()).real();
        const double sech = 2.0 * std::exp(-kPi * p.rho) / (1.0 + e2);
        rhs = std::exp(log_main) * (1.0 + std::cos(kPi * p.sigma) * sech);
    }
    return lhs - rhs;
}

}  // namespace zs::funceq
