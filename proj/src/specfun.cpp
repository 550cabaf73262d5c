#include "zetasieve/specfun.hpp"

#include <cmath>
#include <cstdio>

#include "zetasieve/numeric_util.hpp"

namespace zs::specfun {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;

// Lanczos, g = 607/128, 15 coefficients (Godfrey's set as used in Numerical
// Recipes 3rd ed.). Relative error ~1e-13 in binary64 over the half-plane.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczosCoeff[15] = {
    0.99999999999999709182,
    57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,     -0.49191381609762019978,
    0.33994649984811888699e-4, 0.46523628927048575665e-4,
    -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,
    -0.16431810653676389022e-3, 0.84418223983852743293e-4,
    -0.26190838401581408670e-4, 0.36899182659531622704e-5};

// B_{2j}/(2j)! for j = 1..12 (Euler-Maclaurin correction weights).
constexpr double kBernoulliOverFact[13] = {
    0.0,  // unused
    8.3333333333333333333e-2,  -1.3888888888888888889e-3,
    3.3068783068783068783e-5,  -8.2671957671957671958e-7,
    2.0876756987868098979e-8,  -5.2841901386874931848e-10,
    1.3382536530684678833e-11, -3.3896802963225828668e-13,
    8.5860620562778445641e-15, -2.1748686985580618730e-16,
    5.5090028283602295152e-18, -1.3954464685812523341e-19};

// B_{2n}/(2n) with sign folded for the digamma asymptotic tail.
constexpr double kDigammaAsym[7] = {
    -1.0 / 12.0,  1.0 / 120.0, -1.0 / 252.0, 1.0 / 240.0,
    -1.0 / 132.0, 691.0 / 32760.0, -1.0 / 12.0};

// Lanczos core, valid for Re z >= 0.5. Computes Gamma(z+1)/z, so the series
// denominators run from z+1 and the shift ends up inside the final log.
Cplx lanczos_log_gamma(Cplx z) {
    Cplx series = kLanczosCoeff[0];
    for (int k = 1; k < 15; ++k) {
        series += kLanczosCoeff[k] / (z + static_cast<double>(k));
    }
    Cplx t = z + (kLanczosG + 0.5);
    return (z + 0.5) * std::log(t) - t +
           std::log(2.5066282746310005024 /* sqrt(2 pi) */ * series / z);
}

// log sin(pi z), stable for large |Im z|. For Im z > 0 the e^{-i pi z}
// exponential dominates and is factored out analytically.
Cplx log_sin_pi(Cplx z) {
    if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
    // sin(pi z) = -e^{-i pi z} (1 - e^{2 i pi z}) / (2 i)
    Cplx w = std::exp(Cplx(0.0, 2.0 * kPi) * z);  // |w| = e^{-2 pi Im z} <= 1
    return Cplx(0.0, -kPi) * z + std::log(1.0 - w) +
           Cplx(-0.69314718055994530942, 0.5 * kPi);
}

double distance_to_gamma_pole(Cplx s) {
    if (s.real() > 0.5) return 1.0;  // nowhere near
    double n = std::min(0.0, std::round(s.real()));
    return std::hypot(s.real() - n, s.imag());
}

void require_gamma_window(StripPoint p) {
    if (!(std::hypot(p.sigma, p.rho) <= kGammaWindow)) {
        throw RangeError("gamma/digamma argument outside the |s| <= 500 window");
    }
    if (distance_to_gamma_pole(p.s()) < kPoleRadius) {
        throw PoleError("argument within 1e-12 of a Gamma pole");
    }
}

}  // namespace

Cplx log_gamma(Cplx s) {
    // The Lanczos core handles z = 1 - s for the reflected region, so poles
    // show up there as log sin(pi s) singularities; callers gate on them.
    if (s.real() >= 0.5) return lanczos_log_gamma(s);
    return Cplx(1.1447298858494001741, 0.0) /* log pi */
           - log_sin_pi(s) - lanczos_log_gamma(1.0 - s);
}

Cplx gamma_complex(StripPoint p) {
    require_gamma_window(p);
    if (p.rho == 0.0 && p.sigma > 0.5) {
        // keep Gamma exactly real on the positive axis
        Cplx lg = log_gamma(Cplx(p.sigma, 0.0));
        return {std::exp(lg.real()), 0.0};
    }
    return std::exp(log_gamma(p.s()));
}

Cplx digamma_complex(StripPoint p) {
    require_gamma_window(p);
    Cplx z = p.s();
    Cplx shift{0.0, 0.0};
    while (std::abs(z) < 10.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    Cplx inv = 1.0 / z;
    Cplx inv2 = inv * inv;
    Cplx tail{0.0, 0.0};
    for (int n = 6; n >= 0; --n) tail = (tail + kDigammaAsym[n]) * inv2;
    return shift + std::log(z) - 0.5 * inv + tail;
}

namespace detail {

Cplx zeta_em(Cplx s, double abs_tol, double* achieved_bound, int order) {
    if (std::abs(s - 1.0) < kPoleRadius) {
        throw PoleError("zeta evaluated at its pole s = 1");
    }

    int n = std::max(20, static_cast<int>(std::ceil(2.0 + std::abs(s.imag()) / 2.0)));
    double bound = 0.0;
    Cplx result{0.0, 0.0};

    for (int attempt = 0; attempt < 5; ++attempt) {
        const double log_n = std::log(static_cast<double>(n));
        KahanSum direct;
        for (int k = 1; k < n; ++k) {
            const double lk = std::log(static_cast<double>(k));
            Cplx term = std::exp(-s * lk);
            if (order == 1) term *= -lk;
            if (order == 2) term *= lk * lk;
            direct.add(term);
        }

        const Cplx n_pow = std::exp(-s * log_n);       // n^{-s}
        const Cplx n_pow1 = std::exp((1.0 - s) * log_n);  // n^{1-s}
        const Cplx sm1 = s - 1.0;

        Cplx sum = direct.value();
        switch (order) {
            case 0:
                sum += 0.5 * n_pow + n_pow1 / sm1;
                break;
            case 1:
                sum += -0.5 * log_n * n_pow +
                       n_pow1 * (-log_n / sm1 - 1.0 / (sm1 * sm1));
                break;
            case 2:
                sum += 0.5 * log_n * log_n * n_pow +
                       n_pow1 * (log_n * log_n / sm1 + 2.0 * log_n / (sm1 * sm1) +
                                 2.0 / (sm1 * sm1 * sm1));
                break;
        }

        // Bernoulli corrections T_j = B_{2j}/(2j)! n^{1-s-2j} prod_{k=0}^{2j-2}(s+k),
        // differentiated analytically where a derivative order is requested.
        Cplx poch = s;       // prod (s+k), k = 0..2j-2
        Cplx s1 = 1.0 / s;   // sum 1/(s+k)
        Cplx s2 = s1 * s1;   // sum 1/(s+k)^2
        Cplx correction{0.0, 0.0};
        double last_t_mag = 0.0;
        for (int j = 1; j <= 11; ++j) {
            if (j > 1) {
                const Cplx a = s + static_cast<double>(2 * j - 3);
                const Cplx b = s + static_cast<double>(2 * j - 2);
                poch *= a * b;
                s1 += 1.0 / a + 1.0 / b;
                s2 += 1.0 / (a * a) + 1.0 / (b * b);
            }
            const Cplx t = kBernoulliOverFact[j] *
                           std::exp((1.0 - s - 2.0 * static_cast<double>(j)) * log_n) * poch;
            last_t_mag = std::abs(t);
            if (j == 11) break;  // j = 11 only feeds the remainder bound
            const Cplx dlog = s1 - log_n;  // d/ds log T_j
            switch (order) {
                case 0: correction += t; break;
                case 1: correction += t * dlog; break;
                case 2: correction += t * (dlog * dlog - s2); break;
            }
        }

        // First-omitted-term bound |E| <= |T_{J+1}| |s+2J+1| / (sigma+2J+1),
        // inflated for the differentiated series by the log-derivative scale.
        const double j_top = 21.0;  // 2J+1 with J = 10
        bound = last_t_mag * std::abs(s + j_top) / (s.real() + j_top);
        if (order > 0) {
            const double dscale = log_n + std::abs(s1) + 1.0;
            bound *= (order == 1) ? dscale : dscale * dscale;
        }

        result = sum + correction;
        if (bound <= abs_tol) break;
        n *= 2;
    }

    if (bound > abs_tol) {
        char msg[128];
        std::snprintf(msg, sizeof msg,
                      "zeta truncation bound %.3e exceeds budget %.3e", bound, abs_tol);
        throw AccuracyError(msg);
    }
    if (achieved_bound != nullptr) *achieved_bound = bound;
    if (!std::isfinite(result.real()) || !std::isfinite(result.imag())) {
        throw OverflowError("zeta evaluation produced a non-finite value");
    }
    return result;
}

}  // namespace detail

namespace {

void require_zeta_window(StripPoint p) {
    if (!(p.sigma >= kSigmaMin && p.sigma <= kSigmaMax)) {
        throw RangeError("sigma outside the working window [-1, 2]");
    }
    if (!(p.rho >= 0.0 && p.rho <= kRhoMax)) {
        throw RangeError("rho outside the working window [0, 500]");
    }
}

}  // namespace

Cplx zeta_strip(StripPoint p, EvalAccuracy& acc) {
    require_zeta_window(p);
    return detail::zeta_em(p.s(), acc.abs_tol, &acc.achieved_bound, 0);
}

Cplx zeta_strip(StripPoint p) {
    EvalAccuracy acc;
    return zeta_strip(p, acc);
}

Cplx zeta_rho_deriv(StripPoint p, int m) {
    require_zeta_window(p);
    if (m != 1 && m != 2) throw RangeError("derivative order must be 1 or 2");
    Cplx d = detail::zeta_em(p.s(), 1e-12, nullptr, m);
    // d/drho = i d/ds, applied m times
    return (m == 1) ? Cplx(0.0, 1.0) * d : -d;
}

}  // namespace zs::specfun
