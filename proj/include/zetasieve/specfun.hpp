#pragma once

#include "zetasieve/errors.hpp"
#include "zetasieve/types.hpp"

namespace zs::specfun {

// Supported windows. Gamma and digamma accept the disc |s| <= kGammaWindow
// (stated accuracy holds for |s| <= 200); zeta and everything downstream of
// it work on sigma in [kSigmaMin, kSigmaMax], 0 <= rho <= kRhoMax.
inline constexpr double kSigmaMin = -1.0;
inline constexpr double kSigmaMax = 2.0;
inline constexpr double kRhoMax = 500.0;
inline constexpr double kGammaWindow = 500.0;
inline constexpr double kPoleRadius = 1e-12;

/// log Gamma(s) for any s away from the poles. The real part is
/// log|Gamma(s)| everywhere; in the reflection region (Re s < 1/2) the
/// imaginary part may differ from the principal branch by a multiple of
/// 2*pi, which is harmless to every consumer here (exp, cos/sin, tan).
Cplx log_gamma(Cplx s);

/// Gamma(sigma + i*rho). Relative error <= 1e-12 for |s| <= 200.
Cplx gamma_complex(StripPoint p);

/// psi(sigma + i*rho), absolute error <= 1e-12 on the window.
Cplx digamma_complex(StripPoint p);

/// zeta(sigma + i*rho) by Euler-Maclaurin summation. acc.abs_tol is the
/// error budget; the evaluated first-omitted-term bound comes back in
/// acc.achieved_bound. Throws AccuracyError if the bound cannot be met.
Cplx zeta_strip(StripPoint p, EvalAccuracy& acc);
Cplx zeta_strip(StripPoint p);

/// m-th partial derivative of zeta with respect to rho, m in {1, 2}:
/// i*zeta'(s) and -zeta''(s), from the term-wise differentiated series.
Cplx zeta_rho_deriv(StripPoint p, int m);

namespace detail {

/// zeta^(order)(s) (derivative with respect to s, order in {0,1,2}) for
/// arbitrary complex s away from s = 1. Exposed for the test suite, which
/// probes conjugate symmetry at rho < 0.
Cplx zeta_em(Cplx s, double abs_tol, double* achieved_bound, int order);

}  // namespace detail

}  // namespace zs::specfun
