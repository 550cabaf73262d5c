#pragma once

#include <utility>

#include "zetasieve/types.hpp"

namespace zs::funceq {

/// zeta at s and at the reflected point, split into real quantities:
/// zr + i*zi = zeta(sigma + i*rho), zr_ref - i*zi_ref = zeta(1 - sigma - i*rho).
struct DecompositionQuad {
    double zr = 0.0;
    double zi = 0.0;
    double zr_ref = 0.0;
    double zi_ref = 0.0;
};

/// Coupling coefficients of the real/imaginary functional-equation system;
/// Q + i*P = chi(s) = 2 Gamma(s) cos(pi s / 2) (2 pi)^(-s).
struct PQCoefficients {
    double p = 0.0;
    double q = 0.0;
};

/// Above the threshold all cosh/sinh/Gamma products are assembled in
/// log-magnitude + phase form. allow_logspace=false forces the direct path
/// everywhere (it overflows binary64 once cosh(pi*rho) does, near rho=225).
struct EvalPolicy {
    bool allow_logspace = true;
    double logspace_threshold = 30.0;
};

DecompositionQuad decompose(StripPoint p);

PQCoefficients pq_coefficients(StripPoint p, EvalPolicy policy = {});

/// The chi factor evaluated directly from its closed form; cross-representation
/// check for pq_coefficients (they agree to ~1e-13 relative).
Cplx chi_factor(StripPoint p, EvalPolicy policy = {});

/// Residuals of the coupled functional equation; identically ~0.
/// first = zi_ref + Q zi + P zr, second = zr_ref + P zi - Q zr.
std::pair<double, double> functional_residuals(StripPoint p, EvalPolicy policy = {});

/// Cleared-denominator reflection-equality sieves:
/// g1 = P zr + (1+Q) zi, g2 = P zi + (1-Q) zr. Both vanish iff the
/// reflected parts equal the direct parts.
std::pair<double, double> sieve_residuals(StripPoint p, EvalPolicy policy = {});

/// (P^2 + Q^2) minus its closed form
/// (2 pi)^(1-2 sigma) cosh(pi rho)/pi |Gamma(s)|^2 (1 + cos(pi sigma)/cosh(pi rho)).
double pq_norm_residual(StripPoint p, EvalPolicy policy = {});

}  // namespace zs::funceq
