#pragma once

#include "zetasieve/funceq.hpp"
#include "zetasieve/types.hpp"

namespace zs::critline {

/// Critical-line factors at sigma = 1/2. Satisfy dr + di = 1 exactly as
/// constructed, n^2 = dr*di, and 0 <= dr, di <= 1.
struct CriticalLineFactors {
    double n = 0.0;
    double dr = 0.0;
    double di = 0.0;
    double cp = 0.0;
    double cm = 0.0;
    double rho = 0.0;
};

CriticalLineFactors factors(double rho, funceq::EvalPolicy policy = {});

/// Cm cos(rho_pi) - Cp sin(rho_pi) with rho_pi = rho log(2 pi). Bounded by
/// sqrt(pi) on the line (Cp^2 + Cm^2 = pi), so no rescaling is required.
/// Roots locate the half-zeros of zeta_R and zeta_I alternately.
double half_zero_function(double rho);

/// D_R zeta_R^(m) - N zeta_I^(m) with the rho-derivatives of order m in
/// {1, 2}. Roots are the full-zeros together with the D_R = 0 half-zeros.
double full_zero_function(double rho, int m);

/// Diagnostic comparison of Gamma_I/Gamma_R against its rewritten and
/// Stirling-approximated forms. Not used for root finding.
struct AsymptoticRatios {
    double exact = 0.0;       // Gamma_I / Gamma_R at 1/2 + i rho
    double eq25_rhs = 0.0;    // (tanh(pi rho/2) + tan rho_pi)/(1 - tanh(pi rho/2) tan rho_pi)
    double eq27_approx = 0.0; // -tan(rho - rho_L)
    double eq28_tan = 0.0;    // (sin 2 rho_L - cos 2 rho)/(cos 2 rho_L - sin 2 rho)
    bool pole_proximity = false;
};

AsymptoticRatios asymptotic_ratio(double rho);

}  // namespace zs::critline
