#pragma once

#include <utility>

#include "zetasieve/types.hpp"

namespace zs::appendixc {

/// One row of the off-line candidate scan.
struct LScanRow {
    double sigma = 0.0;
    double rho = 0.0;
    double l_value = 0.0;  // L(sigma, rho)
    double rhs = 0.0;      // cos(pi sigma)/cosh(pi rho), |rhs| < 1 for rho > 0
    double b_value = 0.0;  // B(sigma, rho)
};

/// L(sigma,rho) = (4 pi^2)^(sigma-1/2) |Gamma(1/2+i rho)|^2 / |Gamma(sigma+i rho)|^2 - 1,
/// computed in log space.
double l_function(StripPoint p);

/// Closed forms at the strip edges:
/// l0 = rho tanh(pi rho)/(2 pi) - 1,  l1 = 2 pi tanh(pi rho)/rho - 1.
std::pair<double, double> l_endpoints(double rho);

/// The sign-carrying factor of dL/dsigma. The coefficient multiplying
/// (L+1) is the calibrated log(4 pi^2), not the printed constant; see
/// calibrate_dl_coefficient.
double b_factor(StripPoint p);

/// dL/dsigma = (L + 1) * B.
double dl_dsigma(StripPoint p);

double rhs_bound(StripPoint p);  // cos(pi sigma)/cosh(pi rho)

LScanRow scan_row(double sigma, double rho);

inline constexpr double kDlSigmaCoeff = 3.6757541328186909;  // log(4 pi^2)
inline constexpr double kDlSigmaPrinted = 39.478417604357434;  // 4 pi^2

/// Fits the constant c in dL/dsigma = (L+1)(c - 2 Re psi) by central finite
/// differences of l_function over a grid, then picks the printed constant
/// only if the fit supports it. The shipped b_factor uses the calibrated
/// value; this records the evidence for the verify report.
struct DlCalibration {
    double fitted = 0.0;            // mean fitted constant
    double fit_spread = 0.0;        // max - min over the grid
    double adopted = 0.0;           // coefficient b_factor ships with
    bool printed_matches = false;   // |fitted - 4 pi^2| <= 1e-6
    bool adopted_matches = false;   // |fitted - adopted| <= 1e-6
    double max_fd_mismatch = 0.0;   // max |dl_dsigma - finite difference|
};

DlCalibration calibrate_dl_coefficient();

/// The ordinate where L(0,rho) crosses the admissible band: root of
/// L(0,rho) - cos(0)/cosh(pi rho) on [1, 20]. `alternative` is the root of
/// L(0,rho) = 0 itself, kept for comparison (both are 2 pi to 7 digits).
struct RhoS {
    double value = 0.0;
    std::pair<double, double> bracket{0.0, 0.0};
    double alternative = 0.0;
};

RhoS find_rho_s();

}  // namespace zs::appendixc
