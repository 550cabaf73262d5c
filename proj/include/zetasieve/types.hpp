#pragma once

#include <complex>

namespace zs {

using Cplx = std::complex<double>;

/// A point s = sigma + i*rho in or near the critical strip. By convention
/// rho >= 0; negative-rho queries are answered by callers through conjugate
/// symmetry.
struct StripPoint {
    double sigma = 0.0;
    double rho = 0.0;

    Cplx s() const { return {sigma, rho}; }
};

/// Requested absolute tolerance together with the a posteriori error bound
/// the evaluation actually achieved (achieved_bound <= abs_tol on success).
struct EvalAccuracy {
    double abs_tol = 1e-12;
    double achieved_bound = 0.0;
};

}  // namespace zs
