#pragma once

#include "conegauge/types.hpp"

namespace conegauge {

struct NnlsResult {
    RealVec coeffs;        ///< lambda >= 0
    RealVec fitted;        ///< A * lambda
    double residual_norm;  ///< ||A * lambda - b||
    int iterations;
};

struct NnlsOptions {
    int max_iterations = 0;   ///< 0 means 100 * (number of columns)
    double dual_tol = 1e-10;  ///< KKT threshold on the dual vector, scaled by ||A^T b||_inf
};

/// Lawson-Hanson active-set solve of  min_{lambda >= 0} ||A lambda - b||.
/// Throws ConvergenceError when the iteration cap is hit or progress stalls.
NnlsResult nnls(const RealMat& A, const RealVec& b, const NnlsOptions& opts = {});

}  // namespace conegauge
