#pragma once

#include "conegauge/types.hpp"

#include <vector>

namespace conegauge {

struct MinNormResult {
    RealVec weights;  ///< simplex coordinates, >= 0, sum 1
    RealVec point;    ///< sum_i weights_i * v_i
    double gap;       ///< final Frank-Wolfe duality gap
    int iterations;
};

struct MinNormOptions {
    double gap_tol = 1e-12;
    int max_iterations = 10000;
};

/// Min-norm point of conv{v_0, ..., v_{p-1}} by Frank-Wolfe with pairwise
/// steps. On success the certificate <p, v_j> >= <p, p> - gap_tol holds for
/// every j. Throws ConvergenceError (message carries the best gap) when the
/// iteration cap is reached with the gap above tolerance.
MinNormResult min_norm_point(const std::vector<RealVec>& vectors,
                             const MinNormOptions& opts = {});

}  // namespace conegauge
