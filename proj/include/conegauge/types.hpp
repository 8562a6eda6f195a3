#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace conegauge {

using RealVec = Eigen::VectorXd;
using RealMat = Eigen::MatrixXd;

/// Position of a point relative to -K.
enum class ConeClassification { InteriorOfMinusK, BoundaryOfMinusK, Exterior };

std::string to_label(ConeClassification c);

/// Default membership tolerance, relative to the norm of each dual direction.
inline constexpr double kDefaultTol = 1e-9;

/// Relative tolerance for deduplicating rays that are positive multiples.
inline constexpr double kDedupTol = 1e-12;

/// Thrown when an iterative solver exhausts its iteration budget.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_finite(const RealVec& v);

void require_finite(const RealVec& v, const char* what);

void require_dim(const RealVec& v, Eigen::Index dim, const char* what);

}  // namespace conegauge
