#pragma once

#include "conegauge/gauge.hpp"
#include "conegauge/minnorm.hpp"

#include <functional>
#include <string>
#include <vector>

namespace conegauge {

/// Smooth map F : R^n -> R^m with Jacobian access. When no analytic Jacobian
/// is supplied, forward finite differences with step 1e-7 * (1 + ||x||_inf)
/// are used.
class VectorObjective {
public:
    using EvalFn = std::function<RealVec(const RealVec&)>;
    using JacFn = std::function<RealMat(const RealVec&)>;

    VectorObjective(Eigen::Index domain_dim, Eigen::Index range_dim, EvalFn eval,
                    JacFn jacobian = nullptr);

    Eigen::Index domain_dim() const { return n_; }
    Eigen::Index range_dim() const { return m_; }
    bool has_analytic_jacobian() const { return static_cast<bool>(jac_); }

    /// F(x); throws std::runtime_error on non-finite values.
    RealVec value(const RealVec& x) const;
    RealMat jacobian(const RealVec& x) const;

private:
    Eigen::Index n_, m_;
    EvalFn eval_;
    JacFn jac_;
};

struct DescentConfig {
    double beta = 0.1;        ///< Armijo slope fraction, in (0,1)
    double shrink = 0.5;      ///< step contraction, in (0,1)
    double t0 = 1.0;          ///< initial trial step
    double theta_tol = 1e-8;  ///< criticality tolerance on |theta|
    int max_iters = 500;
    int max_backtracks = 60;

    void validate() const;
};

enum class Termination { Converged, MaxIters, LineSearchFailed };

std::string to_string(Termination t);

struct DescentTrace {
    std::vector<RealVec> iterates;
    std::vector<RealVec> objective_values;
    std::vector<double> theta_values;  ///< theta(x_k) <= 0, one per iterate
    std::vector<double> step_sizes;    ///< accepted steps, one per transition
    Termination termination = Termination::MaxIters;
};

/// Dual variables of the direction subproblem: nonnegative, summing to one,
/// one per element of the gauge's dual set.
struct SimplexWeights {
    RealVec lambda;
};

/// Weights minimizing (1/2) ||sum_i lambda_i v_i||^2 over the simplex
/// (pairwise Frank-Wolfe). The result satisfies the gap certificate
/// <p, v_j> >= <p, p> - gap_tol for all j, with p the combined point.
SimplexWeights simplex_qp(const std::vector<RealVec>& vectors, double gap_tol = 1e-12,
                          int max_iters = 10000);

struct DirectionResult {
    RealVec direction;  ///< d = -sum_i lambda_i J^T c_i
    double theta;       ///< subproblem value -(1/2)||d||^2; 0 iff K-critical
    SimplexWeights weights;
};

/// Steepest K-descent direction: min-norm point of the pullback gradients
/// {J^T c : c in C}. theta <= 0 always and max_c <c, J d> <= -||d||^2 up to
/// the QP gap.
DirectionResult steepest_descent_direction(const RealMat& J, const FiniteGauge& g);

struct LinesearchResult {
    double step;
    bool accepted;
};

/// Largest t in {t0 * shrink^k} with
/// max_{c in C} <c, F(x + t d) - F(x) - beta t J d> <= 0.
/// Requires a strict descent direction (d != 0).
LinesearchResult armijo_linesearch(const VectorObjective& obj, const RealVec& x,
                                   const RealVec& d, const RealMat& J,
                                   const FiniteGauge& g, const DescentConfig& cfg);

/// K-steepest-descent iteration x_{k+1} = x_k + t_k d_k until |theta| falls
/// below theta_tol, the iteration cap, or a failed line search. Every accepted
/// step is K-decreasing: phi(F(x_{k+1}) - F(x_k)) <= 0 up to rounding.
DescentTrace solve(const VectorObjective& obj, const FiniteGauge& g, const RealVec& x0,
                   const DescentConfig& cfg = {});

/// Worst relative disagreement between the supplied Jacobian and forward
/// finite differences over random standard-normal probes.
double max_jacobian_fd_error(const VectorObjective& obj, int n_probes,
                             std::uint64_t seed);

}  // namespace conegauge
