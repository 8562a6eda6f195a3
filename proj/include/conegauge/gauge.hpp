#pragma once

#include "conegauge/cone.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace conegauge {

/// Sublinear functional phi(x) = max_{c in C} <x, c> for a finite set
/// C in K+ \ {0} generating K+. Construction validates membership of every
/// c in K+ and, for polyhedral cones, that the conic hull of C covers every
/// dual generator. For orthant and Lorentz cones only C in K+ \ {0} is
/// checked; generation is asserted by the sign-trichotomy suites.
class FiniteGauge {
public:
    FiniteGauge(ConeRep cone, std::vector<RealVec> dual_set, double tol = kDefaultTol);

    const ConeRep& cone() const { return cone_; }
    const std::vector<RealVec>& dual_set() const { return dual_set_; }

private:
    ConeRep cone_;
    std::vector<RealVec> dual_set_;
};

/// phi(x) = d(x, -K) - d(x, X \ -K) in the Euclidean norm; the support
/// function of the unit-norm slice of K+.
class OrientedDistanceGauge {
public:
    explicit OrientedDistanceGauge(ConeRep cone) : cone_(std::move(cone)) {}

    const ConeRep& cone() const { return cone_; }

private:
    ConeRep cone_;
};

using AnyGauge = std::variant<FiniteGauge, OrientedDistanceGauge>;

const ConeRep& gauge_cone(const AnyGauge& g);

struct GaugeEval {
    double value;
    std::size_t attaining_index;  ///< lowest index attaining the max
};

GaugeEval evaluate(const FiniteGauge& g, const RealVec& x);

double oriented_distance(const OrientedDistanceGauge& g, const RealVec& x);

/// phi(x) for either gauge kind.
double gauge_value(const AnyGauge& g, const RealVec& x);

/// Sample max of <x, w> over unit-norm w in K+: random convex combinations of
/// the dual generators (polyhedral) or rejection-sampled unit vectors in K+
/// (orthant, Lorentz), plus a few deterministic probes (the normalized dual
/// generators and, for orthant/Lorentz, the closed-form maximizer candidates).
/// Always a lower bound of the true supremum.
double dual_sphere_value(const ConeRep& cone, const RealVec& x, std::int64_t n_samples,
                         std::uint64_t seed);

ConeClassification classify_by_sign(const AnyGauge& g, const RealVec& x,
                                    double tol = kDefaultTol);

struct GaugeReport {
    std::int64_t checked_points = 0;
    std::int64_t homogeneity_violations = 0;
    std::int64_t subadditivity_violations = 0;
    std::int64_t sign_violations = 0;
    std::int64_t sign_checked = 0;  ///< points outside the boundary exclusion band
    double worst_homogeneity = 0.0;
    double worst_subadditivity = 0.0;
    double tol = 0.0;
    std::uint64_t seed = 0;

    bool passed() const {
        return homogeneity_violations == 0 && subadditivity_violations == 0 &&
               sign_violations == 0;
    }
};

/// Points with |phi| or |dual score| below this band are excluded from the
/// strict sign-agreement checks.
inline constexpr double kBoundaryExclusionBand = 1e-6;

/// Samples x, y with standard normal entries and t = |normal| and checks
/// positive homogeneity, subadditivity and sign agreement with classify_dual.
GaugeReport verify_gauge_axioms(const AnyGauge& g, std::int64_t n_samples,
                                std::uint64_t seed, double tol);

/// Drops every element of C lying in the convex hull of the remaining ones
/// (exact small-subset feasibility search). evaluate() is unchanged on all x.
FiniteGauge minimal_generating_subset(const FiniteGauge& g, double tol = kDefaultTol);

/// FiniteGauge with C = unit-normalized dual generators. Equals the oriented
/// distance on -K (the sup over the dual sphere is attained at an extreme
/// ray there) and is a lower bound off -K, tight only along contact rays.
FiniteGauge gauge_from_unit_dual_sphere(const PolyhedralCone& cone);

}  // namespace conegauge
