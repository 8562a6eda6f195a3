#pragma once

#include "conegauge/types.hpp"

#include <variant>
#include <vector>

namespace conegauge {

/// Facet enumeration in polar() is brute force over coordinate subsets and is
/// limited to small instances.
inline constexpr Eigen::Index kPolarDimLimit = 6;
inline constexpr int kPolarGeneratorLimit = 24;

/// Closed convex cone in R^m given by generators (V-representation) together
/// with generators of the positive polar cone K+ (H-representation of K).
/// Vectors are validated as nonzero and finite; rays that are positive
/// multiples of an earlier one are dropped.
class PolyhedralCone {
public:
    /// When dual_generators is empty they are computed with polar(); that
    /// path requires a pointed full-dimensional cone with dim <= kPolarDimLimit.
    explicit PolyhedralCone(std::vector<RealVec> generators,
                            std::vector<RealVec> dual_generators = {});

    Eigen::Index dim() const { return dim_; }
    const std::vector<RealVec>& generators() const { return generators_; }
    const std::vector<RealVec>& dual_generators() const { return dual_generators_; }
    /// Unit-normalized dual generators, cached at construction.
    const std::vector<RealVec>& unit_dual_generators() const { return unit_duals_; }

private:
    Eigen::Index dim_;
    std::vector<RealVec> generators_;
    std::vector<RealVec> dual_generators_;
    std::vector<RealVec> unit_duals_;
};

/// Nonnegative orthant {x : x_i >= 0}.
struct OrthantCone {
    Eigen::Index dim;
};

/// Second-order cone {(xbar, t) : ||xbar|| <= t}; the last coordinate is the
/// axis entry. Requires dim >= 2.
struct LorentzCone {
    Eigen::Index dim;
};

/// Tagged union over the supported cone families.
class ConeRep {
public:
    enum class Kind { Polyhedral, Orthant, Lorentz };

    ConeRep(PolyhedralCone cone);  // NOLINT(google-explicit-constructor)
    ConeRep(OrthantCone cone);     // NOLINT(google-explicit-constructor)
    ConeRep(LorentzCone cone);     // NOLINT(google-explicit-constructor)

    Kind kind() const;
    Eigen::Index dim() const;

    const PolyhedralCone& polyhedral() const;

    template <typename Visitor>
    decltype(auto) visit(Visitor&& v) const {
        return std::visit(std::forward<Visitor>(v), rep_);
    }

private:
    std::variant<PolyhedralCone, OrthantCone, LorentzCone> rep_;
};

/// max over unit-norm dual directions w in K+ of <x, w>. Negative exactly on
/// the interior of -K, zero on its boundary, positive outside. For the
/// polyhedral case the max runs over the stored dual generators.
double dual_score(const ConeRep& cone, const RealVec& x);

/// True iff x lies in -K within tol: <x, w> <= tol * ||w|| for every dual
/// direction w.
bool contains_minus_k(const ConeRep& cone, const RealVec& x, double tol = kDefaultTol);

/// Trichotomy of the dual score with a +-tol boundary band.
ConeClassification classify_dual(const ConeRep& cone, const RealVec& x,
                                 double tol = kDefaultTol);

/// Positive polar cone K+ with generators = extreme rays, found by brute-force
/// facet enumeration over (dim-1)-subsets of the generators. Requires a
/// pointed full-dimensional cone, dim <= kPolarDimLimit and at most
/// kPolarGeneratorLimit generators. polar(polar(K)) spans the same cone as K.
PolyhedralCone polar(const PolyhedralCone& cone);

/// True iff K contains no line, decided by testing -g against the cone for
/// every generator g (nonnegative least-squares feasibility).
bool is_pointed(const PolyhedralCone& cone, double tol = kDefaultTol);

/// True iff some x has <x, w> > 0 for every dual generator w; equivalent to
/// the dual cone being pointed.
bool has_nonempty_interior(const PolyhedralCone& cone, double tol = kDefaultTol);

/// Euclidean projection onto -K. Polyhedral cones use an active-set
/// nonnegative least-squares solve; orthant and Lorentz cones use closed forms.
RealVec project_onto_minus_k(const ConeRep& cone, const RealVec& x);

/// Sum of the generators; an interior point when the cone is full-dimensional.
RealVec interior_point(const PolyhedralCone& cone);

/// The nonnegative orthant as an explicit PolyhedralCone (unit generators and
/// unit dual generators).
PolyhedralCone orthant_polyhedral(Eigen::Index dim);

}  // namespace conegauge
