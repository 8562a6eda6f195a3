#pragma once

#include "conegauge/cone.hpp"
#include "conegauge/gauge.hpp"

#include <cstdint>
#include <vector>

namespace conegauge {

/// Rectangle [xmin, xmax] x [ymin, ymax] sampled at (steps+1)^2 points.
struct LevelsetGrid {
    double xmin, xmax, ymin, ymax;
    int steps;
};

struct AxiomTally {
    std::int64_t checked = 0;
    std::int64_t homogeneity_violations = 0;
    std::int64_t subadditivity_violations = 0;
    std::int64_t sign_violations = 0;
    std::int64_t sign_checked = 0;
    double worst_homogeneity = 0.0;
    double worst_subadditivity = 0.0;
};

struct DualSphereStats {
    double best;            ///< max of <x, w> over accepted samples and probes
    std::int64_t accepted;  ///< number of samples that produced a direction
};

// Batch kernels. The ref:: versions are plain serial loops kept as the
// reference for testing; the par:: versions are the OpenMP ones and produce
// identical output element for element (the per-element code is shared and
// all randomness is counter-based).

namespace ref {

std::vector<double> dual_score_batch(const ConeRep& cone, const std::vector<RealVec>& pts);

std::vector<double> gauge_value_batch(const AnyGauge& g, const std::vector<RealVec>& pts);

/// Row-major values phi(x_i, y_j): the x index varies slowest.
std::vector<double> levelset_values(const AnyGauge& g, const LevelsetGrid& grid);

DualSphereStats dual_sphere_max(const ConeRep& cone, const RealVec& x, std::int64_t n,
                                std::uint64_t seed);

AxiomTally axiom_tally(const AnyGauge& g, std::int64_t n, std::uint64_t seed, double tol);

}  // namespace ref

namespace par {

std::vector<double> dual_score_batch(const ConeRep& cone, const std::vector<RealVec>& pts);

std::vector<double> gauge_value_batch(const AnyGauge& g, const std::vector<RealVec>& pts);

std::vector<double> levelset_values(const AnyGauge& g, const LevelsetGrid& grid);

DualSphereStats dual_sphere_max(const ConeRep& cone, const RealVec& x, std::int64_t n,
                                std::uint64_t seed);

AxiomTally axiom_tally(const AnyGauge& g, std::int64_t n, std::uint64_t seed, double tol);

}  // namespace par

namespace detail {

/// One dual-sphere sample for index i of the (seed)-stream; returns false when
/// rejection sampling produced no direction. Shared by both kernel variants.
bool dual_sphere_sample(const ConeRep& cone, const RealVec& x, std::uint64_t seed,
                        std::int64_t index, double& value_out);

/// Deterministic probes (normalized dual generators, closed-form maximizer
/// candidates); returns the max of <x, w> over them.
double dual_sphere_probes(const ConeRep& cone, const RealVec& x);

struct AxiomProbe {
    double hom_err;      ///< |phi(t x) - t phi(x)| / (1 + |phi(x)|)
    double sub_err;      ///< (phi(x+y) - phi(x) - phi(y)) / (1 + |phi(x)| + |phi(y)|)
    bool sign_checked;   ///< outside the boundary exclusion band
    bool sign_mismatch;
};

AxiomProbe axiom_probe(const AnyGauge& g, std::uint64_t seed, std::int64_t index);

}  // namespace detail

}  // namespace conegauge
