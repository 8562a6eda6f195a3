#pragma once

#include "conegauge/cone.hpp"
#include "conegauge/descent.hpp"
#include "conegauge/gauge.hpp"

#include <json.hpp>

#include <string>

namespace conegauge {

// Cone schema:
//   {"kind":"polyhedral","dim":2,"generators":[[1,0],[1,1]],
//    "dual_generators":[[0,1],[1,-1]]}   (dual_generators optional)
//   {"kind":"orthant","dim":3}
//   {"kind":"lorentz","dim":3}
ConeRep cone_from_json(const nlohmann::json& j);
nlohmann::json cone_to_json(const ConeRep& cone);
ConeRep load_cone(const std::string& path);

// Gauge schema: {"cone": <cone object or path>, "dual_set": [[0,1],[1,-1]]}
// for a finite gauge; {"cone": ..., "kind": "oriented"} for the oriented
// distance. A string cone is resolved relative to base_dir.
AnyGauge gauge_from_json(const nlohmann::json& j, const std::string& base_dir = ".");
AnyGauge load_gauge(const std::string& path);

nlohmann::json report_to_json(const GaugeReport& report);
nlohmann::json trace_to_json(const DescentTrace& trace);

/// Problem file for the descend command:
/// {"problem":"biobjective-quadratic","x0":[2.0],
///  "cone":{"kind":"orthant","dim":2},"config":{"beta":0.1,"theta_tol":1e-8}}
struct ProblemSpec {
    std::string name;
    RealVec x0;
    ConeRep cone;
    DescentConfig config;
};

ProblemSpec problem_from_json(const nlohmann::json& j, const std::string& base_dir = ".");
ProblemSpec load_problem(const std::string& path);

/// Objective for a registered problem name; throws std::invalid_argument for
/// unknown names or a domain dimension mismatch.
VectorObjective make_registry_objective(const std::string& name, Eigen::Index domain_dim);

/// Finite gauge driving a descent run on the given cone: unit basis vectors
/// for the orthant, normalized dual generators for polyhedral cones. Lorentz
/// cones have no finite generating set and are rejected.
FiniteGauge descent_gauge_for(const ConeRep& cone);

}  // namespace conegauge
