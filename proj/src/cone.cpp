#include "conegauge/cone.hpp"

#include "conegauge/nnls.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace conegauge {

std::string to_label(ConeClassification c) {
    switch (c) {
        case ConeClassification::InteriorOfMinusK: return "interior_of_minus_k";
        case ConeClassification::BoundaryOfMinusK: return "boundary_of_minus_k";
        case ConeClassification::Exterior: return "exterior";
    }
    throw std::logic_error("bad ConeClassification");
}

bool is_finite(const RealVec& v) {
    return v.allFinite();
}

void require_finite(const RealVec& v, const char* what) {
    if (!v.allFinite()) {
        throw std::invalid_argument(std::string(what) + ": entries must be finite");
    }
}

void require_dim(const RealVec& v, Eigen::Index dim, const char* what) {
    if (v.size() != dim) {
        std::ostringstream os;
        os << what << ": dimension mismatch (got " << v.size() << ", expected " << dim
           << ")";
        throw std::invalid_argument(os.str());
    }
}

namespace {

RealMat columns(const std::vector<RealVec>& vecs) {
    RealMat A(vecs.front().size(), static_cast<Eigen::Index>(vecs.size()));
    for (Eigen::Index j = 0; j < A.cols(); ++j) A.col(j) = vecs[static_cast<std::size_t>(j)];
    return A;
}

// Drop vectors that are positive multiples of an earlier one.
std::vector<RealVec> dedup_rays(std::vector<RealVec> rays) {
    std::vector<RealVec> out;
    std::vector<RealVec> units;
    for (auto& r : rays) {
        const RealVec u = r / r.norm();
        bool dup = false;
        for (const auto& v : units) {
            if ((u - v).lpNorm<Eigen::Infinity>() <= kDedupTol) {
                dup = true;
                break;
            }
        }
        if (!dup) {
            units.push_back(u);
            out.push_back(std::move(r));
        }
    }
    return out;
}

void check_ray_list(const std::vector<RealVec>& rays, Eigen::Index dim, const char* what) {
    if (rays.empty()) {
        throw std::invalid_argument(std::string(what) + ": list must be nonempty");
    }
    for (const auto& r : rays) {
        require_dim(r, dim, what);
        require_finite(r, what);
        if (r.norm() == 0.0) {
            throw std::invalid_argument(std::string(what) + ": zero vectors are rejected");
        }
    }
}

Eigen::Index matrix_rank(const RealMat& A, double rel_tol = 1e-10) {
    Eigen::JacobiSVD<RealMat> svd(A);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) return 0;
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (s(i) > rel_tol * s(0)) ++r;
    }
    return r;
}

// Distance from b to the conic hull of the given rays.
double cone_distance(const std::vector<RealVec>& rays, const RealVec& b) {
    return nnls(columns(rays), b).residual_norm;
}

bool pointed_rays(const std::vector<RealVec>& rays, double tol) {
    // K contains a line iff -g lies in K for some generator g.
    const RealMat A = columns(rays);
    for (const auto& g : rays) {
        if (nnls(A, -g).residual_norm <= tol * g.norm()) return false;
    }
    return true;
}

// All subsets of {0..n-1} of size k, visited in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// Extreme rays of {y : <g, y> >= 0 for all g}, assuming the generators span a
// pointed full-dimensional cone. Brute force over (dim-1)-subsets.
std::vector<RealVec> polar_rays(const std::vector<RealVec>& gens, Eigen::Index dim) {
    if (dim > kPolarDimLimit) {
        throw std::invalid_argument("polar: dimension above the facet-enumeration bound");
    }
    if (static_cast<int>(gens.size()) > kPolarGeneratorLimit) {
        throw std::invalid_argument("polar: too many generators for brute-force enumeration");
    }
    if (matrix_rank(columns(gens)) < dim) {
        throw std::invalid_argument("polar: cone must be full-dimensional");
    }
    if (!pointed_rays(gens, kDefaultTol)) {
        throw std::invalid_argument("polar: cone must be pointed");
    }

    std::vector<RealVec> rays;
    auto push_candidate = [&](const RealVec& y) {
        for (const auto& r : rays) {
            if ((r - y).lpNorm<Eigen::Infinity>() <= 1e-9) return;
        }
        rays.push_back(y);
    };
    auto in_dual = [&](const RealVec& y) {
        for (const auto& g : gens) {
            if (g.dot(y) < -1e-9 * g.norm()) return false;
        }
        return true;
    };

    if (dim == 1) {
        RealVec y(1);
        y(0) = gens.front()(0) > 0 ? 1.0 : -1.0;
        return {y};
    }

    const int n = static_cast<int>(gens.size());
    const int k = static_cast<int>(dim) - 1;
    for_each_subset(n, k, [&](const std::vector<int>& idx) {
        RealMat M(k, dim);
        for (int r = 0; r < k; ++r) M.row(r) = gens[static_cast<std::size_t>(idx[r])];
        Eigen::JacobiSVD<RealMat> svd(M, Eigen::ComputeFullV);
        const auto& s = svd.singularValues();
        if (k > 0 && s(k - 1) <= 1e-10 * std::max(s(0), 1e-300)) return;  // rank < dim-1
        RealVec y = svd.matrixV().col(dim - 1);  // 1-dim null space
        if (in_dual(y)) {
            push_candidate(y);
        } else if (in_dual(-y)) {
            push_candidate(-y);
        }
    });

    if (rays.empty()) {
        throw std::runtime_error("polar: facet enumeration produced no rays");
    }
    std::sort(rays.begin(), rays.end(), [](const RealVec& a, const RealVec& b) {
        for (Eigen::Index i = 0; i < a.size(); ++i) {
            if (a(i) != b(i)) return a(i) < b(i);
        }
        return false;
    });
    return rays;
}

}  // namespace

PolyhedralCone::PolyhedralCone(std::vector<RealVec> generators,
                               std::vector<RealVec> dual_generators) {
    check_ray_list(generators, generators.empty() ? 0 : generators.front().size(),
                   "PolyhedralCone generators");
    dim_ = generators.front().size();
    generators_ = dedup_rays(std::move(generators));

    if (dual_generators.empty()) {
        dual_generators_ = polar_rays(generators_, dim_);
    } else {
        check_ray_list(dual_generators, dim_, "PolyhedralCone dual_generators");
        dual_generators_ = dedup_rays(std::move(dual_generators));
    }

    // Cross-consistency: every generator must be nonnegative on every dual ray.
    for (const auto& g : generators_) {
        for (const auto& w : dual_generators_) {
            if (g.dot(w) < -kDefaultTol * g.norm() * w.norm()) {
                throw std::invalid_argument(
                    "PolyhedralCone: generator/dual_generator pair with negative inner "
                    "product");
            }
        }
    }

    unit_duals_.reserve(dual_generators_.size());
    for (const auto& w : dual_generators_) unit_duals_.push_back(w / w.norm());
}

ConeRep::ConeRep(PolyhedralCone cone) : rep_(std::move(cone)) {}

ConeRep::ConeRep(OrthantCone cone) : rep_(cone) {
    if (cone.dim < 1) throw std::invalid_argument("OrthantCone: dim must be positive");
}

ConeRep::ConeRep(LorentzCone cone) : rep_(cone) {
    if (cone.dim < 2) throw std::invalid_argument("LorentzCone: dim must be >= 2");
}

ConeRep::Kind ConeRep::kind() const {
    if (std::holds_alternative<PolyhedralCone>(rep_)) return Kind::Polyhedral;
    if (std::holds_alternative<OrthantCone>(rep_)) return Kind::Orthant;
    return Kind::Lorentz;
}

Eigen::Index ConeRep::dim() const {
    return visit([](const auto& c) -> Eigen::Index {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, PolyhedralCone>) {
            return c.dim();
        } else {
            return c.dim;
        }
    });
}

const PolyhedralCone& ConeRep::polyhedral() const {
    if (kind() != Kind::Polyhedral) {
        throw std::invalid_argument("ConeRep: not a polyhedral cone");
    }
    return std::get<PolyhedralCone>(rep_);
}

namespace {

double lorentz_score(const RealVec& x) {
    const Eigen::Index m = x.size();
    const double t = x(m - 1);
    const double nb = x.head(m - 1).norm();
    // sup over unit-norm w in K+ of <x, w>: attained at x/||x|| inside K,
    // otherwise on the boundary ray nearest to x.
    if (t >= nb) return x.norm();
    return (nb + t) / std::numbers::sqrt2;
}

}  // namespace

double dual_score(const ConeRep& cone, const RealVec& x) {
    require_dim(x, cone.dim(), "dual_score point");
    return cone.visit([&](const auto& c) -> double {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, PolyhedralCone>) {
            double best = -std::numeric_limits<double>::infinity();
            for (const auto& w : c.unit_dual_generators()) best = std::max(best, w.dot(x));
            return best;
        } else if constexpr (std::is_same_v<T, OrthantCone>) {
            return x.maxCoeff();
        } else {
            return lorentz_score(x);
        }
    });
}

bool contains_minus_k(const ConeRep& cone, const RealVec& x, double tol) {
    if (tol < 0.0) throw std::invalid_argument("contains_minus_k: tol must be >= 0");
    return dual_score(cone, x) <= tol;
}

ConeClassification classify_dual(const ConeRep& cone, const RealVec& x, double tol) {
    if (tol < 0.0) throw std::invalid_argument("classify_dual: tol must be >= 0");
    const double s = dual_score(cone, x);
    if (s < -tol) return ConeClassification::InteriorOfMinusK;
    if (s > tol) return ConeClassification::Exterior;
    return ConeClassification::BoundaryOfMinusK;
}

PolyhedralCone polar(const PolyhedralCone& cone) {
    // (K+)+ = K, so the input generators serve as the dual generators of the
    // output; they contain every extreme ray of K.
    return PolyhedralCone(polar_rays(cone.generators(), cone.dim()), cone.generators());
}

bool is_pointed(const PolyhedralCone& cone, double tol) {
    if (tol < 0.0) throw std::invalid_argument("is_pointed: tol must be >= 0");
    return pointed_rays(cone.generators(), tol);
}

bool has_nonempty_interior(const PolyhedralCone& cone, double tol) {
    if (tol < 0.0) throw std::invalid_argument("has_nonempty_interior: tol must be >= 0");
    // int K is nonempty iff K+ is pointed.
    return pointed_rays(cone.dual_generators(), tol);
}

namespace {

RealVec lorentz_project(const RealVec& z) {
    const Eigen::Index m = z.size();
    const double t = z(m - 1);
    const double nb = z.head(m - 1).norm();
    if (nb <= t) return z;
    RealVec y = RealVec::Zero(m);
    if (nb <= -t) return y;
    const double alpha = 0.5 * (nb + t);
    y.head(m - 1) = (alpha / nb) * z.head(m - 1);
    y(m - 1) = alpha;
    return y;
}

}  // namespace

RealVec project_onto_minus_k(const ConeRep& cone, const RealVec& x) {
    require_dim(x, cone.dim(), "project_onto_minus_k point");
    require_finite(x, "project_onto_minus_k point");
    return cone.visit([&](const auto& c) -> RealVec {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, PolyhedralCone>) {
            RealMat A(c.dim(), static_cast<Eigen::Index>(c.generators().size()));
            for (Eigen::Index j = 0; j < A.cols(); ++j) {
                A.col(j) = -c.generators()[static_cast<std::size_t>(j)];
            }
            return nnls(A, x).fitted;
        } else if constexpr (std::is_same_v<T, OrthantCone>) {
            return x.cwiseMin(0.0);
        } else {
            return -lorentz_project(-x);
        }
    });
}

RealVec interior_point(const PolyhedralCone& cone) {
    RealVec s = RealVec::Zero(cone.dim());
    for (const auto& g : cone.generators()) s += g / g.norm();
    return s;
}

PolyhedralCone orthant_polyhedral(Eigen::Index dim) {
    std::vector<RealVec> basis;
    basis.reserve(static_cast<std::size_t>(dim));
    for (Eigen::Index i = 0; i < dim; ++i) {
        RealVec e = RealVec::Zero(dim);
        e(i) = 1.0;
        basis.push_back(std::move(e));
    }
    return PolyhedralCone(basis, basis);
}

}  // namespace conegauge
