#include "cdouglas/prolong_nd/minkowski.hpp"

#include "cdouglas/prolong_nd/norm_checks.hpp"

namespace cdouglas::prolong {

MinkowskiPair minkowski_pair(const HomogeneousFn& f, const ConnectionDelta& t, const Vec& sigma,
                             std::vector<Vec> check_grid) {
    const int n = t.dimension();
    if (sigma.size() != n) throw DomainError("minkowski_pair: sigma dimension mismatch");
    if (!(sigma.norm() > 0.0)) throw DomainError("minkowski_pair: sigma must be nonzero");
    if (check_grid.empty()) check_grid = sphere_grid(n, n == 2 ? 256 : 500);
    const ConvexityReport conv = convexity_check(f, check_grid);
    if (!conv.positive) throw DomainError("minkowski_pair: F is not positive");
    if (!conv.strictly_convex) throw DomainError("minkowski_pair: F is not strictly convex");
    MinkowskiPair pair;
    pair.minkowski = std::make_shared<ConformalMinkowskiField>(f, Vec::Zero(n));
    pair.scaled = std::make_shared<ConformalMinkowskiField>(f, sigma);
    pair.minkowski_connection = ConnectionDelta(n);
    pair.scaled_connection = -t;
    return pair;
}

MinkowskiPair minkowski_pair(const BasisExpansion& f, const ProlongationProblem& prob) {
    return minkowski_pair(f.as_function(), prob.delta, prob.sigma, prob.grid);
}

}  // namespace cdouglas::prolong
