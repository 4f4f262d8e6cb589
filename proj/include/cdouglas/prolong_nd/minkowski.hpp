#pragma once

#include "cdouglas/finsler_core/metric_field.hpp"
#include "cdouglas/prolong_nd/problem.hpp"

#include <memory>

namespace cdouglas::prolong {

/// F_M(x, y) = F(y) with connection 0, and e^{sigma . x} F(y) with connection -T.
struct MinkowskiPair {
    std::shared_ptr<const MetricField> minkowski;
    std::shared_ptr<const MetricField> scaled;
    ConnectionDelta minkowski_connection;
    ConnectionDelta scaled_connection;
};

/// Throws DomainError unless F is positive and strictly convex on check_grid
/// (a default sphere grid when empty) and sigma != 0.
MinkowskiPair minkowski_pair(const HomogeneousFn& f, const ConnectionDelta& t, const Vec& sigma,
                             std::vector<Vec> check_grid = {});
MinkowskiPair minkowski_pair(const BasisExpansion& f, const ProlongationProblem& prob);

}  // namespace cdouglas::prolong
