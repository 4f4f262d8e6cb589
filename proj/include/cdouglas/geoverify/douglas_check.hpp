#pragma once

#include "cdouglas/geoverify/geodesic.hpp"

#include <cstdint>

namespace cdouglas::geo {

/// Base points uniform in the box [lower, upper]^n, directions uniform on the
/// Euclidean unit sphere. The first path_checks (x, y) pairs also get a path test.
struct DouglasSampler {
    int base_points = 32;
    int directions = 16;
    std::uint64_t seed = 0;
    double lower = 0.0;
    double upper = 1.0;
    int path_checks = 4;
    double path_t_end = 1.0;
    double path_tol = kDefaultGeodesicTol;
};

struct DouglasReport {
    double max_residual = 0.0;
    double max_path_deviation = 0.0;
    int samples = 0;
    int paths = 0;
    int skipped = 0;  ///< samples where the spray could not be evaluated
    double tolerance = 0.0;
    bool douglas = false;
};

constexpr double kDefaultDouglasTol = 1e-6;

/// Projective residual of 2G - Gamma(y, y) over the sample, plus Finsler vs affine
/// geodesic traces on a subset.
DouglasReport douglas_check(const MetricField& field, const AffineConnection& conn,
                            const DouglasSampler& sampler = {}, double tol = kDefaultDouglasTol);

}  // namespace cdouglas::geo
