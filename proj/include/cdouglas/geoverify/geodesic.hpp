#pragma once

#include "cdouglas/geoverify/connection.hpp"

#include <vector>

namespace cdouglas::geo {

struct GeodesicPath {
    std::vector<double> t;
    std::vector<Vec> x;
    std::vector<Vec> v;
    int steps = 0;
    double tolerance = 0.0;
    /// max relative drift of F(x, x') along Finsler paths; 0 for affine paths
    double speed_drift = 0.0;
    /// integration stopped early: the path left the region |x - x0| <= kEscapeRadius
    /// or its coordinate speed grew beyond kEscapeSpeedFactor times the initial one
    bool escaped = false;
};

constexpr double kEscapeRadius = 1e2;
constexpr double kEscapeSpeedFactor = 1e4;
constexpr int kMaxSteps = 1000000;
/// dense-output points recorded inside every accepted step
constexpr int kSubSamples = 4;

constexpr double kDefaultGeodesicTol = 1e-9;
constexpr int kDefaultPathSamples = 201;

/// x'' + 2 G(x, x') = 0 by adaptive Dormand-Prince with dense output. Records
/// `samples` uniform times on [0, t_end] plus kSubSamples points per step, so the
/// times are not uniform. Throws DomainError if F(x0, y0) <= 0 and NumericalError
/// if the integration leaves the regular region.
GeodesicPath integrate_finsler_geodesic(const MetricField& field, const Vec& x0, const Vec& y0,
                                        double t_end, double tol = kDefaultGeodesicTol,
                                        int samples = kDefaultPathSamples);

/// x''^i + Gamma^i_{jk}(x) x'^j x'^k = 0.
GeodesicPath integrate_affine_geodesic(const AffineConnection& conn, const Vec& x0, const Vec& y0,
                                       double t_end, double tol = kDefaultGeodesicTol,
                                       int samples = kDefaultPathSamples);

/// Arc length of the sampled path (cubic Hermite pieces).
double path_length(const GeodesicPath& p);

/// Both paths resampled by Euclidean arc length on the common prefix; returns the
/// largest distance between corresponding points. Throws DomainError if the start
/// points differ.
double path_projective_match(const GeodesicPath& p1, const GeodesicPath& p2, int samples = 500);

}  // namespace cdouglas::geo
