#pragma once

#include "cdouglas/finsler_core/periodic_profile.hpp"

#include <vector>

namespace cdouglas::prolong {

struct ConvexityReport {
    bool positive = false;
    bool strictly_convex = false;
    double min_value = 0.0;
    /// min over the grid of the smallest eigenvalue of 1/2 [F^2]_{yy}
    double min_eigenvalue = 0.0;
    double margin = 0.0;
};

/// Strict convexity of a positive 1-homogeneous F: 1/2 [F^2]_{yy} positive
/// definite at every grid point, relative margin rel_tol * max F^2.
ConvexityReport convexity_check(const HomogeneousFn& f, const std::vector<Vec>& grid,
                                double rel_tol = 1e-9);

struct EllipsoidReport {
    double residual = 0.0;  ///< |F^2 - Q| / |F^2| on the grid
    Mat quadratic_form;
    bool ellipsoid = false;
};

constexpr double kEllipsoidThreshold = 1e-8;

/// Least-squares fit of squared values by a quadratic form y^T Q y.
EllipsoidReport ellipsoid_fit(const Vec& values, const std::vector<Vec>& grid);
EllipsoidReport ellipsoid_check(const HomogeneousFn& f, const std::vector<Vec>& grid);

struct LinearSplit {
    Vec linear;        ///< b with F - b . y having no odd linear component
    Vec remainder;     ///< F - b . y on the grid
    EllipsoidReport ellipsoid;  ///< fit of the remainder
};

/// Least-squares fit of the odd part of F by a linear form, then an ellipsoid fit
/// of what is left. A Randers norm alpha + beta gives residual ~ 0.
/// The grid must be antipodally symmetric.
LinearSplit linear_subtracted_fit(const Vec& values, const std::vector<Vec>& grid);

Vec grid_values(const HomogeneousFn& f, const std::vector<Vec>& grid);

}  // namespace cdouglas::prolong
