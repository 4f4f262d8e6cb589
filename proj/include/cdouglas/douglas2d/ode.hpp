#pragma once

#include "cdouglas/douglas2d/classification.hpp"
#include "cdouglas/finsler_core/periodic_profile.hpp"

#include <optional>
#include <vector>

namespace cdouglas::douglas2d {

/// A candidate angular profile; positivity and convexity are checked separately.
struct OdeSolution {
    PeriodicProfile profile;
    std::optional<double> const1;
    std::optional<double> const2;
};

/// (f'' + f) P(theta) - f sin(theta) - cos(theta) f' at every grid angle.
std::vector<double> ode_residual(const PeriodicProfile& f, const Quadruple& k);
double max_abs(const std::vector<double>& v);

/// Minimum of f and of f'' + f over the grid.
struct ProfileChecks {
    double min_value = 0.0;
    double min_convexity = 0.0;
    bool positive() const { return min_value > 0.0; }
    bool strictly_convex() const { return min_convexity > 0.0; }
};
ProfileChecks check_profile(const PeriodicProfile& f);

/// f = const1 sqrt(g11 cos^2 + 2 g12 cos sin + g22 sin^2) + const2 cos, with g the
/// normalised metric of an admissible classification. Closed-form derivatives.
OdeSolution general_solution(const Classification& cls, double const1, double const2,
                             int resolution = PeriodicProfile::kDefaultResolution);

/// Same family for an explicit symmetric positive-definite matrix.
PeriodicProfile metric_profile(const Eigen::Matrix2d& g, double const1, double const2,
                               int resolution = PeriodicProfile::kDefaultResolution);

/// f_s(theta) = f(theta) + f(theta + pi).
PeriodicProfile symmetrize(const PeriodicProfile& f);

/// H = f' cos + f sin, G = H / P, and the residual of (ln G)' = (cos - P') / P,
/// sampled on the half-step offset grid. Points where P, cos or H nearly vanish
/// are flagged and excluded from the norms.
struct HgDiagnostics {
    std::vector<double> theta;
    std::vector<double> h;
    std::vector<double> g;          ///< H / P
    std::vector<double> g_product;  ///< H' / cos = f'' + f
    std::vector<double> ln_residual;
    std::vector<bool> flagged;
    double max_ln_residual = 0.0;
    double max_g_mismatch = 0.0;  ///< max |H/P - H'/cos| over unflagged points
    double min_g = 0.0;
    int flagged_count = 0;
};
HgDiagnostics hg_diagnostics(const PeriodicProfile& f, const Quadruple& k,
                             double flag_threshold = 1e-3);

}  // namespace cdouglas::douglas2d
