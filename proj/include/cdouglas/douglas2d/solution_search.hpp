#pragma once

#include "cdouglas/douglas2d/classification.hpp"
#include "cdouglas/douglas2d/ode.hpp"

#include <limits>
#include <optional>
#include <vector>

namespace cdouglas::douglas2d {

struct CollocationOptions {
    std::vector<int> mode_levels{64, 128, 256};  ///< refinement schedule (even harmonics 2m, m <= M)
    double kernel_threshold = 1e-6;              ///< qualifying singular value for "solution exists"
    double candidate_threshold = 1e-2;           ///< singular values inspected for positivity/convexity
    int check_points = 1024;                     ///< grid over [0, pi) for f > 0 and f'' + f > 0
};

/// One collocation level: the pi-periodic Fourier ansatz
/// f = a0 + sum_{m<=M} a_m cos(2m theta) + b_m sin(2m theta)
/// (the symmetrised solution; cos(theta) drops out), columns normalised.
struct CollocationLevel {
    int modes = 0;
    std::vector<double> smallest_singular_values;  ///< ascending, up to 4
    double qualifying_singular_value = std::numeric_limits<double>::infinity();
    int kernel_dimension = 0;  ///< singular values <= kernel_threshold
};

struct CollocationReport {
    bool found = false;
    double qualifying_singular_value = std::numeric_limits<double>::infinity();
    std::vector<CollocationLevel> levels;
    /// Coefficients (a0, a1, b1, ..., aM, bM) of the best positive convex candidate.
    std::vector<double> candidate_coefficients;
    int candidate_modes = 0;
};

/// Numerical existence test for a positive, strictly convex periodic solution.
CollocationReport collocation_search(const Quadruple& k, const CollocationOptions& opts = {});

/// Evaluates a candidate from CollocationReport at angle theta.
PeriodicProfile::Jet collocation_profile(const std::vector<double>& coefficients, double theta);

struct SolutionSearch {
    std::optional<OdeSolution> solution;
    Classification algebraic;
    CollocationReport numerical;
};

/// Runs the algebraic classification and the collocation search; throws
/// InconsistencyError if they disagree. For admissible K returns the solution
/// with const1 = 1, const2 = 0.
SolutionSearch periodic_solution_search(const Quadruple& k, const CollocationOptions& opts = {},
                                        double tol = kDefaultClassificationTol);

}  // namespace cdouglas::douglas2d
