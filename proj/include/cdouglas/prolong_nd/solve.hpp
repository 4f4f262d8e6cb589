#pragma once

#include "cdouglas/prolong_nd/norm_checks.hpp"
#include "cdouglas/prolong_nd/problem.hpp"

namespace cdouglas::prolong {

struct SolveOptions {
    double kernel_threshold = 1e-9;     ///< relative to the largest singular value
    double basis_condition_min = 1e-10; ///< smallest / largest singular value of the basis on the grid
    double alarm_threshold = 1e-4;
    double degenerate_ratio = 1e-8;
};

struct KernelElement {
    Vec coefficients;               ///< in the basis of the problem
    ConvexityReport convexity;
    EllipsoidReport ellipsoid;      ///< fit of F^2
    double linear_subtracted_residual = 0.0;  ///< ellipsoid fit after removing the linear part
    bool alarm = false;             ///< positive, strictly convex, and not alpha + beta
};

struct ProlongationSolution {
    Vec singular_values;            ///< of the column-scaled system, descending
    Mat kernel;                     ///< coefficient vectors spanning the numerical kernel
    int kernel_dimension = 0;
    /// kernel dimension modulo the linear form sigma . y, which always solves the system
    int nontrivial_kernel_dimension = 0;
    Vec coefficients;               ///< best-fit solution not proportional to sigma . y
    double residual = 0.0;          ///< |A c| / (|A| |c|) for that best fit
    double basis_condition = 0.0;
    int degenerate_points = 0;
    std::vector<KernelElement> elements;  ///< nontrivial kernel elements
    bool counterexample_candidate = false;
};

ProlongationSolution assemble_and_solve(const ProlongationProblem& prob,
                                        const SolveOptions& options = {});

/// Relative distance of target grid values from the span of the kernel.
double kernel_fit_residual(const ProlongationSolution& sol, const ProlongationProblem& prob,
                           const Vec& target_values);

}  // namespace cdouglas::prolong
