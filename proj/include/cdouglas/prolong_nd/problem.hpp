#pragma once

#include "cdouglas/finsler_core/connection_delta.hpp"
#include "cdouglas/prolong_nd/sphere_basis.hpp"

#include <cstdint>
#include <vector>

namespace cdouglas::prolong {

/// Antipodally symmetric quasi-uniform directions on the unit sphere of R^n:
/// uniform angles for n = 2, a Fibonacci hemisphere for n = 3, seeded Gaussian
/// samples for n >= 4. count must be even.
std::vector<Vec> sphere_grid(int dimension, int count, std::uint64_t seed = 0);

/// The system's data at one tangent space: T, a constant nonzero covector sigma,
/// a truncated basis and a sphere grid.
struct ProlongationProblem {
    int dimension = 0;
    ConnectionDelta delta;
    Vec sigma;
    int degree = 6;
    std::vector<Vec> grid;
    Mat basis_reference;  ///< reference quadratic form of the basis (identity by default)

    static constexpr int kMaxDefaultDimension = 4;

    /// Validates n >= 3 (n <= 4 unless allow_large), sigma != 0, dimensions, and
    /// builds the default grid (500 points for n = 3, 1500 for n = 4) when grid_size <= 0.
    static ProlongationProblem create(ConnectionDelta delta, Vec sigma, int degree = 6,
                                      int grid_size = 0, std::uint64_t seed = 0,
                                      Mat basis_reference = Mat(), bool allow_large = false);

    SphereBasis basis() const { return SphereBasis(dimension, degree, basis_reference); }
};

/// T^1_jj = 1, every other entry 0: the difference tensor of the flat metric with
/// sigma = (1, 0, ..., 0).
ConnectionDelta simple_delta(int dimension);

/// T = Gamma - Gamma~ for the constant metric g and e^{2 sigma . x} g:
/// T^i_jk = g_jk sigma^i - delta^i_j sigma_k - delta^i_k sigma_j.
ConnectionDelta randers_delta(const Mat& g, const Vec& sigma);

}  // namespace cdouglas::prolong
