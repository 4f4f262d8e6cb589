#pragma once

#include "cdouglas/finsler_core/periodic_profile.hpp"

#include <vector>

namespace cdouglas::prolong {

/// Derivatives of every basis function at one point. third[b] is the flattened
/// n^3 array of third derivatives, index (i*n + j)*n + k.
struct BasisJet {
    Vec value;
    Mat gradient;               ///< (basis, i)
    std::vector<Mat> hessian;   ///< per basis function
    std::vector<Vec> third;     ///< per basis function, only when requested
};

/// 1-homogeneous functions y^a Q(y)^{(1 - |a|)/2} with |a| in {L, L-1}, where Q is a
/// reference quadratic form (identity by default). Restricted to the Q-sphere they span
/// all spherical harmonics up to degree L, and they are 1-homogeneous by construction.
class SphereBasis {
public:
    SphereBasis(int dimension, int degree);
    SphereBasis(int dimension, int degree, Mat reference);

    int dimension() const { return n_; }
    int degree() const { return degree_; }
    int size() const { return static_cast<int>(exponents_.size()); }
    const std::vector<std::vector<int>>& exponents() const { return exponents_; }
    const Mat& reference() const { return reference_; }

    /// max_order in {0, 1, 2, 3}.
    BasisJet evaluate(const Vec& y, int max_order = 2) const;
    /// Values of all basis functions at each grid point (rows = points).
    Mat values(const std::vector<Vec>& grid) const;

private:
    int n_;
    int degree_;
    Mat reference_;
    std::vector<std::vector<int>> exponents_;
};

/// A function F = sum c_b phi_b in a SphereBasis.
class BasisExpansion {
public:
    BasisExpansion(SphereBasis basis, Vec coefficients);

    const SphereBasis& basis() const { return basis_; }
    const Vec& coefficients() const { return coefficients_; }

    double value(const Vec& y) const;
    HomogeneousJet jet(const Vec& y) const;
    HomogeneousFn as_function() const;

private:
    SphereBasis basis_;
    Vec coefficients_;
};

}  // namespace cdouglas::prolong
