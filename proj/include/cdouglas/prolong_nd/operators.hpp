#pragma once

#include "cdouglas/prolong_nd/problem.hpp"

namespace cdouglas::prolong {

/// Derivatives of a 1-homogeneous F at one point; third is the flattened n^3 array
/// (i*n + j)*n + k and may be empty when not needed.
struct PointJet {
    double value = 0.0;
    Vec gradient;
    Mat hessian;
    Vec third;

    static PointJet from(const HomogeneousJet& jet);
};

/// R(j, s) = F_{is} T^i_{jk} y^k - F_{ij} T^i_{sk} y^k - (F_j sigma_s - sigma_j F_s).
/// Antisymmetric; zero iff F solves the system at y.
Mat main1_residual_matrix(const PointJet& f, const ConnectionDelta& t, const Vec& sigma,
                          const Vec& y);
double main1_residual(const PointJet& f, const ConnectionDelta& t, const Vec& sigma, const Vec& y,
                      int j, int s);
double main1_residual(const BasisExpansion& f, const ProlongationProblem& prob, const Vec& y,
                      int j, int s);
double main1_residual(const HomogeneousFn& f, const ProlongationProblem& prob, const Vec& y,
                      int j, int s);

/// C_s = T^i_{jk} F_{is} y^j y^k - F sigma_s + sigma_0 F_s.
Vec contraction_residual(const PointJet& f, const ConnectionDelta& t, const Vec& sigma,
                         const Vec& y);
Vec contraction_check(const BasisExpansion& f, const ProlongationProblem& prob, const Vec& y);
Vec contraction_check(const HomogeneousFn& f, const ProlongationProblem& prob, const Vec& y);

/// E(l, s) = d/dy^l of C_s. Needs third derivatives.
Mat prolonged_matrix(const PointJet& f, const ConnectionDelta& t, const Vec& sigma, const Vec& y);

/// Linear operators on basis coefficients, one block of rows per grid point.
/// full_pairs = true gives all n^2 (j, s) rows per point, otherwise only j < s.
Mat assemble_main1(const SphereBasis& basis, const ConnectionDelta& t, const Vec& sigma,
                   const std::vector<Vec>& grid, bool full_pairs = false);
/// n rows per point.
Mat assemble_contraction(const SphereBasis& basis, const ConnectionDelta& t, const Vec& sigma,
                         const std::vector<Vec>& grid);
/// Rows 1/2 (E(l, s) - E(s, l)) for the pairs of assemble_main1.
Mat assemble_prolonged(const SphereBasis& basis, const ConnectionDelta& t, const Vec& sigma,
                       const std::vector<Vec>& grid, bool full_pairs = false);
/// Contracts a full-pair main1 matrix with y^j point by point.
Mat contract_full_rows(const Mat& full_main1, const std::vector<Vec>& grid);

/// Singular values of the principal symbol H -> HM - (HM)^T on symmetric H with
/// H y = 0 (a square map). A small ratio marks a degenerate direction where the
/// second derivatives are not determined locally.
Vec symbol_singular_values(const ConnectionDelta& t, const Vec& y);

}  // namespace cdouglas::prolong
