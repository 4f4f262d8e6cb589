#include "cdouglas/prolong_nd/norm_checks.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <algorithm>
#include <limits>

namespace cdouglas::prolong {

ConvexityReport convexity_check(const HomogeneousFn& f, const std::vector<Vec>& grid,
                                double rel_tol) {
    ConvexityReport r;
    r.min_value = std::numeric_limits<double>::infinity();
    r.min_eigenvalue = std::numeric_limits<double>::infinity();
    double max_energy = 0.0;
    for (const Vec& y : grid) {
        const HomogeneousJet j = f(y);
        r.min_value = std::min(r.min_value, j.value / y.norm());
        const Mat half_hess = j.value * j.hessian + j.gradient * j.gradient.transpose();
        const Mat sym = 0.5 * (half_hess + half_hess.transpose());
        Eigen::SelfAdjointEigenSolver<Mat> es(sym, Eigen::EigenvaluesOnly);
        r.min_eigenvalue = std::min(r.min_eigenvalue, es.eigenvalues()[0] / y.squaredNorm());
        max_energy = std::max(max_energy, j.value * j.value / y.squaredNorm());
    }
    r.positive = r.min_value > 0.0;
    r.margin = rel_tol * max_energy;
    r.strictly_convex = r.positive && r.min_eigenvalue > r.margin;
    return r;
}

namespace {

Mat quadratic_design(const std::vector<Vec>& grid) {
    const int n = static_cast<int>(grid.front().size());
    Mat a(static_cast<Eigen::Index>(grid.size()), n * (n + 1) / 2);
    for (std::size_t p = 0; p < grid.size(); ++p) {
        int c = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) a(p, c++) = (i == j ? 1.0 : 2.0) * grid[p][i] * grid[p][j];
        }
    }
    return a;
}

}  // namespace

EllipsoidReport ellipsoid_fit(const Vec& values, const std::vector<Vec>& grid) {
    if (grid.empty() || values.size() != static_cast<Eigen::Index>(grid.size())) {
        throw DomainError("ellipsoid_fit: values do not match grid");
    }
    const int n = static_cast<int>(grid.front().size());
    const Vec sq = values.array().square().matrix();
    const Mat a = quadratic_design(grid);
    const Vec c = a.colPivHouseholderQr().solve(sq);
    EllipsoidReport r;
    const double denom = sq.norm();
    r.residual = denom > 0.0 ? (a * c - sq).norm() / denom : 0.0;
    r.quadratic_form = Mat::Zero(n, n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            r.quadratic_form(i, j) = c[k];
            r.quadratic_form(j, i) = c[k];
            ++k;
        }
    }
    r.ellipsoid = r.residual < kEllipsoidThreshold;
    return r;
}

Vec grid_values(const HomogeneousFn& f, const std::vector<Vec>& grid) {
    Vec v(static_cast<Eigen::Index>(grid.size()));
    for (std::size_t p = 0; p < grid.size(); ++p) v[p] = f(grid[p]).value;
    return v;
}

EllipsoidReport ellipsoid_check(const HomogeneousFn& f, const std::vector<Vec>& grid) {
    return ellipsoid_fit(grid_values(f, grid), grid);
}

LinearSplit linear_subtracted_fit(const Vec& values, const std::vector<Vec>& grid) {
    if (grid.empty() || values.size() != static_cast<Eigen::Index>(grid.size())) {
        throw DomainError("linear_subtracted_fit: values do not match grid");
    }
    const int n = static_cast<int>(grid.front().size());
    Mat y(static_cast<Eigen::Index>(grid.size()), n);
    for (std::size_t p = 0; p < grid.size(); ++p) y.row(p) = grid[p].transpose();
    // a linear form only sees the odd part, so fitting the raw values is the same
    // as fitting the odd part on an antipodal grid
    LinearSplit s;
    s.linear = y.colPivHouseholderQr().solve(values);
    s.remainder = values - y * s.linear;
    s.ellipsoid = ellipsoid_fit(s.remainder, grid);
    return s;
}

}  // namespace cdouglas::prolong
