#include "cdouglas/prolong_nd/solve.hpp"

#include "cdouglas/prolong_nd/operators.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

namespace cdouglas::prolong {

namespace {

Vec linear_values(const Vec& sigma, const std::vector<Vec>& grid) {
    Vec v(static_cast<Eigen::Index>(grid.size()));
    for (std::size_t p = 0; p < grid.size(); ++p) v[p] = sigma.dot(grid[p]);
    return v;
}

}  // namespace

ProlongationSolution assemble_and_solve(const ProlongationProblem& prob, const SolveOptions& options) {
    const SphereBasis basis = prob.basis();
    const Mat phi = basis.values(prob.grid);

    ProlongationSolution sol;
    {
        Vec norms = phi.colwise().norm().transpose();
        Mat scaled = phi * norms.cwiseInverse().asDiagonal();
        Eigen::BDCSVD<Mat> svd(scaled);
        const Vec& sv = svd.singularValues();
        sol.basis_condition = sv[0] > 0.0 ? sv[sv.size() - 1] / sv[0] : 0.0;
        if (phi.cols() > phi.rows() || sol.basis_condition < options.basis_condition_min) {
            throw NumericalError("basis is ill-conditioned on the grid (increase grid size or lower degree)");
        }
    }

    const Mat a = assemble_main1(basis, prob.delta, prob.sigma, prob.grid);
    Vec col_norm = a.colwise().norm().transpose();
    for (Eigen::Index c = 0; c < col_norm.size(); ++c) {
        if (!(col_norm[c] > 0.0)) col_norm[c] = 1.0;
    }
    const Mat scaled = a * col_norm.cwiseInverse().asDiagonal();
    Eigen::BDCSVD<Mat> svd(scaled, Eigen::ComputeThinV);
    sol.singular_values = svd.singularValues();
    const Eigen::Index m = scaled.cols();
    const double smax = sol.singular_values.size() ? sol.singular_values[0] : 0.0;
    const double cut = options.kernel_threshold * smax;
    int kdim = 0;
    // a tall system has m singular values; missing ones (rows < cols) count as zero
    for (Eigen::Index k = 0; k < m; ++k) {
        const double s = k < sol.singular_values.size() ? sol.singular_values[k] : 0.0;
        if (s <= cut) ++kdim;
    }
    sol.kernel_dimension = kdim;
    const Mat v = svd.matrixV();
    sol.kernel = col_norm.cwiseInverse().asDiagonal() * v.rightCols(kdim);

    // kernel modulo the linear form, measured on grid values
    const Vec lin = linear_values(prob.sigma, prob.grid);
    const Vec lin_unit = lin / lin.norm();
    const Vec lin_coef = phi.colPivHouseholderQr().solve(lin);
    Mat kvals = phi * sol.kernel;
    Mat kcoef = sol.kernel;
    for (Eigen::Index c = 0; c < kvals.cols(); ++c) {
        const double proj = lin_unit.dot(kvals.col(c));
        kvals.col(c) -= proj * lin_unit;
    }
    if (kdim > 0) {
        Eigen::JacobiSVD<Mat> ks(kvals, Eigen::ComputeThinV);
        const Vec kv = ks.singularValues();
        const double ref = (phi * sol.kernel).colwise().norm().maxCoeff();
        int nontrivial = 0;
        for (Eigen::Index k = 0; k < kv.size(); ++k) {
            if (kv[k] > 1e-6 * ref) ++nontrivial;
        }
        sol.nontrivial_kernel_dimension = nontrivial;
        const Mat dirs = kcoef * ks.matrixV().leftCols(nontrivial);
        for (int e = 0; e < nontrivial; ++e) {
            Vec c = dirs.col(e);
            c -= (lin.dot(phi * c) / lin.squaredNorm()) * lin_coef;
            Vec vals = phi * c;
            if (vals.sum() < 0.0) {
                c = -c;
                vals = -vals;
            }
            c /= vals.cwiseAbs().maxCoeff();
            vals = phi * c;
            KernelElement el;
            el.coefficients = c;
            const BasisExpansion expansion(basis, c);
            el.convexity = convexity_check(expansion.as_function(), prob.grid);
            el.ellipsoid = ellipsoid_fit(vals, prob.grid);
            el.linear_subtracted_residual = linear_subtracted_fit(vals, prob.grid).ellipsoid.residual;
            el.alarm = el.convexity.positive && el.convexity.strictly_convex &&
                       el.linear_subtracted_residual > options.alarm_threshold;
            sol.counterexample_candidate = sol.counterexample_candidate || el.alarm;
            sol.elements.push_back(std::move(el));
        }
    }

    // best fit away from the linear form: the smallest singular direction after
    // deflating the values of sigma . y
    {
        Mat p = Mat::Identity(m, m);
        const Vec u = (col_norm.asDiagonal() * lin_coef).normalized();
        p -= u * u.transpose();
        Eigen::BDCSVD<Mat> defl(scaled * p, Eigen::ComputeThinV);
        const Vec& dsv = defl.singularValues();
        // the deflated direction itself is the zero singular value; skip it
        Eigen::Index pick = -1;
        for (Eigen::Index k = dsv.size() - 1; k >= 0; --k) {
            const Vec w = defl.matrixV().col(k);
            if (std::abs(w.dot(u)) < 0.5) {
                pick = k;
                break;
            }
        }
        if (pick >= 0) {
            const Vec w = defl.matrixV().col(pick);
            sol.coefficients = col_norm.cwiseInverse().asDiagonal() * (p * w);
            sol.residual = smax > 0.0 ? dsv[pick] / smax : 0.0;
        }
    }

    for (const Vec& y : prob.grid) {
        const Vec s = symbol_singular_values(prob.delta, y);
        if (s[0] <= 0.0 || s[s.size() - 1] < options.degenerate_ratio * s[0]) ++sol.degenerate_points;
    }
    return sol;
}

double kernel_fit_residual(const ProlongationSolution& sol, const ProlongationProblem& prob,
                           const Vec& target_values) {
    const double denom = target_values.norm();
    if (sol.kernel_dimension == 0) return denom > 0.0 ? 1.0 : 0.0;
    const Mat kvals = prob.basis().values(prob.grid) * sol.kernel;
    const Vec c = kvals.colPivHouseholderQr().solve(target_values);
    return denom > 0.0 ? (kvals * c - target_values).norm() / denom : 0.0;
}

}  // namespace cdouglas::prolong
