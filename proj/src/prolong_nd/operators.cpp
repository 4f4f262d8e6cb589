#include "cdouglas/prolong_nd/operators.hpp"

#include <Eigen/SVD>

namespace cdouglas::prolong {

PointJet PointJet::from(const HomogeneousJet& jet) {
    PointJet p;
    p.value = jet.value;
    p.gradient = jet.gradient;
    p.hessian = jet.hessian;
    return p;
}

Mat main1_residual_matrix(const PointJet& f, const ConnectionDelta& t, const Vec& sigma,
                          const Vec& y) {
    const Mat hm = f.hessian * t.contract_once(y);
    const Mat rhs = f.gradient * sigma.transpose() - sigma * f.gradient.transpose();
    return hm.transpose() - hm - rhs;
}

double main1_residual(const PointJet& f, const ConnectionDelta& t, const Vec& sigma, const Vec& y,
                      int j, int s) {
    const int n = t.dimension();
    if (j < 0 || s < 0 || j >= n || s >= n) throw DomainError("main1_residual: index out of range");
    const Mat m = t.contract_once(y);
    double hm_sj = 0.0;
    double hm_js = 0.0;
    for (int i = 0; i < n; ++i) {
        hm_sj += f.hessian(s, i) * m(i, j);
        hm_js += f.hessian(j, i) * m(i, s);
    }
    return hm_sj - hm_js - (f.gradient[j] * sigma[s] - sigma[j] * f.gradient[s]);
}

double main1_residual(const BasisExpansion& f, const ProlongationProblem& prob, const Vec& y,
                      int j, int s) {
    return main1_residual(PointJet::from(f.jet(y)), prob.delta, prob.sigma, y, j, s);
}

double main1_residual(const HomogeneousFn& f, const ProlongationProblem& prob, const Vec& y,
                      int j, int s) {
    return main1_residual(PointJet::from(f(y)), prob.delta, prob.sigma, y, j, s);
}

Vec contraction_residual(const PointJet& f, const ConnectionDelta& t, const Vec& sigma,
                         const Vec& y) {
    const double sigma0 = sigma.dot(y);
    return f.hessian * t.contract(y) - f.value * sigma + sigma0 * f.gradient;
}

Vec contraction_check(const BasisExpansion& f, const ProlongationProblem& prob, const Vec& y) {
    return contraction_residual(PointJet::from(f.jet(y)), prob.delta, prob.sigma, y);
}

Vec contraction_check(const HomogeneousFn& f, const ProlongationProblem& prob, const Vec& y) {
    return contraction_residual(PointJet::from(f(y)), prob.delta, prob.sigma, y);
}

Mat prolonged_matrix(const PointJet& f, const ConnectionDelta& t, const Vec& sigma, const Vec& y) {
    const int n = t.dimension();
    if (f.third.size() != n * n * n) throw DomainError("prolonged_matrix needs third derivatives");
    const Vec v = t.contract(y);
    const Mat hm = f.hessian * t.contract_once(y);
    const double sigma0 = sigma.dot(y);
    Mat e(n, n);
    for (int l = 0; l < n; ++l) {
        for (int s = 0; s < n; ++s) {
            double third = 0.0;
            for (int i = 0; i < n; ++i) third += f.third[(i * n + s) * n + l] * v[i];
            e(l, s) = third + 2.0 * hm(s, l) - f.gradient[l] * sigma[s] + sigma[l] * f.gradient[s] +
                      sigma0 * f.hessian(s, l);
        }
    }
    return e;
}

namespace {

int rows_per_point(int n, bool full_pairs) { return full_pairs ? n * n : n * (n - 1) / 2; }

template <class Fill>
Mat assemble(const SphereBasis& basis, const std::vector<Vec>& grid, int per_point, int order,
             Fill fill) {
    const int m = basis.size();
    Mat a(static_cast<Eigen::Index>(grid.size()) * per_point, m);
    for (std::size_t p = 0; p < grid.size(); ++p) {
        const BasisJet jet = basis.evaluate(grid[p], order);
        for (int b = 0; b < m; ++b) {
            PointJet f;
            f.value = jet.value[b];
            f.gradient = jet.gradient.row(b).transpose();
            f.hessian = jet.hessian[b];
            if (order >= 3) f.third = jet.third[b];
            fill(a, static_cast<Eigen::Index>(p) * per_point, b, f, grid[p]);
        }
    }
    return a;
}

void write_pairs(Mat& a, Eigen::Index row0, int b, const Mat& r, bool full_pairs) {
    const int n = static_cast<int>(r.rows());
    Eigen::Index row = row0;
    for (int j = 0; j < n; ++j) {
        for (int s = full_pairs ? 0 : j + 1; s < n; ++s) a(row++, b) = r(j, s);
    }
}

}  // namespace

Mat assemble_main1(const SphereBasis& basis, const ConnectionDelta& t, const Vec& sigma,
                   const std::vector<Vec>& grid, bool full_pairs) {
    const int n = basis.dimension();
    return assemble(basis, grid, rows_per_point(n, full_pairs), 2,
                    [&](Mat& a, Eigen::Index row0, int b, const PointJet& f, const Vec& y) {
                        write_pairs(a, row0, b, main1_residual_matrix(f, t, sigma, y), full_pairs);
                    });
}

Mat assemble_contraction(const SphereBasis& basis, const ConnectionDelta& t, const Vec& sigma,
                         const std::vector<Vec>& grid) {
    const int n = basis.dimension();
    return assemble(basis, grid, n, 2,
                    [&](Mat& a, Eigen::Index row0, int b, const PointJet& f, const Vec& y) {
                        a.block(row0, b, n, 1) = contraction_residual(f, t, sigma, y);
                    });
}

Mat assemble_prolonged(const SphereBasis& basis, const ConnectionDelta& t, const Vec& sigma,
                       const std::vector<Vec>& grid, bool full_pairs) {
    const int n = basis.dimension();
    return assemble(basis, grid, rows_per_point(n, full_pairs), 3,
                    [&](Mat& a, Eigen::Index row0, int b, const PointJet& f, const Vec& y) {
                        const Mat e = prolonged_matrix(f, t, sigma, y);
                        write_pairs(a, row0, b, 0.5 * (e - e.transpose()), full_pairs);
                    });
}

Mat contract_full_rows(const Mat& full_main1, const std::vector<Vec>& grid) {
    if (grid.empty()) return Mat(0, full_main1.cols());
    const int n = static_cast<int>(grid.front().size());
    if (full_main1.rows() != static_cast<Eigen::Index>(grid.size()) * n * n) {
        throw DomainError("contract_full_rows: row count does not match grid");
    }
    Mat out = Mat::Zero(static_cast<Eigen::Index>(grid.size()) * n, full_main1.cols());
    for (std::size_t p = 0; p < grid.size(); ++p) {
        const Eigen::Index in0 = static_cast<Eigen::Index>(p) * n * n;
        const Eigen::Index out0 = static_cast<Eigen::Index>(p) * n;
        for (int j = 0; j < n; ++j) {
            for (int s = 0; s < n; ++s) out.row(out0 + s) += grid[p][j] * full_main1.row(in0 + j * n + s);
        }
    }
    return out;
}

Vec symbol_singular_values(const ConnectionDelta& t, const Vec& y) {
    const int n = t.dimension();
    const Vec u = y.normalized();
    // orthonormal basis of y^perp
    Mat q = Mat::Identity(n, n) - u * u.transpose();
    Eigen::JacobiSVD<Mat> perp(q, Eigen::ComputeFullU);
    const Mat e = perp.matrixU().leftCols(n - 1);
    const Mat m = t.contract_once(y);
    const int dim = n * (n - 1) / 2;
    Mat symbol(dim, dim);
    int col = 0;
    for (int a = 0; a < n - 1; ++a) {
        for (int b = a; b < n - 1; ++b) {
            Mat h = e.col(a) * e.col(b).transpose();
            h = 0.5 * (h + h.transpose());
            const Mat hm = h * m;
            const Mat r = hm.transpose() - hm;
            int row = 0;
            for (int j = 0; j < n; ++j) {
                for (int s = j + 1; s < n; ++s) symbol(row++, col) = r(j, s);
            }
            ++col;
        }
    }
    Eigen::JacobiSVD<Mat> svd(symbol);
    return svd.singularValues();
}

}  // namespace cdouglas::prolong
