#include "cdouglas/prolong_nd/sphere_basis.hpp"

#include <cmath>

namespace cdouglas::prolong {

namespace {

void enumerate_exponents(int n, int degree, std::vector<int>& current, int pos,
                         std::vector<std::vector<int>>& out) {
    if (pos == n - 1) {
        current[pos] = degree;
        out.push_back(current);
        return;
    }
    for (int e = degree; e >= 0; --e) {
        current[pos] = e;
        enumerate_exponents(n, degree - e, current, pos + 1, out);
    }
}

double ipow(double x, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

// Partial derivative of the monomial y^alpha along the listed indices.
double monomial_derivative(const std::vector<int>& alpha, const Vec& y, const int* idx, int count) {
    std::vector<int> a = alpha;
    double coef = 1.0;
    for (int q = 0; q < count; ++q) {
        const int i = idx[q];
        if (a[i] == 0) return 0.0;
        coef *= a[i];
        --a[i];
    }
    for (std::size_t i = 0; i < a.size(); ++i) coef *= ipow(y[i], a[i]);
    return coef;
}

// Derivatives of w = Q(y)^{s/2} along the listed indices (order <= 3), u = Q y.
double radial_derivative(double s, double rho, const Vec& u, const Mat& q, const int* idx, int count) {
    switch (count) {
        case 0: return std::pow(rho, s);
        case 1: return s * std::pow(rho, s - 2) * u[idx[0]];
        case 2: {
            const int i = idx[0], j = idx[1];
            return s * (s - 2) * std::pow(rho, s - 4) * u[i] * u[j] + s * std::pow(rho, s - 2) * q(i, j);
        }
        case 3: {
            const int i = idx[0], j = idx[1], k = idx[2];
            return s * (s - 2) * (s - 4) * std::pow(rho, s - 6) * u[i] * u[j] * u[k] +
                   s * (s - 2) * std::pow(rho, s - 4) * (q(i, k) * u[j] + q(j, k) * u[i] + q(i, j) * u[k]);
        }
        default: return 0.0;
    }
}

// Leibniz rule over all splittings of the index list between monomial and radial factor.
double product_derivative(const std::vector<int>& alpha, double s, double rho, const Vec& y,
                          const Vec& u, const Mat& q, const int* idx, int count) {
    double acc = 0.0;
    for (int mask = 0; mask < (1 << count); ++mask) {
        int mono[3] = {0, 0, 0};
        int rad[3] = {0, 0, 0};
        int nm = 0;
        int nr = 0;
        for (int b = 0; b < count; ++b) {
            if (mask & (1 << b)) mono[nm++] = idx[b];
            else rad[nr++] = idx[b];
        }
        const double dm = monomial_derivative(alpha, y, mono, nm);
        if (dm == 0.0) continue;
        acc += dm * radial_derivative(s, rho, u, q, rad, nr);
    }
    return acc;
}

}  // namespace

SphereBasis::SphereBasis(int dimension, int degree)
    : SphereBasis(dimension, degree, Mat::Identity(dimension, dimension)) {}

SphereBasis::SphereBasis(int dimension, int degree, Mat reference)
    : n_(dimension), degree_(degree), reference_(std::move(reference)) {
    if (dimension < 2) throw DomainError("sphere basis needs dimension >= 2");
    if (degree < 1) throw DomainError("sphere basis needs degree >= 1");
    if (reference_.rows() != n_ || reference_.cols() != n_ || !is_positive_definite(reference_)) {
        throw DomainError("sphere basis reference form must be symmetric positive definite");
    }
    reference_ = 0.5 * (reference_ + reference_.transpose()).eval();
    std::vector<int> current(n_, 0);
    enumerate_exponents(n_, degree_, current, 0, exponents_);
    enumerate_exponents(n_, degree_ - 1, current, 0, exponents_);
}

BasisJet SphereBasis::evaluate(const Vec& y, int max_order) const {
    if (y.size() != n_) throw DomainError("sphere basis: dimension mismatch");
    const Vec u = reference_ * y;
    const double rho = std::sqrt(y.dot(u));
    if (!(rho > 0.0)) throw DomainError("sphere basis evaluated at the zero vector");
    const int m = size();
    BasisJet jet;
    jet.value.resize(m);
    if (max_order >= 1) jet.gradient.resize(m, n_);
    if (max_order >= 2) jet.hessian.assign(m, Mat(n_, n_));
    if (max_order >= 3) jet.third.assign(m, Vec(n_ * n_ * n_));
    for (int b = 0; b < m; ++b) {
        const auto& alpha = exponents_[b];
        int d = 0;
        for (int e : alpha) d += e;
        const double s = 1.0 - d;
        jet.value[b] = product_derivative(alpha, s, rho, y, u, reference_, nullptr, 0);
        if (max_order < 1) continue;
        for (int i = 0; i < n_; ++i) {
            const int idx[1] = {i};
            jet.gradient(b, i) = product_derivative(alpha, s, rho, y, u, reference_, idx, 1);
        }
        if (max_order < 2) continue;
        for (int i = 0; i < n_; ++i) {
            for (int j = i; j < n_; ++j) {
                const int idx[2] = {i, j};
                const double v = product_derivative(alpha, s, rho, y, u, reference_, idx, 2);
                jet.hessian[b](i, j) = v;
                jet.hessian[b](j, i) = v;
            }
        }
        if (max_order < 3) continue;
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) {
                for (int k = 0; k < n_; ++k) {
                    const int idx[3] = {i, j, k};
                    jet.third[b][(i * n_ + j) * n_ + k] =
                        product_derivative(alpha, s, rho, y, u, reference_, idx, 3);
                }
            }
        }
    }
    return jet;
}

Mat SphereBasis::values(const std::vector<Vec>& grid) const {
    Mat out(static_cast<int>(grid.size()), size());
    for (std::size_t p = 0; p < grid.size(); ++p) out.row(static_cast<int>(p)) = evaluate(grid[p], 0).value.transpose();
    return out;
}

BasisExpansion::BasisExpansion(SphereBasis basis, Vec coefficients)
    : basis_(std::move(basis)), coefficients_(std::move(coefficients)) {
    if (coefficients_.size() != basis_.size()) {
        throw DomainError("basis expansion: coefficient count does not match basis size");
    }
}

double BasisExpansion::value(const Vec& y) const {
    return basis_.evaluate(y, 0).value.dot(coefficients_);
}

HomogeneousJet BasisExpansion::jet(const Vec& y) const {
    const BasisJet b = basis_.evaluate(y, 2);
    HomogeneousJet out;
    out.value = b.value.dot(coefficients_);
    out.gradient = b.gradient.transpose() * coefficients_;
    out.hessian = Mat::Zero(basis_.dimension(), basis_.dimension());
    for (int q = 0; q < basis_.size(); ++q) out.hessian += coefficients_[q] * b.hessian[q];
    return out;
}

HomogeneousFn BasisExpansion::as_function() const {
    return [self = *this](const Vec& y) { return self.jet(y); };
}

}  // namespace cdouglas::prolong
