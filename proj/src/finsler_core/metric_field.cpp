#include "cdouglas/finsler_core/metric_field.hpp"

#include <array>
#include <cmath>

namespace cdouglas {

namespace {

// Fourth-order central first-derivative stencil at offsets -2h, -h, h, 2h.
constexpr std::array<int, 4> kOffsets{-2, -1, 1, 2};
constexpr std::array<double, 4> kWeights{1.0 / 12.0, -8.0 / 12.0, 8.0 / 12.0, -1.0 / 12.0};

template <typename Fn>
double first_derivative(const Fn& fn, double h) {
    double acc = 0.0;
    for (int p = 0; p < 4; ++p) acc += kWeights[p] * fn(kOffsets[p] * h);
    return acc / h;
}

template <typename Fn>
double second_derivative(const Fn& fn, double h) {
    return (-fn(2 * h) + 16.0 * fn(h) - 30.0 * fn(0.0) + 16.0 * fn(-h) - fn(-2 * h)) /
           (12.0 * h * h);
}

template <typename Fn>
double mixed_derivative(const Fn& fn, double ha, double hb) {
    double acc = 0.0;
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q)
            acc += kWeights[p] * kWeights[q] * fn(kOffsets[p] * ha, kOffsets[q] * hb);
    return acc / (ha * hb);
}

}  // namespace

ScalarField ScalarField::zero(int dimension) {
    return {[](const Vec&) { return 0.0; }, [dimension](const Vec&) -> Vec { return Vec::Zero(dimension); }};
}

ScalarField ScalarField::linear(const Vec& covector) {
    return {[covector](const Vec& x) { return covector.dot(x); },
            [covector](const Vec&) -> Vec { return covector; }};
}

ScalarField ScalarField::composed(std::function<double(double)> gamma,
                                  std::function<double(double)> dgamma, const Vec& covector) {
    return {[gamma, covector](const Vec& x) { return gamma(covector.dot(x)); },
            [dgamma, covector](const Vec& x) -> Vec { return dgamma(covector.dot(x)) * covector; }};
}

EnergyJet MetricField::energy_jet(const Vec& x, const Vec& y) const {
    return finite_difference_energy_jet(*this, x, y, diff_);
}

EnergyJet finite_difference_energy_jet(const MetricField& field, const Vec& x, const Vec& y,
                                       const DifferentiationConfig& cfg) {
    const int n = field.dimension();
    if (x.size() != n || y.size() != n) throw DomainError("dimension mismatch in energy jet");
    auto energy = [&field](const Vec& xx, const Vec& yy) {
        const double f = field.value(xx, yy);
        return f * f;
    };
    const double hy1 = cfg.first_step * (1.0 + y.norm());
    const double hy2 = cfg.second_step * (1.0 + y.norm());
    const double hx1 = cfg.first_step * (1.0 + x.norm());
    const double hx2 = cfg.second_step * (1.0 + x.norm());

    EnergyJet jet;
    jet.energy = energy(x, y);
    jet.dy.resize(n);
    jet.dx.resize(n);
    jet.dyy.resize(n, n);
    jet.dxdy.resize(n, n);

    for (int l = 0; l < n; ++l) {
        jet.dy[l] = first_derivative(
            [&](double d) {
                Vec yy = y;
                yy[l] += d;
                return energy(x, yy);
            },
            hy1);
        jet.dx[l] = first_derivative(
            [&](double d) {
                Vec xx = x;
                xx[l] += d;
                return energy(xx, y);
            },
            hx1);
    }
    for (int a = 0; a < n; ++a) {
        jet.dyy(a, a) = second_derivative(
            [&](double d) {
                Vec yy = y;
                yy[a] += d;
                return energy(x, yy);
            },
            hy2);
        for (int b = a + 1; b < n; ++b) {
            jet.dyy(a, b) = mixed_derivative(
                [&](double da, double db) {
                    Vec yy = y;
                    yy[a] += da;
                    yy[b] += db;
                    return energy(x, yy);
                },
                hy2, hy2);
            jet.dyy(b, a) = jet.dyy(a, b);
        }
    }
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            jet.dxdy(k, l) = mixed_derivative(
                [&](double dk, double dl) {
                    Vec xx = x;
                    Vec yy = y;
                    xx[k] += dk;
                    yy[l] += dl;
                    return energy(xx, yy);
                },
                hx2, hy2);
        }
    }
    return jet;
}

ConformalMinkowskiField::ConformalMinkowskiField(HomogeneousFn norm, Vec sigma)
    : norm_(std::move(norm)), sigma_(std::move(sigma)) {
    if (sigma_.size() < 1) throw DomainError("conformal covector must have positive dimension");
}

double ConformalMinkowskiField::value(const Vec& x, const Vec& y) const {
    return std::exp(sigma_.dot(x)) * norm_(y).value;
}

EnergyJet ConformalMinkowskiField::energy_jet(const Vec& x, const Vec& y) const {
    const HomogeneousJet f = norm_(y);
    const double scale = std::exp(2.0 * sigma_.dot(x));
    EnergyJet jet;
    jet.energy = scale * f.value * f.value;
    jet.dy = scale * 2.0 * f.value * f.gradient;
    jet.dyy = scale * 2.0 * (f.gradient * f.gradient.transpose() + f.value * f.hessian);
    jet.dx = 2.0 * jet.energy * sigma_;
    jet.dxdy = 2.0 * sigma_ * jet.dy.transpose();
    return jet;
}

double ConformallyScaledField::value(const Vec& x, const Vec& y) const {
    return std::exp(sigma_.value(x)) * base_->value(x, y);
}

RiemannianMetricField RiemannianMetricField::constant(const Mat& g) {
    const int n = static_cast<int>(g.rows());
    return {n, [g](const Vec&) -> Mat { return g; },
            [n](const Vec&) { return std::vector<Mat>(n, Mat::Zero(n, n)); }};
}

RiemannianMetricField RiemannianMetricField::conformal(const Mat& g0, ScalarField phi) {
    const int n = static_cast<int>(g0.rows());
    return {n, [g0, phi](const Vec& x) -> Mat { return std::exp(2.0 * phi.value(x)) * g0; },
            [g0, phi, n](const Vec& x) {
                const double s = std::exp(2.0 * phi.value(x));
                const Vec grad = phi.gradient(x);
                std::vector<Mat> out(n);
                for (int k = 0; k < n; ++k) out[k] = 2.0 * grad[k] * s * g0;
                return out;
            }};
}

RiemannianMetricField RiemannianMetricField::from_function(int dimension,
                                                           std::function<Mat(const Vec&)> g,
                                                           double step) {
    return {dimension, g, [g, dimension, step](const Vec& x) {
                std::vector<Mat> out(dimension);
                const double h = step * (1.0 + x.norm());
                for (int k = 0; k < dimension; ++k) {
                    Mat acc = Mat::Zero(dimension, dimension);
                    for (int p = 0; p < 4; ++p) {
                        Vec xx = x;
                        xx[k] += kOffsets[p] * h;
                        acc += kWeights[p] * g(xx);
                    }
                    out[k] = acc / h;
                }
                return out;
            }};
}

RandersField::RandersField(Mat g0, Vec b0, ScalarField phi)
    : g0_(std::move(g0)), b0_(std::move(b0)), phi_(std::move(phi)) {
    if (g0_.rows() != b0_.size() || g0_.cols() != b0_.size()) {
        throw DomainError("Randers field: metric and one-form dimensions differ");
    }
    if (!g0_.isApprox(g0_.transpose(), 1e-14) || !is_positive_definite(g0_)) {
        throw DomainError("Randers field: Riemannian part must be symmetric positive definite");
    }
    if (!(oneform_norm() < 1.0)) {
        throw DomainError("Randers field: one-form must have g-norm < 1");
    }
}

RandersField::RandersField(Mat g0, Vec b0)
    : RandersField(g0, b0, ScalarField::zero(static_cast<int>(b0.size()))) {}

double RandersField::oneform_norm() const {
    return std::sqrt(b0_.dot(g0_.ldlt().solve(b0_)));
}

double RandersField::value(const Vec& x, const Vec& y) const {
    return std::exp(phi_.value(x)) * (std::sqrt(y.dot(g0_ * y)) + b0_.dot(y));
}

EnergyJet RandersField::energy_jet(const Vec& x, const Vec& y) const {
    const HomogeneousJet f = randers_norm_jet(g0_, b0_, y);
    const double scale = std::exp(2.0 * phi_.value(x));
    const Vec grad = phi_.gradient(x);
    EnergyJet jet;
    jet.energy = scale * f.value * f.value;
    jet.dy = scale * 2.0 * f.value * f.gradient;
    jet.dyy = scale * 2.0 * (f.gradient * f.gradient.transpose() + f.value * f.hessian);
    jet.dx = 2.0 * jet.energy * grad;
    jet.dxdy = 2.0 * grad * jet.dy.transpose();
    return jet;
}

Mat RandersField::riemannian(const Vec& x) const { return std::exp(2.0 * phi_.value(x)) * g0_; }

Vec RandersField::oneform(const Vec& x) const { return std::exp(phi_.value(x)) * b0_; }

RiemannianMetricField RandersField::riemannian_field() const {
    return RiemannianMetricField::conformal(g0_, phi_);
}

HomogeneousJet quadratic_norm_jet(const Mat& g, const Vec& y) {
    const Vec gy = g * y;
    const double a = std::sqrt(y.dot(gy));
    if (!(a > 0.0)) throw DomainError("norm jet requested at the zero vector");
    HomogeneousJet j;
    j.value = a;
    j.gradient = gy / a;
    j.hessian = (g - j.gradient * j.gradient.transpose()) / a;
    return j;
}

HomogeneousJet euclidean_norm_jet(const Vec& y) {
    return quadratic_norm_jet(Mat::Identity(y.size(), y.size()), y);
}

HomogeneousJet linear_form_jet(const Vec& b, const Vec& y) {
    HomogeneousJet j;
    j.value = b.dot(y);
    j.gradient = b;
    j.hessian = Mat::Zero(y.size(), y.size());
    return j;
}

HomogeneousJet randers_norm_jet(const Mat& g, const Vec& b, const Vec& y) {
    HomogeneousJet j = quadratic_norm_jet(g, y);
    j.value += b.dot(y);
    j.gradient += b;
    return j;
}

HomogeneousFn euclidean_norm() { return [](const Vec& y) { return euclidean_norm_jet(y); }; }
HomogeneousFn quadratic_norm(Mat g) {
    return [g = std::move(g)](const Vec& y) { return quadratic_norm_jet(g, y); };
}
HomogeneousFn linear_form(Vec b) {
    return [b = std::move(b)](const Vec& y) { return linear_form_jet(b, y); };
}
HomogeneousFn randers_norm(Mat g, Vec b) {
    return [g = std::move(g), b = std::move(b)](const Vec& y) { return randers_norm_jet(g, b, y); };
}

}  // namespace cdouglas
