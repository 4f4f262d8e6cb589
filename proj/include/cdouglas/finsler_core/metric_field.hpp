#pragma once

#include "cdouglas/finsler_core/common.hpp"
#include "cdouglas/finsler_core/periodic_profile.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace cdouglas {

/// A scalar function on the base manifold together with its gradient.
struct ScalarField {
    std::function<double(const Vec&)> value;
    std::function<Vec(const Vec&)> gradient;

    static ScalarField zero(int dimension);
    /// x -> c . x
    static ScalarField linear(const Vec& covector);
    /// x -> gamma(c . x), the conformal exponents of the closed-one-form family.
    static ScalarField composed(std::function<double(double)> gamma,
                                std::function<double(double)> dgamma, const Vec& covector);
};

/// Step policy for finite differences. The first-derivative step follows
/// h = first_step * (1 + |v|); second derivatives use a larger step with
/// fourth-order stencils so that rounding stays below 1e-9.
struct DifferentiationConfig {
    double first_step = 1e-5;
    double second_step = 1e-3;
};

/// Derivatives of the energy E = F^2 at (x, y).
struct EnergyJet {
    double energy = 0.0;
    Vec dy;    ///< E_{y^l}
    Mat dyy;   ///< E_{y^i y^j}
    Vec dx;    ///< E_{x^l}
    Mat dxdy;  ///< (k, l) -> E_{x^k y^l}
};

/// An x-dependent Finsler metric F(x, y).
class MetricField {
public:
    virtual ~MetricField() = default;

    virtual int dimension() const = 0;
    virtual double value(const Vec& x, const Vec& y) const = 0;

    /// Closed forms where the subclass has them, finite differences otherwise.
    virtual EnergyJet energy_jet(const Vec& x, const Vec& y) const;

    const DifferentiationConfig& differentiation() const { return diff_; }
    void set_differentiation(const DifferentiationConfig& cfg) { diff_ = cfg; }

private:
    DifferentiationConfig diff_;
};

/// Energy jet by fourth-order central differences of F^2.
EnergyJet finite_difference_energy_jet(const MetricField& field, const Vec& x, const Vec& y,
                                       const DifferentiationConfig& cfg);

/// A field given only by an evaluator; all derivatives are finite differences.
class FunctionField final : public MetricField {
public:
    using Evaluator = std::function<double(const Vec& x, const Vec& y)>;
    FunctionField(int dimension, Evaluator fn) : n_(dimension), fn_(std::move(fn)) {}

    int dimension() const override { return n_; }
    double value(const Vec& x, const Vec& y) const override { return fn_(x, y); }

private:
    int n_;
    Evaluator fn_;
};

/// e^{sigma . x} F(y) for a norm F with closed-form jet; sigma = 0 gives the
/// Minkowski metric F_M(x, y) = F(y).
class ConformalMinkowskiField final : public MetricField {
public:
    ConformalMinkowskiField(HomogeneousFn norm, Vec sigma);

    int dimension() const override { return static_cast<int>(sigma_.size()); }
    double value(const Vec& x, const Vec& y) const override;
    EnergyJet energy_jet(const Vec& x, const Vec& y) const override;

    const Vec& sigma() const { return sigma_; }
    const HomogeneousFn& norm() const { return norm_; }

private:
    HomogeneousFn norm_;
    Vec sigma_;
};

/// e^{sigma(x)} F(x, y) for an arbitrary base field; differentiated numerically.
/// Serves as the independent oracle for the conformal spray shift.
class ConformallyScaledField final : public MetricField {
public:
    ConformallyScaledField(std::shared_ptr<const MetricField> base, ScalarField sigma)
        : base_(std::move(base)), sigma_(std::move(sigma)) {}

    int dimension() const override { return base_->dimension(); }
    double value(const Vec& x, const Vec& y) const override;

private:
    std::shared_ptr<const MetricField> base_;
    ScalarField sigma_;
};

/// A Riemannian metric field g_{ij}(x) with its first x-derivatives.
struct RiemannianMetricField {
    int dimension = 0;
    std::function<Mat(const Vec&)> metric;
    /// derivatives(x)[k] = d g / d x^k.
    std::function<std::vector<Mat>(const Vec&)> derivatives;

    static RiemannianMetricField constant(const Mat& g);
    /// e^{2 phi(x)} g0.
    static RiemannianMetricField conformal(const Mat& g0, ScalarField phi);
    /// Arbitrary metric; derivatives by fourth-order central differences.
    static RiemannianMetricField from_function(int dimension, std::function<Mat(const Vec&)> g,
                                               double step = 1e-4);
};

/// The Randers family e^{phi(x)} (sqrt(g0(y, y)) + b0 . y) with constant g0, b0.
/// Riemannian part e^{2 phi} g0, one-form e^{phi} b0. phi = 0 gives the plain
/// Randers metric alpha + beta; phi = gamma(f(x)) with b0 = df gives the
/// conformally related metrics of the closed-one-form example.
class RandersField final : public MetricField {
public:
    RandersField(Mat g0, Vec b0, ScalarField phi);
    RandersField(Mat g0, Vec b0);

    int dimension() const override { return static_cast<int>(b0_.size()); }
    double value(const Vec& x, const Vec& y) const override;
    EnergyJet energy_jet(const Vec& x, const Vec& y) const override;

    const Mat& riemannian_constant() const { return g0_; }
    const Vec& oneform_constant() const { return b0_; }
    const ScalarField& exponent() const { return phi_; }

    Mat riemannian(const Vec& x) const;
    Vec oneform(const Vec& x) const;
    /// g0-norm of b0, which equals the g(x)-norm of beta(x) at every x.
    double oneform_norm() const;
    RiemannianMetricField riemannian_field() const;

private:
    Mat g0_;
    Vec b0_;
    ScalarField phi_;
};

/// Closed-form jets of standard 1-homogeneous norms.
HomogeneousJet euclidean_norm_jet(const Vec& y);
HomogeneousJet quadratic_norm_jet(const Mat& g, const Vec& y);
HomogeneousJet linear_form_jet(const Vec& b, const Vec& y);
HomogeneousJet randers_norm_jet(const Mat& g, const Vec& b, const Vec& y);

HomogeneousFn euclidean_norm();
HomogeneousFn quadratic_norm(Mat g);
HomogeneousFn linear_form(Vec b);
HomogeneousFn randers_norm(Mat g, Vec b);

}  // namespace cdouglas
