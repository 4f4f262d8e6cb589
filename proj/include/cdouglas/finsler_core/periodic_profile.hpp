#pragma once

#include "cdouglas/finsler_core/common.hpp"

#include <functional>
#include <vector>

namespace cdouglas {

/// A 2*pi-periodic function of the polar angle, sampled on the uniform grid
/// theta_k = 2*pi*k/N (N even). Derivatives are either spectral (trigonometric
/// interpolation of the samples) or supplied in closed form.
class PeriodicProfile {
public:
    struct Jet {
        double value = 0.0;
        double d1 = 0.0;
        double d2 = 0.0;
    };
    using Analytic = std::function<Jet(double)>;

    static constexpr int kDefaultResolution = 256;

    /// Spectral profile through the given samples.
    static PeriodicProfile from_samples(std::vector<double> samples);
    /// Samples fn on the grid and interpolates trigonometrically.
    static PeriodicProfile from_function(const std::function<double(double)>& fn,
                                         int resolution = kDefaultResolution);
    /// Closed-form profile; the samples are kept for grid-level operations.
    static PeriodicProfile from_analytic(Analytic fn, int resolution = kDefaultResolution);

    int resolution() const { return static_cast<int>(samples_.size()); }
    double theta(int k) const;
    const std::vector<double>& samples() const { return samples_; }
    bool is_analytic() const { return static_cast<bool>(analytic_); }

    /// Values of the order-th derivative on the grid (order 0, 1 or 2).
    std::vector<double> grid_derivative(int order) const;

    /// Value and first two derivatives at an arbitrary angle.
    Jet jet(double theta) const;
    double operator()(double theta) const { return jet(theta).value; }

    /// Trigonometric coefficients: f = a0 + sum a_k cos k theta + b_k sin k theta.
    /// Only meaningful for spectral profiles.
    const std::vector<double>& cos_coefficients() const { return cos_; }
    const std::vector<double>& sin_coefficients() const { return sin_; }

private:
    PeriodicProfile() = default;
    void compute_coefficients();

    std::vector<double> samples_;
    std::vector<double> cos_;
    std::vector<double> sin_;
    Analytic analytic_;
};

/// Uniform grid of N angles in [0, 2*pi).
std::vector<double> uniform_theta_grid(int resolution);

/// Value, gradient and Hessian of a 1-homogeneous function at a point y.
struct HomogeneousJet {
    double value = 0.0;
    Vec gradient;
    Mat hessian;
};
using HomogeneousFn = std::function<HomogeneousJet(const Vec&)>;

/// A positive, strictly convex norm on a 2D tangent plane, F(y) = r f(theta).
class TangentNorm2D {
public:
    /// Validates f > 0 and f'' + f > 0 on the grid; throws DomainError otherwise.
    static TangentNorm2D create(PeriodicProfile profile);

    const PeriodicProfile& profile() const { return profile_; }
    int resolution() const { return profile_.resolution(); }

    double value(const Vec& y) const;
    /// Closed-form jet of F = r f(theta).
    HomogeneousJet jet(const Vec& y) const;
    HomogeneousFn as_function() const;

private:
    explicit TangentNorm2D(PeriodicProfile profile) : profile_(std::move(profile)) {}
    PeriodicProfile profile_;
};

/// Polar coordinates (r, theta) of a nonzero 2-vector; theta via atan2.
std::pair<double, double> polar(const Vec& y);

}  // namespace cdouglas
