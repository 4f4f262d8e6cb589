#include "cdouglas/finsler_core/periodic_profile.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>

namespace cdouglas {

bool is_positive_definite(const Mat& m, double rel_tol) {
    if (m.rows() != m.cols() || m.rows() == 0) return false;
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (m + m.transpose()), Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    const double largest = ev.maxCoeff();
    return largest > 0.0 && ev.minCoeff() > rel_tol * largest;
}

double min_symmetric_eigenvalue(const Mat& m) {
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (m + m.transpose()), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

std::vector<double> uniform_theta_grid(int resolution) {
    std::vector<double> grid(resolution);
    for (int k = 0; k < resolution; ++k) grid[k] = 2.0 * kPi * k / resolution;
    return grid;
}

PeriodicProfile PeriodicProfile::from_samples(std::vector<double> samples) {
    const auto n = samples.size();
    if (n < 4 || n % 2 != 0) {
        throw DomainError("periodic profile needs an even number (>= 4) of samples");
    }
    PeriodicProfile p;
    p.samples_ = std::move(samples);
    p.compute_coefficients();
    return p;
}

PeriodicProfile PeriodicProfile::from_function(const std::function<double(double)>& fn,
                                               int resolution) {
    if (resolution < 4 || resolution % 2 != 0) {
        throw DomainError("profile resolution must be an even integer >= 4");
    }
    std::vector<double> s(resolution);
    for (int k = 0; k < resolution; ++k) s[k] = fn(2.0 * kPi * k / resolution);
    return from_samples(std::move(s));
}

PeriodicProfile PeriodicProfile::from_analytic(Analytic fn, int resolution) {
    if (resolution < 4 || resolution % 2 != 0) {
        throw DomainError("profile resolution must be an even integer >= 4");
    }
    PeriodicProfile p;
    p.samples_.resize(resolution);
    for (int k = 0; k < resolution; ++k) p.samples_[k] = fn(2.0 * kPi * k / resolution).value;
    p.analytic_ = std::move(fn);
    p.compute_coefficients();
    return p;
}

double PeriodicProfile::theta(int k) const { return 2.0 * kPi * k / resolution(); }

void PeriodicProfile::compute_coefficients() {
    const int n = resolution();
    const int half = n / 2;
    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> spec;
    fft.fwd(spec, samples_);
    cos_.assign(half + 1, 0.0);
    sin_.assign(half + 1, 0.0);
    cos_[0] = spec[0].real() / n;
    for (int k = 1; k < half; ++k) {
        cos_[k] = 2.0 * spec[k].real() / n;
        sin_[k] = -2.0 * spec[k].imag() / n;
    }
    cos_[half] = spec[half].real() / n;
}

std::vector<double> PeriodicProfile::grid_derivative(int order) const {
    if (order < 0 || order > 2) throw DomainError("grid_derivative supports orders 0..2");
    const int n = resolution();
    std::vector<double> out(n);
    if (order == 0) return samples_;
    if (analytic_) {
        for (int k = 0; k < n; ++k) {
            const Jet j = analytic_(theta(k));
            out[k] = order == 1 ? j.d1 : j.d2;
        }
        return out;
    }
    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> spec;
    fft.fwd(spec, samples_);
    const int half = n / 2;
    for (int k = 0; k < n; ++k) {
        const int wave = k <= half ? k : k - n;
        std::complex<double> factor = std::pow(std::complex<double>(0.0, wave), order);
        // The Nyquist mode has no sine partner; its odd derivatives vanish on the grid.
        if (k == half && order % 2 == 1) factor = 0.0;
        spec[k] *= factor;
    }
    std::vector<std::complex<double>> back;
    fft.inv(back, spec);
    for (int k = 0; k < n; ++k) out[k] = back[k].real();
    return out;
}

PeriodicProfile::Jet PeriodicProfile::jet(double t) const {
    if (analytic_) return analytic_(t);
    Jet j;
    j.value = cos_[0];
    const int half = resolution() / 2;
    for (int k = 1; k <= half; ++k) {
        const double c = std::cos(k * t);
        const double s = std::sin(k * t);
        const double a = cos_[k];
        const double b = sin_[k];
        const double kk = static_cast<double>(k);
        j.value += a * c + b * s;
        j.d1 += kk * (-a * s + b * c);
        j.d2 += -kk * kk * (a * c + b * s);
    }
    return j;
}

std::pair<double, double> polar(const Vec& y) {
    if (y.size() != 2) throw DomainError("polar coordinates need a 2-vector");
    const double r = y.norm();
    if (!(r > 0.0)) throw DomainError("polar coordinates of the zero vector are undefined");
    return {r, std::atan2(y[1], y[0])};
}

TangentNorm2D TangentNorm2D::create(PeriodicProfile profile) {
    const auto& f = profile.samples();
    const auto f2 = profile.grid_derivative(2);
    for (int k = 0; k < profile.resolution(); ++k) {
        if (!(f[k] > 0.0)) {
            throw DomainError("tangent norm profile is not positive at theta = " +
                              std::to_string(profile.theta(k)));
        }
        if (!(f[k] + f2[k] > 0.0)) {
            throw DomainError("tangent norm profile is not strictly convex (f''+f <= 0) at theta = " +
                              std::to_string(profile.theta(k)));
        }
    }
    return TangentNorm2D(std::move(profile));
}

double TangentNorm2D::value(const Vec& y) const {
    const auto [r, t] = polar(y);
    return r * profile_(t);
}

HomogeneousJet TangentNorm2D::jet(const Vec& y) const {
    const auto [r, t] = polar(y);
    const auto j = profile_.jet(t);
    const double c = std::cos(t);
    const double s = std::sin(t);
    HomogeneousJet out;
    out.value = r * j.value;
    out.gradient.resize(2);
    out.gradient << j.value * c - j.d1 * s, j.value * s + j.d1 * c;
    const double w = (j.value + j.d2) / r;
    out.hessian.resize(2, 2);
    out.hessian << w * s * s, -w * c * s, -w * c * s, w * c * c;
    return out;
}

HomogeneousFn TangentNorm2D::as_function() const {
    return [self = *this](const Vec& y) { return self.jet(y); };
}

}  // namespace cdouglas
