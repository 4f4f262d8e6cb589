#include "cdouglas/finsler_core/connection_delta.hpp"
#include "cdouglas/finsler_core/spray.hpp"
#include "cdouglas/geoverify/connection.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace cdouglas;

namespace {

Vec v2(double a, double b) {
    Vec v(2);
    v << a, b;
    return v;
}

Mat m2(double a, double b, double c, double d) {
    Mat m(2, 2);
    m << a, b, c, d;
    return m;
}

double max_diff(const Mat& a, const Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }

PeriodicProfile profile_1_plus(double eps) {
    return PeriodicProfile::from_analytic([eps](double t) {
        return PeriodicProfile::Jet{1.0 + eps * std::cos(2 * t), -2 * eps * std::sin(2 * t),
                                    -4 * eps * std::cos(2 * t)};
    });
}

}  // namespace

TEST_CASE("spectral derivatives are exact for trigonometric polynomials") {
    const auto f = PeriodicProfile::from_function(
        [](double t) { return 1.0 + 0.3 * std::cos(3 * t) - 0.2 * std::sin(5 * t); }, 64);
    const auto d1 = f.grid_derivative(1);
    const auto d2 = f.grid_derivative(2);
    for (int k = 0; k < f.resolution(); ++k) {
        const double t = f.theta(k);
        CHECK(d1[k] == doctest::Approx(-0.9 * std::sin(3 * t) - 1.0 * std::cos(5 * t)).epsilon(1e-12));
        CHECK(std::abs(d2[k] - (-2.7 * std::cos(3 * t) + 5.0 * std::sin(5 * t))) < 1e-11);
    }
    const auto j = f.jet(0.123);
    CHECK(j.value == doctest::Approx(1.0 + 0.3 * std::cos(0.369) - 0.2 * std::sin(0.615)).epsilon(1e-13));
}

TEST_CASE("profile resolution must be even and positive") {
    CHECK_THROWS_AS(PeriodicProfile::from_samples({1.0, 2.0, 3.0}), DomainError);
    CHECK_THROWS_AS(PeriodicProfile::from_samples({}), DomainError);
}

TEST_CASE("tangent norm validates positivity and convexity") {
    CHECK_NOTHROW(TangentNorm2D::create(profile_1_plus(0.1)));
    // f'' + f = 1 - 3 eps cos 2t < 0 somewhere for eps = 0.5
    CHECK_THROWS_AS(TangentNorm2D::create(profile_1_plus(0.5)), DomainError);
    CHECK_THROWS_AS(TangentNorm2D::create(PeriodicProfile::from_function([](double t) { return std::cos(t); })),
                    DomainError);
}

TEST_CASE("connection delta symmetry and contractions") {
    std::vector<std::vector<std::vector<double>>> bad = {{{0, 1}, {2, 0}}, {{0, 0}, {0, 0}}};
    CHECK_THROWS_AS(ConnectionDelta::from_nested(bad), DomainError);
    ConnectionDelta t(2);
    t.set(0, 0, 1, 3.0);
    CHECK(t(0, 1, 0) == 3.0);
    const Vec y = v2(1.0, 2.0);
    CHECK(t.contract(y)[0] == doctest::Approx(12.0));
    const Mat m = t.contract_once(y);
    CHECK(m(0, 0) == doctest::Approx(6.0));
    CHECK(m(0, 1) == doctest::Approx(3.0));
    CHECK((m * y - t.contract(y)).norm() < 1e-15);
    const auto round = ConnectionDelta::from_nested(t.to_nested());
    CHECK((round - t).max_abs() == 0.0);
}

TEST_CASE("fundamental tensor examples") {
    const ConformalMinkowskiField flat(euclidean_norm(), Vec::Zero(2));
    CHECK(max_diff(fundamental_tensor(flat, Vec::Zero(2), v2(0.3, -1.2)), Mat::Identity(2, 2)) < 1e-14);

    const RandersField randers(Mat::Identity(2, 2), v2(0.5, 0.0));
    const FunctionField randers_fd(2, [&](const Vec& x, const Vec& y) { return randers.value(x, y); });
    const Mat closed = fundamental_tensor(randers, Vec::Zero(2), v2(1.0, 0.0));
    const Mat fd = fundamental_tensor(randers_fd, Vec::Zero(2), v2(1.0, 0.0));
    CHECK(max_diff(closed, fd) < 1e-6);

    const TangentNorm2D norm = TangentNorm2D::create(profile_1_plus(0.1));
    const ConformalMinkowskiField field(norm.as_function(), Vec::Zero(2));
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 20; ++i) {
        const Vec y = v2(u(rng), u(rng));
        const Mat g = fundamental_tensor(field, Vec::Zero(2), y);
        const double f = norm.value(y);
        CHECK(std::abs(y.dot(g * y) - f * f) < 1e-8 * f * f);
    }
}

TEST_CASE("fundamental tensor rejects a non-convex norm") {
    const FunctionField l1(2, [](const Vec&, const Vec& y) {
        return std::abs(y[0]) + std::abs(y[1]) + 0.0 * y[0] - 0.9 * std::sqrt(y.squaredNorm());
    });
    CHECK_THROWS_AS(fundamental_tensor(l1, Vec::Zero(2), v2(1.0, 1.0)), SingularDirectionError);
}

TEST_CASE("spray vanishes for Minkowski and flat fields") {
    const ConformalMinkowskiField mink(randers_norm(m2(2, 0.3, 0.3, 1), v2(0.2, 0.1)), Vec::Zero(2));
    CHECK(spray(mink, v2(0.3, 0.4), v2(1.0, -0.5)).coefficients.norm() < 1e-14);
    const RandersField flat(Mat::Identity(2, 2), Vec::Zero(2));
    CHECK(spray(flat, v2(0.7, -0.4), v2(-0.2, 1.5)).coefficients.norm() < 1e-14);
    const FunctionField fd(2, [](const Vec&, const Vec& y) { return std::sqrt(2 * y[0] * y[0] + y[1] * y[1]); });
    CHECK(spray(fd, v2(0.7, -0.4), v2(-0.2, 1.5)).coefficients.norm() < 1e-8);
}

TEST_CASE("spray of e^{2x1} delta matches half the Christoffel contraction") {
    const RandersField f(Mat::Identity(2, 2), Vec::Zero(2), ScalarField::linear(v2(1.0, 0.0)));
    const Vec y = v2(0.0, 1.0);
    const Vec g = spray(f, Vec::Zero(2), y).coefficients;
    const auto lc = geo::levi_civita(RiemannianMetricField::conformal(Mat::Identity(2, 2), ScalarField::linear(v2(1.0, 0.0))),
                                     Vec::Zero(2));
    CHECK((g - 0.5 * lc.contract(y)).norm() < 1e-6);
    // Gamma^1_22 = -1 gives G = (-1/2, 0)
    CHECK(g[0] == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("spray is 2-homogeneous") {
    const RandersField f(m2(1.5, 0.2, 0.2, 0.7), v2(0.3, -0.2),
                         ScalarField::composed([](double s) { return std::sin(s); }, [](double s) { return std::cos(s); },
                                               v2(1.0, 0.5)));
    const FunctionField fd(2, [&](const Vec& x, const Vec& y) { return f.value(x, y); });
    const Vec x = v2(0.2, -0.3);
    const Vec y = v2(0.8, 0.6);
    for (const MetricField* field : {static_cast<const MetricField*>(&f), static_cast<const MetricField*>(&fd)}) {
        const Vec g1 = spray(*field, x, y).coefficients;
        for (double lam : {0.5, 2.0, 3.0}) {
            const Vec gl = spray(*field, x, lam * y).coefficients;
            CHECK((gl - lam * lam * g1).norm() < 1e-8 * lam * lam * g1.norm());
        }
    }
}

TEST_CASE("conformal spray shift examples") {
    const ConformalMinkowskiField flat(euclidean_norm(), Vec::Zero(2));
    const Vec x = Vec::Zero(2);
    const Vec y = v2(1.0, 0.0);
    const SprayValue g = spray(flat, x, y);
    CHECK((conformal_spray_shift(g, flat, x, y, Vec::Zero(2)).coefficients - g.coefficients).norm() == 0.0);

    const SprayValue shifted = conformal_spray_shift(g, flat, x, y, v2(1.0, 0.0));
    CHECK(shifted.coefficients[0] == doctest::Approx(0.5));
    CHECK(std::abs(shifted.coefficients[1]) < 1e-15);
    const ConformallyScaledField scaled(std::make_shared<ConformalMinkowskiField>(euclidean_norm(), Vec::Zero(2)),
                                        ScalarField::linear(v2(1.0, 0.0)));
    CHECK((spray(scaled, x, y).coefficients - shifted.coefficients).norm() < 1e-6);

    const RandersField r(m2(1.2, 0.1, 0.1, 0.9), v2(0.2, 0.1));
    const Vec s = v2(0.4, -0.7);
    const Vec yy = v2(0.3, 0.9);
    const SprayValue g0 = spray(r, x, yy);
    const SprayValue back = conformal_spray_shift(conformal_spray_shift(g0, r, x, yy, s), r, x, yy, -s);
    CHECK((back.coefficients - g0.coefficients).norm() < 1e-12);
}

TEST_CASE("conformal spray shift reproduces finite-difference sprays of e^sigma F") {
    const auto base = std::make_shared<RandersField>(m2(1.3, -0.2, -0.2, 0.8), v2(0.1, 0.35));
    const ScalarField sigma = ScalarField::composed([](double s) { return 0.5 * s * s; }, [](double s) { return s; },
                                                    v2(0.6, -0.8));
    const ConformallyScaledField scaled(base, sigma);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 10; ++i) {
        const Vec x = v2(u(rng), u(rng));
        const Vec y = v2(u(rng), u(rng)) + v2(0.1, 0.1);
        const Vec expect = conformal_spray_shift(spray(*base, x, y), *base, x, y, sigma.gradient(x)).coefficients;
        const Vec got = spray(scaled, x, y).coefficients;
        CHECK((expect - got).norm() < 1e-6 * got.norm());
    }
}

TEST_CASE("projective residual examples and invariance") {
    const ConformalMinkowskiField flat(quadratic_norm(m2(2, 0.5, 0.5, 1)), Vec::Zero(2));
    CHECK(projective_residual(spray(flat, Vec::Zero(2), v2(1, 1)), ConnectionDelta(2), v2(1, 1)) < 1e-10);
    CHECK(projective_residual(SprayValue{Vec::Zero(3)}, ConnectionDelta(3), Vec::Ones(3)) == 0.0);

    const RandersField randers(Mat::Identity(2, 2), v2(0.5, 0.0));
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 10; ++i) {
        const Vec x = v2(u(rng), u(rng));
        const Vec y = v2(u(rng), u(rng));
        CHECK(projective_residual(spray(randers, x, y), ConnectionDelta(2), y) < 1e-8);
    }

    ConnectionDelta t(2);
    t.set(0, 0, 1, 0.7);
    t.set(1, 1, 1, -0.3);
    const Vec y = v2(0.4, 1.1);
    SprayValue g{v2(0.3, -0.9)};
    const double r0 = projective_residual(g, t, y);
    g.coefficients += 2.7 * y;
    CHECK(std::abs(projective_residual(g, t, y) - r0) < 1e-14);
    CHECK_THROWS_AS(projective_residual(g, t, Vec::Zero(2)), DomainError);
}

TEST_CASE("polar Hessian examples") {
    const TangentNorm2D unit = TangentNorm2D::create(profile_1_plus(0.0));
    CHECK(max_diff(hessian_profile(unit, v2(1, 0)), m2(0, 0, 0, 1)) < 1e-15);
    CHECK(max_diff(hessian_profile(unit, v2(0, 2)), m2(0.5, 0, 0, 0)) < 1e-15);

    const Mat g = m2(2, -1, -1, 1);
    const TangentNorm2D norm = TangentNorm2D::create(PeriodicProfile::from_function(
        [](double t) { return std::sqrt(2 * std::cos(t) * std::cos(t) - 2 * std::cos(t) * std::sin(t) + std::sin(t) * std::sin(t)); }));
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 10; ++i) {
        const Vec y = v2(u(rng), u(rng)) + v2(0.05, 0.05);
        CHECK(max_diff(hessian_profile(norm, y), quadratic_norm_jet(g, y).hessian) < 1e-6);
    }
}

TEST_CASE("Hessian of a homogeneous norm annihilates y") {
    const TangentNorm2D norm = TangentNorm2D::create(profile_1_plus(0.2));
    for (double t = 0.1; t < 6.2; t += 0.7) {
        const Vec y = v2(std::cos(t), std::sin(t)) * 1.7;
        CHECK((norm.jet(y).hessian * y).norm() < 1e-12);
        CHECK((hessian_profile(norm, y) * y).norm() < 1e-12);
    }
}

TEST_CASE("metric fields are 1-homogeneous and positive") {
    const RandersField f(m2(1.1, 0.3, 0.3, 0.9), v2(0.2, 0.4), ScalarField::linear(v2(1, 2)));
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        const Vec x = v2(u(rng), u(rng));
        const Vec y = v2(u(rng), u(rng));
        CHECK(f.value(x, y) > 0.0);
        CHECK(f.value(x, 2.5 * y) == doctest::Approx(2.5 * f.value(x, y)).epsilon(1e-14));
    }
    CHECK_THROWS_AS(RandersField(Mat::Identity(2, 2), v2(1.2, 0.0)), DomainError);
    CHECK_THROWS_AS(RandersField(m2(1, 2, 2, 1), v2(0.1, 0.0)), DomainError);
}

TEST_CASE("closed-form Randers jets agree with finite differences") {
    const RandersField f(m2(1.4, 0.2, 0.2, 0.6), v2(-0.3, 0.2),
                         ScalarField::composed([](double s) { return 0.3 * s * s; }, [](double s) { return 0.6 * s; },
                                               v2(1.0, 0.0)));
    const Vec x = v2(0.4, -0.2);
    const Vec y = v2(0.7, 0.5);
    const EnergyJet a = f.energy_jet(x, y);
    const EnergyJet b = finite_difference_energy_jet(f, x, y, DifferentiationConfig{});
    CHECK((a.dy - b.dy).norm() < 1e-8);
    CHECK(max_diff(a.dyy, b.dyy) < 1e-8);
    CHECK((a.dx - b.dx).norm() < 1e-8);
    CHECK(max_diff(a.dxdy, b.dxdy) < 1e-8);
}

TEST_CASE("positive definiteness helper is scale free") {
    CHECK(is_positive_definite(Mat::Identity(3, 3) * 1e-20));
    CHECK_FALSE(is_positive_definite(m2(1, 0, 0, -1e-3)));
    CHECK_FALSE(is_positive_definite(m2(1, 0, 0, 1e-12)));
    CHECK(min_symmetric_eigenvalue(m2(2, 1, 1, 2)) == doctest::Approx(1.0));
}
