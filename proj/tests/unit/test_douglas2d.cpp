#include "cdouglas/douglas2d/classification.hpp"
#include "cdouglas/douglas2d/conditions.hpp"
#include "cdouglas/douglas2d/ode.hpp"
#include "cdouglas/douglas2d/solution_search.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace cdouglas;
using namespace cdouglas::douglas2d;

namespace {

Eigen::Matrix2d mat(double a, double b, double c, double d) {
    Eigen::Matrix2d m;
    m << a, b, c, d;
    return m;
}

void check_quadruple(const Quadruple& got, const Quadruple& want, double tol) {
    CHECK(std::abs(got.k0 - want.k0) <= tol);
    CHECK(std::abs(got.k1 - want.k1) <= tol);
    CHECK(std::abs(got.k2 - want.k2) <= tol);
    CHECK(std::abs(got.k3 - want.k3) <= tol);
}

Eigen::Matrix2d random_spd(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::Matrix2d a;
    a << u(rng), u(rng), u(rng), u(rng);
    Eigen::Matrix2d g = a * a.transpose() + 0.2 * Eigen::Matrix2d::Identity();
    return g / g(1, 1);
}

PeriodicProfile analytic(std::function<PeriodicProfile::Jet(double)> fn) {
    return PeriodicProfile::from_analytic(std::move(fn));
}

}  // namespace

TEST_CASE("quadruple from delta") {
    check_quadruple(quadruple_from_delta(ConnectionDelta(2)), {0, 0, 0, 0}, 0.0);
    ConnectionDelta t(2);
    t.set(0, 0, 0, 1.0);
    t.set(0, 1, 1, 1.0);
    check_quadruple(quadruple_from_delta(t), {0, 1, 0, 1}, 0.0);
    ConnectionDelta s(2);
    s.set(1, 0, 0, 2.0);
    check_quadruple(quadruple_from_delta(s), {-2, 0, 0, 0}, 0.0);
    CHECK_THROWS_AS(quadruple_from_delta(ConnectionDelta(3)), DomainError);
}

TEST_CASE("delta from quadruple gauge and round trip") {
    CHECK(delta_from_quadruple({0, 0, 0, 0}).max_abs() == 0.0);
    const ConnectionDelta t = delta_from_quadruple({0, 1, 0, 1});
    CHECK(t(0, 0, 0) == 1.0);
    CHECK(t(0, 1, 1) == 1.0);
    CHECK(t(0, 0, 1) == 0.0);
    CHECK(t(1, 0, 0) == 0.0);
    CHECK(t(1, 0, 1) == 0.0);
    CHECK(t(1, 1, 1) == 0.0);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int i = 0; i < 100; ++i) {
        const Quadruple k{u(rng), u(rng), u(rng), u(rng)};
        CHECK(quadruple_from_delta(delta_from_quadruple(k)) == k);
    }
}

TEST_CASE("P polynomial examples and anti-periodicity") {
    const Quadruple k{0, 1, 0, 1};
    for (double t : uniform_theta_grid(64)) CHECK(std::abs(p_polynomial(k, t) - std::sin(t)) < 1e-15);
    CHECK(p_polynomial({1, 0, 0, 0}, 0.0) == 1.0);
    const Quadruple r{0.3, -1.7, 2.2, 0.9};
    for (double t : uniform_theta_grid(256)) {
        CHECK(std::abs(p_polynomial(r, t + kPi) + p_polynomial(r, t)) < 1e-14);
        const double h = 1e-5;
        const double fd = (p_polynomial(r, t + h) - p_polynomial(r, t - h)) / (2 * h);
        CHECK(std::abs(fd - p_derivative(r, t)) < 1e-8);
    }
}

TEST_CASE("ODE residual examples and linearity") {
    const auto cosine = analytic([](double t) { return PeriodicProfile::Jet{std::cos(t), -std::sin(t), -std::cos(t)}; });
    CHECK(max_abs(ode_residual(cosine, {1.3, -0.2, 4.0, 0.7})) < 1e-12);
    const auto one = analytic([](double) { return PeriodicProfile::Jet{1.0, 0.0, 0.0}; });
    CHECK(max_abs(ode_residual(one, {0, 1, 0, 1})) < 1e-12);

    const Quadruple k{0.4, 1.1, -0.6, 2.0};
    const auto f1 = PeriodicProfile::from_function([](double t) { return 1 + 0.2 * std::sin(3 * t); }, 64);
    const auto f2 = PeriodicProfile::from_function([](double t) { return std::cos(2 * t) - 0.5; }, 64);
    const auto sum = PeriodicProfile::from_function(
        [](double t) { return 2.0 * (1 + 0.2 * std::sin(3 * t)) - 3.0 * (std::cos(2 * t) - 0.5); }, 64);
    const auto r1 = ode_residual(f1, k);
    const auto r2 = ode_residual(f2, k);
    const auto rs = ode_residual(sum, k);
    for (std::size_t i = 0; i < rs.size(); ++i) CHECK(std::abs(rs[i] - (2 * r1[i] - 3 * r2[i])) < 1e-12);
}

TEST_CASE("metric to quadruple examples") {
    check_quadruple(metric_to_quadruple(Eigen::Matrix2d::Identity()), {0, 1, 0, 1}, 1e-15);
    check_quadruple(metric_to_quadruple(mat(2, -1, -1, 1)), {-2, 4, -3, 1}, 1e-14);
    check_quadruple(quadruple_from_ac(1.0, 2.0), {-2, 4, -3, 1}, 1e-14);
    const Eigen::Matrix2d g = mat(1.7, 0.4, 0.4, 0.8);
    for (double lam : {0.5, 3.0}) check_quadruple(metric_to_quadruple(lam * g), metric_to_quadruple(g), 1e-13);
    CHECK_THROWS_AS(metric_to_quadruple(mat(1, 2, 2, 1)), DomainError);
    CHECK_THROWS_AS(metric_to_quadruple(mat(1, 0.1, 0.2, 1)), DomainError);
}

TEST_CASE("(A, C) parametrisation agrees with the metric formulas") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::uniform_real_distribution<double> pos(0.05, 4.0);
    for (int i = 0; i < 100; ++i) {
        const double a = u(rng);
        const double c = a * a + pos(rng);
        const Quadruple x = quadruple_from_ac(a, c);
        const Quadruple y = metric_to_quadruple(mat(c, -a, -a, 1.0));
        const double scale = 1.0 + std::abs(x.k0) + std::abs(x.k1) + std::abs(x.k2) + std::abs(x.k3);
        check_quadruple(x, y, 1e-12 * scale);
    }
}

TEST_CASE("classification examples") {
    const Classification id = classify_quadruple({0, 1, 0, 1});
    REQUIRE(id.admissible());
    CHECK(id.a == 0.0);
    CHECK(id.c == doctest::Approx(1.0));
    CHECK((id.gnorm - Eigen::Matrix2d::Identity()).norm() < 1e-15);

    const Classification g = classify_quadruple({-2, 4, -3, 1});
    REQUIRE(g.admissible());
    CHECK(g.a == doctest::Approx(1.0));
    CHECK(g.c == doctest::Approx(2.0));
    CHECK((g.gnorm - mat(2, -1, -1, 1)).norm() < 1e-14);
    CHECK(g.n == doctest::Approx(1.0));

    const Classification neg = classify_quadruple({0, 1, 0, -1});
    CHECK_FALSE(neg.admissible());
    CHECK(neg.failure == ClassificationFailure::non_positive_n);
    CHECK(neg.n == doctest::Approx(-1.0));

    CHECK(classify_quadruple({0, 1, 0, 0}).failure == ClassificationFailure::leading_coefficient_zero);
    CHECK(classify_quadruple({0.3, 1, 0, 1}).failure == ClassificationFailure::k0_mismatch);
    CHECK(classify_quadruple({0, 1.2, 0, 1}).failure == ClassificationFailure::k1_mismatch);
}

TEST_CASE("classification round trip and re-derivation") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const Eigen::Matrix2d g = random_spd(rng);
        const Quadruple k = metric_to_quadruple(g);
        const Classification cls = classify_quadruple(k);
        REQUIRE(cls.admissible());
        CHECK((cls.gnorm - g).cwiseAbs().maxCoeff() < 1e-8);
        CHECK(is_positive_definite(cls.gnorm));
        const Quadruple again = metric_to_quadruple(cls.gnorm);
        CHECK(std::abs(again.k0 - k.k0) <= 1e-10 * (1 + std::abs(k.k0)));
        CHECK(std::abs(again.k1 - k.k1) <= 1e-10 * (1 + std::abs(k.k1)));
        CHECK(std::abs(again.k2 - k.k2) <= 1e-10 * (1 + std::abs(k.k2)));
        CHECK(std::abs(again.k3 - k.k3) <= 1e-10 * (1 + std::abs(k.k3)));
    }
}

TEST_CASE("general solution examples") {
    const Classification id = classify_quadruple({0, 1, 0, 1});
    const OdeSolution s0 = general_solution(id, 1.0, 0.0);
    for (double v : s0.profile.samples()) CHECK(v == doctest::Approx(1.0));
    CHECK(max_abs(ode_residual(s0.profile, {0, 1, 0, 1})) < 1e-15);

    const OdeSolution s1 = general_solution(id, 1.0, 0.5);
    CHECK(max_abs(ode_residual(s1.profile, {0, 1, 0, 1})) < 1e-12);
    const ProfileChecks c1 = check_profile(s1.profile);
    CHECK(c1.min_convexity == doctest::Approx(1.0));
    CHECK(c1.min_value == doctest::Approx(0.5));

    const Quadruple k{-2, 4, -3, 1};
    const OdeSolution s2 = general_solution(classify_quadruple(k), 1.0, 0.0, 256);
    CHECK(max_abs(ode_residual(s2.profile, k)) < 1e-9);
    CHECK(check_profile(s2.profile).positive());
    CHECK(check_profile(s2.profile).strictly_convex());
    CHECK(s2.const1.value() == 1.0);

    CHECK_THROWS_AS(general_solution(classify_quadruple({0, 1, 0, -1}), 1.0, 0.0), DomainError);
}

TEST_CASE("symmetrisation examples") {
    const auto cosine = analytic([](double t) { return PeriodicProfile::Jet{std::cos(t), -std::sin(t), -std::cos(t)}; });
    const PeriodicProfile cs = symmetrize(cosine);
    for (double v : cs.samples()) CHECK(std::abs(v) < 1e-15);
    const auto one = PeriodicProfile::from_function([](double) { return 1.0; }, 32);
    const PeriodicProfile os = symmetrize(one);
    for (double v : os.samples()) CHECK(v == doctest::Approx(2.0));
    const auto randers = PeriodicProfile::from_function([](double t) { return 1.0 + 0.5 * std::cos(t); }, 32);
    const PeriodicProfile rs = symmetrize(randers);
    for (double v : rs.samples()) CHECK(v == doctest::Approx(2.0).epsilon(1e-14));

    const Quadruple k{-2, 4, -3, 1};
    const OdeSolution s = general_solution(classify_quadruple(k), 1.0, 0.3);
    const PeriodicProfile fs = symmetrize(s.profile);
    CHECK(max_abs(ode_residual(fs, k)) < 1e-10);
    for (double t : {0.1, 0.9, 2.3}) CHECK(std::abs(fs(t + kPi) - fs(t)) < 1e-14);
    CHECK(check_profile(fs).positive());
    CHECK(check_profile(fs).strictly_convex());
}

TEST_CASE("H and G diagnostics") {
    const auto one = analytic([](double) { return PeriodicProfile::Jet{1.0, 0.0, 0.0}; });
    const HgDiagnostics d = hg_diagnostics(one, {0, 1, 0, 1});
    CHECK(d.max_ln_residual < 1e-12);
    for (std::size_t i = 0; i < d.theta.size(); ++i) {
        if (!d.flagged[i]) CHECK(d.g[i] == doctest::Approx(1.0));
        CHECK(d.h[i] == doctest::Approx(std::sin(d.theta[i])));
    }

    const Quadruple k{-2, 4, -3, 1};
    const HgDiagnostics e = hg_diagnostics(general_solution(classify_quadruple(k), 1.0, 0.0).profile, k);
    CHECK(e.min_g > 0.0);
    CHECK(e.max_ln_residual < 1e-6);

    // H' = cos (f + f'')
    const auto f = PeriodicProfile::from_function([](double t) { return 2 + std::sin(t) + 0.3 * std::cos(4 * t); }, 64);
    const HgDiagnostics h = hg_diagnostics(f, {1, 1, 1, 1});
    for (std::size_t i = 0; i < h.theta.size(); ++i) {
        if (std::abs(std::cos(h.theta[i])) > 1e-3) {
            const auto j = f.jet(h.theta[i]);
            CHECK(std::abs(h.g_product[i] - (j.value + j.d2)) < 1e-10);
        }
    }
}

TEST_CASE("tangent substitution identity") {
    // (cos - P') / P = (1 + t^2)(1 - K1 - 2K2 t - 3K3 t^2) / (K0 + K1 t + K2 t^2 + K3 t^3) + 3t, t = tan
    const Quadruple k{0.7, -1.3, 0.4, 2.1};
    for (double th = -1.4; th < 1.4; th += 0.05) {
        const double p = p_polynomial(k, th);
        if (std::abs(p) < 1e-3) continue;
        const double lhs = (std::cos(th) - p_derivative(k, th)) / p;
        const double t = std::tan(th);
        const double rhs = (1 + t * t) * (1 - k.k1 - 2 * k.k2 * t - 3 * k.k3 * t * t) / (k.k0 + k.k1 * t + k.k2 * t * t + k.k3 * t * t * t) +
                           3 * t;
        CHECK(std::abs(lhs - rhs) < 1e-10 * (1 + std::abs(lhs)));
    }
}

TEST_CASE("condition B examples") {
    const RootAnalysis a = condition_b_roots({0, 1, 0, 1});
    CHECK(a.bounded);
    REQUIRE(a.real_roots.size() == 1);
    CHECK(std::abs(a.real_roots[0]) < 1e-12);

    const RootAnalysis b = condition_b_roots({-2, 4, -3, 1});
    CHECK(b.bounded);
    REQUIRE(b.real_roots.size() == 1);
    CHECK(b.real_roots[0] == doctest::Approx(1.0));

    const RootAnalysis c = condition_b_roots({0, 0, 0, 1});
    CHECK_FALSE(c.bounded);

    const RootAnalysis d = condition_b_roots({0, 1, 0, 0});
    CHECK_FALSE(d.bounded);
    CHECK(d.degree == 1);
}

TEST_CASE("condition A examples") {
    const ConditionA a = condition_a_integral({0, 1, 0, 1});
    CHECK(a.convergent);
    CHECK(std::abs(a.value) < 1e-14);
    const ConditionA b = condition_a_integral({-2, 4, -3, 1});
    CHECK(b.satisfied());
    const ConditionA c = condition_a_integral({0.3, 1, 0, 1});
    CHECK_FALSE(c.satisfied());
}

TEST_CASE("condition A against the closed form for a single shared root") {
    // cubic k (t - B)(t^2 + D t + C) with k = 1 / q(B) makes B a shared root; the
    // integral is then -(B + D/2) pi / sqrt(C - D^2/4)
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_real_distribution<double> pos(0.1, 3.0);
    int checked = 0;
    for (int i = 0; i < 40; ++i) {
        const double bb = u(rng);
        const double dd = u(rng);
        const double cc = dd * dd / 4 + pos(rng);
        const double q = bb * bb + dd * bb + cc;
        const double kk = 1.0 / q;
        // expand k (t - B)(t^2 + D t + C)
        const Quadruple k{-kk * bb * cc, kk * (cc - bb * dd), kk * (dd - bb), kk};
        const ConditionA a = condition_a_integral(k);
        REQUIRE(a.convergent);
        const double expected = -(bb + dd / 2) * kPi / std::sqrt(cc - dd * dd / 4);
        CHECK(std::abs(a.value - expected) < 1e-9 * (1 + std::abs(expected)));
        ++checked;
    }
    CHECK(checked == 40);
}

TEST_CASE("conditions agree with the classification on a random sweep") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    int disagreements = 0;
    for (int i = 0; i < 500; ++i) {
        Quadruple k;
        if (i % 2 == 0) {
            k = metric_to_quadruple(random_spd(rng));
        } else {
            k = {u(rng), u(rng), u(rng), u(rng)};
        }
        const bool alg = classify_quadruple(k).admissible();
        const bool both = condition_b_roots(k).bounded && condition_a_integral(k).satisfied();
        if (alg != both) ++disagreements;
    }
    CHECK(disagreements == 0);
}

TEST_CASE("periodic solution search examples") {
    const SolutionSearch a = periodic_solution_search({0, 1, 0, 1});
    REQUIRE(a.solution);
    for (double v : a.solution->profile.samples()) CHECK(v == doctest::Approx(1.0));
    CHECK(a.numerical.found);

    const SolutionSearch b = periodic_solution_search({0, 1, 0, -1});
    CHECK_FALSE(b.solution);
    CHECK_FALSE(b.numerical.found);
    CHECK(b.numerical.qualifying_singular_value > 1e-6);

    const SolutionSearch c = periodic_solution_search({-2, 4, -3, 1});
    REQUIRE(c.solution);
    for (double t : {0.0, 0.7, 2.0}) {
        const double expect = std::sqrt(2 * std::cos(t) * std::cos(t) - 2 * std::cos(t) * std::sin(t) +
                                        std::sin(t) * std::sin(t));
        CHECK(c.solution->profile(t) == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("collocation candidate of an admissible quadruple is the symmetrised metric profile") {
    const Quadruple k{-2, 4, -3, 1};
    const CollocationReport r = collocation_search(k);
    REQUIRE(r.found);
    CHECK(r.qualifying_singular_value < 1e-9);
    const auto ref = [](double t) {
        return std::sqrt(2 * std::cos(t) * std::cos(t) - 2 * std::cos(t) * std::sin(t) + std::sin(t) * std::sin(t));
    };
    const double scale = collocation_profile(r.candidate_coefficients, 0.3).value / ref(0.3);
    for (double t : {0.0, 1.1, 2.5}) {
        CHECK(collocation_profile(r.candidate_coefficients, t).value == doctest::Approx(scale * ref(t)).epsilon(1e-8));
    }
}
