#include <doctest.h>

#include <cmath>

#include "cutoffqed/quadrature.hpp"

using namespace cutoffqed;

namespace {
QuadratureConfig tight() {
    QuadratureConfig qc;
    qc.rel_tol = 1e-10;
    return qc;
}
}  // namespace

TEST_CASE("semi-infinite: exponential") {
    auto r = integrate_semi_infinite([](double k) { return std::exp(-k); }, tight());
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("semi-infinite: gaussian second moment") {
    auto r = integrate_semi_infinite(
        [](double k) { return k * k * std::exp(-k * k); }, tight());
    CHECK(r.converged);
    // sqrt(pi)/4, cross-checked by Riemann sum
    const double closed = std::sqrt(M_PI) / 4.0;
    double riemann = 0.0;
    for (int i = 0; i < 4'000'000; ++i) {
        const double k = (i + 0.5) * 1e-5;
        riemann += k * k * std::exp(-k * k) * 1e-5;
    }
    CHECK(closed == doctest::Approx(riemann).epsilon(1e-9));
    CHECK(r.value == doctest::Approx(closed).epsilon(1e-10));
}

TEST_CASE("semi-infinite: algebraic tail") {
    auto r = integrate_semi_infinite(
        [](double k) { return 1.0 / (1.0 + k * k); }, tight());
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(M_PI / 2.0).epsilon(1e-10));
}

TEST_CASE("semi-infinite: transform scale changes nodes, not the value") {
    QuadratureConfig qc = tight();
    qc.transform_scale = 7.5;
    auto r = integrate_semi_infinite([](double k) { return std::exp(-k); }, qc);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("angular: polynomial moments") {
    QuadratureConfig qc;
    auto c = integrate_angular([](double) { return 1.0; }, qc);
    CHECK(c.value == doctest::Approx(2.0).epsilon(1e-15));
    auto o = integrate_angular([](double mu) { return mu; }, qc);
    CHECK(o.value == doctest::Approx(0.0).epsilon(1e-15));
    auto q = integrate_angular([](double mu) { return mu * mu; }, qc);
    CHECK(q.value == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("2d: separable products") {
    auto a = integrate_2d([](double k, double) { return std::exp(-k); }, tight());
    CHECK(a.converged);
    CHECK(a.value == doctest::Approx(2.0).epsilon(1e-9));

    auto b = integrate_2d(
        [](double k, double mu) { return std::exp(-k) * mu * mu; }, tight());
    CHECK(b.converged);
    CHECK(b.value == doctest::Approx(2.0 / 3.0).epsilon(1e-9));

    auto c = integrate_2d(
        [](double k, double mu) { return std::exp(-k - mu); }, tight());
    CHECK(c.converged);
    CHECK(c.value ==
          doctest::Approx(std::exp(1.0) - std::exp(-1.0)).epsilon(1e-9));
}

TEST_CASE("linearity") {
    auto f = [](double k) { return std::exp(-k); };
    auto g = [](double k) { return 1.0 / ((1.0 + k * k) * (1.0 + k * k)); };
    auto rf = integrate_semi_infinite(f, tight());
    auto rg = integrate_semi_infinite(g, tight());
    auto rc = integrate_semi_infinite(
        [&](double k) { return 3.0 * f(k) - 2.0 * g(k); }, tight());
    CHECK(rc.value == doctest::Approx(3.0 * rf.value - 2.0 * rg.value)
                          .epsilon(1e-9));
}

TEST_CASE("determinism: identical inputs give bit-identical results") {
    auto f = [](double k) { return std::log1p(k) * std::exp(-0.7 * k); };
    auto r1 = integrate_semi_infinite(f, tight());
    auto r2 = integrate_semi_infinite(f, tight());
    CHECK(r1.value == r2.value);
    CHECK(r1.error == r2.error);
    CHECK(r1.evals == r2.evals);
}

TEST_CASE("refinement monotonicity on a closed form") {
    auto f = [](double k) { return k * std::exp(-k); };  // integral = 1
    double prev_true_err = 1.0;
    for (double tol : {1e-4, 1e-6, 1e-8, 1e-10}) {
        QuadratureConfig qc;
        qc.rel_tol = tol;
        auto r = integrate_semi_infinite(f, qc);
        CHECK(r.converged);
        const double true_err = std::abs(r.value - 1.0);
        CHECK(true_err <= prev_true_err + 1e-15);
        prev_true_err = true_err;
    }
}

TEST_CASE("budget exhaustion reports non-convergence") {
    QuadratureConfig qc;
    qc.rel_tol = 1e-14;
    qc.max_evals = 200;  // far below what the tolerance needs
    auto r = integrate_semi_infinite(
        [](double k) { return std::exp(-k) * std::sin(20.0 * k) + std::exp(-k); }, qc);
    CHECK_FALSE(r.converged);
    CHECK(r.evals <= 300);
}

TEST_CASE("nonfinite samples are reported") {
    QuadratureConfig qc;
    CHECK_THROWS_AS(integrate_semi_infinite(
                        [](double k) { return 1.0 / (k - k); }, qc),
                    NonfiniteSample);
    CHECK_THROWS_AS(integrate_angular(
                        [](double mu) { return std::sqrt(mu); }, qc),
                    NonfiniteSample);
}

TEST_CASE("converged flag matches the error contract") {
    auto r = integrate_semi_infinite([](double k) { return std::exp(-k); }, tight());
    CHECK(r.error >= 0.0);
    CHECK(r.converged);
    CHECK(r.error <= std::max(tight().abs_tol, tight().rel_tol * std::abs(r.value)));
}
