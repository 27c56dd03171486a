#include <doctest.h>

#include <cmath>
#include <random>

#include "cutoffqed/podolsky.hpp"

using namespace cutoffqed;

TEST_CASE("massless dispersion residual") {
    CHECK(massless_dispersion_residual(3.0, 3.0) == 0.0);
    CHECK(massless_dispersion_residual(5.0, 3.0) == 16.0);
    CHECK(massless_dispersion_residual(0.0, 0.0) == 0.0);
}

TEST_CASE("massive dispersion residual") {
    const PodolskyParam param{0.5};
    for (double k : {0.0, 0.3, 2.0, 50.0}) {
        const double E = std::sqrt(k * k + 1.0 / (param.a * param.a));
        CHECK(std::abs(massive_dispersion_residual(E, k, param)) < 1e-14);
    }
    CHECK(massive_dispersion_residual(1.0 / 0.5, 0.0, {0.5}) == 0.0);
    CHECK(massive_dispersion_residual(4.0, 4.0, {0.5}) == -1.0);
}

TEST_CASE("quartic operator vanishes exactly on both shells") {
    const PodolskyParam param{1.0};
    CHECK(quartic_operator_residual(2.0, 2.0, param) == 0.0);  // massless shell
    const double E = std::sqrt(3.0 * 3.0 + 1.0);               // massive shell
    CHECK(std::abs(quartic_operator_residual(E, 3.0, param)) < 1e-13);
    // off-shell arithmetic: s = 3, a = 1 -> 9 - 3 = 6
    CHECK(quartic_operator_residual(2.0, 1.0, param) == 6.0);
}

TEST_CASE("root exclusivity off both shells") {
    const PodolskyParam param{0.7};
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> mom(0.0, 10.0);
    for (int i = 0; i < 2000; ++i) {
        const double k = mom(rng), E = mom(rng);
        const double s = E * E - k * k;
        const double dist = std::min(std::abs(s), std::abs(param.a * param.a * s - 1.0));
        if (dist < 1e-3) continue;  // too close to a shell to resolve
        CHECK(std::abs(quartic_operator_residual(E, k, param)) >
              1e-4 * dist);
    }
}

TEST_CASE("partial fraction split of the quartic kernel") {
    CHECK(propagator_partial_fraction_gap(1.0, {1.0}) < 1e-15);
    // extreme-scale evaluations, relative to the kernel magnitude
    {
        const double k2 = 1e6;
        const PodolskyParam p{1e-3};
        const double ref = 1.0 / (k2 * (1.0 + p.a * p.a * k2));
        CHECK(propagator_partial_fraction_gap(k2, p) / ref < 1e-12);
    }
    {
        const double k2 = 1e-6;
        const PodolskyParam p{1e3};
        const double ref = 1.0 / (k2 * (1.0 + p.a * p.a * k2));
        CHECK(propagator_partial_fraction_gap(k2, p) / ref < 1e-12);
    }
}

TEST_CASE("constraint Green function identity") {
    CHECK(constraint_green_residual(1.0, {1.0}) == 0.0);
    CHECK(constraint_green_residual(4.0, {0.5}) < 1e-15);
}

TEST_CASE("randomized identity sweep") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> log_range(std::log(1e-6), std::log(1e6));
    double max_pf = 0.0, max_green = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double k2 = std::exp(log_range(rng));
        const PodolskyParam p{std::exp(log_range(rng) * 0.5)};
        // normalize by the largest operand 1/k2: the gap is a difference
        // of terms of that size, so this is the backward-error residual
        max_pf = std::max(max_pf, propagator_partial_fraction_gap(k2, p) * k2);
        max_green = std::max(max_green, constraint_green_residual(k2, p));
    }
    CHECK(max_pf < 1e-12);
    CHECK(max_green < 1e-12);
}

TEST_CASE("a -> 0 recovers unmodified electrodynamics") {
    // the heavy-branch rest energy 1/a exceeds any bound
    for (double bound : {1e3, 1e6, 1e9}) {
        const PodolskyParam p{0.1 / bound};
        CHECK(p.lambda0() > bound);
        CHECK(std::abs(massive_dispersion_residual(p.lambda0(), 0.0, p)) < 1e-12);
    }
}

TEST_CASE("shell locations mirror the two regulator poles") {
    // with 1/a = lambda0, the split kernel's poles sit at k2 = 0 and
    // k2 = -lambda0^2: the same two mass shells the delta-difference uses
    const double lambda0 = 40.0;
    const PodolskyParam p{1.0 / lambda0};
    const double k = 3.0;
    CHECK(std::abs(massive_dispersion_residual(
              std::sqrt(k * k + lambda0 * lambda0), k, p)) < 1e-12);
    CHECK(massless_dispersion_residual(k, k) == 0.0);
}
