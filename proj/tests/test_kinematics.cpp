#include <doctest.h>

#include <cmath>
#include <random>

#include "cutoffqed/kinematics.hpp"

using namespace cutoffqed;

TEST_CASE("energy basic values") {
    CHECK(energy(0, 1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(energy(3, 4) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(energy(1, 1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("omega basic values") {
    CHECK(omega(0, 2) == 2.0);
    CHECK(omega(5, 0) == 5.0);
    CHECK(omega(3, 4) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("ef basic values") {
    CHECK(ef(0, 0, 0.3, 1) == 1.0);
    CHECK(ef(0, 3, 0.5, 4) == doctest::Approx(5.0).epsilon(1e-15));
    // back-to-back momenta of equal magnitude cancel
    CHECK(ef(1, 1, -1.0, 1) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("ef symmetry and reduction properties") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> mom(0.0, 10.0);
    std::uniform_real_distribution<double> ang(-1.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double p = mom(rng), k = mom(rng), mu = ang(rng), m = 0.1 + mom(rng);
        CHECK(ef(p, k, mu, m) == doctest::Approx(ef(k, p, mu, m)).epsilon(1e-14));
        CHECK(ef(p, 0, mu, m) == doctest::Approx(energy(p, m)).epsilon(1e-14));
        CHECK(ef(p, k, mu, m) >= m);
    }
}

TEST_CASE("monotonicity in momentum arguments") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> mom(0.0, 10.0);
    std::uniform_real_distribution<double> pos_ang(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double p = mom(rng), m = 0.1 + mom(rng), dp = mom(rng);
        CHECK(energy(p + dp, m) >= energy(p, m));
        CHECK(omega(p + dp, m) >= omega(p, m));
        const double k = mom(rng), mu = pos_ang(rng);
        CHECK(ef(p + dp, k, mu, m) >= ef(p, k, mu, m));
        CHECK(ef(p, k + dp, mu, m) >= ef(p, k, mu, m));
    }
}
