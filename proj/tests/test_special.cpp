#include <doctest.h>

#include "wellglm/special.hpp"

#include "oracles.hpp"

#include <cmath>

using namespace wellglm;

TEST_SUITE("special") {

TEST_CASE("chi-square with one degree of freedom is a squared Normal") {
    for (double p : {0.5, 0.9, 0.95, 0.99, 0.999, 0.999999}) {
        const double z = oracle::normal_quantile(0.5 + 0.5 * p);
        CHECK(chi_square_quantile(p, 1) == doctest::Approx(z * z).epsilon(1e-10));
    }
}

TEST_CASE("chi-square with two degrees of freedom is exponential") {
    for (double x : {0.1, 1.0, 5.0, 30.0}) CHECK(chi_square_cdf(x, 2) == doctest::Approx(1.0 - std::exp(-x / 2)));
    CHECK(chi_square_quantile(0.999, 2) == doctest::Approx(-2.0 * std::log(0.001)).epsilon(1e-12));
}

TEST_CASE("quantile inverts the cdf across dof") {
    for (int dof : {1, 3, 7, 20, 231}) {
        for (double p : {0.01, 0.5, 0.999}) CHECK(chi_square_cdf(chi_square_quantile(p, dof), dof) == doctest::Approx(p).epsilon(1e-10));
    }
}

TEST_CASE("two-sided log worth stays finite in the far tail") {
    CHECK(two_sided_normal_log_worth(0.0) == 0.0);
    CHECK(two_sided_normal_log_worth(1.959963984540054) == doctest::Approx(-std::log10(0.05)).epsilon(1e-12));
    // Continuity across the asymptotic switch at |z| = 26 sqrt 2.
    const double z = 26.0 * std::sqrt(2.0);
    CHECK(two_sided_normal_log_worth(z - 1e-9) == doctest::Approx(two_sided_normal_log_worth(z + 1e-9)).epsilon(1e-9));
    const double big = two_sided_normal_log_worth(200.0);
    CHECK(std::isfinite(big));
    CHECK(big == doctest::Approx(200.0 * 200.0 / 2.0 / std::log(10.0) + std::log10(200.0 * std::sqrt(M_PI / 2.0))).epsilon(1e-6));
}

}
