#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "renyi/gaussint.hpp"

using namespace renyi;

namespace {

double phi_pow(double x, double r) { return std::exp(-0.5 * r * x * x - 0.5 * r * std::log(2.0 * std::numbers::pi)); }

double quad_poly(const RationalPoly& p, double r) {
    return oracle::quad([&](double x) { return p(x) * phi_pow(x, r); }, -40.0, 40.0);
}

double pref(double r) { return std::pow(2.0 * std::numbers::pi, -(r - 1.0) / 2.0); }

const std::vector<double> kRGrid = {1.1, 1.5, 2.0, 3.0, 10.0};

}  // namespace

TEST_SUITE("gaussint") {
    TEST_CASE("gauss_power_moment") {
        CHECK(gauss_power_moment(0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(gauss_power_moment(1, 2.7) == 0.0);
        const double v = gauss_power_moment(2, 2.0);
        CHECK(v == doctest::Approx(0.5 / std::sqrt(2.0 * std::numbers::pi) / std::sqrt(2.0)).epsilon(1e-15));
        CHECK(v == doctest::Approx(0.141047).epsilon(1e-6));
        CHECK(std::abs(v - quad_poly(RationalPoly::monomial(2), 2.0)) < 1e-10);
        for (unsigned k = 0; k <= 12; ++k)
            for (double r : {0.5, 1.5, 4.0}) {
                CAPTURE(k);
                CAPTURE(r);
                CHECK(std::abs(gauss_power_moment(k, r) - quad_poly(RationalPoly::monomial(k), r)) < 1e-9);
            }
        CHECK_THROWS_AS(gauss_power_moment(2, 0.0), std::domain_error);
        CHECK_THROWS_AS(gauss_power_moment(2, -1.0), std::domain_error);
        // large r stays finite
        CHECK(std::isfinite(gauss_power_moment(4, 1000.0)));
        CHECK(gauss_power_moment(0, 200.0) > 0.0);
    }

    TEST_CASE("gauss_power_integral") {
        const RationalPoly h3sq = hermite(3) * hermite(3);
        for (double r : {2.0, 3.0, 2.5}) {
            const double closed = 3.0 * (5.0 - 6.0 * r + 3.0 * r * r) / (std::pow(r, 3.5)) * pref(r);
            CHECK(gauss_power_integral(h3sq, r) == doctest::Approx(closed).epsilon(1e-13));
        }
        CHECK(gauss_power_integral(RationalPoly::constant(1), 1.0) == doctest::Approx(1.0).epsilon(1e-15));
        const RationalPoly h46 = hermite(4) * hermite(6);
        CHECK(std::abs(gauss_power_integral(h46, 2.0) - quad_poly(h46, 2.0)) < 1e-9);
        CHECK_THROWS_AS(gauss_power_integral(h46, 0.0), std::domain_error);
    }

    TEST_CASE("hermite_integral closed forms") {
        for (double r : kRGrid) {
            CAPTURE(r);
            CHECK(hermite_integral(2, r) ==
                  doctest::Approx(-(r - 1.0) / (std::pow(r, 1.5)) * pref(r)).epsilon(1e-13));
            CHECK(hermite_integral(4, r) ==
                  doctest::Approx(3.0 * (r - 1.0) * (r - 1.0) / std::pow(r, 2.5) * pref(r)).epsilon(1e-13));
            CHECK(hermite_integral(6, r) ==
                  doctest::Approx(-15.0 * std::pow(r - 1.0, 3) / std::pow(r, 3.5) * pref(r)).epsilon(1e-12));
            CHECK(hermite_integral(3, r) == 0.0);
        }
        CHECK_THROWS_AS(hermite_integral(2, -0.5), std::domain_error);
    }

    TEST_CASE("hermite_integral agrees with the exact polynomial route") {
        for (double r : kRGrid)
            for (unsigned k = 0; k <= 12; ++k) {
                CAPTURE(r);
                CAPTURE(k);
                const double a = hermite_integral(k, r), b = gauss_power_integral(hermite(k), r);
                if (k % 2) {
                    CHECK(a == 0.0);
                    CHECK(b == 0.0);
                } else {
                    CHECK(std::abs(a - b) <= 1e-12 * std::abs(b));
                }
            }
        for (unsigned k = 1; k <= 20; ++k) CHECK(gauss_power_integral(hermite(k), 1.0) == 0.0);
    }

    TEST_CASE("random polynomials against adaptive quadrature") {
        std::mt19937_64 rng(2024);
        std::uniform_int_distribution<int> deg(0, 12);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Rational> c(deg(rng) + 1);
            for (auto& v : c) v = oracle::random_rational(rng, 5, 6);
            const RationalPoly p(c);
            for (double r : {1.5, 2.0, 4.0}) {
                CAPTURE(trial);
                CAPTURE(r);
                CHECK(std::abs(gauss_power_integral(p, r) - quad_poly(p, r)) < 1e-9);
            }
        }
    }

    TEST_CASE("gauss_power_mass") {
        CHECK(gauss_power_mass(1.0) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(gauss_power_mass(2.0) == doctest::Approx(1.0 / (2.0 * std::sqrt(std::numbers::pi))).epsilon(1e-15));
        CHECK(gauss_power_ratio(hermite(3) * hermite(3), 1) == 6);
    }
}
