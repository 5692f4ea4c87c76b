#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "oracles.hpp"
#include "renyi/distribution.hpp"

using namespace renyi;

namespace {

// int e^{itx} p(x) dx by quadrature over the support
std::complex<double> cf_by_quadrature(const DistributionSpec& s, double t, double a, double b) {
    const double re = oracle::quad([&](double x) { return std::cos(t * x) * s.density(x); }, a, b);
    const double im = oracle::quad([&](double x) { return std::sin(t * x) * s.density(x); }, a, b);
    return {re, im};
}

GridDensity sample_grid() {
    // an asymmetric tent-and-shoulder shape, standardized on load
    std::vector<double> v = {0.0, 0.4, 1.0, 0.7, 0.65, 0.3, 0.1, 0.05, 0.0};
    return GridDensity::standardize(-1.0, 0.5, v);
}

}  // namespace

TEST_SUITE("distribution") {
    TEST_CASE("construction validates parameters and standardization") {
        CHECK_THROWS_AS(DistributionSpec::gamma(0.0), std::invalid_argument);
        CHECK_THROWS_AS(DistributionSpec::gamma(-1.0), std::invalid_argument);
        CHECK_THROWS_AS(DistributionSpec(GaussianMixture{{0.5, 0.5}, {1.0, -1.0}, {1.0, 1.0}}), std::invalid_argument);
        CHECK_THROWS_AS(DistributionSpec(GaussianMixture{{0.5, 0.6}, {0.0, 0.0}, {1.0, 1.0}}), std::invalid_argument);
        CHECK_THROWS_AS(DistributionSpec(GridDensity{-1.0, 0.5, {0.0, 1.0, 0.0}}), std::invalid_argument);
        // equal-weight mixture at +-0.6 with sigma 0.8: variance 0.36 + 0.64 = 1
        CHECK_NOTHROW(DistributionSpec(GaussianMixture{{0.5, 0.5}, {0.6, -0.6}, {0.8, 0.8}}));
        CHECK_NOTHROW(DistributionSpec(sample_grid()));
    }

    TEST_CASE("densities are standardized") {
        const std::vector<std::pair<DistributionSpec, std::pair<double, double>>> laws = {
            {DistributionSpec::uniform(), {-std::sqrt(3.0), std::sqrt(3.0)}},
            {DistributionSpec::gamma(4.0), {-2.0, 60.0}},
            {DistributionSpec::gamma(1.0), {-1.0, 60.0}},
            {DistributionSpec::laplace(), {-40.0, 40.0}},
            {DistributionSpec(GaussianMixture{{0.5, 0.5}, {0.6, -0.6}, {0.8, 0.8}}), {-15.0, 15.0}},
            {DistributionSpec(sample_grid()), {-6.0, 6.0}},
        };
        for (const auto& [s, ab] : laws) {
            CAPTURE(s.name());
            const auto [a, b] = ab;
            // split at 0 to respect kinks of the Laplace density
            auto integral = [&](auto f) { return oracle::quad(f, a, 0.0) + oracle::quad(f, 0.0, b); };
            CHECK(integral([&](double x) { return s.density(x); }) == doctest::Approx(1.0).epsilon(1e-9));
            CHECK(integral([&](double x) { return x * s.density(x); }) == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
            CHECK(integral([&](double x) { return x * x * s.density(x); }) == doctest::Approx(1.0).epsilon(1e-9));
            const MomentVector m = s.moments(6);
            for (unsigned k = 3; k <= 6; ++k) {
                const double mk = integral([&](double x) { return std::pow(x, k) * s.density(x); });
                CHECK(m.moment(k).get_d() == doctest::Approx(mk).epsilon(1e-8));
            }
        }
    }

    TEST_CASE("exact moments") {
        const MomentVector u = DistributionSpec::uniform().moments(8);
        CHECK(u.moment(4) == make_rational(9, 5));
        CHECK(u.moment(6) == make_rational(27, 7));
        CHECK(u.moment(8) == 9);
        CHECK(u.moment(5) == 0);
        const MomentVector l = DistributionSpec::laplace().moments(6);
        CHECK(l.moment(4) == 6);
        CHECK(l.moment(6) == 90);
        const MomentVector g = DistributionSpec::gamma(4.0).moments(4);
        CHECK(g.moment(3) == 1);
        CHECK(g.moment(4) == make_rational(9, 2));
    }

    TEST_CASE("characteristic functions match Fourier integrals of the densities") {
        const double s3 = std::sqrt(3.0);
        for (double t : {0.3, 1.0, 2.7, 6.0}) {
            CAPTURE(t);
            const auto check = [&](const DistributionSpec& s, double a, double b) {
                const auto ref = cf_by_quadrature(s, t, a, b);
                const auto got = s.characteristic_function(t);
                CHECK(got.real() == doctest::Approx(ref.real()).scale(1.0).epsilon(1e-9));
                CHECK(got.imag() == doctest::Approx(ref.imag()).scale(1.0).epsilon(1e-9));
            };
            check(DistributionSpec::uniform(), -s3, s3);
            check(DistributionSpec::gamma(4.0), -2.0, 80.0);
            check(DistributionSpec::gamma(2.5), -std::sqrt(2.5), 80.0);
            check(DistributionSpec(GaussianMixture{{0.5, 0.5}, {0.6, -0.6}, {0.8, 0.8}}), -15.0, 15.0);
            const DistributionSpec grid(sample_grid());
            check(grid, grid.support_lower(), grid.support_upper());
            const auto lap = DistributionSpec::laplace();
            const auto ref = cf_by_quadrature(lap, t, -60.0, 0.0) + cf_by_quadrature(lap, t, 0.0, 60.0);
            CHECK(lap.characteristic_function(t).real() == doctest::Approx(ref.real()).epsilon(1e-9));
        }
        for (const auto& s : {DistributionSpec::uniform(), DistributionSpec::gamma(4.0), DistributionSpec::laplace(),
                              DistributionSpec::gaussian(), DistributionSpec(sample_grid())}) {
            CHECK(std::abs(s.characteristic_function(0.0) - 1.0) < 1e-14);
            CHECK(std::abs(s.characteristic_function(-1.3) - std::conj(s.characteristic_function(1.3))) < 1e-14);
        }
    }

    TEST_CASE("tail decay bounds hold and determine n_min") {
        const std::vector<DistributionSpec> laws = {DistributionSpec::uniform(), DistributionSpec::gamma(4.0),
                                                    DistributionSpec::gamma(0.5), DistributionSpec::laplace(),
                                                    DistributionSpec(sample_grid())};
        for (const auto& s : laws) {
            const TailDecay td = s.tail_decay();
            for (double t = 1.0; t < 2000.0; t *= 1.37)
                CHECK(std::abs(s.characteristic_function(t)) <= td.constant * std::pow(t, -td.exponent) * (1 + 1e-12));
        }
        CHECK(DistributionSpec::uniform().n_min() == 2);
        CHECK(DistributionSpec::gamma(4.0).n_min() == 1);
        CHECK(DistributionSpec::gamma(0.5).n_min() == 3);
        CHECK(DistributionSpec::gamma(1.0).n_min() == 2);
        CHECK(DistributionSpec::laplace().n_min() == 1);
        CHECK(DistributionSpec::gaussian().n_min() == 1);
    }

    TEST_CASE("support and density shape") {
        const auto u = DistributionSpec::uniform();
        CHECK(u.support_lower() == doctest::Approx(-std::sqrt(3.0)));
        CHECK(u.density(0.0) == doctest::Approx(1.0 / (2.0 * std::sqrt(3.0))));
        CHECK(u.density(1.8) == 0.0);
        CHECK(DistributionSpec::gamma(4.0).density(-2.5) == 0.0);
        CHECK(DistributionSpec::gaussian().density(0.0) == doctest::Approx(1.0 / std::sqrt(2.0 * std::numbers::pi)));
        CHECK(std::isinf(DistributionSpec::laplace().support_upper()));
    }
}
