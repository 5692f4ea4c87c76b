#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "renyi/edgeworth.hpp"
#include "renyi/gaussint.hpp"
#include "renyi/numerics.hpp"

using namespace renyi;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

CumulantVector random_cumulants(std::mt19937_64& rng, std::size_t order) {
    std::vector<Rational> g(order);
    g[1] = 1;
    for (std::size_t k = 3; k <= order; ++k) g[k - 1] = oracle::random_rational(rng, 5, 4);
    return CumulantVector(std::move(g));
}

const Rational f3 = 6, f4 = 24, f5 = 120, f6 = 720;

}  // namespace

TEST_SUITE("edgeworth") {
    TEST_CASE("Q_1..Q_4 match the printed expressions") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 10; ++trial) {
            const CumulantVector c = random_cumulants(rng, 6);
            const Rational g3 = c.gamma(3), g4 = c.gamma(4), g5 = c.gamma(5), g6 = c.gamma(6);
            CHECK(q_polynomial(1, c) == hermite(3) * (g3 / f3));
            CHECK(q_polynomial(2, c) == hermite(6) * (g3 * g3 / (2 * f3 * f3)) + hermite(4) * (g4 / f4));
            CHECK(q_polynomial(3, c) == hermite(9) * (g3 * g3 * g3 / (f3 * f3 * f3 * f3)) +
                                            hermite(7) * (g3 * g4 / (f3 * f4)) + hermite(5) * (g5 / f5));
            CHECK(q_polynomial(4, c) ==
                  hermite(12) * (g3 * g3 * g3 * g3 / (f4 * f3 * f3 * f3 * f3)) +
                      hermite(10) * (g3 * g3 * g4 / (2 * f3 * f3 * f4)) + hermite(8) * (g3 * g5 / (f3 * f5)) +
                      hermite(8) * (g4 * g4 / (2 * f4 * f4)) + hermite(6) * (g6 / f6));
        }
    }

    TEST_CASE("R_k polynomials") {
        const CumulantVector c = CumulantVector::standardized({q(2, 3), q(-1, 2)});
        const Rational g3 = c.gamma(3), g4 = c.gamma(4);
        CHECK(r_polynomial(1, c) == hermite(2) * (g3 / f3));
        CHECK(r_polynomial(2, c) == hermite(5) * (g3 * g3 / (2 * f3 * f3)) + hermite(3) * (g4 / f4));
        CHECK(r_polynomial(2, CumulantVector::gaussian(4)).is_zero());
        CHECK_THROWS_AS(q_polynomial(3, c), std::invalid_argument);
        CHECK_THROWS_AS(r_polynomial(3, c), std::invalid_argument);
    }

    TEST_CASE("parity and degree of Q_k") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 5; ++trial) {
            const CumulantVector c = random_cumulants(rng, 8);
            for (unsigned k = 1; k <= 6; ++k) {
                const RationalPoly p = q_polynomial(k, c);
                CHECK(p.has_parity(k % 2));
                if (sgn(c.gamma(3)) != 0) CHECK(p.degree() == static_cast<int>(3 * k));
                CHECK(p.degree() <= static_cast<int>(3 * k));
            }
        }
        // vanishing cumulants kill the correction
        CHECK(q_polynomial(3, CumulantVector::standardized({0, 0, 0})).is_zero());
    }

    TEST_CASE("edgeworth_density") {
        const CumulantVector c = CumulantVector::standardized({q(1, 2), q(3, 2), q(-1, 3), q(2, 1)});
        const EdgeworthModel m2(2, c);
        for (double x : {-2.0, 0.0, 0.7, 3.1}) CHECK(edgeworth_density(m2, 9, x) == standard_normal_density(x));

        // gamma_3 = gamma_4 = gamma_5 = 0: only the gamma_6 term survives
        const CumulantVector c6 = CumulantVector::standardized({0, 0, 0, q(5, 4)});
        const EdgeworthModel m6(6, c6);
        for (double x : {-2.5, -0.3, 0.0, 1.9}) {
            const double n = 7.0;
            const double expected =
                standard_normal_density(x) * (1.0 + (1.25 / 720.0) * hermite(6)(x) * std::pow(n, -2.0));
            CHECK(edgeworth_density(m6, n, x) == doctest::Approx(expected).epsilon(1e-14));
        }

        // unit mass: every Q_k integrates to zero against phi
        const EdgeworthModel m(6, c);
        for (const auto& p : m.q_polys()) CHECK(gauss_power_ratio(p, 1) == 0);
        const double mass = oracle::quad([&](double x) { return edgeworth_density(m, 5.0, x); }, -30.0, 30.0);
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
        CHECK_THROWS_AS(edgeworth_density(m, 0.5, 0.0), std::invalid_argument);
    }

    TEST_CASE("moments of phi_m match the cumulants of Z_n") {
        // E Z_n^3 = gamma_3 n^{-1/2}, E Z_n^4 = 3 + gamma_4 / n
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 5; ++trial) {
            for (unsigned order = 3; order <= 6; ++order) {
                const CumulantVector c = random_cumulants(rng, order);
                const EdgeworthModel m(order, c);
                for (unsigned j = 0; j <= 4; ++j) {
                    const RationalPoly xj = RationalPoly::monomial(j);
                    // coefficient of n^{-k/2} in int x^j phi_m
                    for (unsigned k = 1; k + 2 <= order; ++k) {
                        const Rational got = gauss_power_ratio(xj * m.q_polys()[k - 1], 1);
                        Rational expected = 0;
                        if (j == 3 && k == 1) expected = c.gamma(3);
                        if (j == 4 && k == 2) expected = c.gamma(4);
                        CHECK(got == expected);
                    }
                    const Rational base = gauss_power_ratio(xj, 1);
                    CHECK(base == (j % 2 ? 0 : double_factorial_odd(j / 2)));
                }
            }
        }
    }

    TEST_CASE("edgeworth_cdf") {
        const CumulantVector c = CumulantVector::standardized({q(1, 2), q(3, 2), q(-1, 3), q(2, 1)});
        const EdgeworthModel m2(2, c);
        for (double x : {-1.0, 0.0, 2.0}) CHECK(edgeworth_cdf(m2, 4, x) == doctest::Approx(standard_normal_cdf(x)));
        const EdgeworthModel m(6, c);
        const double h = 1e-5;
        for (double x : {-3.0, -1.2, -0.1, 0.0, 0.4, 1.7, 3.3}) {
            CAPTURE(x);
            const double fd = (edgeworth_cdf(m, 10, x + h) - edgeworth_cdf(m, 10, x - h)) / (2 * h);
            CHECK(std::abs(fd - edgeworth_density(m, 10, x)) < 1e-9);
        }
        CHECK(edgeworth_cdf(m, 10, 40.0) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(edgeworth_cdf(m, 10, -40.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
        CHECK(edgeworth_cdf(m, 10, INFINITY) == 1.0);
    }

    TEST_CASE("leading_term") {
        const auto lt1 = leading_term(EdgeworthModel(5, CumulantVector::standardized({q(1, 3), 0, 2})));
        REQUIRE(lt1.has_value());
        CHECK(lt1->k == 1);
        CHECK(lt1->gamma_lead == q(1, 3));

        const auto lt2 = leading_term(EdgeworthModel(4, standard_cumulants(DistributionSpec::uniform(), 4)));
        REQUIRE(lt2.has_value());
        CHECK(lt2->k == 2);
        CHECK(lt2->gamma_lead == q(-6, 5));

        const auto lt4 = leading_term(EdgeworthModel(6, CumulantVector::standardized({0, 0, 0, q(7, 2)})));
        REQUIRE(lt4.has_value());
        CHECK(lt4->k == 4);

        CHECK_FALSE(leading_term(EdgeworthModel(6, CumulantVector::gaussian(6))).has_value());
    }

    TEST_CASE("truncation level") {
        CHECK(truncation_level(6.0, std::exp(1.0)) == doctest::Approx(2.0));
        CHECK(truncation_level(2.0, 100.0) == 0.0);
        CHECK_THROWS_AS(truncation_level(1.0, 10.0), std::invalid_argument);
    }

    TEST_CASE("weighted approximation error decays for the uniform law") {
        const DistributionSpec u = DistributionSpec::uniform();
        const EdgeworthModel m(4, standard_cumulants(u, 4));
        GridParams params;
        params.points = 1 << 15;
        auto err = [&](unsigned n) {
            const DensityGrid g = density_of_normalized_sum(u, n, params);
            double worst = 0.0;
            for (std::size_t k = 0; k < g.size(); ++k) {
                const double x = g.x(k);
                worst = std::max(worst, (1 + std::pow(x, 4)) * std::abs(g.values[k] - edgeworth_density(m, n, x)));
            }
            return worst;
        };
        CHECK(err(64) * 2.0 <= err(16));
    }
}
