#include <doctest.h>

#include <stdexcept>

#include "renyi/exactpoly.hpp"

using namespace renyi;

namespace {
const RationalPoly X = poly_x();
Rational q(long a, long b = 1) { return make_rational(a, b); }
}  // namespace

TEST_SUITE("exactpoly") {
    TEST_CASE("rationals are kept in lowest terms") {
        CHECK(make_rational(2, 4) == q(1, 2));
        const Rational neg = make_rational(1, -2);
        CHECK(neg.get_den() == 2);
        CHECK(neg.get_num() == -1);
        CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
        CHECK(to_rational(0.375) == q(3, 8));
        CHECK(factorial(6) == 720);
        CHECK(double_factorial_odd(0) == 1);
        CHECK(double_factorial_odd(4) == 105);
        CHECK(rational_pow(q(2, 3), 3) == q(8, 27));
    }

    TEST_CASE("poly_add") {
        CHECK(poly_add(X, -X).is_zero());
        CHECK(poly_add(X, -X).degree() == -1);
        CHECK(poly_add(hermite(3), RationalPoly{0, 3}) == RationalPoly::monomial(3));
        CHECK(poly_add(RationalPoly{}, hermite(4)) == hermite(4));
    }

    TEST_CASE("poly_mul") {
        CHECK(poly_mul(hermite(3), hermite(3)) == RationalPoly{0, 0, 9, 0, -6, 0, 1});
        const RationalPoly p{q(1, 3), -2, 0, q(5, 7)};
        CHECK(poly_mul(RationalPoly::constant(1), p) == p);
        CHECK(poly_mul(RationalPoly{}, p).is_zero());
        CHECK(poly_mul(p, hermite(4)).degree() == 7);
    }

    TEST_CASE("poly_derivative") {
        CHECK(poly_derivative(hermite(4)) == hermite(3) * q(4));
        CHECK(poly_derivative(hermite(4)) == RationalPoly{0, -12, 0, 4});
        CHECK(poly_derivative(RationalPoly::constant(q(7, 2))).is_zero());
        CHECK(poly_derivative(hermite(6)) == hermite(5) * q(6));
    }

    TEST_CASE("hermite") {
        CHECK(hermite(0) == RationalPoly::constant(1));
        CHECK(hermite(4) == RationalPoly{3, 0, -6, 0, 1});
        CHECK(hermite(6)(Rational(0)) == -15);
        CHECK(hermite(3) == RationalPoly{0, -3, 0, 1});
    }

    TEST_CASE("poly_eval") {
        CHECK(poly_eval(hermite(3), 1.0) == -2.0);
        const RationalPoly p{q(2, 5), 3, -1};
        CHECK(poly_eval(p, 0.0) == doctest::Approx(0.4));
        CHECK(poly_eval(p, Rational(0)) == q(2, 5));
        CHECK(poly_eval(hermite(5), 0.0) == 0.0);
        CHECK(poly_eval(hermite(4), q(1, 2)) == q(1, 16) - q(6, 4) + 3);
    }

    TEST_CASE("hermite recurrence, derivative and Appell identities") {
        for (unsigned k = 1; k <= 20; ++k) {
            CAPTURE(k);
            CHECK(hermite(k + 1) == X * hermite(k) - hermite(k - 1) * Rational(k));
            CHECK(poly_derivative(hermite(k)) == hermite(k - 1) * Rational(k));
        }
        for (unsigned k = 0; k <= 12; ++k) CHECK(poly_derivative(hermite(k)) - X * hermite(k) == -hermite(k + 1));
    }

    TEST_CASE("hermite degree, leading coefficient and parity") {
        for (unsigned k = 0; k <= 20; ++k) {
            const RationalPoly h = hermite(k);
            CHECK(h.degree() == static_cast<int>(k));
            CHECK(h.coefficient(k) == 1);
            CHECK(h.has_parity(k % 2));
            CHECK_FALSE(h.has_parity((k + 1) % 2));
        }
    }

    TEST_CASE("hermite values at the origin") {
        for (unsigned k = 0; k <= 10; ++k) {
            const Rational expected = (k % 2 ? -1 : 1) * double_factorial_odd(k);
            CHECK(hermite(2 * k)(Rational(0)) == expected);
        }
    }

    TEST_CASE("ring laws on sample polynomials") {
        const RationalPoly a{q(1, 2), q(-3, 4), 2}, b{0, q(5, 3)}, c{q(7, 9), 0, 0, q(-1, 8)};
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(poly_pow(a, 3) == a * a * a);
        CHECK(poly_pow(a, 0) == RationalPoly::constant(1));
        CHECK(poly_derivative(a * b) == poly_derivative(a) * b + a * poly_derivative(b));
        CHECK(hermite(3).to_string() == "x^3 - 3*x");
    }
}
