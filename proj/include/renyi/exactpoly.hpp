#pragma once

// Exact univariate polynomials over the rationals and the probabilists'
// (Chebyshev-Hermite) polynomials built on top of them.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace renyi {

/// Arbitrary-precision rational; gmpxx keeps every result in lowest terms
/// with a positive denominator.
using Rational = mpq_class;

/// num/den reduced to lowest terms. Throws std::domain_error on den == 0.
Rational make_rational(long num, long den = 1);

/// Exact conversion of a finite double (every double is a dyadic rational).
Rational to_rational(double x);

double to_double(const Rational& q);

Rational factorial(unsigned k);

/// base^e, with base^0 = 1.
Rational rational_pow(const Rational& base, unsigned e);

/// (2k-1)!! with the convention (-1)!! = 1.
Rational double_factorial_odd(unsigned k);

/// Dense polynomial sum_k c_k x^k with exact rational coefficients.
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial has an empty coefficient list and degree -1.
class RationalPoly {
public:
    RationalPoly() = default;
    RationalPoly(std::initializer_list<Rational> coeffs);
    explicit RationalPoly(std::vector<Rational> coeffs);
    static RationalPoly constant(const Rational& c);
    /// c * x^k
    static RationalPoly monomial(unsigned k, const Rational& c = 1);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Coefficient of x^k; zero beyond the degree.
    Rational coefficient(std::size_t k) const;
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    /// Horner evaluation in double precision.
    double operator()(double x) const;
    /// Exact evaluation.
    Rational operator()(const Rational& x) const;

    /// True when every nonzero coefficient has degree congruent to `parity` mod 2.
    bool has_parity(unsigned parity) const;

    RationalPoly& operator+=(const RationalPoly& rhs);
    RationalPoly& operator-=(const RationalPoly& rhs);
    RationalPoly& operator*=(const RationalPoly& rhs);
    RationalPoly& operator*=(const Rational& s);

    friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

RationalPoly operator+(RationalPoly a, const RationalPoly& b);
RationalPoly operator-(RationalPoly a, const RationalPoly& b);
RationalPoly operator-(RationalPoly a);
RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
RationalPoly operator*(RationalPoly a, const Rational& s);
RationalPoly operator*(const Rational& s, RationalPoly a);

RationalPoly poly_add(const RationalPoly& a, const RationalPoly& b);
RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b);
RationalPoly poly_derivative(const RationalPoly& p);
/// p^k, with p^0 = 1.
RationalPoly poly_pow(const RationalPoly& p, unsigned k);
double poly_eval(const RationalPoly& p, double x);
Rational poly_eval(const RationalPoly& p, const Rational& x);

/// The identity polynomial x.
RationalPoly poly_x();

/// Monic probabilists' Hermite polynomial He_k via
/// H_{k+1} = x H_k - k H_{k-1}, H_0 = 1, H_1 = x.
RationalPoly hermite(unsigned k);

std::ostream& operator<<(std::ostream& os, const RationalPoly& p);

}  // namespace renyi
