#pragma once

// Integrals of polynomials against powers of the standard normal density,
// int P(x) phi(x)^r dx for real r > 0.

#include "renyi/exactpoly.hpp"

namespace renyi {

/// int phi^r dx = (2 pi)^{-(r-1)/2} r^{-1/2}, evaluated in log space.
double gauss_power_mass(double r);

/// int x^k phi(x)^r dx. Throws std::domain_error for r <= 0.
double gauss_power_moment(unsigned k, double r);

/// E P(Z / sqrt r) = int P phi^r / int phi^r, exact in the (dyadic) value of r.
Rational gauss_power_ratio(const RationalPoly& p, const Rational& r);

/// int P(x) phi(x)^r dx. The polynomial part is summed exactly and the
/// transcendental prefactor is applied once at the end.
double gauss_power_integral(const RationalPoly& p, double r);

/// I(k, r) = int H_k phi^r: zero for odd k, and for k = 2j
/// (2j-1)!! (1-r)^j / (r^{j+1/2} (2 pi)^{(r-1)/2}).
double hermite_integral(unsigned k, double r);

}  // namespace renyi
