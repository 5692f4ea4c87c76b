#pragma once

// The r = infinity branch: location of the maximum of phi_6, the expansion
// of the sup-norm of p_n and of N_inf(Z_n) up to order 1/n^2.

#include <utility>

#include "renyi/cumulants.hpp"
#include "renyi/expansion.hpp"

namespace renyi {

struct SupNormExpansion {
    Rational a1, a2;  // x_6(n) = a1 n^{-1/2} + a2 n^{-3/2} + O(n^{-5/2})
    Rational b1, b2, b3, b4;
    Rational A, B;  // ||p_n||_inf = phi(0) (1 + A/n + B/n^2) + o(n^-2)
    Rational A_tilde, B_tilde;  // N_inf(Z_n) = N_inf(Z) (1 - A~/n + B~/n^2) + o(n^-2)
};

/// (a1, a2) = (-g3/2, g3^3/4 - 5 g3 g4/12 + g5/8). Needs order >= 5.
std::pair<Rational, Rational> extremum_series(const CumulantVector& c);

/// Needs order >= 6.
SupNormExpansion supnorm_coefficients(const CumulantVector& c);

/// (A~, B~) = ((1/4)(g4 - (2/3) g3^2), 3 A^2 - 2 B).
std::pair<Rational, Rational> ninf_expansion(const CumulantVector& c);

/// Root of phi_6' nearest the origin: bisection-safeguarded Newton on [-1, 1]
/// from a1 / sqrt n, tolerance 1e-13. Throws std::runtime_error
/// ("extremum not localized") when phi_6' does not change sign on the bracket
/// or phi_6 is not positive there.
double solve_extremum(const CumulantVector& c, double n);

/// Increasing iff g4 > (2/3) g3^2, decreasing iff g4 < (2/3) g3^2.
Verdict monotonicity_prediction_inf(const CumulantVector& c);

}  // namespace renyi
