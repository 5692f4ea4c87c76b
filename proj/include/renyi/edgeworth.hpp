#pragma once

// Edgeworth corrections of the standard normal law: the polynomials Q_k and
// R_k, the corrected density phi_m and distribution function Phi_m.

#include <optional>
#include <vector>

#include "renyi/cumulants.hpp"
#include "renyi/exactpoly.hpp"

namespace renyi {

/// Q_k = sum over compositions (r_1..r_k) of k of
///   prod_i (gamma_{i+2} / (i+2)!)^{r_i} / r_i!  *  H_{k+2j},  j = r_1 + ... + r_k.
/// Throws std::invalid_argument when c has order < k + 2.
RationalPoly q_polynomial(unsigned k, const CumulantVector& c);

/// Same sum as Q_k with H_{k+2j-1} in place of H_{k+2j}.
RationalPoly r_polynomial(unsigned k, const CumulantVector& c);

/// First non-vanishing correction: gamma_3 = ... = gamma_{k+1} = 0 != gamma_{k+2}.
struct LeadingTerm {
    unsigned k;
    Rational gamma_lead;
};

class EdgeworthModel {
public:
    /// Uses gamma_3..gamma_m of c; throws when m < 2 or c.order() < m.
    EdgeworthModel(unsigned m, const CumulantVector& c);

    unsigned order() const noexcept { return m_; }
    const CumulantVector& cumulants() const noexcept { return cumulants_; }
    /// Q_1..Q_{m-2} (index 0 holds Q_1).
    const std::vector<RationalPoly>& q_polys() const noexcept { return q_; }
    const std::vector<RationalPoly>& r_polys() const noexcept { return r_; }

private:
    unsigned m_;
    CumulantVector cumulants_;
    std::vector<RationalPoly> q_;
    std::vector<RationalPoly> r_;
};

double standard_normal_density(double x);
double standard_normal_cdf(double x);

/// phi(x) (1 + sum_k Q_k(x) n^{-k/2}); signed, never clipped. n >= 1.
double edgeworth_density(const EdgeworthModel& model, double n, double x);

/// Phi(x) - phi(x) sum_k R_k(x) n^{-k/2}.
double edgeworth_cdf(const EdgeworthModel& model, double n, double x);

/// std::nullopt when gamma_3..gamma_m all vanish (the Gaussian case).
std::optional<LeadingTerm> leading_term(const EdgeworthModel& model);

/// T_n = sqrt((s - 2) log n), the range on which phi_m is positive for large n.
double truncation_level(double s, double n);

}  // namespace renyi
