#pragma once

// Asymptotic expansions of int p_n^r, the Renyi entropy h_r(Z_n) and the
// entropy power N_r(Z_n) in powers of 1/n.

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "renyi/cumulants.hpp"

namespace renyi {

/// Formal series c_0 + c_1 u + ... + c_M u^M in u = n^{-1/2}, carrying an
/// o(n^{-rho}) remainder tag. Binary operations truncate to the smaller order
/// and keep the smaller tag.
class TruncatedSeries {
public:
    static constexpr double kExact = std::numeric_limits<double>::infinity();

    explicit TruncatedSeries(std::vector<double> coeffs, double remainder_exponent = kExact);
    static TruncatedSeries constant(double c, std::size_t order, double remainder_exponent = kExact);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    double remainder_exponent() const noexcept { return rho_; }
    double coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0.0; }
    const std::vector<double>& coefficients() const noexcept { return coeffs_; }
    double operator()(double u) const;

    TruncatedSeries truncated(std::size_t order) const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(double s, const TruncatedSeries& a);

private:
    std::vector<double> coeffs_;
    double rho_;
};

/// Throw std::domain_error when c_0 <= 0 (log, pow).
TruncatedSeries series_log(const TruncatedSeries& s);
TruncatedSeries series_exp(const TruncatedSeries& s);
TruncatedSeries series_pow(const TruncatedSeries& s, double q);

/// Renyi index: finite r > 0 (r = 1 is Shannon) or r = infinity.
class RenyiOrder {
public:
    /// Throws std::domain_error unless r > 0 (r may be +infinity).
    RenyiOrder(double r);  // NOLINT(google-explicit-constructor)
    static RenyiOrder infinity() { return RenyiOrder(std::numeric_limits<double>::infinity()); }

    bool is_infinite() const noexcept { return r_ == std::numeric_limits<double>::infinity(); }
    bool is_shannon() const noexcept { return r_ == 1.0; }
    double value() const noexcept { return r_; }
    std::string to_string() const;

private:
    double r_;
};

enum class Verdict { eventually_increasing, eventually_decreasing, indeterminate };
std::string to_string(Verdict v);

/// (r)_k = r (r-1) ... (r-k+1).
Rational falling_factorial(const Rational& r, unsigned k);

/// Coefficient a_j of n^{-j} in int p_n^r / int phi^r = 1 + sum a_j n^{-j},
/// via the general enumeration over k_1 + 2 k_2 + ... + 2j k_{2j} = 2j.
/// Requires r > 1 and c.order() >= 2j + 2.
double aj_coefficient(unsigned j, double r, const CumulantVector& c);

/// A_1(r) = (2 pi)^{-(r-1)/2} (r-1) r^{-3/2} [(2-r)/12 g3^2 + (r-1)/8 g4].
double a1_closed_form(double r, const CumulantVector& c);

/// A_2(r) = r int Q_4 phi^r + (r)_2/2 int (Q_2^2 + 2 Q_1 Q_3) phi^r
///        + (r)_3/2 int Q_1^2 Q_2 phi^r + (r)_4/24 int Q_1^4 phi^r.
double a2_via_integrals(double r, const CumulantVector& c);

/// b(r) = -(1/r)[(2-r)/12 g3^2 + (r-1)/8 g4], with b(1) = -g3^2/12 and
/// b(inf) = g3^2/12 - g4/8. Needs c.order() >= 4.
double b_coefficient(RenyiOrder r, const CumulantVector& c);
/// Same quantity in exact arithmetic (r finite, positive).
Rational b_coefficient_exact(const Rational& r, const CumulantVector& c);

struct ExpansionCoefficients {
    double r;
    unsigned m;
    CumulantVector cumulants;
    std::vector<double> a;  // a_1..a_J
    std::vector<double> b;  // h_r(Z_n) - h_r(Z) = sum b_j n^{-j}
    std::vector<double> c;  // N_r(Z_n) / N_r(Z) = 1 + sum c_j n^{-j}
    TruncatedSeries entropy_series;  // in u = n^{-1/2}
    TruncatedSeries power_series;

    std::size_t J() const noexcept { return a.size(); }
};

/// Expansion with J = floor((m-2)/2) terms for a law with finite moment of
/// order m. Requires r > 1, m >= 2 and c.order() >= 2J + 2.
ExpansionCoefficients entropy_expansion(unsigned m, double r, const CumulantVector& c);

/// h_r(Z) = (1/2) log 2 pi + log r / (2 (r-1)), with the r = 1 and r = inf limits.
double gaussian_renyi_entropy(RenyiOrder r);
/// N_r(Z) = 2 pi r^{1/(r-1)}.
double gaussian_entropy_power(RenyiOrder r);

/// b_{k-1} = gamma_{2k} / (2^k k!) (1/r - 1)^{k-1}.
double prop82_coefficient(unsigned k, double r, double gamma_2k);

/// B_1(r) = -b(r).
double delta_b1(double r, const CumulantVector& c);

/// r_0 = (4 g3^2 - 3 g4) / (2 g3^2 - 3 g4), defined when g3 != 0 and g4 < (2/3) g3^2.
std::optional<double> sign_change_threshold(const CumulantVector& c);

/// Sign of b(r): b < 0 increasing, b > 0 decreasing, b = 0 indeterminate.
Verdict monotonicity_prediction(RenyiOrder r, const CumulantVector& c);

}  // namespace renyi
