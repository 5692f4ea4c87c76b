#include "renyi/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

#include "renyi/edgeworth.hpp"
#include "renyi/gaussint.hpp"

namespace renyi {

TruncatedSeries::TruncatedSeries(std::vector<double> coeffs, double remainder_exponent)
    : coeffs_(std::move(coeffs)), rho_(remainder_exponent) {
    if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: need at least the constant term");
}

TruncatedSeries TruncatedSeries::constant(double c, std::size_t order, double remainder_exponent) {
    std::vector<double> v(order + 1, 0.0);
    v[0] = c;
    return TruncatedSeries(std::move(v), remainder_exponent);
}

double TruncatedSeries::operator()(double u) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
    return acc;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    std::vector<double> v(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
    return TruncatedSeries(std::move(v), rho_);
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t m = std::min(a.order(), b.order());
    std::vector<double> v(m + 1);
    for (std::size_t k = 0; k <= m; ++k) v[k] = a.coeffs_[k] + b.coeffs_[k];
    return TruncatedSeries(std::move(v), std::min(a.rho_, b.rho_));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-1.0) * b; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t m = std::min(a.order(), b.order());
    std::vector<double> v(m + 1, 0.0);
    for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t j = 0; i + j <= m; ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return TruncatedSeries(std::move(v), std::min(a.rho_, b.rho_));
}

TruncatedSeries operator*(double s, const TruncatedSeries& a) {
    std::vector<double> v = a.coeffs_;
    for (double& x : v) x *= s;
    return TruncatedSeries(std::move(v), a.rho_);
}

// The three compositions below use Miller's recurrences for power series.
TruncatedSeries series_log(const TruncatedSeries& s) {
    const auto& c = s.coefficients();
    if (!(c[0] > 0.0)) throw std::domain_error("series_log: constant term must be positive");
    std::vector<double> out(c.size());
    out[0] = std::log(c[0]);
    for (std::size_t k = 1; k < c.size(); ++k) {
        double acc = c[k];
        for (std::size_t i = 1; i < k; ++i) acc -= static_cast<double>(i) / static_cast<double>(k) * out[i] * c[k - i];
        out[k] = acc / c[0];
    }
    return TruncatedSeries(std::move(out), s.remainder_exponent());
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
    const auto& c = s.coefficients();
    std::vector<double> out(c.size());
    out[0] = std::exp(c[0]);
    for (std::size_t k = 1; k < c.size(); ++k) {
        double acc = 0.0;
        for (std::size_t i = 1; i <= k; ++i) acc += static_cast<double>(i) * c[i] * out[k - i];
        out[k] = acc / static_cast<double>(k);
    }
    return TruncatedSeries(std::move(out), s.remainder_exponent());
}

TruncatedSeries series_pow(const TruncatedSeries& s, double q) {
    const auto& c = s.coefficients();
    if (!(c[0] > 0.0)) throw std::domain_error("series_pow: constant term must be positive");
    std::vector<double> out(c.size());
    out[0] = std::pow(c[0], q);
    for (std::size_t k = 1; k < c.size(); ++k) {
        double acc = 0.0;
        for (std::size_t i = 1; i <= k; ++i)
            acc += ((q + 1.0) * static_cast<double>(i) - static_cast<double>(k)) * c[i] * out[k - i];
        out[k] = acc / (static_cast<double>(k) * c[0]);
    }
    return TruncatedSeries(std::move(out), s.remainder_exponent());
}

RenyiOrder::RenyiOrder(double r) : r_(r) {
    if (!(r > 0.0)) throw std::domain_error("Renyi order must be positive");
}

std::string RenyiOrder::to_string() const {
    if (is_infinite()) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", r_);
    return buf;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::eventually_increasing: return "eventually_increasing";
        case Verdict::eventually_decreasing: return "eventually_decreasing";
        case Verdict::indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

Rational falling_factorial(const Rational& r, unsigned k) {
    Rational out = 1;
    for (unsigned i = 0; i < k; ++i) out *= r - i;
    return out;
}

namespace {

void require_r_above_one(double r, const char* who) {
    if (!(r > 1.0) || !std::isfinite(r)) throw std::domain_error(std::string(who) + ": requires finite r > 1");
}

void require_order(const CumulantVector& c, std::size_t order, const char* who) {
    if (c.order() < order)
        throw std::invalid_argument(std::string(who) + ": cumulants up to order " + std::to_string(order) + " required");
}

// a_j as an exact rational in the dyadic value of r
Rational aj_exact(unsigned j, const Rational& r, const CumulantVector& c) {
    const unsigned top = 2 * j;
    std::vector<RationalPoly> q(top);
    for (unsigned i = 1; i <= top; ++i) q[i - 1] = q_polynomial(i, c);
    Rational acc = 0;
    for (const auto& comp : enumerate_compositions(top)) {
        RationalPoly prod = RationalPoly::constant(1);
        Rational weight = 1;
        unsigned K = 0;
        for (unsigned i = 1; i <= top; ++i) {
            const unsigned k = comp[i - 1];
            if (k == 0) continue;
            K += k;
            weight /= factorial(k);
            prod *= poly_pow(q[i - 1], k);
        }
        if (prod.is_zero()) continue;
        acc += weight * falling_factorial(r, K) * gauss_power_ratio(prod, r);
    }
    return acc;
}

}  // namespace

double aj_coefficient(unsigned j, double r, const CumulantVector& c) {
    if (j == 0) throw std::invalid_argument("aj_coefficient: j must be positive");
    require_r_above_one(r, "aj_coefficient");
    require_order(c, 2 * j + 2, "aj_coefficient");
    return aj_exact(j, to_rational(r), c).get_d();
}

double a1_closed_form(double r, const CumulantVector& c) {
    require_r_above_one(r, "a1_closed_form");
    require_order(c, 4, "a1_closed_form");
    const double g3 = c.gamma_d(3), g4 = c.gamma_d(4);
    const double bracket = (2.0 - r) / 12.0 * g3 * g3 + (r - 1.0) / 8.0 * g4;
    return std::exp(-0.5 * (r - 1.0) * std::log(2.0 * std::numbers::pi)) * (r - 1.0) * std::pow(r, -1.5) * bracket;
}

double a2_via_integrals(double r, const CumulantVector& c) {
    require_r_above_one(r, "a2_via_integrals");
    require_order(c, 6, "a2_via_integrals");
    const Rational R = to_rational(r);
    const RationalPoly q1 = q_polynomial(1, c), q2 = q_polynomial(2, c), q3 = q_polynomial(3, c),
                       q4 = q_polynomial(4, c);
    Rational total = R * gauss_power_ratio(q4, R);
    total += falling_factorial(R, 2) / 2 * gauss_power_ratio(q2 * q2 + Rational(2) * (q1 * q3), R);
    total += falling_factorial(R, 3) / 2 * gauss_power_ratio(q1 * q1 * q2, R);
    total += falling_factorial(R, 4) / 24 * gauss_power_ratio(poly_pow(q1, 4), R);
    return gauss_power_mass(r) * total.get_d();
}

Rational b_coefficient_exact(const Rational& r, const CumulantVector& c) {
    require_order(c, 4, "b_coefficient");
    if (sgn(r) <= 0) throw std::domain_error("b_coefficient: r must be positive");
    const Rational g3 = c.gamma(3), g4 = c.gamma(4);
    return -(1 / r) * ((2 - r) / 12 * g3 * g3 + (r - 1) / 8 * g4);
}

double b_coefficient(RenyiOrder r, const CumulantVector& c) {
    require_order(c, 4, "b_coefficient");
    const double g3 = c.gamma_d(3), g4 = c.gamma_d(4);
    if (r.is_infinite()) return g3 * g3 / 12.0 - g4 / 8.0;
    const double rv = r.value();
    return -(1.0 / rv) * ((2.0 - rv) / 12.0 * g3 * g3 + (rv - 1.0) / 8.0 * g4);
}

ExpansionCoefficients entropy_expansion(unsigned m, double r, const CumulantVector& c) {
    require_r_above_one(r, "entropy_expansion");
    if (m < 2) throw std::invalid_argument("entropy_expansion: moment order must be at least 2");
    const unsigned J = (m - 2) / 2;
    require_order(c, 2 * J + 2, "entropy_expansion");
    const double rho = 0.5 * (static_cast<double>(m) - 2.0);

    const Rational R = to_rational(r);
    std::vector<double> a(J);
    std::vector<double> s(2 * J + 1, 0.0);
    s[0] = 1.0;
    for (unsigned j = 1; j <= J; ++j) {
        a[j - 1] = aj_exact(j, R, c).get_d();
        s[2 * j] = a[j - 1];
    }
    const TruncatedSeries S(std::move(s), rho);
    const TruncatedSeries entropy = (-1.0 / (r - 1.0)) * series_log(S);
    const TruncatedSeries power = series_pow(S, -2.0 / (r - 1.0));

    std::vector<double> b(J), cc(J);
    for (unsigned j = 1; j <= J; ++j) {
        b[j - 1] = entropy.coefficient(2 * j);
        cc[j - 1] = power.coefficient(2 * j);
    }
    return ExpansionCoefficients{r, m, c, std::move(a), std::move(b), std::move(cc), entropy, power};
}

double gaussian_renyi_entropy(RenyiOrder r) {
    const double half_log_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
    if (r.is_infinite()) return half_log_2pi;
    if (r.is_shannon()) return half_log_2pi + 0.5;
    const double rv = r.value();
    return half_log_2pi + std::log(rv) / (2.0 * (rv - 1.0));
}

double gaussian_entropy_power(RenyiOrder r) { return std::exp(2.0 * gaussian_renyi_entropy(r)); }

double prop82_coefficient(unsigned k, double r, double gamma_2k) {
    if (k < 2) throw std::invalid_argument("prop82_coefficient: k must be at least 2");
    require_r_above_one(r, "prop82_coefficient");
    return gamma_2k / (std::ldexp(1.0, static_cast<int>(k)) * factorial(k).get_d()) *
           std::pow(1.0 / r - 1.0, static_cast<double>(k - 1));
}

double delta_b1(double r, const CumulantVector& c) { return -b_coefficient(RenyiOrder(r), c); }

std::optional<double> sign_change_threshold(const CumulantVector& c) {
    require_order(c, 4, "sign_change_threshold");
    const Rational g3 = c.gamma(3), g4 = c.gamma(4);
    if (sgn(g3) == 0 || !(g4 < Rational(2, 3) * g3 * g3)) return std::nullopt;
    const Rational r0 = (4 * g3 * g3 - 3 * g4) / (2 * g3 * g3 - 3 * g4);
    return r0.get_d();
}

Verdict monotonicity_prediction(RenyiOrder r, const CumulantVector& c) {
    require_order(c, 4, "monotonicity_prediction");
    int sign = 0;
    if (r.is_infinite()) {
        const Rational g3 = c.gamma(3), g4 = c.gamma(4);
        sign = sgn(Rational(g3 * g3 / 12 - g4 / 8));
    } else {
        sign = sgn(b_coefficient_exact(to_rational(r.value()), c));
    }
    if (sign < 0) return Verdict::eventually_increasing;
    if (sign > 0) return Verdict::eventually_decreasing;
    return Verdict::indeterminate;
}

}  // namespace renyi
