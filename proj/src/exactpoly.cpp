#include "renyi/exactpoly.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace renyi {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational to_rational(double x) {
    if (!std::isfinite(x)) throw std::domain_error("to_rational: non-finite value");
    return Rational(x);
}

double to_double(const Rational& q) { return q.get_d(); }

Rational factorial(unsigned k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return Rational(f);
}

Rational rational_pow(const Rational& base, unsigned e) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return out;
}

Rational double_factorial_odd(unsigned k) {
    mpz_class f = 1;
    for (unsigned i = 3; i + 1 <= 2 * k; i += 2) f *= i;
    return Rational(f);
}

RationalPoly::RationalPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::monomial(unsigned k, const Rational& c) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return RationalPoly(std::move(v));
}

Rational RationalPoly::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

double RationalPoly::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

Rational RationalPoly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

bool RationalPoly::has_parity(unsigned parity) const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (k % 2 != parity % 2 && sgn(coeffs_[k]) != 0) return false;
    return true;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
}

void RationalPoly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::string RationalPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) os << mag.get_str();
        if (k > 0) {
            if (mag != 1) os << "*";
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
RationalPoly operator-(RationalPoly a) { return a *= Rational(-1); }
RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly out = a;
    return out *= b;
}
RationalPoly operator*(RationalPoly a, const Rational& s) { return a *= s; }
RationalPoly operator*(const Rational& s, RationalPoly a) { return a *= s; }

RationalPoly poly_add(const RationalPoly& a, const RationalPoly& b) { return a + b; }
RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b) { return a * b; }

RationalPoly poly_derivative(const RationalPoly& p) {
    const auto& c = p.coefficients();
    if (c.size() <= 1) return {};
    std::vector<Rational> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * static_cast<unsigned long>(k);
    return RationalPoly(std::move(d));
}

RationalPoly poly_pow(const RationalPoly& p, unsigned k) {
    RationalPoly result = RationalPoly::constant(1);
    RationalPoly base = p;
    while (k > 0) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k > 0) base *= base;
    }
    return result;
}

double poly_eval(const RationalPoly& p, double x) { return p(x); }
Rational poly_eval(const RationalPoly& p, const Rational& x) { return p(x); }

RationalPoly poly_x() { return RationalPoly::monomial(1); }

RationalPoly hermite(unsigned k) {
    RationalPoly prev = RationalPoly::constant(1);
    if (k == 0) return prev;
    RationalPoly cur = poly_x();
    for (unsigned j = 1; j < k; ++j) {
        RationalPoly next = poly_x() * cur - prev * Rational(j);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::ostream& operator<<(std::ostream& os, const RationalPoly& p) { return os << p.to_string(); }

}  // namespace renyi
