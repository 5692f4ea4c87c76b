#include "renyi/gaussint.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace renyi {

namespace {

void require_positive(double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw std::domain_error("Gaussian power weight needs finite r > 0");
}

}  // namespace

double gauss_power_mass(double r) {
    require_positive(r);
    return std::exp(-0.5 * (r - 1.0) * std::log(2.0 * std::numbers::pi) - 0.5 * std::log(r));
}

double gauss_power_moment(unsigned k, double r) {
    require_positive(r);
    if (k % 2 == 1) return 0.0;
    const unsigned j = k / 2;
    return gauss_power_mass(r) * double_factorial_odd(j).get_d() * std::pow(r, -static_cast<double>(j));
}

Rational gauss_power_ratio(const RationalPoly& p, const Rational& r) {
    if (sgn(r) <= 0) throw std::domain_error("Gaussian power weight needs r > 0");
    // Z / sqrt r has moments (2j-1)!! / r^j
    const Rational inv = 1 / r;
    Rational acc = 0, scale = 1;
    const auto& c = p.coefficients();
    for (std::size_t k = 0; k < c.size(); k += 2) {
        const unsigned j = static_cast<unsigned>(k / 2);
        if (sgn(c[k]) != 0) acc += c[k] * double_factorial_odd(j) * scale;
        scale *= inv;
    }
    return acc;
}

double gauss_power_integral(const RationalPoly& p, double r) {
    require_positive(r);
    return gauss_power_mass(r) * gauss_power_ratio(p, to_rational(r)).get_d();
}

double hermite_integral(unsigned k, double r) {
    require_positive(r);
    if (k % 2 == 1) return 0.0;
    const unsigned j = k / 2;
    return gauss_power_mass(r) * double_factorial_odd(j).get_d() * std::pow((1.0 - r) / r, static_cast<double>(j));
}

}  // namespace renyi
