#include "renyi/edgeworth.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace renyi {

namespace {

RationalPoly correction_polynomial(unsigned k, const CumulantVector& c, unsigned shift) {
    if (k == 0) throw std::invalid_argument("Edgeworth polynomial index must be positive");
    if (c.order() < k + 2)
        throw std::invalid_argument("Edgeworth polynomial Q_" + std::to_string(k) + " needs cumulants up to order " +
                                    std::to_string(k + 2));
    RationalPoly out;
    for (const auto& comp : enumerate_compositions(k)) {
        Rational coeff = 1;
        unsigned j = 0;
        for (unsigned i = 1; i <= k && sgn(coeff) != 0; ++i) {
            const unsigned r = comp[i - 1];
            if (r == 0) continue;
            j += r;
            coeff *= rational_pow(c.gamma(i + 2) / factorial(i + 2), r) / factorial(r);
        }
        if (sgn(coeff) == 0) continue;
        out += hermite(k + 2 * j - shift) * coeff;
    }
    return out;
}

double eval_series(const std::vector<RationalPoly>& polys, double n, double x) {
    const double u = 1.0 / std::sqrt(n);
    double acc = 0.0, uk = 1.0;
    for (const auto& p : polys) {
        uk *= u;
        acc += p(x) * uk;
    }
    return acc;
}

}  // namespace

RationalPoly q_polynomial(unsigned k, const CumulantVector& c) { return correction_polynomial(k, c, 0); }

RationalPoly r_polynomial(unsigned k, const CumulantVector& c) { return correction_polynomial(k, c, 1); }

EdgeworthModel::EdgeworthModel(unsigned m, const CumulantVector& c) : m_(m), cumulants_(c) {
    if (m < 2) throw std::invalid_argument("EdgeworthModel: order must be at least 2");
    if (c.order() < m) throw std::invalid_argument("EdgeworthModel: cumulant vector shorter than the model order");
    std::vector<Rational> g(c.values().begin(), c.values().begin() + m);
    cumulants_ = CumulantVector(std::move(g));
    for (unsigned k = 1; k + 2 <= m; ++k) {
        q_.push_back(q_polynomial(k, cumulants_));
        r_.push_back(r_polynomial(k, cumulants_));
    }
}

double standard_normal_density(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }

double standard_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double edgeworth_density(const EdgeworthModel& model, double n, double x) {
    if (!(n >= 1.0)) throw std::invalid_argument("edgeworth_density: n must be >= 1");
    return standard_normal_density(x) * (1.0 + eval_series(model.q_polys(), n, x));
}

double edgeworth_cdf(const EdgeworthModel& model, double n, double x) {
    if (!(n >= 1.0)) throw std::invalid_argument("edgeworth_cdf: n must be >= 1");
    if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
    return standard_normal_cdf(x) - standard_normal_density(x) * eval_series(model.r_polys(), n, x);
}

std::optional<LeadingTerm> leading_term(const EdgeworthModel& model) {
    for (unsigned k = 1; k + 2 <= model.order(); ++k) {
        const Rational g = model.cumulants().gamma(k + 2);
        if (sgn(g) != 0) return LeadingTerm{k, g};
    }
    return std::nullopt;
}

double truncation_level(double s, double n) {
    if (!(s >= 2.0) || !(n >= 1.0)) throw std::invalid_argument("truncation_level: need s >= 2 and n >= 1");
    return std::sqrt((s - 2.0) * std::log(n));
}

}  // namespace renyi
