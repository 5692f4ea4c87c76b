#include "renyi/cumulants.hpp"

#include <algorithm>
#include <stdexcept>

#include "renyi/distribution.hpp"

namespace renyi {

namespace {

void enumerate_rec(unsigned k, unsigned part, unsigned remaining, Composition& cur,
                   std::vector<Composition>& out) {
    if (part > k) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    // r_part ranges over 0..remaining/part; ascending gives lexicographic order
    for (unsigned r = 0; r * part <= remaining; ++r) {
        cur[part - 1] = r;
        enumerate_rec(k, part + 1, remaining - r * part, cur, out);
    }
    cur[part - 1] = 0;
}

std::vector<Rational> rationals_from(const std::vector<double>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (double x : v) out.push_back(to_rational(x));
    return out;
}

}  // namespace

std::vector<Composition> enumerate_compositions(unsigned k) {
    if (k == 0) throw std::invalid_argument("enumerate_compositions: k must be positive");
    std::vector<Composition> out;
    Composition cur(k, 0);
    enumerate_rec(k, 1, k, cur, out);
    return out;
}

MomentVector::MomentVector(std::vector<Rational> alpha) : alpha_(std::move(alpha)) {
    if (alpha_.size() >= 1 && sgn(alpha_[0]) != 0)
        throw std::invalid_argument("MomentVector: alpha_1 must be 0");
    if (alpha_.size() >= 2 && alpha_[1] != 1)
        throw std::invalid_argument("MomentVector: alpha_2 must be 1");
}

MomentVector MomentVector::from_doubles(const std::vector<double>& alpha) {
    return MomentVector(rationals_from(alpha));
}

CumulantVector::CumulantVector(std::vector<Rational> gamma) : gamma_(std::move(gamma)) {
    if (gamma_.size() < 2) throw std::invalid_argument("CumulantVector: order must be at least 2");
    if (sgn(gamma_[0]) != 0) throw std::invalid_argument("CumulantVector: gamma_1 must be 0");
    if (gamma_[1] != 1) throw std::invalid_argument("CumulantVector: gamma_2 must be 1");
}

CumulantVector CumulantVector::from_doubles(const std::vector<double>& gamma) {
    return CumulantVector(rationals_from(gamma));
}

CumulantVector CumulantVector::standardized(const std::vector<Rational>& higher) {
    std::vector<Rational> g{0, 1};
    g.insert(g.end(), higher.begin(), higher.end());
    return CumulantVector(std::move(g));
}

CumulantVector CumulantVector::gaussian(std::size_t order) {
    std::vector<Rational> g(std::max<std::size_t>(order, 2));
    g[1] = 1;
    return CumulantVector(std::move(g));
}

Rational CumulantVector::gamma(std::size_t k) const {
    if (k == 0) throw std::out_of_range("CumulantVector::gamma: index is 1-based");
    return k <= gamma_.size() ? gamma_[k - 1] : Rational(0);
}

CumulantVector cumulants_from_moments(const MomentVector& m) {
    const std::size_t order = m.order();
    if (order < 2) throw std::invalid_argument("insufficient moments");
    std::vector<Rational> gamma(order);
    for (unsigned k = 1; k <= order; ++k) {
        Rational sum = 0;
        for (const auto& comp : enumerate_compositions(k)) {
            unsigned j = 0;
            Rational term = 1;
            for (unsigned i = 1; i <= k; ++i) {
                const unsigned r = comp[i - 1];
                if (r == 0) continue;
                j += r;
                term *= rational_pow(m.moment(i) / factorial(i), r) / factorial(r);
            }
            term *= factorial(j - 1);
            if ((j - 1) % 2 == 1) term = -term;
            sum += term;
        }
        gamma[k - 1] = factorial(k) * sum;
    }
    return CumulantVector(std::move(gamma));
}

MomentVector moments_from_cumulants(const CumulantVector& c) {
    const std::size_t order = c.order();
    std::vector<Rational> alpha(order);
    for (unsigned k = 1; k <= order; ++k) {
        Rational sum = 0;
        for (const auto& comp : enumerate_compositions(k)) {
            Rational term = 1;
            for (unsigned i = 1; i <= k && sgn(term) != 0; ++i) {
                const unsigned r = comp[i - 1];
                if (r == 0) continue;
                term *= rational_pow(c.gamma(i) / factorial(i), r) / factorial(r);
            }
            sum += term;
        }
        alpha[k - 1] = factorial(k) * sum;
    }
    return MomentVector(std::move(alpha));
}

CumulantVector standard_cumulants(const DistributionSpec& spec, std::size_t order) {
    if (order < 2 || order > 8)
        throw std::invalid_argument("standard_cumulants: order must lie in [2, 8]");
    return cumulants_from_moments(spec.moments(order));
}

}  // namespace renyi
