#pragma once

// Moment <-> cumulant conversion for standardized laws via the
// partition (composition) formula.

#include <cstddef>
#include <vector>

#include "renyi/exactpoly.hpp"

namespace renyi {

class DistributionSpec;

/// Tuple (r_1, ..., r_k) of non-negative integers with r_1 + 2 r_2 + ... + k r_k = k.
using Composition = std::vector<unsigned>;

/// All solutions of r_1 + 2 r_2 + ... + k r_k = k, each exactly once,
/// in lexicographic order of (r_1, ..., r_k). Throws for k == 0.
std::vector<Composition> enumerate_compositions(unsigned k);

/// Moments alpha_1..alpha_m (alpha_k = E X^k) of a standardized law.
class MomentVector {
public:
    /// Throws std::invalid_argument unless alpha_1 = 0 and alpha_2 = 1.
    explicit MomentVector(std::vector<Rational> alpha);
    static MomentVector from_doubles(const std::vector<double>& alpha);

    std::size_t order() const noexcept { return alpha_.size(); }
    /// 1-based: moment(k) = E X^k.
    const Rational& moment(std::size_t k) const { return alpha_.at(k - 1); }
    const std::vector<Rational>& values() const noexcept { return alpha_; }

private:
    std::vector<Rational> alpha_;
};

/// Cumulants gamma_1..gamma_m of a standardized law; gamma_1 = 0, gamma_2 = 1.
class CumulantVector {
public:
    /// Throws std::invalid_argument unless gamma_1 = 0 and gamma_2 = 1.
    explicit CumulantVector(std::vector<Rational> gamma);
    static CumulantVector from_doubles(const std::vector<double>& gamma);
    /// (0, 1, g_3, g_4, ...) from the higher cumulants only.
    static CumulantVector standardized(const std::vector<Rational>& higher);
    /// The Gaussian law: gamma_k = 0 for 3 <= k <= order.
    static CumulantVector gaussian(std::size_t order);

    std::size_t order() const noexcept { return gamma_.size(); }
    /// 1-based: gamma(k); returns 0 for k beyond the stored order.
    Rational gamma(std::size_t k) const;
    double gamma_d(std::size_t k) const { return gamma(k).get_d(); }
    const std::vector<Rational>& values() const noexcept { return gamma_; }

    friend bool operator==(const CumulantVector&, const CumulantVector&) = default;

private:
    std::vector<Rational> gamma_;
};

/// gamma_k = k! sum (-1)^{j-1} (j-1)! prod (alpha_i / i!)^{r_i} / r_i!, j = sum r_i.
/// Throws std::invalid_argument("insufficient moments") when order < 2.
CumulantVector cumulants_from_moments(const MomentVector& m);

/// Inverse map: alpha_k = k! sum prod (gamma_i / i!)^{r_i} / r_i!.
MomentVector moments_from_cumulants(const CumulantVector& c);

/// Cumulants up to `order` (2 <= order <= 8) of one of the supported base laws.
CumulantVector standard_cumulants(const DistributionSpec& spec, std::size_t order);

}  // namespace renyi
