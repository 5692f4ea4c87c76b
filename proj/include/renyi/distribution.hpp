#pragma once

// Standardized base laws (mean 0, variance 1) with closed-form densities,
// characteristic functions and exact or high-precision moments.

#include <complex>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "renyi/cumulants.hpp"

namespace renyi {

struct Uniform {};  // on (-sqrt 3, sqrt 3)

struct StandardizedGamma {
    double alpha;  // X = (xi - alpha) / sqrt(alpha), xi ~ Gamma(alpha, 1)
};

struct TwoSidedExponential {};  // Laplace with scale 1/sqrt 2

struct GaussianMixture {
    std::vector<double> weights;
    std::vector<double> means;
    std::vector<double> sigmas;
};

/// Piecewise-linear density through (x0 + i*step, values[i]), zero outside.
struct GridDensity {
    double x0 = 0.0;
    double step = 1.0;
    std::vector<double> values;

    /// Affinely rescales the abscissa and renormalizes so that the
    /// interpolant has unit mass, mean 0 and variance 1.
    static GridDensity standardize(double x0, double step, std::vector<double> values);
};

/// Upper bound |f(t)| <= constant * |t|^-exponent for |t| >= 1. An infinite
/// exponent marks super-polynomial decay.
struct TailDecay {
    double constant;
    double exponent;
};

class DistributionSpec {
public:
    using Kind = std::variant<Uniform, StandardizedGamma, TwoSidedExponential, GaussianMixture,
                              GridDensity>;

    /// Throws std::invalid_argument for bad parameters or a law whose mean
    /// and variance are not 0 and 1 within 1e-10.
    explicit DistributionSpec(Kind kind);

    static DistributionSpec uniform() { return DistributionSpec(Uniform{}); }
    static DistributionSpec gamma(double alpha) { return DistributionSpec(StandardizedGamma{alpha}); }
    static DistributionSpec laplace() { return DistributionSpec(TwoSidedExponential{}); }
    static DistributionSpec gaussian() { return DistributionSpec(GaussianMixture{{1.0}, {0.0}, {1.0}}); }

    const Kind& kind() const noexcept { return kind_; }
    std::string name() const;

    double density(double x) const;
    std::complex<double> characteristic_function(double t) const;
    /// alpha_1..alpha_order, exact where the law allows it.
    MomentVector moments(std::size_t order) const;
    TailDecay tail_decay() const;
    /// Smallest n for which |f|^n is integrable, i.e. Z_n has a bounded density.
    unsigned n_min() const;
    /// Support endpoints (may be infinite).
    double support_lower() const;
    double support_upper() const;

private:
    Kind kind_;
};

}  // namespace renyi
