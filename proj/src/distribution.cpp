#include "renyi/distribution.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace renyi {

namespace {

constexpr double kStandardizationTol = 1e-10;
const double kSqrt3 = std::sqrt(3.0);

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// 5-point Gauss-Legendre on [0, 1]; exact for polynomials of degree <= 9.
constexpr std::array<double, 5> kGlNodes = {0.04691007703066800, 0.23076534494715845, 0.5,
                                            0.76923465505284155, 0.95308992296933200};
constexpr std::array<double, 5> kGlWeights = {0.11846344252809454, 0.23931433524968324,
                                              0.28444444444444444, 0.23931433524968324,
                                              0.11846344252809454};

// int x^k L(x) dx over the piecewise-linear interpolant.
double grid_raw_moment(const GridDensity& g, unsigned k) {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < g.values.size(); ++i) {
        const double a = g.x0 + static_cast<double>(i) * g.step;
        double seg = 0.0;
        for (std::size_t q = 0; q < kGlNodes.size(); ++q) {
            const double u = kGlNodes[q];
            const double x = a + u * g.step;
            const double v = g.values[i] + u * (g.values[i + 1] - g.values[i]);
            seg += kGlWeights[q] * std::pow(x, static_cast<int>(k)) * v;
        }
        acc += seg * g.step;
    }
    return acc;
}

// int_0^1 e^{iwu} du and int_0^1 u e^{iwu} du, stable for small w.
std::pair<std::complex<double>, std::complex<double>> segment_kernels(double w) {
    using C = std::complex<double>;
    if (std::abs(w) < 0.5) {
        C e0 = 0.0, e1 = 0.0, term = 1.0;  // term = (iw)^k / k!
        for (int k = 0; k < 14; ++k) {
            e0 += term / static_cast<double>(k + 1);
            e1 += term / static_cast<double>(k + 2);
            term *= C(0.0, w) / static_cast<double>(k + 1);
        }
        return {e0, e1};
    }
    const C iw(0.0, w);
    const C e = std::exp(iw);
    const C e0 = (e - 1.0) / iw;
    const C e1 = e / iw + (e - 1.0) / (w * w);
    return {e0, e1};
}

double double_factorial_odd_d(unsigned k) {
    double f = 1.0;
    for (unsigned i = 3; i + 1 <= 2 * k; i += 2) f *= i;
    return f;
}

double binomial_d(unsigned n, unsigned k) {
    double b = 1.0;
    for (unsigned i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

void validate(const GaussianMixture& m) {
    if (m.weights.empty() || m.weights.size() != m.means.size() || m.weights.size() != m.sigmas.size())
        throw std::invalid_argument("GaussianMixture: weights, means and sigmas must have equal non-zero length");
    double wsum = 0.0, mean = 0.0, second = 0.0;
    for (std::size_t i = 0; i < m.weights.size(); ++i) {
        if (!(m.weights[i] > 0.0)) throw std::invalid_argument("GaussianMixture: weights must be positive");
        if (!(m.sigmas[i] > 0.0)) throw std::invalid_argument("GaussianMixture: sigmas must be positive");
        wsum += m.weights[i];
        mean += m.weights[i] * m.means[i];
        second += m.weights[i] * (m.sigmas[i] * m.sigmas[i] + m.means[i] * m.means[i]);
    }
    if (std::abs(wsum - 1.0) > 1e-12) throw std::invalid_argument("GaussianMixture: weights must sum to 1");
    if (std::abs(mean) > kStandardizationTol || std::abs(second - mean * mean - 1.0) > kStandardizationTol)
        throw std::invalid_argument("GaussianMixture: law is not standardized (mean 0, variance 1)");
}

void validate(const GridDensity& g) {
    if (g.values.size() < 3 || !(g.step > 0.0))
        throw std::invalid_argument("GridDensity: need at least 3 samples and a positive step");
    for (double v : g.values)
        if (!(v >= 0.0) || !std::isfinite(v)) throw std::invalid_argument("GridDensity: samples must be finite and non-negative");
    const double mass = grid_raw_moment(g, 0);
    const double mean = grid_raw_moment(g, 1);
    const double second = grid_raw_moment(g, 2);
    if (std::abs(mass - 1.0) > kStandardizationTol || std::abs(mean) > kStandardizationTol ||
        std::abs(second - 1.0) > kStandardizationTol)
        throw std::invalid_argument("GridDensity: law is not standardized; use GridDensity::standardize");
}

}  // namespace

GridDensity GridDensity::standardize(double x0, double step, std::vector<double> values) {
    GridDensity raw{x0, step, std::move(values)};
    if (raw.values.size() < 3 || !(step > 0.0))
        throw std::invalid_argument("GridDensity: need at least 3 samples and a positive step");
    const double mass = grid_raw_moment(raw, 0);
    if (!(mass > 0.0)) throw std::invalid_argument("GridDensity: zero mass");
    const double mean = grid_raw_moment(raw, 1) / mass;
    const double var = grid_raw_moment(raw, 2) / mass - mean * mean;
    if (!(var > 0.0)) throw std::invalid_argument("GridDensity: degenerate variance");
    const double sigma = std::sqrt(var);
    GridDensity out{(x0 - mean) / sigma, step / sigma, std::move(raw.values)};
    for (double& v : out.values) v *= sigma / mass;
    return out;
}

DistributionSpec::DistributionSpec(Kind kind) : kind_(std::move(kind)) {
    std::visit(overloaded{
                   [](const Uniform&) {},
                   [](const StandardizedGamma& g) {
                       if (!(g.alpha > 0.0) || !std::isfinite(g.alpha))
                           throw std::invalid_argument("StandardizedGamma: alpha must be positive");
                   },
                   [](const TwoSidedExponential&) {},
                   [](const GaussianMixture& m) { validate(m); },
                   [](const GridDensity& g) { validate(g); },
               },
               kind_);
}

std::string DistributionSpec::name() const {
    return std::visit(overloaded{
                          [](const Uniform&) -> std::string { return "uniform"; },
                          [](const StandardizedGamma&) -> std::string { return "gamma"; },
                          [](const TwoSidedExponential&) -> std::string { return "laplace"; },
                          [](const GaussianMixture& m) -> std::string {
                              return m.weights.size() == 1 ? "gaussian" : "mixture";
                          },
                          [](const GridDensity&) -> std::string { return "grid"; },
                      },
                      kind_);
}

double DistributionSpec::density(double x) const {
    return std::visit(
        overloaded{
            [x](const Uniform&) { return std::abs(x) < kSqrt3 ? 1.0 / (2.0 * kSqrt3) : 0.0; },
            [x](const StandardizedGamma& g) {
                const double sa = std::sqrt(g.alpha);
                const double xi = g.alpha + sa * x;
                if (xi <= 0.0) return 0.0;
                return std::exp(0.5 * std::log(g.alpha) + (g.alpha - 1.0) * std::log(xi) - xi -
                                std::lgamma(g.alpha));
            },
            [x](const TwoSidedExponential&) {
                return std::exp(-std::numbers::sqrt2 * std::abs(x)) / std::numbers::sqrt2;
            },
            [x](const GaussianMixture& m) {
                double p = 0.0;
                for (std::size_t i = 0; i < m.weights.size(); ++i) {
                    const double z = (x - m.means[i]) / m.sigmas[i];
                    p += m.weights[i] * std::exp(-0.5 * z * z) / (m.sigmas[i] * std::sqrt(2.0 * std::numbers::pi));
                }
                return p;
            },
            [x](const GridDensity& g) {
                const double u = (x - g.x0) / g.step;
                if (u < 0.0 || u > static_cast<double>(g.values.size() - 1)) return 0.0;
                const auto i = std::min(static_cast<std::size_t>(u), g.values.size() - 2);
                const double frac = u - static_cast<double>(i);
                return g.values[i] + frac * (g.values[i + 1] - g.values[i]);
            },
        },
        kind_);
}

std::complex<double> DistributionSpec::characteristic_function(double t) const {
    using C = std::complex<double>;
    return std::visit(
        overloaded{
            [t](const Uniform&) -> C {
                const double w = kSqrt3 * t;
                if (std::abs(w) < 1e-4) return 1.0 - w * w / 6.0 + w * w * w * w / 120.0;
                return std::sin(w) / w;
            },
            [t](const StandardizedGamma& g) -> C {
                const double sa = std::sqrt(g.alpha);
                const C log_f = C(0.0, -t * sa) - g.alpha * std::log(C(1.0, -t / sa));
                return std::exp(log_f);
            },
            [t](const TwoSidedExponential&) -> C { return 1.0 / (1.0 + 0.5 * t * t); },
            [t](const GaussianMixture& m) -> C {
                C f = 0.0;
                for (std::size_t i = 0; i < m.weights.size(); ++i)
                    f += m.weights[i] * std::exp(C(-0.5 * m.sigmas[i] * m.sigmas[i] * t * t, m.means[i] * t));
                return f;
            },
            [t](const GridDensity& g) -> C {
                C f = 0.0;
                const double w = t * g.step;
                const auto [e0, e1] = segment_kernels(w);
                for (std::size_t i = 0; i + 1 < g.values.size(); ++i) {
                    const double a = g.x0 + static_cast<double>(i) * g.step;
                    const double slope_h = g.values[i + 1] - g.values[i];
                    f += std::exp(C(0.0, t * a)) * (g.values[i] * e0 + slope_h * e1);
                }
                return f * g.step;
            },
        },
        kind_);
}

MomentVector DistributionSpec::moments(std::size_t order) const {
    std::vector<Rational> alpha(order);
    std::visit(
        overloaded{
            [&](const Uniform&) {
                // E X^k = 3^{k/2} / (k + 1) for even k
                for (std::size_t k = 2; k <= order; k += 2)
                    alpha[k - 1] = rational_pow(Rational(3), static_cast<unsigned>(k / 2)) /
                                   Rational(static_cast<long>(k + 1));
            },
            [&](const StandardizedGamma& g) {
                // standardized cumulants (k-1)! alpha^{1 - k/2}
                std::vector<Rational> gam(std::max<std::size_t>(order, 2));
                gam[1] = 1;
                for (std::size_t k = 3; k <= order; ++k)
                    gam[k - 1] = factorial(static_cast<unsigned>(k - 1)) *
                                 to_rational(std::pow(g.alpha, 1.0 - 0.5 * static_cast<double>(k)));
                const MomentVector mv = moments_from_cumulants(CumulantVector(std::move(gam)));
                for (std::size_t k = 1; k <= order; ++k) alpha[k - 1] = mv.moment(k);
            },
            [&](const TwoSidedExponential&) {
                // E X^{2j} = (2j)! / 2^j
                for (std::size_t k = 2; k <= order; k += 2)
                    alpha[k - 1] = factorial(static_cast<unsigned>(k)) /
                                   rational_pow(Rational(2), static_cast<unsigned>(k / 2));
            },
            [&](const GaussianMixture& m) {
                for (std::size_t k = 3; k <= order; ++k) {
                    double acc = 0.0;
                    for (std::size_t c = 0; c < m.weights.size(); ++c) {
                        double comp = 0.0;
                        for (unsigned i = 0; i <= k; i += 2)
                            comp += binomial_d(static_cast<unsigned>(k), i) *
                                    std::pow(m.means[c], static_cast<double>(k - i)) *
                                    std::pow(m.sigmas[c], static_cast<double>(i)) * double_factorial_odd_d(i / 2);
                        acc += m.weights[c] * comp;
                    }
                    alpha[k - 1] = to_rational(acc);
                }
            },
            [&](const GridDensity& g) {
                for (std::size_t k = 3; k <= order; ++k)
                    alpha[k - 1] = to_rational(grid_raw_moment(g, static_cast<unsigned>(k)));
            },
        },
        kind_);
    // standardization holds exactly by construction (validated to 1e-10)
    if (order >= 1) alpha[0] = 0;
    if (order >= 2) alpha[1] = 1;
    return MomentVector(std::move(alpha));
}

TailDecay DistributionSpec::tail_decay() const {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return std::visit(overloaded{
                          [](const Uniform&) { return TailDecay{1.0 / kSqrt3, 1.0}; },
                          [](const StandardizedGamma& g) {
                              return TailDecay{std::pow(g.alpha, 0.5 * g.alpha), g.alpha};
                          },
                          [](const TwoSidedExponential&) { return TailDecay{2.0, 2.0}; },
                          [](const GaussianMixture&) { return TailDecay{1.0, inf}; },
                          [](const GridDensity& g) {
                              double jumps = 0.0;
                              for (std::size_t i = 0; i < g.values.size(); ++i) {
                                  const double left = i == 0 ? 0.0 : (g.values[i] - g.values[i - 1]) / g.step;
                                  const double right =
                                      i + 1 == g.values.size() ? 0.0 : (g.values[i + 1] - g.values[i]) / g.step;
                                  jumps += std::abs(right - left);
                              }
                              const double edge = g.values.front() + g.values.back();
                              if (edge > 0.0) return TailDecay{2.0 * edge + jumps, 1.0};
                              return TailDecay{jumps, 2.0};
                          },
                      },
                      kind_);
}

unsigned DistributionSpec::n_min() const {
    const double e = tail_decay().exponent;
    if (std::isinf(e)) return 1;
    unsigned n = 1;
    while (static_cast<double>(n) * e <= 1.0) ++n;
    return n;
}

double DistributionSpec::support_lower() const {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return std::visit(overloaded{
                          [](const Uniform&) { return -kSqrt3; },
                          [](const StandardizedGamma& g) { return -std::sqrt(g.alpha); },
                          [](const TwoSidedExponential&) { return -inf; },
                          [](const GaussianMixture&) { return -inf; },
                          [](const GridDensity& g) { return g.x0; },
                      },
                      kind_);
}

double DistributionSpec::support_upper() const {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return std::visit(overloaded{
                          [](const Uniform&) { return kSqrt3; },
                          [](const StandardizedGamma&) { return inf; },
                          [](const TwoSidedExponential&) { return inf; },
                          [](const GaussianMixture&) { return inf; },
                          [](const GridDensity& g) {
                              return g.x0 + static_cast<double>(g.values.size() - 1) * g.step;
                          },
                      },
                      kind_);
}

}  // namespace renyi
