#include "renyi/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>
#include <numbers>
#include <ostream>
#include <string>

#include <fftw3.h>

namespace renyi {

namespace {

constexpr double kNegativeClip = 1e-8;
constexpr double kMassTolerance = 1e-6;

std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

// Accumulates w^n along an ascending sweep as |w|^n exp(i n theta).
class PowerContinuation {
public:
    explicit PowerContinuation(unsigned n) : n_(n) {}

    std::complex<double> push(std::complex<double> w) {
        const double mag = std::abs(w);
        if (mag == 0.0) {
            flagged_ = true;
            return std::pow(w, static_cast<int>(n_));
        }
        if (have_prev_) {
            const double delta = std::arg(w * std::conj(prev_));
            phase_ = std::remainder(phase_ + static_cast<double>(n_) * delta, 2.0 * std::numbers::pi);
        } else {
            phase_ = std::remainder(static_cast<double>(n_) * std::arg(w), 2.0 * std::numbers::pi);
        }
        prev_ = w;
        have_prev_ = true;
        return std::polar(std::exp(static_cast<double>(n_) * std::log(mag)), phase_);
    }

    bool flagged() const noexcept { return flagged_; }

private:
    unsigned n_;
    std::complex<double> prev_{1.0, 0.0};
    bool have_prev_ = false;
    double phase_ = 0.0;
    bool flagged_ = false;
};

void validate_params(const GridParams& p) {
    if (p.points < 16 || p.points % 2 != 0) throw std::invalid_argument("GridParams: points must be even and >= 16");
    if (!(p.extent >= 6.0)) throw std::invalid_argument("GridParams: extent must cover at least 12 standard deviations");
    if (!(p.fold_tolerance > 0.0)) throw std::invalid_argument("GridParams: fold_tolerance must be positive");
}

// Composite Simpson on nodes 0..N-2 (even number of intervals when N is even),
// trapezoid on a leftover last interval.
template <class F>
double simpson(const DensityGrid& g, F&& fn) {
    const std::size_t N = g.values.size();
    if (N < 2) return 0.0;
    const std::size_t last = (N - 1) % 2 == 0 ? N - 1 : N - 2;
    double acc = fn(g.values[0]) + fn(g.values[last]);
    for (std::size_t k = 1; k < last; ++k) acc += (k % 2 == 1 ? 4.0 : 2.0) * fn(g.values[k]);
    acc *= g.h / 3.0;
    if (last != N - 1) acc += 0.5 * g.h * (fn(g.values[N - 2]) + fn(g.values[N - 1]));
    return acc;
}

template <class F>
double simpson_x(const DensityGrid& g, F&& fn) {
    const std::size_t N = g.values.size();
    if (N < 2) return 0.0;
    const std::size_t last = (N - 1) % 2 == 0 ? N - 1 : N - 2;
    double acc = fn(g.x(0), g.values[0]) + fn(g.x(last), g.values[last]);
    for (std::size_t k = 1; k < last; ++k) acc += (k % 2 == 1 ? 4.0 : 2.0) * fn(g.x(k), g.values[k]);
    acc *= g.h / 3.0;
    if (last != N - 1) acc += 0.5 * g.h * (fn(g.x(N - 2), g.values[N - 2]) + fn(g.x(N - 1), g.values[N - 1]));
    return acc;
}

void finalize_grid(DensityGrid& g, bool strict) {
    double lowest = std::numeric_limits<double>::infinity();
    for (double& v : g.values) {
        lowest = std::min(lowest, v);
        if (v < 0.0) {
            if (strict && v < -kNegativeClip)
                throw NumericalError("grid under-resolved: density sample " + std::to_string(v) + " at n = " +
                                     std::to_string(g.n));
            v = 0.0;
        }
    }
    g.min_value = lowest;
    g.mass_defect = std::abs(1.0 - simpson(g, [](double p) { return p; }));
    if (strict && g.mass_defect >= kMassTolerance)
        throw NumericalError("grid under-resolved: mass defect " + std::to_string(g.mass_defect) + " at n = " +
                             std::to_string(g.n));
}

// Number of frequency images per side so that the dropped tail of |f_n|
// contributes at most `tol` to any density sample.
std::size_t fold_count(const DistributionSpec& spec, unsigned n, double omega, const GridParams& p) {
    const TailDecay td = spec.tail_decay();
    if (std::isinf(td.exponent)) return 0;
    const double nn = static_cast<double>(n);
    const double D = td.exponent * nn;
    const double log_K = nn * std::log(td.constant) + 0.5 * D * std::log(nn);
    const double log_T = (log_K - std::log(std::numbers::pi * (D - 1.0) * p.fold_tolerance)) / (D - 1.0);
    const double m = std::ceil(std::exp(log_T) / omega - 0.5);
    if (!(m > 0.0)) return 0;
    return static_cast<std::size_t>(std::min(m, static_cast<double>(p.max_folds)));
}

// 8-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 4> kGl8Nodes = {0.18343464249564978, 0.525532409916329, 0.7966664774136267,
                                              0.9602898564975362};
constexpr std::array<double, 4> kGl8Weights = {0.36268378337836177, 0.31370664587788705, 0.22238103445337434,
                                                0.10122853629037669};

template <class F>
double gauss_legendre_panels(F&& fn, double a, double b, double width) {
    const auto panels = static_cast<std::size_t>(std::max(1.0, std::ceil((b - a) / width)));
    const double w = (b - a) / static_cast<double>(panels);
    double acc = 0.0;
    for (std::size_t i = 0; i < panels; ++i) {
        const double mid = a + (static_cast<double>(i) + 0.5) * w;
        double s = 0.0;
        for (std::size_t q = 0; q < kGl8Nodes.size(); ++q) {
            const double d = 0.5 * w * kGl8Nodes[q];
            s += kGl8Weights[q] * (fn(mid - d) + fn(mid + d));
        }
        acc += 0.5 * w * s;
    }
    return acc;
}

}  // namespace

PowerSweep characteristic_power_sweep(const DistributionSpec& spec, unsigned n, const std::vector<double>& t) {
    if (n == 0) throw std::invalid_argument("characteristic_power: n must be positive");
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    PowerContinuation cont(n);
    PowerSweep out;
    out.values.reserve(t.size());
    double prev = 0.0;
    for (double ti : t) {
        if (ti < prev) throw std::invalid_argument("characteristic_power_sweep: abscissae must ascend from 0");
        prev = ti;
        out.values.push_back(cont.push(spec.characteristic_function(ti * scale)));
    }
    out.flagged = cont.flagged();
    return out;
}

std::complex<double> characteristic_power(const DistributionSpec& spec, unsigned n, double t) {
    const double a = std::abs(t);
    constexpr int steps = 64;
    std::vector<double> ts(steps + 1);
    for (int i = 0; i <= steps; ++i) ts[i] = a * static_cast<double>(i) / steps;
    const std::complex<double> v = characteristic_power_sweep(spec, n, ts).values.back();
    return t < 0.0 ? std::conj(v) : v;
}

DensityGrid density_of_normalized_sum(const DistributionSpec& spec, unsigned n, const GridParams& params) {
    validate_params(params);
    if (n < spec.n_min())
        throw std::domain_error("density unbounded or non-integrable characteristic power: n = " + std::to_string(n) +
                                " is below n_min = " + std::to_string(spec.n_min()));
    const std::size_t N = params.points;
    const double L = params.extent;
    const double h = 2.0 * L / static_cast<double>(N);
    const double dt = std::numbers::pi / L;
    const double omega = 2.0 * std::numbers::pi / h;
    const std::size_t M = fold_count(spec, n, omega, params);

    // G_j = sum_m f_n(t_j + m Omega) for j = 0..N/2; positive frequencies
    // i dt feed bin i mod N, and their mirrors -i dt feed bin (-i) mod N.
    const std::size_t half = N / 2;
    std::vector<std::complex<double>> G(half + 1, 0.0);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    PowerContinuation cont(n);
    const std::size_t last = M * N + half;
    for (std::size_t i = 0; i <= last; ++i) {
        const std::complex<double> v = cont.push(spec.characteristic_function(static_cast<double>(i) * dt * scale));
        const std::size_t j = i % N;
        if (j <= half) G[j] += v;
        if (i > 0 && (j >= half || j == 0)) G[j == 0 ? 0 : N - j] += std::conj(v);
    }

    double* out = fftw_alloc_real(N);
    fftw_complex* in = fftw_alloc_complex(half + 1);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        plan = fftw_plan_dft_c2r_1d(static_cast<int>(N), in, out, FFTW_ESTIMATE);
    }
    for (std::size_t j = 0; j <= half; ++j) {
        const std::complex<double> v = (j % 2 == 0 ? 1.0 : -1.0) * std::conj(G[j]);
        in[j][0] = v.real();
        in[j][1] = v.imag();
    }
    fftw_execute(plan);

    DensityGrid g;
    g.x0 = -L;
    g.h = h;
    g.n = n;
    g.folds = M;
    g.values.assign(out, out + N);
    for (double& v : g.values) v /= 2.0 * L;
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        fftw_destroy_plan(plan);
    }
    fftw_free(in);
    fftw_free(out);

    finalize_grid(g, true);
    return g;
}

DensityGrid tabulate_density(const DistributionSpec& spec, const GridParams& params) {
    validate_params(params);
    const std::size_t N = params.points;
    const double L = params.extent;
    const double a = spec.support_lower(), b = spec.support_upper();
    DensityGrid g;
    g.n = 1;
    g.values.resize(N);
    if (std::isfinite(a) && std::isfinite(b)) {
        // closed support only: every node is interior or carries a one-sided limit,
        // so nonlinear functionals never see a jump inside a panel
        g.x0 = a;
        g.h = (b - a) / static_cast<double>(N - 1);
        const double eps = 1e-9 * g.h;
        for (std::size_t k = 0; k < N; ++k) g.values[k] = spec.density(g.x(k));
        g.values.front() = spec.density(a + eps);
        g.values.back() = spec.density(b - eps);
    } else {
        g.x0 = -L;
        g.h = 2.0 * L / static_cast<double>(N);
        for (std::size_t k = 0; k < N; ++k) g.values[k] = spec.density(g.x(k));
    }
    finalize_grid(g, false);
    return g;
}

double lr_integral(const DensityGrid& g, double r) {
    if (!(r >= 1.0)) throw std::invalid_argument("lr_integral: r must be >= 1");
    if (r == 1.0) return simpson(g, [](double p) { return p; });
    if (r == 2.0) return simpson(g, [](double p) { return p * p; });
    return simpson(g, [r](double p) { return p > 0.0 ? std::pow(p, r) : 0.0; });
}

double renyi_entropy(const DensityGrid& g, double r) {
    if (r == 1.0) return shannon_entropy(g);
    if (!(r > 1.0)) throw std::invalid_argument("renyi_entropy: r must be > 1");
    const double I = lr_integral(g, r);
    if (!(I > 0.0)) throw NumericalError("renyi_entropy: non-positive integral of p^r");
    return -std::log(I) / (r - 1.0);
}

double entropy_power(const DensityGrid& g, double r) { return std::exp(2.0 * renyi_entropy(g, r)); }

double shannon_entropy(const DensityGrid& g) {
    return -simpson(g, [](double p) { return p > 0.0 ? p * std::log(p) : 0.0; });
}

double kl_to_gaussian(const DensityGrid& g) {
    const double half_log_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
    return simpson_x(g, [half_log_2pi](double x, double p) {
        return p > 0.0 ? p * (std::log(p) + 0.5 * x * x + half_log_2pi) : 0.0;
    });
}

double sup_norm(const DensityGrid& g) {
    if (g.values.empty()) return 0.0;
    const auto it = std::max_element(g.values.begin(), g.values.end());
    const auto k = static_cast<std::size_t>(it - g.values.begin());
    const double y1 = *it;
    if (k == 0 || k + 1 == g.values.size()) return y1;
    const double y0 = g.values[k - 1], y2 = g.values[k + 1];
    // plateaus (flat tops, support edges) are left alone
    if (!(y1 > y0 && y1 > y2)) return y1;
    const double curv = y0 - 2.0 * y1 + y2;
    return y1 - (y2 - y0) * (y2 - y0) / (8.0 * curv);
}

namespace {

// int_0^inf g(t) dt for a non-negative even integrand g decaying at infinity,
// by doubling T until the increment over [T, 2T] falls below `tol`.
template <class F>
SmoothingResult half_line_integral(F&& fn, double T_max, double tol) {
    double T = 16.0;
    double value = gauss_legendre_panels(fn, 0.0, T, 1.0);
    while (2.0 * T <= T_max) {
        const double inc = gauss_legendre_panels(fn, T, 2.0 * T, 4.0);
        value += inc;
        T *= 2.0;
        if (inc < tol) return {value, T, true};
    }
    return {value, T, false};
}

}  // namespace

double parseval_l2(const DensityGrid& g, const DistributionSpec& spec) {
    // (1/2 pi) int |f(t/sqrt n)|^{2n} dt = (sqrt n / pi) int_0^inf |f(s)|^{2n} ds
    const double nn = static_cast<double>(g.n);
    const auto res = half_line_integral(
        [&](double s) { return std::pow(std::abs(spec.characteristic_function(s)), 2.0 * nn); }, 1.0e8, 1e-13);
    if (!res.converged) throw NumericalError("parseval_l2: frequency integral did not converge");
    return std::sqrt(nn) / std::numbers::pi * res.value;
}

SmoothingResult smoothing_diagnostic(const DistributionSpec& spec, unsigned nu, double T_max) {
    if (nu == 0) throw std::invalid_argument("smoothing_diagnostic: nu must be positive");
    const double p = static_cast<double>(nu);
    auto res = half_line_integral([&](double t) { return std::pow(std::abs(spec.characteristic_function(t)), p); },
                                  T_max, 0.5e-8);
    // symmetric in t: report the two-sided integral
    res.value *= 2.0;
    return res;
}

double richardson(double value_n, double value_2n) { return 2.0 * value_2n - value_n; }

void write_density_csv(std::ostream& os, const DensityGrid& g) {
    os << "x,p_n\n";
    char buf[64];
    for (std::size_t k = 0; k < g.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", g.x(k), g.values[k]);
        os << buf;
    }
}

}  // namespace renyi
