#pragma once

// Densities of normalized sums Z_n = (X_1 + ... + X_n) / sqrt n obtained by
// Fourier inversion of f(t / sqrt n)^n, and functionals of sampled densities.

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "renyi/distribution.hpp"

namespace renyi {

/// A grid or quadrature that cannot deliver the requested accuracy.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GridParams {
    std::size_t points = std::size_t{1} << 17;  // even
    double extent = 16.0;                       // grid covers [-extent, extent)
    double fold_tolerance = 1e-8;   // bound on the sample error from dropped frequency images
    std::size_t max_folds = 1024;
};

/// Samples of a density on x_k = x0 + k h, k = 0..size-1.
struct DensityGrid {
    double x0 = 0.0;
    double h = 0.0;
    std::vector<double> values;
    unsigned n = 1;
    double mass_defect = 0.0;  // |1 - int p|
    double min_value = 0.0;    // most negative sample before clipping
    std::size_t folds = 0;     // frequency images summed per bin

    std::size_t size() const noexcept { return values.size(); }
    double x(std::size_t k) const noexcept { return x0 + static_cast<double>(k) * h; }
};

/// Values f(t_k / sqrt n)^n along an ascending sweep t_0 < t_1 < ..., powered
/// as |f|^n exp(i n theta) with theta continued from theta(0) = 0. Where
/// |f| = 0 the principal power is used and `flagged` is set.
struct PowerSweep {
    std::vector<std::complex<double>> values;
    bool flagged = false;
};
PowerSweep characteristic_power_sweep(const DistributionSpec& spec, unsigned n, const std::vector<double>& t);

/// f(t / sqrt n)^n at one point, continued along a fine sweep from 0.
std::complex<double> characteristic_power(const DistributionSpec& spec, unsigned n, double t);

/// p_n on the grid by FFT inversion. Throws std::domain_error for n below
/// spec.n_min() and NumericalError when the mass defect reaches 1e-6 or a
/// sample is below -1e-8.
DensityGrid density_of_normalized_sum(const DistributionSpec& spec, unsigned n, const GridParams& params = {});

/// The base density itself (n = 1). Laws with bounded support are sampled
/// on their closed support, others on [-extent, extent).
DensityGrid tabulate_density(const DistributionSpec& spec, const GridParams& params = {});

/// Simpson's rule for int g(p(x)) dx over the grid.
double lr_integral(const DensityGrid& g, double r);
double renyi_entropy(const DensityGrid& g, double r);
double entropy_power(const DensityGrid& g, double r);
/// -int p log p with 0 log 0 = 0.
double shannon_entropy(const DensityGrid& g);
/// int p log(p / phi).
double kl_to_gaussian(const DensityGrid& g);
/// Largest sample refined by a parabola through the argmax and its neighbours.
double sup_norm(const DensityGrid& g);

/// (1 / 2 pi) int |f_n(t)|^2 dt, the frequency-domain side of Parseval's identity.
double parseval_l2(const DensityGrid& g, const DistributionSpec& spec);

struct SmoothingResult {
    double value;   // int_{|t| <= T} |f|^nu at the last T
    double T;
    bool converged;  // increment from T/2 to T below 1e-8
};
SmoothingResult smoothing_diagnostic(const DistributionSpec& spec, unsigned nu, double T_max = 1.0e8);

/// Two-point Richardson extrapolation 2 E(2n) - E(n) for an O(1/n) error.
double richardson(double value_n, double value_2n);

/// CSV with header "x,p_n".
void write_density_csv(std::ostream& os, const DensityGrid& g);

}  // namespace renyi
