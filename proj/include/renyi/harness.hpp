#pragma once

// Experiment runner: ties the series predictions to densities computed by
// Fourier inversion and renders the results as CSV tables.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "renyi/distribution.hpp"
#include "renyi/expansion.hpp"
#include "renyi/numerics.hpp"

namespace renyi {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    DistributionSpec spec = DistributionSpec::gaussian();
    std::vector<RenyiOrder> r_values;
    std::vector<unsigned> n_values;   // strictly ascending
    double moment_order = 6.0;        // s, in [2, 8]
    unsigned edgeworth_order = 4;     // m for locallimit, in [2, 6]
    GridParams grid;
    std::string output;
};

/// Parses a flat JSON document; throws ConfigError on malformed input,
/// unknown keys or violated invariants.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);
/// One line per accepted key, for --help.
std::string config_help();

struct CoeffRow {
    RenyiOrder r;
    double b, B1;
    std::optional<double> a1, a2, b2, c1, c2;
    double A_tilde, B_tilde;
    std::optional<double> r0;
    Verdict verdict;
};

struct ConvergenceRow {
    unsigned n;
    RenyiOrder r;
    double h_r_numeric, h_r_predicted, residual, scaled_residual;
    double N_r_numeric, N_r_predicted;
};

struct MonotonicityRow {
    RenyiOrder r;
    unsigned n;
    double N_r;
    std::optional<double> diff;  // N_r at the next listed n minus this one
    int sign;                    // of diff, 0 inside the noise band
    Verdict predicted;
    std::optional<unsigned> empirical_n0;
    bool match;
};

struct LocalLimitRow {
    unsigned n;
    unsigned m;
    double weighted_sup_error;
    double fitted_slope;
};

/// Cumulants gamma_1..gamma_8 of the configured law.
CumulantVector config_cumulants(const ExperimentConfig& cfg);

std::vector<CoeffRow> run_coeffs(const ExperimentConfig& cfg);
/// Rows in n-then-r order. Writes density_n<n>.csv files into dump_dir when non-empty.
std::vector<ConvergenceRow> run_verify(const ExperimentConfig& cfg, const std::string& dump_dir = {});
std::vector<MonotonicityRow> run_monotonicity(const ExperimentConfig& cfg, const std::string& dump_dir = {});
std::vector<LocalLimitRow> run_locallimit(const ExperimentConfig& cfg, const std::string& dump_dir = {});

/// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

void write_csv(std::ostream& os, const std::vector<CoeffRow>& rows);
void write_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows);
void write_csv(std::ostream& os, const std::vector<MonotonicityRow>& rows);
void write_csv(std::ostream& os, const std::vector<LocalLimitRow>& rows);

}  // namespace renyi
