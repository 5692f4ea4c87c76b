#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "renyi/harness.hpp"

namespace {

constexpr int kConfigError = 2;
constexpr int kNumericalError = 3;

template <class Rows>
void emit(const Rows& rows, const std::string& out) {
    if (out.empty()) {
        renyi::write_csv(std::cout, rows);
        return;
    }
    std::ofstream os(out, std::ios::binary);
    if (!os) throw renyi::ConfigError("cannot open output file '" + out + "'");
    renyi::write_csv(os, rows);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Renyi entropy asymptotics for normalized sums: series coefficients and numerical verification"};
    app.footer(renyi::config_help());
    app.require_subcommand(1);

    std::string config_path, out_path, dump_dir;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON experiment config")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", out_path, "CSV output path (default: config 'output' or stdout)");
    };
    auto* coeffs = app.add_subcommand("coeffs", "per-r table of expansion coefficients and monotonicity verdicts");
    auto* verify = app.add_subcommand("verify", "numeric Renyi entropies of Z_n against the series predictions");
    auto* mono = app.add_subcommand("monotonicity", "finite differences of N_r(Z_n) and the predicted verdict");
    auto* local = app.add_subcommand("locallimit", "weighted sup error of p_n against the Edgeworth density");
    for (auto* sub : {coeffs, verify, mono, local}) add_common(sub);
    for (auto* sub : {verify, mono, local})
        sub->add_option("--dump-density", dump_dir, "write density_n<n>.csv grids into this directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kConfigError;
    }

    try {
        const renyi::ExperimentConfig cfg = renyi::load_config(config_path);
        const std::string out = out_path.empty() ? cfg.output : out_path;
        if (coeffs->parsed()) {
            if (cfg.r_values.empty()) throw renyi::ConfigError("config: 'r_values' is required");
            emit(renyi::run_coeffs(cfg), out);
        } else {
            if (cfg.n_values.empty()) throw renyi::ConfigError("config: 'n_values' is required");
            if (cfg.n_values.front() < cfg.spec.n_min())
                throw renyi::ConfigError("config: smallest n is below n_min = " + std::to_string(cfg.spec.n_min()));
            if (verify->parsed()) {
                if (cfg.r_values.empty()) throw renyi::ConfigError("config: 'r_values' is required");
                emit(renyi::run_verify(cfg, dump_dir), out);
            } else if (mono->parsed()) {
                if (cfg.r_values.empty()) throw renyi::ConfigError("config: 'r_values' is required");
                emit(renyi::run_monotonicity(cfg, dump_dir), out);
            } else {
                emit(renyi::run_locallimit(cfg, dump_dir), out);
            }
        }
    } catch (const renyi::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kNumericalError;
    }
    return 0;
}
