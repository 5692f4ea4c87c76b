#include "renyi/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "renyi/edgeworth.hpp"
#include "renyi/maxdensity.hpp"

namespace renyi {

namespace {

using nlohmann::json;

const std::map<std::string, std::string>& known_keys() {
    static const std::map<std::string, std::string> keys = {
        {"spec", "base law: uniform | gamma | laplace | gaussian | mixture | grid (required)"},
        {"alpha", "shape of the standardized Gamma law (spec = gamma)"},
        {"weights", "mixture weights summing to 1 (spec = mixture)"},
        {"means", "mixture component means (spec = mixture)"},
        {"sigmas", "mixture component standard deviations (spec = mixture)"},
        {"density_x0", "first abscissa of a tabulated density (spec = grid)"},
        {"density_step", "abscissa step of a tabulated density (spec = grid)"},
        {"density_values", "tabulated density values, standardized on load (spec = grid)"},
        {"r_values", "Renyi orders: numbers >= 1 and/or \"inf\""},
        {"n_values", "strictly ascending positive summand counts"},
        {"moment_order", "finite moment order s of the base law, 2 <= s <= 8 (default 6)"},
        {"edgeworth_order", "order m of the Edgeworth correction for locallimit, 2 <= m <= 6 (default 4)"},
        {"grid_points", "inversion grid size, even (default 131072)"},
        {"grid_extent", "inversion grid covers [-extent, extent) (default 16)"},
        {"fold_tolerance", "bound on the density error from truncated frequency folding (default 1e-8)"},
        {"output", "CSV output path (overridden by --out)"},
    };
    return keys;
}

template <class T>
T get_as(const json& doc, const char* key) {
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config key '") + key + "': " + e.what());
    }
}

DistributionSpec parse_spec(const json& doc) {
    if (!doc.contains("spec")) throw ConfigError("config: missing required key 'spec'");
    const auto name = get_as<std::string>(doc, "spec");
    auto forbid_others = [&](std::set<std::string> allowed) {
        static const std::set<std::string> law_keys = {"alpha",  "weights",      "means",       "sigmas",
                                                       "density_x0", "density_step", "density_values"};
        for (const auto& k : law_keys)
            if (doc.contains(k) && !allowed.count(k))
                throw ConfigError("config: key '" + k + "' does not apply to spec '" + name + "'");
    };
    try {
        if (name == "uniform") {
            forbid_others({});
            return DistributionSpec::uniform();
        }
        if (name == "laplace") {
            forbid_others({});
            return DistributionSpec::laplace();
        }
        if (name == "gaussian") {
            forbid_others({});
            return DistributionSpec::gaussian();
        }
        if (name == "gamma") {
            forbid_others({"alpha"});
            if (!doc.contains("alpha")) throw ConfigError("config: spec 'gamma' needs 'alpha'");
            return DistributionSpec::gamma(get_as<double>(doc, "alpha"));
        }
        if (name == "mixture") {
            forbid_others({"weights", "means", "sigmas"});
            return DistributionSpec(GaussianMixture{get_as<std::vector<double>>(doc, "weights"),
                                                    get_as<std::vector<double>>(doc, "means"),
                                                    get_as<std::vector<double>>(doc, "sigmas")});
        }
        if (name == "grid") {
            forbid_others({"density_x0", "density_step", "density_values"});
            return DistributionSpec(GridDensity::standardize(get_as<double>(doc, "density_x0"),
                                                             get_as<double>(doc, "density_step"),
                                                             get_as<std::vector<double>>(doc, "density_values")));
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: invalid law parameters: ") + e.what());
    } catch (const std::domain_error& e) {
        throw ConfigError(std::string("config: invalid law parameters: ") + e.what());
    }
    throw ConfigError("config: unsupported spec '" + name + "'");
}

std::string fmt(double v) {
    if (v == 0.0) v = 0.0;  // no "-0" in tables
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt(const std::optional<double>& v) { return v ? fmt(*v) : std::string(); }

void maybe_dump(const std::string& dir, const DensityGrid& g) {
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    std::ofstream os(std::filesystem::path(dir) / ("density_n" + std::to_string(g.n) + ".csv"));
    if (!os) throw std::runtime_error("cannot write density dump into " + dir);
    write_density_csv(os, g);
}

unsigned integer_moment_order(const ExperimentConfig& cfg) {
    return static_cast<unsigned>(std::floor(cfg.moment_order));
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config: top level must be a JSON object");
    for (const auto& item : doc.items())
        if (!known_keys().count(item.key())) throw ConfigError("config: unknown key '" + item.key() + "'");

    ExperimentConfig cfg;
    cfg.spec = parse_spec(doc);

    if (doc.contains("r_values")) {
        const json& rv = doc.at("r_values");
        if (!rv.is_array()) throw ConfigError("config: 'r_values' must be an array");
        for (const auto& v : rv) {
            if (v.is_string() && (v.get<std::string>() == "inf" || v.get<std::string>() == "infinity")) {
                cfg.r_values.push_back(RenyiOrder::infinity());
            } else if (v.is_number() && v.get<double>() >= 1.0 && std::isfinite(v.get<double>())) {
                cfg.r_values.emplace_back(v.get<double>());
            } else {
                throw ConfigError("config: r_values entries must be numbers >= 1 or \"inf\"");
            }
        }
    }
    if (doc.contains("n_values")) {
        const json& nv = doc.at("n_values");
        if (!nv.is_array()) throw ConfigError("config: 'n_values' must be an array");
        for (const auto& v : nv) {
            if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 1024)
                throw ConfigError("config: n_values entries must be integers in [1, 1024]");
            cfg.n_values.push_back(v.get<unsigned>());
        }
        for (std::size_t i = 1; i < cfg.n_values.size(); ++i)
            if (cfg.n_values[i] <= cfg.n_values[i - 1]) throw ConfigError("config: n_values must be strictly ascending");
    }
    if (doc.contains("moment_order")) {
        cfg.moment_order = get_as<double>(doc, "moment_order");
        if (!(cfg.moment_order >= 2.0 && cfg.moment_order <= 8.0))
            throw ConfigError("config: moment_order must lie in [2, 8]");
    }
    if (doc.contains("edgeworth_order")) {
        const auto m = get_as<long long>(doc, "edgeworth_order");
        if (m < 2 || m > 6) throw ConfigError("config: edgeworth_order must lie in [2, 6]");
        cfg.edgeworth_order = static_cast<unsigned>(m);
    }
    if (doc.contains("grid_points")) {
        const auto p = get_as<long long>(doc, "grid_points");
        if (p < 16 || p % 2 != 0 || p > (1LL << 24)) throw ConfigError("config: grid_points must be even, in [16, 2^24]");
        cfg.grid.points = static_cast<std::size_t>(p);
    }
    if (doc.contains("grid_extent")) {
        cfg.grid.extent = get_as<double>(doc, "grid_extent");
        if (!(cfg.grid.extent >= 6.0)) throw ConfigError("config: grid_extent must be at least 6");
    }
    if (doc.contains("fold_tolerance")) {
        cfg.grid.fold_tolerance = get_as<double>(doc, "fold_tolerance");
        if (!(cfg.grid.fold_tolerance > 0.0)) throw ConfigError("config: fold_tolerance must be positive");
    }
    if (doc.contains("output")) cfg.output = get_as<std::string>(doc, "output");
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << is.rdbuf();
    return parse_config(ss.str());
}

std::string config_help() {
    std::string out = "Config keys (flat JSON object; unknown keys are rejected):\n";
    for (const auto& [k, v] : known_keys()) out += "  " + k + ": " + v + "\n";
    return out;
}

CumulantVector config_cumulants(const ExperimentConfig& cfg) { return standard_cumulants(cfg.spec, 8); }

std::vector<CoeffRow> run_coeffs(const ExperimentConfig& cfg) {
    const CumulantVector c = config_cumulants(cfg);
    const auto [At, Bt] = ninf_expansion(c);
    const std::optional<double> r0 = sign_change_threshold(c);
    std::vector<CoeffRow> rows;
    for (const RenyiOrder& r : cfg.r_values) {
        CoeffRow row{r, b_coefficient(r, c), -b_coefficient(r, c), {}, {}, {}, {}, {}, At.get_d(), Bt.get_d(), r0,
                     Verdict::indeterminate};
        if (r.is_infinite()) {
            row.verdict = monotonicity_prediction_inf(c);
        } else {
            row.verdict = monotonicity_prediction(r, c);
            if (!r.is_shannon()) {
                const ExpansionCoefficients e = entropy_expansion(6, r.value(), c);
                row.a1 = e.a[0];
                row.a2 = e.a[1];
                row.b2 = e.b[1];
                row.c1 = e.c[0];
                row.c2 = e.c[1];
            }
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<ConvergenceRow> run_verify(const ExperimentConfig& cfg, const std::string& dump_dir) {
    const CumulantVector c = config_cumulants(cfg);
    const unsigned m = integer_moment_order(cfg);
    const double s = cfg.moment_order;
    const SupNormExpansion sup = supnorm_coefficients(c);
    std::vector<ConvergenceRow> rows;
    for (unsigned n : cfg.n_values) {
        const DensityGrid g = density_of_normalized_sum(cfg.spec, n, cfg.grid);
        maybe_dump(dump_dir, g);
        const double nd = static_cast<double>(n);
        for (const RenyiOrder& r : cfg.r_values) {
            ConvergenceRow row{n, r, 0, 0, 0, 0, 0, 0};
            const double hz = gaussian_renyi_entropy(r);
            if (r.is_infinite()) {
                row.h_r_numeric = -std::log(sup_norm(g));
                double ratio = 1.0;
                if (m >= 4) ratio -= sup.A_tilde.get_d() / nd;
                if (m >= 6) ratio += sup.B_tilde.get_d() / (nd * nd);
                row.N_r_predicted = gaussian_entropy_power(r) * ratio;
                row.h_r_predicted = 0.5 * std::log(row.N_r_predicted);
            } else if (r.is_shannon()) {
                row.h_r_numeric = shannon_entropy(g);
                const double g3 = c.gamma_d(3);
                row.h_r_predicted = m >= 4 ? hz - g3 * g3 / (12.0 * nd) : hz;
                row.N_r_predicted = std::exp(2.0 * row.h_r_predicted);
            } else {
                row.h_r_numeric = renyi_entropy(g, r.value());
                const ExpansionCoefficients e = entropy_expansion(m, r.value(), c);
                double dh = 0.0, dn = 1.0, nj = 1.0;
                for (std::size_t j = 0; j < e.J(); ++j) {
                    nj /= nd;
                    dh += e.b[j] * nj;
                    dn += e.c[j] * nj;
                }
                row.h_r_predicted = hz + dh;
                row.N_r_predicted = gaussian_entropy_power(r) * dn;
            }
            row.N_r_numeric = std::exp(2.0 * row.h_r_numeric);
            row.residual = row.h_r_numeric - row.h_r_predicted;
            row.scaled_residual = row.residual * std::pow(nd, 0.5 * (s - 2.0));
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<MonotonicityRow> run_monotonicity(const ExperimentConfig& cfg, const std::string& dump_dir) {
    const CumulantVector c = config_cumulants(cfg);
    const std::size_t K = cfg.n_values.size();
    const std::size_t R = cfg.r_values.size();
    // power[ri][ni]
    std::vector<std::vector<double>> power(R, std::vector<double>(K));
    for (std::size_t ni = 0; ni < K; ++ni) {
        const DensityGrid g = density_of_normalized_sum(cfg.spec, cfg.n_values[ni], cfg.grid);
        maybe_dump(dump_dir, g);
        for (std::size_t ri = 0; ri < R; ++ri) {
            const RenyiOrder& r = cfg.r_values[ri];
            power[ri][ni] = r.is_infinite() ? std::pow(sup_norm(g), -2.0) : entropy_power(g, r.value());
        }
    }
    std::vector<MonotonicityRow> rows;
    for (std::size_t ri = 0; ri < R; ++ri) {
        const RenyiOrder& r = cfg.r_values[ri];
        const Verdict predicted = r.is_infinite() ? monotonicity_prediction_inf(c) : monotonicity_prediction(r, c);
        std::vector<int> signs;
        for (std::size_t ni = 0; ni + 1 < K; ++ni) {
            const double d = power[ri][ni + 1] - power[ri][ni];
            const double noise = 1e-9 * std::max(1.0, std::abs(power[ri][ni]));
            signs.push_back(std::abs(d) <= noise ? 0 : (d > 0 ? 1 : -1));
        }
        Verdict empirical = Verdict::indeterminate;
        std::optional<unsigned> n0;
        if (!signs.empty()) {
            const int tail = signs.back();
            empirical = tail > 0 ? Verdict::eventually_increasing
                                 : (tail < 0 ? Verdict::eventually_decreasing : Verdict::indeterminate);
            std::size_t first = signs.size() - 1;
            while (first > 0 && signs[first - 1] == tail) --first;
            n0 = cfg.n_values[first];
        }
        const bool match = !signs.empty() && empirical == predicted;
        for (std::size_t ni = 0; ni < K; ++ni) {
            MonotonicityRow row{r, cfg.n_values[ni], power[ri][ni], std::nullopt, 0, predicted, n0, match};
            if (ni + 1 < K) {
                row.diff = power[ri][ni + 1] - power[ri][ni];
                row.sign = signs[ni];
            }
            rows.push_back(row);
        }
    }
    return rows;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("loglog_slope: need two or more points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double k = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw std::domain_error("loglog_slope: values must be positive");
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

std::vector<LocalLimitRow> run_locallimit(const ExperimentConfig& cfg, const std::string& dump_dir) {
    const unsigned m = cfg.edgeworth_order;
    const EdgeworthModel model(m, config_cumulants(cfg));
    std::vector<LocalLimitRow> rows;
    std::vector<double> ns, errs;
    for (unsigned n : cfg.n_values) {
        const DensityGrid g = density_of_normalized_sum(cfg.spec, n, cfg.grid);
        maybe_dump(dump_dir, g);
        double worst = 0.0;
        for (std::size_t k = 0; k < g.size(); ++k) {
            const double x = g.x(k);
            const double w = 1.0 + std::pow(std::abs(x), static_cast<double>(m));
            worst = std::max(worst, w * std::abs(g.values[k] - edgeworth_density(model, n, x)));
        }
        rows.push_back({n, m, worst, 0.0});
        ns.push_back(n);
        errs.push_back(worst);
    }
    double slope = std::nan("");
    if (ns.size() >= 2 && std::all_of(errs.begin(), errs.end(), [](double e) { return e > 0.0; }))
        slope = loglog_slope(ns, errs);
    for (auto& row : rows) row.fitted_slope = slope;
    return rows;
}

void write_csv(std::ostream& os, const std::vector<CoeffRow>& rows) {
    os << "r,b,B1,a1,a2,b2,c1,c2,A_tilde,B_tilde,r0,verdict\n";
    for (const auto& w : rows)
        os << w.r.to_string() << ',' << fmt(w.b) << ',' << fmt(w.B1) << ',' << fmt(w.a1) << ',' << fmt(w.a2) << ','
           << fmt(w.b2) << ',' << fmt(w.c1) << ',' << fmt(w.c2) << ',' << fmt(w.A_tilde) << ',' << fmt(w.B_tilde)
           << ',' << (w.r0 ? fmt(*w.r0) : std::string("none")) << ',' << to_string(w.verdict) << '\n';
}

void write_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows) {
    os << "n,r,h_r_numeric,h_r_predicted,residual,scaled_residual,N_r_numeric,N_r_predicted\n";
    for (const auto& w : rows)
        os << w.n << ',' << w.r.to_string() << ',' << fmt(w.h_r_numeric) << ',' << fmt(w.h_r_predicted) << ','
           << fmt(w.residual) << ',' << fmt(w.scaled_residual) << ',' << fmt(w.N_r_numeric) << ','
           << fmt(w.N_r_predicted) << '\n';
}

void write_csv(std::ostream& os, const std::vector<MonotonicityRow>& rows) {
    os << "r,n,N_r,diff,sign,predicted,empirical_n0,match\n";
    for (const auto& w : rows)
        os << w.r.to_string() << ',' << w.n << ',' << fmt(w.N_r) << ',' << fmt(w.diff) << ','
           << (w.diff ? std::to_string(w.sign) : std::string()) << ',' << to_string(w.predicted) << ','
           << (w.empirical_n0 ? std::to_string(*w.empirical_n0) : std::string()) << ','
           << (w.match ? "true" : "false") << '\n';
}

void write_csv(std::ostream& os, const std::vector<LocalLimitRow>& rows) {
    os << "n,m,weighted_sup_error,fitted_slope\n";
    for (const auto& w : rows)
        os << w.n << ',' << w.m << ',' << fmt(w.weighted_sup_error) << ',' << fmt(w.fitted_slope) << '\n';
}

}  // namespace renyi
