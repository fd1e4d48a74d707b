#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "entsim/phase_random.hpp"
#include "entsim/closed_forms.hpp"
#include "entsim/density.hpp"
#include "entsim/ensemble.hpp"
#include "entsim/errors.hpp"
#include "entsim/hamiltonian.hpp"
#include "entsim/io.hpp"
#include "entsim/random_states.hpp"

namespace entsim {

inline constexpr const char* kVersion = "0.1.0";

enum class OutputFormat { Csv, Json };

inline OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw InputError("unknown output format: " + name);
}

/// Sampler stream layout. Every consumer of randomness gets its own stream
/// so results never depend on evaluation order. Stream 0 is the grid
/// jitter; streams kSamples and above are per-sample.
namespace streams {
inline constexpr std::uint64_t kCouplings = 1;
inline constexpr std::uint64_t kSearch = 3;
inline constexpr std::uint64_t kSamples = 1000;
}  // namespace streams

struct RunOptions {
    std::string out_path;
    OutputFormat format = OutputFormat::Csv;
    std::optional<std::uint64_t> seed_override;
    std::optional<int> threads_override;
};

namespace config_detail {

inline const nlohmann::json& require(const nlohmann::json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end()) throw InputError("config: missing required key '" + key + "'");
    return *it;
}

template <typename T>
T get_or(const nlohmann::json& j, const std::string& key, T fallback) {
    auto it = j.find(key);
    if (it == j.end()) return fallback;
    try {
        return it->get<T>();
    } catch (const nlohmann::json::exception&) {
        throw InputError("config: key '" + key + "' has the wrong type");
    }
}

template <typename T>
T get(const nlohmann::json& j, const std::string& key) {
    try {
        return require(j, key).template get<T>();
    } catch (const nlohmann::json::exception&) {
        throw InputError("config: key '" + key + "' has the wrong type");
    }
}

}  // namespace config_detail

/// Builds the Hamiltonian described by a config object. Site-dependent
/// couplings are either given explicitly ("couplings": {"2": [...], ...})
/// or drawn from a Gaussian centered at "coupling" with standard deviation
/// "coupling_stddev" (default 0.5 |coupling|, no truncation), one stream
/// per run so draws are reproducible.
inline HamiltonianSpec hamiltonian_from_config(const nlohmann::json& h, SeededSampler coupling_sampler) {
    using config_detail::get;
    using config_detail::get_or;

    const std::string kind = get<std::string>(h, "kind");
    const int num_spins = get<int>(h, "num_spins");
    const int max_order = get<int>(h, "max_order");
    const double coupling = get_or<double>(h, "coupling", 1.0);

    StrengthSchedule schedule;
    if (kind == "uniform-up-to" || kind == "site-up-to") {
        const nlohmann::json s = get_or<nlohmann::json>(h, "schedule", nlohmann::json::object());
        const std::string type = get_or<std::string>(s, "type", "polynomial");
        const double epsilon = get_or<double>(s, "epsilon", std::sqrt(3.0) / 10.0);
        if (type == "polynomial")
            schedule = StrengthSchedule::polynomial(max_order, epsilon);
        else if (type == "exponential")
            schedule = StrengthSchedule::exponential(max_order, epsilon, get_or<double>(s, "base", 2.0));
        else
            throw InputError("config: unknown schedule type: " + type);
        if (s.contains("delta")) {
            schedule.delta.clear();
            for (const auto& [key, value] : s.at("delta").items()) schedule.delta[std::stoi(key)] = value.get<double>();
        }
    }

    const auto site_profile = [&](int m) -> std::vector<double> {
        if (h.contains("couplings")) {
            const nlohmann::json& c = h.at("couplings");
            const std::string key = std::to_string(m);
            if (!c.contains(key)) throw InputError("config: couplings missing order " + key);
            return c.at(key).get<std::vector<double>>();
        }
        const std::string distribution = get_or<std::string>(h, "coupling_distribution", "gaussian");
        if (distribution == "fixed") return std::vector<double>(num_spins, coupling);
        if (distribution != "gaussian") throw InputError("config: unknown coupling_distribution: " + distribution);
        const double stddev = get_or<double>(h, "coupling_stddev", 0.5 * std::abs(coupling));
        std::vector<double> profile(num_spins);
        for (double& j : profile) j = coupling_sampler.gaussian(coupling, stddev);
        return profile;
    };

    HamiltonianSpec spec;
    if (kind == "uniform-single") {
        spec = uniform_single(num_spins, max_order, coupling);
    } else if (kind == "site-single") {
        spec = site_single(num_spins, max_order, site_profile(max_order));
    } else if (kind == "uniform-up-to") {
        spec = uniform_up_to(num_spins, max_order, coupling, schedule);
    } else if (kind == "site-up-to") {
        std::map<int, std::vector<double>> couplings;
        for (int m = 2; m <= max_order; ++m) couplings[m] = site_profile(m);
        spec = site_up_to(num_spins, max_order, couplings, schedule);
    } else {
        throw InputError("config: unknown hamiltonian kind: " + kind);
    }
    if (h.contains("fields")) spec = with_fields(spec, h.at("fields").get<std::vector<double>>());
    return spec;
}

inline TimeGrid grid_from_config(const nlohmann::json& g, std::uint64_t seed) {
    using config_detail::get;
    using config_detail::get_or;
    TimeGrid grid;
    grid.t_max = get<double>(g, "t_max");
    grid.samples = get<int>(g, "samples");
    const std::string mode = get_or<std::string>(g, "mode", "uniform");
    if (mode == "uniform")
        grid.mode = TimeGrid::Mode::Uniform;
    else if (mode == "jittered")
        grid.mode = TimeGrid::Mode::Jittered;
    else
        throw InputError("config: unknown grid mode: " + mode);
    grid.jitter_seed = seed;
    return grid;
}

struct ResolvedRun {
    nlohmann::json config;  // with seed/threads resolved
    std::uint64_t seed = 1;
    int threads = 0;
};

inline ResolvedRun resolve_run(const nlohmann::json& config, const RunOptions& options) {
    ResolvedRun run;
    run.config = config;
    run.seed = options.seed_override ? *options.seed_override : config_detail::get_or<std::uint64_t>(config, "seed", 1);
    run.threads = options.threads_override ? *options.threads_override : config_detail::get_or<int>(config, "threads", 0);
    run.config["seed"] = run.seed;
    run.config["threads"] = run.threads;
    return run;
}

inline nlohmann::json make_manifest(const std::string& command, const ResolvedRun& run) {
    nlohmann::json manifest;
    manifest["command"] = command;
    manifest["version"] = kVersion;
    manifest["generator"] = SeededSampler::generator_id;
    manifest["seed"] = run.seed;
    manifest["threads"] = run.threads;
    manifest["config"] = run.config;
    return manifest;
}

namespace run_detail {

inline void emit(const RunOptions& options, const nlohmann::json& manifest, const CsvTable& table,
                 const nlohmann::json& extra = nlohmann::json::object()) {
    if (options.format == OutputFormat::Csv) {
        nlohmann::json enriched = manifest;
        for (const auto& [key, value] : extra.items()) enriched[key] = value;
        write_csv(options.out_path, enriched, table);
    } else {
        nlohmann::json data;
        data["columns"] = table.columns;
        data["rows"] = table.rows;
        for (const auto& [key, value] : extra.items()) data[key] = value;
        write_json(options.out_path, manifest, data);
    }
}

}  // namespace run_detail

/// Entanglement evolution samples, one row per (time, method).
inline void run_evolve(const nlohmann::json& config, const RunOptions& options) {
    using config_detail::get_or;
    const ResolvedRun run = resolve_run(config, options);
    const HamiltonianSpec spec =
        hamiltonian_from_config(config_detail::require(run.config, "hamiltonian"),
                                SeededSampler(run.seed, streams::kCouplings));
    const TimeGrid grid = grid_from_config(config_detail::require(run.config, "grid"), run.seed);
    std::vector<std::string> methods = get_or<std::vector<std::string>>(run.config, "methods", {"closed-form"});

    CsvTable table;
    table.columns = {"t", "e_mw", "method"};
    for (const std::string& name : methods) {
        SeriesMethod method;
        if (name == "closed-form")
            method = SeriesMethod::ClosedForm;
        else if (name == "dense-oracle")
            method = SeriesMethod::DenseOracle;
        else
            throw InputError("config: unknown method: " + name);
        const EntanglementSeries s = series(spec, grid, method, kDefaultBruteForceCap, run.threads);
        for (std::size_t i = 0; i < s.times.size(); ++i)
            table.rows.push_back({format_double(s.times[i]), format_double(s.values[i]), name});
    }

    // Analytic reference values for plotting alongside the series.
    nlohmann::json reference;
    const int n = spec.max_order;
    switch (spec.kind) {
        case HamiltonianKind::UniformSingle:
            reference["infinite_avg"] = avg_uniform_single(n);
            break;
        case HamiltonianKind::SiteSingle:
            reference["infinite_avg_bound"] = bound_site_single(n);
            break;
        case HamiltonianKind::UniformUpTo: {
            const auto [lo, hi] = bounds_uniform_up_to(n);
            reference["infinite_avg_lower"] = lo;
            reference["infinite_avg_upper"] = hi;
            break;
        }
        case HamiltonianKind::SiteUpTo:
            break;
    }
    if (spec.geometry.num_spins <= kDefaultBruteForceCap)
        reference["exact_infinite_avg"] = exact_infinite_avg(spec);
    nlohmann::json extra;
    extra["reference"] = reference;
    run_detail::emit(options, make_manifest("evolve", run), table, extra);
}

/// Two-point correlations from the dense oracle, one row per (r, t).
inline void run_correlate(const nlohmann::json& config, const RunOptions& options) {
    using config_detail::get_or;
    const ResolvedRun run = resolve_run(config, options);
    const HamiltonianSpec spec =
        hamiltonian_from_config(config_detail::require(run.config, "hamiltonian"),
                                SeededSampler(run.seed, streams::kCouplings));
    const int num_spins = spec.geometry.num_spins;
    if (num_spins % 2 != 0) throw InputError("correlate: the distance range 1..N/2-1 needs an even spin count");
    const TimeGrid grid = grid_from_config(config_detail::require(run.config, "grid"), run.seed);

    std::vector<int> distances;
    if (run.config.contains("distances"))
        distances = run.config.at("distances").get<std::vector<int>>();
    else
        for (int r = 1; r <= num_spins / 2 - 1; ++r) distances.push_back(r);

    const std::vector<double> times = grid.times();
    struct Row {
        int r;
        double t, x, y, z;
    };
    std::vector<Row> rows(times.size() * distances.size());
    parallel_for(
        times.size(),
        [&](std::size_t i) {
            const StateVector psi = evolve(spec, times[i], kDefaultBruteForceCap, 1);
            for (std::size_t k = 0; k < distances.size(); ++k) {
                const int r = distances[k];
                rows[i * distances.size() + k] = {r, times[i], correlation(psi, PauliAxis::X, r),
                                                  correlation(psi, PauliAxis::Y, r),
                                                  correlation(psi, PauliAxis::Z, r)};
            }
        },
        run.threads);

    CsvTable table;
    table.columns = {"r", "t", "c_x", "c_y", "c_z"};
    for (const Row& row : rows)
        table.rows.push_back({std::to_string(row.r), format_double(row.t), format_double(row.x),
                              format_double(row.y), format_double(row.z)});
    run_detail::emit(options, make_manifest("correlate", run), table);
}

/// Histogram of an entanglement ensemble: Haar-typical samples or a
/// time ensemble of one Hamiltonian family.
inline void run_distribution(const nlohmann::json& config, const RunOptions& options) {
    using config_detail::get;
    using config_detail::get_or;
    const ResolvedRun run = resolve_run(config, options);
    const std::string ensemble = get<std::string>(run.config, "ensemble");
    const int bins = get_or<int>(run.config, "bins", 50);
    const double range_lo = get_or<double>(run.config, "range_lo", 0.0);
    const double range_hi = get_or<double>(run.config, "range_hi", 1.0);

    std::vector<double> values;
    nlohmann::json summary;
    if (ensemble == "typical") {
        const int num_spins = get<int>(run.config, "num_spins");
        const int count = get<int>(run.config, "samples");
        if (count < 100) throw InputError("distribution: need at least 100 samples");
        values = sample_typical(num_spins, count, SeededSampler(run.seed, streams::kSamples), run.threads);
        summary["typical_avg"] = typical_avg(num_spins);
        summary["typical_std_order"] = typical_std_order(num_spins);
    } else if (ensemble == "time") {
        const HamiltonianSpec spec =
            hamiltonian_from_config(config_detail::require(run.config, "hamiltonian"),
                                    SeededSampler(run.seed, streams::kCouplings));
        const TimeGrid grid = grid_from_config(config_detail::require(run.config, "grid"), run.seed);
        if (grid.samples < 100) throw InputError("distribution: need at least 100 samples");
        values = series(spec, grid, SeriesMethod::Auto, kDefaultBruteForceCap, run.threads).values;
        summary["exact_infinite_avg"] = exact_infinite_avg(spec);
    } else {
        throw InputError("distribution: unknown ensemble: " + ensemble);
    }

    const DistributionStats stats = histogram(values, bins, range_lo, range_hi);
    summary["mean"] = stats.mean;
    summary["stddev"] = stats.stddev;
    summary["count"] = stats.count;

    CsvTable table;
    table.columns = {"bin_lo", "bin_hi", "count"};
    for (std::size_t b = 0; b < stats.counts.size(); ++b)
        table.rows.push_back(
            {format_double(stats.edges[b]), format_double(stats.edges[b + 1]), std::to_string(stats.counts[b])});
    nlohmann::json extra;
    extra["summary"] = summary;
    run_detail::emit(options, make_manifest("distribution", run), table, extra);
}

/// Per-family time-averaged entanglement, exact infinite-time averages,
/// settling times, and fitted decay exponents across an order range.
inline void run_table1(const nlohmann::json& config, const RunOptions& options) {
    using config_detail::get_or;
    const ResolvedRun run = resolve_run(config, options);
    const int num_spins = get_or<int>(run.config, "num_spins", 12);
    const int order_min = get_or<int>(run.config, "order_min", 3);
    const int order_max = get_or<int>(run.config, "order_max", 6);
    if (order_max - order_min + 1 < 3) throw InputError("table1: need at least 3 orders for the fits");
    const double epsilon = get_or<double>(run.config, "epsilon", std::sqrt(3.0) / 10.0);
    const double coupling = get_or<double>(run.config, "coupling", 1.0);
    const int samples = get_or<int>(run.config, "samples", 20000);
    const double tau_delta = get_or<double>(run.config, "tau_delta", 0.05);
    const double single_t_max = get_or<double>(run.config, "single_t_max", 100.0 / std::abs(coupling));
    const std::vector<std::string> families = get_or<std::vector<std::string>>(
        run.config, "families", {"uniform-single", "site-single", "uniform-up-to", "site-up-to"});

    struct FamilyRow {
        int order;
        double exact_avg, finite_avg, finite_std;
        std::optional<double> tau;
    };

    CsvTable table;
    table.columns = {"family",     "n",       "exact_avg",  "finite_avg", "finite_std",
                     "tau_inf",    "alpha_mean", "beta_mean", "alpha_std",  "beta_std"};
    nlohmann::json fits_json;

    int family_index = 0;
    for (const std::string& family : families) {
        const bool up_to = family == "uniform-up-to" || family == "site-up-to";
        std::vector<FamilyRow> rows;
        for (int n = order_min; n <= order_max; ++n) {
            nlohmann::json h;
            h["kind"] = family;
            h["num_spins"] = num_spins;
            h["max_order"] = n;
            h["coupling"] = coupling;
            h["coupling_distribution"] = (family == "site-single" || family == "site-up-to") ? "gaussian" : "fixed";
            if (up_to) h["schedule"] = {{"type", get_or<std::string>(run.config, "schedule", "polynomial")},
                                        {"epsilon", epsilon}};
            const HamiltonianSpec spec = hamiltonian_from_config(
                h, SeededSampler(run.seed, streams::kCouplings + 100 * family_index + n));

            TimeGrid grid;
            grid.t_max = up_to ? 2.0 * std::numbers::pi * std::pow(n, 4) / epsilon : single_t_max;
            grid.samples = samples;
            grid.mode = TimeGrid::Mode::Jittered;
            grid.jitter_seed = run.seed + 71 * n;
            const EntanglementSeries s = series(spec, grid, SeriesMethod::Auto, kDefaultBruteForceCap, run.threads);
            const double exact = exact_infinite_avg(spec);
            const auto tau = settle_time(s.times, s.values, exact, tau_delta);
            rows.push_back({n, exact, s.mean, s.stddev, tau});
        }

        // Deficit fits: single-order families scale in n, up-to families
        // in n - 1.
        const double offset = up_to ? 1.0 : 0.0;
        std::vector<std::pair<double, double>> mean_points, std_points;
        for (const FamilyRow& row : rows) {
            if (1.0 - row.finite_avg > 0.0) mean_points.emplace_back(row.order, 1.0 - row.finite_avg);
            if (row.finite_std > 0.0) std_points.emplace_back(row.order, row.finite_std);
        }
        ScalingFit mean_fit, std_fit;
        if (mean_points.size() >= 3) mean_fit = fit_exponent(mean_points, offset);
        if (std_points.size() >= 3) std_fit = fit_exponent(std_points, offset);
        fits_json[family] = {{"alpha_mean", mean_fit.exponent},
                             {"beta_mean", mean_fit.prefactor},
                             {"alpha_std", std_fit.exponent},
                             {"beta_std", std_fit.prefactor},
                             {"x_offset", offset}};

        for (const FamilyRow& row : rows) {
            table.rows.push_back({family, std::to_string(row.order), format_double(row.exact_avg),
                                  format_double(row.finite_avg), format_double(row.finite_std),
                                  row.tau ? format_double(*row.tau) : "",
                                  format_double(mean_fit.exponent), format_double(mean_fit.prefactor),
                                  format_double(std_fit.exponent), format_double(std_fit.prefactor)});
        }
        ++family_index;
    }

    nlohmann::json extra;
    extra["fits"] = fits_json;
    run_detail::emit(options, make_manifest("table1", run), table, extra);
}

/// Analytic verification checks. Returns true when every check
/// passes; the report is written either way.
inline bool run_verify(const nlohmann::json& config, const RunOptions& options) {
    using config_detail::get_or;
    const ResolvedRun run = resolve_run(config, options);

    struct Check {
        std::string name;
        bool pass;
        double measured, expected, margin;
    };
    std::vector<Check> checks;
    const auto record = [&](const std::string& name, bool pass, double measured, double expected, double margin) {
        checks.push_back({name, pass, measured, expected, margin});
    };

    // Uniform profile attains 1 - 1/2^{N-1} exactly.
    for (int n = 2; n <= get_or<int>(run.config, "uniform_profile_max_spins", 10); ++n) {
        const double value = phase_random_avg(uniform_profile(n));
        const double expected = 1.0 - std::exp2(-(n - 1));
        record("phase_random_avg/uniform/N=" + std::to_string(n), std::abs(value - expected) <= 1e-12, value,
               expected, std::abs(value - expected));
    }

    // The two algebraic routes agree on random profiles.
    {
        SeededSampler sampler(run.seed, streams::kSearch);
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            AmplitudeProfile profile;
            profile.num_spins = 6;
            profile.r.resize(64);
            profile.omega.assign(64, 0.0);
            double norm = 0.0;
            for (double& r : profile.r) {
                r = std::abs(sampler.gaussian());
                norm += r * r;
            }
            norm = std::sqrt(norm);
            for (double& r : profile.r) r /= norm;
            worst = std::max(worst,
                             std::abs(phase_random_avg(profile) - phase_random_avg_index_form(profile)));
        }
        record("phase_random_avg/route-agreement", worst <= 1e-12, worst, 0.0, worst);
    }

    // Product-state search never beats the bound; the uniform profile does.
    for (int n : get_or<std::vector<int>>(run.config, "search_spins", {2, 3})) {
        SeededSampler sampler(run.seed, streams::kSearch + n);
        const OptimalProfileSearch search =
            verify_optimal_initial(n, get_or<int>(run.config, "restarts", 12), sampler);
        const double bound = 1.0 - std::exp2(-(n - 1));
        record("optimal_initial/bound/N=" + std::to_string(n), search.best_value <= bound + 1e-9,
               search.best_value, bound, bound + 1e-9 - search.best_value);
        record("optimal_initial/attained/N=" + std::to_string(n), std::abs(search.best_value - bound) <= 1e-9,
               search.best_value, bound, std::abs(search.best_value - bound));
    }

    // Monte-Carlo phase average agrees with the formula within 3 SE.
    {
        const int num_spins = get_or<int>(run.config, "mc_spins", 6);
        const int draws = get_or<int>(run.config, "mc_draws", 100000);
        SeededSampler sampler(run.seed, streams::kSamples);
        AmplitudeProfile profile;
        profile.num_spins = num_spins;
        profile.r.resize(std::size_t{1} << num_spins);
        profile.omega.assign(profile.r.size(), 0.0);
        double norm = 0.0;
        for (double& r : profile.r) {
            r = std::abs(sampler.gaussian());
            norm += r * r;
        }
        norm = std::sqrt(norm);
        for (double& r : profile.r) r /= norm;
        const double predicted = phase_random_avg(profile);

        std::vector<double> values(draws);
        parallel_for(
            values.size(),
            [&](std::size_t i) {
                SeededSampler phase_sampler(run.seed, streams::kSamples + 1 + i);
                AmplitudeProfile randomized = profile;
                for (double& w : randomized.omega) w = phase_sampler.uniform(0.0, 2.0 * std::numbers::pi);
                values[i] = meyer_wallach(profile_state(randomized));
            },
            run.threads);
        const auto [mc_mean, mc_std] = finite_stats(values);
        const double se = mc_std / std::sqrt(static_cast<double>(draws));
        record("phase_random_avg/monte-carlo", std::abs(mc_mean - predicted) <= 3.0 * se, mc_mean, predicted,
               3.0 * se - std::abs(mc_mean - predicted));
    }

    // Window pair counts: bounds and consistency with the counted average.
    for (int n = 2; n <= get_or<int>(run.config, "xi_max_order", 5); ++n) {
        const XiCount count = count_xi(n);
        const double lower = std::exp2(2.0 * (n - 1));
        const double upper = std::pow(6.0, n - 1);
        record("xi/bounds/n=" + std::to_string(n),
               static_cast<double>(count.xi) >= lower && static_cast<double>(count.xi) <= upper,
               static_cast<double>(count.xi), upper, upper - static_cast<double>(count.xi));
        const double from_xi = xi_to_avg(count.xi, n);
        for (int spins : {2 * n, 2 * n + 2}) {
            if (spins > kDefaultBruteForceCap) continue;
            const HamiltonianSpec spec = uniform_up_to(spins, n, 1.0, StrengthSchedule::polynomial(n, 0.29));
            const double exact = exact_infinite_avg(spec);
            record("xi/avg-consistency/n=" + std::to_string(n) + "/N=" + std::to_string(spins),
                   exact == from_xi, exact, from_xi, std::abs(exact - from_xi));
        }
    }

    CsvTable table;
    table.columns = {"check", "pass", "measured", "expected", "margin"};
    bool all_passed = true;
    for (const Check& c : checks) {
        all_passed = all_passed && c.pass;
        table.rows.push_back({c.name, c.pass ? "1" : "0", format_double(c.measured), format_double(c.expected),
                              format_double(c.margin)});
    }
    nlohmann::json extra;
    extra["all_passed"] = all_passed;
    run_detail::emit(options, make_manifest("verify", run), table, extra);
    return all_passed;
}

/// Haar-typical entanglement samples with summary statistics.
inline void run_random_states(const nlohmann::json& config, const RunOptions& options) {
    using config_detail::get;
    const ResolvedRun run = resolve_run(config, options);
    const int num_spins = get<int>(run.config, "num_spins");
    const int count = get<int>(run.config, "samples");
    if (count < 1) throw InputError("random-states: need at least one sample");
    const std::vector<double> values =
        sample_typical(num_spins, count, SeededSampler(run.seed, streams::kSamples), run.threads);
    const auto [mean, stddev] = finite_stats(values);

    CsvTable table;
    table.columns = {"index", "e_mw"};
    for (std::size_t i = 0; i < values.size(); ++i)
        table.rows.push_back({std::to_string(i), format_double(values[i])});
    nlohmann::json extra;
    extra["summary"] = {{"mean", mean},
                        {"stddev", stddev},
                        {"typical_avg", typical_avg(num_spins)},
                        {"typical_std_order", typical_std_order(num_spins)},
                        {"mean_error", std::abs(mean - typical_avg(num_spins))}};
    run_detail::emit(options, make_manifest("random-states", run), table, extra);
}

}  // namespace entsim
