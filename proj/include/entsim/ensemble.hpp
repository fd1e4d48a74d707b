#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "entsim/closed_forms.hpp"
#include "entsim/errors.hpp"
#include "entsim/hamiltonian.hpp"
#include "entsim/parallel.hpp"
#include "entsim/random_states.hpp"

namespace entsim {

/// Sampling times in [0, t_max], either an evenly spaced grid or the same
/// grid with per-cell jitter to avoid aliasing against periodic dynamics.
struct TimeGrid {
    enum class Mode { Uniform, Jittered };

    double t_max = 1.0;
    int samples = 2;
    Mode mode = Mode::Uniform;
    std::uint64_t jitter_seed = 0;

    std::vector<double> times() const {
        if (samples < 2) throw InputError("TimeGrid: need at least 2 samples");
        if (!(t_max > 0.0) || !std::isfinite(t_max)) throw InputError("TimeGrid: t_max must be positive and finite");
        std::vector<double> t(samples);
        if (mode == Mode::Uniform) {
            const double step = t_max / (samples - 1);
            for (int i = 0; i < samples; ++i) t[i] = i * step;
        } else {
            SeededSampler sampler(jitter_seed);
            const double cell = t_max / samples;
            for (int i = 0; i < samples; ++i) t[i] = (i + sampler.uniform()) * cell;
        }
        return t;
    }
};

inline const char* to_string(TimeGrid::Mode mode) {
    return mode == TimeGrid::Mode::Uniform ? "uniform" : "jittered";
}

struct EntanglementSeries {
    std::vector<double> times;
    std::vector<double> values;
    double mean = 0.0;
    double stddev = 0.0;
};

/// Arithmetic mean and population standard deviation.
inline std::pair<double, double> finite_stats(std::span<const double> values) {
    if (values.empty()) throw InputError("finite_stats: empty sample");
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(values.size());
    return {mean, std::sqrt(var)};
}

enum class SeriesMethod { Auto, ClosedForm, DenseOracle };

inline const char* to_string(SeriesMethod method) {
    switch (method) {
        case SeriesMethod::Auto: return "auto";
        case SeriesMethod::ClosedForm: return "closed-form";
        case SeriesMethod::DenseOracle: return "dense-oracle";
    }
    return "?";
}

namespace detail {

inline std::vector<double> closed_form_values(const HamiltonianSpec& spec, std::span<const double> times,
                                              int threads, int max_window_bits) {
    const int n = spec.max_order;
    std::vector<double> values(times.size());
    switch (evolution_method_for(spec)) {
        case EvolutionMethod::CosPower: {
            const double coupling = spec.couplings.at(n).front();
            parallel_for(times.size(), [&](std::size_t i) { values[i] = emw_uniform_single(n, coupling, times[i]); },
                         threads);
            break;
        }
        case EvolutionMethod::SiteProduct: {
            const std::vector<double>& couplings = spec.couplings.at(n);
            parallel_for(times.size(), [&](std::size_t i) { values[i] = emw_site_single(couplings, n, times[i]); },
                         threads);
            break;
        }
        case EvolutionMethod::ReducedPhaseSum: {
            const EmwPhaseSum sum = EmwPhaseSum::build(spec, max_window_bits);
            parallel_for(times.size(), [&](std::size_t i) { values[i] = sum.value(times[i]); }, threads);
            break;
        }
    }
    return values;
}

inline std::vector<double> oracle_values(const HamiltonianSpec& spec, std::span<const double> times, int cap,
                                         int threads) {
    std::vector<double> values(times.size());
    parallel_for(times.size(), [&](std::size_t i) { values[i] = meyer_wallach(evolve(spec, times[i], cap, 1)); },
                 threads);
    return values;
}

}  // namespace detail

/// Entanglement sampled on the grid. Auto prefers the closed forms (exact
/// for every kind) and falls back to the dense oracle only if the phase-sum
/// window exceeds its cap.
inline EntanglementSeries series(const HamiltonianSpec& spec, const TimeGrid& grid,
                                 SeriesMethod method = SeriesMethod::Auto, int cap = kDefaultBruteForceCap,
                                 int threads = 0, int max_window_bits = 24) {
    validate(spec);
    EntanglementSeries s;
    s.times = grid.times();
    switch (method) {
        case SeriesMethod::ClosedForm:
            s.values = detail::closed_form_values(spec, s.times, threads, max_window_bits);
            break;
        case SeriesMethod::DenseOracle:
            s.values = detail::oracle_values(spec, s.times, cap, threads);
            break;
        case SeriesMethod::Auto:
            try {
                s.values = detail::closed_form_values(spec, s.times, threads, max_window_bits);
            } catch (const ResourceError&) {
                s.values = detail::oracle_values(spec, s.times, cap, threads);
            }
            break;
    }
    const auto [mean, stddev] = finite_stats(s.values);
    s.mean = mean;
    s.stddev = stddev;
    return s;
}

/// Per-site multiplicity map of symbolic flip-phase keys over the 2^{N-1}
/// strings with a_l = 0. Two strings share a key exactly when their phase
/// differences are equal for generic parameter values: each distinct
/// coupling symbol (one per order for uniform profiles, one per (order,
/// site) otherwise) is treated as algebraically independent, so equality is
/// integer-vector equality, never a float comparison. Couplings and
/// strengths that are exactly zero carry no symbol. Local fields shift
/// every key by the same constant and are omitted.
struct DegeneracyLedger {
    std::vector<std::unordered_map<std::string, std::uint64_t>> site_keys;

    /// Number of degenerate (a, b) pairs at site l (1-based).
    std::uint64_t pair_count(int l) const {
        std::uint64_t total = 0;
        for (const auto& [key, mult] : site_keys[l - 1]) total += mult * mult;
        return total;
    }

    std::uint64_t string_count(int l) const {
        std::uint64_t total = 0;
        for (const auto& [key, mult] : site_keys[l - 1]) total += mult;
        return total;
    }
};

inline DegeneracyLedger degeneracy_ledger(const HamiltonianSpec& spec, int cap = kDefaultBruteForceCap) {
    validate(spec);
    const ChainGeometry& geometry = spec.geometry;
    const int num_spins = geometry.num_spins;
    if (num_spins > cap)
        throw ResourceError("degeneracy_ledger: " + std::to_string(num_spins) +
                            " spins exceed the brute-force cap " + std::to_string(cap));

    std::map<int, bool> order_uniform;
    for (const auto& [m, profile] : spec.couplings) {
        const double first = profile.front();
        order_uniform[m] = std::all_of(profile.begin(), profile.end(), [first](double j) { return j == first; });
    }

    DegeneracyLedger ledger;
    ledger.site_keys.resize(num_spins);
    const BasisIndex dim = BasisIndex{1} << num_spins;
    std::string key;
    for (int l = 1; l <= num_spins; ++l) {
        const BasisIndex flip = BasisIndex{1} << (l - 1);
        auto& keys = ledger.site_keys[l - 1];
        for (BasisIndex a = 0; a < dim; ++a) {
            if (a & flip) continue;
            key.clear();
            for (const auto& [m, profile] : spec.couplings) {
                if (spec.strengths.at(m) == 0.0) continue;
                if (order_uniform.at(m)) {
                    if (profile.front() == 0.0) continue;
                    int coeff = 0;
                    for (int j = 1; j <= num_spins; ++j) {
                        if (((l - j) % num_spins + num_spins) % num_spins >= m) continue;
                        coeff += spin_product(a, j, m, geometry);
                    }
                    key.push_back(static_cast<char>(coeff));
                } else {
                    for (int j = 1; j <= num_spins; ++j) {
                        if (((l - j) % num_spins + num_spins) % num_spins >= m) continue;
                        if (profile[j - 1] == 0.0) continue;
                        key.push_back(static_cast<char>(spin_product(a, j, m, geometry)));
                    }
                }
            }
            ++keys[key];
        }
    }
    return ledger;
}

/// Exact infinite-time average of the Meyer-Wallach measure under the
/// generic-parameter assumption:
///   1 - (1/N) sum_l Xi_l / 2^{2(N-1)},
/// where Xi_l counts degenerate flip-phase pairs at site l. The integer
/// pair counts are accumulated exactly and divided once, so dyadic results
/// come out bit-exact.
inline double exact_infinite_avg(const HamiltonianSpec& spec, int cap = kDefaultBruteForceCap) {
    const DegeneracyLedger ledger = degeneracy_ledger(spec, cap);
    const int num_spins = spec.geometry.num_spins;
    std::uint64_t total = 0;
    for (int l = 1; l <= num_spins; ++l) total += ledger.pair_count(l);
    const double denom = static_cast<double>(num_spins) * std::exp2(2.0 * (num_spins - 1));
    return 1.0 - static_cast<double>(total) / denom;
}

/// Smallest grid time after which the running average stays within
/// delta * (1 - target) of the target. Returns nullopt when never reached.
inline std::optional<double> settle_time(std::span<const double> times, std::span<const double> values,
                                         double target, double delta) {
    if (times.size() != values.size() || times.empty()) throw InputError("settle_time: mismatched series");
    if (!(delta > 0.0 && delta < 1.0)) throw InputError("settle_time: delta must lie in (0, 1)");
    const double band = delta * (1.0 - target);
    std::vector<double> running(values.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        sum += values[i];
        running[i] = sum / static_cast<double>(i + 1);
    }
    std::optional<std::size_t> first;
    for (std::size_t i = values.size(); i-- > 0;) {
        if (std::abs(running[i] - target) <= band)
            first = i;
        else
            break;
    }
    if (!first) return std::nullopt;
    return times[*first];
}

/// Settling-time estimate against the exact infinite-time average (or an
/// explicit target, e.g. when a commensurate strength schedule makes the
/// generic-parameter average unreachable).
inline std::optional<double> estimate_tau_inf(const HamiltonianSpec& spec, const TimeGrid& grid, double delta = 0.05,
                                              std::optional<double> target = std::nullopt,
                                              int cap = kDefaultBruteForceCap, int threads = 0) {
    const EntanglementSeries s = series(spec, grid, SeriesMethod::Auto, cap, threads);
    const double goal = target ? *target : exact_infinite_avg(spec, cap);
    return settle_time(s.times, s.values, goal, delta);
}

struct DistributionStats {
    std::vector<double> edges;  // bins + 1, strictly increasing
    std::vector<std::uint64_t> counts;
    double mean = 0.0;
    double stddev = 0.0;
    std::size_t count = 0;
};

/// Equal-width histogram over [lo, hi]; samples outside land in the edge
/// bins so counts always sum to the sample count.
inline DistributionStats histogram(std::span<const double> samples, int bins, double lo, double hi) {
    if (samples.empty()) throw InputError("histogram: empty sample");
    if (bins < 2) throw InputError("histogram: need at least 2 bins");
    if (!(hi > lo)) throw InputError("histogram: empty range");
    DistributionStats stats;
    stats.count = samples.size();
    stats.edges.resize(bins + 1);
    const double width = (hi - lo) / bins;
    for (int b = 0; b <= bins; ++b) stats.edges[b] = lo + b * width;
    stats.counts.assign(bins, 0);
    for (double v : samples) {
        int b = static_cast<int>(std::floor((v - lo) / width));
        b = std::clamp(b, 0, bins - 1);
        ++stats.counts[b];
    }
    const auto [mean, stddev] = finite_stats(samples);
    stats.mean = mean;
    stats.stddev = stddev;
    return stats;
}

/// Histogram spanning [min, max] of the data.
inline DistributionStats histogram(std::span<const double> samples, int bins) {
    if (samples.empty()) throw InputError("histogram: empty sample");
    const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
    double a = *lo, b = *hi;
    if (a == b) {  // constant samples occupy a single bin
        a -= 0.5;
        b += 0.5;
    }
    return histogram(samples, bins, a, b);
}

struct ScalingFit {
    double exponent = 0.0;   // decay rate alpha in deficit = beta / 2^{alpha x}
    double prefactor = 0.0;  // beta
    double residual = 0.0;   // rms misfit of log2(deficit)
};

/// Least-squares fit of log2(deficit) against x = n - x_offset, recovering
/// deficit = prefactor / 2^{exponent * x}.
inline ScalingFit fit_exponent(std::span<const std::pair<double, double>> points, double x_offset = 1.0) {
    if (points.size() < 3) throw InputError("fit_exponent: need at least 3 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [n, deficit] : points) {
        if (!(deficit > 0.0)) throw InputError("fit_exponent: deficits must be positive");
        const double x = n - x_offset;
        const double y = std::log2(deficit);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double count = static_cast<double>(points.size());
    const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / count;
    double rss = 0.0;
    for (const auto& [n, deficit] : points) {
        const double x = n - x_offset;
        const double misfit = std::log2(deficit) - (slope * x + intercept);
        rss += misfit * misfit;
    }
    ScalingFit fit;
    fit.exponent = -slope;
    fit.prefactor = std::exp2(intercept);
    fit.residual = std::sqrt(rss / count);
    return fit;
}

}  // namespace entsim
