#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "entsim/chain.hpp"
#include "entsim/density.hpp"
#include "entsim/errors.hpp"
#include "entsim/parallel.hpp"
#include "entsim/state.hpp"

namespace entsim {

/// Deterministic random source: a named, portable generator (mt19937_64)
/// with explicit (seed, stream) identity. The same pair always yields the
/// same sequence, on any platform, so runs are bit-reproducible. Parallel
/// work splits by stream index, one stream per task.
class SeededSampler {
public:
    static constexpr const char* generator_id = "mt19937_64/box-muller";

    explicit SeededSampler(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream) {
        std::seed_seq seq{
            static_cast<std::uint32_t>(seed),
            static_cast<std::uint32_t>(seed >> 32),
            static_cast<std::uint32_t>(stream),
            static_cast<std::uint32_t>(stream >> 32),
        };
        engine_.seed(seq);
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    /// Fresh sampler sharing the seed, positioned at another stream.
    SeededSampler at_stream(std::uint64_t stream) const { return SeededSampler(seed_, stream); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller (explicit, so the sequence does not
    /// depend on the standard library's distribution internals).
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u = uniform();
        while (u == 0.0) u = uniform();
        const double r = std::sqrt(-2.0 * std::log(u));
        const double theta = 2.0 * std::numbers::pi * uniform();
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    double gaussian(double mean, double stddev) { return mean + stddev * gaussian(); }

    Complex complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Haar-random pure state: independent complex standard-normal amplitudes,
/// normalized. Equivalent to drawing from the unitarily invariant measure
/// at O(2^N) cost.
inline StateVector haar_state(int num_spins, SeededSampler& sampler, int cap = kDefaultBruteForceCap) {
    if (num_spins < 1) throw InputError("haar_state: need at least one spin");
    if (num_spins > cap) throw ResourceError("haar_state: spin count exceeds the brute-force cap");
    StateVector psi = zero_state_vector(num_spins);
    for (Complex& c : psi.amp) c = sampler.complex_gaussian();
    const double inv = 1.0 / psi.norm();
    for (Complex& c : psi.amp) c *= inv;
    return psi;
}

/// Average Meyer-Wallach entanglement of Haar-random states:
/// 1 - 3/(2^N + 1).
inline double typical_avg(int num_spins) {
    if (num_spins < 1) throw InputError("typical_avg: need at least one spin");
    return 1.0 - 3.0 / (std::exp2(num_spins) + 1.0);
}

/// Scale of the standard deviation of the typical entanglement, 2^{-N}.
/// An order of magnitude, not a constant.
inline double typical_std_order(int num_spins) {
    if (num_spins < 1) throw InputError("typical_std_order: need at least one spin");
    return std::exp2(-num_spins);
}

/// M independent Meyer-Wallach samples of Haar draws. Sample i uses stream
/// base.stream() + 1 + i, so the output is the same regardless of the
/// thread count or schedule.
inline std::vector<double> sample_typical(int num_spins, int count, const SeededSampler& base, int threads = 0,
                                          int cap = kDefaultBruteForceCap) {
    if (count < 1) throw InputError("sample_typical: need at least one sample");
    std::vector<double> values(count);
    parallel_for(
        values.size(),
        [&](std::size_t i) {
            SeededSampler sampler = base.at_stream(base.stream() + 1 + i);
            values[i] = meyer_wallach(haar_state(num_spins, sampler, cap));
        },
        threads);
    return values;
}

}  // namespace entsim
