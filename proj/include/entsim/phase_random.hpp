#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "entsim/chain.hpp"
#include "entsim/errors.hpp"
#include "entsim/random_states.hpp"
#include "entsim/state.hpp"

namespace entsim {

/// Fixed amplitudes r_a and phases omega_a of a state expanded in the
/// computational eigenbasis, sum r_a^2 = 1.
struct AmplitudeProfile {
    int num_spins = 0;
    std::vector<double> r;
    std::vector<double> omega;

    std::size_t dim() const { return r.size(); }
};

inline void validate(const AmplitudeProfile& profile) {
    const std::size_t dim = std::size_t{1} << profile.num_spins;
    if (profile.r.size() != dim || profile.omega.size() != dim)
        throw InputError("AmplitudeProfile: size must be 2^N");
    double s = 0.0;
    for (double r : profile.r) {
        if (r < 0.0 || !std::isfinite(r)) throw InputError("AmplitudeProfile: amplitudes must be >= 0");
        s += r * r;
    }
    if (std::abs(s - 1.0) > 1e-12) throw InputError("AmplitudeProfile: amplitudes are not normalized");
}

/// r_a = 2^{-N/2} for every basis string, zero phases.
inline AmplitudeProfile uniform_profile(int num_spins) {
    AmplitudeProfile profile;
    profile.num_spins = num_spins;
    const std::size_t dim = std::size_t{1} << num_spins;
    profile.r.assign(dim, std::exp2(-0.5 * num_spins));
    profile.omega.assign(dim, 0.0);
    return profile;
}

/// Profile of a product state with per-site probability p_i of bit 1:
/// r_a^2 = prod_i (a_i ? p_i : 1 - p_i).
inline AmplitudeProfile product_profile(std::span<const double> site_probs) {
    const int num_spins = static_cast<int>(site_probs.size());
    if (num_spins < 1) throw InputError("product_profile: need at least one site");
    for (double p : site_probs)
        if (!(p >= 0.0 && p <= 1.0)) throw InputError("product_profile: probabilities must lie in [0, 1]");
    AmplitudeProfile profile;
    profile.num_spins = num_spins;
    const std::size_t dim = std::size_t{1} << num_spins;
    profile.r.resize(dim);
    profile.omega.assign(dim, 0.0);
    for (BasisIndex a = 0; a < dim; ++a) {
        double q = 1.0;
        for (int i = 1; i <= num_spins; ++i) q *= bit_of(a, i) ? site_probs[i - 1] : 1.0 - site_probs[i - 1];
        profile.r[a] = std::sqrt(q);
    }
    return profile;
}

/// State sum_a r_a e^{i omega_a} |a>.
inline StateVector profile_state(const AmplitudeProfile& profile) {
    validate(profile);
    StateVector psi = zero_state_vector(profile.num_spins);
    for (std::size_t a = 0; a < profile.dim(); ++a) psi.amp[a] = std::polar(profile.r[a], profile.omega[a]);
    return psi;
}

/// Average entanglement over uniformly random phases at fixed amplitudes,
/// in the linear-entropy form
///   (2/N) sum_k [S_L(rho^k_av) + S_L(rho^{not k}_av) - S_L(rho_av)]
/// with rho_av = sum_a r_a^2 |a><a|. The eigenbasis is separable, so the
/// per-eigenstate correction term vanishes.
inline double phase_random_avg(const AmplitudeProfile& profile) {
    validate(profile);
    const int num_spins = profile.num_spins;
    const std::size_t dim = profile.dim();
    std::vector<double> q(dim);
    for (std::size_t a = 0; a < dim; ++a) q[a] = profile.r[a] * profile.r[a];

    double q2 = 0.0;
    for (double v : q) q2 += v * v;
    const double sl_full = 1.0 - q2;

    double total = 0.0;
    for (int k = 1; k <= num_spins; ++k) {
        const BasisIndex mask = BasisIndex{1} << (k - 1);
        double p1 = 0.0;
        double pair2 = 0.0;
        for (std::size_t a = 0; a < dim; ++a) {
            if (a & mask) continue;
            const double lo = q[a];
            const double hi = q[a | mask];
            p1 += hi;
            pair2 += (lo + hi) * (lo + hi);
        }
        const double p0 = 1.0 - p1;
        const double sl_site = 1.0 - p0 * p0 - p1 * p1;
        const double sl_rest = 1.0 - pair2;
        total += sl_site + sl_rest - sl_full;
    }
    return 2.0 / num_spins * total;
}

/// The same average written directly in the amplitudes:
///   (4/N) sum_k [P_k(0) P_k(1) - sum_pairs q_a q_{flip_k(a)}].
/// An independent algebraic route kept for cross-checking.
inline double phase_random_avg_index_form(const AmplitudeProfile& profile) {
    validate(profile);
    const int num_spins = profile.num_spins;
    const std::size_t dim = profile.dim();
    std::vector<double> q(dim);
    for (std::size_t a = 0; a < dim; ++a) q[a] = profile.r[a] * profile.r[a];

    double total = 0.0;
    for (int k = 1; k <= num_spins; ++k) {
        const BasisIndex mask = BasisIndex{1} << (k - 1);
        double p1 = 0.0;
        double cross = 0.0;
        for (std::size_t a = 0; a < dim; ++a) {
            if (a & mask) continue;
            p1 += q[a | mask];
            cross += q[a] * q[a | mask];
        }
        total += (1.0 - p1) * p1 - cross;
    }
    return 4.0 / num_spins * total;
}

struct OptimalProfileSearch {
    double best_value = 0.0;
    std::vector<double> best_site_probs;
};

/// Searches product-state profiles for the largest phase-random average.
/// Multi-restart coordinate ascent over the per-site probabilities; the
/// uniform profile (p_i = 1/2) is always included as a candidate. Intended
/// for small N where the bound 1 - 1/2^{N-1} can be checked exhaustively.
inline OptimalProfileSearch verify_optimal_initial(int num_spins, int restarts, SeededSampler& sampler) {
    if (num_spins < 2 || num_spins > 4)
        throw InputError("verify_optimal_initial: search supports 2..4 spins");
    if (restarts < 10) throw InputError("verify_optimal_initial: need at least 10 restarts");

    const auto objective = [&](const std::vector<double>& probs) {
        return phase_random_avg(product_profile(probs));
    };

    OptimalProfileSearch result;
    result.best_site_probs.assign(num_spins, 0.5);
    result.best_value = objective(result.best_site_probs);

    for (int restart = 0; restart < restarts; ++restart) {
        std::vector<double> probs(num_spins);
        for (double& p : probs) p = sampler.uniform();
        double value = objective(probs);
        for (int sweep = 0; sweep < 60; ++sweep) {
            const double before = value;
            for (int i = 0; i < num_spins; ++i) {
                // Coarse scan then golden-section refinement per coordinate.
                double best_p = probs[i];
                double best_v = value;
                for (int g = 0; g <= 32; ++g) {
                    probs[i] = g / 32.0;
                    const double v = objective(probs);
                    if (v > best_v) {
                        best_v = v;
                        best_p = probs[i];
                    }
                }
                double lo = std::max(0.0, best_p - 1.0 / 32.0);
                double hi = std::min(1.0, best_p + 1.0 / 32.0);
                constexpr double kInvPhi = 0.6180339887498949;
                double a = hi - kInvPhi * (hi - lo);
                double b = lo + kInvPhi * (hi - lo);
                probs[i] = a;
                double fa = objective(probs);
                probs[i] = b;
                double fb = objective(probs);
                while (hi - lo > 1e-12) {
                    if (fa > fb) {
                        hi = b;
                        b = a;
                        fb = fa;
                        a = hi - kInvPhi * (hi - lo);
                        probs[i] = a;
                        fa = objective(probs);
                    } else {
                        lo = a;
                        a = b;
                        fa = fb;
                        b = lo + kInvPhi * (hi - lo);
                        probs[i] = b;
                        fb = objective(probs);
                    }
                }
                probs[i] = fa > fb ? a : b;
                const double v = objective(probs);
                if (v >= best_v) {
                    value = v;
                } else {
                    probs[i] = best_p;
                    value = best_v;
                }
            }
            if (value - before < 1e-13) break;
        }
        if (value > result.best_value) {
            result.best_value = value;
            result.best_site_probs = probs;
        }
    }
    return result;
}

/// Degenerate flip-phase pair count for the uniform up-to-n chain, reduced
/// to the 2^{2(n-1)} configurations of the sites neighboring the flipped
/// one. Counted symbolically over generic strengths: the key is the integer
/// coefficient vector (c_2, ..., c_n) with c_m the signed number of order-m
/// windows through the flip site.
struct XiCount {
    int order = 0;
    std::uint64_t xi = 0;
};

inline XiCount count_xi(int order) {
    if (order < 2 || order > 8) throw InputError("count_xi: order out of range 2..8 (cost 2^{4(n-1)})");
    const int window_bits = 2 * (order - 1);
    // Spins by offset from the flip site: -(n-1)..-1 map to bits 0..n-2,
    // +1..+(n-1) to bits n-1..2n-3; the flip site itself is fixed to -1.
    const auto spin_at = [&](std::uint64_t cfg, int offset) -> int {
        if (offset == 0) return -1;
        const int bit = offset < 0 ? offset + order - 1 : order - 2 + offset;
        return (cfg >> bit) & 1 ? 1 : -1;
    };
    std::map<std::vector<int>, std::uint64_t> keys;
    for (std::uint64_t cfg = 0; cfg < (std::uint64_t{1} << window_bits); ++cfg) {
        std::vector<int> key;
        key.reserve(order - 1);
        for (int m = 2; m <= order; ++m) {
            int coeff = 0;
            for (int j = -m + 1; j <= 0; ++j) {
                int product = 1;
                for (int k = j; k < j + m; ++k) product *= spin_at(cfg, k);
                coeff += product;
            }
            key.push_back(coeff);
        }
        ++keys[key];
    }
    XiCount count;
    count.order = order;
    for (const auto& [key, mult] : keys) count.xi += mult * mult;
    return count;
}

/// Infinite-time average implied by a window pair count:
/// 1 - xi / 2^{4(n-1)}. Each of the two window vectors carries 2(n-1) free
/// bits, so the deficit denominator is 2^{4(n-1)}.
inline double xi_to_avg(std::uint64_t xi, int order) {
    if (order < 2) throw InputError("xi_to_avg: order must be >= 2");
    if (xi < 1) throw InputError("xi_to_avg: xi must be >= 1");
    return 1.0 - static_cast<double>(xi) / std::exp2(4.0 * (order - 1));
}

}  // namespace entsim
