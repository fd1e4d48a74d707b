#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "entsim/chain.hpp"
#include "entsim/density.hpp"
#include "entsim/errors.hpp"
#include "entsim/hamiltonian.hpp"

namespace entsim {

/// log(k!!) = log k + log(k-2) + ... Keeps double factorials finite far
/// beyond the range where k!! itself overflows.
inline double log_double_factorial(int k) {
    if (k < 0) throw InputError("log_double_factorial: negative argument");
    double s = 0.0;
    for (int j = k; j > 1; j -= 2) s += std::log(static_cast<double>(j));
    return s;
}

/// (2n-1)!!/(2n)!! evaluated in log space.
inline double double_factorial_ratio(int n) {
    return std::exp(log_double_factorial(2 * n - 1) - log_double_factorial(2 * n));
}

/// Entanglement of the uniform single-order chain: 1 - cos^{2n}(2 J t).
/// Exact whenever the interaction windows around a site do not wrap onto
/// each other, i.e. 2n - 1 <= N; independent of N in that regime.
inline double emw_uniform_single(int order, double coupling, double t) {
    if (order < 2) throw InputError("emw_uniform_single: order must be >= 2");
    const double c = std::cos(2.0 * coupling * t);
    return 1.0 - std::pow(c * c, order);
}

/// Infinite-time average for the uniform single-order chain:
/// 1 - (2n-1)!!/(2n)!!.
inline double avg_uniform_single(int order) {
    if (order < 2) throw InputError("avg_uniform_single: order must be >= 2");
    return 1.0 - double_factorial_ratio(order);
}

/// Large-n limit of avg_uniform_single: 1 - 1/sqrt(n pi).
inline double avg_uniform_single_asymptotic(int order) {
    return 1.0 - 1.0 / std::sqrt(order * std::numbers::pi);
}

/// Infinite-time standard deviation for the uniform single-order chain:
/// sqrt((4n-1)!!/(4n)!! - ((2n-1)!!/(2n)!!)^2).
inline double std_uniform_single(int order) {
    if (order < 2) throw InputError("std_uniform_single: order must be >= 2");
    const double second = std::exp(log_double_factorial(4 * order - 1) - log_double_factorial(4 * order));
    const double first = double_factorial_ratio(order);
    return std::sqrt(second - first * first);
}

/// Large-n limit of std_uniform_single: sqrt(1/sqrt(2 n pi) - 1/(n pi)).
inline double std_uniform_single_asymptotic(int order) {
    const double npi = order * std::numbers::pi;
    return std::sqrt(1.0 / std::sqrt(2.0 * npi) - 1.0 / npi);
}

/// Entanglement of the site-dependent single-order chain:
/// 1 - (1/N) sum_l A_l(t)^2 with A_l = prod_{k=l-n+1}^{l} cos(2 J_k t).
/// Same validity domain as emw_uniform_single: 2n - 1 <= N.
inline double emw_site_single(std::span<const double> couplings, int order, double t) {
    const int num_spins = static_cast<int>(couplings.size());
    if (num_spins < 2) throw InputError("emw_site_single: need at least 2 couplings");
    if (order < 2 || order > num_spins) throw InputError("emw_site_single: order out of range");
    const ChainGeometry geometry(num_spins);
    double sum = 0.0;
    for (int l = 1; l <= num_spins; ++l) {
        double a = 1.0;
        for (int k = l - order + 1; k <= l; ++k) a *= std::cos(2.0 * couplings[geometry.wrap(k) - 1] * t);
        sum += a * a;
    }
    return 1.0 - sum / num_spins;
}

/// Upper bound on the infinite-time average for site-dependent single-order
/// chains, 1 - 2^{-n}; an equality for generic coupling draws.
inline double bound_site_single(int order) {
    if (order < 2) throw InputError("bound_site_single: order must be >= 2");
    return 1.0 - std::exp2(-order);
}

/// How the entanglement evolution of a spec is evaluated analytically.
/// The cosine forms require the interaction windows around a site to fit
/// without wrapping (2n - 1 <= N); the reduced phase sum is exact for
/// every kind and order.
enum class EvolutionMethod { CosPower, SiteProduct, ReducedPhaseSum };

inline EvolutionMethod evolution_method_for(const HamiltonianSpec& spec) {
    const bool windows_wrap = 2 * spec.max_order - 1 > spec.geometry.num_spins;
    if (spec.kind == HamiltonianKind::UniformSingle && !windows_wrap) return EvolutionMethod::CosPower;
    if (spec.kind == HamiltonianKind::SiteSingle && !windows_wrap) return EvolutionMethod::SiteProduct;
    return EvolutionMethod::ReducedPhaseSum;
}

/// Eigenphase differences E_a - E_{flip_l(a)} over the basis strings with
/// a_l = 0, collapsed to distinct values with multiplicities. The
/// differences depend only on the sites within distance max_order - 1 of l,
/// so the enumeration runs over at most 2^{2(n-1)} window configurations
/// (all N - 1 remaining sites when the windows wrap).
struct FlipPhaseSpectrum {
    std::vector<double> rate;
    std::vector<double> weight;  // sums to 1

    /// B_l(t): the mean of exp(-i eps t) over the 2^{N-1} strings.
    Complex amplitude(double t) const {
        Complex b{0.0, 0.0};
        for (std::size_t i = 0; i < rate.size(); ++i) {
            const double phase = -rate[i] * t;
            b += weight[i] * Complex{std::cos(phase), std::sin(phase)};
        }
        return b;
    }
};

inline FlipPhaseSpectrum flip_phase_spectrum(const HamiltonianSpec& spec, int l, int max_window_bits = 24) {
    validate(spec);
    const ChainGeometry& geometry = spec.geometry;
    const int num_spins = geometry.num_spins;
    if (l < 1 || l > num_spins) throw InputError("flip_phase_spectrum: site out of range");
    const int n = spec.max_order;

    // Neighborhood sites carrying the dependence, mapped to window bits.
    std::vector<int> sites;
    if (2 * n - 1 <= num_spins) {
        for (int d = -(n - 1); d <= n - 1; ++d)
            if (d != 0) sites.push_back(geometry.wrap(l + d));
    } else {
        for (int s = 1; s <= num_spins; ++s)
            if (s != l) sites.push_back(s);
    }
    const int window_bits = static_cast<int>(sites.size());
    if (window_bits > max_window_bits)
        throw ResourceError("flip_phase_spectrum: window of " + std::to_string(window_bits) +
                            " sites exceeds the cap of " + std::to_string(max_window_bits));
    std::vector<int> bit_of_site(num_spins + 1, -1);
    for (int b = 0; b < window_bits; ++b) bit_of_site[sites[b]] = b;

    // One term per interaction window containing l. The flip difference is
    // twice the value of those terms, evaluated with s_l = -1.
    struct Term {
        std::uint64_t mask;
        double coeff;
        int order;
    };
    std::vector<Term> terms;
    for (const auto& [m, profile] : spec.couplings) {
        const double delta = spec.strengths.at(m);
        for (int j = 1; j <= num_spins; ++j) {
            if (((l - j) % num_spins + num_spins) % num_spins >= m) continue;  // window misses l
            const double coeff = 2.0 * delta * profile[j - 1];
            if (coeff == 0.0) continue;
            std::uint64_t mask = 0;
            for (int k = 0; k < m; ++k) {
                const int site = geometry.wrap(j + k);
                if (site != l) mask |= std::uint64_t{1} << bit_of_site[site];
            }
            terms.push_back({mask, coeff, m});
        }
    }

    std::vector<double> eps(std::size_t{1} << window_bits, 0.0);
    for (std::size_t cfg = 0; cfg < eps.size(); ++cfg) {
        double e = 0.0;
        for (const Term& term : terms) {
            const int sign = ((term.order - std::popcount(cfg & term.mask)) & 1) ? -1 : 1;
            e += sign * term.coeff;
        }
        eps[cfg] = e;
    }

    std::sort(eps.begin(), eps.end());
    FlipPhaseSpectrum spectrum;
    const double unit = 1.0 / static_cast<double>(eps.size());
    for (std::size_t i = 0; i < eps.size();) {
        std::size_t j = i;
        while (j < eps.size() && eps[j] == eps[i]) ++j;
        spectrum.rate.push_back(eps[i]);
        spectrum.weight.push_back(unit * static_cast<double>(j - i));
        i = j;
    }
    return spectrum;
}

/// E_MW(t) = 1 - (1/N) sum_l |B_l(t)|^2 evaluated from per-site flip-phase
/// spectra. Exact for every kind and order, and independent of N whenever
/// the windows do not wrap. Uniform kinds reuse a single spectrum.
class EmwPhaseSum {
public:
    static EmwPhaseSum build(const HamiltonianSpec& spec, int max_window_bits = 24) {
        EmwPhaseSum e;
        if (spec.is_uniform_kind()) {
            e.sites_.push_back(flip_phase_spectrum(spec, 1, max_window_bits));
        } else {
            for (int l = 1; l <= spec.geometry.num_spins; ++l)
                e.sites_.push_back(flip_phase_spectrum(spec, l, max_window_bits));
        }
        return e;
    }

    double value(double t) const {
        double sum = 0.0;
        for (const FlipPhaseSpectrum& s : sites_) sum += std::norm(s.amplitude(t));
        return 1.0 - sum / static_cast<double>(sites_.size());
    }

private:
    std::vector<FlipPhaseSpectrum> sites_;
};

/// Entanglement of the up-to-n chains via the reduced phase sum.
inline double emw_up_to(const HamiltonianSpec& spec, double t, int max_window_bits = 24) {
    return EmwPhaseSum::build(spec, max_window_bits).value(t);
}

/// Analytic bounds on the infinite-time average for the uniform up-to-n
/// chain, from the degeneracy-pair count xi in [2^{2(n-1)}, 6^{n-1}] and
/// deficit xi / 2^{4(n-1)}:
///   1 - (3/8)^{n-1} <= avg <= 1 - (1/4)^{n-1}.
inline std::pair<double, double> bounds_uniform_up_to(int order) {
    if (order < 2) throw InputError("bounds_uniform_up_to: order must be >= 2");
    return {1.0 - std::pow(3.0 / 8.0, order - 1), 1.0 - std::pow(0.25, order - 1)};
}

/// C^X(r, t) for the site-dependent single-order chain. Zero for r > n;
/// for r <= n and r < N - n + 1 the product-of-cosines expression applies.
/// In the wrap-dominated branch (r >= N - n + 1) no closed expression is
/// used and the value comes from the dense oracle, so N must stay within
/// the brute-force cap there.
inline double corr_x_site_single(std::span<const double> couplings, int order, int r, double t,
                                 int cap = kDefaultBruteForceCap) {
    const int num_spins = static_cast<int>(couplings.size());
    if (order < 2 || order > num_spins) throw InputError("corr_x_site_single: order out of range");
    if (r < 1 || r > num_spins / 2 - 1)
        throw InputError("corr_x_site_single: distance " + std::to_string(r) + " out of range");
    if (r > order) return 0.0;

    const ChainGeometry geometry(num_spins);
    const auto cos_run = [&](int first, int last) {
        double p = 1.0;
        for (int s = first; s <= last; ++s) p *= std::cos(2.0 * couplings[geometry.wrap(s) - 1] * t);
        return p;
    };

    if (r < num_spins - order + 1) {
        const double joint = cos_run(num_spins - order + 2, num_spins - order + r + 1) * cos_run(2, r + 1);
        const double a1 = cos_run(num_spins - order + 2, num_spins + 1);
        const double a2 = cos_run(r - order + 2, r + 1);
        return joint - a1 * a2;
    }

    const HamiltonianSpec spec = site_single(num_spins, order, std::vector<double>(couplings.begin(), couplings.end()));
    return correlation(evolve(spec, t, cap), PauliAxis::X, r);
}

}  // namespace entsim
