#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "entsim/chain.hpp"
#include "entsim/errors.hpp"
#include "entsim/parallel.hpp"
#include "entsim/state.hpp"

namespace entsim {

/// The four Ising-type families: neighboring n-body interactions only
/// (Single) or all orders 2..n (UpTo), with uniform or site-dependent
/// coupling constants.
enum class HamiltonianKind {
    UniformSingle,
    SiteSingle,
    UniformUpTo,
    SiteUpTo,
};

inline const char* to_string(HamiltonianKind kind) {
    switch (kind) {
        case HamiltonianKind::UniformSingle: return "uniform-single";
        case HamiltonianKind::SiteSingle: return "site-single";
        case HamiltonianKind::UniformUpTo: return "uniform-up-to";
        case HamiltonianKind::SiteUpTo: return "site-up-to";
    }
    return "?";
}

/// Interaction strengths Delta_m for m = 2..n. Zero entries are allowed and
/// mean the order is absent.
struct StrengthSchedule {
    std::map<int, double> delta;

    /// Delta_m = 2 eps / m.
    static StrengthSchedule polynomial(int max_order, double eps) {
        StrengthSchedule s;
        for (int m = 2; m <= max_order; ++m) s.delta[m] = 2.0 * eps / m;
        return s;
    }

    /// Delta_m = 2 eps * base^{-m}. The decay base is configurable; the
    /// default halves the strength per order.
    static StrengthSchedule exponential(int max_order, double eps, double base = 2.0) {
        StrengthSchedule s;
        for (int m = 2; m <= max_order; ++m) s.delta[m] = 2.0 * eps * std::pow(base, -m);
        return s;
    }
};

/// One of the four Ising-type Hamiltonians, fully diagonal in the
/// computational basis.
///
/// couplings maps interaction order m to the per-site constants J_j^{(m)}
/// (j = 1..N stored 0-based). Single kinds carry exactly the order n with
/// implicit strength 1; UpTo kinds carry orders 2..n weighted by Delta_m.
/// fields holds the single-spin terms b_j, which commute with everything
/// and must not affect any entanglement quantity.
struct HamiltonianSpec {
    HamiltonianKind kind = HamiltonianKind::UniformSingle;
    ChainGeometry geometry;
    int max_order = 2;
    std::map<int, std::vector<double>> couplings;
    std::map<int, double> strengths;
    std::vector<double> fields;

    bool is_uniform_kind() const {
        return kind == HamiltonianKind::UniformSingle || kind == HamiltonianKind::UniformUpTo;
    }
    bool is_up_to_kind() const {
        return kind == HamiltonianKind::UniformUpTo || kind == HamiltonianKind::SiteUpTo;
    }
};

namespace detail {

inline void check_profile(const std::vector<double>& profile, int num_spins, int order) {
    if (static_cast<int>(profile.size()) != num_spins)
        throw InputError("HamiltonianSpec: coupling profile for order " + std::to_string(order) +
                         " has size " + std::to_string(profile.size()) + ", expected " + std::to_string(num_spins));
    for (double j : profile)
        if (!std::isfinite(j)) throw InputError("HamiltonianSpec: non-finite coupling constant");
}

}  // namespace detail

inline void validate(const HamiltonianSpec& spec) {
    const int n = spec.max_order;
    const int num_spins = spec.geometry.num_spins;
    if (num_spins < 2) throw InputError("HamiltonianSpec: need at least 2 spins");
    if (n < 2 || n > num_spins)
        throw InputError("HamiltonianSpec: interaction order " + std::to_string(n) +
                         " out of range 2.." + std::to_string(num_spins));
    if (spec.is_up_to_kind()) {
        for (int m = 2; m <= n; ++m) {
            auto c = spec.couplings.find(m);
            if (c == spec.couplings.end())
                throw InputError("HamiltonianSpec: missing coupling profile for order " + std::to_string(m));
            detail::check_profile(c->second, num_spins, m);
            auto d = spec.strengths.find(m);
            if (d == spec.strengths.end())
                throw InputError("HamiltonianSpec: missing strength for order " + std::to_string(m));
            if (!std::isfinite(d->second) || d->second < 0.0)
                throw InputError("HamiltonianSpec: strength Delta_" + std::to_string(m) + " must be finite and >= 0");
        }
        if (spec.couplings.size() != static_cast<std::size_t>(n - 1))
            throw InputError("HamiltonianSpec: up-to kinds carry exactly the orders 2..n");
    } else {
        if (spec.couplings.size() != 1 || !spec.couplings.count(n))
            throw InputError("HamiltonianSpec: single kinds carry exactly the order n");
        detail::check_profile(spec.couplings.at(n), num_spins, n);
    }
    if (!spec.fields.empty()) {
        if (static_cast<int>(spec.fields.size()) != num_spins)
            throw InputError("HamiltonianSpec: local fields must have one entry per site");
        for (double b : spec.fields)
            if (!std::isfinite(b)) throw InputError("HamiltonianSpec: non-finite local field");
    }
    if (spec.is_uniform_kind()) {
        for (const auto& [m, profile] : spec.couplings)
            for (double j : profile)
                if (j != profile.front())
                    throw InputError("HamiltonianSpec: uniform kind with a site-dependent profile at order " + std::to_string(m));
    }
}

/// h_bar_n with J_j = J for every site.
inline HamiltonianSpec uniform_single(int num_spins, int order, double coupling) {
    HamiltonianSpec spec;
    spec.kind = HamiltonianKind::UniformSingle;
    spec.geometry = ChainGeometry(num_spins);
    spec.max_order = order;
    spec.couplings[order] = std::vector<double>(num_spins, coupling);
    spec.strengths[order] = 1.0;
    validate(spec);
    return spec;
}

/// h_n with site-dependent couplings.
inline HamiltonianSpec site_single(int num_spins, int order, std::vector<double> couplings) {
    HamiltonianSpec spec;
    spec.kind = HamiltonianKind::SiteSingle;
    spec.geometry = ChainGeometry(num_spins);
    spec.max_order = order;
    spec.couplings[order] = std::move(couplings);
    spec.strengths[order] = 1.0;
    validate(spec);
    return spec;
}

/// H_bar_n: orders 2..n, uniform coupling J, weighted by the schedule.
inline HamiltonianSpec uniform_up_to(int num_spins, int order, double coupling, StrengthSchedule schedule) {
    HamiltonianSpec spec;
    spec.kind = HamiltonianKind::UniformUpTo;
    spec.geometry = ChainGeometry(num_spins);
    spec.max_order = order;
    for (int m = 2; m <= order; ++m) spec.couplings[m] = std::vector<double>(num_spins, coupling);
    spec.strengths = std::move(schedule.delta);
    validate(spec);
    return spec;
}

/// H_n: orders 2..n with per-order site-dependent couplings.
inline HamiltonianSpec site_up_to(int num_spins, int order, std::map<int, std::vector<double>> couplings,
                                  StrengthSchedule schedule) {
    HamiltonianSpec spec;
    spec.kind = HamiltonianKind::SiteUpTo;
    spec.geometry = ChainGeometry(num_spins);
    spec.max_order = order;
    spec.couplings = std::move(couplings);
    spec.strengths = std::move(schedule.delta);
    validate(spec);
    return spec;
}

inline HamiltonianSpec with_fields(HamiltonianSpec spec, std::vector<double> fields) {
    spec.fields = std::move(fields);
    validate(spec);
    return spec;
}

/// Eigenenergy of the basis string a:
///   E_a = sum_m Delta_m sum_j J_j^{(m)} prod_{k=j}^{j+m-1} (2 a_k - 1)
///       + sum_j b_j (2 a_j - 1).
/// Summation order is fixed (orders ascending, sites ascending) so the
/// result is bitwise reproducible.
inline double eigenenergy(const HamiltonianSpec& spec, BasisIndex a) {
    const ChainGeometry& geometry = spec.geometry;
    const int num_spins = geometry.num_spins;
    double e = 0.0;
    for (const auto& [m, profile] : spec.couplings) {
        const double delta = spec.strengths.at(m);
        double order_sum = 0.0;
        for (int j = 1; j <= num_spins; ++j)
            order_sum += profile[j - 1] * spin_product(a, j, m, geometry);
        e += delta * order_sum;
    }
    for (std::size_t j = 0; j < spec.fields.size(); ++j)
        e += spec.fields[j] * spin_value(a, static_cast<int>(j) + 1);
    return e;
}

/// All 2^N eigenenergies, indexed by basis string.
inline std::vector<double> eigenphase_table(const HamiltonianSpec& spec, int cap = kDefaultBruteForceCap,
                                            int threads = 0) {
    validate(spec);
    const int num_spins = spec.geometry.num_spins;
    if (num_spins > cap)
        throw ResourceError("eigenphase_table: " + std::to_string(num_spins) + " spins exceed the brute-force cap " +
                            std::to_string(cap));
    std::vector<double> table(std::size_t{1} << num_spins);
    parallel_for(table.size(), [&](std::size_t a) { table[a] = eigenenergy(spec, a); }, threads);
    return table;
}

/// State at time t starting from |+>^N: amplitude 2^{-N/2} exp(-i E_a t).
inline StateVector evolve(const HamiltonianSpec& spec, double t, int cap = kDefaultBruteForceCap, int threads = 0) {
    if (!std::isfinite(t)) throw InputError("evolve: time must be finite");
    const std::vector<double> table = eigenphase_table(spec, cap, threads);
    StateVector psi = zero_state_vector(spec.geometry.num_spins);
    const double a = std::exp2(-0.5 * spec.geometry.num_spins);
    parallel_for(psi.dim(), [&](std::size_t i) { psi.amp[i] = std::polar(a, -table[i] * t); }, threads);
    return psi;
}

}  // namespace entsim
