#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "entsim/chain.hpp"
#include "entsim/hamiltonian.hpp"
#include "entsim/random_states.hpp"
#include "entsim/state.hpp"

// Brute-force oracles and small statistics helpers, kept independent of the
// library code paths they check.
namespace testsupport {

using entsim::BasisIndex;
using entsim::Complex;
using entsim::HamiltonianSpec;
using entsim::StateVector;

/// Eigenenergy by direct term-by-term summation, independent of
/// entsim::eigenenergy / spin_product.
inline double eigenenergy_oracle(const HamiltonianSpec& spec, BasisIndex a) {
    const int n = spec.geometry.num_spins;
    double e = 0.0;
    for (const auto& [m, profile] : spec.couplings) {
        const double delta = spec.strengths.at(m);
        for (int j = 1; j <= n; ++j) {
            int product = 1;
            for (int k = 0; k < m; ++k) {
                const int site = (j - 1 + k) % n + 1;
                product *= ((a >> (site - 1)) & 1) ? 1 : -1;
            }
            e += delta * profile[j - 1] * product;
        }
    }
    for (std::size_t j = 0; j < spec.fields.size(); ++j)
        e += spec.fields[j] * (((a >> j) & 1) ? 1.0 : -1.0);
    return e;
}

/// Meyer-Wallach by explicit full density-matrix partial traces.
inline double meyer_wallach_oracle(const StateVector& psi) {
    const int n = psi.num_spins;
    double total = 0.0;
    for (int l = 1; l <= n; ++l) {
        const BasisIndex mask = BasisIndex{1} << (l - 1);
        Complex r00{}, r01{}, r11{};
        for (BasisIndex a = 0; a < psi.dim(); ++a) {
            if (a & mask) continue;
            r00 += psi.amp[a] * std::conj(psi.amp[a]);
            r11 += psi.amp[a | mask] * std::conj(psi.amp[a | mask]);
            r01 += psi.amp[a] * std::conj(psi.amp[a | mask]);
        }
        const double purity = std::norm(r00) + std::norm(r11) + 2.0 * std::norm(r01);
        total += 1.0 - purity;
    }
    return 2.0 / n * total;
}

inline double mean_of(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

inline double stddev_of(std::span<const double> v) {
    const double m = mean_of(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(v.size()));
}

/// One-sample Kolmogorov-Smirnov statistic against the uniform CDF on [0,1].
inline double ks_uniform01(std::vector<double> samples) {
    std::sort(samples.begin(), samples.end());
    const double inv = 1.0 / static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double cdf = samples[i];
        d = std::max(d, std::abs((i + 1) * inv - cdf));
        d = std::max(d, std::abs(cdf - i * inv));
    }
    return d;
}

/// Two-sample Kolmogorov-Smirnov statistic.
inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j])
            ++i;
        else
            ++j;
        const double fa = static_cast<double>(i) / a.size();
        const double fb = static_cast<double>(j) / b.size();
        d = std::max(d, std::abs(fa - fb));
    }
    return d;
}

/// Random unitary via modified Gram-Schmidt on a complex Gaussian matrix.
/// Returns row-major dim x dim entries.
inline std::vector<Complex> random_unitary(int dim, entsim::SeededSampler& sampler) {
    std::vector<Complex> u(static_cast<std::size_t>(dim) * dim);
    for (Complex& c : u) c = sampler.complex_gaussian();
    // Orthonormalize columns.
    for (int c = 0; c < dim; ++c) {
        for (int prev = 0; prev < c; ++prev) {
            Complex dot{};
            for (int r = 0; r < dim; ++r) dot += std::conj(u[r * dim + prev]) * u[r * dim + c];
            for (int r = 0; r < dim; ++r) u[r * dim + c] -= dot * u[r * dim + prev];
        }
        double norm = 0.0;
        for (int r = 0; r < dim; ++r) norm += std::norm(u[r * dim + c]);
        norm = std::sqrt(norm);
        for (int r = 0; r < dim; ++r) u[r * dim + c] /= norm;
    }
    return u;
}

inline StateVector apply_unitary(const std::vector<Complex>& u, const StateVector& psi) {
    const int dim = static_cast<int>(psi.dim());
    StateVector out = psi;
    for (int r = 0; r < dim; ++r) {
        Complex acc{};
        for (int c = 0; c < dim; ++c) acc += u[static_cast<std::size_t>(r) * dim + c] * psi.amp[c];
        out.amp[r] = acc;
    }
    return out;
}

/// Haar-random single-qubit unitary (row-major 2x2).
inline std::array<Complex, 4> random_single_qubit_unitary(entsim::SeededSampler& sampler) {
    const std::vector<Complex> u = random_unitary(2, sampler);
    return {u[0], u[1], u[2], u[3]};
}

}  // namespace testsupport
