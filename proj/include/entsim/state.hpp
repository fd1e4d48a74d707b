#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "entsim/chain.hpp"
#include "entsim/errors.hpp"

namespace entsim {

using Complex = std::complex<double>;

/// Dense state vector over the 2^N computational basis strings.
struct StateVector {
    int num_spins = 0;
    std::vector<Complex> amp;

    std::size_t dim() const { return amp.size(); }

    double norm_squared() const {
        double s = 0.0;
        for (const Complex& c : amp) s += std::norm(c);
        return s;
    }

    double norm() const { return std::sqrt(norm_squared()); }
};

inline StateVector zero_state_vector(int num_spins) {
    StateVector psi;
    psi.num_spins = num_spins;
    psi.amp.assign(std::size_t{1} << num_spins, Complex{0.0, 0.0});
    return psi;
}

/// |+>^N, the uniform superposition with amplitude 2^{-N/2}.
inline StateVector plus_state(int num_spins) {
    StateVector psi = zero_state_vector(num_spins);
    const double a = std::exp2(-0.5 * num_spins);
    for (Complex& c : psi.amp) c = a;
    return psi;
}

inline StateVector basis_state(int num_spins, BasisIndex a) {
    StateVector psi = zero_state_vector(num_spins);
    if (a >= psi.dim()) throw InputError("basis_state: index out of range");
    psi.amp[a] = 1.0;
    return psi;
}

/// (|0...0> + |1...1>)/sqrt(2).
inline StateVector ghz_state(int num_spins) {
    StateVector psi = zero_state_vector(num_spins);
    const double a = 1.0 / std::sqrt(2.0);
    psi.amp.front() = a;
    psi.amp.back() = a;
    return psi;
}

/// Product state from per-site one-qubit amplitudes (alpha_i |0> + beta_i |1>).
inline StateVector product_state(std::span<const std::array<Complex, 2>> site_amps) {
    const int n = static_cast<int>(site_amps.size());
    if (n < 1) throw InputError("product_state: need at least one site");
    StateVector psi = zero_state_vector(n);
    for (BasisIndex a = 0; a < psi.dim(); ++a) {
        Complex c{1.0, 0.0};
        for (int i = 1; i <= n; ++i) c *= site_amps[i - 1][bit_of(a, i)];
        psi.amp[a] = c;
    }
    return psi;
}

/// Applies a one-qubit operator (row-major 2x2) to the given site.
inline void apply_single_site(StateVector& psi, int site, const std::array<Complex, 4>& u) {
    if (site < 1 || site > psi.num_spins) throw InputError("apply_single_site: site out of range");
    const BasisIndex mask = BasisIndex{1} << (site - 1);
    for (BasisIndex a = 0; a < psi.dim(); ++a) {
        if (a & mask) continue;
        const Complex lo = psi.amp[a];
        const Complex hi = psi.amp[a | mask];
        psi.amp[a] = u[0] * lo + u[1] * hi;
        psi.amp[a | mask] = u[2] * lo + u[3] * hi;
    }
}

}  // namespace entsim
