#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "entsim/errors.hpp"
#include "entsim/state.hpp"

namespace entsim {

/// Small dense Hermitian matrix, row-major.
template <int Dim>
struct DensityMatrix {
    std::array<Complex, Dim * Dim> m{};

    static constexpr int dim() { return Dim; }

    Complex& operator()(int r, int c) { return m[r * Dim + c]; }
    const Complex& operator()(int r, int c) const { return m[r * Dim + c]; }

    double trace_real() const {
        double t = 0.0;
        for (int i = 0; i < Dim; ++i) t += (*this)(i, i).real();
        return t;
    }

    /// tr rho^2 for Hermitian rho: the squared Frobenius norm.
    double purity() const {
        double p = 0.0;
        for (const Complex& c : m) p += std::norm(c);
        return p;
    }
};

/// One-site reduced density matrix. Basis order (|0>, |1>) follows the bit
/// value, so the sigma^Z expectation is rho_11 - rho_00.
using ReducedDensity1 = DensityMatrix<2>;

/// Two-site reduced density matrix for sites (l, l2); the row index is
/// 2 a_l + a_{l2}.
using ReducedDensity2 = DensityMatrix<4>;

/// Partial trace over all sites except l.
inline ReducedDensity1 reduce_one(const StateVector& psi, int l) {
    if (l < 1 || l > psi.num_spins) throw InputError("reduce_one: site " + std::to_string(l) + " out of range");
    const BasisIndex mask = BasisIndex{1} << (l - 1);
    ReducedDensity1 rho;
    for (BasisIndex a = 0; a < psi.dim(); ++a) {
        if (a & mask) continue;
        const Complex lo = psi.amp[a];
        const Complex hi = psi.amp[a | mask];
        rho(0, 0) += lo * std::conj(lo);
        rho(1, 1) += hi * std::conj(hi);
        rho(0, 1) += lo * std::conj(hi);
    }
    rho(1, 0) = std::conj(rho(0, 1));
    return rho;
}

/// Partial trace over all sites except {l, l2}.
inline ReducedDensity2 reduce_two(const StateVector& psi, int l, int l2) {
    if (l < 1 || l > psi.num_spins || l2 < 1 || l2 > psi.num_spins)
        throw InputError("reduce_two: site out of range");
    if (l == l2) throw InputError("reduce_two: sites must be distinct");
    const BasisIndex m1 = BasisIndex{1} << (l - 1);
    const BasisIndex m2 = BasisIndex{1} << (l2 - 1);
    ReducedDensity2 rho;
    for (BasisIndex a = 0; a < psi.dim(); ++a) {
        if (a & (m1 | m2)) continue;
        Complex block[4] = {
            psi.amp[a],
            psi.amp[a | m2],
            psi.amp[a | m1],
            psi.amp[a | m1 | m2],
        };
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) rho(r, c) += block[r] * std::conj(block[c]);
    }
    return rho;
}

/// S_L(rho) = 1 - tr rho^2.
template <int Dim>
double linear_entropy(const DensityMatrix<Dim>& rho) {
    return 1.0 - rho.purity();
}

/// Meyer-Wallach measure: (2/N) sum_i S_L(rho_i). Requires a normalized
/// state (norm error above 1e-8 is rejected).
inline double meyer_wallach(const StateVector& psi) {
    if (std::abs(psi.norm_squared() - 1.0) > 1e-8)
        throw InputError("meyer_wallach: state is not normalized");
    double total = 0.0;
    for (int l = 1; l <= psi.num_spins; ++l) total += linear_entropy(reduce_one(psi, l));
    return 2.0 / psi.num_spins * total;
}

enum class PauliAxis { X, Y, Z };

inline const char* to_string(PauliAxis axis) {
    switch (axis) {
        case PauliAxis::X: return "X";
        case PauliAxis::Y: return "Y";
        case PauliAxis::Z: return "Z";
    }
    return "?";
}

/// Pauli operator in the (|0>, |1>) basis with sigma^Z |a> = (2a - 1)|a>.
inline DensityMatrix<2> pauli_matrix(PauliAxis axis) {
    DensityMatrix<2> p;
    const Complex i{0.0, 1.0};
    switch (axis) {
        case PauliAxis::X:
            p(0, 1) = 1.0;
            p(1, 0) = 1.0;
            break;
        case PauliAxis::Y:
            p(0, 1) = i;
            p(1, 0) = -i;
            break;
        case PauliAxis::Z:
            p(0, 0) = -1.0;
            p(1, 1) = 1.0;
            break;
    }
    return p;
}

inline double single_site_expectation(const ReducedDensity1& rho, PauliAxis axis) {
    const DensityMatrix<2> p = pauli_matrix(axis);
    Complex t{0.0, 0.0};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) t += rho(r, c) * p(c, r);
    return t.real();
}

/// tr rho (W tensor W) over the two retained sites.
inline double two_site_expectation(const ReducedDensity2& rho, PauliAxis axis) {
    const DensityMatrix<2> p = pauli_matrix(axis);
    Complex t{0.0, 0.0};
    for (int r1 = 0; r1 < 2; ++r1)
        for (int r2 = 0; r2 < 2; ++r2)
            for (int c1 = 0; c1 < 2; ++c1)
                for (int c2 = 0; c2 < 2; ++c2)
                    t += rho(2 * r1 + r2, 2 * c1 + c2) * p(c1, r1) * p(c2, r2);
    return t.real();
}

/// Two-point correlation between site 1 and site r+1:
/// C^W(r,t) = tr rho_{1,r+1} W_1 W_{r+1} - (tr rho_1 W)(tr rho_{r+1} W).
inline double correlation(const StateVector& psi, PauliAxis axis, int r) {
    const int num_spins = psi.num_spins;
    if (r < 1 || r > num_spins / 2 - 1)
        throw InputError("correlation: distance " + std::to_string(r) + " out of range 1.." +
                         std::to_string(num_spins / 2 - 1));
    const ReducedDensity2 rho2 = reduce_two(psi, 1, r + 1);
    const double joint = two_site_expectation(rho2, axis);
    const double e1 = single_site_expectation(reduce_one(psi, 1), axis);
    const double e2 = single_site_expectation(reduce_one(psi, r + 1), axis);
    return joint - e1 * e2;
}

}  // namespace entsim
