#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "entsim/errors.hpp"

namespace entsim {

/// Computational-basis label for an N-spin chain.
///
/// Bit convention, used consistently everywhere: site i (1-based) occupies
/// bit (i - 1), so site 1 is the least significant bit. Bit value a_i maps
/// to the sigma^Z eigenvalue s_i = 2 a_i - 1 in {-1, +1}.
using BasisIndex = std::uint64_t;

/// Default cap on brute-force state-vector work (2^N amplitudes).
inline constexpr int kDefaultBruteForceCap = 14;

/// Periodic chain of N spin-1/2 sites. Site indices are 1-based and
/// interpreted modulo N.
struct ChainGeometry {
    int num_spins = 0;

    ChainGeometry() = default;
    explicit ChainGeometry(int n) : num_spins(n) {
        if (n < 2) throw InputError("ChainGeometry: need at least 2 spins, got " + std::to_string(n));
    }

    /// Maps any integer site label onto 1..N.
    int wrap(int j) const {
        const int n = num_spins;
        return ((j - 1) % n + n) % n + 1;
    }
};

inline int bit_of(BasisIndex a, int site) {
    return static_cast<int>((a >> (site - 1)) & 1u);
}

/// sigma^Z eigenvalue of the given site: 2 a_i - 1.
inline int spin_value(BasisIndex a, int site) {
    return 2 * bit_of(a, site) - 1;
}

/// Bit mask covering the m consecutive sites starting at j (periodic wrap).
inline BasisIndex window_mask(const ChainGeometry& geometry, int j, int m) {
    BasisIndex mask = 0;
    for (int k = 0; k < m; ++k) mask |= BasisIndex{1} << (geometry.wrap(j + k) - 1);
    return mask;
}

/// Product of spin values over the m consecutive sites starting at j:
/// prod_{k=j}^{j+m-1} (2 a_k - 1), indices wrapping periodically.
inline int spin_product(BasisIndex a, int j, int m, const ChainGeometry& geometry) {
    const int n = geometry.num_spins;
    if (j < 1 || j > n) throw InputError("spin_product: site " + std::to_string(j) + " out of range 1.." + std::to_string(n));
    if (m < 2 || m > n) throw InputError("spin_product: order " + std::to_string(m) + " out of range 2.." + std::to_string(n));
    const BasisIndex mask = window_mask(geometry, j, m);
    // Each set bit contributes +1, each clear bit -1.
    const int minus_count = m - std::popcount(a & mask);
    return (minus_count & 1) ? -1 : +1;
}

}  // namespace entsim
