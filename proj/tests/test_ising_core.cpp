#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "entsim/chain.hpp"
#include "entsim/density.hpp"
#include "entsim/hamiltonian.hpp"
#include "entsim/random_states.hpp"
#include "support.hpp"

using namespace entsim;

TEST_CASE("spin_product basics") {
    const ChainGeometry geometry(4);

    // a = 0: every factor is -1.
    CHECK(spin_product(0, 1, 2, geometry) == 1);
    CHECK(spin_product(0, 3, 2, geometry) == 1);
    CHECK(spin_product(0, 1, 3, geometry) == -1);
    CHECK(spin_product(0, 4, 3, geometry) == -1);

    // (a_1..a_4) = (1,0,0,0): wrap window at j=4 covers sites 4,1.
    const BasisIndex a = 0b0001;
    CHECK(spin_product(a, 4, 2, geometry) == -1);

    CHECK_THROWS_AS(spin_product(0, 0, 2, geometry), InputError);
    CHECK_THROWS_AS(spin_product(0, 5, 2, geometry), InputError);
    CHECK_THROWS_AS(spin_product(0, 1, 1, geometry), InputError);
    CHECK_THROWS_AS(spin_product(0, 1, 5, geometry), InputError);
}

TEST_CASE("site wrap arithmetic") {
    const ChainGeometry geometry(6);
    CHECK(geometry.wrap(1) == 1);
    CHECK(geometry.wrap(6) == 6);
    CHECK(geometry.wrap(7) == 1);
    CHECK(geometry.wrap(0) == 6);
    CHECK(geometry.wrap(-4) == 2);
    CHECK_THROWS_AS(ChainGeometry(1), InputError);
}

TEST_CASE("eigenenergy on small chains") {
    // Uniform order-2 chain with N=2: both windows cover the same pair.
    const HamiltonianSpec h2 = uniform_single(2, 2, 1.0);
    CHECK(eigenenergy(h2, 0) == 2.0);
    CHECK(eigenenergy(h2, 0b01) == -2.0);
    CHECK(eigenenergy(h2, 0b10) == -2.0);
    CHECK(eigenenergy(h2, 0b11) == 2.0);

    // Up-to-3 chain, all strengths 1: oracle-summed expected value.
    const HamiltonianSpec h3 = uniform_up_to(6, 3, 1.0, StrengthSchedule{{{2, 1.0}, {3, 1.0}}});
    CHECK(eigenenergy(h3, 0) == testsupport::eigenenergy_oracle(h3, 0));
    CHECK(eigenenergy(h3, 0) == 0.0);  // 6 pair terms +1, 6 triple terms -1

    entsim::SeededSampler sampler(99);
    for (int trial = 0; trial < 50; ++trial) {
        const BasisIndex a = static_cast<BasisIndex>(sampler.uniform() * 64.0);
        CHECK(eigenenergy(h3, a) == Catch::Approx(testsupport::eigenenergy_oracle(h3, a)).margin(1e-13));
    }
}

TEST_CASE("eigenphase_table") {
    const HamiltonianSpec h2 = uniform_single(2, 2, 1.0);
    const std::vector<double> table = eigenphase_table(h2);
    REQUIRE(table.size() == 4);
    CHECK(table == std::vector<double>{2.0, -2.0, -2.0, 2.0});

    const HamiltonianSpec zero = uniform_single(4, 2, 0.0);
    for (double e : eigenphase_table(zero)) CHECK(e == 0.0);

    // Fields only: energies are sums of single-spin terms.
    HamiltonianSpec fields_only = with_fields(uniform_single(3, 2, 0.0), {0.5, -1.0, 2.0});
    const std::vector<double> ft = eigenphase_table(fields_only);
    for (BasisIndex a = 0; a < 8; ++a) {
        double expected = 0.0;
        expected += ((a >> 0) & 1) ? 0.5 : -0.5;
        expected += ((a >> 1) & 1) ? -1.0 : 1.0;
        expected += ((a >> 2) & 1) ? 2.0 : -2.0;
        CHECK(ft[a] == Catch::Approx(expected).margin(1e-15));
    }

    CHECK_THROWS_AS(eigenphase_table(uniform_single(12, 2, 1.0), /*cap=*/10), ResourceError);
}

TEST_CASE("evolve basics") {
    const HamiltonianSpec spec = uniform_single(4, 2, 1.0);

    const StateVector at_zero = evolve(spec, 0.0);
    for (const Complex& c : at_zero.amp) {
        CHECK(c.real() == Catch::Approx(0.25).margin(1e-15));
        CHECK(c.imag() == 0.0);
    }

    // Period of the uniform single-order dynamics: E_MW back to zero.
    const double period = std::numbers::pi / 2.0;
    CHECK(meyer_wallach(evolve(spec, period)) == Catch::Approx(0.0).margin(1e-12));

    for (double t : {0.1, 1.7, 23.0}) CHECK(evolve(spec, t).norm() == Catch::Approx(1.0).margin(1e-12));

    CHECK_THROWS_AS(evolve(spec, std::nan("")), InputError);
}

TEST_CASE("global phase shift leaves entanglement invariant") {
    const HamiltonianSpec base = uniform_up_to(6, 3, 1.0, StrengthSchedule::polynomial(3, 0.3));
    const std::vector<double> table = eigenphase_table(base);
    for (double t : {0.4, 1.3}) {
        StateVector psi = zero_state_vector(6);
        StateVector psi_shift = zero_state_vector(6);
        const double amp = std::exp2(-3.0);
        for (std::size_t a = 0; a < psi.dim(); ++a) {
            psi.amp[a] = std::polar(amp, -table[a] * t);
            psi_shift.amp[a] = std::polar(amp, -(table[a] + 17.3) * t);
        }
        CHECK(meyer_wallach(psi_shift) == Catch::Approx(meyer_wallach(psi)).margin(1e-12));
        for (int l = 1; l <= 6; ++l) {
            const ReducedDensity1 a = reduce_one(psi, l);
            const ReducedDensity1 b = reduce_one(psi_shift, l);
            for (int i = 0; i < 4; ++i) CHECK(std::abs(a.m[i] - b.m[i]) < 1e-12);
        }
        for (int r = 1; r <= 2; ++r)
            CHECK(correlation(psi_shift, PauliAxis::X, r) ==
                  Catch::Approx(correlation(psi, PauliAxis::X, r)).margin(1e-12));
    }
}

TEST_CASE("local fields do not affect entanglement") {
    SeededSampler sampler(7);
    std::vector<double> fields(8);
    for (double& b : fields) b = sampler.gaussian(0.0, 2.0);
    const HamiltonianSpec bare = uniform_single(8, 3, 0.9);
    const HamiltonianSpec dressed = with_fields(bare, fields);
    for (double t : {0.3, 0.9, 2.2}) {
        CHECK(meyer_wallach(evolve(dressed, t)) == Catch::Approx(meyer_wallach(evolve(bare, t))).margin(1e-10));
    }
}

TEST_CASE("translation covariance of uniform spectra") {
    const HamiltonianSpec spec = uniform_up_to(6, 3, 0.7, StrengthSchedule::polynomial(3, 0.4));
    std::vector<double> table = eigenphase_table(spec);
    // Cyclic shift of basis labels: site i -> site i+1.
    std::vector<double> shifted(table.size());
    for (BasisIndex a = 0; a < table.size(); ++a) {
        const BasisIndex rotated = ((a << 1) | (a >> 5)) & 0b111111;
        shifted[rotated] = table[a];
    }
    std::sort(table.begin(), table.end());
    std::sort(shifted.begin(), shifted.end());
    for (std::size_t i = 0; i < table.size(); ++i) CHECK(table[i] == Catch::Approx(shifted[i]).margin(1e-12));
}

TEST_CASE("evolution composes over time") {
    const HamiltonianSpec spec = site_single(6, 3, {0.9, 1.2, -0.4, 1.0, 0.3, -1.1});
    const double t1 = 0.7, t2 = 1.9;
    const StateVector a = evolve(spec, t1);
    const StateVector b = evolve(spec, t2);
    const StateVector c = evolve(spec, t1 + t2);
    const double scale = std::exp2(3.0);  // undo one factor of 2^{-N/2}
    for (std::size_t i = 0; i < c.dim(); ++i) {
        const Complex product = a.amp[i] * b.amp[i] * scale;
        CHECK(std::abs(product - c.amp[i]) < 1e-12);
    }
}

TEST_CASE("complement flip consistency of the phase table") {
    const HamiltonianSpec spec = site_up_to(5, 3, {{2, {0.3, 1.0, -0.2, 0.8, 1.1}}, {3, {1.0, 0.5, 0.2, -0.7, 0.4}}},
                                            StrengthSchedule::polynomial(3, 0.25));
    const std::vector<double> table = eigenphase_table(spec);
    const BasisIndex all = (BasisIndex{1} << 5) - 1;
    for (BasisIndex a = 0; a < table.size(); ++a)
        CHECK(table[a ^ all] == Catch::Approx(eigenenergy(spec, a ^ all)).margin(1e-13));
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(uniform_single(4, 1, 1.0), InputError);
    CHECK_THROWS_AS(uniform_single(4, 5, 1.0), InputError);
    CHECK_THROWS_AS(site_single(4, 2, {1.0, 2.0}), InputError);  // profile too short
    CHECK_THROWS_AS(with_fields(uniform_single(4, 2, 1.0), {1.0}), InputError);
    CHECK_THROWS_AS(site_up_to(4, 3, {{2, {1, 1, 1, 1}}}, StrengthSchedule::polynomial(3, 0.1)), InputError);

    StrengthSchedule negative;
    negative.delta = {{2, 1.0}, {3, -0.5}};
    CHECK_THROWS_AS(uniform_up_to(4, 3, 1.0, negative), InputError);

    // Zero strengths are allowed and mean the order is absent.
    StrengthSchedule sparse;
    sparse.delta = {{2, 0.0}, {3, 1.0}};
    CHECK_NOTHROW(uniform_up_to(6, 3, 1.0, sparse));
}
