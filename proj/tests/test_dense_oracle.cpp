#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "entsim/density.hpp"
#include "entsim/hamiltonian.hpp"
#include "entsim/random_states.hpp"
#include "entsim/state.hpp"
#include "support.hpp"

using namespace entsim;

TEST_CASE("reduce_one on product and GHZ states") {
    const StateVector plus = plus_state(5);
    for (int l = 1; l <= 5; ++l) {
        const ReducedDensity1 rho = reduce_one(plus, l);
        CHECK(rho(0, 0).real() == Catch::Approx(0.5).margin(1e-12));
        CHECK(rho(1, 1).real() == Catch::Approx(0.5).margin(1e-12));
        CHECK(rho(0, 1).real() == Catch::Approx(0.5).margin(1e-12));
        CHECK(rho.purity() == Catch::Approx(1.0).margin(1e-12));  // rank-1 projector onto |+>
    }

    const StateVector ghz = ghz_state(5);
    for (int l = 1; l <= 5; ++l) {
        const ReducedDensity1 rho = reduce_one(ghz, l);
        CHECK(rho(0, 0).real() == Catch::Approx(0.5).margin(1e-12));
        CHECK(rho(1, 1).real() == Catch::Approx(0.5).margin(1e-12));
        CHECK(std::abs(rho(0, 1)) < 1e-12);
    }

    CHECK_THROWS_AS(reduce_one(plus, 0), InputError);
    CHECK_THROWS_AS(reduce_one(plus, 6), InputError);
}

TEST_CASE("reduce_one matches the evolved closed form") {
    // All one-site reduced matrices of the uniform single-order evolution
    // are identical with off-diagonal cos^n(2Jt)/2.
    const int order = 3;
    const double coupling = 0.8;
    const HamiltonianSpec spec = uniform_single(8, order, coupling);
    for (double t : {0.2, 0.9, 1.7}) {
        const StateVector psi = evolve(spec, t);
        const double expected = std::pow(std::cos(2.0 * coupling * t), order) / 2.0;
        for (int l = 1; l <= 8; ++l) {
            const ReducedDensity1 rho = reduce_one(psi, l);
            CHECK(rho(0, 1).real() == Catch::Approx(expected).margin(1e-12));
            CHECK(std::abs(rho(0, 1).imag()) < 1e-12);
        }
    }
}

TEST_CASE("reduce_two marginals") {
    const StateVector plus = plus_state(4);
    const ReducedDensity2 rho_plus = reduce_two(plus, 1, 3);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK(rho_plus(r, c).real() == Catch::Approx(0.25).margin(1e-12));

    const StateVector ghz = ghz_state(4);
    const ReducedDensity2 rho_ghz = reduce_two(ghz, 2, 4);
    CHECK(rho_ghz(0, 0).real() == Catch::Approx(0.5).margin(1e-12));
    CHECK(rho_ghz(3, 3).real() == Catch::Approx(0.5).margin(1e-12));
    CHECK(std::abs(rho_ghz(0, 3)) < 1e-12);
    CHECK(std::abs(rho_ghz(1, 1)) < 1e-12);

    // Bell pair: the two-site marginal is the full pure projector.
    StateVector bell = zero_state_vector(2);
    bell.amp[0b00] = 1.0 / std::sqrt(2.0);
    bell.amp[0b11] = 1.0 / std::sqrt(2.0);
    const ReducedDensity2 rho_bell = reduce_two(bell, 1, 2);
    CHECK(rho_bell.purity() == Catch::Approx(1.0).margin(1e-12));
    CHECK(rho_bell(0, 0).real() == Catch::Approx(0.5).margin(1e-12));
    CHECK(rho_bell(3, 0).real() == Catch::Approx(0.5).margin(1e-12));

    CHECK_THROWS_AS(reduce_two(plus, 2, 2), InputError);
}

TEST_CASE("partial trace consistency") {
    SeededSampler sampler(21);
    const StateVector psi = haar_state(6, sampler);
    for (int l : {1, 4}) {
        for (int l2 : {2, 6}) {
            if (l == l2) continue;
            const ReducedDensity2 rho2 = reduce_two(psi, l, l2);
            // Contract the second site: row index is 2 a_l + a_l2.
            ReducedDensity1 contracted;
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c)
                    contracted(r, c) = rho2(2 * r + 0, 2 * c + 0) + rho2(2 * r + 1, 2 * c + 1);
            const ReducedDensity1 direct = reduce_one(psi, l);
            for (int i = 0; i < 4; ++i) CHECK(std::abs(contracted.m[i] - direct.m[i]) < 1e-12);
        }
    }
}

TEST_CASE("density matrix representation invariants") {
    SeededSampler sampler(22);
    const StateVector psi = haar_state(6, sampler);
    const ReducedDensity2 rho = reduce_two(psi, 2, 5);
    CHECK(rho.trace_real() == Catch::Approx(1.0).margin(1e-12));
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK(std::abs(rho(r, c) - std::conj(rho(c, r))) < 1e-12);
    // Positive semidefinite: quadratic forms stay nonnegative.
    for (int trial = 0; trial < 100; ++trial) {
        std::array<Complex, 4> v;
        for (Complex& c : v) c = sampler.complex_gaussian();
        Complex form{};
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) form += std::conj(v[r]) * rho(r, c) * v[c];
        CHECK(form.real() > -1e-10);
    }
}

TEST_CASE("linear entropy") {
    ReducedDensity1 pure;
    pure(0, 0) = 1.0;
    CHECK(linear_entropy(pure) == Catch::Approx(0.0).margin(1e-15));

    ReducedDensity1 mixed;
    mixed(0, 0) = 0.5;
    mixed(1, 1) = 0.5;
    CHECK(linear_entropy(mixed) == Catch::Approx(0.5).margin(1e-15));

    // Diagonal 1/2 with off-diagonal c: S_L = 1/2 - 2|c|^2.
    for (double c : {0.1, 0.25, 0.5}) {
        ReducedDensity1 rho;
        rho(0, 0) = 0.5;
        rho(1, 1) = 0.5;
        rho(0, 1) = c;
        rho(1, 0) = c;
        CHECK(linear_entropy(rho) == Catch::Approx(0.5 - 2.0 * c * c).margin(1e-15));
    }
}

TEST_CASE("meyer_wallach endpoints") {
    SeededSampler sampler(5);
    // Separable states measure zero.
    std::vector<std::array<Complex, 2>> sites(5);
    for (auto& s : sites) {
        const double theta = sampler.uniform(0.0, std::numbers::pi);
        const double phi = sampler.uniform(0.0, 2.0 * std::numbers::pi);
        s = {std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi)};
    }
    CHECK(meyer_wallach(product_state(sites)) == Catch::Approx(0.0).margin(1e-12));

    CHECK(meyer_wallach(ghz_state(6)) == Catch::Approx(1.0).margin(1e-12));

    // Uniform single-order evolution: 1 - cos^{2n}(2Jt), any N.
    for (int n : {2, 3}) {
        const HamiltonianSpec spec = uniform_single(7, n, 1.1);
        for (double t : {0.3, 0.8}) {
            const double expected = 1.0 - std::pow(std::cos(2.2 * t), 2 * n);
            CHECK(meyer_wallach(evolve(spec, t)) == Catch::Approx(expected).margin(1e-10));
        }
    }

    StateVector unnormalized = plus_state(3);
    unnormalized.amp[0] += 0.1;
    CHECK_THROWS_AS(meyer_wallach(unnormalized), InputError);
}

TEST_CASE("meyer_wallach is invariant under local unitaries") {
    SeededSampler sampler(31);
    const StateVector psi = haar_state(5, sampler);
    const double reference = meyer_wallach(psi);
    for (int trial = 0; trial < 8; ++trial) {
        StateVector rotated = psi;
        for (int l = 1; l <= 5; ++l)
            apply_single_site(rotated, l, testsupport::random_single_qubit_unitary(sampler));
        CHECK(meyer_wallach(rotated) == Catch::Approx(reference).margin(1e-10));
    }
}

TEST_CASE("meyer_wallach bounds and purity criterion") {
    SeededSampler sampler(17);
    for (int trial = 0; trial < 20; ++trial) {
        const StateVector psi = haar_state(4, sampler);
        const double value = meyer_wallach(psi);
        CHECK(value >= 0.0);
        CHECK(value <= 1.0);
        CHECK(value == Catch::Approx(testsupport::meyer_wallach_oracle(psi)).margin(1e-12));
    }
    // Zero iff every one-site marginal is pure.
    const StateVector plus = plus_state(4);
    CHECK(meyer_wallach(plus) == Catch::Approx(0.0).margin(1e-12));
    for (int l = 1; l <= 4; ++l) CHECK(reduce_one(plus, l).purity() == Catch::Approx(1.0).margin(1e-10));
}

TEST_CASE("one-site marginals are site-independent for uniform kinds") {
    const HamiltonianSpec spec = uniform_up_to(8, 3, 1.0, StrengthSchedule::polynomial(3, 0.35));
    const StateVector psi = evolve(spec, 0.95);
    const ReducedDensity1 first = reduce_one(psi, 1);
    for (int l = 2; l <= 8; ++l) {
        const ReducedDensity1 rho = reduce_one(psi, l);
        for (int i = 0; i < 4; ++i) CHECK(std::abs(rho.m[i] - first.m[i]) < 1e-12);
    }
}

TEST_CASE("correlations of the single-order evolution") {
    SeededSampler sampler(8);
    const int order = 3;
    std::vector<double> couplings(10);
    for (double& j : couplings) j = sampler.gaussian(1.0, 0.5);
    const HamiltonianSpec spec = site_single(10, order, couplings);
    for (double t : {0.4, 1.2}) {
        const StateVector psi = evolve(spec, t);
        for (int r = 1; r <= 4; ++r) {
            CHECK(correlation(psi, PauliAxis::Z, r) == Catch::Approx(0.0).margin(1e-12));
            // C^Y vanishes everywhere except exactly at the window-boundary
            // distance r = n, where the two window sets just decouple.
            if (r != order) CHECK(correlation(psi, PauliAxis::Y, r) == Catch::Approx(0.0).margin(1e-12));
            if (r > order) CHECK(correlation(psi, PauliAxis::X, r) == Catch::Approx(0.0).margin(1e-12));
        }
    }
    CHECK_THROWS_AS(correlation(evolve(spec, 0.1), PauliAxis::X, 0), InputError);
    CHECK_THROWS_AS(correlation(evolve(spec, 0.1), PauliAxis::X, 5), InputError);
}

TEST_CASE("C_Y at the window-boundary distance") {
    // For n = 2, N = 6, r = 2 the residual Y correlation has the exact form
    // sin(2tJ_1) sin(2tJ_2) cos(2tJ_3) cos(2tJ_6), obtained by summing the
    // four flip-phase branches by hand.
    SeededSampler sampler(13);
    std::vector<double> couplings(6);
    for (double& j : couplings) j = sampler.gaussian(1.0, 0.5);
    const HamiltonianSpec spec = site_single(6, 2, couplings);
    for (double t : {0.3, 0.7, 1.4}) {
        const StateVector psi = evolve(spec, t);
        const double expected = std::sin(2.0 * t * couplings[0]) * std::sin(2.0 * t * couplings[1]) *
                                std::cos(2.0 * t * couplings[2]) * std::cos(2.0 * t * couplings[5]);
        CHECK(correlation(psi, PauliAxis::Y, 2) == Catch::Approx(expected).margin(1e-12));
    }
}
