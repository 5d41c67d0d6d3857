// Copyright 2026 The entwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "doctest.h"
#include "entwalk/analytics.hpp"
#include "entwalk/purity_chain.hpp"

using namespace entwalk;

TEST_CASE("transition matrix rows for N = 2") {
    auto m = size_transition_matrix(2);
    // Row 0 is absorbing.
    CHECK(m.entry(0, 0) == 1.0);
    CHECK(m.entry(0, 1) == 0.0);
    // Row 1: up = 4*1*1/(3*2*1) = 2/3, stay = 1/3.
    CHECK(std::abs(m.entry(1, 2) - 2.0 / 3.0) < 1e-15);
    CHECK(std::abs(m.entry(1, 1) - 1.0 / 3.0) < 1e-15);
    CHECK(m.entry(1, 0) == 0.0);
    // Row 2: down = 4*2*1/(9*2*1) = 4/9, stay = 5/9.
    CHECK(std::abs(m.entry(2, 1) - 4.0 / 9.0) < 1e-15);
    CHECK(std::abs(m.entry(2, 2) - 5.0 / 9.0) < 1e-15);
    // Rows sum to one for a bigger N too.
    auto big = size_transition_matrix(17);
    for (size_t k = 0; k <= 17; ++k) {
        double s = big.down[k] + big.stay[k] + big.up[k];
        CHECK(std::abs(s - 1.0) < 1e-14);
        CHECK(big.down[k] >= 0.0);
        CHECK(big.up[k] >= 0.0);
        CHECK(big.stay[k] >= 0.0);
    }
}

TEST_CASE("stationary distribution satisfies detailed balance") {
    auto m = size_transition_matrix(2);
    auto pi = stationary_size_distribution(2);
    CHECK(std::abs(pi.probs[1] - 0.4) < 1e-15);
    CHECK(std::abs(pi.probs[2] - 0.6) < 1e-15);
    CHECK(pi.probs[0] == 0.0);
    // pi_1 P(1->2) == pi_2 P(2->1) == 4/15.
    CHECK(std::abs(pi.probs[1] * m.entry(1, 2) - 4.0 / 15.0) < 1e-15);
    CHECK(std::abs(pi.probs[2] * m.entry(2, 1) - 4.0 / 15.0) < 1e-15);
    for (size_t n : {5, 10, 20}) {
        auto mn = size_transition_matrix(n);
        auto pin = stationary_size_distribution(n);
        double total = 0;
        for (size_t k = 1; k <= n; ++k) {
            total += pin.probs[k];
            if (k < n)
                CHECK(std::abs(pin.probs[k] * mn.entry(k, k + 1) -
                               pin.probs[k + 1] * mn.entry(k + 1, k)) < 1e-15);
        }
        CHECK(std::abs(total - 1.0) < 1e-12);
    }
}

TEST_CASE("stationary distribution is a fixed point of evolve") {
    auto m = size_transition_matrix(8);
    auto pi = stationary_size_distribution(8);
    auto next = evolve(pi, m, 1);
    for (size_t k = 0; k <= 8; ++k) CHECK(std::abs(next.probs[k] - pi.probs[k]) < 1e-12);
}

TEST_CASE("initial distribution is binomial over Z support") {
    auto d = initial_size_distribution(3);
    CHECK(std::abs(d.probs[0] - 1.0 / 8.0) < 1e-15);
    CHECK(std::abs(d.probs[1] - 3.0 / 8.0) < 1e-15);
    CHECK(std::abs(d.probs[2] - 3.0 / 8.0) < 1e-15);
    CHECK(std::abs(d.probs[3] - 1.0 / 8.0) < 1e-15);
}

TEST_CASE("evolve conserves mass and the empty-support weight") {
    auto m = size_transition_matrix(6);
    auto d = initial_size_distribution(6);
    auto out = evolve(d, m, 500);
    double total = 0;
    for (double p : out.probs) total += p;
    CHECK(std::abs(total - 1.0) < 1e-12);
    CHECK(std::abs(out.probs[0] - d.probs[0]) < 1e-15);
    // Conditioned on non-empty, the long-run law approaches stationarity.
    auto pi = stationary_size_distribution(6);
    double sector = 1.0 - out.probs[0];
    for (size_t k = 1; k <= 6; ++k)
        CHECK(std::abs(out.probs[k] / sector - pi.probs[k]) < 1e-9);
}

TEST_CASE("expected purity") {
    SUBCASE("initial state is pure") {
        auto d = initial_size_distribution(4);
        CHECK(std::abs(expected_purity(d, 2) - 1.0) < 1e-12);
    }
    SUBCASE("stationary value matches the closed form") {
        for (size_t n : {2, 6, 10}) {
            auto pi = stationary_size_distribution(n);
            size_t n_a = n / 2;
            double direct = expected_purity(pi, n_a);
            double target = (std::pow(2.0, double(n_a)) + std::pow(2.0, double(n - n_a))) /
                            (std::pow(2.0, double(n)) + 1.0);
            // The physical initial law keeps the invariant empty-support
            // weight; evolved far out, its purity hits the closed form.
            auto far = evolve(initial_size_distribution(n), size_transition_matrix(n), 4000 * n);
            CHECK(std::abs(expected_purity(far, n_a) - target) < 1e-9);
            CHECK(direct > 0.0);
        }
    }
    SUBCASE("N = 2 long-run purity is 0.8 for a single-qubit block") {
        auto far = evolve(initial_size_distribution(2), size_transition_matrix(2), 100000);
        CHECK(std::abs(expected_purity(far, 1) - 0.8) < 1e-10);
        CHECK(std::abs(asymptotic_purity(1, 1) - 0.8) < 1e-15);
    }
}

TEST_CASE("lemma bound formula") {
    CHECK(std::abs(lemma1_bound(4, 0) - 256.0) < 1e-12);
    // Closed form check at an arbitrary point.
    uint64_t n_steps = 75;
    double expect = 256.0 * std::exp(-4.0 * double(n_steps) / (9.0 * 4 * 3));
    CHECK(std::abs(lemma1_bound(4, n_steps) - expect) < 1e-12);
    // Monotone decreasing in steps.
    CHECK(lemma1_bound(6, 100) > lemma1_bound(6, 101));
}

TEST_CASE("threshold results") {
    ChainParams p{10, 5, 0.01};
    auto r = theorem1_thresholds(p);
    CHECK(r.n_min == 3740);
    // Entropy bound N_A - (2^-t + eps)/ln 2 with t = 0 here.
    double expect = 5.0 - (1.0 + 0.01) / std::log(2.0);
    CHECK(std::abs(r.entropy_lower_bound - expect) < 1e-12);
    // Unequal split: t = N_B - N_A = 4.
    ChainParams q{10, 3, 0.01};
    auto rq = theorem1_thresholds(q);
    double eq = 3.0 - (std::pow(2.0, -4.0) + 0.01) / std::log(2.0);
    CHECK(std::abs(rq.entropy_lower_bound - eq) < 1e-12);
    double fid = 1.0 - std::sqrt(4.0 * (std::pow(2.0, -4.0) + 0.01) / std::log(2.0));
    CHECK(std::abs(rq.fidelity_lower_bound - fid) < 1e-12);
}

TEST_CASE("spectral gap") {
    SUBCASE("lumped N = 2 has gap 8/9") {
        auto r = spectral_gap_numeric(2, ChainScope::Lumped);
        CHECK(std::abs(r.gap - 8.0 / 9.0) < 1e-12);
        CHECK(std::abs(r.min_eigenvalue - (-1.0 / 9.0)) < 1e-12);
    }
    SUBCASE("lumped gap respects the analytic bounds") {
        for (size_t n : {3, 5, 8, 12, 40}) {
            auto r = spectral_gap_numeric(n, ChainScope::Lumped);
            double lower = 4.0 / (9.0 * n * (n - 1));
            CHECK(r.gap >= lower - 1e-12);
            CHECK(r.min_eigenvalue >= -0.5 - 1e-12);
            CHECK(r.max_nonunit_eigenvalue <= 1.0 - 4.0 / (9.0 * n) + 1e-12);
        }
    }
    SUBCASE("full set chain agrees with the lumped chain spectrum edge") {
        for (size_t n : {2, 3, 4}) {
            auto full = spectral_gap_numeric(n, ChainScope::FullSetChain);
            auto lump = spectral_gap_numeric(n, ChainScope::Lumped);
            // Lumped eigenvalues are a subset of the full chain's, and both
            // share the slowest mode.
            CHECK(full.gap <= lump.gap + 1e-10);
            CHECK(full.max_nonunit_eigenvalue >= lump.max_nonunit_eigenvalue - 1e-10);
        }
    }
}

TEST_CASE("explicit string chain lumps to the size chain") {
    Rng rng(91);
    const size_t n = 4;
    const uint64_t steps = 30;
    auto mc = monte_carlo_size_distribution(SetChainStart::BasisState, steps, 40000, n, rng);
    auto exact = evolve(initial_size_distribution(n), size_transition_matrix(n), steps);
    for (size_t k = 0; k <= n; ++k) {
        double se = std::sqrt(exact.probs[k] * (1 - exact.probs[k]) / 40000.0);
        CHECK(std::abs(mc[k] - exact.probs[k]) < 5.0 * se + 1e-4);
    }
}

TEST_CASE("string chain purity estimate matches the exact expectation") {
    Rng rng(92);
    const size_t n = 4;
    const uint64_t steps = 25;
    auto est = monte_carlo_set_chain(SetChainStart::BasisState, steps, 30000, n, {0, 1}, rng);
    auto exact = evolve(initial_size_distribution(n), size_transition_matrix(n), steps);
    double target = expected_purity(exact, 2);
    CHECK(std::abs(est.value - target) < 4.0 * est.standard_error + 1e-3);
}

TEST_CASE("all-z start forgets its initial condition") {
    Rng rng(93);
    const size_t n = 3;
    auto est = monte_carlo_set_chain(SetChainStart::AllZ, 2000, 20000, n, {0}, rng);
    // All-Z start has no empty-support weight, so the long-run value is the
    // stationary-sector purity, not the physical asymptote.
    double target = expected_purity(stationary_size_distribution(n), 1);
    CHECK(std::abs(est.value - target) < 4.0 * est.standard_error + 2e-3);
}
