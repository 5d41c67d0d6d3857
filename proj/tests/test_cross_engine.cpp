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
#include <vector>

#include "doctest.h"
#include "entwalk/analytics.hpp"
#include "entwalk/purity_chain.hpp"
#include "entwalk/stabilizer.hpp"
#include "entwalk/statevector.hpp"

using namespace entwalk;

TEST_CASE("tableau and dense engines agree on every cut of a clifford walk") {
    for (uint64_t seed : {1, 2, 3}) {
        for (size_t n : {size_t(3), size_t(5), size_t(8)}) {
            Rng rng(seed);
            StateVector psi(n);
            StabilizerTableau tab(n);
            for (int step = 0; step < 200; ++step) {
                GateEvent ev = sample_gate_event(n, Topology::AllToAll, WalkMode::Clifford, rng);
                psi.apply_gate_event(ev);
                tab.apply_gate_event(ev);
                if (step % 20 != 0) continue;
                for (size_t cut = 1; cut < n; ++cut) {
                    std::vector<size_t> a;
                    for (size_t q = 0; q < cut; ++q) a.push_back(q);
                    double dense = block_entropy(psi, a);
                    int packed = tab.cut_entanglement(a);
                    CHECK(std::abs(dense - double(packed)) < 1e-8);
                }
            }
            CHECK(tab.invariants_hold());
        }
    }
}

TEST_CASE("tableau engine agrees on ring topology too") {
    Rng rng(17);
    const size_t n = 6;
    StateVector psi(n);
    StabilizerTableau tab(n);
    for (int step = 0; step < 150; ++step) {
        GateEvent ev = sample_gate_event(n, Topology::Ring, WalkMode::Clifford, rng);
        psi.apply_gate_event(ev);
        tab.apply_gate_event(ev);
    }
    for (size_t cut = 1; cut < n; ++cut) {
        std::vector<size_t> a;
        for (size_t q = 0; q < cut; ++q) a.push_back(q);
        CHECK(std::abs(block_entropy(psi, a) - tab.cut_entanglement(a)) < 1e-8);
    }
}

TEST_CASE("haar walk purity matches the reduced chain step by step") {
    // E[Tr rho_A^2] from dense simulation against the exact lumped chain.
    const size_t n = 3;
    const size_t trials = 3000;
    auto matrix = size_transition_matrix(n);
    for (uint64_t steps : {uint64_t(1), uint64_t(4), uint64_t(12)}) {
        double sum = 0, sum_sq = 0;
        for (size_t t = 0; t < trials; ++t) {
            Rng rng(derive_seed(1000 + steps, t));
            StateVector psi(n);
            for (uint64_t s = 0; s < steps; ++s)
                psi.walk_step(Topology::AllToAll, WalkMode::Haar, rng);
            double p = purity(reduced_density(psi, {0}));
            sum += p;
            sum_sq += p * p;
        }
        double mean = sum / trials;
        double se = std::sqrt((sum_sq / trials - mean * mean) / double(trials - 1));
        auto dist = evolve(initial_size_distribution(n), matrix, steps);
        double target = expected_purity(dist, 1);
        CHECK(std::abs(mean - target) < 3.5 * se + 1e-4);
    }
}

TEST_CASE("clifford walk purity matches the reduced chain too") {
    // The chain derivation only assumes the single-qubit measure averages
    // Paulis isotropically, which holds for the flat Clifford measure.
    const size_t n = 4;
    const size_t trials = 4000;
    const uint64_t steps = 10;
    double sum = 0, sum_sq = 0;
    for (size_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(2200, t));
        StabilizerTableau tab(n);
        for (uint64_t s = 0; s < steps; ++s) tab.walk_step(Topology::AllToAll, rng);
        double p = std::pow(2.0, -double(tab.cut_entanglement({0, 1})));
        sum += p;
        sum_sq += p * p;
    }
    double mean = sum / trials;
    double se = std::sqrt((sum_sq / trials - mean * mean) / double(trials - 1));
    auto dist = evolve(initial_size_distribution(n), size_transition_matrix(n), steps);
    double target = expected_purity(dist, 2);
    CHECK(std::abs(mean - target) < 3.5 * se + 1e-3);
}

TEST_CASE("long stabilizer walks reach the entanglement asymptote") {
    const size_t n = 8;
    const size_t trials = 1500;
    const uint64_t steps = 3000;  // far beyond the relaxation scale
    double sum = 0;
    for (size_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(31, t));
        StabilizerTableau tab(n);
        for (uint64_t s = 0; s < steps; ++s) tab.walk_step(Topology::AllToAll, rng);
        sum += double(tab.cut_entanglement({0, 1, 2, 3}));
    }
    double mean = sum / trials;
    double target = stabilizer_pmf_mean(n, 4);
    CHECK(std::abs(mean - target) < 0.06);
}
