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
#include "entwalk/statevector.hpp"

using namespace entwalk;

namespace {

StateVector bell_pair() {
    StateVector psi(2);
    psi.apply_single_qubit(kHadamard, 0);
    psi.apply_cnot(0, 1);
    return psi;
}

}  // namespace

TEST_CASE("initial state is |0...0>") {
    StateVector psi(3);
    CHECK(psi.dim() == 8);
    CHECK(std::abs(psi.amplitudes()[0] - cdouble(1, 0)) < 1e-15);
    CHECK(std::abs(psi.norm_sq() - 1.0) < 1e-15);
}

TEST_CASE("bell circuit amplitudes") {
    StateVector psi = bell_pair();
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(psi.amplitudes()[0] - r) < 1e-14);
    CHECK(std::abs(psi.amplitudes()[3] - r) < 1e-14);
    CHECK(std::abs(psi.amplitudes()[1]) < 1e-14);
    CHECK(std::abs(psi.amplitudes()[2]) < 1e-14);
}

TEST_CASE("cnot flips the target when the control is set") {
    // |10> in our convention: qubit 0 set -> basis index 1.
    StateVector psi(2);
    psi.apply_single_qubit(pauli_matrix(PauliLetter::X), 0);
    CHECK(std::abs(psi.amplitudes()[1] - 1.0) < 1e-15);
    psi.apply_cnot(0, 1);
    CHECK(std::abs(psi.amplitudes()[3] - 1.0) < 1e-15);
}

TEST_CASE("reduced density of a bell pair is maximally mixed") {
    StateVector psi = bell_pair();
    auto rho = reduced_density(psi, {0});
    CHECK(rho.entries.rows() == 2);
    CHECK(std::abs(rho.entries(0, 0) - 0.5) < 1e-14);
    CHECK(std::abs(rho.entries(1, 1) - 0.5) < 1e-14);
    CHECK(std::abs(rho.entries(0, 1)) < 1e-14);
    CHECK(std::abs(purity(rho) - 0.5) < 1e-14);
    CHECK(std::abs(entropy_vn(rho) - 1.0) < 1e-12);
    CHECK(std::abs(renyi2(rho) - 1.0) < 1e-12);
}

TEST_CASE("reduced density of a product state is pure") {
    StateVector psi(3);
    psi.apply_single_qubit(pauli_matrix(PauliLetter::X), 1);
    auto rho = reduced_density(psi, {1});
    CHECK(std::abs(rho.entries(1, 1) - 1.0) < 1e-14);
    CHECK(std::abs(entropy_vn(rho)) < 1e-12);
    CHECK(std::abs(purity(rho) - 1.0) < 1e-14);
}

TEST_CASE("entropy of diag(3/4, 1/4)") {
    DensityMatrix rho;
    rho.qubits = {0};
    rho.entries = CMatrix::Zero(2, 2);
    rho.entries(0, 0) = 0.75;
    rho.entries(1, 1) = 0.25;
    CHECK(std::abs(entropy_vn(rho) - 0.8112781244591328) < 1e-12);
    CHECK(std::abs(purity(rho) - 0.625) < 1e-14);
    // Renyi-2 lower bounds von Neumann.
    CHECK(renyi2(rho) <= entropy_vn(rho) + 1e-12);
}

TEST_CASE("log negativity") {
    SUBCASE("bell pair gives one ebit") {
        StateVector psi(3);
        psi.apply_single_qubit(kHadamard, 0);
        psi.apply_cnot(0, 1);
        auto rho = reduced_density(psi, {0, 1});
        CHECK(std::abs(log_negativity(rho, {0}) - 1.0) < 1e-12);
    }
    SUBCASE("product state gives zero") {
        StateVector psi(3);
        psi.apply_single_qubit(kHadamard, 0);
        auto rho = reduced_density(psi, {0, 1});
        CHECK(std::abs(log_negativity(rho, {0})) < 1e-12);
    }
    SUBCASE("maximally mixed two-qubit state gives zero") {
        DensityMatrix rho;
        rho.qubits = {0, 1};
        rho.entries = CMatrix::Identity(4, 4) / 4.0;
        CHECK(std::abs(log_negativity(rho, {0})) < 1e-12);
    }
}

TEST_CASE("mutual information") {
    SUBCASE("bell pair has I = 2") {
        StateVector psi = bell_pair();
        CHECK(std::abs(mutual_information(psi, {0}, {1}) - 2.0) < 1e-12);
    }
    SUBCASE("product state has I = 0") {
        StateVector psi(2);
        psi.apply_single_qubit(kHadamard, 0);
        CHECK(std::abs(mutual_information(psi, {0}, {1})) < 1e-12);
    }
    SUBCASE("classically correlated mixture has I = 1") {
        DensityMatrix rho;
        rho.qubits = {0, 1};
        rho.entries = CMatrix::Zero(4, 4);
        rho.entries(0, 0) = 0.5;
        rho.entries(3, 3) = 0.5;
        CHECK(std::abs(mutual_information(rho, {0}, {1}) - 1.0) < 1e-12);
    }
}

TEST_CASE("partial trace over a density matrix") {
    StateVector psi(3);
    psi.apply_single_qubit(kHadamard, 0);
    psi.apply_cnot(0, 1);
    auto rho = reduced_density(psi, {0, 1});
    auto rho_a = partial_trace(rho, {0});
    CHECK(rho_a.entries.rows() == 2);
    CHECK(std::abs(rho_a.entries(0, 0) - 0.5) < 1e-14);
    CHECK(std::abs(rho_a.entries(1, 1) - 0.5) < 1e-14);
}

TEST_CASE("pure state block entropy is symmetric under complementation") {
    Rng rng(101);
    StateVector psi(6);
    for (int i = 0; i < 120; ++i) psi.walk_step(Topology::AllToAll, WalkMode::Haar, rng);
    CHECK(std::abs(psi.norm_sq() - 1.0) < 1e-10);
    double sa = block_entropy(psi, {0, 1});
    double sb = block_entropy(psi, {2, 3, 4, 5});
    CHECK(std::abs(sa - sb) < 1e-9);
    // 0 <= renyi2 <= S <= min(N_A, N_B).
    auto rho = reduced_density(psi, {0, 1});
    CHECK(renyi2(rho) >= -1e-12);
    CHECK(renyi2(rho) <= sa + 1e-9);
    CHECK(sa <= 2.0 + 1e-9);
}

TEST_CASE("walks with the same seed are identical") {
    Rng rng1(7), rng2(7);
    StateVector a(4), b(4);
    for (int i = 0; i < 50; ++i) {
        a.walk_step(Topology::AllToAll, WalkMode::Haar, rng1);
        b.walk_step(Topology::AllToAll, WalkMode::Haar, rng2);
    }
    for (size_t i = 0; i < a.dim(); ++i)
        CHECK(std::abs(a.amplitudes()[i] - b.amplitudes()[i]) == 0.0);
}

TEST_CASE("input validation") {
    CHECK_THROWS(StateVector(0));
    CHECK_THROWS(StateVector(kMaxDenseQubits + 1));
    StateVector psi(2);
    CHECK_THROWS(reduced_density(psi, {}));
    CHECK_THROWS(reduced_density(psi, {0, 1, 2}));
    CHECK_THROWS(psi.apply_cnot(0, 0));
}
