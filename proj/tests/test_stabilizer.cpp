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

#include <vector>

#include "doctest.h"
#include "entwalk/stabilizer.hpp"

using namespace entwalk;

TEST_CASE("initial tableau stabilizes |0...0>") {
    StabilizerTableau tab(3);
    for (size_t r = 0; r < 3; ++r) {
        CHECK_FALSE(tab.sign_bit(r));
        for (size_t q = 0; q < 3; ++q) {
            CHECK_FALSE(tab.x_bit(r, q));
            CHECK(tab.z_bit(r, q) == (r == q));
        }
    }
    CHECK(tab.invariants_hold());
}

TEST_CASE("hadamard swaps X and Z") {
    StabilizerTableau tab(1);
    tab.apply_h(0);
    CHECK(tab.x_bit(0, 0));
    CHECK_FALSE(tab.z_bit(0, 0));
    CHECK_FALSE(tab.sign_bit(0));
    tab.apply_h(0);
    CHECK_FALSE(tab.x_bit(0, 0));
    CHECK(tab.z_bit(0, 0));
}

TEST_CASE("phase gate maps X to Y") {
    StabilizerTableau tab(1);
    tab.apply_h(0);  // stabilizer X
    tab.apply_s(0);  // -> Y
    CHECK(tab.x_bit(0, 0));
    CHECK(tab.z_bit(0, 0));
    CHECK_FALSE(tab.sign_bit(0));
    tab.apply_s(0);  // Y -> -X
    CHECK(tab.x_bit(0, 0));
    CHECK_FALSE(tab.z_bit(0, 0));
    CHECK(tab.sign_bit(0));
}

TEST_CASE("bell pair tableau is {XX, ZZ}") {
    StabilizerTableau tab(2);
    tab.apply_h(0);
    tab.apply_cnot(0, 1);
    // Row 0: Z0 -> X0 -> X0 X1. Row 1: Z1 -> Z0 Z1.
    CHECK(tab.x_bit(0, 0));
    CHECK(tab.x_bit(0, 1));
    CHECK_FALSE(tab.z_bit(0, 0));
    CHECK_FALSE(tab.z_bit(0, 1));
    CHECK(tab.z_bit(1, 0));
    CHECK(tab.z_bit(1, 1));
    CHECK_FALSE(tab.x_bit(1, 0));
    CHECK(tab.cut_entanglement({0}) == 1);
    CHECK(tab.invariants_hold());
}

TEST_CASE("ghz state has unit entanglement across every cut") {
    StabilizerTableau tab(3);
    tab.apply_h(0);
    tab.apply_cnot(0, 1);
    tab.apply_cnot(1, 2);
    CHECK(tab.cut_entanglement({0}) == 1);
    CHECK(tab.cut_entanglement({1}) == 1);
    CHECK(tab.cut_entanglement({0, 1}) == 1);
    CHECK(tab.cut_entanglement({0, 2}) == 1);
    CHECK(tab.invariants_hold());
}

TEST_CASE("product states have zero entanglement") {
    StabilizerTableau tab(4);
    tab.apply_h(1);
    tab.apply_s(1);
    tab.apply_h(3);
    for (size_t q = 0; q < 4; ++q) CHECK(tab.cut_entanglement({q}) == 0);
    CHECK(tab.cut_entanglement({0, 1}) == 0);
}

TEST_CASE("clifford index application matches H/S composition") {
    // Applying index i to |0> and brute-forcing the word must agree.
    const auto &table = clifford_table();
    for (int i = 0; i < 24; ++i) {
        StabilizerTableau a(1), b(1);
        a.apply_clifford_index(i, 0);
        for (char g : table.words[i]) {
            if (g == 'H') b.apply_h(0);
            else b.apply_s(0);
        }
        CHECK(a.x_bit(0, 0) == b.x_bit(0, 0));
        CHECK(a.z_bit(0, 0) == b.z_bit(0, 0));
        CHECK(a.sign_bit(0) == b.sign_bit(0));
    }
}

TEST_CASE("invariants survive long random walks") {
    Rng rng(55);
    StabilizerTableau tab(8);
    for (int i = 0; i < 10000; ++i) tab.walk_step(Topology::AllToAll, rng);
    CHECK(tab.invariants_hold());
}

TEST_CASE("cut entanglement symmetry and bounds") {
    Rng rng(56);
    StabilizerTableau tab(7);
    for (int i = 0; i < 500; ++i) tab.walk_step(Topology::AllToAll, rng);
    std::vector<size_t> a = {0, 2, 5};
    std::vector<size_t> comp = {1, 3, 4, 6};
    int ea = tab.cut_entanglement(a);
    CHECK(ea == tab.cut_entanglement(comp));
    CHECK(ea >= 0);
    CHECK(ea <= 3);
}

TEST_CASE("tableau walks are reproducible") {
    Rng r1(77), r2(77);
    StabilizerTableau a(6), b(6);
    for (int i = 0; i < 300; ++i) {
        a.walk_step(Topology::Ring, r1);
        b.walk_step(Topology::Ring, r2);
    }
    for (size_t q = 0; q < 6; ++q)
        for (size_t row = 0; row < 6; ++row) {
            CHECK(a.x_bit(row, q) == b.x_bit(row, q));
            CHECK(a.z_bit(row, q) == b.z_bit(row, q));
        }
    CHECK(a.cut_entanglement({0, 1, 2}) == b.cut_entanglement({0, 1, 2}));
}

TEST_CASE("input validation") {
    CHECK_THROWS(StabilizerTableau(0));
    StabilizerTableau tab(2);
    CHECK_THROWS(tab.apply_cnot(0, 0));
    CHECK_THROWS(tab.apply_h(2));
    CHECK_THROWS(tab.cut_entanglement({}));
    CHECK_THROWS(tab.cut_entanglement({0, 1}));
}
