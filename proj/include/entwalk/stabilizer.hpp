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

#ifndef ENTWALK_STABILIZER_HPP
#define ENTWALK_STABILIZER_HPP

#include <cstdint>
#include <vector>

#include "entwalk/pauli.hpp"
#include "entwalk/rng.hpp"
#include "entwalk/topology.hpp"

namespace entwalk {

// Stabilizer tableau for a pure N-qubit state: N generator rows, each a
// word-packed X/Z bit pair plus a sign bit. No destabilizer rows are kept;
// the walk is measurement-free.
class StabilizerTableau {
  public:
    // Stabilizers Z_0..Z_{N-1}, i.e. |0...0>.
    explicit StabilizerTableau(size_t n_qubits);

    size_t n_qubits() const { return n_; }

    bool x_bit(size_t row, size_t q) const {
        return (x_[row * words_per_row_ + (q >> 6)] >> (q & 63)) & 1;
    }
    bool z_bit(size_t row, size_t q) const {
        return (z_[row * words_per_row_ + (q >> 6)] >> (q & 63)) & 1;
    }
    bool sign_bit(size_t row) const { return (signs_[row >> 6] >> (row & 63)) & 1; }

    PauliString row_pauli(size_t row) const;

    void apply_h(size_t q);
    void apply_s(size_t q);
    void apply_cnot(size_t control, size_t target);
    // Expands the index to its canonical H/S word.
    void apply_clifford_index(int idx, size_t q);
    void apply_gate_event(const GateEvent &ev);

    GateEvent walk_step(Topology topology, Rng &rng);

    // S(rho_A) = rank_GF2(generators restricted to A) - |A|, exact integer.
    int cut_entanglement(const std::vector<size_t> &subset_a) const;

    // Structural checks: rows independent, mutually commuting, none is -I.
    bool invariants_hold() const;

  private:
    size_t n_;
    size_t words_per_row_;
    std::vector<uint64_t> x_;  // row-major packed
    std::vector<uint64_t> z_;
    std::vector<uint64_t> signs_;
};

}  // namespace entwalk

#endif
