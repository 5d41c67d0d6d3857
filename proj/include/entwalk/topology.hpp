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

#ifndef ENTWALK_TOPOLOGY_HPP
#define ENTWALK_TOPOLOGY_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>

#include "entwalk/gates.hpp"
#include "entwalk/rng.hpp"

namespace entwalk {

// Which ordered qubit pairs a walk step may act on.
enum class Topology { AllToAll, Ring };

// One walk step: ordered pair plus the two sampled single-qubit gates.
// CNOT control is `control`, target is `target`. Qubits are 0-based.
struct GateEvent {
    size_t control = 0;
    size_t target = 0;
    SingleQubitGate gate_c;
    SingleQubitGate gate_t;
};

// Uniform over the topology's admissible ordered pairs: all N(N-1) distinct
// ordered pairs for AllToAll, the 2N cyclic-adjacent ordered pairs for Ring.
inline std::pair<size_t, size_t> sample_pair(size_t n, Topology topology, Rng &rng) {
    if (topology == Topology::AllToAll) {
        if (n < 2) throw std::invalid_argument("sample_pair: AllToAll needs N >= 2");
        size_t c = rng.uniform_int(n);
        size_t t = rng.uniform_int(n - 1);
        if (t >= c) ++t;
        return {c, t};
    }
    if (n < 3) throw std::invalid_argument("sample_pair: Ring needs N >= 3");
    size_t c = rng.uniform_int(n);
    size_t t = rng.uniform() < 0.5 ? (c + 1) % n : (c + n - 1) % n;
    return {c, t};
}

enum class WalkMode { Haar, Clifford };

inline GateEvent sample_gate_event(size_t n, Topology topology, WalkMode mode, Rng &rng) {
    auto [c, t] = sample_pair(n, topology, rng);
    GateEvent ev;
    ev.control = c;
    ev.target = t;
    if (mode == WalkMode::Haar) {
        ev.gate_c = sample_haar_gate(rng);
        ev.gate_t = sample_haar_gate(rng);
    } else {
        ev.gate_c = sample_single_qubit_clifford(rng);
        ev.gate_t = sample_single_qubit_clifford(rng);
    }
    return ev;
}

}  // namespace entwalk

#endif
