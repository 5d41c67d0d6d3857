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

#ifndef ENTWALK_PAULI_HPP
#define ENTWALK_PAULI_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace entwalk {

// Single-qubit Pauli letter. Numeric values double as indices into the
// sigma-matrix table in gates.hpp.
enum class PauliLetter : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

// Length-N word over {I,X,Y,Z}.
struct PauliString {
    std::vector<PauliLetter> letters;

    explicit PauliString(size_t n) : letters(n, PauliLetter::I) {
        if (n < 1) throw std::invalid_argument("PauliString: N must be >= 1");
    }

    size_t size() const { return letters.size(); }

    // Qubit positions carrying a non-identity letter.
    std::vector<size_t> support() const {
        std::vector<size_t> s;
        for (size_t i = 0; i < letters.size(); ++i)
            if (letters[i] != PauliLetter::I) s.push_back(i);
        return s;
    }
};

// Conjugation action of CNOT(control, target) on a pair of Pauli letters,
// signs dropped. Self-inverse on all 16 pairs.
inline std::pair<PauliLetter, PauliLetter> hat_map(PauliLetter pc, PauliLetter pt) {
    // Table indexed by 4*control_letter + target_letter.
    static constexpr uint8_t table[16] = {
        // pc=I: II->II, IX->IX, IY->ZY, IZ->ZZ
        0x00, 0x01, 0x32, 0x33,
        // pc=X: XI->XX, XX->XI, XY->YZ, XZ->YY
        0x11, 0x10, 0x23, 0x22,
        // pc=Y: YI->YX, YX->YI, YY->XZ, YZ->XY
        0x21, 0x20, 0x13, 0x12,
        // pc=Z: ZI->ZI, ZX->ZX, ZY->IY, ZZ->IZ
        0x30, 0x31, 0x02, 0x03};
    uint8_t v = table[4 * static_cast<uint8_t>(pc) + static_cast<uint8_t>(pt)];
    return {static_cast<PauliLetter>(v >> 4), static_cast<PauliLetter>(v & 0xf)};
}

}  // namespace entwalk

#endif
