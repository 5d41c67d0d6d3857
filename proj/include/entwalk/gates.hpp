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

#ifndef ENTWALK_GATES_HPP
#define ENTWALK_GATES_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "entwalk/pauli.hpp"
#include "entwalk/rng.hpp"

namespace entwalk {

using cdouble = std::complex<double>;

// 2x2 complex matrix, row-major.
struct Mat2 {
    std::array<cdouble, 4> m{};

    cdouble &operator()(int r, int c) { return m[2 * r + c]; }
    const cdouble &operator()(int r, int c) const { return m[2 * r + c]; }

    static Mat2 identity() { return {{1, 0, 0, 1}}; }

    Mat2 operator*(const Mat2 &o) const {
        Mat2 r;
        r.m[0] = m[0] * o.m[0] + m[1] * o.m[2];
        r.m[1] = m[0] * o.m[1] + m[1] * o.m[3];
        r.m[2] = m[2] * o.m[0] + m[3] * o.m[2];
        r.m[3] = m[2] * o.m[1] + m[3] * o.m[3];
        return r;
    }

    Mat2 adjoint() const {
        return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
    }

    cdouble trace() const { return m[0] + m[3]; }
};

// sigma_I, sigma_x, sigma_y, sigma_z indexed by PauliLetter.
const Mat2 &pauli_matrix(PauliLetter p);

extern const Mat2 kHadamard;
extern const Mat2 kPhaseS;

// Max |U U^dag - I| entry; 0 for exact unitaries.
double unitarity_defect(const Mat2 &u);

// Single-qubit gate: either an explicit Haar-sampled unitary or an index
// into the canonical 24-element Clifford enumeration.
struct SingleQubitGate {
    enum class Kind { HaarUnitary, CliffordIndex };
    Kind kind = Kind::HaarUnitary;
    Mat2 matrix = Mat2::identity();
    int clifford_index = 0;

    static SingleQubitGate haar(const Mat2 &u) {
        return {Kind::HaarUnitary, u, 0};
    }
    static SingleQubitGate clifford(int idx);

    // Explicit matrix regardless of kind.
    const Mat2 &as_matrix() const;
};

// Canonical enumeration of the 24 single-qubit Clifford operations
// (products of H and S modulo global phase). Index 0..23 is stable:
// closure is generated from {H,S}, deduplicated by a phase-normalized
// fingerprint and sorted by it.
struct CliffordTable {
    std::array<Mat2, 24> matrices;
    // H/S word realizing each element, applied left to right.
    std::array<std::string, 24> words;
    int identity_index = 0;
};

const CliffordTable &clifford_table();

// Haar-distributed U(2) via Gram-Schmidt of a complex-Gaussian matrix with
// diagonal phase correction (Mezzadri's recipe specialized to 2x2).
Mat2 sample_haar_u2(Rng &rng);

SingleQubitGate sample_haar_gate(Rng &rng);
SingleQubitGate sample_single_qubit_clifford(Rng &rng);

// Monte Carlo / exhaustive verification of the randomizing-measure
// requirement, with F(A,B) = Tr(sigma_u A) Tr(sigma_v B) swept over u,v.
struct MomentReport {
    // estimate[u][v], stderr[u][v], predicted[u][v] for u,v in {I,X,Y,Z}.
    std::array<std::array<double, 4>, 4> estimate{};
    std::array<std::array<double, 4>, 4> standard_error{};
    std::array<std::array<double, 4>, 4> predicted{};
    double max_deviation_sigmas = 0.0;  // over entries with stderr > 0
    double max_abs_deviation = 0.0;
};

enum class GateSampler { Haar, Clifford };

MomentReport requirement1_check(PauliLetter a, PauliLetter b, GateSampler sampler,
                                size_t trials, Rng &rng);

// Exhaustive average over the 24 Cliffords; exact, no sampling.
MomentReport requirement1_exhaustive_clifford(PauliLetter a, PauliLetter b);

// Bloch components r_u = Tr(sigma_u U sigma_z U^dag)/2 cross-moment
// estimates E[r_u r_u'] over `trials` Haar draws (3x3 over u,u' in x,y,z).
std::array<std::array<double, 3>, 3> haar_bloch_moments(size_t trials, Rng &rng);

}  // namespace entwalk

#endif
