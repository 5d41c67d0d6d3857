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

#include "entwalk/stabilizer.hpp"

#include <bit>
#include <stdexcept>

namespace entwalk {

namespace {

// Rank over GF(2) of packed bit rows, destructive.
int gf2_rank(std::vector<std::vector<uint64_t>> &rows, size_t n_bits) {
    int rank = 0;
    size_t pivot_row = 0;
    for (size_t col = 0; col < n_bits && pivot_row < rows.size(); ++col) {
        size_t w = col >> 6;
        uint64_t mask = uint64_t{1} << (col & 63);
        size_t found = pivot_row;
        while (found < rows.size() && !(rows[found][w] & mask)) ++found;
        if (found == rows.size()) continue;
        std::swap(rows[pivot_row], rows[found]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r != pivot_row && (rows[r][w] & mask)) {
                for (size_t k = 0; k < rows[r].size(); ++k) rows[r][k] ^= rows[pivot_row][k];
            }
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

}  // namespace

StabilizerTableau::StabilizerTableau(size_t n_qubits) : n_(n_qubits) {
    if (n_qubits < 1) throw std::invalid_argument("StabilizerTableau: N must be >= 1");
    words_per_row_ = (n_qubits + 63) / 64;
    x_.assign(n_ * words_per_row_, 0);
    z_.assign(n_ * words_per_row_, 0);
    signs_.assign((n_ + 63) / 64, 0);
    for (size_t i = 0; i < n_; ++i) z_[i * words_per_row_ + (i >> 6)] |= uint64_t{1} << (i & 63);
}

PauliString StabilizerTableau::row_pauli(size_t row) const {
    PauliString p(n_);
    for (size_t q = 0; q < n_; ++q) {
        bool xb = x_bit(row, q), zb = z_bit(row, q);
        p.letters[q] = xb ? (zb ? PauliLetter::Y : PauliLetter::X)
                          : (zb ? PauliLetter::Z : PauliLetter::I);
    }
    return p;
}

void StabilizerTableau::apply_h(size_t q) {
    if (q >= n_) throw std::out_of_range("qubit index out of range");
    size_t w = q >> 6;
    uint64_t mask = uint64_t{1} << (q & 63);
    for (size_t r = 0; r < n_; ++r) {
        uint64_t &xw = x_[r * words_per_row_ + w];
        uint64_t &zw = z_[r * words_per_row_ + w];
        uint64_t xb = xw & mask, zb = zw & mask;
        if (xb && zb) signs_[r >> 6] ^= uint64_t{1} << (r & 63);
        xw ^= xb ^ zb;
        zw ^= xb ^ zb;
    }
}

void StabilizerTableau::apply_s(size_t q) {
    if (q >= n_) throw std::out_of_range("qubit index out of range");
    size_t w = q >> 6;
    uint64_t mask = uint64_t{1} << (q & 63);
    for (size_t r = 0; r < n_; ++r) {
        uint64_t xb = x_[r * words_per_row_ + w] & mask;
        uint64_t &zw = z_[r * words_per_row_ + w];
        if (xb && (zw & mask)) signs_[r >> 6] ^= uint64_t{1} << (r & 63);
        zw ^= xb;
    }
}

void StabilizerTableau::apply_cnot(size_t control, size_t target) {
    if (control >= n_ || target >= n_ || control == target)
        throw std::out_of_range("bad CNOT indices");
    size_t wc = control >> 6, wt = target >> 6;
    uint64_t mc = uint64_t{1} << (control & 63), mt = uint64_t{1} << (target & 63);
    for (size_t r = 0; r < n_; ++r) {
        uint64_t *xr = &x_[r * words_per_row_];
        uint64_t *zr = &z_[r * words_per_row_];
        bool xc = xr[wc] & mc, zc = zr[wc] & mc;
        bool xt = xr[wt] & mt, zt = zr[wt] & mt;
        if (xc && zt && (xt == zc)) signs_[r >> 6] ^= uint64_t{1} << (r & 63);
        if (xc) xr[wt] ^= mt;
        if (zt) zr[wc] ^= mc;
    }
}

void StabilizerTableau::apply_clifford_index(int idx, size_t q) {
    const auto &word = clifford_table().words[idx];
    for (char g : word) {
        if (g == 'H')
            apply_h(q);
        else
            apply_s(q);
    }
}

void StabilizerTableau::apply_gate_event(const GateEvent &ev) {
    if (ev.gate_c.kind != SingleQubitGate::Kind::CliffordIndex ||
        ev.gate_t.kind != SingleQubitGate::Kind::CliffordIndex)
        throw std::invalid_argument("stabilizer engine needs Clifford gate events");
    apply_clifford_index(ev.gate_c.clifford_index, ev.control);
    apply_clifford_index(ev.gate_t.clifford_index, ev.target);
    apply_cnot(ev.control, ev.target);
}

GateEvent StabilizerTableau::walk_step(Topology topology, Rng &rng) {
    GateEvent ev = sample_gate_event(n_, topology, WalkMode::Clifford, rng);
    apply_gate_event(ev);
    return ev;
}

int StabilizerTableau::cut_entanglement(const std::vector<size_t> &subset_a) const {
    if (subset_a.empty() || subset_a.size() >= n_)
        throw std::invalid_argument("cut must be proper and non-empty");
    const size_t na = subset_a.size();
    const size_t proj_bits = 2 * na;
    const size_t proj_words = (proj_bits + 63) / 64;
    std::vector<std::vector<uint64_t>> rows(n_, std::vector<uint64_t>(proj_words, 0));
    for (size_t r = 0; r < n_; ++r) {
        for (size_t i = 0; i < na; ++i) {
            size_t q = subset_a[i];
            if (q >= n_) throw std::out_of_range("qubit index out of range");
            if (x_bit(r, q)) rows[r][i >> 6] |= uint64_t{1} << (i & 63);
            size_t zpos = na + i;
            if (z_bit(r, q)) rows[r][zpos >> 6] |= uint64_t{1} << (zpos & 63);
        }
    }
    return gf2_rank(rows, proj_bits) - static_cast<int>(na);
}

bool StabilizerTableau::invariants_hold() const {
    // Independence: full (x|z) matrix has rank N.
    const size_t bits = 2 * n_;
    const size_t pw = (bits + 63) / 64;
    std::vector<std::vector<uint64_t>> rows(n_, std::vector<uint64_t>(pw, 0));
    for (size_t r = 0; r < n_; ++r)
        for (size_t q = 0; q < n_; ++q) {
            if (x_bit(r, q)) rows[r][q >> 6] |= uint64_t{1} << (q & 63);
            size_t zpos = n_ + q;
            if (z_bit(r, q)) rows[r][zpos >> 6] |= uint64_t{1} << (zpos & 63);
        }
    if (gf2_rank(rows, bits) != static_cast<int>(n_)) return false;
    // Symplectic commutation: parity(x_i . z_j) == parity(z_i . x_j).
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = i + 1; j < n_; ++j) {
            int acc = 0;
            for (size_t w = 0; w < words_per_row_; ++w) {
                acc ^= std::popcount(x_[i * words_per_row_ + w] & z_[j * words_per_row_ + w]) & 1;
                acc ^= std::popcount(z_[i * words_per_row_ + w] & x_[j * words_per_row_ + w]) & 1;
            }
            if (acc) return false;
        }
    // Independence already excludes identity rows, hence -I cannot appear.
    return true;
}

}  // namespace entwalk
