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

#include "entwalk/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entwalk {

namespace {

constexpr double kEigClip = 1e-9;

// Scatters the bits of `value` into the positions listed in `positions`.
size_t scatter_bits(size_t value, const std::vector<size_t> &positions) {
    size_t out = 0;
    for (size_t i = 0; i < positions.size(); ++i)
        out |= ((value >> i) & 1u) << positions[i];
    return out;
}

std::vector<size_t> complement_of(const std::vector<size_t> &subset, size_t n) {
    std::vector<bool> in(n, false);
    for (size_t q : subset) {
        if (q >= n) throw std::out_of_range("qubit index out of range");
        if (in[q]) throw std::invalid_argument("duplicate qubit in subset");
        in[q] = true;
    }
    std::vector<size_t> comp;
    for (size_t q = 0; q < n; ++q)
        if (!in[q]) comp.push_back(q);
    return comp;
}

}  // namespace

StateVector::StateVector(size_t n_qubits) : n_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxDenseQubits)
        throw std::invalid_argument("StateVector: N out of supported range");
    amps_.assign(size_t{1} << n_qubits, 0.0);
    amps_[0] = 1.0;
}

double StateVector::norm_sq() const {
    double s = 0;
    for (const auto &a : amps_) s += std::norm(a);
    return s;
}

void StateVector::apply_single_qubit(const Mat2 &u, size_t q) {
    if (q >= n_) throw std::out_of_range("qubit index out of range");
    const size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) continue;
        cdouble a0 = amps_[i];
        cdouble a1 = amps_[i | bit];
        amps_[i] = u(0, 0) * a0 + u(0, 1) * a1;
        amps_[i | bit] = u(1, 0) * a0 + u(1, 1) * a1;
    }
}

void StateVector::apply_cnot(size_t control, size_t target) {
    if (control >= n_ || target >= n_ || control == target)
        throw std::out_of_range("bad CNOT indices");
    const size_t cbit = size_t{1} << control;
    const size_t tbit = size_t{1} << target;
    for (size_t i = 0; i < amps_.size(); ++i)
        if ((i & cbit) && !(i & tbit)) std::swap(amps_[i], amps_[i | tbit]);
}

void StateVector::apply_gate_event(const GateEvent &ev) {
    apply_single_qubit(ev.gate_c.as_matrix(), ev.control);
    apply_single_qubit(ev.gate_t.as_matrix(), ev.target);
    apply_cnot(ev.control, ev.target);
}

GateEvent StateVector::walk_step(Topology topology, WalkMode mode, Rng &rng) {
    GateEvent ev = sample_gate_event(n_, topology, mode, rng);
    apply_gate_event(ev);
    return ev;
}

DensityMatrix reduced_density(const StateVector &state, const std::vector<size_t> &subset) {
    const size_t n = state.n_qubits();
    if (subset.empty() || subset.size() >= n)
        throw std::invalid_argument("subset must be proper and non-empty");
    std::vector<size_t> keep = subset;
    std::sort(keep.begin(), keep.end());
    std::vector<size_t> traced = complement_of(keep, n);
    const size_t m = keep.size();
    const size_t dim_a = size_t{1} << m;
    const size_t dim_b = size_t{1} << traced.size();
    const auto &amps = state.amplitudes();

    DensityMatrix rho;
    rho.qubits = keep;
    rho.entries = CMatrix::Zero(dim_a, dim_a);
    for (size_t b = 0; b < dim_b; ++b) {
        size_t base = scatter_bits(b, traced);
        for (size_t r = 0; r < dim_a; ++r) {
            cdouble ar = amps[base | scatter_bits(r, keep)];
            if (ar == cdouble(0, 0)) continue;
            for (size_t c = 0; c < dim_a; ++c)
                rho.entries(r, c) += ar * std::conj(amps[base | scatter_bits(c, keep)]);
        }
    }
    return rho;
}

std::vector<double> density_eigenvalues(const DensityMatrix &rho) {
    double herm_defect = (rho.entries - rho.entries.adjoint()).cwiseAbs().maxCoeff();
    if (herm_defect > 1e-8) throw std::invalid_argument("density matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho.entries, Eigen::EigenvaluesOnly);
    std::vector<double> vals(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + solver.eigenvalues().size());
    for (double &v : vals) {
        if (v < -kEigClip) throw std::runtime_error("density matrix eigenvalue below -1e-9");
        if (v < 0) v = 0;
    }
    return vals;
}

double entropy_vn(const DensityMatrix &rho) {
    double s = 0;
    for (double v : density_eigenvalues(rho))
        if (v > 1e-12) s -= v * std::log2(v);
    return s;
}

double purity(const DensityMatrix &rho) {
    return (rho.entries * rho.entries).trace().real();
}

double renyi2(const DensityMatrix &rho) { return -std::log2(purity(rho)); }

double log_negativity(const DensityMatrix &rho, const std::vector<size_t> &a_local) {
    const size_t m = rho.n_qubits();
    size_t a_mask = 0;
    for (size_t p : a_local) {
        if (p >= m) throw std::invalid_argument("partition exceeds density matrix");
        a_mask |= size_t{1} << p;
    }
    const size_t dim = size_t{1} << m;
    CMatrix pt(dim, dim);
    for (size_t r = 0; r < dim; ++r)
        for (size_t c = 0; c < dim; ++c) {
            // Transpose the A factors: swap the A bits of (row, col).
            size_t rt = (r & ~a_mask) | (c & a_mask);
            size_t ct = (c & ~a_mask) | (r & a_mask);
            pt(rt, ct) = rho.entries(r, c);
        }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(pt, Eigen::EigenvaluesOnly);
    double trace_norm = solver.eigenvalues().cwiseAbs().sum();
    return std::log2(trace_norm);
}

DensityMatrix partial_trace(const DensityMatrix &rho, const std::vector<size_t> &keep_local) {
    const size_t m = rho.n_qubits();
    std::vector<size_t> keep = keep_local;
    std::sort(keep.begin(), keep.end());
    if (keep.empty() || keep.size() > m)
        throw std::invalid_argument("partial_trace: bad keep set");
    std::vector<size_t> traced = complement_of(keep, m);
    const size_t dim_k = size_t{1} << keep.size();
    const size_t dim_t = size_t{1} << traced.size();
    DensityMatrix out;
    for (size_t p : keep) out.qubits.push_back(rho.qubits[p]);
    out.entries = CMatrix::Zero(dim_k, dim_k);
    for (size_t r = 0; r < dim_k; ++r)
        for (size_t c = 0; c < dim_k; ++c) {
            cdouble acc = 0;
            for (size_t t = 0; t < dim_t; ++t) {
                size_t base = scatter_bits(t, traced);
                acc += rho.entries(base | scatter_bits(r, keep), base | scatter_bits(c, keep));
            }
            out.entries(r, c) = acc;
        }
    return out;
}

double mutual_information(const DensityMatrix &rho, const std::vector<size_t> &a_local,
                          const std::vector<size_t> &b_local) {
    for (size_t q : a_local)
        if (std::find(b_local.begin(), b_local.end(), q) != b_local.end())
            throw std::invalid_argument("A and B overlap");
    std::vector<size_t> ab = a_local;
    ab.insert(ab.end(), b_local.begin(), b_local.end());
    double s_ab = ab.size() == rho.n_qubits() ? entropy_vn(rho)
                                              : entropy_vn(partial_trace(rho, ab));
    return entropy_vn(partial_trace(rho, a_local)) + entropy_vn(partial_trace(rho, b_local)) -
           s_ab;
}

double mutual_information(const StateVector &state, const std::vector<size_t> &a,
                          const std::vector<size_t> &b) {
    for (size_t q : a)
        if (std::find(b.begin(), b.end(), q) != b.end())
            throw std::invalid_argument("A and B overlap");
    std::vector<size_t> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    double s_ab;
    if (ab.size() == state.n_qubits()) {
        s_ab = 0.0;  // global state is pure
    } else {
        s_ab = entropy_vn(reduced_density(state, ab));
    }
    return entropy_vn(reduced_density(state, a)) + entropy_vn(reduced_density(state, b)) - s_ab;
}

double block_entropy(const StateVector &state, const std::vector<size_t> &subset) {
    // Diagonalize the smaller side.
    if (2 * subset.size() > state.n_qubits()) {
        std::vector<size_t> sorted = subset;
        std::sort(sorted.begin(), sorted.end());
        return entropy_vn(reduced_density(state, complement_of(sorted, state.n_qubits())));
    }
    return entropy_vn(reduced_density(state, subset));
}

}  // namespace entwalk
