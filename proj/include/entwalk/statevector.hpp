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

#ifndef ENTWALK_STATEVECTOR_HPP
#define ENTWALK_STATEVECTOR_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "entwalk/gates.hpp"
#include "entwalk/rng.hpp"
#include "entwalk/topology.hpp"

namespace entwalk {

// Dense simulation is for desk-scale cross-validation; 2^kMaxDenseQubits
// complex doubles.
constexpr size_t kMaxDenseQubits = 14;

using CMatrix = Eigen::MatrixXcd;

// Pure N-qubit state. Qubit q corresponds to bit q of the basis index.
class StateVector {
  public:
    explicit StateVector(size_t n_qubits);

    size_t n_qubits() const { return n_; }
    size_t dim() const { return amps_.size(); }
    const std::vector<cdouble> &amplitudes() const { return amps_; }
    std::vector<cdouble> &amplitudes() { return amps_; }

    double norm_sq() const;

    void apply_single_qubit(const Mat2 &u, size_t q);
    void apply_cnot(size_t control, size_t target);
    // CNOT(c,t) . (U[c] x V[t]).
    void apply_gate_event(const GateEvent &ev);

    GateEvent walk_step(Topology topology, WalkMode mode, Rng &rng);

  private:
    size_t n_;
    std::vector<cdouble> amps_;
};

// Density matrix over an ordered list of qubit labels (ascending subset of
// the global register). Local factor i of the matrix is qubits[i].
struct DensityMatrix {
    CMatrix entries;
    std::vector<size_t> qubits;

    size_t n_qubits() const { return qubits.size(); }
};

// Bipartition of the global register.
struct PartitionSpec {
    std::vector<size_t> subset_a;
    size_t n_total = 0;

    size_t n_a() const { return subset_a.size(); }
    size_t n_b() const { return n_total - subset_a.size(); }
    // t = N_B - N_A.
    long long t() const { return (long long)n_b() - (long long)n_a(); }
};

// rho_subset = Tr_complement |psi><psi|. Subset must be a proper non-empty
// set of qubit indices.
DensityMatrix reduced_density(const StateVector &state, const std::vector<size_t> &subset);

// Eigenvalues of a Hermitian density matrix, ascending, with values in
// [-1e-9, 0) clipped to 0. More negative values throw.
std::vector<double> density_eigenvalues(const DensityMatrix &rho);

// Von Neumann entropy in bits.
double entropy_vn(const DensityMatrix &rho);

double purity(const DensityMatrix &rho);
double renyi2(const DensityMatrix &rho);

// log2 trace norm of the partial transpose over the local factors listed in
// a_local (positions within rho.qubits).
double log_negativity(const DensityMatrix &rho, const std::vector<size_t> &a_local);

// Traces out all local factors not listed in keep_local.
DensityMatrix partial_trace(const DensityMatrix &rho, const std::vector<size_t> &keep_local);

// S(rho_A) + S(rho_B) - S(rho_AB) for disjoint global qubit sets.
double mutual_information(const StateVector &state, const std::vector<size_t> &a,
                          const std::vector<size_t> &b);

// Same, over a (possibly mixed) density matrix; sets are local factor
// positions within rho.
double mutual_information(const DensityMatrix &rho, const std::vector<size_t> &a_local,
                          const std::vector<size_t> &b_local);

// Block entanglement of a pure state across subset vs complement, in bits.
double block_entropy(const StateVector &state, const std::vector<size_t> &subset);

}  // namespace entwalk

#endif
