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

#ifndef ENTWALK_PURITY_CHAIN_HPP
#define ENTWALK_PURITY_CHAIN_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "entwalk/pauli.hpp"
#include "entwalk/rng.hpp"

namespace entwalk {

// Distribution of the Pauli-support size |X_n|: probs[k] = Pr(|X_n| = k),
// k = 0..N. probs[0] is invariant under evolution (isolated state).
struct PauliSupportDistribution {
    std::vector<double> probs;
    size_t n_qubits = 0;
};

// Tridiagonal row-stochastic matrix over support sizes 0..N; row 0 is the
// identity row.
struct SizeTransitionMatrix {
    size_t n_qubits = 0;
    std::vector<double> up;    // P[k][k+1], index k = 0..N
    std::vector<double> down;  // P[k][k-1]
    std::vector<double> stay;  // P[k][k]

    double entry(size_t row, size_t col) const;
};

struct ChainParams {
    size_t n_qubits = 0;
    size_t n_a = 0;
    double epsilon = 0.0;
};

struct Theorem1Result {
    uint64_t n_min = 0;
    double entropy_lower_bound = 0.0;
    double fidelity_lower_bound = 0.0;
};

// P[k][k+1] = 4k(N-k)/(3N(N-1)), P[k][k-1] = 4k(k-1)/(9N(N-1)).
SizeTransitionMatrix size_transition_matrix(size_t n);

// Exchangeable |0...0> start: probs[k] = C(N,k)/2^N.
PauliSupportDistribution initial_size_distribution(size_t n);

PauliSupportDistribution evolve(const PauliSupportDistribution &dist,
                                const SizeTransitionMatrix &matrix, uint64_t steps);

// Stationary distribution conditioned on the non-empty sector:
// probs[k] = C(N,k) 3^k / (4^N - 1) for k >= 1, probs[0] = 0.
PauliSupportDistribution stationary_size_distribution(size_t n);

// E[Tr rho_A^2] = 2^{N_B} sum_k probs[k] C(N_A,k)/C(N,k); valid for
// exchangeable distributions only.
double expected_purity(const PauliSupportDistribution &dist, size_t n_a);

// 4^N exp(-4n / (9N(N-1))).
double lemma1_bound(size_t n_qubits, uint64_t steps);

Theorem1Result theorem1_thresholds(const ChainParams &params);

enum class ChainScope { Lumped, FullSetChain };

struct SpectralResult {
    double gap = 0.0;            // 1 - |lambda_2| over the non-empty sector
    double min_eigenvalue = 0.0;  // most negative non-unit eigenvalue
    double max_nonunit_eigenvalue = 0.0;
};

// Eigenvalues of the chain restricted to non-empty supports. Both chains
// are reversible, so the spectrum comes from a symmetrized matrix.
SpectralResult spectral_gap_numeric(size_t n, ChainScope scope);

// Simulates the full string chain of the walk's Pauli coefficients: letters
// evolve by pair choice, letter resampling and the hat map; the tracked
// observable is the support set.
enum class SetChainStart { BasisState, AllZ };

struct PurityEstimate {
    double value = 0.0;
    double standard_error = 0.0;
};

PurityEstimate monte_carlo_set_chain(SetChainStart start, uint64_t steps, size_t trials,
                                     size_t n, const std::vector<size_t> &subset_a, Rng &rng);

// Empirical distribution of |X_n| from the explicit string chain, for
// lumping validation against evolve().
std::vector<double> monte_carlo_size_distribution(SetChainStart start, uint64_t steps,
                                                  size_t trials, size_t n, Rng &rng);

}  // namespace entwalk

#endif
