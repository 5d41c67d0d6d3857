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

#include "entwalk/purity_chain.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace entwalk {

namespace {

double log_binomial(size_t n, size_t k) {
    return std::lgamma(double(n + 1)) - std::lgamma(double(k + 1)) -
           std::lgamma(double(n - k + 1));
}

}  // namespace

double SizeTransitionMatrix::entry(size_t row, size_t col) const {
    if (col == row) return stay[row];
    if (col == row + 1) return up[row];
    if (col + 1 == row) return down[row];
    return 0.0;
}

SizeTransitionMatrix size_transition_matrix(size_t n) {
    if (n < 2) throw std::invalid_argument("size_transition_matrix: N must be >= 2");
    SizeTransitionMatrix m;
    m.n_qubits = n;
    m.up.assign(n + 1, 0.0);
    m.down.assign(n + 1, 0.0);
    m.stay.assign(n + 1, 0.0);
    const double denom = double(n) * double(n - 1);
    for (size_t k = 0; k <= n; ++k) {
        double kk = double(k);
        m.up[k] = k < n ? 4.0 * kk * double(n - k) / (3.0 * denom) : 0.0;
        m.down[k] = k >= 1 ? 4.0 * kk * (kk - 1.0) / (9.0 * denom) : 0.0;
        m.stay[k] = 1.0 - m.up[k] - m.down[k];
    }
    return m;
}

PauliSupportDistribution initial_size_distribution(size_t n) {
    PauliSupportDistribution d;
    d.n_qubits = n;
    d.probs.resize(n + 1);
    for (size_t k = 0; k <= n; ++k)
        d.probs[k] = std::exp(log_binomial(n, k) - double(n) * std::log(2.0));
    return d;
}

PauliSupportDistribution evolve(const PauliSupportDistribution &dist,
                                const SizeTransitionMatrix &matrix, uint64_t steps) {
    if (dist.probs.size() != matrix.n_qubits + 1)
        throw std::invalid_argument("evolve: dimension mismatch");
    PauliSupportDistribution out = dist;
    std::vector<double> next(out.probs.size());
    for (uint64_t s = 0; s < steps; ++s) {
        const size_t n = matrix.n_qubits;
        for (size_t k = 0; k <= n; ++k) {
            double v = out.probs[k] * matrix.stay[k];
            if (k >= 1) v += out.probs[k - 1] * matrix.up[k - 1];
            if (k < n) v += out.probs[k + 1] * matrix.down[k + 1];
            next[k] = v;
        }
        out.probs.swap(next);
    }
    return out;
}

PauliSupportDistribution stationary_size_distribution(size_t n) {
    if (n < 2) throw std::invalid_argument("stationary_size_distribution: N must be >= 2");
    PauliSupportDistribution d;
    d.n_qubits = n;
    d.probs.assign(n + 1, 0.0);
    // C(N,k) 3^k / (4^N - 1) in log space; the normalizer is exact:
    // sum_{k>=1} C(N,k) 3^k = 4^N - 1.
    double log_z = double(n) * std::log(4.0) + std::log1p(-std::pow(4.0, -double(n)));
    for (size_t k = 1; k <= n; ++k)
        d.probs[k] = std::exp(log_binomial(n, k) + double(k) * std::log(3.0) - log_z);
    return d;
}

double expected_purity(const PauliSupportDistribution &dist, size_t n_a) {
    const size_t n = dist.n_qubits;
    if (n_a < 1 || n_a >= n) throw std::invalid_argument("expected_purity: N_A out of range");
    // Pr(X subset A | |X| = k) = C(N_A,k)/C(N,k) under exchangeability.
    double acc = 0;
    for (size_t k = 0; k <= n_a; ++k)
        acc += dist.probs[k] * std::exp(log_binomial(n_a, k) - log_binomial(n, k));
    return std::pow(2.0, double(n - n_a)) * acc;
}

double lemma1_bound(size_t n_qubits, uint64_t steps) {
    if (n_qubits < 2) throw std::invalid_argument("lemma1_bound: N must be >= 2");
    double nn = double(n_qubits);
    return std::exp(nn * std::log(4.0) - 4.0 * double(steps) / (9.0 * nn * (nn - 1.0)));
}

Theorem1Result theorem1_thresholds(const ChainParams &params) {
    const size_t n = params.n_qubits;
    const size_t n_a = params.n_a;
    if (n_a < 1 || n_a >= n) throw std::invalid_argument("theorem1: N_A out of range");
    const long long t = (long long)(n - n_a) - (long long)n_a;
    if (t < 0) throw std::invalid_argument("theorem1: requires N_B - N_A >= 0");
    if (!(params.epsilon > 0.0 && params.epsilon < 1.0))
        throw std::invalid_argument("theorem1: epsilon must be in (0,1)");
    const double ln2 = std::log(2.0);
    double nn = double(n);
    double threshold =
        9.0 * nn * (nn - 1.0) * (2.0 * ln2 * nn + std::log(1.0 / params.epsilon)) / 4.0;
    double excess = std::pow(2.0, -double(t)) + params.epsilon;
    Theorem1Result r;
    r.n_min = static_cast<uint64_t>(std::ceil(threshold));
    r.entropy_lower_bound = double(n_a) - excess / ln2;
    r.fidelity_lower_bound = 1.0 - std::sqrt(4.0 * excess / ln2);
    return r;
}

SpectralResult spectral_gap_numeric(size_t n, ChainScope scope) {
    // Both chains are reversible w.r.t. M proportional to 3^{|support|}
    // (lumped: C(N,k) 3^k), so D^{1/2} P D^{-1/2} is symmetric and shares
    // P's spectrum.
    Eigen::MatrixXd sym;
    if (scope == ChainScope::Lumped) {
        if (n < 2 || n > 2000) throw std::invalid_argument("lumped scope: bad N");
        SizeTransitionMatrix m = size_transition_matrix(n);
        sym = Eigen::MatrixXd::Zero(n, n);  // sector k = 1..N
        for (size_t k = 1; k <= n; ++k) {
            sym(k - 1, k - 1) = m.stay[k];
            if (k < n) {
                // reversibility: symmetrized entry is sqrt(P(k,k+1) P(k+1,k))
                double off = std::sqrt(m.up[k] * m.down[k + 1]);
                sym(k - 1, k) = off;
                sym(k, k - 1) = off;
            }
        }
    } else {
        if (n < 2 || n > 12) throw std::invalid_argument("full set chain: N must be in [2,12]");
        const size_t states = (size_t{1} << n) - 1;  // non-empty subsets
        sym = Eigen::MatrixXd::Zero(states, states);
        for (size_t e = 1; e <= states; ++e) {
            int sz = std::popcount(e);
            double p_up = 2.0 * double(sz) / (3.0 * double(n) * (double(n) - 1.0) / 2.0);
            double p_down = 2.0 * (double(sz) - 1.0) / (9.0 * double(n) * (double(n) - 1.0) / 2.0);
            double row_total = 0.0;
            for (size_t d = 0; d < n; ++d) {
                size_t mask = size_t{1} << d;
                if (!(e & mask)) {
                    sym(e - 1, (e | mask) - 1) = p_up / std::sqrt(3.0);
                    row_total += p_up;
                } else if (sz > 1) {
                    sym(e - 1, (e & ~mask) - 1) = p_down * std::sqrt(3.0);
                    row_total += p_down;
                }
            }
            sym(e - 1, e - 1) = 1.0 - row_total;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
    const auto &ev = solver.eigenvalues();
    size_t top = ev.size() - 1;
    if (std::abs(ev[top] - 1.0) > 1e-8)
        throw std::runtime_error("spectral_gap_numeric: leading eigenvalue is not 1");
    SpectralResult r;
    r.min_eigenvalue = ev[0];
    r.max_nonunit_eigenvalue = top > 0 ? ev[top - 1] : ev[0];
    double second_modulus = 0.0;
    for (size_t i = 0; i < top; ++i) second_modulus = std::max(second_modulus, std::abs(ev[i]));
    r.gap = 1.0 - second_modulus;
    return r;
}

namespace {

std::vector<PauliLetter> sample_start_string(SetChainStart start, size_t n, Rng &rng) {
    std::vector<PauliLetter> s(n, PauliLetter::I);
    switch (start) {
        case SetChainStart::BasisState:
            // xi_0^2 of |0..0> is uniform over {I,Z}^N.
            for (auto &l : s) l = rng.uniform() < 0.5 ? PauliLetter::I : PauliLetter::Z;
            break;
        case SetChainStart::AllZ:
            for (auto &l : s) l = PauliLetter::Z;
            break;
    }
    return s;
}

void step_string_chain(std::vector<PauliLetter> &s, Rng &rng) {
    const size_t n = s.size();
    size_t c = rng.uniform_int(n);
    size_t t = rng.uniform_int(n - 1);
    if (t >= c) ++t;
    PauliLetter wc = s[c] == PauliLetter::I
                         ? PauliLetter::I
                         : static_cast<PauliLetter>(1 + rng.uniform_int(3));
    PauliLetter wt = s[t] == PauliLetter::I
                         ? PauliLetter::I
                         : static_cast<PauliLetter>(1 + rng.uniform_int(3));
    auto [hc, ht] = hat_map(wc, wt);
    s[c] = hc;
    s[t] = ht;
}

}  // namespace

PurityEstimate monte_carlo_set_chain(SetChainStart start, uint64_t steps, size_t trials,
                                     size_t n, const std::vector<size_t> &subset_a, Rng &rng) {
    std::vector<bool> in_a(n, false);
    for (size_t q : subset_a) {
        if (q >= n) throw std::out_of_range("subset index out of range");
        in_a[q] = true;
    }
    size_t hits = 0;
    for (size_t trial = 0; trial < trials; ++trial) {
        auto s = sample_start_string(start, n, rng);
        for (uint64_t i = 0; i < steps; ++i) step_string_chain(s, rng);
        bool inside = true;
        for (size_t q = 0; q < n && inside; ++q)
            if (s[q] != PauliLetter::I && !in_a[q]) inside = false;
        if (inside) ++hits;
    }
    double p = double(hits) / double(trials);
    double scale = std::pow(2.0, double(n - subset_a.size()));
    PurityEstimate est;
    est.value = scale * p;
    est.standard_error = scale * std::sqrt(std::max(p * (1.0 - p), 0.0) / double(trials));
    return est;
}

std::vector<double> monte_carlo_size_distribution(SetChainStart start, uint64_t steps,
                                                  size_t trials, size_t n, Rng &rng) {
    std::vector<size_t> counts(n + 1, 0);
    for (size_t trial = 0; trial < trials; ++trial) {
        auto s = sample_start_string(start, n, rng);
        for (uint64_t i = 0; i < steps; ++i) step_string_chain(s, rng);
        size_t sz = 0;
        for (auto l : s)
            if (l != PauliLetter::I) ++sz;
        ++counts[sz];
    }
    std::vector<double> dist(n + 1);
    for (size_t k = 0; k <= n; ++k) dist[k] = double(counts[k]) / double(trials);
    return dist;
}

}  // namespace entwalk
