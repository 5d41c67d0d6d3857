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

#include "entwalk/gates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace entwalk {

namespace {

const Mat2 kSigma[4] = {
    {{1, 0, 0, 1}},                                    // I
    {{0, 1, 1, 0}},                                    // X
    {{0, cdouble(0, -1), cdouble(0, 1), 0}},           // Y
    {{1, 0, 0, -1}},                                   // Z
};

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

const Mat2 kHadamard = {{kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2}};
const Mat2 kPhaseS = {{1, 0, 0, cdouble(0, 1)}};

const Mat2 &pauli_matrix(PauliLetter p) { return kSigma[static_cast<int>(p)]; }

double unitarity_defect(const Mat2 &u) {
    Mat2 g = u * u.adjoint();
    g.m[0] -= 1.0;
    g.m[3] -= 1.0;
    double d = 0;
    for (const auto &e : g.m) d = std::max(d, std::abs(e));
    return d;
}

namespace {

// Phase-normalized fingerprint: divide by the phase of the first entry with
// magnitude above threshold, then quantize. Equal fingerprints identify the
// same projective unitary.
std::string fingerprint(const Mat2 &u) {
    cdouble phase(1, 0);
    for (const auto &e : u.m) {
        if (std::abs(e) > 1e-6) {
            phase = e / std::abs(e);
            break;
        }
    }
    char buf[128];
    std::string out;
    for (const auto &e : u.m) {
        cdouble v = e / phase;
        long re = std::lround(v.real() * 1e6);
        long im = std::lround(v.imag() * 1e6);
        if (re == 0) re = 0;  // normalize -0
        if (im == 0) im = 0;
        std::snprintf(buf, sizeof buf, "%ld,%ld;", re, im);
        out += buf;
    }
    return out;
}

CliffordTable build_clifford_table() {
    struct Entry {
        Mat2 mat;
        std::string word;
        std::string fp;
    };
    std::vector<Entry> found;
    std::vector<size_t> frontier;
    auto add = [&](const Mat2 &m, const std::string &word) -> bool {
        std::string fp = fingerprint(m);
        for (const auto &e : found)
            if (e.fp == fp) return false;
        found.push_back({m, word, fp});
        return true;
    };
    add(Mat2::identity(), "");
    frontier.push_back(0);
    while (!frontier.empty()) {
        std::vector<size_t> next;
        for (size_t idx : frontier) {
            Entry cur = found[idx];
            // Left-multiplying appends the new gate at the end of the
            // application order.
            if (add(kHadamard * cur.mat, cur.word + "H")) next.push_back(found.size() - 1);
            if (add(kPhaseS * cur.mat, cur.word + "S")) next.push_back(found.size() - 1);
        }
        frontier = std::move(next);
    }
    if (found.size() != 24)
        throw std::logic_error("clifford closure has wrong size");
    std::sort(found.begin(), found.end(),
              [](const Entry &a, const Entry &b) { return a.fp < b.fp; });
    CliffordTable table;
    for (size_t i = 0; i < 24; ++i) {
        table.matrices[i] = found[i].mat;
        table.words[i] = found[i].word;
        if (found[i].word.empty()) table.identity_index = static_cast<int>(i);
    }
    return table;
}

}  // namespace

const CliffordTable &clifford_table() {
    static const CliffordTable table = build_clifford_table();
    return table;
}

SingleQubitGate SingleQubitGate::clifford(int idx) {
    if (idx < 0 || idx >= 24)
        throw std::out_of_range("clifford index out of range");
    return {Kind::CliffordIndex, clifford_table().matrices[idx], idx};
}

const Mat2 &SingleQubitGate::as_matrix() const { return matrix; }

Mat2 sample_haar_u2(Rng &rng) {
    // Complex Gaussian 2x2, Gram-Schmidt columns, then fix each column's
    // phase by the Gaussian projection coefficient (the diagonal of R).
    cdouble a(rng.gaussian(), rng.gaussian());
    cdouble c(rng.gaussian(), rng.gaussian());
    cdouble b(rng.gaussian(), rng.gaussian());
    cdouble d(rng.gaussian(), rng.gaussian());
    // First column (a, c).
    double n1 = std::sqrt(std::norm(a) + std::norm(c));
    cdouble q00 = a / n1, q10 = c / n1;
    // Remove projection from second column.
    cdouble proj = std::conj(q00) * b + std::conj(q10) * d;
    cdouble b2 = b - proj * q00, d2 = d - proj * q10;
    double n2 = std::sqrt(std::norm(b2) + std::norm(d2));
    cdouble q01 = b2 / n2, q11 = d2 / n2;
    // Q from plain Gram-Schmidt has R with positive diagonal already, so no
    // further phase correction is needed; the columns' phases are carried by
    // the Gaussian entries themselves.
    return {{q00, q01, q10, q11}};
}

SingleQubitGate sample_haar_gate(Rng &rng) {
    return SingleQubitGate::haar(sample_haar_u2(rng));
}

SingleQubitGate sample_single_qubit_clifford(Rng &rng) {
    return SingleQubitGate::clifford(static_cast<int>(rng.uniform_int(24)));
}

namespace {

// F(A,B) = Tr(sigma_u A) Tr(sigma_v B) for the bilinear sweep.
double f_trace(int u, int v, const Mat2 &a, const Mat2 &b) {
    cdouble ta = (kSigma[u] * a).trace();
    cdouble tb = (kSigma[v] * b).trace();
    return (ta * tb).real();
}

std::array<std::array<double, 4>, 4> predicted_requirement1(PauliLetter pa, PauliLetter pb) {
    std::array<std::array<double, 4>, 4> pred{};
    int a = static_cast<int>(pa), b = static_cast<int>(pb);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) {
            if (a == 0 && b == 0) {
                pred[u][v] = f_trace(u, v, kSigma[0], kSigma[0]);
            } else if (a == b) {
                double s = 0;
                for (int w = 1; w < 4; ++w) s += f_trace(u, v, kSigma[w], kSigma[w]);
                pred[u][v] = s / 3.0;
            } else {
                pred[u][v] = 0.0;
            }
        }
    return pred;
}

void finalize_report(MomentReport &rep) {
    rep.max_deviation_sigmas = 0;
    rep.max_abs_deviation = 0;
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) {
            double dev = std::abs(rep.estimate[u][v] - rep.predicted[u][v]);
            rep.max_abs_deviation = std::max(rep.max_abs_deviation, dev);
            // Entries that are deterministic up to float noise are judged by
            // max_abs_deviation; a ~1e-18 "standard error" is not a scale.
            if (rep.standard_error[u][v] > 1e-9)
                rep.max_deviation_sigmas =
                    std::max(rep.max_deviation_sigmas, dev / rep.standard_error[u][v]);
        }
}

}  // namespace

MomentReport requirement1_check(PauliLetter a, PauliLetter b, GateSampler sampler,
                                size_t trials, Rng &rng) {
    MomentReport rep;
    rep.predicted = predicted_requirement1(a, b);
    std::array<std::array<double, 4>, 4> sum{}, sumsq{};
    for (size_t i = 0; i < trials; ++i) {
        Mat2 t = sampler == GateSampler::Haar
                     ? sample_haar_u2(rng)
                     : sample_single_qubit_clifford(rng).as_matrix();
        Mat2 td = t.adjoint();
        Mat2 ca = t * pauli_matrix(a) * td;
        Mat2 cb = t * pauli_matrix(b) * td;
        for (int u = 0; u < 4; ++u)
            for (int v = 0; v < 4; ++v) {
                double f = f_trace(u, v, ca, cb);
                sum[u][v] += f;
                sumsq[u][v] += f * f;
            }
    }
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) {
            double mean = sum[u][v] / double(trials);
            double var = sumsq[u][v] / double(trials) - mean * mean;
            rep.estimate[u][v] = mean;
            rep.standard_error[u][v] = var > 0 ? std::sqrt(var / double(trials)) : 0.0;
        }
    finalize_report(rep);
    return rep;
}

MomentReport requirement1_exhaustive_clifford(PauliLetter a, PauliLetter b) {
    MomentReport rep;
    rep.predicted = predicted_requirement1(a, b);
    const auto &table = clifford_table();
    for (const auto &t : table.matrices) {
        Mat2 td = t.adjoint();
        Mat2 ca = t * pauli_matrix(a) * td;
        Mat2 cb = t * pauli_matrix(b) * td;
        for (int u = 0; u < 4; ++u)
            for (int v = 0; v < 4; ++v) rep.estimate[u][v] += f_trace(u, v, ca, cb) / 24.0;
    }
    finalize_report(rep);
    return rep;
}

std::array<std::array<double, 3>, 3> haar_bloch_moments(size_t trials, Rng &rng) {
    std::array<std::array<double, 3>, 3> acc{};
    for (size_t i = 0; i < trials; ++i) {
        Mat2 u = sample_haar_u2(rng);
        Mat2 conj = u * kSigma[3] * u.adjoint();
        double r[3];
        for (int w = 1; w < 4; ++w) r[w - 1] = 0.5 * (kSigma[w] * conj).trace().real();
        for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q) acc[p][q] += r[p] * r[q];
    }
    for (auto &row : acc)
        for (auto &v : row) v /= double(trials);
    return acc;
}

}  // namespace entwalk
