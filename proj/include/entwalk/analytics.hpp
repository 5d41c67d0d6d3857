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

#ifndef ENTWALK_ANALYTICS_HPP
#define ENTWALK_ANALYTICS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace entwalk {

// Integer-binned empirical distribution of block entanglement.
struct EntanglementHistogram {
    std::map<int, uint64_t> counts;
    uint64_t total = 0;

    void add(double ebits);
    // Probability vector over bins 0..max_bin.
    std::vector<double> to_probabilities(int max_bin) const;
};

struct TvSeries {
    std::vector<uint64_t> steps;
    std::vector<double> tv;
    // Step axis shifted so the TV = 0.5 crossing sits at 0.
    std::vector<double> rescaled_steps;
};

// Haar-average block von Neumann entropy in bits; requires N_A <= N_B.
double page_average(size_t n_a, size_t n_b);

// (2^{N_A} + 2^{N_B}) / (2^N + 1).
double asymptotic_purity(size_t n_a, size_t n_b);

// PMF of integer block entanglement E = 0..N_A over random pure stabilizer
// states; requires N_A <= N - N_A. Evaluated in log space.
std::vector<double> stabilizer_pmf(size_t n, size_t n_a);

double stabilizer_pmf_mean(size_t n, size_t n_a);

// Half L1; equals the sup-over-events form for discrete distributions.
double tv_distance(const std::vector<double> &p, const std::vector<double> &q);

// Round-half-up integer binning; negative input throws.
EntanglementHistogram histogram(const std::vector<double> &samples);

// First step where the (window-averaged forward-difference) slope of mean
// entanglement per step drops to <= epsilon. nullopt when never satisfied.
std::optional<uint64_t> tau_sat(const std::vector<uint64_t> &steps,
                                const std::vector<double> &means, double epsilon);

// First step where max over partitions of |asymptotic mean - current mean|
// drops to <= epsilon. Series share a common step grid.
struct PartitionSeries {
    double asymptotic_mean = 0.0;
    std::vector<double> means;  // one per grid step
};

std::optional<uint64_t> tau_vol(const std::vector<uint64_t> &steps,
                                const std::vector<PartitionSeries> &partitions, double epsilon);

}  // namespace entwalk

#endif
