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

#include "entwalk/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entwalk {

void EntanglementHistogram::add(double ebits) {
    if (ebits < 0) throw std::invalid_argument("histogram: negative entanglement");
    counts[int(std::floor(ebits + 0.5))] += 1;  // half-up ties
    ++total;
}

std::vector<double> EntanglementHistogram::to_probabilities(int max_bin) const {
    std::vector<double> p(size_t(max_bin) + 1, 0.0);
    if (total == 0) return p;
    for (const auto &[bin, count] : counts) {
        if (bin > max_bin) throw std::out_of_range("histogram bin exceeds requested support");
        p[size_t(bin)] = double(count) / double(total);
    }
    return p;
}

double page_average(size_t n_a, size_t n_b) {
    if (n_a < 1 || n_a > n_b) throw std::invalid_argument("page_average: needs 1 <= N_A <= N_B");
    uint64_t lo = (uint64_t{1} << n_b) + 1;
    uint64_t hi = uint64_t{1} << (n_a + n_b);
    double harmonic = 0;
    for (uint64_t k = hi; k >= lo; --k) harmonic += 1.0 / double(k);  // small terms first
    double correction =
        (std::pow(2.0, double(n_a)) - 1.0) / std::pow(2.0, double(n_b) + 1.0);
    return (harmonic - correction) / std::log(2.0);
}

double asymptotic_purity(size_t n_a, size_t n_b) {
    if (n_a < 1 || n_b < 1) throw std::invalid_argument("asymptotic_purity: bad partition");
    double na = std::pow(2.0, double(n_a)), nb = std::pow(2.0, double(n_b));
    return (na + nb) / (na * nb + 1.0);
}

namespace {

// log(2^e - 2^f) for e > f, stable for large exponents.
double log_pow2_diff(double e, double f) {
    return e * std::log(2.0) + std::log1p(-std::pow(2.0, f - e));
}

double log_pow2_plus1(double e) {
    return e * std::log(2.0) + std::log1p(std::pow(2.0, -e));
}

}  // namespace

std::vector<double> stabilizer_pmf(size_t n, size_t n_a) {
    if (n_a < 1 || 2 * n_a > n) throw std::invalid_argument("stabilizer_pmf: needs N_A <= N_B");
    const size_t n_b = n - n_a;
    double log_prefix = 0;
    for (size_t i = 1; i <= n_a; ++i)
        log_prefix += log_pow2_plus1(double(i)) - log_pow2_plus1(double(n_b + i));
    std::vector<double> pmf(n_a + 1);
    double log_term = 0;
    pmf[0] = std::exp(log_prefix);
    for (size_t j = 1; j <= n_a; ++j) {
        double dj = double(j);
        log_term += log_pow2_diff(double(n_b) + 1.0 - dj, 0.0) +
                    log_pow2_diff(double(n_a) + dj, 2.0 * dj - 1.0) -
                    log_pow2_diff(2.0 * dj, 0.0);
        pmf[j] = std::exp(log_prefix + log_term);
    }
    return pmf;
}

double stabilizer_pmf_mean(size_t n, size_t n_a) {
    auto pmf = stabilizer_pmf(n, n_a);
    double mean = 0;
    for (size_t e = 0; e < pmf.size(); ++e) mean += double(e) * pmf[e];
    return mean;
}

double tv_distance(const std::vector<double> &p, const std::vector<double> &q) {
    if (p.size() != q.size()) throw std::invalid_argument("tv_distance: support mismatch");
    double s = 0;
    for (size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
    return 0.5 * s;
}

EntanglementHistogram histogram(const std::vector<double> &samples) {
    EntanglementHistogram h;
    for (double s : samples) h.add(s);
    return h;
}

std::optional<uint64_t> tau_sat(const std::vector<uint64_t> &steps,
                                const std::vector<double> &means, double epsilon) {
    if (steps.size() != means.size() || steps.empty())
        throw std::invalid_argument("tau_sat: bad series");
    if (epsilon <= 0) throw std::invalid_argument("tau_sat: epsilon must be positive");
    constexpr size_t kWindow = 5;  // forward differences averaged over 5 grid points
    if (steps.size() == 1) return steps[0];
    for (size_t i = 0; i + 1 < steps.size(); ++i) {
        size_t j = std::min(i + kWindow - 1, steps.size() - 1);
        double slope = (means[j] - means[i]) / double(steps[j] - steps[i]);
        if (std::abs(slope) <= epsilon) return steps[i];
    }
    return std::nullopt;
}

std::optional<uint64_t> tau_vol(const std::vector<uint64_t> &steps,
                                const std::vector<PartitionSeries> &partitions, double epsilon) {
    if (partitions.empty()) throw std::invalid_argument("tau_vol: no partitions");
    for (const auto &p : partitions)
        if (p.means.size() != steps.size()) throw std::invalid_argument("tau_vol: grid mismatch");
    for (size_t i = 0; i < steps.size(); ++i) {
        double worst = 0;
        for (const auto &p : partitions)
            worst = std::max(worst, std::abs(p.asymptotic_mean - p.means[i]));
        if (worst <= epsilon) return steps[i];
    }
    return std::nullopt;
}

}  // namespace entwalk
