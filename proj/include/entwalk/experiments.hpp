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

#ifndef ENTWALK_EXPERIMENTS_HPP
#define ENTWALK_EXPERIMENTS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "entwalk/analytics.hpp"
#include "entwalk/topology.hpp"

namespace entwalk {

enum class Engine { StateVector, Stabilizer, Chain };

struct ExperimentConfig {
    std::string experiment;
    size_t n = 0;
    size_t n_a = 0;
    size_t n_b = 0;
    size_t n_c = 0;
    Engine engine = Engine::Stabilizer;
    Topology topology = Topology::AllToAll;
    std::vector<uint64_t> steps;
    size_t trials = 1;
    uint64_t seed = 1;
    double epsilon = 0.05;
    std::string out;
    size_t workers = 0;  // 0 = hardware concurrency (or ENTWALK_WORKERS)

    void validate() const;
};

// Runs fn(trial, rng) for trial = 0..trials-1 on a worker pool. Each trial
// gets its own generator derived from (seed, trial), so results do not
// depend on the worker count. fn must only write to trial-indexed slots.
void parallel_trials(size_t trials, size_t workers, uint64_t seed,
                     const std::function<void(size_t, Rng &)> &fn);

size_t resolve_workers(size_t requested);

// Deterministic CSV: header row, comma separator, 17-significant-digit
// floats, LF line endings.
class CsvWriter {
  public:
    explicit CsvWriter(const std::string &path);
    ~CsvWriter();
    void header(const std::vector<std::string> &names);
    void row(const std::vector<std::string> &cells);
    static std::string fmt(double v);
    static std::string fmt(uint64_t v);

  private:
    struct Impl;
    Impl *impl_;
};

// --- purity convergence -------------------------------------------------

struct PurityConvergenceRow {
    uint64_t n = 0;
    double exact_chain_purity = 0;
    std::optional<double> mc_purity;
    std::optional<double> mc_stderr;
    double lemma1_bound_value = 0;
    double asymptote = 0;
};

// MC columns are filled when mc_trials > 0 (Haar state-vector walk).
std::vector<PurityConvergenceRow> purity_convergence(size_t n, size_t n_a,
                                                     const std::vector<uint64_t> &grid,
                                                     size_t mc_trials, uint64_t seed,
                                                     size_t workers);

// --- entanglement traces ------------------------------------------------

struct TraceResult {
    std::vector<uint64_t> steps;
    // ebits[realization][grid index]
    std::vector<std::vector<double>> ebits;
    std::vector<double> mean;
    std::vector<double> standard_error;
};

TraceResult entanglement_trace(Engine engine, size_t n, size_t n_a,
                               const std::vector<uint64_t> &grid, size_t realizations,
                               uint64_t seed, size_t workers, Topology topology);

// --- cutoff curves ------------------------------------------------------

struct CutoffResult {
    TvSeries series;
    std::vector<double> reference;  // PMF over bins 0..N_A
};

// Reference is the closed-form stabilizer PMF for the stabilizer engine and
// a pooled long-run (50 N^2 steps) empirical histogram for the state-vector
// engine.
CutoffResult cutoff_curve(Engine engine, size_t n, size_t n_a,
                          const std::vector<uint64_t> &grid, size_t trials, uint64_t seed,
                          size_t workers, Topology topology = Topology::AllToAll);

// --- area / volume scaling ----------------------------------------------

struct AreaVolumeCell {
    uint64_t n = 0;
    size_t n_a = 0;
    double mean_ebits = 0;
    double standard_error = 0;
    double asymptotic_mean = 0;
};

// Ring-topology stabilizer walk; contiguous blocks of size 1..N/2.
std::vector<AreaVolumeCell> area_volume(size_t n, const std::vector<uint64_t> &grid,
                                        size_t trials, uint64_t seed, size_t workers);

// --- tripartite flow ----------------------------------------------------

struct TripartiteTrajectory {
    std::vector<uint64_t> steps;
    std::vector<double> log_negativity_ab;
    std::vector<double> mutual_information_ab;
    std::vector<double> entropy_c;
};

// Walks a state prepared by `initial_condition` (see
// prepare_tripartite_initial) and records the three diagnostics on the grid.
TripartiteTrajectory tripartite_trajectory(size_t n_a, size_t n_b, size_t n_c,
                                           const std::vector<uint64_t> &grid,
                                           int initial_condition, uint64_t seed);

struct FlowBin {
    double x_center = 0;  // S(rho_C) ebits
    double y_center = 0;  // E_N(A:B) ebits
    uint64_t count = 0;
    double mean_dx = 0;
    double mean_dy = 0;
};

// Phase-space flow: ensemble of trajectories binned at 0.25 ebits, mean
// displacement over `displacement_steps` steps, bins below `min_occupancy`
// dropped.
std::vector<FlowBin> tripartite_flow_field(size_t n_a, size_t n_b, size_t n_c,
                                           size_t trajectories, uint64_t trajectory_steps,
                                           uint64_t displacement_steps, uint64_t seed,
                                           size_t workers, double bin_width = 0.25,
                                           uint64_t min_occupancy = 20);

}  // namespace entwalk

#endif
