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

#include "entwalk/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <thread>

#include "entwalk/purity_chain.hpp"
#include "entwalk/stabilizer.hpp"
#include "entwalk/statevector.hpp"

namespace entwalk {

void ExperimentConfig::validate() const {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (steps.empty()) throw std::invalid_argument("step grid is empty");
    if (!std::is_sorted(steps.begin(), steps.end()))
        throw std::invalid_argument("step grid must be increasing");
    if (n < 2) throw std::invalid_argument("N must be >= 2");
    if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
    if (engine == Engine::StateVector && n > kMaxDenseQubits)
        throw std::invalid_argument("dense engine supports at most 14 qubits");
    if (topology == Topology::Ring && n < 3) throw std::invalid_argument("ring needs N >= 3");
    if (n_c > 0) {
        if (n_a + n_b + n_c != n) throw std::invalid_argument("N_A+N_B+N_C must equal N");
    } else if (n_a > 0) {
        if (n_a >= n) throw std::invalid_argument("N_A must be a proper block");
    }
}

size_t resolve_workers(size_t requested) {
    if (requested > 0) return requested;
    if (const char *env = std::getenv("ENTWALK_WORKERS")) {
        long v = std::atol(env);
        if (v > 0) return size_t(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

void parallel_trials(size_t trials, size_t workers, uint64_t seed,
                     const std::function<void(size_t, Rng &)> &fn) {
    workers = std::min(resolve_workers(workers), trials == 0 ? size_t{1} : trials);
    if (workers <= 1) {
        for (size_t t = 0; t < trials; ++t) {
            Rng rng(derive_seed(seed, t));
            fn(t, rng);
        }
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (size_t t = w; t < trials; t += workers) {
                Rng rng(derive_seed(seed, t));
                fn(t, rng);
            }
        });
    }
    for (auto &th : pool) th.join();
}

struct CsvWriter::Impl {
    FILE *f = nullptr;
    size_t columns = 0;
};

CsvWriter::CsvWriter(const std::string &path) : impl_(new Impl) {
    impl_->f = std::fopen(path.c_str(), "wb");
    if (!impl_->f) {
        delete impl_;
        throw std::runtime_error("cannot open output file: " + path);
    }
}

CsvWriter::~CsvWriter() {
    if (impl_->f) std::fclose(impl_->f);
    delete impl_;
}

void CsvWriter::header(const std::vector<std::string> &names) {
    impl_->columns = names.size();
    row(names);
}

void CsvWriter::row(const std::vector<std::string> &cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) std::fputc(',', impl_->f);
        std::fwrite(cells[i].data(), 1, cells[i].size(), impl_->f);
    }
    std::fputc('\n', impl_->f);
}

std::string CsvWriter::fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string CsvWriter::fmt(uint64_t v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%llu", (unsigned long long)v);
    return buf;
}

// --- purity convergence -------------------------------------------------

std::vector<PurityConvergenceRow> purity_convergence(size_t n, size_t n_a,
                                                     const std::vector<uint64_t> &grid,
                                                     size_t mc_trials, uint64_t seed,
                                                     size_t workers) {
    const size_t n_b = n - n_a;
    const double asym = asymptotic_purity(n_a, n_b);
    SizeTransitionMatrix matrix = size_transition_matrix(n);
    PauliSupportDistribution dist = initial_size_distribution(n);

    std::vector<PurityConvergenceRow> rows(grid.size());
    uint64_t done = 0;
    for (size_t i = 0; i < grid.size(); ++i) {
        dist = evolve(dist, matrix, grid[i] - done);
        done = grid[i];
        rows[i].n = grid[i];
        rows[i].exact_chain_purity = expected_purity(dist, n_a);
        rows[i].lemma1_bound_value = lemma1_bound(n, grid[i]);
        rows[i].asymptote = asym;
    }

    if (mc_trials > 0) {
        std::vector<size_t> subset(n_a);
        for (size_t q = 0; q < n_a; ++q) subset[q] = q;
        std::vector<double> samples(mc_trials * grid.size());
        parallel_trials(mc_trials, workers, seed, [&](size_t trial, Rng &rng) {
            StateVector psi(n);
            uint64_t step = 0;
            for (size_t i = 0; i < grid.size(); ++i) {
                for (; step < grid[i]; ++step)
                    psi.walk_step(Topology::AllToAll, WalkMode::Haar, rng);
                samples[trial * grid.size() + i] = purity(reduced_density(psi, subset));
            }
        });
        for (size_t i = 0; i < grid.size(); ++i) {
            double sum = 0, sumsq = 0;
            for (size_t t = 0; t < mc_trials; ++t) {
                double v = samples[t * grid.size() + i];
                sum += v;
                sumsq += v * v;
            }
            double mean = sum / double(mc_trials);
            double var = std::max(sumsq / double(mc_trials) - mean * mean, 0.0);
            rows[i].mc_purity = mean;
            rows[i].mc_stderr = std::sqrt(var / double(mc_trials));
        }
    }
    return rows;
}

// --- entanglement traces ------------------------------------------------

TraceResult entanglement_trace(Engine engine, size_t n, size_t n_a,
                               const std::vector<uint64_t> &grid, size_t realizations,
                               uint64_t seed, size_t workers, Topology topology) {
    if (engine == Engine::Chain) throw std::invalid_argument("trace needs a state engine");
    std::vector<size_t> subset(n_a);
    for (size_t q = 0; q < n_a; ++q) subset[q] = q;

    TraceResult result;
    result.steps = grid;
    result.ebits.assign(realizations, std::vector<double>(grid.size(), 0.0));
    parallel_trials(realizations, workers, seed, [&](size_t trial, Rng &rng) {
        if (engine == Engine::Stabilizer) {
            StabilizerTableau tab(n);
            uint64_t step = 0;
            for (size_t i = 0; i < grid.size(); ++i) {
                for (; step < grid[i]; ++step) tab.walk_step(topology, rng);
                result.ebits[trial][i] = tab.cut_entanglement(subset);
            }
        } else {
            StateVector psi(n);
            uint64_t step = 0;
            for (size_t i = 0; i < grid.size(); ++i) {
                for (; step < grid[i]; ++step)
                    psi.walk_step(topology, WalkMode::Haar, rng);
                result.ebits[trial][i] = block_entropy(psi, subset);
            }
        }
    });
    result.mean.resize(grid.size());
    result.standard_error.resize(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) {
        double sum = 0, sumsq = 0;
        for (size_t t = 0; t < realizations; ++t) {
            double v = result.ebits[t][i];
            sum += v;
            sumsq += v * v;
        }
        double mean = sum / double(realizations);
        double var = std::max(sumsq / double(realizations) - mean * mean, 0.0);
        result.mean[i] = mean;
        result.standard_error[i] = std::sqrt(var / double(realizations));
    }
    return result;
}

// --- cutoff curves ------------------------------------------------------

CutoffResult cutoff_curve(Engine engine, size_t n, size_t n_a,
                          const std::vector<uint64_t> &grid, size_t trials, uint64_t seed,
                          size_t workers, Topology topology) {
    if (grid.empty()) throw std::invalid_argument("cutoff: empty grid");
    const int max_bin = int(std::min(n_a, n - n_a));

    std::vector<double> samples(trials * grid.size());
    // Pooled long-run reference for the state-vector engine.
    const uint64_t ref_step = 50 * uint64_t(n) * uint64_t(n);
    std::vector<double> ref_samples(engine == Engine::StateVector ? trials : 0);

    std::vector<size_t> subset(n_a);
    for (size_t q = 0; q < n_a; ++q) subset[q] = q;

    parallel_trials(trials, workers, seed, [&](size_t trial, Rng &rng) {
        if (engine == Engine::Stabilizer) {
            StabilizerTableau tab(n);
            uint64_t step = 0;
            for (size_t i = 0; i < grid.size(); ++i) {
                for (; step < grid[i]; ++step) tab.walk_step(topology, rng);
                samples[trial * grid.size() + i] = tab.cut_entanglement(subset);
            }
        } else {
            StateVector psi(n);
            uint64_t step = 0;
            for (size_t i = 0; i < grid.size(); ++i) {
                for (; step < grid[i]; ++step)
                    psi.walk_step(topology, WalkMode::Haar, rng);
                samples[trial * grid.size() + i] = block_entropy(psi, subset);
            }
            for (; step < ref_step; ++step)
                psi.walk_step(topology, WalkMode::Haar, rng);
            ref_samples[trial] = block_entropy(psi, subset);
        }
    });

    CutoffResult result;
    if (engine == Engine::Stabilizer) {
        result.reference = stabilizer_pmf(n, n_a);
    } else {
        result.reference = histogram(ref_samples).to_probabilities(max_bin);
    }

    result.series.steps = grid;
    result.series.tv.resize(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) {
        EntanglementHistogram h;
        for (size_t t = 0; t < trials; ++t) h.add(samples[t * grid.size() + i]);
        result.series.tv[i] = tv_distance(h.to_probabilities(max_bin), result.reference);
    }

    // Shift the step axis so the TV = 0.5 crossing sits at 0.
    double crossing = double(grid.back());
    for (size_t i = 0; i < grid.size(); ++i) {
        if (result.series.tv[i] <= 0.5) {
            if (i == 0) {
                crossing = double(grid[0]);
            } else {
                double t0 = result.series.tv[i - 1], t1 = result.series.tv[i];
                double frac = t0 > t1 ? (t0 - 0.5) / (t0 - t1) : 1.0;
                crossing = double(grid[i - 1]) + frac * double(grid[i] - grid[i - 1]);
            }
            break;
        }
    }
    result.series.rescaled_steps.resize(grid.size());
    for (size_t i = 0; i < grid.size(); ++i)
        result.series.rescaled_steps[i] = double(grid[i]) - crossing;
    return result;
}

// --- area / volume scaling ----------------------------------------------

std::vector<AreaVolumeCell> area_volume(size_t n, const std::vector<uint64_t> &grid,
                                        size_t trials, uint64_t seed, size_t workers) {
    if (n < 3) throw std::invalid_argument("area_volume: ring needs N >= 3");
    const size_t max_na = n / 2;
    std::vector<int8_t> values(trials * grid.size() * max_na);

    parallel_trials(trials, workers, seed, [&](size_t trial, Rng &rng) {
        StabilizerTableau tab(n);
        uint64_t step = 0;
        for (size_t i = 0; i < grid.size(); ++i) {
            for (; step < grid[i]; ++step) tab.walk_step(Topology::Ring, rng);
            std::vector<size_t> block;
            for (size_t na = 1; na <= max_na; ++na) {
                block.push_back(na - 1);  // contiguous block 0..na-1
                values[(trial * grid.size() + i) * max_na + (na - 1)] =
                    int8_t(tab.cut_entanglement(block));
            }
        }
    });

    std::vector<AreaVolumeCell> cells;
    for (size_t i = 0; i < grid.size(); ++i) {
        for (size_t na = 1; na <= max_na; ++na) {
            double sum = 0, sumsq = 0;
            for (size_t t = 0; t < trials; ++t) {
                double v = values[(t * grid.size() + i) * max_na + (na - 1)];
                sum += v;
                sumsq += v * v;
            }
            double mean = sum / double(trials);
            double var = std::max(sumsq / double(trials) - mean * mean, 0.0);
            AreaVolumeCell cell;
            cell.n = grid[i];
            cell.n_a = na;
            cell.mean_ebits = mean;
            cell.standard_error = std::sqrt(var / double(trials));
            cell.asymptotic_mean = stabilizer_pmf_mean(n, na);
            cells.push_back(cell);
        }
    }
    return cells;
}

// --- tripartite flow ----------------------------------------------------

namespace {

// Five qualitatively distinct starting states spanning the (S_C, E_N)
// plane: computational basis, random product, A-B Bell pairs, AB-C Bell
// pairs, global GHZ.
void prepare_tripartite_initial(StateVector &psi, size_t n_a, size_t n_b, size_t n_c,
                                int condition, Rng &rng) {
    const size_t n = n_a + n_b + n_c;
    auto bell = [&](size_t p, size_t q) {
        psi.apply_single_qubit(kHadamard, p);
        psi.apply_cnot(p, q);
    };
    switch (condition % 5) {
        case 0:
            break;
        case 1:
            for (size_t q = 0; q < n; ++q) psi.apply_single_qubit(sample_haar_u2(rng), q);
            break;
        case 2:
            for (size_t i = 0; i < std::min(n_a, n_b); ++i) bell(i, n_a + i);
            break;
        case 3:
            for (size_t i = 0; i < std::min(n_a + n_b, n_c); ++i) bell(i, n_a + n_b + i);
            break;
        case 4:
            psi.apply_single_qubit(kHadamard, 0);
            for (size_t q = 1; q < n; ++q) psi.apply_cnot(0, q);
            break;
    }
}

struct TripartiteProbe {
    std::vector<size_t> set_a, set_b, set_c, set_ab, a_local;

    TripartiteProbe(size_t n_a, size_t n_b, size_t n_c) {
        for (size_t q = 0; q < n_a; ++q) set_a.push_back(q);
        for (size_t q = 0; q < n_b; ++q) set_b.push_back(n_a + q);
        for (size_t q = 0; q < n_c; ++q) set_c.push_back(n_a + n_b + q);
        set_ab = set_a;
        set_ab.insert(set_ab.end(), set_b.begin(), set_b.end());
        for (size_t q = 0; q < n_a; ++q) a_local.push_back(q);
    }

    double entropy_c(const StateVector &psi) const {
        return entropy_vn(reduced_density(psi, set_c));
    }
    double negativity_ab(const StateVector &psi) const {
        return log_negativity(reduced_density(psi, set_ab), a_local);
    }
    double mutual_info_ab(const StateVector &psi) const {
        return mutual_information(psi, set_a, set_b);
    }
};

}  // namespace

TripartiteTrajectory tripartite_trajectory(size_t n_a, size_t n_b, size_t n_c,
                                           const std::vector<uint64_t> &grid,
                                           int initial_condition, uint64_t seed) {
    const size_t n = n_a + n_b + n_c;
    TripartiteProbe probe(n_a, n_b, n_c);
    Rng rng(derive_seed(seed, uint64_t(initial_condition)));
    StateVector psi(n);
    prepare_tripartite_initial(psi, n_a, n_b, n_c, initial_condition, rng);

    TripartiteTrajectory traj;
    traj.steps = grid;
    uint64_t step = 0;
    for (uint64_t target : grid) {
        for (; step < target; ++step) psi.walk_step(Topology::AllToAll, WalkMode::Haar, rng);
        traj.log_negativity_ab.push_back(probe.negativity_ab(psi));
        traj.mutual_information_ab.push_back(probe.mutual_info_ab(psi));
        traj.entropy_c.push_back(probe.entropy_c(psi));
    }
    return traj;
}

std::vector<FlowBin> tripartite_flow_field(size_t n_a, size_t n_b, size_t n_c,
                                           size_t trajectories, uint64_t trajectory_steps,
                                           uint64_t displacement_steps, uint64_t seed,
                                           size_t workers, double bin_width,
                                           uint64_t min_occupancy) {
    const size_t n = n_a + n_b + n_c;
    TripartiteProbe probe(n_a, n_b, n_c);
    const size_t points_per_traj = size_t(trajectory_steps) + 1;
    std::vector<double> xs(trajectories * points_per_traj), ys(trajectories * points_per_traj);

    parallel_trials(trajectories, workers, seed, [&](size_t traj, Rng &rng) {
        StateVector psi(n);
        prepare_tripartite_initial(psi, n_a, n_b, n_c, int(traj % 5), rng);
        for (uint64_t s = 0; s <= trajectory_steps; ++s) {
            xs[traj * points_per_traj + s] = probe.entropy_c(psi);
            ys[traj * points_per_traj + s] = probe.negativity_ab(psi);
            if (s < trajectory_steps) psi.walk_step(Topology::AllToAll, WalkMode::Haar, rng);
        }
    });

    struct Accum {
        uint64_t count = 0;
        double dx = 0, dy = 0;
    };
    std::map<std::pair<int, int>, Accum> bins;
    for (size_t t = 0; t < trajectories; ++t) {
        for (uint64_t s = 0; s + displacement_steps <= trajectory_steps; ++s) {
            double x = xs[t * points_per_traj + s];
            double y = ys[t * points_per_traj + s];
            auto key = std::make_pair(int(std::floor(x / bin_width)),
                                      int(std::floor(y / bin_width)));
            Accum &a = bins[key];
            a.count += 1;
            a.dx += xs[t * points_per_traj + s + displacement_steps] - x;
            a.dy += ys[t * points_per_traj + s + displacement_steps] - y;
        }
    }
    std::vector<FlowBin> out;
    for (const auto &[key, a] : bins) {
        if (a.count < min_occupancy) continue;
        FlowBin b;
        b.x_center = (key.first + 0.5) * bin_width;
        b.y_center = (key.second + 0.5) * bin_width;
        b.count = a.count;
        b.mean_dx = a.dx / double(a.count);
        b.mean_dy = a.dy / double(a.count);
        out.push_back(b);
    }
    return out;
}

}  // namespace entwalk
