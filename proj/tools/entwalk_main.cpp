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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "entwalk/analytics.hpp"
#include "entwalk/experiments.hpp"
#include "entwalk/gates.hpp"
#include "entwalk/purity_chain.hpp"

using namespace entwalk;

namespace {

// "0,5,10" or "0:100:5" (inclusive start, exclusive-ish stop, stride).
std::vector<uint64_t> parse_steps(const std::string &spec) {
    std::vector<uint64_t> out;
    if (spec.find(':') != std::string::npos) {
        uint64_t start = 0, stop = 0, stride = 1;
        if (std::sscanf(spec.c_str(), "%llu:%llu:%llu", (unsigned long long *)&start,
                        (unsigned long long *)&stop, (unsigned long long *)&stride) != 3 ||
            stride == 0)
            throw std::invalid_argument("bad steps range: " + spec);
        for (uint64_t s = start; s <= stop; s += stride) out.push_back(s);
        return out;
    }
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoull(tok));
    }
    if (out.empty()) throw std::invalid_argument("empty steps spec");
    return out;
}

// Line-oriented key=value file; '#' starts a comment.
std::map<std::string, std::string> load_config_file(const std::string &path) {
    std::map<std::string, std::string> kv;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t\r");
            size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (!key.empty()) kv[key] = value;
    }
    return kv;
}

struct CliState {
    ExperimentConfig cfg;
    std::string engine_name = "stabilizer";
    std::string topology_name = "all";
    std::string steps_spec;
    std::string config_path;
    CLI::App *sub = nullptr;
};

void add_common_flags(CLI::App *sub, CliState &st) {
    st.sub = sub;
    sub->add_option("--n", st.cfg.n, "total qubit count N");
    sub->add_option("--na", st.cfg.n_a, "block size N_A");
    sub->add_option("--nb", st.cfg.n_b, "block size N_B (tripartite)");
    sub->add_option("--nc", st.cfg.n_c, "block size N_C (tripartite)");
    sub->add_option("--engine", st.engine_name, "statevector|stabilizer|chain");
    sub->add_option("--topology", st.topology_name, "all|ring");
    sub->add_option("--steps", st.steps_spec, "comma list or start:stop:stride");
    sub->add_option("--trials", st.cfg.trials, "trial / realization count");
    sub->add_option("--seed", st.cfg.seed, "master seed");
    sub->add_option("--epsilon", st.cfg.epsilon, "accuracy parameter");
    sub->add_option("--out", st.cfg.out, "output CSV path");
    sub->add_option("--workers", st.cfg.workers, "worker threads (0 = auto)");
    sub->add_option("--config", st.config_path, "key=value config file (flags win)");
}

// Config file fills in fields the command line left untouched.
void finalize(CliState &st) {
    if (!st.config_path.empty()) {
        auto kv = load_config_file(st.config_path);
        auto fill = [&](const char *flag, const char *key, auto setter) {
            if (st.sub->count(flag) == 0 && kv.count(key)) setter(kv.at(key));
        };
        fill("--n", "n", [&](const std::string &v) { st.cfg.n = std::stoull(v); });
        fill("--na", "na", [&](const std::string &v) { st.cfg.n_a = std::stoull(v); });
        fill("--nb", "nb", [&](const std::string &v) { st.cfg.n_b = std::stoull(v); });
        fill("--nc", "nc", [&](const std::string &v) { st.cfg.n_c = std::stoull(v); });
        fill("--engine", "engine", [&](const std::string &v) { st.engine_name = v; });
        fill("--topology", "topology", [&](const std::string &v) { st.topology_name = v; });
        fill("--steps", "steps", [&](const std::string &v) { st.steps_spec = v; });
        fill("--trials", "trials", [&](const std::string &v) { st.cfg.trials = std::stoull(v); });
        fill("--seed", "seed", [&](const std::string &v) { st.cfg.seed = std::stoull(v); });
        fill("--epsilon", "epsilon", [&](const std::string &v) { st.cfg.epsilon = std::stod(v); });
        fill("--out", "out", [&](const std::string &v) { st.cfg.out = v; });
        fill("--workers", "workers", [&](const std::string &v) { st.cfg.workers = std::stoull(v); });
    }
    if (st.engine_name == "statevector") st.cfg.engine = Engine::StateVector;
    else if (st.engine_name == "stabilizer") st.cfg.engine = Engine::Stabilizer;
    else if (st.engine_name == "chain") st.cfg.engine = Engine::Chain;
    else throw std::invalid_argument("unknown engine: " + st.engine_name);
    if (st.topology_name == "all") st.cfg.topology = Topology::AllToAll;
    else if (st.topology_name == "ring") st.cfg.topology = Topology::Ring;
    else throw std::invalid_argument("unknown topology: " + st.topology_name);
    if (!st.steps_spec.empty()) st.cfg.steps = parse_steps(st.steps_spec);
    if (st.cfg.out.empty()) throw std::invalid_argument("--out is required");
    st.cfg.validate();
}

std::string companion_path(const std::string &out, const std::string &tag) {
    auto dot = out.rfind('.');
    if (dot == std::string::npos) return out + "." + tag;
    return out.substr(0, dot) + "." + tag + out.substr(dot);
}

void run_purity_convergence(const ExperimentConfig &cfg) {
    size_t mc_trials = cfg.engine == Engine::StateVector ? cfg.trials : 0;
    auto rows = purity_convergence(cfg.n, cfg.n_a, cfg.steps, mc_trials, cfg.seed, cfg.workers);
    CsvWriter w(cfg.out);
    w.header({"n", "exact_chain_purity", "mc_purity", "mc_stderr", "lemma1_bound", "asymptote"});
    for (const auto &r : rows)
        w.row({CsvWriter::fmt(r.n), CsvWriter::fmt(r.exact_chain_purity),
               r.mc_purity ? CsvWriter::fmt(*r.mc_purity) : "",
               r.mc_stderr ? CsvWriter::fmt(*r.mc_stderr) : "",
               CsvWriter::fmt(r.lemma1_bound_value), CsvWriter::fmt(r.asymptote)});
}

void run_trace(const ExperimentConfig &cfg) {
    auto res = entanglement_trace(cfg.engine, cfg.n, cfg.n_a, cfg.steps, cfg.trials, cfg.seed,
                                  cfg.workers, cfg.topology);
    {
        CsvWriter w(cfg.out);
        w.header({"realization", "n", "ebits"});
        for (size_t r = 0; r < res.ebits.size(); ++r)
            for (size_t i = 0; i < res.steps.size(); ++i)
                w.row({CsvWriter::fmt(uint64_t(r)), CsvWriter::fmt(res.steps[i]),
                       CsvWriter::fmt(res.ebits[r][i])});
    }
    CsvWriter w(companion_path(cfg.out, "mean"));
    w.header({"n", "mean_ebits", "stderr"});
    for (size_t i = 0; i < res.steps.size(); ++i)
        w.row({CsvWriter::fmt(res.steps[i]), CsvWriter::fmt(res.mean[i]),
               CsvWriter::fmt(res.standard_error[i])});
}

void run_cutoff(const ExperimentConfig &cfg) {
    auto res = cutoff_curve(cfg.engine, cfg.n, cfg.n_a, cfg.steps, cfg.trials, cfg.seed,
                            cfg.workers, cfg.topology);
    CsvWriter w(cfg.out);
    w.header({"n", "tv", "tv_rescaled_axis"});
    for (size_t i = 0; i < res.series.steps.size(); ++i)
        w.row({CsvWriter::fmt(res.series.steps[i]), CsvWriter::fmt(res.series.tv[i]),
               CsvWriter::fmt(res.series.rescaled_steps[i])});
}

void run_area_volume(const ExperimentConfig &cfg) {
    auto cells = area_volume(cfg.n, cfg.steps, cfg.trials, cfg.seed, cfg.workers);
    CsvWriter w(cfg.out);
    w.header({"n", "N_A", "mean_ebits", "stderr", "asymptotic_mean"});
    for (const auto &c : cells)
        w.row({CsvWriter::fmt(c.n), CsvWriter::fmt(uint64_t(c.n_a)),
               CsvWriter::fmt(c.mean_ebits), CsvWriter::fmt(c.standard_error),
               CsvWriter::fmt(c.asymptotic_mean)});
}

void run_tripartite(const ExperimentConfig &cfg) {
    {
        CsvWriter w(cfg.out);
        w.header({"initial_condition", "n", "e_n_ab", "mutual_info_ab", "s_c"});
        for (int cond = 0; cond < 5; ++cond) {
            auto traj = tripartite_trajectory(cfg.n_a, cfg.n_b, cfg.n_c, cfg.steps, cond,
                                              cfg.seed);
            for (size_t i = 0; i < traj.steps.size(); ++i)
                w.row({CsvWriter::fmt(uint64_t(cond)), CsvWriter::fmt(traj.steps[i]),
                       CsvWriter::fmt(traj.log_negativity_ab[i]),
                       CsvWriter::fmt(traj.mutual_information_ab[i]),
                       CsvWriter::fmt(traj.entropy_c[i])});
        }
    }
    uint64_t horizon = cfg.steps.back();
    auto bins = tripartite_flow_field(cfg.n_a, cfg.n_b, cfg.n_c, cfg.trials, horizon, 10,
                                      cfg.seed, cfg.workers);
    CsvWriter w(companion_path(cfg.out, "flow"));
    w.header({"x_center", "y_center", "count", "mean_dx", "mean_dy"});
    for (const auto &b : bins)
        w.row({CsvWriter::fmt(b.x_center), CsvWriter::fmt(b.y_center), CsvWriter::fmt(b.count),
               CsvWriter::fmt(b.mean_dx), CsvWriter::fmt(b.mean_dy)});
}

void run_oracles(const ExperimentConfig &cfg) {
    CsvWriter w(cfg.out);
    w.header({"table", "key", "value"});
    for (size_t na = 1; 2 * na <= cfg.n; ++na) {
        w.row({"page_average", CsvWriter::fmt(uint64_t(na)),
               CsvWriter::fmt(page_average(na, cfg.n - na))});
        w.row({"asymptotic_purity", CsvWriter::fmt(uint64_t(na)),
               CsvWriter::fmt(asymptotic_purity(na, cfg.n - na))});
        auto pmf = stabilizer_pmf(cfg.n, na);
        for (size_t e = 0; e < pmf.size(); ++e) {
            char key[64];
            std::snprintf(key, sizeof key, "na=%zu;E=%zu", na, e);
            w.row({"stabilizer_pmf", key, CsvWriter::fmt(pmf[e])});
        }
    }
    auto pi = stationary_size_distribution(cfg.n);
    for (size_t k = 0; k <= cfg.n; ++k)
        w.row({"stationary_support", CsvWriter::fmt(uint64_t(k)), CsvWriter::fmt(pi.probs[k])});
    auto th = theorem1_thresholds({cfg.n, cfg.n_a > 0 ? cfg.n_a : cfg.n / 2, cfg.epsilon});
    w.row({"thresholds", "n_min", CsvWriter::fmt(th.n_min)});
    w.row({"thresholds", "entropy_lower_bound", CsvWriter::fmt(th.entropy_lower_bound)});
    w.row({"thresholds", "fidelity_lower_bound", CsvWriter::fmt(th.fidelity_lower_bound)});
    auto gap = spectral_gap_numeric(cfg.n, ChainScope::Lumped);
    w.row({"spectral", "gap", CsvWriter::fmt(gap.gap)});
}

int run_selfcheck(uint64_t seed) {
    int failures = 0;
    auto report = [&](const char *name, bool ok, double detail) {
        std::printf("%-34s %s (%.3g)\n", name, ok ? "PASS" : "FAIL", detail);
        if (!ok) ++failures;
    };
    Rng rng(seed);
    auto mom = haar_bloch_moments(100000, rng);
    double worst = 0;
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v)
            worst = std::max(worst, std::abs(mom[u][v] - (u == v ? 1.0 / 3.0 : 0.0)));
    report("haar bloch moments", worst < 0.01, worst);

    double worst_req = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            auto rep = requirement1_exhaustive_clifford(static_cast<PauliLetter>(a),
                                                        static_cast<PauliLetter>(b));
            worst_req = std::max(worst_req, rep.max_abs_deviation);
        }
    report("clifford moment identity", worst_req < 1e-12, worst_req);

    auto rep = requirement1_check(PauliLetter::X, PauliLetter::X, GateSampler::Haar, 50000, rng);
    report("haar moment identity (MC)", rep.max_deviation_sigmas < 5.0,
           rep.max_deviation_sigmas);

    auto r2 = spectral_gap_numeric(2, ChainScope::Lumped);
    report("N=2 spectral gap 8/9", std::abs(r2.gap - 8.0 / 9.0) < 1e-12, r2.gap);
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"random two-qubit-gate walk experiments"};
    app.require_subcommand(1);

    std::map<std::string, CliState> states;
    const char *names[] = {"purity-convergence", "trace", "cutoff", "area-volume",
                           "tripartite", "oracles"};
    for (const char *name : names) {
        CLI::App *sub = app.add_subcommand(name);
        add_common_flags(sub, states[name]);
        states[name].cfg.experiment = name;
    }
    CLI::App *selfcheck = app.add_subcommand("selfcheck", "run moment/requirement checks");
    uint64_t selfcheck_seed = 1;
    selfcheck->add_option("--seed", selfcheck_seed, "master seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (selfcheck->parsed()) return run_selfcheck(selfcheck_seed);
        for (auto &[name, st] : states) {
            if (!st.sub->parsed()) continue;
            // Defaults that make small invocations work out of the box.
            if (st.cfg.steps.empty() && st.steps_spec.empty() && st.config_path.empty())
                st.cfg.steps = {0};
            finalize(st);
            if (name == "purity-convergence") run_purity_convergence(st.cfg);
            else if (name == "trace") run_trace(st.cfg);
            else if (name == "cutoff") run_cutoff(st.cfg);
            else if (name == "area-volume") run_area_volume(st.cfg);
            else if (name == "tripartite") run_tripartite(st.cfg);
            else run_oracles(st.cfg);
        }
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
