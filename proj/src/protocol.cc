// Copyright 2026 The qinvariant Authors
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

#include "qinv/protocol.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace qinv {

uint64_t derive_seed(uint64_t seed, uint64_t trial, uint64_t stream) {
    auto mix = [](uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    return mix(mix(mix(seed) ^ trial) ^ stream);
}

void validate_config(const ProtocolConfig &config) {
    if (config.n < 2 || config.n > size_limits().max_dense_qubits) {
        throw std::invalid_argument("protocol needs 2 <= n <= " + std::to_string(size_limits().max_dense_qubits));
    }
    if (config.length < 1) {
        throw std::invalid_argument("protocol length must be >= 1");
    }
    if (config.trials < 1) {
        throw std::invalid_argument("protocol trials must be >= 1");
    }
    if (config.record_every < 0) {
        throw std::invalid_argument("record_every must be >= 0");
    }
    if (config.threads < 1) {
        throw std::invalid_argument("threads must be >= 1");
    }
    if (config.start_labels.empty()) {
        throw std::invalid_argument("protocol needs at least one start label");
    }
    if (config.family == GateFamily::SWAP_ALPHA && config.alphas.empty()) {
        throw std::invalid_argument("swap-alpha protocol needs at least one alpha");
    }
    for (const auto &label : config.start_labels) {
        validate_label(label, config.n);
        bool fits = false;
        switch (config.family) {
            case GateFamily::CP:
                fits = label.kind == LabelKind::CP_BASIS;
                break;
            case GateFamily::CNOT:
                fits = label.kind == LabelKind::CNOT;
                break;
            case GateFamily::SWAP:
            case GateFamily::SWAP_ALPHA:
                fits = label.kind == LabelKind::SWAP_IRREP || label.kind == LabelKind::SWAP_WEIGHT;
                break;
        }
        if (!fits) {
            throw std::invalid_argument("label " + label.str() + " does not belong to family " +
                                        std::string(family_name(config.family)));
        }
    }
    validate_noise(config.noise, config.family);
}

std::vector<GateOp> random_gate_sequence(GateFamily family, int n, int length, std::mt19937_64 &rng,
                                         const std::vector<double> &alphas) {
    if (n < 2) {
        throw std::invalid_argument("random_gate_sequence: n must be >= 2");
    }
    if (length < 1) {
        throw std::invalid_argument("random_gate_sequence: length must be >= 1");
    }
    if (family == GateFamily::SWAP_ALPHA && alphas.empty()) {
        throw std::invalid_argument("random_gate_sequence: swap-alpha needs an alpha set");
    }
    const bool ordered = family == GateFamily::CNOT;
    const int pair_count = ordered ? n * (n - 1) : n * (n - 1) / 2;
    std::uniform_int_distribution<int> pair_dist(0, pair_count - 1);
    std::uniform_int_distribution<size_t> alpha_dist(0, alphas.empty() ? 0 : alphas.size() - 1);
    std::vector<GateOp> out;
    out.reserve(length);
    for (int k = 0; k < length; k++) {
        int idx = pair_dist(rng);
        int p;
        int q;
        if (ordered) {
            p = idx / (n - 1);
            q = idx % (n - 1);
            if (q >= p) {
                q++;
            }
        } else {
            p = 0;
            while (idx >= n - 1 - p) {
                idx -= n - 1 - p;
                p++;
            }
            q = p + 1 + idx;
        }
        switch (family) {
            case GateFamily::CP:
                out.push_back(GateOp::cp(p, q));
                break;
            case GateFamily::CNOT:
                out.push_back(GateOp::cnot(p, q));
                break;
            case GateFamily::SWAP:
                out.push_back(GateOp::swap(p, q));
                break;
            case GateFamily::SWAP_ALPHA:
                out.push_back(GateOp::swap_alpha(p, q, alphas[alpha_dist(rng)]));
                break;
        }
    }
    return out;
}

StateVector initialize_in_subspaces(const std::vector<const Subspace *> &subs, std::mt19937_64 &rng) {
    if (subs.empty()) {
        throw std::invalid_argument("initialize_in_subspaces: no subspaces");
    }
    std::normal_distribution<double> normal;
    StateVector out(subs.front()->num_qubits());
    for (const auto *sub : subs) {
        if (sub->dim() < 1) {
            throw std::invalid_argument("initialize_in_subspace: empty subspace");
        }
        Eigen::VectorXcd coords(sub->dim());
        for (Eigen::Index k = 0; k < coords.size(); k++) {
            double re = normal(rng);
            double im = normal(rng);
            coords(k) = complex_t{re, im};
        }
        StateVector part = sub->embed(coords);
        for (uint64_t k = 0; k < out.dim(); k++) {
            out[k] += part[k];
        }
    }
    out.normalize();
    return out;
}

StateVector initialize_in_subspace(const Subspace &sub, std::mt19937_64 &rng) {
    return initialize_in_subspaces({&sub}, rng);
}

namespace {

struct TrialResult {
    std::vector<double> leakage;
    std::vector<double> final_projection;
    double completeness_defect = 0;
};

/// Shared engine: targets define leakage, `full` defines the projection histogram.
LeakageReport run_trials(const ProtocolConfig &config, const std::vector<Subspace> &targets, const Decomposition &full) {
    auto start_time = std::chrono::steady_clock::now();
    std::vector<int> schedule;
    if (config.record_every > 0) {
        for (int g = config.record_every; g < config.length; g += config.record_every) {
            schedule.push_back(g);
        }
    }
    schedule.push_back(config.length);

    std::vector<const Subspace *> target_ptrs;
    for (const auto &t : targets) {
        target_ptrs.push_back(&t);
    }

    std::vector<TrialResult> results(config.trials);
    auto run_one = [&](int trial) {
        std::mt19937_64 circuit_rng(derive_seed(config.seed, static_cast<uint64_t>(trial), 0));
        std::mt19937_64 noise_rng(derive_seed(config.seed, static_cast<uint64_t>(trial), 1));
        StateVector state = initialize_in_subspaces(target_ptrs, circuit_rng);
        auto gates = random_gate_sequence(config.family, config.n, config.length, circuit_rng, config.alphas);
        TrialResult &result = results[trial];
        size_t next = 0;
        for (int g = 0; g < config.length; g++) {
            apply_noisy_gate(state, gates[g], config.noise, noise_rng);
            if (g + 1 != schedule[next]) {
                continue;
            }
            double inside = 0;
            for (const auto *t : target_ptrs) {
                inside += project(state, *t);
            }
            result.leakage.push_back(std::clamp(1.0 - inside, 0.0, 1.0));
            auto projections = project_all(state, full);
            double total = 0;
            for (double p : projections) {
                total += p;
            }
            result.completeness_defect = std::max(result.completeness_defect, std::abs(total - 1.0));
            if (next + 1 == schedule.size()) {
                result.final_projection = std::move(projections);
            }
            next++;
        }
    };

    if (config.threads == 1) {
        for (int t = 0; t < config.trials; t++) {
            run_one(t);
        }
    } else {
        std::atomic<int> counter{0};
        std::vector<std::jthread> workers;
        for (int w = 0; w < std::min(config.threads, config.trials); w++) {
            workers.emplace_back([&] {
                for (int t = counter++; t < config.trials; t = counter++) {
                    run_one(t);
                }
            });
        }
    }

    LeakageReport report;
    report.config = config;
    for (size_t s = 0; s < schedule.size(); s++) {
        LeakageSnapshot snap;
        snap.gates = schedule[s];
        double sum = 0;
        for (const auto &r : results) {
            sum += r.leakage[s];
            snap.max = std::max(snap.max, r.leakage[s]);
        }
        snap.mean = sum / config.trials;
        if (config.trials > 1) {
            double sq = 0;
            for (const auto &r : results) {
                sq += (r.leakage[s] - snap.mean) * (r.leakage[s] - snap.mean);
            }
            snap.stddev = std::sqrt(sq / (config.trials - 1));
        }
        report.max_leakage = std::max(report.max_leakage, snap.max);
        report.snapshots.push_back(snap);
    }
    for (const auto &sub : full.subspaces) {
        report.histogram_labels.push_back(sub.label());
    }
    report.histogram.assign(full.subspaces.size(), 0.0);
    for (const auto &r : results) {
        for (size_t k = 0; k < r.final_projection.size(); k++) {
            report.histogram[k] += r.final_projection[k] / config.trials;
        }
        report.max_completeness_defect = std::max(report.max_completeness_defect, r.completeness_defect);
    }
    report.notes.push_back("initialization and measurement are ideal; leakage snapshots do not collapse the state");
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
    return report;
}

}  // namespace

LeakageReport run_protocol(const ProtocolConfig &config) {
    validate_config(config);
    Decomposition full = decomposition_for(config.family, config.n);
    std::vector<Subspace> targets;
    for (const auto &label : config.start_labels) {
        if (label.kind == LabelKind::SWAP_WEIGHT) {
            targets.push_back(swap_weight_subspace(config.n, static_cast<int>(label.index)));
            continue;
        }
        const Subspace *sub = full.find(label);
        if (sub == nullptr) {
            throw std::invalid_argument("no subspace " + label.str() + " in the decomposition");
        }
        targets.push_back(*sub);
    }
    return run_trials(config, targets, full);
}

LeakageReport hamming_leakage_check(int n, const std::vector<double> &alphas, const NoiseModel &noise, int length,
                                    int trials, uint64_t seed, int weight) {
    ProtocolConfig config;
    config.n = n;
    config.family = GateFamily::SWAP_ALPHA;
    config.start_labels = {SubspaceLabel::weight(weight < 0 ? n / 2 : weight)};
    config.length = length;
    config.trials = trials;
    config.seed = seed;
    config.noise = noise;
    config.alphas = alphas;
    return run_protocol(config);
}

SensitivityReport cnot_subspace_sensitivity(int n, const NoiseModel &noise, int length, int trials, uint64_t seed) {
    if (n > 8) {
        throw std::invalid_argument("cnot_subspace_sensitivity: n must be <= 8");
    }
    ProtocolConfig config;
    config.n = n;
    config.family = GateFamily::CNOT;
    config.length = length;
    config.trials = trials;
    config.seed = seed;
    config.noise = noise;
    SensitivityReport report;
    config.start_labels = {SubspaceLabel::cnot(0)};
    report.from_v0 = run_protocol(config);
    config.start_labels = {SubspaceLabel::cnot(1)};
    report.from_v1 = run_protocol(config);
    config.start_labels = {SubspaceLabel::cnot(2)};
    report.from_v2 = run_protocol(config);
    report.large_subspace_leaks_less =
        report.from_v2.snapshots.back().mean <= report.from_v1.snapshots.back().mean;
    return report;
}

}  // namespace qinv
