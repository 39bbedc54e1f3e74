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

#ifndef QINV_PROTOCOL_H
#define QINV_PROTOCOL_H

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qinv/noise.h"
#include "qinv/subspaces.h"

namespace qinv {

/// Leakage below this counts as confinement when no noise is applied.
inline constexpr double kConfinementTolerance = 1e-9;

struct ProtocolConfig {
    int n = 4;
    GateFamily family = GateFamily::SWAP;
    /// The state starts inside (and leakage is measured against) the span of these subspaces.
    std::vector<SubspaceLabel> start_labels;
    int length = 100;
    int trials = 10;
    uint64_t seed = 1;
    NoiseModel noise;
    /// Leakage is recorded after every record_every gates (0: only at the end) and always after the last.
    int record_every = 0;
    /// alpha is drawn uniformly from this set for every SWAP_ALPHA gate.
    std::vector<double> alphas = {0.5};
    int threads = 1;

    bool operator==(const ProtocolConfig &other) const = default;
};

/// Throws std::invalid_argument on a malformed config.
void validate_config(const ProtocolConfig &config);

struct LeakageSnapshot {
    int gates = 0;
    double mean = 0;
    /// Sample standard deviation across trials (0 for a single trial).
    double stddev = 0;
    double max = 0;
};

struct LeakageReport {
    ProtocolConfig config;
    std::vector<LeakageSnapshot> snapshots;
    /// Mean final projection onto every subspace of the family's decomposition.
    std::vector<SubspaceLabel> histogram_labels;
    std::vector<double> histogram;
    double max_leakage = 0;
    /// Largest |sum of projections over the full decomposition - 1| over all snapshots and trials.
    double max_completeness_defect = 0;
    double wall_time_seconds = 0;
    std::vector<std::string> notes;

    /// No-noise runs must stay confined; noisy runs are informational.
    bool confined() const {
        return max_leakage < kConfinementTolerance;
    }
};

/// L gates, pairs uniform: ordered pairs for CNOT, unordered (p < q) otherwise.
std::vector<GateOp> random_gate_sequence(GateFamily family, int n, int length, std::mt19937_64 &rng,
                                         const std::vector<double> &alphas = {0.5});

/// Random unit vector with independent standard complex Gaussian coordinates over the basis.
StateVector initialize_in_subspace(const Subspace &sub, std::mt19937_64 &rng);
/// Same, over the union of several mutually orthogonal subspaces.
StateVector initialize_in_subspaces(const std::vector<const Subspace *> &subs, std::mt19937_64 &rng);

/// Initialize inside the start subspaces, apply a noisy random sequence, and measure leakage.
LeakageReport run_protocol(const ProtocolConfig &config);

/// Leakage out of the whole Hamming-weight class (default weight n/2) under SWAP^alpha sequences.
LeakageReport hamming_leakage_check(int n, const std::vector<double> &alphas, const NoiseModel &noise, int length,
                                    int trials, uint64_t seed, int weight = -1);

struct SensitivityReport {
    LeakageReport from_v0;
    LeakageReport from_v1;
    LeakageReport from_v2;
    /// Informational: mean final leakage from V2 <= mean final leakage from V1.
    bool large_subspace_leaks_less = false;
};

/// Runs the CNOT protocol from V0, V1 and V2 under identical noise and seeds. Requires n <= 8.
SensitivityReport cnot_subspace_sensitivity(int n, const NoiseModel &noise, int length, int trials, uint64_t seed);

/// Seed for one trial and stream, a splitmix64 mix of its inputs.
uint64_t derive_seed(uint64_t seed, uint64_t trial, uint64_t stream);

}  // namespace qinv

#endif
