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

#ifndef QINV_NOISE_H
#define QINV_NOISE_H

#include <optional>
#include <random>
#include <string>

#include "qinv/gates.h"

namespace qinv {

enum class NoiseKind { NONE, ALPHA_OVER_ROTATION, PHASE_ERROR, DEPOLARIZING };

/// Per-gate imperfection model.
///
///   ALPHA_OVER_ROTATION  SWAP and SWAP^alpha gates run with alpha + epsilon (alpha = 1 for SWAP).
///   PHASE_ERROR          CP picks up phase pi + epsilon instead of pi on |11>; every other family
///                        is followed by exp(i epsilon Z_p Z_q) on its pair.
///   DEPOLARIZING         with probability p the gate is followed by a uniformly random
///                        non-identity two-qubit Pauli on its pair.
struct NoiseModel {
    NoiseKind kind = NoiseKind::NONE;
    double epsilon = 0;
    double probability = 0;

    static NoiseModel none() {
        return {};
    }
    static NoiseModel alpha_over_rotation(double eps) {
        return {NoiseKind::ALPHA_OVER_ROTATION, eps, 0};
    }
    static NoiseModel phase_error(double eps) {
        return {NoiseKind::PHASE_ERROR, eps, 0};
    }
    static NoiseModel depolarizing(double p) {
        return {NoiseKind::DEPOLARIZING, 0, p};
    }

    /// "none", "alpha:<eps>", "phase:<eps>", "depolarizing:<p>".
    std::string str() const;
    bool operator==(const NoiseModel &other) const = default;
};

/// Inverse of NoiseModel::str(); also accepts the long names "alpha-over-rotation" and "phase-error".
std::optional<NoiseModel> parse_noise(const std::string &text);

/// Throws std::invalid_argument if the parameters are out of range or the model does not apply to
/// the family (alpha over-rotation needs SWAP or SWAP_ALPHA).
void validate_noise(const NoiseModel &noise, GateFamily family);

/// Applies the gate as the noise model dictates. NONE is bit-identical to apply_gate_inplace.
void apply_noisy_gate(StateVector &state, const GateOp &gate, const NoiseModel &noise, std::mt19937_64 &rng);

}  // namespace qinv

#endif
