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

#include "qinv/noise.h"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qinv {

std::string NoiseModel::str() const {
    std::ostringstream out;
    out.precision(17);
    switch (kind) {
        case NoiseKind::NONE:
            return "none";
        case NoiseKind::ALPHA_OVER_ROTATION:
            out << "alpha:" << epsilon;
            break;
        case NoiseKind::PHASE_ERROR:
            out << "phase:" << epsilon;
            break;
        case NoiseKind::DEPOLARIZING:
            out << "depolarizing:" << probability;
            break;
    }
    return out.str();
}

std::optional<NoiseModel> parse_noise(const std::string &text) {
    if (text == "none") {
        return NoiseModel::none();
    }
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        return std::nullopt;
    }
    std::string kind = text.substr(0, colon);
    std::string value = text.substr(colon + 1);
    double x;
    try {
        size_t used = 0;
        x = std::stod(value, &used);
        if (used != value.size()) {
            return std::nullopt;
        }
    } catch (const std::exception &) {
        return std::nullopt;
    }
    if (kind == "alpha" || kind == "alpha-over-rotation") {
        return NoiseModel::alpha_over_rotation(x);
    }
    if (kind == "phase" || kind == "phase-error") {
        return NoiseModel::phase_error(x);
    }
    if (kind == "depolarizing" || kind == "depol") {
        return NoiseModel::depolarizing(x);
    }
    return std::nullopt;
}

void validate_noise(const NoiseModel &noise, GateFamily family) {
    if (!std::isfinite(noise.epsilon)) {
        throw std::invalid_argument("noise epsilon must be finite");
    }
    if (!(noise.probability >= 0 && noise.probability <= 1)) {
        throw std::invalid_argument("depolarizing probability must be in [0, 1]");
    }
    if (noise.kind == NoiseKind::ALPHA_OVER_ROTATION && family != GateFamily::SWAP &&
        family != GateFamily::SWAP_ALPHA) {
        throw std::invalid_argument("alpha over-rotation applies only to swap and swap-alpha");
    }
}

void apply_noisy_gate(StateVector &state, const GateOp &gate, const NoiseModel &noise, std::mt19937_64 &rng) {
    switch (noise.kind) {
        case NoiseKind::NONE:
            apply_gate_inplace(state, gate);
            return;
        case NoiseKind::ALPHA_OVER_ROTATION:
            if (gate.family == GateFamily::SWAP || gate.family == GateFamily::SWAP_ALPHA) {
                double alpha = gate.alpha.value_or(1.0) + noise.epsilon;
                apply_gate_inplace(state, GateOp::swap_alpha(gate.p, gate.q, alpha));
            } else {
                apply_gate_inplace(state, gate);
            }
            return;
        case NoiseKind::PHASE_ERROR:
            if (gate.family == GateFamily::CP) {
                validate_gate(gate, state.num_qubits());
                apply_controlled_phase(state, gate.p, gate.q, std::numbers::pi + noise.epsilon);
            } else {
                apply_gate_inplace(state, gate);
                apply_zz_phase(state, gate.p, gate.q, noise.epsilon);
            }
            return;
        case NoiseKind::DEPOLARIZING: {
            apply_gate_inplace(state, gate);
            std::bernoulli_distribution fault(noise.probability);
            if (fault(rng)) {
                std::uniform_int_distribution<int> which(1, 15);
                int k = which(rng);
                apply_pauli(state, gate.p, static_cast<Pauli>(k & 3));
                apply_pauli(state, gate.q, static_cast<Pauli>(k >> 2));
            }
            return;
        }
    }
}

}  // namespace qinv
