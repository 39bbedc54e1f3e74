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

#include "qinv/gates.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qinv {

std::string_view family_name(GateFamily family) {
    switch (family) {
        case GateFamily::CP:
            return "cp";
        case GateFamily::CNOT:
            return "cnot";
        case GateFamily::SWAP:
            return "swap";
        case GateFamily::SWAP_ALPHA:
            return "swap-alpha";
    }
    return "?";
}

std::optional<GateFamily> parse_family(std::string_view text) {
    std::string t(text);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    std::replace(t.begin(), t.end(), '_', '-');
    if (t == "cp") {
        return GateFamily::CP;
    }
    if (t == "cnot") {
        return GateFamily::CNOT;
    }
    if (t == "swap") {
        return GateFamily::SWAP;
    }
    if (t == "swap-alpha" || t == "swapalpha") {
        return GateFamily::SWAP_ALPHA;
    }
    return std::nullopt;
}

GateOp GateOp::cp(int a, int b) {
    return {GateFamily::CP, a, b, std::nullopt};
}
GateOp GateOp::cnot(int control, int target) {
    return {GateFamily::CNOT, control, target, std::nullopt};
}
GateOp GateOp::swap(int a, int b) {
    return {GateFamily::SWAP, a, b, std::nullopt};
}
GateOp GateOp::swap_alpha(int a, int b, double alpha) {
    return {GateFamily::SWAP_ALPHA, a, b, alpha};
}

std::string to_string(const GateOp &gate) {
    std::ostringstream out;
    out << family_name(gate.family) << "(" << gate.p << "," << gate.q;
    if (gate.alpha) {
        out << ";alpha=" << *gate.alpha;
    }
    out << ")";
    return out.str();
}

void validate_gate(const GateOp &gate, int n) {
    if (gate.p < 0 || gate.q < 0 || gate.p >= n || gate.q >= n) {
        throw std::invalid_argument(to_string(gate) + ": qubit index out of range for n=" + std::to_string(n));
    }
    if (gate.p == gate.q) {
        throw std::invalid_argument(to_string(gate) + ": gate needs two distinct qubits");
    }
    if ((gate.family == GateFamily::SWAP_ALPHA) != gate.alpha.has_value()) {
        throw std::invalid_argument(to_string(gate) + ": alpha must be given exactly for swap-alpha");
    }
    if (gate.alpha && !std::isfinite(*gate.alpha)) {
        throw std::invalid_argument(to_string(gate) + ": alpha must be finite");
    }
}

std::pair<complex_t, complex_t> swap_alpha_coefficients(double alpha) {
    complex_t phase = std::polar(1.0, std::numbers::pi * alpha);
    return {(1.0 + phase) / 2.0, (1.0 - phase) / 2.0};
}

namespace {

/// Spreads the bits of k so that positions lo and hi (lo < hi) are zero.
inline uint64_t insert_two_zero_bits(uint64_t k, int lo, int hi) {
    uint64_t lo_mask = (uint64_t{1} << lo) - 1;
    k = (k & lo_mask) | ((k & ~lo_mask) << 1);
    uint64_t hi_mask = (uint64_t{1} << hi) - 1;
    return (k & hi_mask) | ((k & ~hi_mask) << 1);
}

template <typename Body>
void for_each_pair_base(const StateVector &state, int a, int b, Body &&body) {
    int lo = std::min(a, b);
    int hi = std::max(a, b);
    uint64_t count = state.dim() >> 2;
    for (uint64_t k = 0; k < count; k++) {
        body(insert_two_zero_bits(k, lo, hi));
    }
}

}  // namespace

void apply_gate_inplace(StateVector &state, const GateOp &gate) {
    validate_gate(gate, state.num_qubits());
    const uint64_t mp = uint64_t{1} << gate.p;
    const uint64_t mq = uint64_t{1} << gate.q;
    auto amps = state.amplitudes();
    switch (gate.family) {
        case GateFamily::CP:
            for_each_pair_base(state, gate.p, gate.q, [&](uint64_t base) { amps[base | mp | mq] = -amps[base | mp | mq]; });
            break;
        case GateFamily::CNOT:
            for_each_pair_base(state, gate.p, gate.q, [&](uint64_t base) { std::swap(amps[base | mp], amps[base | mp | mq]); });
            break;
        case GateFamily::SWAP:
            for_each_pair_base(state, gate.p, gate.q, [&](uint64_t base) { std::swap(amps[base | mp], amps[base | mq]); });
            break;
        case GateFamily::SWAP_ALPHA: {
            auto [a, b] = swap_alpha_coefficients(*gate.alpha);
            for_each_pair_base(state, gate.p, gate.q, [&](uint64_t base) {
                complex_t x = amps[base | mp];
                complex_t y = amps[base | mq];
                amps[base | mp] = a * x + b * y;
                amps[base | mq] = b * x + a * y;
            });
            break;
        }
    }
}

StateVector apply_gate(StateVector state, const GateOp &gate) {
    apply_gate_inplace(state, gate);
    return state;
}

void apply_sequence_inplace(StateVector &state, const std::vector<GateOp> &gates) {
    for (const auto &g : gates) {
        apply_gate_inplace(state, g);
    }
}

void apply_controlled_phase(StateVector &state, int a, int b, double phi) {
    validate_gate(GateOp::cp(a, b), state.num_qubits());
    const uint64_t both = (uint64_t{1} << a) | (uint64_t{1} << b);
    const complex_t phase = std::polar(1.0, phi);
    auto amps = state.amplitudes();
    for_each_pair_base(state, a, b, [&](uint64_t base) { amps[base | both] *= phase; });
}

void apply_zz_phase(StateVector &state, int a, int b, double eps) {
    validate_gate(GateOp::cp(a, b), state.num_qubits());
    const complex_t same = std::polar(1.0, eps);
    const complex_t differ = std::polar(1.0, -eps);
    auto amps = state.amplitudes();
    for (uint64_t k = 0; k < amps.size(); k++) {
        bool parity = ((k >> a) ^ (k >> b)) & 1;
        amps[k] *= parity ? differ : same;
    }
}

void apply_pauli(StateVector &state, int qubit, Pauli pauli) {
    if (qubit < 0 || qubit >= state.num_qubits()) {
        throw std::invalid_argument("apply_pauli: qubit index out of range");
    }
    if (pauli == Pauli::I) {
        return;
    }
    const uint64_t m = uint64_t{1} << qubit;
    auto amps = state.amplitudes();
    for (uint64_t k = 0; k < amps.size(); k++) {
        if (k & m) {
            continue;
        }
        complex_t &zero = amps[k];
        complex_t &one = amps[k | m];
        switch (pauli) {
            case Pauli::X:
                std::swap(zero, one);
                break;
            case Pauli::Y: {
                // Y|0> = i|1>, Y|1> = -i|0>
                complex_t z = zero;
                zero = complex_t{0, -1} * one;
                one = complex_t{0, 1} * z;
                break;
            }
            case Pauli::Z:
                one = -one;
                break;
            case Pauli::I:
                break;
        }
    }
}

Eigen::Matrix4cd local_matrix(const GateOp &gate) {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
    switch (gate.family) {
        case GateFamily::CP:
            m(3, 3) = -1;
            break;
        case GateFamily::CNOT:
            // control is local bit 0, target local bit 1: |10>_local (l=1) <-> |11>_local (l=3)
            m(1, 1) = 0;
            m(3, 3) = 0;
            m(1, 3) = 1;
            m(3, 1) = 1;
            break;
        case GateFamily::SWAP:
            m(1, 1) = 0;
            m(2, 2) = 0;
            m(1, 2) = 1;
            m(2, 1) = 1;
            break;
        case GateFamily::SWAP_ALPHA: {
            auto [a, b] = swap_alpha_coefficients(gate.alpha.value());
            m(1, 1) = a;
            m(2, 2) = a;
            m(1, 2) = b;
            m(2, 1) = b;
            break;
        }
    }
    return m;
}

static void check_dense_limit(int n) {
    if (n > size_limits().max_dense_qubits) {
        throw std::length_error("dense matrix for " + std::to_string(n) + " qubits exceeds limit of " +
                                std::to_string(size_limits().max_dense_qubits));
    }
}

UnitaryMatrix gate_matrix(const GateOp &gate, int n) {
    check_dense_limit(n);
    validate_gate(gate, n);
    const Eigen::Matrix4cd local = local_matrix(gate);
    const uint64_t dim = uint64_t{1} << n;
    const uint64_t pair_mask = (uint64_t{1} << gate.p) | (uint64_t{1} << gate.q);
    auto local_index = [&](uint64_t k) { return ((k >> gate.p) & 1) | (((k >> gate.q) & 1) << 1); };
    auto with_local = [&](uint64_t rest, uint64_t l) {
        return rest | ((l & 1) << gate.p) | (((l >> 1) & 1) << gate.q);
    };
    UnitaryMatrix u = UnitaryMatrix::Zero(dim, dim);
    for (uint64_t col = 0; col < dim; col++) {
        uint64_t rest = col & ~pair_mask;
        uint64_t lc = local_index(col);
        for (uint64_t lr = 0; lr < 4; lr++) {
            u(with_local(rest, lr), col) = local(lr, lc);
        }
    }
    return u;
}

UnitaryMatrix sequence_matrix(const std::vector<GateOp> &gates, int n) {
    check_dense_limit(n);
    const uint64_t dim = uint64_t{1} << n;
    UnitaryMatrix u(dim, dim);
    for (uint64_t col = 0; col < dim; col++) {
        StateVector s = basis_state(n, col);
        apply_sequence_inplace(s, gates);
        for (uint64_t row = 0; row < dim; row++) {
            u(row, col) = s[row];
        }
    }
    return u;
}

double unitarity_defect(const UnitaryMatrix &u) {
    return (u.adjoint() * u - UnitaryMatrix::Identity(u.rows(), u.cols())).norm();
}

std::vector<GateOp> family_generators(GateFamily family, int n, double alpha) {
    std::vector<GateOp> out;
    for (int p = 0; p < n; p++) {
        for (int q = 0; q < n; q++) {
            if (p == q) {
                continue;
            }
            switch (family) {
                case GateFamily::CNOT:
                    out.push_back(GateOp::cnot(p, q));
                    break;
                case GateFamily::CP:
                    if (p < q) out.push_back(GateOp::cp(p, q));
                    break;
                case GateFamily::SWAP:
                    if (p < q) out.push_back(GateOp::swap(p, q));
                    break;
                case GateFamily::SWAP_ALPHA:
                    if (p < q) out.push_back(GateOp::swap_alpha(p, q, alpha));
                    break;
            }
        }
    }
    return out;
}

}  // namespace qinv
