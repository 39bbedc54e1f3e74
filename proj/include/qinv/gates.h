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

#ifndef QINV_GATES_H
#define QINV_GATES_H

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qinv/state.h"

namespace qinv {

enum class GateFamily { CP, CNOT, SWAP, SWAP_ALPHA };

std::string_view family_name(GateFamily family);
/// Accepts "cp", "cnot", "swap", "swap-alpha" / "swap_alpha" (case-insensitive).
std::optional<GateFamily> parse_family(std::string_view text);

/// One two-qubit gate. For CNOT, p is the control and q the target.
/// CP and SWAP are symmetric in (p, q). alpha is set iff family == SWAP_ALPHA.
struct GateOp {
    GateFamily family;
    int p;
    int q;
    std::optional<double> alpha;

    static GateOp cp(int a, int b);
    static GateOp cnot(int control, int target);
    static GateOp swap(int a, int b);
    static GateOp swap_alpha(int a, int b, double alpha);

    bool operator==(const GateOp &other) const = default;
};

std::string to_string(const GateOp &gate);

/// Throws std::invalid_argument if the gate is malformed or does not fit n qubits.
void validate_gate(const GateOp &gate, int n);

/// The SWAP^alpha mixing coefficients a = (1+e^{i pi alpha})/2, b = (1-e^{i pi alpha})/2.
std::pair<complex_t, complex_t> swap_alpha_coefficients(double alpha);

/// In-place application. Never materializes the 2^n x 2^n matrix.
void apply_gate_inplace(StateVector &state, const GateOp &gate);
StateVector apply_gate(StateVector state, const GateOp &gate);
void apply_sequence_inplace(StateVector &state, const std::vector<GateOp> &gates);

// Lower-level kernels used by the noise models.

/// Multiplies the amplitude of every basis state with qubits a and b both set by e^{i phi}.
void apply_controlled_phase(StateVector &state, int a, int b, double phi);
/// exp(i eps Z_a Z_b).
void apply_zz_phase(StateVector &state, int a, int b, double eps);

enum class Pauli : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };
void apply_pauli(StateVector &state, int qubit, Pauli pauli);

using UnitaryMatrix = Eigen::MatrixXcd;

/// 4x4 matrix of the gate on its own pair, local index = bit_p + 2*bit_q.
Eigen::Matrix4cd local_matrix(const GateOp &gate);

/// Dense 2^n x 2^n matrix of the gate embedded on n qubits.
/// Throws std::length_error above size_limits().max_dense_qubits.
UnitaryMatrix gate_matrix(const GateOp &gate, int n);

/// Dense matrix of a gate word (first gate applied first).
UnitaryMatrix sequence_matrix(const std::vector<GateOp> &gates, int n);

/// Frobenius norm of U^dagger U - I.
double unitarity_defect(const UnitaryMatrix &u);

/// The generating gates of a family on n qubits: all unordered pairs (p < q) for CP,
/// SWAP and SWAP_ALPHA; all ordered pairs for CNOT.
std::vector<GateOp> family_generators(GateFamily family, int n, double alpha = 0.5);

}  // namespace qinv

#endif
