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

#ifndef QINV_QASM_H
#define QINV_QASM_H

#include <stdexcept>
#include <string>
#include <vector>

#include "qinv/gates.h"

namespace qinv {

/// OpenQASM 2.0 text for one circuit: a labeled preparation placeholder, the gate sequence and a
/// measurement of every qubit.
///
/// CNOT is `cx`, CP is `cu1(pi)`, SWAP is three `cx`. SWAP^alpha is emitted through
///   SWAP^alpha = e^{i pi alpha / 4} RXX(t) RYY(t) RZZ(t),  t = pi alpha / 2,
/// with RZZ(t) = cx; rz(t); cx and RXX, RYY obtained by basis changes (h, and sdg h ... h s).
std::string to_qasm(const std::vector<GateOp> &gates, int n, const std::string &title = "");

struct QasmParseError : std::runtime_error {
    QasmParseError(int line, const std::string &message);
    int line;
};

enum class QasmOp { H, S, SDG, X, RZ, CX, CU1, MEASURE, BARRIER };

struct QasmInstruction {
    QasmOp op;
    std::vector<int> qubits;
    double angle = 0;
};

struct QasmProgram {
    int num_qubits = 0;
    int num_clbits = 0;
    std::vector<QasmInstruction> instructions;
};

/// Strict parser for the subset emitted by to_qasm: OPENQASM 2.0 header, qelib1.inc include, a
/// single qreg and creg, the gates h s sdg x rz cx cu1, barrier, measure, and // comments. Angles
/// are sums/products of decimal numbers and `pi`. Anything else throws QasmParseError.
QasmProgram parse_qasm_strict(const std::string &text);

/// Applies every unitary instruction of the program (rz follows the qelib1 u1 convention).
void simulate_qasm(StateVector &state, const QasmProgram &program);

/// Largest deviation, over all basis inputs, between the program and the gate word after removing a
/// global phase. Requires n <= size_limits().max_dense_qubits.
double qasm_equivalence_defect(const QasmProgram &program, const std::vector<GateOp> &gates, int n);

}  // namespace qinv

#endif
