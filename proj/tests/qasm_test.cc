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

#include <gtest/gtest.h>

#include <algorithm>

#include "qinv/protocol.h"
#include "qinv/qasm.h"
#include "test_util.h"

namespace qinv {
namespace {

int count_lines_starting(const std::string &text, const std::string &prefix) {
    std::istringstream in(text);
    int count = 0;
    for (std::string line; std::getline(in, line);) {
        count += line.rfind(prefix, 0) == 0;
    }
    return count;
}

/// Standalone simulator for the parsed instruction list using textbook matrices.
StateVector reference_simulate(StateVector psi, const QasmProgram &prog) {
    const double r = 1.0 / std::sqrt(2.0);
    for (const auto &ins : prog.instructions) {
        auto one_qubit = [&](complex_t m00, complex_t m01, complex_t m10, complex_t m11) {
            const uint64_t bit = uint64_t{1} << ins.qubits[0];
            for (uint64_t j = 0; j < psi.dim(); j++) {
                if (j & bit) {
                    continue;
                }
                const complex_t a0 = psi[j];
                const complex_t a1 = psi[j | bit];
                psi[j] = m00 * a0 + m01 * a1;
                psi[j | bit] = m10 * a0 + m11 * a1;
            }
        };
        switch (ins.op) {
            case QasmOp::H:
                one_qubit(r, r, r, -r);
                break;
            case QasmOp::S:
                one_qubit(1, 0, 0, complex_t{0, 1});
                break;
            case QasmOp::SDG:
                one_qubit(1, 0, 0, complex_t{0, -1});
                break;
            case QasmOp::X:
                one_qubit(0, 1, 1, 0);
                break;
            case QasmOp::RZ:
                one_qubit(1, 0, 0, std::exp(complex_t{0, ins.angle}));
                break;
            case QasmOp::CX:
                psi = testing::oracle_apply(psi, GateOp::cnot(ins.qubits[0], ins.qubits[1]));
                break;
            case QasmOp::CU1: {
                const uint64_t mask = (uint64_t{1} << ins.qubits[0]) | (uint64_t{1} << ins.qubits[1]);
                for (uint64_t j = 0; j < psi.dim(); j++) {
                    if ((j & mask) == mask) {
                        psi[j] *= std::exp(complex_t{0, ins.angle});
                    }
                }
                break;
            }
            case QasmOp::MEASURE:
            case QasmOp::BARRIER:
                break;
        }
    }
    return psi;
}

/// Distance between two states after aligning global phase.
double phase_free_distance(const StateVector &a, const StateVector &b) {
    const complex_t overlap = inner_product(a, b);
    const complex_t phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : complex_t{1};
    double d = 0;
    for (uint64_t j = 0; j < a.dim(); j++) {
        d = std::max(d, std::abs(a[j] * phase - b[j]));
    }
    return d;
}

TEST(Qasm, HeaderAndRegisters) {
    const std::string text = to_qasm({GateOp::cnot(0, 1)}, 3, "demo");
    EXPECT_EQ(text.rfind("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n", 0), 0u);
    EXPECT_NE(text.find("qreg q[3];"), std::string::npos);
    EXPECT_NE(text.find("creg c[3];"), std::string::npos);
    EXPECT_EQ(count_lines_starting(text, "measure "), 3);
    QasmProgram prog = parse_qasm_strict(text);
    EXPECT_EQ(prog.num_qubits, 3);
    EXPECT_EQ(prog.num_clbits, 3);
}

TEST(Qasm, CnotAndCpLines) {
    std::mt19937_64 rng(1);
    auto cnot = random_gate_sequence(GateFamily::CNOT, 3, 5, rng);
    EXPECT_EQ(count_lines_starting(to_qasm(cnot, 3), "cx "), 5);
    auto cp = random_gate_sequence(GateFamily::CP, 4, 7, rng);
    const std::string cp_text = to_qasm(cp, 4);
    EXPECT_EQ(count_lines_starting(cp_text, "cu1(pi) "), 7);
    auto swaps = random_gate_sequence(GateFamily::SWAP, 4, 6, rng);
    EXPECT_EQ(count_lines_starting(to_qasm(swaps, 4), "cx "), 18);
}

TEST(Qasm, RoundTripMatchesGateWordForEveryFamily) {
    std::mt19937_64 rng(2);
    for (GateFamily fam : {GateFamily::CP, GateFamily::CNOT, GateFamily::SWAP, GateFamily::SWAP_ALPHA}) {
        for (int n : {2, 3, 5}) {
            auto gates = random_gate_sequence(fam, n, 25, rng, {0.25, 0.5, 1.0, 1.7, -0.3});
            QasmProgram prog = parse_qasm_strict(to_qasm(gates, n));
            EXPECT_LT(qasm_equivalence_defect(prog, gates, n), 1e-12) << family_name(fam) << " n=" << n;

            // Independent check: textbook simulation of the parsed program against the gate oracle.
            StateVector psi = testing::random_state(n, rng);
            StateVector expected = psi;
            for (const auto &g : gates) {
                expected = testing::oracle_apply(expected, g);
            }
            EXPECT_LT(phase_free_distance(reference_simulate(psi, prog), expected), 1e-12);

            StateVector via_lib = psi;
            simulate_qasm(via_lib, prog);
            EXPECT_LT(phase_free_distance(via_lib, expected), 1e-12);
        }
    }
}

TEST(Qasm, EquivalenceDetectsWrongCircuit) {
    auto gates = std::vector<GateOp>{GateOp::cnot(0, 1), GateOp::swap_alpha(1, 2, 0.5)};
    QasmProgram prog = parse_qasm_strict(to_qasm(gates, 3));
    auto other = std::vector<GateOp>{GateOp::cnot(0, 1), GateOp::swap_alpha(1, 2, 0.25)};
    EXPECT_GT(qasm_equivalence_defect(prog, other, 3), 1e-2);
}

TEST(Qasm, OutputIsDeterministic) {
    std::mt19937_64 a(3);
    std::mt19937_64 b(3);
    auto ga = random_gate_sequence(GateFamily::SWAP_ALPHA, 4, 30, a, {0.25, 1.7});
    auto gb = random_gate_sequence(GateFamily::SWAP_ALPHA, 4, 30, b, {0.25, 1.7});
    EXPECT_EQ(to_qasm(ga, 4, "x"), to_qasm(gb, 4, "x"));
}

TEST(Qasm, AngleExpressions) {
    const std::string text =
        "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[1];\ncreg c[1];\n"
        "rz(pi/2) q[0];\nrz(-pi*0.25) q[0];\nrz(2*pi - 0.5) q[0];\nrz(1.5e-1) q[0];\nrz((pi+1)/2) q[0];\n";
    QasmProgram prog = parse_qasm_strict(text);
    ASSERT_EQ(prog.instructions.size(), 5u);
    const double pi = std::numbers::pi;
    EXPECT_NEAR(prog.instructions[0].angle, pi / 2, 1e-15);
    EXPECT_NEAR(prog.instructions[1].angle, -pi * 0.25, 1e-15);
    EXPECT_NEAR(prog.instructions[2].angle, 2 * pi - 0.5, 1e-15);
    EXPECT_NEAR(prog.instructions[3].angle, 0.15, 1e-15);
    EXPECT_NEAR(prog.instructions[4].angle, (pi + 1) / 2, 1e-15);
}

/// Line on which parsing fails, or 0 if it succeeds.
int error_line(const std::string &text) {
    try {
        parse_qasm_strict(text);
    } catch (const QasmParseError &e) {
        return e.line;
    }
    return 0;
}

TEST(Qasm, StrictParserRejectsMalformedInput) {
    const std::string head = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\ncreg c[2];\n";
    EXPECT_EQ(error_line(head + "cx q[0],q[1];\n"), 0);
    EXPECT_EQ(error_line("OPENQASM 3.0;\n"), 1);
    EXPECT_EQ(error_line("include \"qelib1.inc\";\n"), 1);
    EXPECT_EQ(error_line(head + "ccx q[0],q[1],q[1];\n"), 5);
    EXPECT_EQ(error_line(head + "cx q[0],q[2];\n"), 5);
    EXPECT_EQ(error_line(head + "cx q[0],q[0];\n"), 5);
    EXPECT_EQ(error_line(head + "h q[0]\n"), 5);
    EXPECT_EQ(error_line(head + "\nrz(pi/) q[0];\n"), 6);
    EXPECT_EQ(error_line(head + "rz(foo) q[0];\n"), 5);
    EXPECT_EQ(error_line(head + "measure q[0] -> c[5];\n"), 5);
    EXPECT_EQ(error_line(head + "qreg r[2];\n"), 5);
    EXPECT_EQ(error_line(head + "cu1 q[0],q[1];\n"), 5);
}

TEST(Qasm, RejectsInvalidGates) {
    EXPECT_THROW(to_qasm({GateOp::cnot(0, 3)}, 3), std::invalid_argument);
}

}  // namespace
}  // namespace qinv
