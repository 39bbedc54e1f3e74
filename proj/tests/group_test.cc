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

#include "qinv/group.h"

namespace qinv {
namespace {

TEST(Orders, CpFormula) {
    EXPECT_EQ(cp_group_order(2), 2);
    EXPECT_EQ(cp_group_order(3), 8);
    EXPECT_EQ(cp_group_order(4), 64);
    EXPECT_EQ(cp_group_order(12), BigInt(1) << 66);
}

TEST(Orders, CnotFormula) {
    EXPECT_EQ(cnot_group_order(2), 6);
    EXPECT_EQ(cnot_group_order(3), 168);
    EXPECT_EQ(cnot_group_order(4), 20160);
    EXPECT_EQ(cnot_group_order(5), BigInt(9999360));
}

TEST(Orders, CnotRatioApproachesPaperConstant) {
    for (int n = 8; n <= 12; n++) {
        double r = cnot_order_ratio(n);
        EXPECT_LT(std::abs(r - 0.289), 0.01) << n;
        // The infinite product is 0.288788...; the tail shrinks like 2^-n.
        EXPECT_LT(r - 0.2887880950866, std::ldexp(1.0, -n)) << n;
        EXPECT_GT(r, 0.2887880950866) << n;
        EXPECT_GT(cnot_order_ratio(n - 1), r) << n;
    }
    // Independent evaluation of the ratio: prod (1 - 2^{i-n}).
    for (int n = 2; n <= 12; n++) {
        double p = 1;
        for (int k = 1; k <= n; k++) {
            p *= 1.0 - std::ldexp(1.0, -k);
        }
        EXPECT_NEAR(cnot_order_ratio(n), p, 1e-15);
    }
}

TEST(Orders, SwapFormula) {
    EXPECT_EQ(swap_group_order(2), 2);
    EXPECT_EQ(swap_group_order(4), 24);
    EXPECT_EQ(swap_group_order(10), 3628800);
}

TEST(Enumeration, MatchesFormulas) {
    EXPECT_EQ(enumerate_family(GateFamily::CNOT, 2).size(), 6u);
    EXPECT_EQ(enumerate_family(GateFamily::CNOT, 3).size(), 168u);
    EXPECT_EQ(enumerate_family(GateFamily::CP, 3).size(), 8u);
    EXPECT_EQ(enumerate_cp_elements(3).size(), 8u);
    EXPECT_EQ(enumerate_cp_elements(4).size(), 64u);
    EXPECT_EQ(enumerate_f2(cnot_theta_generators(3)).size(), 168u);
    for (int n = 2; n <= 6; n++) {
        EXPECT_EQ(BigInt(enumerate_family(GateFamily::SWAP, n).size()), swap_group_order(n)) << n;
    }
}

TEST(Enumeration, SingleInvolution) {
    auto g = SignedPermutation::from_gate(GateOp::cnot(0, 1), 2);
    auto closure = enumerate_group(
        std::vector<SignedPermutation>{g}, SignedPermutation::identity(2),
        [](const SignedPermutation &a, const SignedPermutation &b) { return a * b; },
        [](const SignedPermutation &a) { return a.key(); });
    EXPECT_EQ(closure.size(), 2u);
    EXPECT_EQ(closure.elements[0], SignedPermutation::identity(2));
}

TEST(Enumeration, ErrorsOnEmptyGeneratorsAndBudget) {
    EXPECT_THROW(enumerate_f2({}), std::invalid_argument);
    ClosureOptions small;
    small.budget = 100;
    EXPECT_THROW(enumerate_family(GateFamily::CNOT, 4, small), BudgetExceededError);
}

TEST(Enumeration, ClosureIsIdempotent) {
    auto closure = enumerate_f2(cnot_theta_generators(3));
    auto again = enumerate_f2(closure.elements);
    EXPECT_EQ(again.size(), closure.size());
}

TEST(Enumeration, WordsReproduceElements) {
    auto gens = cnot_theta_generators(3);
    auto closure = enumerate_f2(gens);
    for (size_t i = 0; i < closure.size(); i++) {
        F2Matrix m = F2Matrix::identity(3);
        for (int32_t g : closure.word(i)) {
            m = m * gens[g];
        }
        EXPECT_EQ(m, closure.elements[i]);
    }
    // Breadth-first words are shortest: the longest element needs more than one generator.
    EXPECT_GT(closure.word(closure.size() - 1).size(), 1u);
}

TEST(Generators, HaveOrderTwo) {
    for (GateFamily fam : {GateFamily::CP, GateFamily::CNOT, GateFamily::SWAP}) {
        for (const auto &g : signed_permutation_generators(fam, 4)) {
            EXPECT_EQ(g * g, SignedPermutation::identity(4));
        }
    }
    for (const auto &g : cnot_theta_generators(4)) {
        EXPECT_EQ(g * g, F2Matrix::identity(4));
    }
    for (const auto &g : cp_element_generators(4)) {
        EXPECT_EQ(g * g, CPGroupElement(4));
    }
}

TEST(Generators, CpIsAbelianCnotIsNot) {
    auto cp = signed_permutation_generators(GateFamily::CP, 4);
    for (const auto &a : cp) {
        for (const auto &b : cp) {
            EXPECT_EQ(a * b, b * a);
        }
    }
    for (int n = 2; n <= 4; n++) {
        auto cnot = signed_permutation_generators(GateFamily::CNOT, n);
        bool noncommuting = false;
        for (const auto &a : cnot) {
            for (const auto &b : cnot) {
                noncommuting = noncommuting || !(a * b == b * a);
            }
        }
        EXPECT_TRUE(noncommuting) << n;
    }
}

TEST(CPGroupElement, SignMatchesDenseProduct) {
    for (int n = 2; n <= 4; n++) {
        auto closure = enumerate_cp_elements(n);
        for (const auto &e : closure.elements) {
            UnitaryMatrix dense = UnitaryMatrix::Identity(1 << n, 1 << n);
            for (int p = 0; p < n; p++) {
                for (int q = p + 1; q < n; q++) {
                    if (e.pairs().test(pair_index(p, q, n))) {
                        dense = gate_matrix(GateOp::cp(p, q), n) * dense;
                    }
                }
            }
            for (uint64_t b = 0; b < (uint64_t{1} << n); b++) {
                EXPECT_EQ(dense(b, b), complex_t(e.sign(b), 0));
            }
            EXPECT_TRUE(dense.isDiagonal());
        }
    }
}

TEST(SignedPermutation, DenseMatchesGateMatrix) {
    for (GateFamily fam : {GateFamily::CP, GateFamily::CNOT, GateFamily::SWAP}) {
        for (const auto &g : family_generators(fam, 3)) {
            EXPECT_EQ(SignedPermutation::from_gate(g, 3).to_dense(), gate_matrix(g, 3));
        }
    }
    EXPECT_THROW(SignedPermutation::from_gate(GateOp::swap_alpha(0, 1, 0.5), 2), std::invalid_argument);
    auto a = SignedPermutation::from_gate(GateOp::cnot(0, 1), 3);
    auto b = SignedPermutation::from_gate(GateOp::cp(1, 2), 3);
    EXPECT_EQ((a * b).to_dense(), a.to_dense() * b.to_dense());
}

TEST(ThetaOf, LinearOnlyForCnotWords) {
    auto u = SignedPermutation::from_gate(GateOp::cnot(2, 0), 3);
    ASSERT_TRUE(theta_of(u).has_value());
    EXPECT_EQ(*theta_of(u), theta_generator(2, 0, 3));
    EXPECT_FALSE(theta_of(SignedPermutation::from_gate(GateOp::cp(0, 1), 3)).has_value());
}

}  // namespace
}  // namespace qinv
