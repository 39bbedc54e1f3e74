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

#include <random>

#include "qinv/f2_matrix.h"
#include "qinv/gates.h"

namespace qinv {
namespace {

F2Matrix random_matrix(int n, std::mt19937_64 &rng) {
    std::vector<uint64_t> rows(n);
    const uint64_t mask = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    for (auto &r : rows) {
        r = rng() & mask;
    }
    return F2Matrix(n, rows);
}

/// Entry-by-entry product with explicit parity sums.
F2Matrix naive_product(const F2Matrix &a, const F2Matrix &b) {
    const int n = a.dim();
    F2Matrix out(n);
    for (int r = 0; r < n; r++) {
        for (int c = 0; c < n; c++) {
            int sum = 0;
            for (int k = 0; k < n; k++) {
                sum += a.get(r, k) && b.get(k, c);
            }
            out.set(r, c, sum % 2 == 1);
        }
    }
    return out;
}

TEST(F2Mul, MatchesEntrywiseDefinition) {
    std::mt19937_64 rng(1);
    for (int n : {1, 2, 3, 5, 8, 13, 64}) {
        for (int t = 0; t < 5; t++) {
            F2Matrix a = random_matrix(n, rng);
            F2Matrix b = random_matrix(n, rng);
            EXPECT_EQ(f2_mul(a, b), naive_product(a, b));
        }
    }
}

TEST(F2Mul, IdentityAndAssociativity) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 50; t++) {
        F2Matrix a = random_matrix(6, rng);
        F2Matrix b = random_matrix(6, rng);
        F2Matrix c = random_matrix(6, rng);
        EXPECT_EQ(f2_mul(a, F2Matrix::identity(6)), a);
        EXPECT_EQ(f2_mul(F2Matrix::identity(6), a), a);
        EXPECT_EQ(f2_mul(f2_mul(a, b), c), f2_mul(a, f2_mul(b, c)));
    }
}

TEST(F2Mul, M1IsAnInvolution) {
    for (int n = 2; n <= 8; n++) {
        EXPECT_EQ(f2_mul(m1_matrix(n), m1_matrix(n)), F2Matrix::identity(n));
    }
}

TEST(F2Invert, IdentityThetaAndSingular) {
    EXPECT_EQ(f2_invert(F2Matrix::identity(5)), F2Matrix::identity(5));
    EXPECT_EQ(f2_invert(theta_generator(0, 1, 3)), theta_generator(0, 1, 3));
    EXPECT_THROW(f2_invert(F2Matrix::zero(4)), SingularMatrixError);
    F2Matrix rank_deficient(3, {0b011, 0b110, 0b101});
    EXPECT_EQ(rank_deficient.rank(), 2);
    EXPECT_THROW(f2_invert(rank_deficient), SingularMatrixError);
}

TEST(F2Invert, RandomInvertibleMatrices) {
    std::mt19937_64 rng(3);
    int invertible = 0;
    for (int t = 0; t < 200; t++) {
        F2Matrix a = random_matrix(7, rng);
        if (!a.is_invertible()) {
            EXPECT_THROW(a.inverse(), SingularMatrixError);
            continue;
        }
        invertible++;
        F2Matrix inv = f2_invert(a);
        EXPECT_EQ(a * inv, F2Matrix::identity(7));
        EXPECT_EQ(inv * a, F2Matrix::identity(7));
    }
    EXPECT_GT(invertible, 20);
}

TEST(F2Matrix, TransposeAndApply) {
    std::mt19937_64 rng(4);
    F2Matrix a = random_matrix(5, rng);
    EXPECT_EQ(a.transpose().transpose(), a);
    for (int r = 0; r < 5; r++) {
        for (int c = 0; c < 5; c++) {
            EXPECT_EQ(a.get(r, c), a.transpose().get(c, r));
        }
    }
    for (uint64_t x = 0; x < 32; x++) {
        uint64_t expected = 0;
        for (int r = 0; r < 5; r++) {
            int parity = 0;
            for (int c = 0; c < 5; c++) {
                parity ^= a.get(r, c) & ((x >> c) & 1);
            }
            expected |= static_cast<uint64_t>(parity) << r;
        }
        EXPECT_EQ(a.apply(x), expected);
    }
}

TEST(ThetaGenerator, TwoQubitPaperAction) {
    // Tuples are written qubit 0 first: (1,0) is index 1, (1,1) index 3, (0,1) index 2.
    F2Matrix t = theta_generator(0, 1, 2);
    EXPECT_EQ(t.apply(0b01), 0b11u);
    EXPECT_EQ(t.apply(0b11), 0b01u);
    EXPECT_EQ(t.apply(0b00), 0b00u);
    EXPECT_EQ(t.apply(0b10), 0b10u);
    EXPECT_TRUE(t.get(1, 0));
    EXPECT_EQ(t * t, F2Matrix::identity(2));
}

TEST(ThetaGenerator, RejectsBadIndices) {
    EXPECT_THROW(theta_generator(1, 1, 3), std::invalid_argument);
    EXPECT_THROW(theta_generator(0, 3, 3), std::invalid_argument);
}

TEST(ThetaGenerator, AgreesWithGateOnEveryBasisState) {
    for (int n = 2; n <= 4; n++) {
        for (int c = 0; c < n; c++) {
            for (int t = 0; t < n; t++) {
                if (c == t) {
                    continue;
                }
                F2Matrix theta = theta_generator(c, t, n);
                EXPECT_EQ(theta * theta, F2Matrix::identity(n));
                for (uint64_t k = 0; k < (uint64_t{1} << n); k++) {
                    StateVector out = apply_gate(basis_state(n, k), GateOp::cnot(c, t));
                    EXPECT_EQ(out[theta.apply(k)], complex_t(1, 0));
                }
            }
        }
    }
}

TEST(M2, IsTheCyclicShift) {
    for (int n = 2; n <= 6; n++) {
        F2Matrix m2 = m2_matrix(n);
        for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
            uint64_t y = m2.apply(x);
            for (int r = 0; r < n; r++) {
                EXPECT_EQ((y >> r) & 1, (x >> ((r + 1) % n)) & 1);
            }
        }
    }
}

TEST(PermutationMatrix, MovesEntries) {
    std::vector<int> perm = {2, 0, 1};
    F2Matrix p = permutation_matrix(perm);
    for (int k = 0; k < 3; k++) {
        EXPECT_EQ(p.apply(uint64_t{1} << k), uint64_t{1} << perm[k]);
    }
    EXPECT_TRUE(p.is_invertible());
}

}  // namespace
}  // namespace qinv
