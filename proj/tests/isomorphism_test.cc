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

#include "qinv/isomorphism.h"

namespace qinv {
namespace {

TEST(CnotIsomorphism, PassesForSmallN) {
    const uint64_t expected[] = {0, 0, 6, 168, 20160};
    for (int n = 2; n <= 4; n++) {
        auto r = check_cnot_isomorphism(n);
        EXPECT_TRUE(r.passed()) << n << ": " << (r.failures.empty() ? "" : r.failures.front());
        EXPECT_EQ(r.unitary_closure_size, expected[n]);
        EXPECT_EQ(r.f2_closure_size, expected[n]);
        EXPECT_EQ(r.expected_order, expected[n]);
        EXPECT_EQ(r.m1_m2_closure_size, expected[n]);
        EXPECT_TRUE(r.m1_in_image);
        EXPECT_TRUE(r.m2_in_image);
        EXPECT_TRUE(r.swap_identity_holds);
        EXPECT_EQ(r.random_words_checked, 1000u);
        EXPECT_GT(r.exhaustive_words_checked, 0u);
        EXPECT_FALSE(r.notes.empty());
    }
}

TEST(CnotIsomorphism, RejectsLargeN) {
    EXPECT_THROW(check_cnot_isomorphism(5), std::invalid_argument);
    EXPECT_THROW(check_cnot_isomorphism(1), std::invalid_argument);
}

TEST(CnotIsomorphism, ThreeCnotsTransposeTupleEntries) {
    for (int n = 2; n <= 4; n++) {
        for (int i = 0; i < n; i++) {
            for (int j = 0; j < n; j++) {
                if (i == j) {
                    continue;
                }
                F2Matrix product = theta_generator(i, j, n) * theta_generator(j, i, n) * theta_generator(i, j, n);
                std::vector<int> perm(n);
                for (int k = 0; k < n; k++) {
                    perm[k] = k == i ? j : k == j ? i : k;
                }
                EXPECT_EQ(product, permutation_matrix(perm));
            }
        }
    }
}

TEST(DoubleTransitivity, OrbitSizes) {
    const uint64_t expected[] = {0, 0, 6, 42, 210};
    for (int n = 2; n <= 4; n++) {
        auto r = check_double_transitivity(n);
        EXPECT_TRUE(r.passed);
        EXPECT_EQ(r.orbit_size, expected[n]);
        EXPECT_EQ(r.expected_size, ((uint64_t{1} << n) - 1) * ((uint64_t{1} << n) - 2));
    }
}

}  // namespace
}  // namespace qinv
