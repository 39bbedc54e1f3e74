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

#ifndef QINV_ISOMORPHISM_H
#define QINV_ISOMORPHISM_H

#include <cstdint>
#include <string>
#include <vector>

#include "qinv/group.h"

namespace qinv {

struct IsomorphismOptions {
    int exhaustive_word_length = 4;
    int random_words = 1000;
    int max_random_word_length = 20;
    uint64_t seed = 1;
    ClosureOptions closure;
};

/// Outcome of comparing the CNOT group on basis states with GL(n, 2) through theta.
struct IsomorphismReport {
    int n = 0;
    BigInt expected_order;
    uint64_t unitary_closure_size = 0;
    uint64_t f2_closure_size = 0;
    uint64_t exhaustive_words_checked = 0;
    uint64_t random_words_checked = 0;
    /// M1 equals theta(CNOT with control 0, target n-1).
    bool m1_in_image = false;
    /// M2 equals the product of theta images of CNOT-built transpositions.
    bool m2_in_image = false;
    uint64_t m1_m2_closure_size = 0;
    /// CNOT_ij CNOT_ji CNOT_ij == SWAP_ij on both sides, for every pair.
    bool swap_identity_holds = false;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    bool passed() const {
        return failures.empty();
    }
};

/// Requires n <= 4 (full enumeration of both closures).
IsomorphismReport check_cnot_isomorphism(int n, const IsomorphismOptions &opts = {});

struct TransitivityReport {
    int n = 0;
    uint64_t start_first = 0;
    uint64_t start_second = 0;
    uint64_t orbit_size = 0;
    uint64_t expected_size = 0;
    bool passed = false;
};

/// Orbit of the ordered pair (e_1, e_0) of nonzero F_2 vectors under the theta generators.
/// Passes iff every ordered pair of distinct nonzero vectors is reached.
TransitivityReport check_double_transitivity(int n);

}  // namespace qinv

#endif
