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

#ifndef QINV_TESTS_TEST_UTIL_H
#define QINV_TESTS_TEST_UTIL_H

#include <cmath>
#include <numbers>
#include <random>

#include "qinv/gates.h"
#include "qinv/state.h"

namespace qinv::testing {

inline StateVector random_state(int n, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    StateVector s(n);
    for (uint64_t k = 0; k < s.dim(); k++) {
        double re = normal(rng);
        double im = normal(rng);
        s[k] = {re, im};
    }
    s.normalize();
    return s;
}

/// Random gate of a family on n qubits, alpha uniform in (-2, 2) for SWAP_ALPHA.
inline GateOp random_gate(GateFamily family, int n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> qubit(0, n - 1);
    int p = qubit(rng);
    int q = qubit(rng);
    while (q == p) {
        q = qubit(rng);
    }
    switch (family) {
        case GateFamily::CP:
            return GateOp::cp(p, q);
        case GateFamily::CNOT:
            return GateOp::cnot(p, q);
        case GateFamily::SWAP:
            return GateOp::swap(p, q);
        case GateFamily::SWAP_ALPHA:
            return GateOp::swap_alpha(p, q, std::uniform_real_distribution<double>(-2, 2)(rng));
    }
    return GateOp::cp(p, q);
}

/// Gate action written out from the textbook definitions, one basis state at a time.
inline StateVector oracle_apply(const StateVector &in, const GateOp &g) {
    StateVector out(in.num_qubits());
    const uint64_t bp = uint64_t{1} << g.p;
    const uint64_t bq = uint64_t{1} << g.q;
    for (uint64_t j = 0; j < in.dim(); j++) {
        const bool xp = (j & bp) != 0;
        const bool xq = (j & bq) != 0;
        switch (g.family) {
            case GateFamily::CP:
                out[j] += (xp && xq ? -1.0 : 1.0) * in[j];
                break;
            case GateFamily::CNOT:
                out[xp ? j ^ bq : j] += in[j];
                break;
            case GateFamily::SWAP: {
                uint64_t k = xp == xq ? j : j ^ bp ^ bq;
                out[k] += in[j];
                break;
            }
            case GateFamily::SWAP_ALPHA: {
                if (xp == xq) {
                    out[j] += in[j];
                } else {
                    const complex_t e = std::exp(complex_t{0, std::numbers::pi * *g.alpha});
                    out[j] += 0.5 * (1.0 + e) * in[j];
                    out[j ^ bp ^ bq] += 0.5 * (1.0 - e) * in[j];
                }
                break;
            }
        }
    }
    return out;
}

}  // namespace qinv::testing

#endif
