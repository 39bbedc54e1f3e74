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

#ifndef QINV_STATE_H
#define QINV_STATE_H

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qinv {

using complex_t = std::complex<double>;

/// Limits on problem size. These are configuration, not hard invariants of the math.
struct SizeLimits {
    int max_state_qubits = 14;
    int max_dense_qubits = 12;
};

/// Process-wide limits consulted by the dense and state-vector entry points.
SizeLimits &size_limits();

/// Number of qubits in state |1> for the given computational basis index.
inline int hamming_weight(uint64_t index) {
    return __builtin_popcountll(index);
}

/// Ket string with qubit 0 printed leftmost, e.g. index 3 at n=4 is "1100".
std::string ket_string(uint64_t index, int n);
uint64_t index_from_ket(const std::string &ket);

/// Pure state of n qubits. Qubit k is bit k of the basis index (qubit 0 least significant).
class StateVector {
   public:
    explicit StateVector(int num_qubits);
    StateVector(int num_qubits, std::vector<complex_t> amplitudes);

    int num_qubits() const {
        return n_;
    }
    uint64_t dim() const {
        return amps_.size();
    }
    std::span<complex_t> amplitudes() {
        return amps_;
    }
    std::span<const complex_t> amplitudes() const {
        return amps_;
    }
    complex_t &operator[](uint64_t index) {
        return amps_[index];
    }
    const complex_t &operator[](uint64_t index) const {
        return amps_[index];
    }

    double norm() const;
    void normalize();
    /// Probability of measuring each computational basis state.
    std::vector<double> probabilities() const;

    bool operator==(const StateVector &other) const = default;

   private:
    int n_;
    std::vector<complex_t> amps_;
};

StateVector basis_state(int n, uint64_t index);

/// <u|v>, conjugate-linear in u.
complex_t inner_product(const StateVector &u, const StateVector &v);

/// Largest |u_k - v_k| over all amplitudes.
double max_abs_diff(const StateVector &u, const StateVector &v);

}  // namespace qinv

#endif
