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

#include "qinv/state.h"

#include <cmath>
#include <stdexcept>

namespace qinv {

SizeLimits &size_limits() {
    static SizeLimits limits;
    return limits;
}

std::string ket_string(uint64_t index, int n) {
    std::string out(n, '0');
    for (int k = 0; k < n; k++) {
        if ((index >> k) & 1) {
            out[k] = '1';
        }
    }
    return out;
}

uint64_t index_from_ket(const std::string &ket) {
    uint64_t index = 0;
    for (size_t k = 0; k < ket.size(); k++) {
        if (ket[k] == '1') {
            index |= uint64_t{1} << k;
        } else if (ket[k] != '0') {
            throw std::invalid_argument("ket string must contain only 0 and 1: " + ket);
        }
    }
    return index;
}

static void check_qubit_count(int n) {
    if (n < 1 || n > size_limits().max_state_qubits) {
        throw std::invalid_argument(
            "qubit count " + std::to_string(n) + " outside [1, " +
            std::to_string(size_limits().max_state_qubits) + "]");
    }
}

StateVector::StateVector(int num_qubits) : n_(num_qubits) {
    check_qubit_count(num_qubits);
    amps_.assign(uint64_t{1} << num_qubits, complex_t{0.0, 0.0});
}

StateVector::StateVector(int num_qubits, std::vector<complex_t> amplitudes)
    : n_(num_qubits), amps_(std::move(amplitudes)) {
    check_qubit_count(num_qubits);
    if (amps_.size() != (uint64_t{1} << num_qubits)) {
        throw std::invalid_argument("amplitude count does not match 2^n");
    }
}

double StateVector::norm() const {
    double sum = 0;
    for (const auto &a : amps_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

void StateVector::normalize() {
    double nrm = norm();
    if (nrm == 0) {
        throw std::domain_error("cannot normalize the zero vector");
    }
    for (auto &a : amps_) {
        a /= nrm;
    }
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> out(amps_.size());
    for (size_t k = 0; k < amps_.size(); k++) {
        out[k] = std::norm(amps_[k]);
    }
    return out;
}

StateVector basis_state(int n, uint64_t index) {
    StateVector out(n);
    if (index >= out.dim()) {
        throw std::out_of_range(
            "basis index " + std::to_string(index) + " out of range for " + std::to_string(n) + " qubits");
    }
    out[index] = 1.0;
    return out;
}

complex_t inner_product(const StateVector &u, const StateVector &v) {
    if (u.num_qubits() != v.num_qubits()) {
        throw std::invalid_argument("inner_product: qubit counts differ");
    }
    complex_t acc{0.0, 0.0};
    auto a = u.amplitudes();
    auto b = v.amplitudes();
    for (size_t k = 0; k < a.size(); k++) {
        acc += std::conj(a[k]) * b[k];
    }
    return acc;
}

double max_abs_diff(const StateVector &u, const StateVector &v) {
    if (u.num_qubits() != v.num_qubits()) {
        throw std::invalid_argument("max_abs_diff: qubit counts differ");
    }
    double m = 0;
    for (uint64_t k = 0; k < u.dim(); k++) {
        m = std::max(m, std::abs(u[k] - v[k]));
    }
    return m;
}

}  // namespace qinv
