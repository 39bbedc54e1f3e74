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

#include "qinv/f2_matrix.h"

#include <utility>

namespace qinv {

static void check_dim(int n) {
    if (n < 1 || n > F2Matrix::kMaxDim) {
        throw std::invalid_argument("F2Matrix dimension must be in [1, 64], got " + std::to_string(n));
    }
}

F2Matrix::F2Matrix(int n) : n_(n), rows_(n, 0) {
    check_dim(n);
}

F2Matrix::F2Matrix(int n, std::vector<uint64_t> rows) : n_(n), rows_(std::move(rows)) {
    check_dim(n);
    if (static_cast<int>(rows_.size()) != n) {
        throw std::invalid_argument("F2Matrix: row count does not match dimension");
    }
    uint64_t mask = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    for (auto r : rows_) {
        if (r & ~mask) {
            throw std::invalid_argument("F2Matrix: row has bits beyond dimension");
        }
    }
}

F2Matrix F2Matrix::identity(int n) {
    F2Matrix m(n);
    for (int k = 0; k < n; k++) {
        m.rows_[k] = uint64_t{1} << k;
    }
    return m;
}

F2Matrix F2Matrix::zero(int n) {
    return F2Matrix(n);
}

void F2Matrix::set(int r, int c, bool value) {
    uint64_t bit = uint64_t{1} << c;
    rows_[r] = value ? (rows_[r] | bit) : (rows_[r] & ~bit);
}

uint64_t F2Matrix::apply(uint64_t x) const {
    uint64_t y = 0;
    for (int r = 0; r < n_; r++) {
        y |= uint64_t(__builtin_parityll(rows_[r] & x)) << r;
    }
    return y;
}

F2Matrix F2Matrix::operator*(const F2Matrix &rhs) const {
    if (n_ != rhs.n_) {
        throw std::invalid_argument("F2Matrix product: dimensions differ");
    }
    F2Matrix out(n_);
    for (int r = 0; r < n_; r++) {
        uint64_t acc = 0;
        uint64_t bits = rows_[r];
        while (bits) {
            int c = __builtin_ctzll(bits);
            acc ^= rhs.rows_[c];
            bits &= bits - 1;
        }
        out.rows_[r] = acc;
    }
    return out;
}

F2Matrix F2Matrix::transpose() const {
    F2Matrix out(n_);
    for (int r = 0; r < n_; r++) {
        for (int c = 0; c < n_; c++) {
            if (get(r, c)) {
                out.rows_[c] |= uint64_t{1} << r;
            }
        }
    }
    return out;
}

int F2Matrix::rank() const {
    std::vector<uint64_t> work = rows_;
    int rank = 0;
    for (int c = 0; c < n_ && rank < n_; c++) {
        uint64_t bit = uint64_t{1} << c;
        int pivot = -1;
        for (int r = rank; r < n_; r++) {
            if (work[r] & bit) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) {
            continue;
        }
        std::swap(work[rank], work[pivot]);
        for (int r = 0; r < n_; r++) {
            if (r != rank && (work[r] & bit)) {
                work[r] ^= work[rank];
            }
        }
        rank++;
    }
    return rank;
}

F2Matrix F2Matrix::inverse() const {
    std::vector<uint64_t> work = rows_;
    F2Matrix inv = identity(n_);
    for (int c = 0; c < n_; c++) {
        uint64_t bit = uint64_t{1} << c;
        int pivot = -1;
        for (int r = c; r < n_; r++) {
            if (work[r] & bit) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) {
            throw SingularMatrixError("F2Matrix is singular (no pivot in column " + std::to_string(c) + ")");
        }
        std::swap(work[c], work[pivot]);
        std::swap(inv.rows_[c], inv.rows_[pivot]);
        for (int r = 0; r < n_; r++) {
            if (r != c && (work[r] & bit)) {
                work[r] ^= work[c];
                inv.rows_[r] ^= inv.rows_[c];
            }
        }
    }
    return inv;
}

std::string F2Matrix::str() const {
    std::string out;
    for (int r = 0; r < n_; r++) {
        for (int c = 0; c < n_; c++) {
            out += get(r, c) ? '1' : '0';
        }
        if (r + 1 < n_) {
            out += '\n';
        }
    }
    return out;
}

F2Matrix theta_generator(int control, int target, int n) {
    if (control == target) {
        throw std::invalid_argument("theta_generator: control and target must differ");
    }
    if (control < 0 || target < 0 || control >= n || target >= n) {
        throw std::invalid_argument("theta_generator: index out of range");
    }
    F2Matrix m = F2Matrix::identity(n);
    m.set(target, control, true);
    return m;
}

F2Matrix m1_matrix(int n) {
    F2Matrix m = F2Matrix::identity(n);
    if (n > 1) {
        m.set(n - 1, 0, true);
    }
    return m;
}

F2Matrix m2_matrix(int n) {
    F2Matrix m(n);
    for (int r = 0; r < n; r++) {
        m.set(r, (r + 1) % n, true);
    }
    return m;
}

F2Matrix permutation_matrix(const std::vector<int> &perm) {
    int n = static_cast<int>(perm.size());
    F2Matrix m(n);
    for (int k = 0; k < n; k++) {
        m.set(perm[k], k, true);
    }
    if (!m.is_invertible()) {
        throw std::invalid_argument("permutation_matrix: not a permutation");
    }
    return m;
}

}  // namespace qinv
