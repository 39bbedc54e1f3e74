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

#ifndef QINV_F2_MATRIX_H
#define QINV_F2_MATRIX_H

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qinv {

/// Raised by F2Matrix::inverse for a singular matrix.
class SingularMatrixError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// n x n matrix over the two-element field, n <= 64. Row r is a bitmask whose bit c is entry (r, c).
/// Vectors of F_2^n are bitmasks too, and act as columns: (A x)_r = parity(row_r & x).
class F2Matrix {
   public:
    static constexpr int kMaxDim = 64;

    explicit F2Matrix(int n);
    F2Matrix(int n, std::vector<uint64_t> rows);

    static F2Matrix identity(int n);
    static F2Matrix zero(int n);

    int dim() const {
        return n_;
    }
    const std::vector<uint64_t> &rows() const {
        return rows_;
    }
    bool get(int r, int c) const {
        return (rows_[r] >> c) & 1;
    }
    void set(int r, int c, bool value);
    void flip(int r, int c) {
        rows_[r] ^= uint64_t{1} << c;
    }

    uint64_t apply(uint64_t x) const;
    F2Matrix operator*(const F2Matrix &rhs) const;
    F2Matrix transpose() const;
    int rank() const;
    bool is_invertible() const {
        return rank() == n_;
    }
    /// Gauss-Jordan inverse. Throws SingularMatrixError.
    F2Matrix inverse() const;

    std::string str() const;

    bool operator==(const F2Matrix &other) const = default;

   private:
    int n_;
    std::vector<uint64_t> rows_;
};

inline F2Matrix f2_mul(const F2Matrix &a, const F2Matrix &b) {
    return a * b;
}
inline F2Matrix f2_invert(const F2Matrix &a) {
    return a.inverse();
}

/// The F_2-linear map induced by CNOT(control, target) on basis indices: identity plus a one at
/// (target, control), i.e. the control bit is added into the target bit.
F2Matrix theta_generator(int control, int target, int n);

/// Identity plus a one at (n-1, 0). As a left factor it adds row 0 to row n-1.
F2Matrix m1_matrix(int n);
/// Cyclic shift, (M2 x)_r = x_{(r+1) mod n}.
F2Matrix m2_matrix(int n);

/// Permutation matrix moving tuple entry k to position perm[k].
F2Matrix permutation_matrix(const std::vector<int> &perm);

}  // namespace qinv

#endif
