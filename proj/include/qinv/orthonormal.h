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

#ifndef QINV_ORTHONORMAL_H
#define QINV_ORTHONORMAL_H

#include <Eigen/Dense>

namespace qinv {

/// Default relative residual below which a candidate counts as linearly dependent.
inline constexpr double kDependenceTolerance = 1e-12;

/// Modified Gram-Schmidt with one re-orthogonalization pass.
///
/// Each column of `candidates` is orthogonalized against the columns of `against` (assumed
/// orthonormal, may have zero columns) and against the previously accepted candidates. A column
/// whose residual norm drops below `drop_tol` times its original norm is discarded. The accepted,
/// normalized columns are returned in input order; processing stops once `max_columns` are accepted
/// (negative means no limit).
template <typename Matrix>
Matrix orthonormalize(const Matrix &candidates, const Matrix &against, double drop_tol = kDependenceTolerance,
                      Eigen::Index max_columns = -1) {
    using Vector = Eigen::Matrix<typename Matrix::Scalar, Eigen::Dynamic, 1>;
    const Eigen::Index rows = candidates.rows();
    Matrix out(rows, candidates.cols());
    Eigen::Index accepted = 0;
    Vector v(rows);
    for (Eigen::Index c = 0; c < candidates.cols(); c++) {
        if (max_columns >= 0 && accepted >= max_columns) {
            break;
        }
        v = candidates.col(c);
        const double original = v.norm();
        if (original == 0) {
            continue;
        }
        for (int pass = 0; pass < 2; pass++) {
            for (Eigen::Index j = 0; j < against.cols(); j++) {
                v -= against.col(j).dot(v) * against.col(j);
            }
            for (Eigen::Index j = 0; j < accepted; j++) {
                v -= out.col(j).dot(v) * out.col(j);
            }
        }
        const double residual = v.norm();
        if (residual < drop_tol * original) {
            continue;
        }
        out.col(accepted++) = v / residual;
    }
    out.conservativeResize(rows, accepted);
    return out;
}

template <typename Matrix>
Matrix orthonormalize(const Matrix &candidates, double drop_tol = kDependenceTolerance) {
    return orthonormalize(candidates, Matrix(candidates.rows(), 0), drop_tol);
}

/// Orthonormal basis of the orthogonal complement of span(basis) in R^rows, built by
/// orthonormalizing coordinate vectors against `basis`, largest residual first.
Eigen::MatrixXd orthogonal_complement(const Eigen::MatrixXd &basis, double drop_tol = kDependenceTolerance);

/// max |Q^dagger Q - I| entrywise.
double orthonormality_defect(const Eigen::MatrixXd &q);

}  // namespace qinv

#endif
