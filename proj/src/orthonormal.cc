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

#include "qinv/orthonormal.h"

#include <algorithm>
#include <numeric>
#include <vector>

namespace qinv {

Eigen::MatrixXd orthogonal_complement(const Eigen::MatrixXd &basis, double drop_tol) {
    const Eigen::Index m = basis.rows();
    // Residual of e_k against span(basis) is 1 - |row k of basis|^2.
    std::vector<Eigen::Index> order(m);
    std::iota(order.begin(), order.end(), 0);
    Eigen::VectorXd residual = 1.0 - basis.rowwise().squaredNorm().array();
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return residual(a) > residual(b); });
    Eigen::MatrixXd candidates = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index k = 0; k < m; k++) {
        candidates(order[k], k) = 1.0;
    }
    return orthonormalize(candidates, basis, drop_tol, m - basis.cols());
}

double orthonormality_defect(const Eigen::MatrixXd &q) {
    if (q.cols() == 0) {
        return 0;
    }
    return (q.transpose() * q - Eigen::MatrixXd::Identity(q.cols(), q.cols())).cwiseAbs().maxCoeff();
}

}  // namespace qinv
