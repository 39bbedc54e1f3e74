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

#ifndef QINV_COMMUTANT_H
#define QINV_COMMUTANT_H

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "qinv/subspaces.h"

namespace qinv {

struct CommutantOptions {
    /// Singular values at or below rank_tolerance * max(1, largest) count as zero.
    double rank_tolerance = 1e-8;
    /// Relative gap below which eigenvalues of the probe element are merged.
    double cluster_tolerance = 1e-6;
    int probe_words = 8;
    int probe_word_length = 12;
    uint64_t seed = 3;
    /// Above this block dimension the reduced system is used instead of the full Kronecker one.
    int dense_max_dim = 20;
};

/// Matrices of the gates restricted to the subspace, in its basis: Q^dagger G Q.
std::vector<Eigen::MatrixXcd> restricted_generators(const Subspace &sub, const std::vector<GateOp> &gates);

/// Nullity of X -> (A X - X A) over all A, via the full d^2-unknown system.
int commutant_dimension_dense(const std::vector<Eigen::MatrixXcd> &restricted, double rank_tolerance);

/// Same nullity, with the unknowns first restricted to the commutant of one random Hermitian element
/// of the generated algebra. That commutant contains the group's, so the answer is unchanged.
int commutant_dimension_reduced(const std::vector<Eigen::MatrixXcd> &restricted, const CommutantOptions &opts);

/// 1 iff the subspace is irreducible under the gates (given it is invariant).
int commutant_dimension(const Subspace &sub, const std::vector<GateOp> &gates, const CommutantOptions &opts = {});

}  // namespace qinv

#endif
