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

#ifndef QINV_BLOCK_DIAGONAL_H
#define QINV_BLOCK_DIAGONAL_H

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "qinv/subspaces.h"

namespace qinv {

struct BlockDiagonalOptions {
    int samples = 50;
    uint64_t seed = 7;
    double tolerance = 1e-8;
    /// Words have a uniformly random length in [1, max_word_length].
    int max_word_length = 20;
    /// Alpha used when the words are drawn from the SWAP_ALPHA family.
    double alpha = 0.5;
};

struct BlockInfo {
    SubspaceLabel label;
    int offset;
    int size;
};

struct BlockReport {
    int n = 0;
    GateFamily family = GateFamily::CP;
    BlockDiagonalOptions options;
    std::vector<BlockInfo> blocks;
    /// ||off-block part of T^dagger U T||_F / ||T^dagger U T||_F, one per sampled word.
    std::vector<double> off_block_mass;
    double max_off_block_mass = 0;
    /// Sum over samples of |T^dagger U T|, entrywise.
    Eigen::MatrixXd summed_abs;
    bool passed = false;
};

/// Maximum n for dense conjugation.
inline constexpr int kMaxBlockDiagonalQubits = 10;

/// Relative off-block Frobenius mass of T^dagger U T for the decomposition's transform T.
double off_block_mass(const Decomposition &dec, const UnitaryMatrix &transformed);

/// Conjugates random words over `word_family` generators by the decomposition transform.
BlockReport block_diagonal_check(const Decomposition &dec, GateFamily word_family,
                                 const BlockDiagonalOptions &options = {});
/// Words from the decomposition's own family. Pass options as BlockDiagonalOptions{}: a bare {}
/// selects the overload above with GateFamily::CP.
BlockReport block_diagonal_check(const Decomposition &dec, const BlockDiagonalOptions &options = {});

}  // namespace qinv

#endif
