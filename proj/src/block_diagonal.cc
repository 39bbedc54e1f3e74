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

#include "qinv/block_diagonal.h"

#include <random>
#include <stdexcept>

namespace qinv {

double off_block_mass(const Decomposition &dec, const UnitaryMatrix &transformed) {
    double total = transformed.squaredNorm();
    if (total == 0) {
        return 0;
    }
    // Summed directly: total - inside would cancel down to about sqrt(machine epsilon).
    auto offsets = dec.block_offsets();
    auto sizes = dec.block_sizes();
    const Eigen::Index dim = transformed.cols();
    double off = 0;
    for (size_t b = 0; b < sizes.size(); b++) {
        const Eigen::Index lo = offsets[b];
        const Eigen::Index hi = lo + sizes[b];
        for (Eigen::Index c = lo; c < hi; c++) {
            off += transformed.col(c).head(lo).squaredNorm();
            off += transformed.col(c).tail(dim - hi).squaredNorm();
        }
    }
    return std::sqrt(off / total);
}

BlockReport block_diagonal_check(const Decomposition &dec, GateFamily word_family,
                                 const BlockDiagonalOptions &options) {
    if (dec.n > kMaxBlockDiagonalQubits) {
        throw std::length_error("block_diagonal_check supports n <= " + std::to_string(kMaxBlockDiagonalQubits));
    }
    if (options.samples < 1 || options.max_word_length < 1) {
        throw std::invalid_argument("block_diagonal_check: samples and word length must be positive");
    }
    BlockReport report;
    report.n = dec.n;
    report.family = word_family;
    report.options = options;
    auto offsets = dec.block_offsets();
    for (size_t b = 0; b < dec.subspaces.size(); b++) {
        report.blocks.push_back({dec.subspaces[b].label(), offsets[b], dec.subspaces[b].dim()});
    }

    const UnitaryMatrix t = dec.transform();
    const UnitaryMatrix t_adj = t.adjoint();
    const auto gens = family_generators(word_family, dec.n, options.alpha);
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> length_dist(1, options.max_word_length);
    std::uniform_int_distribution<size_t> gen_dist(0, gens.size() - 1);
    report.summed_abs = Eigen::MatrixXd::Zero(t.rows(), t.cols());
    for (int s = 0; s < options.samples; s++) {
        std::vector<GateOp> word(length_dist(rng));
        for (auto &g : word) {
            g = gens[gen_dist(rng)];
        }
        UnitaryMatrix transformed = t_adj * sequence_matrix(word, dec.n) * t;
        double mass = off_block_mass(dec, transformed);
        report.off_block_mass.push_back(mass);
        report.max_off_block_mass = std::max(report.max_off_block_mass, mass);
        report.summed_abs += transformed.cwiseAbs();
    }
    report.passed = report.max_off_block_mass < options.tolerance;
    return report;
}

BlockReport block_diagonal_check(const Decomposition &dec, const BlockDiagonalOptions &options) {
    return block_diagonal_check(dec, dec.family, options);
}

}  // namespace qinv
