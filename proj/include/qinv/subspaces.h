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

#ifndef QINV_SUBSPACES_H
#define QINV_SUBSPACES_H

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qinv/gates.h"
#include "qinv/state.h"

namespace qinv {

enum class LabelKind {
    /// One computational basis state, index = basis index.
    CP_BASIS,
    /// index 0, 1, 2 for V0, V1, V2.
    CNOT,
    /// Irreducible V_{i,j} of the SWAP group, index = i (Hamming weight), j = irrep.
    SWAP_IRREP,
    /// Whole Hamming-weight class V_i, index = i.
    SWAP_WEIGHT,
};

struct SubspaceLabel {
    LabelKind kind;
    uint64_t index = 0;
    int j = 0;

    static SubspaceLabel cp(uint64_t basis_index) {
        return {LabelKind::CP_BASIS, basis_index, 0};
    }
    static SubspaceLabel cnot(int v) {
        return {LabelKind::CNOT, static_cast<uint64_t>(v), 0};
    }
    static SubspaceLabel swap(int i, int j) {
        return {LabelKind::SWAP_IRREP, static_cast<uint64_t>(i), j};
    }
    static SubspaceLabel weight(int i) {
        return {LabelKind::SWAP_WEIGHT, static_cast<uint64_t>(i), 0};
    }

    /// "cp:5", "cnot:V1", "swap:2,1", "weight:3".
    std::string str() const;
    bool operator==(const SubspaceLabel &other) const = default;
};

/// Parses a label in the context of a family: "5" for cp, "V1"/"1" for cnot, "2,1" for swap,
/// plus the explicit "kind:..." forms produced by str(). Returns nullopt on malformed text.
std::optional<SubspaceLabel> parse_label(const std::string &text, GateFamily family);

/// Throws std::invalid_argument if the label does not name a subspace for n qubits.
/// SWAP labels need j <= min(i, n - i).
void validate_label(const SubspaceLabel &label, int n);

/// Predicted dimension of the labeled subspace.
uint64_t predicted_dimension(const SubspaceLabel &label, int n);

/// Subspace given by orthonormal real coefficient columns over a set of computational basis states.
class Subspace {
   public:
    Subspace(SubspaceLabel label, int n, std::vector<uint64_t> support, Eigen::MatrixXd coeffs);

    const SubspaceLabel &label() const {
        return label_;
    }
    int num_qubits() const {
        return n_;
    }
    int dim() const {
        return static_cast<int>(coeffs_.cols());
    }
    /// Basis indices the subspace lives on; row s of coeffs() belongs to support()[s].
    const std::vector<uint64_t> &support() const {
        return support_;
    }
    const Eigen::MatrixXd &coeffs() const {
        return coeffs_;
    }

    StateVector basis_vector(int k) const;
    std::vector<StateVector> basis() const;
    /// Dense 2^n x dim matrix of basis columns.
    Eigen::MatrixXcd ambient_basis() const;

    /// <b_k|psi> for every basis vector b_k.
    Eigen::VectorXcd coordinates(const StateVector &state) const;
    /// sum_k c_k b_k.
    StateVector embed(const Eigen::VectorXcd &coordinates) const;

   private:
    SubspaceLabel label_;
    int n_;
    std::vector<uint64_t> support_;
    Eigen::MatrixXd coeffs_;
};

/// sum_k |<b_k|psi>|^2.
double project(const StateVector &state, const Subspace &sub);

/// All irreducible invariant subspaces of one family, ordered as they appear on the block diagonal.
struct Decomposition {
    int n = 0;
    GateFamily family = GateFamily::CP;
    std::vector<Subspace> subspaces;

    /// Column-concatenated bases.
    UnitaryMatrix transform() const;
    std::vector<int> block_sizes() const;
    std::vector<int> block_offsets() const;
    const Subspace *find(const SubspaceLabel &label) const;
    uint64_t total_dimension() const;
};

std::vector<double> project_all(const StateVector &state, const Decomposition &dec);

/// 2^n one-dimensional subspaces, one per computational basis state.
Decomposition cp_decomposition(int n);

/// V0 = span{|0>}, V1 = span of the uniform sum over nonzero states, V2 = the rest, obtained by
/// orthonormalizing the vectors sqrt(2^n-1)|i> - |v1> (i >= 1) against V1.
Decomposition cnot_decomposition(int n);

/// Computational states of Hamming weight i.
Subspace swap_weight_subspace(int n, int i);

/// The recursive construction of all V_{i,j}: for each weight i <= n/2, the irreducible blocks of
/// weight i-1 are transported into weight i through the vectors returned by
/// weight_transport_vectors, and V_{i,i} is the remaining orthogonal complement. Weights above n/2
/// come from the global bit flip. Ordered by increasing i, then decreasing j.
Decomposition swap_irreducible_decomposition(int n);

/// For 1 <= i <= n/2: one unit vector per (i-1)-subset s of qubits, the normalized sum over all
/// weight-i states with the qubits in s set. Ordered like weight_class_indices(n, i - 1).
std::vector<StateVector> weight_transport_vectors(int n, int i);

/// Decomposition for a family; SWAP_ALPHA shares the SWAP decomposition.
Decomposition decomposition_for(GateFamily family, int n);

/// All basis indices of Hamming weight i, ascending.
std::vector<uint64_t> weight_class_indices(int n, int i);

uint64_t binomial(int n, int k);

/// Largest ||(I - P) g b|| over basis vectors b and gates g, P the projector onto the subspace.
double invariance_residual(const Subspace &sub, const std::vector<GateOp> &gates);

/// Largest |<b|b'>| over basis vectors of distinct subspaces, and largest deviation from
/// orthonormality within each subspace.
struct OrthogonalityReport {
    double max_cross_overlap = 0;
    double max_self_defect = 0;
};
OrthogonalityReport orthogonality(const Decomposition &dec);

/// SWAP^alpha against the SWAP decomposition.
struct SharedSubspaceReport {
    int n = 0;
    std::vector<double> alphas;
    /// Largest ||(I - P) psi|| per alpha, over all subspaces, for random psi in the subspace pushed
    /// through random SWAP^alpha words.
    std::vector<double> max_residual;
    /// max |gate_matrix(SWAP^alpha) - (a I + b SWAP)| over all pairs and alphas.
    double max_identity_deviation = 0;
    /// Same for the form a SWAP + b I, which disagrees with the gate matrix whenever a != b.
    double max_swapped_form_deviation = 0;
    bool passed = false;
};

/// Requires n <= size_limits().max_dense_qubits. Passes iff every residual < 1e-9 and the
/// a I + b SWAP identity holds within 1e-12.
SharedSubspaceReport swap_alpha_shared_subspace_check(int n, const std::vector<double> &alphas, uint64_t seed,
                                                      int words = 4, int word_length = 40);

struct DimensionEntry {
    int i;
    int j;
    uint64_t dim;
};

/// Predicted counts and dimensions of the irreducible SWAP subspaces.
struct DimensionTable {
    int n = 0;
    /// Increasing i, decreasing j.
    std::vector<DimensionEntry> entries;
    /// multiplicity[j] = |n - 2j| + 1 for j = 0..n/2.
    std::vector<uint64_t> multiplicity;
    /// (n+2)^2/4 for even n, (n+1)(n+3)/4 for odd n.
    uint64_t total_count = 0;

    uint64_t irrep_dimension(int j) const;
};

DimensionTable dimension_table(int n);

/// Differences between a constructed SWAP decomposition and the predicted table; empty when they agree.
std::vector<std::string> compare_with_table(const Decomposition &dec, const DimensionTable &table);

}  // namespace qinv

#endif
