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

#include <gtest/gtest.h>

#include <cmath>

#include "qinv/orthonormal.h"
#include "qinv/subspaces.h"
#include "test_util.h"

namespace qinv {
namespace {

using testing::random_state;

uint64_t choose(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    uint64_t r = 1;
    for (int i = 1; i <= k; i++) {
        r = r * (n - k + i) / i;
    }
    return r;
}

/// Projector onto the subspace, built from its ambient basis.
Eigen::MatrixXcd projector(const Subspace &sub) {
    Eigen::MatrixXcd b = sub.ambient_basis();
    return b * b.adjoint();
}

TEST(Orthonormalize, DropsDependentColumnsAndHonorsLimit) {
    Eigen::MatrixXd c(3, 4);
    c << 1, 2, 0, 1, 0, 0, 1, 1, 0, 0, 0, 1;
    Eigen::MatrixXd q = orthonormalize(c);
    EXPECT_EQ(q.cols(), 3);
    EXPECT_LT(orthonormality_defect(q), 1e-15);
    Eigen::MatrixXd limited = orthonormalize(c, Eigen::MatrixXd(3, 0), kDependenceTolerance, 2);
    EXPECT_EQ(limited.cols(), 2);
    Eigen::MatrixXd comp = orthogonal_complement(limited);
    EXPECT_EQ(comp.cols(), 1);
    EXPECT_LT((limited.transpose() * comp).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(CpDecomposition, OneStatePerSubspace) {
    Decomposition dec = cp_decomposition(2);
    ASSERT_EQ(dec.subspaces.size(), 4u);
    for (uint64_t k = 0; k < 4; k++) {
        EXPECT_EQ(dec.subspaces[k].dim(), 1);
        EXPECT_EQ(dec.subspaces[k].basis_vector(0), basis_state(2, k));
        EXPECT_EQ(dec.subspaces[k].label(), SubspaceLabel::cp(k));
    }
    EXPECT_EQ(dec.transform(), UnitaryMatrix::Identity(4, 4));
    for (int n = 2; n <= 6; n++) {
        EXPECT_EQ(cp_decomposition(n).total_dimension(), uint64_t{1} << n);
    }
}

TEST(CnotDecomposition, PaperVectors) {
    Decomposition dec = cnot_decomposition(2);
    ASSERT_EQ(dec.subspaces.size(), 3u);
    EXPECT_EQ(dec.subspaces[0].basis_vector(0), basis_state(2, 0));
    StateVector v1 = dec.subspaces[1].basis_vector(0);
    // (|01> + |10> + |11>)/sqrt(3): every nonzero index.
    const double r3 = 1.0 / std::sqrt(3.0);
    EXPECT_NEAR(std::abs(v1[0]), 0.0, 1e-15);
    for (uint64_t k = 1; k < 4; k++) {
        EXPECT_NEAR(std::abs(v1[k]), r3, 1e-15);
    }
}

TEST(CnotDecomposition, DimensionsAndComplement) {
    for (int n = 2; n <= 8; n++) {
        Decomposition dec = cnot_decomposition(n);
        ASSERT_EQ(dec.subspaces.size(), 3u);
        EXPECT_EQ(dec.subspaces[0].dim(), 1);
        EXPECT_EQ(dec.subspaces[1].dim(), 1);
        EXPECT_EQ(dec.subspaces[2].dim(), (1 << n) - 2);
        if (n <= 6) {
            // V2 is exactly the complement of V0 + V1.
            const int d = 1 << n;
            Eigen::MatrixXcd expected = Eigen::MatrixXcd::Identity(d, d) - projector(dec.subspaces[0]) -
                                        projector(dec.subspaces[1]);
            EXPECT_LT((projector(dec.subspaces[2]) - expected).cwiseAbs().maxCoeff(), 1e-12);
        }
    }
}

TEST(CnotDecomposition, SpanningVectorsOfV2LieInside) {
    const int n = 4;
    const int d = 1 << n;
    Decomposition dec = cnot_decomposition(n);
    Eigen::MatrixXcd p2 = projector(dec.subspaces[2]);
    Eigen::VectorXcd v1 = Eigen::VectorXcd::Constant(d, 1.0 / std::sqrt(d - 1.0));
    v1(0) = 0;
    for (int i = 1; i < d; i++) {
        Eigen::VectorXcd w = -v1;
        w(i) += std::sqrt(d - 1.0);
        w /= std::pow(2.0, n / 2.0);
        EXPECT_LT((p2 * w - w).norm(), 1e-12) << i;
    }
}

TEST(SwapWeightSubspace, Basics) {
    Subspace s = swap_weight_subspace(4, 2);
    EXPECT_EQ(s.dim(), 6);
    Subspace zero = swap_weight_subspace(5, 0);
    ASSERT_EQ(zero.dim(), 1);
    EXPECT_EQ(zero.basis_vector(0), basis_state(5, 0));
    for (int i = 0; i <= 5; i++) {
        EXPECT_EQ(invariance_residual(swap_weight_subspace(5, i), family_generators(GateFamily::SWAP, 5)), 0.0);
    }
}

TEST(SwapDecomposition, PaperTransportVector) {
    auto v = weight_transport_vectors(4, 2);
    ASSERT_EQ(v.size(), 4u);
    StateVector expected(4);
    for (const char *ket : {"1100", "1010", "1001"}) {
        expected[index_from_ket(ket)] = 1.0 / std::sqrt(3.0);
    }
    EXPECT_LT(max_abs_diff(v[0], expected), 1e-15);
}

TEST(SwapDecomposition, FourQubitWeightTwoDimensions) {
    Decomposition dec = swap_irreducible_decomposition(4);
    EXPECT_EQ(dec.find(SubspaceLabel::swap(2, 0))->dim(), 1);
    EXPECT_EQ(dec.find(SubspaceLabel::swap(2, 1))->dim(), 3);
    EXPECT_EQ(dec.find(SubspaceLabel::swap(2, 2))->dim(), 2);
}

TEST(SwapDecomposition, CountsAndOrdering) {
    EXPECT_EQ(swap_irreducible_decomposition(8).subspaces.size(), 25u);
    for (int n = 2; n <= 10; n++) {
        Decomposition dec = swap_irreducible_decomposition(n);
        uint64_t expected_count = n % 2 == 0 ? (n + 2) * (n + 2) / 4 : (n + 1) * (n + 3) / 4;
        EXPECT_EQ(dec.subspaces.size(), expected_count);
        EXPECT_EQ(dec.total_dimension(), uint64_t{1} << n);
        for (size_t k = 1; k < dec.subspaces.size(); k++) {
            const auto &prev = dec.subspaces[k - 1].label();
            const auto &cur = dec.subspaces[k].label();
            EXPECT_TRUE(prev.index < cur.index || (prev.index == cur.index && prev.j > cur.j));
        }
        for (const auto &sub : dec.subspaces) {
            const int j = sub.label().j;
            uint64_t predicted = j == 0 ? 1 : choose(n, j) - choose(n, j - 1);
            EXPECT_EQ(static_cast<uint64_t>(sub.dim()), predicted) << sub.label().str();
        }
    }
}

TEST(SwapDecomposition, GlobalFlipPairsWeights) {
    const int n = 6;
    Decomposition dec = swap_irreducible_decomposition(n);
    const uint64_t mask = (uint64_t{1} << n) - 1;
    for (int i = 0; i < n / 2; i++) {
        for (int j = 0; j <= i; j++) {
            const Subspace *low = dec.find(SubspaceLabel::swap(i, j));
            const Subspace *high = dec.find(SubspaceLabel::swap(n - i, j));
            ASSERT_NE(low, nullptr);
            ASSERT_NE(high, nullptr);
            for (int k = 0; k < low->dim(); k++) {
                StateVector a = low->basis_vector(k);
                StateVector b = high->basis_vector(k);
                for (uint64_t x = 0; x <= mask; x++) {
                    EXPECT_EQ(a[x], b[x ^ mask]);
                }
            }
        }
    }
}

TEST(SwapDecomposition, SameJSameIrrep) {
    // Equal characters on random words identify equivalent representations.
    const int n = 6;
    Decomposition dec = swap_irreducible_decomposition(n);
    auto gens = family_generators(GateFamily::SWAP, n);
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
    for (int w = 0; w < 10; w++) {
        std::vector<GateOp> word(5);
        for (auto &g : word) {
            g = gens[pick(rng)];
        }
        UnitaryMatrix u = sequence_matrix(word, n);
        for (int j = 0; j <= n / 2; j++) {
            std::vector<complex_t> traces;
            for (const auto &sub : dec.subspaces) {
                if (sub.label().j == j) {
                    Eigen::MatrixXcd b = sub.ambient_basis();
                    traces.push_back((b.adjoint() * u * b).trace());
                }
            }
            EXPECT_EQ(traces.size(), static_cast<size_t>(std::abs(n - 2 * j) + 1));
            for (const auto &t : traces) {
                EXPECT_LT(std::abs(t - traces.front()), 1e-10);
            }
        }
    }
}

TEST(Decompositions, InvariantOrthonormalComplete) {
    for (int n = 2; n <= 6; n++) {
        for (GateFamily fam : {GateFamily::CP, GateFamily::CNOT, GateFamily::SWAP}) {
            Decomposition dec = decomposition_for(fam, n);
            auto gens = family_generators(fam, n);
            for (const auto &sub : dec.subspaces) {
                EXPECT_LT(invariance_residual(sub, gens), 1e-10) << sub.label().str();
                EXPECT_EQ(static_cast<uint64_t>(sub.dim()), predicted_dimension(sub.label(), n));
            }
            auto ortho = orthogonality(dec);
            EXPECT_LT(ortho.max_cross_overlap, 1e-10);
            EXPECT_LT(ortho.max_self_defect, 1e-10);
            EXPECT_LT(unitarity_defect(dec.transform()), 1e-10);
        }
    }
}

TEST(Decompositions, ResidualDetectsNonInvariantSpace) {
    // A single weight-1 state is moved by SWAP.
    Subspace lone(SubspaceLabel::cp(1), 3, {1}, Eigen::MatrixXd::Ones(1, 1));
    EXPECT_GT(invariance_residual(lone, family_generators(GateFamily::SWAP, 3)), 0.5);
}

TEST(Project, InsideOrthogonalAndComplete) {
    std::mt19937_64 rng(23);
    Decomposition dec = swap_irreducible_decomposition(5);
    const Subspace &sub = *dec.find(SubspaceLabel::swap(2, 1));
    Eigen::VectorXcd c = Eigen::VectorXcd::Random(sub.dim());
    StateVector inside = sub.embed(c);
    inside.normalize();
    EXPECT_NEAR(project(inside, sub), 1.0, 1e-12);
    EXPECT_NEAR(project(inside, *dec.find(SubspaceLabel::swap(2, 2))), 0.0, 1e-12);
    for (int t = 0; t < 10; t++) {
        StateVector psi = random_state(5, rng);
        double total = 0;
        for (double p : project_all(psi, dec)) {
            EXPECT_GE(p, 0.0);
            EXPECT_LE(p, 1.0 + 1e-12);
            total += p;
        }
        EXPECT_NEAR(total, 1.0, 1e-12);
    }
}

TEST(DimensionTable, PredictedValues) {
    EXPECT_EQ(dimension_table(8).multiplicity[2], 5u);
    EXPECT_EQ(dimension_table(5).total_count, 12u);
    EXPECT_EQ(dimension_table(8).total_count, 25u);
    for (int n = 2; n <= 10; n++) {
        DimensionTable t = dimension_table(n);
        uint64_t total = 0;
        std::vector<uint64_t> per_weight(n + 1, 0);
        for (const auto &e : t.entries) {
            total += e.dim;
            per_weight[e.i] += e.dim;
        }
        EXPECT_EQ(total, uint64_t{1} << n);
        for (int i = 0; i <= n; i++) {
            EXPECT_EQ(per_weight[i], choose(n, i)) << n << " " << i;
        }
        for (size_t j = 0; j < t.multiplicity.size(); j++) {
            EXPECT_EQ(t.multiplicity[j], static_cast<uint64_t>(std::abs(n - 2 * static_cast<int>(j)) + 1));
        }
        EXPECT_TRUE(compare_with_table(swap_irreducible_decomposition(n), t).empty()) << n;
    }
}

TEST(Labels, ParseAndValidate) {
    EXPECT_EQ(parse_label("2,1", GateFamily::SWAP), SubspaceLabel::swap(2, 1));
    EXPECT_EQ(parse_label("V1", GateFamily::CNOT), SubspaceLabel::cnot(1));
    EXPECT_EQ(parse_label("5", GateFamily::CP), SubspaceLabel::cp(5));
    EXPECT_EQ(parse_label("weight:3", GateFamily::SWAP), SubspaceLabel::weight(3));
    for (const auto &l : {SubspaceLabel::swap(2, 1), SubspaceLabel::cnot(2), SubspaceLabel::cp(7)}) {
        GateFamily fam = l.kind == LabelKind::CP_BASIS ? GateFamily::CP
                         : l.kind == LabelKind::CNOT   ? GateFamily::CNOT
                                                       : GateFamily::SWAP;
        EXPECT_EQ(parse_label(l.str(), fam), l);
    }
    EXPECT_FALSE(parse_label("x,y", GateFamily::SWAP).has_value());
    EXPECT_THROW(validate_label(SubspaceLabel::swap(2, 3), 6), std::invalid_argument);
    EXPECT_THROW(validate_label(SubspaceLabel::swap(5, 2), 6), std::invalid_argument);
    EXPECT_NO_THROW(validate_label(SubspaceLabel::swap(5, 1), 6));
    EXPECT_THROW(validate_label(SubspaceLabel::cnot(3), 4), std::invalid_argument);
    EXPECT_THROW(validate_label(SubspaceLabel::cp(16), 4), std::invalid_argument);
}

TEST(SwapAlphaShared, SubspacesAndIdentity) {
    auto r = swap_alpha_shared_subspace_check(4, {0.5}, 1);
    EXPECT_TRUE(r.passed);
    EXPECT_LT(r.max_residual[0], 1e-9);
    auto id = swap_alpha_shared_subspace_check(3, {0.37}, 2);
    EXPECT_LT(id.max_identity_deviation, 1e-12);
    // a SWAP + b I puts b on the diagonal, which the gate matrix does not.
    EXPECT_GT(id.max_swapped_form_deviation, 0.1);
    auto one = swap_alpha_shared_subspace_check(4, {1.0}, 3);
    EXPECT_TRUE(one.passed);
}

}  // namespace
}  // namespace qinv
