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

#include "qinv/commutant.h"

#include <random>
#include <stdexcept>

namespace qinv {

std::vector<Eigen::MatrixXcd> restricted_generators(const Subspace &sub, const std::vector<GateOp> &gates) {
    const Eigen::MatrixXcd basis = sub.ambient_basis();
    std::vector<Eigen::MatrixXcd> out;
    for (const auto &gate : gates) {
        Eigen::MatrixXcd moved(basis.rows(), basis.cols());
        for (Eigen::Index k = 0; k < basis.cols(); k++) {
            StateVector s(sub.num_qubits(),
                          std::vector<complex_t>(basis.col(k).data(), basis.col(k).data() + basis.rows()));
            apply_gate_inplace(s, gate);
            moved.col(k) = Eigen::Map<const Eigen::VectorXcd>(s.amplitudes().data(), basis.rows());
        }
        out.push_back(basis.adjoint() * moved);
    }
    return out;
}

namespace {

/// Accumulates row blocks of a tall linear system into a square triangular factor with the same
/// singular values.
class StackedRank {
   public:
    explicit StackedRank(Eigen::Index unknowns) : r_(Eigen::MatrixXcd::Zero(0, unknowns)) {
    }

    void add(const Eigen::MatrixXcd &rows) {
        Eigen::MatrixXcd stacked(r_.rows() + rows.rows(), r_.cols());
        stacked << r_, rows;
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(stacked);
        Eigen::Index keep = std::min(stacked.rows(), stacked.cols());
        r_ = qr.matrixQR().topRows(keep).triangularView<Eigen::Upper>();
    }

    int nullity(double rank_tolerance) const {
        if (r_.rows() == 0) {
            return static_cast<int>(r_.cols());
        }
        // JacobiSVD: BDCSVD in Eigen 3.4 is unreliable on these rank-deficient complex systems.
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(r_);
        const auto &sv = svd.singularValues();
        double cutoff = rank_tolerance * std::max(1.0, sv.size() ? sv(0) : 0.0);
        int rank = 0;
        for (Eigen::Index k = 0; k < sv.size(); k++) {
            if (sv(k) > cutoff) {
                rank++;
            }
        }
        return static_cast<int>(r_.cols()) - rank;
    }

   private:
    Eigen::MatrixXcd r_;
};

}  // namespace

int commutant_dimension_dense(const std::vector<Eigen::MatrixXcd> &restricted, double rank_tolerance) {
    if (restricted.empty()) {
        throw std::invalid_argument("commutant_dimension_dense: no generators");
    }
    const Eigen::Index d = restricted.front().rows();
    const Eigen::Index d2 = d * d;
    StackedRank system(d2);
    // vec(A X - X A) = (I (x) A - A^T (x) I) vec(X), column-major vec.
    for (const auto &a : restricted) {
        Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(d2, d2);
        for (Eigen::Index col = 0; col < d; col++) {
            k.block(col * d, col * d, d, d) += a;
        }
        for (Eigen::Index r = 0; r < d; r++) {
            for (Eigen::Index c = 0; c < d; c++) {
                k.block(c * d, r * d, d, d).diagonal().array() -= a(r, c);
            }
        }
        system.add(k);
    }
    return system.nullity(rank_tolerance);
}

int commutant_dimension_reduced(const std::vector<Eigen::MatrixXcd> &restricted, const CommutantOptions &opts) {
    if (restricted.empty()) {
        throw std::invalid_argument("commutant_dimension_reduced: no generators");
    }
    const Eigen::Index d = restricted.front().rows();

    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> normal;
    std::uniform_int_distribution<int> length_dist(1, opts.probe_word_length);
    std::uniform_int_distribution<size_t> gen_dist(0, restricted.size() - 1);
    Eigen::MatrixXcd probe = Eigen::MatrixXcd::Zero(d, d);
    for (int w = 0; w < opts.probe_words; w++) {
        Eigen::MatrixXcd word = Eigen::MatrixXcd::Identity(d, d);
        int len = length_dist(rng);
        for (int k = 0; k < len; k++) {
            word = word * restricted[gen_dist(rng)];
        }
        probe += normal(rng) * (word + word.adjoint());
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(probe);
    const Eigen::VectorXd &values = eig.eigenvalues();
    const Eigen::MatrixXcd &vectors = eig.eigenvectors();

    // Clusters of (numerically) equal eigenvalues; the ansatz is block diagonal over clusters.
    const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
    std::vector<Eigen::Index> cluster(d, 0);
    for (Eigen::Index k = 1; k < d; k++) {
        cluster[k] = cluster[k - 1] + (values(k) - values(k - 1) > opts.cluster_tolerance * scale ? 1 : 0);
    }
    std::vector<std::pair<Eigen::Index, Eigen::Index>> unknowns;
    for (Eigen::Index a = 0; a < d; a++) {
        for (Eigen::Index b = 0; b < d; b++) {
            if (cluster[a] == cluster[b]) {
                unknowns.emplace_back(a, b);
            }
        }
    }

    StackedRank system(static_cast<Eigen::Index>(unknowns.size()));
    for (const auto &a : restricted) {
        Eigen::MatrixXcd rotated = vectors.adjoint() * a * vectors;
        Eigen::MatrixXcd rows = Eigen::MatrixXcd::Zero(d * d, static_cast<Eigen::Index>(unknowns.size()));
        for (size_t u = 0; u < unknowns.size(); u++) {
            auto [ea, eb] = unknowns[u];
            auto col = static_cast<Eigen::Index>(u);
            // A E_ab has column b equal to column a of A; E_ab A has row a equal to row b of A.
            for (Eigen::Index r = 0; r < d; r++) {
                rows(r + eb * d, col) += rotated(r, ea);
                rows(ea + r * d, col) -= rotated(eb, r);
            }
        }
        system.add(rows);
    }
    return system.nullity(opts.rank_tolerance);
}

int commutant_dimension(const Subspace &sub, const std::vector<GateOp> &gates, const CommutantOptions &opts) {
    auto restricted = restricted_generators(sub, gates);
    if (sub.dim() <= opts.dense_max_dim) {
        return commutant_dimension_dense(restricted, opts.rank_tolerance);
    }
    return commutant_dimension_reduced(restricted, opts);
}

}  // namespace qinv
