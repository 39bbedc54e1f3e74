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

#include "qinv/subspaces.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "qinv/orthonormal.h"

namespace qinv {

std::string SubspaceLabel::str() const {
    switch (kind) {
        case LabelKind::CP_BASIS:
            return "cp:" + std::to_string(index);
        case LabelKind::CNOT:
            return "cnot:V" + std::to_string(index);
        case LabelKind::SWAP_IRREP:
            return "swap:" + std::to_string(index) + "," + std::to_string(j);
        case LabelKind::SWAP_WEIGHT:
            return "weight:" + std::to_string(index);
    }
    return "?";
}

namespace {

std::optional<uint64_t> parse_uint(const std::string &text) {
    if (text.empty() || text.size() > 18 ||
        !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
        return std::nullopt;
    }
    return std::stoull(text);
}

std::optional<SubspaceLabel> parse_swap_pair(const std::string &text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) {
        return std::nullopt;
    }
    auto i = parse_uint(text.substr(0, comma));
    auto j = parse_uint(text.substr(comma + 1));
    if (!i || !j || *i > 64 || *j > 64) {
        return std::nullopt;
    }
    return SubspaceLabel::swap(static_cast<int>(*i), static_cast<int>(*j));
}

std::optional<SubspaceLabel> parse_cnot_tag(std::string text) {
    if (!text.empty() && (text[0] == 'V' || text[0] == 'v')) {
        text = text.substr(1);
    }
    auto v = parse_uint(text);
    if (!v || *v > 2) {
        return std::nullopt;
    }
    return SubspaceLabel::cnot(static_cast<int>(*v));
}

}  // namespace

std::optional<SubspaceLabel> parse_label(const std::string &text, GateFamily family) {
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        std::string kind = text.substr(0, colon);
        std::string rest = text.substr(colon + 1);
        if (kind == "cp") {
            auto k = parse_uint(rest);
            return k ? std::optional(SubspaceLabel::cp(*k)) : std::nullopt;
        }
        if (kind == "cnot") {
            return parse_cnot_tag(rest);
        }
        if (kind == "swap") {
            return parse_swap_pair(rest);
        }
        if (kind == "weight") {
            auto i = parse_uint(rest);
            return i && *i <= 64 ? std::optional(SubspaceLabel::weight(static_cast<int>(*i))) : std::nullopt;
        }
        return std::nullopt;
    }
    switch (family) {
        case GateFamily::CP: {
            auto k = parse_uint(text);
            return k ? std::optional(SubspaceLabel::cp(*k)) : std::nullopt;
        }
        case GateFamily::CNOT:
            return parse_cnot_tag(text);
        case GateFamily::SWAP:
        case GateFamily::SWAP_ALPHA:
            return parse_swap_pair(text);
    }
    return std::nullopt;
}

void validate_label(const SubspaceLabel &label, int n) {
    auto fail = [&](const std::string &why) {
        throw std::invalid_argument("label " + label.str() + " invalid for n=" + std::to_string(n) + ": " + why);
    };
    switch (label.kind) {
        case LabelKind::CP_BASIS:
            if (label.index >= (uint64_t{1} << n)) fail("basis index out of range");
            break;
        case LabelKind::CNOT:
            if (label.index > 2) fail("CNOT subspaces are V0, V1, V2");
            break;
        case LabelKind::SWAP_IRREP: {
            auto i = static_cast<int>(label.index);
            if (label.index > static_cast<uint64_t>(n)) fail("weight exceeds n");
            if (label.j < 0 || label.j > std::min(i, n - i)) fail("need 0 <= j <= min(i, n - i)");
            break;
        }
        case LabelKind::SWAP_WEIGHT:
            if (label.index > static_cast<uint64_t>(n)) fail("weight exceeds n");
            break;
    }
}

uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    uint64_t out = 1;
    for (int t = 1; t <= k; t++) {
        out = out * static_cast<uint64_t>(n - k + t) / static_cast<uint64_t>(t);
    }
    return out;
}

uint64_t DimensionTable::irrep_dimension(int j) const {
    return j == 0 ? binomial(n, 0) : binomial(n, j) - binomial(n, j - 1);
}

uint64_t predicted_dimension(const SubspaceLabel &label, int n) {
    validate_label(label, n);
    switch (label.kind) {
        case LabelKind::CP_BASIS:
            return 1;
        case LabelKind::CNOT:
            return label.index == 2 ? (uint64_t{1} << n) - 2 : 1;
        case LabelKind::SWAP_IRREP:
            return label.j == 0 ? 1 : binomial(n, label.j) - binomial(n, label.j - 1);
        case LabelKind::SWAP_WEIGHT:
            return binomial(n, static_cast<int>(label.index));
    }
    return 0;
}

Subspace::Subspace(SubspaceLabel label, int n, std::vector<uint64_t> support, Eigen::MatrixXd coeffs)
    : label_(label), n_(n), support_(std::move(support)), coeffs_(std::move(coeffs)) {
    if (static_cast<Eigen::Index>(support_.size()) != coeffs_.rows()) {
        throw std::invalid_argument("Subspace: support size does not match coefficient rows");
    }
    for (auto s : support_) {
        if (s >= (uint64_t{1} << n)) {
            throw std::invalid_argument("Subspace: support index out of range");
        }
    }
}

StateVector Subspace::basis_vector(int k) const {
    StateVector out(n_);
    for (size_t s = 0; s < support_.size(); s++) {
        out[support_[s]] = coeffs_(static_cast<Eigen::Index>(s), k);
    }
    return out;
}

std::vector<StateVector> Subspace::basis() const {
    std::vector<StateVector> out;
    out.reserve(dim());
    for (int k = 0; k < dim(); k++) {
        out.push_back(basis_vector(k));
    }
    return out;
}

Eigen::MatrixXcd Subspace::ambient_basis() const {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(Eigen::Index{1} << n_, dim());
    for (size_t s = 0; s < support_.size(); s++) {
        out.row(static_cast<Eigen::Index>(support_[s])) = coeffs_.row(static_cast<Eigen::Index>(s)).cast<complex_t>();
    }
    return out;
}

Eigen::VectorXcd Subspace::coordinates(const StateVector &state) const {
    if (state.num_qubits() != n_) {
        throw std::invalid_argument("Subspace::coordinates: qubit counts differ");
    }
    Eigen::VectorXcd gathered(static_cast<Eigen::Index>(support_.size()));
    for (size_t s = 0; s < support_.size(); s++) {
        gathered(static_cast<Eigen::Index>(s)) = state[support_[s]];
    }
    return coeffs_.transpose().cast<complex_t>() * gathered;
}

StateVector Subspace::embed(const Eigen::VectorXcd &coordinates) const {
    if (coordinates.size() != dim()) {
        throw std::invalid_argument("Subspace::embed: coordinate count does not match dimension");
    }
    Eigen::VectorXcd values = coeffs_.cast<complex_t>() * coordinates;
    StateVector out(n_);
    for (size_t s = 0; s < support_.size(); s++) {
        out[support_[s]] = values(static_cast<Eigen::Index>(s));
    }
    return out;
}

double project(const StateVector &state, const Subspace &sub) {
    return sub.coordinates(state).squaredNorm();
}

UnitaryMatrix Decomposition::transform() const {
    const Eigen::Index dim = Eigen::Index{1} << n;
    UnitaryMatrix t = UnitaryMatrix::Zero(dim, dim);
    Eigen::Index col = 0;
    for (const auto &sub : subspaces) {
        t.middleCols(col, sub.dim()) = sub.ambient_basis();
        col += sub.dim();
    }
    if (col != dim) {
        throw std::logic_error("Decomposition::transform: dimensions do not sum to 2^n");
    }
    return t;
}

std::vector<int> Decomposition::block_sizes() const {
    std::vector<int> out;
    for (const auto &sub : subspaces) {
        out.push_back(sub.dim());
    }
    return out;
}

std::vector<int> Decomposition::block_offsets() const {
    std::vector<int> out;
    int offset = 0;
    for (const auto &sub : subspaces) {
        out.push_back(offset);
        offset += sub.dim();
    }
    return out;
}

const Subspace *Decomposition::find(const SubspaceLabel &label) const {
    for (const auto &sub : subspaces) {
        if (sub.label() == label) {
            return &sub;
        }
    }
    return nullptr;
}

uint64_t Decomposition::total_dimension() const {
    uint64_t total = 0;
    for (const auto &sub : subspaces) {
        total += static_cast<uint64_t>(sub.dim());
    }
    return total;
}

std::vector<double> project_all(const StateVector &state, const Decomposition &dec) {
    std::vector<double> out;
    out.reserve(dec.subspaces.size());
    for (const auto &sub : dec.subspaces) {
        out.push_back(project(state, sub));
    }
    return out;
}

static void check_decomposition_size(int n, int min_n) {
    if (n < min_n || n > size_limits().max_dense_qubits) {
        throw std::invalid_argument("decomposition needs " + std::to_string(min_n) + " <= n <= " +
                                    std::to_string(size_limits().max_dense_qubits) + ", got " + std::to_string(n));
    }
}

Decomposition cp_decomposition(int n) {
    check_decomposition_size(n, 1);
    Decomposition dec{n, GateFamily::CP, {}};
    for (uint64_t k = 0; k < (uint64_t{1} << n); k++) {
        dec.subspaces.emplace_back(SubspaceLabel::cp(k), n, std::vector<uint64_t>{k}, Eigen::MatrixXd::Ones(1, 1));
    }
    return dec;
}

Decomposition cnot_decomposition(int n) {
    check_decomposition_size(n, 2);
    const uint64_t m = (uint64_t{1} << n) - 1;
    const auto rows = static_cast<Eigen::Index>(m);
    std::vector<uint64_t> nonzero(m);
    for (uint64_t k = 0; k < m; k++) {
        nonzero[k] = k + 1;
    }
    Eigen::MatrixXd v1 = Eigen::MatrixXd::Constant(rows, 1, 1.0 / std::sqrt(static_cast<double>(m)));

    // (sqrt(2^n - 1)|i> - |v1>) / 2^{n/2}, i = 1..2^n-1; they span V2 but are linearly dependent.
    const double scale = std::ldexp(1.0, -n) * std::sqrt(std::ldexp(1.0, n));
    Eigen::MatrixXd spanning = -v1 * Eigen::RowVectorXd::Ones(rows);
    spanning.diagonal().array() += std::sqrt(static_cast<double>(m));
    spanning *= scale;
    Eigen::MatrixXd v2 = orthonormalize(spanning, v1);
    if (static_cast<uint64_t>(v2.cols()) != m - 1) {
        throw std::logic_error("cnot_decomposition: V2 has dimension " + std::to_string(v2.cols()) + ", expected " +
                               std::to_string(m - 1));
    }

    Decomposition dec{n, GateFamily::CNOT, {}};
    dec.subspaces.emplace_back(SubspaceLabel::cnot(0), n, std::vector<uint64_t>{0}, Eigen::MatrixXd::Ones(1, 1));
    dec.subspaces.emplace_back(SubspaceLabel::cnot(1), n, nonzero, std::move(v1));
    dec.subspaces.emplace_back(SubspaceLabel::cnot(2), n, std::move(nonzero), std::move(v2));
    return dec;
}

std::vector<uint64_t> weight_class_indices(int n, int i) {
    std::vector<uint64_t> out;
    if (i < 0 || i > n) {
        return out;
    }
    out.reserve(binomial(n, i));
    for (uint64_t k = 0; k < (uint64_t{1} << n); k++) {
        if (hamming_weight(k) == i) {
            out.push_back(k);
        }
    }
    return out;
}

Subspace swap_weight_subspace(int n, int i) {
    if (i < 0 || i > n) {
        throw std::invalid_argument("swap_weight_subspace: weight must be in [0, n]");
    }
    auto support = weight_class_indices(n, i);
    auto d = static_cast<Eigen::Index>(support.size());
    return Subspace(SubspaceLabel::weight(i), n, std::move(support), Eigen::MatrixXd::Identity(d, d));
}

namespace {

/// Rank of each index within its sorted weight class.
std::unordered_map<uint64_t, Eigen::Index> rank_map(const std::vector<uint64_t> &indices) {
    std::unordered_map<uint64_t, Eigen::Index> out;
    out.reserve(indices.size());
    for (size_t k = 0; k < indices.size(); k++) {
        out.emplace(indices[k], static_cast<Eigen::Index>(k));
    }
    return out;
}

/// Columns: the transport vectors of weight i in weight-i coordinates.
Eigen::MatrixXd transport_matrix(int n, int i, const std::vector<uint64_t> &lower,
                                 const std::vector<uint64_t> &upper) {
    auto rank = rank_map(upper);
    const double norm = 1.0 / std::sqrt(static_cast<double>(n - i + 1));
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(upper.size()),
                                              static_cast<Eigen::Index>(lower.size()));
    for (size_t k = 0; k < lower.size(); k++) {
        for (int t = 0; t < n; t++) {
            uint64_t bit = uint64_t{1} << t;
            if (!(lower[k] & bit)) {
                w(rank.at(lower[k] | bit), static_cast<Eigen::Index>(k)) = norm;
            }
        }
    }
    return w;
}

/// Irreducible blocks of one weight class, blocks[j] in coordinates over `indices`.
struct WeightBlocks {
    std::vector<uint64_t> indices;
    std::vector<Eigen::MatrixXd> blocks;
};

std::vector<WeightBlocks> build_weight_blocks(int n) {
    std::vector<WeightBlocks> out;
    out.push_back({{0}, {Eigen::MatrixXd::Ones(1, 1)}});
    for (int i = 1; i <= n / 2; i++) {
        const WeightBlocks &prev = out.back();
        WeightBlocks next;
        next.indices = weight_class_indices(n, i);
        Eigen::MatrixXd w = transport_matrix(n, i, prev.indices, next.indices);

        Eigen::Index transported_cols = 0;
        for (const auto &block : prev.blocks) {
            Eigen::MatrixXd moved = orthonormalize(Eigen::MatrixXd(w * block));
            if (moved.cols() != block.cols()) {
                throw std::logic_error("swap decomposition: transported block lost rank");
            }
            transported_cols += moved.cols();
            next.blocks.push_back(std::move(moved));
        }
        Eigen::MatrixXd complement_of(next.indices.size(), transported_cols);
        Eigen::Index col = 0;
        for (const auto &block : next.blocks) {
            complement_of.middleCols(col, block.cols()) = block;
            col += block.cols();
        }
        next.blocks.push_back(orthogonal_complement(complement_of));
        out.push_back(std::move(next));
    }
    return out;
}

}  // namespace

std::vector<StateVector> weight_transport_vectors(int n, int i) {
    if (i < 1 || i > n / 2) {
        throw std::invalid_argument("weight_transport_vectors: need 1 <= i <= n/2");
    }
    auto lower = weight_class_indices(n, i - 1);
    auto upper = weight_class_indices(n, i);
    Eigen::MatrixXd w = transport_matrix(n, i, lower, upper);
    std::vector<StateVector> out;
    for (Eigen::Index k = 0; k < w.cols(); k++) {
        StateVector v(n);
        for (size_t s = 0; s < upper.size(); s++) {
            v[upper[s]] = w(static_cast<Eigen::Index>(s), k);
        }
        out.push_back(std::move(v));
    }
    return out;
}

Decomposition swap_irreducible_decomposition(int n) {
    check_decomposition_size(n, 2);
    auto weights = build_weight_blocks(n);
    const uint64_t all = (uint64_t{1} << n) - 1;
    Decomposition dec{n, GateFamily::SWAP, {}};
    for (int i = 0; i <= n; i++) {
        const bool flipped = i > n / 2;
        const WeightBlocks &src = weights[flipped ? n - i : i];
        std::vector<uint64_t> support = src.indices;
        if (flipped) {
            for (auto &s : support) {
                s ^= all;
            }
        }
        for (int j = std::min(i, n - i); j >= 0; j--) {
            dec.subspaces.emplace_back(SubspaceLabel::swap(i, j), n, support, src.blocks[j]);
        }
    }
    return dec;
}

Decomposition decomposition_for(GateFamily family, int n) {
    switch (family) {
        case GateFamily::CP:
            return cp_decomposition(n);
        case GateFamily::CNOT:
            return cnot_decomposition(n);
        case GateFamily::SWAP:
        case GateFamily::SWAP_ALPHA:
            return swap_irreducible_decomposition(n);
    }
    throw std::invalid_argument("decomposition_for: unknown family");
}

double invariance_residual(const Subspace &sub, const std::vector<GateOp> &gates) {
    const int n = sub.num_qubits();
    const Eigen::MatrixXcd basis = sub.ambient_basis();
    const Eigen::MatrixXcd q = sub.coeffs().cast<complex_t>();
    const auto support_size = static_cast<Eigen::Index>(sub.support().size());
    double worst = 0;
    Eigen::MatrixXcd moved(basis.rows(), basis.cols());
    Eigen::MatrixXcd gathered(support_size, basis.cols());
    for (const auto &gate : gates) {
        for (Eigen::Index k = 0; k < basis.cols(); k++) {
            StateVector s(n, std::vector<complex_t>(basis.col(k).data(), basis.col(k).data() + basis.rows()));
            apply_gate_inplace(s, gate);
            moved.col(k) = Eigen::Map<const Eigen::VectorXcd>(s.amplitudes().data(), basis.rows());
        }
        for (Eigen::Index s = 0; s < support_size; s++) {
            gathered.row(s) = moved.row(static_cast<Eigen::Index>(sub.support()[s]));
        }
        Eigen::MatrixXcd inside = q * (q.adjoint() * gathered);
        for (Eigen::Index s = 0; s < support_size; s++) {
            moved.row(static_cast<Eigen::Index>(sub.support()[s])) -= inside.row(s);
        }
        worst = std::max(worst, moved.colwise().norm().maxCoeff());
    }
    return worst;
}

SharedSubspaceReport swap_alpha_shared_subspace_check(int n, const std::vector<double> &alphas, uint64_t seed,
                                                      int words, int word_length) {
    if (n < 2 || n > size_limits().max_dense_qubits) {
        throw std::invalid_argument("swap_alpha_shared_subspace_check: n out of range");
    }
    if (alphas.empty() || words < 1 || word_length < 1) {
        throw std::invalid_argument("swap_alpha_shared_subspace_check: empty alpha set or word count");
    }
    SharedSubspaceReport report;
    report.n = n;
    report.alphas = alphas;
    const Decomposition dec = swap_irreducible_decomposition(n);
    const auto pairs = family_generators(GateFamily::SWAP, n);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    std::uniform_int_distribution<size_t> pick(0, pairs.size() - 1);
    bool ok = true;
    for (double alpha : alphas) {
        auto [a, b] = swap_alpha_coefficients(alpha);
        for (const auto &pair : pairs) {
            const UnitaryMatrix swap = gate_matrix(pair, n);
            const UnitaryMatrix gate = gate_matrix(GateOp::swap_alpha(pair.p, pair.q, alpha), n);
            const UnitaryMatrix id = UnitaryMatrix::Identity(swap.rows(), swap.cols());
            report.max_identity_deviation =
                std::max(report.max_identity_deviation, (gate - (a * id + b * swap)).cwiseAbs().maxCoeff());
            report.max_swapped_form_deviation =
                std::max(report.max_swapped_form_deviation, (gate - (a * swap + b * id)).cwiseAbs().maxCoeff());
        }
        double worst = 0;
        for (const auto &sub : dec.subspaces) {
            for (int w = 0; w < words; w++) {
                Eigen::VectorXcd coords(sub.dim());
                for (Eigen::Index k = 0; k < coords.size(); k++) {
                    double re = normal(rng);
                    double im = normal(rng);
                    coords(k) = complex_t{re, im};
                }
                StateVector psi = sub.embed(coords);
                psi.normalize();
                for (int g = 0; g < word_length; g++) {
                    const auto &pair = pairs[pick(rng)];
                    apply_gate_inplace(psi, GateOp::swap_alpha(pair.p, pair.q, alpha));
                }
                // Direct ||psi - P psi||; sqrt(1 - <psi|P|psi>) would bottom out near 1e-8.
                const StateVector inside = sub.embed(sub.coordinates(psi));
                double outside = 0;
                for (uint64_t k = 0; k < psi.dim(); k++) {
                    outside += std::norm(psi[k] - inside[k]);
                }
                worst = std::max(worst, std::sqrt(outside));
            }
        }
        report.max_residual.push_back(worst);
        ok = ok && worst < 1e-9;
    }
    report.passed = ok && report.max_identity_deviation < 1e-12;
    return report;
}

OrthogonalityReport orthogonality(const Decomposition &dec) {
    const Eigen::MatrixXd t = dec.transform().real();
    const Eigen::MatrixXd gram = t.transpose() * t - Eigen::MatrixXd::Identity(t.cols(), t.cols());
    OrthogonalityReport report;
    auto offsets = dec.block_offsets();
    auto sizes = dec.block_sizes();
    std::vector<int> owner(t.cols());
    for (size_t b = 0; b < sizes.size(); b++) {
        std::fill(owner.begin() + offsets[b], owner.begin() + offsets[b] + sizes[b], static_cast<int>(b));
    }
    for (Eigen::Index r = 0; r < gram.rows(); r++) {
        for (Eigen::Index c = 0; c < gram.cols(); c++) {
            double v = std::abs(gram(r, c));
            if (owner[r] == owner[c]) {
                report.max_self_defect = std::max(report.max_self_defect, v);
            } else {
                report.max_cross_overlap = std::max(report.max_cross_overlap, v);
            }
        }
    }
    return report;
}

DimensionTable dimension_table(int n) {
    if (n < 2 || n > 62) {
        throw std::invalid_argument("dimension_table: n must be in [2, 62]");
    }
    DimensionTable table;
    table.n = n;
    for (int i = 0; i <= n; i++) {
        for (int j = std::min(i, n - i); j >= 0; j--) {
            table.entries.push_back({i, j, table.irrep_dimension(j)});
        }
    }
    for (int j = 0; j <= n / 2; j++) {
        table.multiplicity.push_back(static_cast<uint64_t>(std::abs(n - 2 * j) + 1));
    }
    const auto un = static_cast<uint64_t>(n);
    table.total_count = n % 2 == 0 ? (un + 2) * (un + 2) / 4 : (un + 1) * (un + 3) / 4;
    return table;
}

std::vector<std::string> compare_with_table(const Decomposition &dec, const DimensionTable &table) {
    std::vector<std::string> out;
    if (dec.n != table.n) {
        out.push_back("qubit counts differ");
        return out;
    }
    if (dec.subspaces.size() != table.total_count) {
        out.push_back("subspace count " + std::to_string(dec.subspaces.size()) + " != predicted " +
                      std::to_string(table.total_count));
    }
    if (dec.subspaces.size() != table.entries.size()) {
        out.push_back("table has " + std::to_string(table.entries.size()) + " entries");
        return out;
    }
    std::map<int, uint64_t> per_j;
    std::map<int, uint64_t> per_i;
    for (size_t k = 0; k < dec.subspaces.size(); k++) {
        const auto &sub = dec.subspaces[k];
        const auto &e = table.entries[k];
        auto expected = SubspaceLabel::swap(e.i, e.j);
        if (!(sub.label() == expected)) {
            out.push_back("position " + std::to_string(k) + ": label " + sub.label().str() + ", expected " +
                          expected.str());
        }
        if (static_cast<uint64_t>(sub.dim()) != e.dim) {
            out.push_back(sub.label().str() + ": dimension " + std::to_string(sub.dim()) + " != predicted " +
                          std::to_string(e.dim));
        }
        per_j[sub.label().j]++;
        per_i[static_cast<int>(sub.label().index)] += static_cast<uint64_t>(sub.dim());
    }
    for (int j = 0; j <= table.n / 2; j++) {
        if (per_j[j] != table.multiplicity[j]) {
            out.push_back("multiplicity of j=" + std::to_string(j) + " is " + std::to_string(per_j[j]) +
                          ", predicted " + std::to_string(table.multiplicity[j]));
        }
    }
    for (int i = 0; i <= table.n; i++) {
        if (per_i[i] != binomial(table.n, i)) {
            out.push_back("weight " + std::to_string(i) + " dimensions sum to " + std::to_string(per_i[i]));
        }
    }
    if (dec.total_dimension() != (uint64_t{1} << dec.n)) {
        out.push_back("dimensions sum to " + std::to_string(dec.total_dimension()));
    }
    return out;
}

}  // namespace qinv
