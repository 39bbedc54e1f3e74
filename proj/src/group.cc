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

#include "qinv/group.h"

#include <cmath>

namespace qinv {

SignedPermutation SignedPermutation::identity(int n) {
    SignedPermutation out;
    out.n_ = n;
    uint64_t dim = uint64_t{1} << n;
    out.image_.resize(dim);
    out.sign_.assign(dim, 1);
    for (uint64_t b = 0; b < dim; b++) {
        out.image_[b] = static_cast<uint32_t>(b);
    }
    return out;
}

SignedPermutation SignedPermutation::from_gate(const GateOp &gate, int n) {
    validate_gate(gate, n);
    SignedPermutation out = identity(n);
    const uint64_t mp = uint64_t{1} << gate.p;
    const uint64_t mq = uint64_t{1} << gate.q;
    for (uint64_t b = 0; b < out.image_.size(); b++) {
        bool bp = b & mp;
        bool bq = b & mq;
        switch (gate.family) {
            case GateFamily::CP:
                if (bp && bq) out.sign_[b] = -1;
                break;
            case GateFamily::CNOT:
                if (bp) out.image_[b] = static_cast<uint32_t>(b ^ mq);
                break;
            case GateFamily::SWAP:
                if (bp != bq) out.image_[b] = static_cast<uint32_t>(b ^ mp ^ mq);
                break;
            case GateFamily::SWAP_ALPHA:
                throw std::invalid_argument("swap-alpha has no signed-permutation form");
        }
    }
    return out;
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation &rhs) const {
    if (n_ != rhs.n_) {
        throw std::invalid_argument("SignedPermutation product: qubit counts differ");
    }
    SignedPermutation out;
    out.n_ = n_;
    out.image_.resize(image_.size());
    out.sign_.resize(sign_.size());
    for (size_t b = 0; b < image_.size(); b++) {
        uint32_t mid = rhs.image_[b];
        out.image_[b] = image_[mid];
        out.sign_[b] = static_cast<int8_t>(rhs.sign_[b] * sign_[mid]);
    }
    return out;
}

UnitaryMatrix SignedPermutation::to_dense() const {
    auto dim = static_cast<Eigen::Index>(image_.size());
    UnitaryMatrix u = UnitaryMatrix::Zero(dim, dim);
    for (Eigen::Index b = 0; b < dim; b++) {
        u(image_[b], b) = static_cast<double>(sign_[b]);
    }
    return u;
}

std::vector<uint64_t> SignedPermutation::key() const {
    std::vector<uint64_t> out(image_.size());
    for (size_t b = 0; b < image_.size(); b++) {
        out[b] = (uint64_t{image_[b]} << 1) | (sign_[b] < 0 ? 1 : 0);
    }
    return out;
}

std::optional<F2Matrix> theta_of(const SignedPermutation &u) {
    int n = u.num_qubits();
    F2Matrix m(n);
    for (int c = 0; c < n; c++) {
        uint64_t column = u.image()[uint64_t{1} << c];
        for (int r = 0; r < n; r++) {
            m.set(r, c, (column >> r) & 1);
        }
    }
    for (size_t b = 0; b < u.image().size(); b++) {
        if (u.sign()[b] != 1 || u.image()[b] != m.apply(b)) {
            return std::nullopt;
        }
    }
    return m;
}

int pair_index(int p, int q, int n) {
    if (p > q) {
        std::swap(p, q);
    }
    if (p < 0 || q >= n || p == q) {
        throw std::invalid_argument("pair_index: invalid pair");
    }
    // pairs (0,1),(0,2),...,(0,n-1),(1,2),...
    return p * (2 * n - p - 1) / 2 + (q - p - 1);
}

CPGroupElement::CPGroupElement(int n) : n_(n) {
    if (n < 2 || n > kMaxQubits) {
        throw std::invalid_argument("CPGroupElement supports 2..16 qubits");
    }
}

CPGroupElement CPGroupElement::generator(int p, int q, int n) {
    CPGroupElement out(n);
    out.pairs_.set(pair_index(p, q, n));
    return out;
}

CPGroupElement CPGroupElement::operator*(const CPGroupElement &rhs) const {
    if (n_ != rhs.n_) {
        throw std::invalid_argument("CPGroupElement product: qubit counts differ");
    }
    CPGroupElement out(n_);
    out.pairs_ = pairs_ ^ rhs.pairs_;
    return out;
}

int CPGroupElement::sign(uint64_t basis_index) const {
    int parity = 0;
    for (int p = 0; p < n_; p++) {
        if (!((basis_index >> p) & 1)) {
            continue;
        }
        for (int q = p + 1; q < n_; q++) {
            if (((basis_index >> q) & 1) && pairs_.test(pair_index(p, q, n_))) {
                parity ^= 1;
            }
        }
    }
    return parity ? -1 : 1;
}

std::vector<uint64_t> CPGroupElement::key() const {
    std::vector<uint64_t> out(2, 0);
    for (int k = 0; k < kMaxPairs; k++) {
        if (pairs_.test(k)) {
            out[k / 64] |= uint64_t{1} << (k % 64);
        }
    }
    return out;
}

std::vector<SignedPermutation> signed_permutation_generators(GateFamily family, int n) {
    std::vector<SignedPermutation> out;
    for (const auto &g : family_generators(family, n)) {
        out.push_back(SignedPermutation::from_gate(g, n));
    }
    return out;
}

std::vector<F2Matrix> cnot_theta_generators(int n) {
    std::vector<F2Matrix> out;
    for (const auto &g : family_generators(GateFamily::CNOT, n)) {
        out.push_back(theta_generator(g.p, g.q, n));
    }
    return out;
}

std::vector<CPGroupElement> cp_element_generators(int n) {
    std::vector<CPGroupElement> out;
    for (int p = 0; p < n; p++) {
        for (int q = p + 1; q < n; q++) {
            out.push_back(CPGroupElement::generator(p, q, n));
        }
    }
    return out;
}

GroupClosure<SignedPermutation> enumerate_family(GateFamily family, int n, const ClosureOptions &opts) {
    return enumerate_group(
        signed_permutation_generators(family, n), SignedPermutation::identity(n),
        [](const SignedPermutation &a, const SignedPermutation &b) { return a * b; },
        [](const SignedPermutation &a) { return a.key(); }, opts);
}

GroupClosure<F2Matrix> enumerate_f2(const std::vector<F2Matrix> &generators, const ClosureOptions &opts) {
    if (generators.empty()) {
        throw std::invalid_argument("enumerate_f2: generator set is empty");
    }
    return enumerate_group(
        generators, F2Matrix::identity(generators.front().dim()),
        [](const F2Matrix &a, const F2Matrix &b) { return a * b; },
        [](const F2Matrix &a) { return a.rows(); }, opts);
}

GroupClosure<CPGroupElement> enumerate_cp_elements(int n, const ClosureOptions &opts) {
    return enumerate_group(
        cp_element_generators(n), CPGroupElement(n),
        [](const CPGroupElement &a, const CPGroupElement &b) { return a * b; },
        [](const CPGroupElement &a) { return a.key(); }, opts);
}

static void check_order_arg(int n) {
    if (n < 2) {
        throw std::invalid_argument("group orders are defined here for n >= 2");
    }
}

BigInt cp_group_order(int n) {
    check_order_arg(n);
    return BigInt(1) << (n * (n - 1) / 2);
}

BigInt cnot_group_order(int n) {
    check_order_arg(n);
    BigInt full = BigInt(1) << n;
    BigInt out = 1;
    for (int i = 0; i < n; i++) {
        out *= full - (BigInt(1) << i);
    }
    return out;
}

BigInt swap_group_order(int n) {
    check_order_arg(n);
    BigInt out = 1;
    for (int k = 2; k <= n; k++) {
        out *= k;
    }
    return out;
}

double cnot_order_ratio(int n) {
    BigInt scale = BigInt(1) << (n * n);
    // The ratio is in (0.28, 1]; scale numerator to keep 53 bits of precision before dividing.
    BigInt scaled = (cnot_group_order(n) << 60) / scale;
    return scaled.convert_to<double>() / std::ldexp(1.0, 60);
}

}  // namespace qinv
