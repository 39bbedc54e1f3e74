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

#ifndef QINV_GROUP_H
#define QINV_GROUP_H

#include <bitset>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "qinv/f2_matrix.h"
#include "qinv/gates.h"

namespace qinv {

using BigInt = boost::multiprecision::cpp_int;

class BudgetExceededError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct ClosureOptions {
    size_t budget = 1'000'000;
};

/// Result of a breadth-first closure. elements[0] is the identity; every element is reached by the
/// shortest generator word, recoverable through word().
template <typename Element>
struct GroupClosure {
    std::vector<Element> elements;
    std::vector<int64_t> parent;
    std::vector<int32_t> via;

    size_t size() const {
        return elements.size();
    }

    /// Generator indices [w0, w1, ...] with elements[i] = ((id * g_w0) * g_w1) * ...
    std::vector<int32_t> word(size_t i) const {
        std::vector<int32_t> out;
        for (int64_t k = static_cast<int64_t>(i); parent[k] >= 0; k = parent[k]) {
            out.push_back(via[k]);
        }
        return {out.rbegin(), out.rend()};
    }
};

/// Hash for canonical keys: integral values or contiguous ranges of them.
struct CanonicalKeyHash {
    template <typename K>
    size_t operator()(const K &key) const {
        if constexpr (std::is_integral_v<K>) {
            return std::hash<K>{}(key);
        } else {
            uint64_t h = 0xcbf29ce484222325ull;
            for (const auto &v : key) {
                h ^= static_cast<uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            }
            return static_cast<size_t>(h);
        }
    }
};

/// Breadth-first closure of `generators` under right multiplication.
/// `canonical(e)` must return an exact key (equal keys iff equal elements).
/// The identity is always part of the closure. Throws BudgetExceededError past opts.budget elements.
template <typename Element, typename Multiply, typename Canonical>
GroupClosure<Element> enumerate_group(const std::vector<Element> &generators, const Element &identity,
                                      Multiply mul, Canonical canonical, const ClosureOptions &opts = {}) {
    if (generators.empty()) {
        throw std::invalid_argument("enumerate_group: generator set is empty");
    }
    using Key = std::decay_t<std::invoke_result_t<Canonical, const Element &>>;
    GroupClosure<Element> out;
    std::unordered_map<Key, size_t, CanonicalKeyHash> seen;
    out.elements.push_back(identity);
    out.parent.push_back(-1);
    out.via.push_back(-1);
    seen.emplace(canonical(identity), 0);
    for (size_t head = 0; head < out.elements.size(); head++) {
        for (size_t g = 0; g < generators.size(); g++) {
            Element next = mul(out.elements[head], generators[g]);
            auto [it, inserted] = seen.emplace(canonical(next), out.elements.size());
            if (!inserted) {
                continue;
            }
            if (out.elements.size() >= opts.budget) {
                throw BudgetExceededError("group closure exceeded budget of " + std::to_string(opts.budget) +
                                          " elements");
            }
            out.elements.push_back(std::move(next));
            out.parent.push_back(static_cast<int64_t>(head));
            out.via.push_back(static_cast<int32_t>(g));
        }
    }
    return out;
}

/// Exact encoding of a monomial unitary with +-1 entries: U|b> = sign[b] |image[b]>.
/// Products of CP, CNOT and SWAP gates are always of this form.
class SignedPermutation {
   public:
    static SignedPermutation identity(int n);
    /// Throws std::invalid_argument for SWAP_ALPHA (not monomial in general).
    static SignedPermutation from_gate(const GateOp &gate, int n);

    int num_qubits() const {
        return n_;
    }
    const std::vector<uint32_t> &image() const {
        return image_;
    }
    const std::vector<int8_t> &sign() const {
        return sign_;
    }

    /// Matrix product: (a * b) applies b first.
    SignedPermutation operator*(const SignedPermutation &rhs) const;
    UnitaryMatrix to_dense() const;
    std::vector<uint64_t> key() const;

    bool operator==(const SignedPermutation &other) const = default;

   private:
    int n_ = 0;
    std::vector<uint32_t> image_;
    std::vector<int8_t> sign_;
};

/// The F_2-linear map of a sign-free basis permutation, or nullopt if it is not linear or carries signs.
std::optional<F2Matrix> theta_of(const SignedPermutation &u);

/// Element of the CP group as the set of pairs whose CP gates are multiplied together.
class CPGroupElement {
   public:
    static constexpr int kMaxQubits = 16;
    static constexpr int kMaxPairs = kMaxQubits * (kMaxQubits - 1) / 2;

    explicit CPGroupElement(int n);
    static CPGroupElement generator(int p, int q, int n);

    int num_qubits() const {
        return n_;
    }
    const std::bitset<kMaxPairs> &pairs() const {
        return pairs_;
    }
    /// Symmetric difference of pair sets.
    CPGroupElement operator*(const CPGroupElement &rhs) const;
    /// (-1)^{sum over pairs (p,q) of b_p b_q}.
    int sign(uint64_t basis_index) const;
    std::vector<uint64_t> key() const;

    bool operator==(const CPGroupElement &other) const = default;

   private:
    int n_;
    std::bitset<kMaxPairs> pairs_;
};

int pair_index(int p, int q, int n);

std::vector<SignedPermutation> signed_permutation_generators(GateFamily family, int n);
std::vector<F2Matrix> cnot_theta_generators(int n);
std::vector<CPGroupElement> cp_element_generators(int n);

GroupClosure<SignedPermutation> enumerate_family(GateFamily family, int n, const ClosureOptions &opts = {});
GroupClosure<F2Matrix> enumerate_f2(const std::vector<F2Matrix> &generators, const ClosureOptions &opts = {});
GroupClosure<CPGroupElement> enumerate_cp_elements(int n, const ClosureOptions &opts = {});

/// 2^{n(n-1)/2}.
BigInt cp_group_order(int n);
/// prod_{i=0}^{n-1} (2^n - 2^i) = |GL(n, 2)|.
BigInt cnot_group_order(int n);
/// n!.
BigInt swap_group_order(int n);
/// |GL(n,2)| / 2^{n^2}.
double cnot_order_ratio(int n);

}  // namespace qinv

#endif
