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

#include "qinv/isomorphism.h"

#include <deque>
#include <random>
#include <unordered_set>

namespace qinv {

namespace {

std::string describe_word(const std::vector<GateOp> &gens, const std::vector<int32_t> &word) {
    std::string out;
    for (auto w : word) {
        if (!out.empty()) {
            out += " * ";
        }
        out += to_string(gens[w]);
    }
    return out.empty() ? "identity" : out;
}

class WordChecker {
   public:
    WordChecker(int n, IsomorphismReport &report)
        : n_(n),
          report_(report),
          gates_(family_generators(GateFamily::CNOT, n)),
          unitary_(signed_permutation_generators(GateFamily::CNOT, n)),
          f2_(cnot_theta_generators(n)) {
    }

    size_t generator_count() const {
        return gates_.size();
    }

    /// Checks theta(U_w0 U_w1 ...) == theta(U_w0) theta(U_w1) ...
    bool check(const std::vector<int32_t> &word) {
        SignedPermutation u = SignedPermutation::identity(n_);
        F2Matrix m = F2Matrix::identity(n_);
        for (auto w : word) {
            u = u * unitary_[w];
            m = m * f2_[w];
        }
        auto image = theta_of(u);
        if (!image || !(*image == m)) {
            report_.failures.push_back("homomorphism fails on word " + describe_word(gates_, word));
            return false;
        }
        return true;
    }

   private:
    int n_;
    IsomorphismReport &report_;
    std::vector<GateOp> gates_;
    std::vector<SignedPermutation> unitary_;
    std::vector<F2Matrix> f2_;
};

}  // namespace

IsomorphismReport check_cnot_isomorphism(int n, const IsomorphismOptions &opts) {
    if (n < 2 || n > 4) {
        throw std::invalid_argument("check_cnot_isomorphism: n must be in [2, 4]");
    }
    IsomorphismReport report;
    report.n = n;
    report.expected_order = cnot_group_order(n);

    // (a) homomorphism on all short words, then on random longer words.
    WordChecker checker(n, report);
    const auto gen_count = static_cast<int32_t>(checker.generator_count());
    std::vector<int32_t> word;
    for (int len = 1; len <= opts.exhaustive_word_length; len++) {
        word.assign(len, 0);
        while (true) {
            checker.check(word);
            report.exhaustive_words_checked++;
            int k = len - 1;
            while (k >= 0 && ++word[k] == gen_count) {
                word[k] = 0;
                k--;
            }
            if (k < 0) {
                break;
            }
        }
    }
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> length_dist(1, opts.max_random_word_length);
    std::uniform_int_distribution<int32_t> gen_dist(0, gen_count - 1);
    for (int w = 0; w < opts.random_words; w++) {
        word.resize(length_dist(rng));
        for (auto &x : word) {
            x = gen_dist(rng);
        }
        checker.check(word);
        report.random_words_checked++;
    }

    // (b) bijectivity through closure sizes.
    auto unitary = enumerate_family(GateFamily::CNOT, n, opts.closure);
    auto f2 = enumerate_f2(cnot_theta_generators(n), opts.closure);
    report.unitary_closure_size = unitary.size();
    report.f2_closure_size = f2.size();
    if (report.unitary_closure_size != report.f2_closure_size) {
        report.failures.push_back("closure sizes differ: unitary " + std::to_string(unitary.size()) + ", F2 " +
                                  std::to_string(f2.size()));
    }
    if (BigInt(report.f2_closure_size) != report.expected_order) {
        report.failures.push_back("F2 closure size " + std::to_string(f2.size()) + " != |GL(n,2)| " +
                                  report.expected_order.str());
    }
    for (size_t i = 0; i < unitary.size(); i++) {
        auto image = theta_of(unitary.elements[i]);
        if (!image) {
            report.failures.push_back("unitary closure element " + std::to_string(i) + " is not F2-linear");
            break;
        }
    }

    // (c) M1 and M2 lie in the image of theta and generate GL(n, 2).
    report.m1_in_image = m1_matrix(n) == theta_generator(0, n - 1, n);
    if (!report.m1_in_image) {
        report.failures.push_back("M1 is not theta(CNOT_{0," + std::to_string(n - 1) + "})");
    }

    report.swap_identity_holds = true;
    std::vector<F2Matrix> transpositions;
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) {
            auto cij = SignedPermutation::from_gate(GateOp::cnot(i, j), n);
            auto cji = SignedPermutation::from_gate(GateOp::cnot(j, i), n);
            auto swap = SignedPermutation::from_gate(GateOp::swap(i, j), n);
            F2Matrix t = theta_generator(i, j, n) * theta_generator(j, i, n) * theta_generator(i, j, n);
            std::vector<int> perm(n);
            for (int k = 0; k < n; k++) {
                perm[k] = k == i ? j : (k == j ? i : k);
            }
            if (!(cij * cji * cij == swap) || !(t == permutation_matrix(perm))) {
                report.swap_identity_holds = false;
                report.failures.push_back("CNOT_ij CNOT_ji CNOT_ij != SWAP_ij for (" + std::to_string(i) + "," +
                                          std::to_string(j) + ")");
            }
            if (j == i + 1) {
                transpositions.push_back(t);
            }
        }
    }
    // (M2 x)_r = x_{r+1}: applying (0 1), then (1 2), ..., then (n-2 n-1) sends e_k to e_{k-1}.
    F2Matrix cycle = F2Matrix::identity(n);
    for (auto it = transpositions.rbegin(); it != transpositions.rend(); ++it) {
        cycle = cycle * *it;
    }
    bool in_closure = false;
    for (const auto &e : f2.elements) {
        if (e == m2_matrix(n)) {
            in_closure = true;
            break;
        }
    }
    report.m2_in_image = cycle == m2_matrix(n) && in_closure;
    if (!report.m2_in_image) {
        report.failures.push_back("M2 not reached from CNOT-built transpositions");
    }
    auto generated = enumerate_f2({m1_matrix(n), m2_matrix(n)}, opts.closure);
    report.m1_m2_closure_size = generated.size();
    if (BigInt(generated.size()) != report.expected_order) {
        report.failures.push_back("closure of {M1, M2} has size " + std::to_string(generated.size()));
    }

    report.notes.push_back(
        "closures include the identity; the 2-qubit listing of combinations omits it, the order formula counts it");
    report.notes.push_back(
        "M1 acts on column vectors as CNOT with control 0 and target n-1; in row-vector convention this is "
        "CNOT with control n-1 and target 0");
    return report;
}

TransitivityReport check_double_transitivity(int n) {
    if (n < 2 || n > 8) {
        throw std::invalid_argument("check_double_transitivity: n must be in [2, 8]");
    }
    TransitivityReport report;
    report.n = n;
    report.start_first = 2;
    report.start_second = 1;
    const uint64_t size = uint64_t{1} << n;
    report.expected_size = (size - 1) * (size - 2);

    auto gens = cnot_theta_generators(n);
    std::unordered_set<uint64_t> seen;
    std::deque<std::pair<uint64_t, uint64_t>> frontier;
    seen.insert(report.start_first * size + report.start_second);
    frontier.emplace_back(report.start_first, report.start_second);
    while (!frontier.empty()) {
        auto [x, y] = frontier.front();
        frontier.pop_front();
        for (const auto &g : gens) {
            uint64_t gx = g.apply(x);
            uint64_t gy = g.apply(y);
            if (seen.insert(gx * size + gy).second) {
                frontier.emplace_back(gx, gy);
            }
        }
    }
    report.orbit_size = seen.size();
    report.passed = report.orbit_size == report.expected_size;
    return report;
}

}  // namespace qinv
