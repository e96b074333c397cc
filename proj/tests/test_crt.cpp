// Copyright 2026 The qstab Authors
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

#include <set>

#include "qstab/crt.hpp"
#include "qstab/error.hpp"
#include "qstab/oracle.hpp"
#include "qstab/random.hpp"

using namespace qstab;
using oracle::DenseOperator;
using oracle::DenseState;

namespace {

DenseOperator kron(const DenseOperator &a, const DenseOperator &b) {
    DenseOperator out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// Matrix of U^{(x) n} followed by regrouping into the d1 and d2 registers.
DenseOperator crt_unitary(int64_t D, size_t n, const CrtSplit &split) {
    auto dim = static_cast<Eigen::Index>(oracle::hilbert_dim(D, n));
    DenseOperator U(dim, dim);
    std::vector<int64_t> moduli{split.d1, split.d2};
    for (Eigen::Index c = 0; c < dim; ++c) {
        DenseState e = DenseState::Zero(dim);
        e(c) = 1.0;
        U.col(c) = oracle::crt_map_state(e, D, n, moduli);
    }
    return U;
}

}  // namespace

TEST(CrtMap, BasisBijection) {
    for (int64_t D : {6, 10, 15, 30}) {
        auto m = crt_moduli(D);
        std::set<std::vector<int64_t>> seen;
        for (int64_t a = 0; a < D; ++a) {
            std::vector<int64_t> key;
            for (int64_t q : m) {
                key.push_back(a % q);
            }
            seen.insert(key);
        }
        EXPECT_EQ(seen.size(), static_cast<size_t>(D));
    }
    auto U = crt_unitary(6, 2, CrtSplit::make(2, 3));
    EXPECT_LT((U * U.adjoint() - DenseOperator::Identity(36, 36)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(SplitPauli, Examples) {
    auto split = CrtSplit::make(2, 3);
    auto [x1, x2] = split_pauli(PauliProduct::single_x(6, 1, 0), split);
    EXPECT_EQ(x1, PauliProduct::single_x(2, 1, 0));
    EXPECT_EQ(x2, PauliProduct::single_x(3, 1, 0));
    auto [z1, z2] = split_pauli(PauliProduct::single_z(6, 1, 0), split);
    EXPECT_EQ(z1, PauliProduct::single_z(2, 1, 0, 1));
    EXPECT_EQ(z2, PauliProduct::single_z(3, 1, 0, 2));
    auto [i1, i2] = split_pauli(PauliProduct(6, 2), split);
    EXPECT_TRUE(i1.is_identity());
    EXPECT_TRUE(i2.is_identity());
    EXPECT_THROW(CrtSplit::make(2, 4), Error);
}

TEST(SplitPauli, MatchesConjugatedMatrix) {
    Rng rng(30);
    for (auto [d1, d2] : {std::pair<int64_t, int64_t>{2, 3}, {2, 5}, {3, 5}, {4, 3}}) {
        auto split = CrtSplit::make(d1, d2);
        const int64_t D = d1 * d2;
        size_t n = D <= 12 ? 2 : 1;
        auto U = crt_unitary(D, n, split);
        for (int trial = 0; trial < 20; ++trial) {
            auto p = random_pauli(rng, D, n);
            auto [h1, h2] = split_pauli(p, split);
            DenseOperator lhs = U * oracle::pauli_matrix(p) * U.adjoint();
            auto rhs = kron(oracle::pauli_matrix(h1), oracle::pauli_matrix(h2));
            EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), oracle::kEqualTol) << p.str();
            EXPECT_EQ(combine_pauli(h1, h2, split), p);
            EXPECT_GE(h1.phase(), 0);
            EXPECT_LT(h1.phase(), d1);
        }
    }
}

TEST(SplitPauli, PreservesCommutation) {
    Rng rng(31);
    for (int64_t D : {6, 10, 15, 30}) {
        auto m = crt_moduli(D);
        auto split = CrtSplit::make(m[0], D / m[0]);
        for (int trial = 0; trial < 50; ++trial) {
            auto p = random_pauli(rng, D, 3);
            auto q = random_pauli(rng, D, 3);
            auto [p1, p2] = split_pauli(p, split);
            auto [q1, q2] = split_pauli(q, split);
            int64_t a = commutation_phase(p, q);
            // omega_D^a = omega_{d1}^{a1} omega_{d2}^{a2}
            EXPECT_EQ(commutation_phase(p1, q1), mul_mod(a, split.r1, split.d1));
            EXPECT_EQ(commutation_phase(p2, q2), mul_mod(a, split.r2, split.d2));
        }
    }
}

TEST(SplitGenerator, OrdersFactor) {
    auto split = CrtSplit::make(2, 3);
    auto [h1, h2] = split_generator(PauliProduct::single_x(6, 1, 0), split);
    EXPECT_EQ(order(h1), 2);
    EXPECT_EQ(order(h2), 3);
    auto data = GeneratorSplitData::make(6, split);
    EXPECT_EQ(data.delta1, 2);
    EXPECT_EQ(data.delta2, 3);
    EXPECT_EQ(data.mu1, 1);
    EXPECT_EQ(data.mu2, 2);
    auto [k1, k2] = split_generator(PauliProduct::single_x(6, 1, 0, 3), split);
    EXPECT_EQ(order(k1), 2);
    EXPECT_TRUE(k2.is_identity());
}

TEST(SplitGenerator, ComponentsRebuildTheGenerator) {
    Rng rng(32);
    for (int64_t D : {6, 10, 12, 15, 30}) {
        auto m = crt_moduli(D);
        auto split = CrtSplit::make(m[0], D / m[0]);
        for (int trial = 0; trial < 60; ++trial) {
            auto g = random_pauli(rng, D, 3);
            if (!power(g, order(g)).is_identity()) {
                EXPECT_THROW(split_generator(g, split), Error);
                continue;
            }
            auto [h1, h2] = split_generator(g, split);
            EXPECT_EQ(order(h1) * order(h2), order(g));
            EXPECT_TRUE(power(h1, order(h1)).is_identity());
            EXPECT_TRUE(power(h2, order(h2)).is_identity());
            PauliProduct id1(split.d1, 3), id2(split.d2, 3);
            EXPECT_EQ(combine_pauli(h1, id2, split) * combine_pauli(id1, h2, split), g);
            // <g> = <h1> x <h2>: the split of every power is the pair of powers.
            for (int64_t k = 0; k < order(g); ++k) {
                auto [a, b] = split_pauli(power(g, k), split);
                auto e1 = power(h1, k);
                auto e2 = power(h2, k);
                EXPECT_EQ(combine_pauli(a, b, split), combine_pauli(e1, e2, split));
            }
        }
    }
}

TEST(DecomposeGroup, GhzAndPrimeD) {
    auto parts = decompose_group(ghz_group(6));
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0], ghz_group(2));
    EXPECT_EQ(parts[1], ghz_group(3));
    auto epr = decompose_group(epr_group(15));
    ASSERT_EQ(epr.size(), 2u);
    EXPECT_EQ(epr[0], epr_group(3));
    EXPECT_EQ(epr[1], epr_group(5));
    Rng rng(33);
    auto S = random_state(rng, 7, 3, 5);
    auto one = decompose_group(S);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].gens(), S.gens());
}

TEST(DecomposeGroup, ThreeFactors) {
    Rng rng(34);
    for (int trial = 0; trial < 10; ++trial) {
        auto S = random_state(rng, 30, 3, 6);
        auto parts = decompose_group(S);
        ASSERT_EQ(parts.size(), 3u);
        EXPECT_EQ(parts[0].dim(), 2);
        EXPECT_EQ(parts[1].dim(), 3);
        EXPECT_EQ(parts[2].dim(), 5);
        for (const auto &P : parts) {
            EXPECT_TRUE(P.is_state());
        }
    }
    // A proper subgroup keeps its size.
    StabilizerGroup A(12, 2, {PauliProduct(12, 0, {2, 0}, {0, 6})});
    auto parts = decompose_group(A);
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0].size_exponents()[0] + 0, 1);
    EXPECT_EQ(parts[1].size_exponents()[0], 1);
}

TEST(DecomposeState, NotAState) {
    StabilizerGroup A(6, 2, {PauliProduct(6, 0, {1, 1}, {0, 0})});
    try {
        decompose_state(A);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotAState);
    }
}

TEST(DecomposeState, OracleFidelity) {
    Rng rng(35);
    for (int64_t D : {6, 10}) {
        size_t max_n = D == 6 ? 4 : 3;
        for (int trial = 0; trial < 10; ++trial) {
            size_t n = 1 + static_cast<size_t>(uniform(rng, static_cast<int64_t>(max_n)));
            auto S = random_state(rng, D, n, 2 * n);
            auto parts = decompose_state(S);
            ASSERT_EQ(parts.size(), 2u);
            auto mapped = oracle::crt_map_state(oracle::state_from_group(S), D, n, crt_moduli(D));
            auto prod = oracle::kron(oracle::state_from_group(parts[0]), oracle::state_from_group(parts[1]));
            EXPECT_GE(oracle::fidelity(mapped, prod), 1.0 - 1e-9);
        }
    }
}

TEST(DecomposeState, PlusStates) {
    auto parts = decompose_state(from_graph(GraphAdjacency(6, 3)));
    EXPECT_EQ(parts[0], from_graph(GraphAdjacency(2, 3)));
    EXPECT_EQ(parts[1], from_graph(GraphAdjacency(3, 3)));
}
