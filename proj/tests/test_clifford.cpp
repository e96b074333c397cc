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

#include "qstab/clifford.hpp"
#include "qstab/error.hpp"
#include "qstab/oracle.hpp"
#include "qstab/random.hpp"

using namespace qstab;
using oracle::DenseOperator;

namespace {

bool close(const DenseOperator &a, const DenseOperator &b) {
    return (a - b).cwiseAbs().maxCoeff() < oracle::kEqualTol;
}

PauliProduct px(int64_t D, size_t n, size_t q, int64_t k = 1) {
    return PauliProduct::single_x(D, n, q, k);
}
PauliProduct pz(int64_t D, size_t n, size_t q, int64_t k = 1) {
    return PauliProduct::single_z(D, n, q, k);
}

CliffordTableau random_tableau(Rng &rng, int64_t D, size_t n, size_t count) {
    std::vector<size_t> all(n);
    for (size_t i = 0; i < n; ++i) {
        all[i] = i;
    }
    auto t = CliffordTableau::identity(D, n);
    for (size_t i = 0; i < count; ++i) {
        t.apply(random_gate(rng, D, all));
    }
    return t;
}

}  // namespace

TEST(Clifford, FourierImages) {
    for (int64_t D : {2, 3, 5, 6}) {
        auto t = CliffordTableau::identity(D, 1).fourier(0);
        EXPECT_EQ(t.conjugate(pz(D, 1, 0)), px(D, 1, 0));
        EXPECT_EQ(t.conjugate(px(D, 1, 0)), pz(D, 1, 0, -1));
    }
}

TEST(Clifford, PhaseGateImages) {
    for (int64_t D : {3, 5, 7}) {
        auto t = CliffordTableau::identity(D, 1).phase(0);
        EXPECT_EQ(t.conjugate(px(D, 1, 0)), PauliProduct(D, 0, {1}, {1}));
        EXPECT_EQ(t.conjugate(pz(D, 1, 0)), pz(D, 1, 0));
    }
    for (int64_t D : {2, 4, 6}) {
        auto t = CliffordTableau::identity(D, 1).phase(0);
        EXPECT_EQ(t.conjugate(px(D, 1, 0)), PauliProduct(D, 1, {1}, {1}));
    }
}

TEST(Clifford, MultiplierImages) {
    auto t = CliffordTableau::identity(5, 1).smult(0, 2);
    EXPECT_EQ(t.conjugate(pz(5, 1, 0)), pz(5, 1, 0, 2));
    EXPECT_EQ(t.conjugate(px(5, 1, 0)), px(5, 1, 0, 3));
    try {
        CliffordTableau::identity(6, 1).smult(0, 3);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotInvertible);
    }
}

TEST(Clifford, TwoQuditImages) {
    const int64_t D = 5;
    auto cp = CliffordTableau::identity(D, 2).cphase(0, 1, 2);
    EXPECT_EQ(cp.conjugate(px(D, 2, 0)), PauliProduct(D, 0, {1, 0}, {0, -2}));
    EXPECT_EQ(cp.conjugate(px(D, 2, 1)), PauliProduct(D, 0, {0, 1}, {-2, 0}));
    EXPECT_EQ(cp.conjugate(pz(D, 2, 0)), pz(D, 2, 0));
    auto cx = CliffordTableau::identity(D, 2).cnot(0, 1);
    EXPECT_EQ(cx.conjugate(px(D, 2, 0)), PauliProduct(D, 0, {1, -1}, {0, 0}));
    EXPECT_EQ(cx.conjugate(px(D, 2, 1)), px(D, 2, 1));
    EXPECT_EQ(cx.conjugate(pz(D, 2, 0)), pz(D, 2, 0));
    EXPECT_EQ(cx.conjugate(pz(D, 2, 1)), PauliProduct(D, 0, {0, 0}, {1, 1}));
}

TEST(Clifford, CnotFromFourierAndControlledPhase) {
    for (int64_t D : {2, 3, 4, 5, 6}) {
        auto cnot = CliffordTableau::identity(D, 2).cnot(0, 1);
        // F_2 CP_12 F_2^dagger, rightmost acting first.
        auto built = CliffordTableau::identity(D, 2).fourier(1).fourier(1).fourier(1).cphase(0, 1, 1).fourier(1);
        EXPECT_EQ(cnot, built);
        EXPECT_TRUE(close(oracle::clifford_matrix(cnot.gates(), D, 2), oracle::clifford_matrix(built.gates(), D, 2)));
    }
}

TEST(Clifford, FourierHasOrderFour) {
    for (int64_t D : {2, 3, 4, 5, 6, 7}) {
        auto t = CliffordTableau::identity(D, 1).fourier(0).fourier(0).fourier(0).fourier(0);
        EXPECT_EQ(t, CliffordTableau::identity(D, 1));
        auto F = oracle::clifford_matrix(std::vector<Gate>{Gate::fourier(0)}, D, 1);
        EXPECT_TRUE(close(F * F * F * F, DenseOperator::Identity(D, D)));
    }
    auto H = oracle::clifford_matrix(std::vector<Gate>{Gate::fourier(0)}, 2, 1);
    DenseOperator hadamard(2, 2);
    hadamard << 1, 1, 1, -1;
    EXPECT_TRUE(close(H, hadamard / std::sqrt(2.0)));
}

TEST(Clifford, ElementaryGatesMatchMatrices) {
    for (int64_t D : {2, 3, 4, 5}) {
        for (size_t n : {size_t{1}, size_t{2}, size_t{3}}) {
            if (oracle::hilbert_dim(D, n) > 125) {
                continue;
            }
            std::vector<Gate> gates;
            for (size_t q = 0; q < n; ++q) {
                gates.push_back(Gate::fourier(q));
                gates.push_back(Gate::phase(q));
                gates.push_back(Gate::pauli_x(q, 1));
                gates.push_back(Gate::pauli_z(q, D - 1));
                for (int64_t a = 1; a < D; ++a) {
                    if (gcd(a, D) == 1) {
                        gates.push_back(Gate::smult(q, a));
                    }
                }
                for (size_t r = 0; r < n; ++r) {
                    if (r != q) {
                        gates.push_back(Gate::cnot(q, r));
                        gates.push_back(Gate::cphase(q, r, 1));
                        gates.push_back(Gate::cphase(q, r, D - 1));
                    }
                }
            }
            Rng rng(static_cast<uint64_t>(D * 10 + static_cast<int64_t>(n)));
            for (const auto &g : gates) {
                auto U = oracle::clifford_matrix(std::vector<Gate>{g}, D, n);
                EXPECT_TRUE(close(U * U.adjoint(), DenseOperator::Identity(U.rows(), U.cols())));
                auto t = CliffordTableau::identity(D, n).apply(g);
                for (int trial = 0; trial < 6; ++trial) {
                    auto p = random_pauli(rng, D, n);
                    EXPECT_TRUE(close(U * oracle::pauli_matrix(p) * U.adjoint(), oracle::pauli_matrix(t.conjugate(p))))
                        << "D=" << D << " gate " << g.str() << " on " << p.str();
                }
            }
        }
    }
}

TEST(Clifford, RandomTableauMatchesMatrixConjugation) {
    Rng rng(11);
    for (int64_t D : {2, 3, 4, 5, 6}) {
        size_t n = D <= 3 ? 3 : 2;
        for (int trial = 0; trial < 8; ++trial) {
            auto t = random_tableau(rng, D, n, 12);
            auto U = oracle::clifford_matrix(t.gates(), D, n);
            for (int k = 0; k < 5; ++k) {
                auto p = random_pauli(rng, D, n);
                EXPECT_TRUE(close(U * oracle::pauli_matrix(p) * U.adjoint(), oracle::pauli_matrix(t.conjugate(p))));
            }
        }
    }
}

TEST(Clifford, SymplecticAndOrderPreserved) {
    Rng rng(12);
    for (int64_t D : {2, 3, 5, 6, 10}) {
        for (int trial = 0; trial < 20; ++trial) {
            auto t = random_tableau(rng, D, 4, 20);
            for (int k = 0; k < 10; ++k) {
                auto p = random_pauli(rng, D, 4);
                auto q = random_pauli(rng, D, 4);
                EXPECT_EQ(commutation_phase(t.conjugate(p), t.conjugate(q)), commutation_phase(p, q));
                EXPECT_EQ(order(t.conjugate(p)), order(p));
                EXPECT_EQ(t.conjugate(p * q), t.conjugate(p) * t.conjugate(q));
            }
        }
    }
}

TEST(Clifford, ComposeAndInverse) {
    Rng rng(13);
    for (int64_t D : {2, 3, 4, 5, 6}) {
        for (int trial = 0; trial < 10; ++trial) {
            auto t1 = random_tableau(rng, D, 3, 10);
            auto t2 = random_tableau(rng, D, 3, 10);
            auto t3 = random_tableau(rng, D, 3, 10);
            auto c = compose(t1, t2);
            auto p = random_pauli(rng, D, 3);
            EXPECT_EQ(c.conjugate(p), t1.conjugate(t2.conjugate(p)));
            EXPECT_EQ(compose(t1, inverse(t1)), CliffordTableau::identity(D, 3));
            EXPECT_EQ(compose(inverse(t1), t1), CliffordTableau::identity(D, 3));
            EXPECT_EQ(compose(compose(t1, t2), t3), compose(t1, compose(t2, t3)));
        }
    }
}

TEST(Clifford, InverseGatesAreExactMatrixInverses) {
    Rng rng(14);
    for (int64_t D : {2, 3, 4, 5}) {
        auto t = random_tableau(rng, D, 2, 15);
        auto U = oracle::clifford_matrix(t.gates(), D, 2);
        auto V = oracle::clifford_matrix(inverse_gates(t.gates(), D), D, 2);
        EXPECT_TRUE(close(V * U, DenseOperator::Identity(U.rows(), U.cols())));
    }
}

TEST(Clifford, GateLogReplayIsExact) {
    Rng rng(15);
    for (int64_t D : {3, 6}) {
        auto t = random_tableau(rng, D, 4, 30);
        auto text = format_gates(t.gates());
        auto back = parse_gates(text);
        EXPECT_EQ(back, t.gates());
        auto again = CliffordTableau::replay(D, 4, back);
        EXPECT_EQ(again, t);
        EXPECT_EQ(again.gates(), t.gates());
    }
}

TEST(Clifford, GateText) {
    EXPECT_EQ(Gate::cphase(0, 2, 4).str(), "CP 1 3 4");
    EXPECT_EQ(Gate::cnot(1, 0).str(), "CNOT 2 1");
    EXPECT_EQ(Gate::smult(3, 2).str(), "S 4 2");
    EXPECT_EQ(Gate::parse("W 2"), Gate::phase(1));
    EXPECT_EQ(Gate::parse("X 1 3"), Gate::pauli_x(0, 3));
    EXPECT_THROW(Gate::parse("F 0"), Error);
    EXPECT_THROW(Gate::parse("CP 1 2"), Error);
    EXPECT_THROW(Gate::parse("H 1"), Error);
    EXPECT_EQ(parse_gates("# comment\n\nF 1\n").size(), 1u);
}

TEST(Clifford, IndexErrors) {
    auto t = CliffordTableau::identity(3, 2);
    try {
        t.fourier(2);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
    }
    EXPECT_THROW(t.cnot(1, 1), Error);
    EXPECT_TRUE(t.gates().empty());
}

TEST(Pivot, AlreadyX) {
    std::vector<size_t> part{0, 1};
    auto t = pivot_to_x1(px(3, 2, 0), part, 0);
    EXPECT_TRUE(t.gates().empty());
}

TEST(Pivot, SingleZNeedsOneFourier) {
    std::vector<size_t> part{0};
    auto t = pivot_to_x1(pz(3, 1, 0), part, 0);
    ASSERT_EQ(t.gates().size(), 1u);
    EXPECT_EQ(t.gates()[0], Gate::fourier(0));
    EXPECT_EQ(t.conjugate(pz(3, 1, 0)), px(3, 1, 0));
}

TEST(Pivot, RandomProductsReachExactX) {
    Rng rng(16);
    for (int64_t D : {2, 3, 5, 7}) {
        for (int trial = 0; trial < 40; ++trial) {
            const size_t n = 4;
            std::vector<size_t> part{0, 2, 3};
            auto p = random_pauli(rng, D, n, false);
            if (is_identity_on(p, part)) {
                continue;
            }
            p.set_x(1, 0);
            p.set_z(1, 0);
            if (!power(p, D).is_identity()) {
                continue;
            }
            size_t target = part[static_cast<size_t>(uniform(rng, 3))];
            for (bool want_z : {false, true}) {
                auto t = pivot_to_x1(p, part, target, want_z);
                for (const auto &g : t.gates()) {
                    EXPECT_NE(g.q, 1u);
                    if (g.two_qudit()) {
                        EXPECT_NE(g.r, 1u);
                    }
                }
                auto want = want_z ? pz(D, n, target) : px(D, n, target);
                EXPECT_EQ(t.conjugate(p), want) << p.str();
                if (oracle::hilbert_dim(D, n) <= 81) {
                    auto U = oracle::clifford_matrix(t.gates(), D, n);
                    EXPECT_TRUE(close(U * oracle::pauli_matrix(p) * U.adjoint(), oracle::pauli_matrix(want)));
                }
            }
        }
    }
}

TEST(Pivot, Errors) {
    std::vector<size_t> part{1};
    try {
        pivot_to_x1(px(3, 2, 0), part, 1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::IdentityOnPart);
    }
    try {
        pivot_to_x1(px(6, 2, 1), part, 1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NonPrimeD);
    }
}
