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

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qstab/channel.hpp"
#include "qstab/clifford.hpp"
#include "qstab/pauli.hpp"
#include "qstab/stabilizer.hpp"

/// Dense state-vector ground truth. Basis index of |b_1 ... b_n> is sum_i b_i D^{n-1-i}.
namespace qstab::oracle {

inline constexpr double kRankTol = 1e-9;
inline constexpr double kEqualTol = 1e-10;
inline constexpr uint64_t kMaxDim = 4096;

using Complex = std::complex<double>;
using DenseState = Eigen::VectorXcd;
using DenseOperator = Eigen::MatrixXcd;

/// D^n; throws TooLarge above kMaxDim.
uint64_t hilbert_dim(int64_t D, size_t n);

Complex lambda_pow(int64_t D, int64_t k);

DenseOperator pauli_matrix(const PauliProduct &p);
DenseState apply_pauli(const PauliProduct &p, const DenseState &psi);

DenseState apply_gate(const Gate &g, int64_t D, size_t n, const DenseState &psi);
DenseState apply_gates(std::span<const Gate> gates, int64_t D, size_t n, DenseState psi);
/// Product of the gates, the first gate acting first.
DenseOperator clifford_matrix(std::span<const Gate> gates, int64_t D, size_t n);

/// The unique state with s|psi> = |psi> for all s in S, from a column of
/// (1/D^n) sum_{s in S} s. Throws NotRankOne when S does not fix exactly one state.
DenseState state_from_group(const StabilizerGroup &S);

/// All |S| elements, enumerated over generator exponent tuples.
std::vector<PauliProduct> group_elements(const StabilizerGroup &S);

DenseOperator reduced_density(const DenseState &psi, int64_t D, size_t n, std::span<const size_t> part);
/// Number of singular values above kRankTol across part | rest.
int schmidt_rank(const DenseState &psi, int64_t D, size_t n, std::span<const size_t> part);

/// |<a|b>|^2 / (|a|^2 |b|^2).
double fidelity(const DenseState &a, const DenseState &b);

/// Applies |a> -> |a mod q_1> (x) ... (x) |a mod q_m> to every qudit and regroups the result as
/// register q_1 (all n qudits) (x) ... (x) register q_m.
DenseState crt_map_state(const DenseState &psi, int64_t D, size_t n, std::span<const int64_t> moduli);

DenseState kron(const DenseState &a, const DenseState &b);

/// Trace over every qudit not in `keep`; kept qudits stay in increasing order.
DenseOperator partial_trace(const DenseOperator &op, int64_t D, size_t n, std::span<const size_t> keep);

/// V = sum_i f^i |G> <i|, a D^n x D^k matrix.
DenseOperator code_isometry(const CodeSpec &code);

/// Tr_{outputs not in B} { V rho V^dag }.
DenseOperator apply_channel(const CodeSpec &code, std::span<const size_t> B, const DenseOperator &rho);

/// E_B(p) != 0, judged on the largest entry against kRankTol.
bool pauli_transmitted(const CodeSpec &code, std::span<const size_t> B, const PauliProduct &p);

/// Every phase-free Pauli product on the inputs that E_B transmits.
std::vector<PauliProduct> transmitted_paulis(const CodeSpec &code, std::span<const size_t> B);

}  // namespace qstab::oracle
