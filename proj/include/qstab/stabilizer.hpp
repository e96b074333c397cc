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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qstab/clifford.hpp"
#include "qstab/modring.hpp"
#include "qstab/pauli.hpp"

namespace qstab {

/// Symmetric weighted adjacency over Z_D with zero diagonal.
class GraphAdjacency {
   public:
    GraphAdjacency() = default;
    GraphAdjacency(int64_t D, size_t n);

    int64_t dim() const {
        return D_;
    }
    size_t num_vertices() const {
        return n_;
    }
    int64_t weight(size_t i, size_t j) const {
        return w_[i * n_ + j];
    }
    /// Sets both (i, j) and (j, i).
    void set_edge(size_t i, size_t j, int64_t w);

    bool operator==(const GraphAdjacency &) const = default;

   private:
    int64_t D_ = 2;
    size_t n_ = 0;
    std::vector<int64_t> w_;
};

/// Abelian group of independent commuting Pauli products with s^D = I for every element.
/// Construction validates all three conditions.
class StabilizerGroup {
   public:
    StabilizerGroup() = default;
    StabilizerGroup(int64_t D, size_t n, std::vector<PauliProduct> gens);

    int64_t dim() const {
        return D_;
    }
    size_t num_qudits() const {
        return n_;
    }
    const std::vector<PauliProduct> &gens() const {
        return gens_;
    }
    const Modulus &modulus() const {
        return mod_;
    }

    /// log_p |S| for each prime p of D, in the order of modulus().factors.
    std::vector<int> size_exponents() const;
    /// |S| = D^n.
    bool is_state() const;

    /// Same set of operators.
    bool operator==(const StabilizerGroup &other) const;

   private:
    int64_t D_ = 2;
    size_t n_ = 0;
    Modulus mod_;
    std::vector<PauliProduct> gens_;
};

/// log_p |<gens>| for every prime power of D. Does not require commuting generators.
std::vector<int> group_size_exponents(int64_t D, size_t n, std::span<const PauliProduct> gens);

/// Per-prime reduced echelon generators, concatenated. Equal groups give equal forms. D squarefree.
std::vector<PauliProduct> canonical_form(const StabilizerGroup &S);

bool contains(const StabilizerGroup &S, const PauliProduct &h);

/// Elements acting as the identity outside `part`.
StabilizerGroup subgroup_on_part(const StabilizerGroup &S, std::span<const size_t> part);

/// D^{|part|} / |S_part| for a state S.
uint64_t reduced_rank(const StabilizerGroup &S, std::span<const size_t> part);

/// Generating set of S_full that starts with T. D prime.
StabilizerGroup extend_generators(const StabilizerGroup &S_full, std::span<const PauliProduct> T);

/// S on the first qudits, T on the rest.
StabilizerGroup tensor(const StabilizerGroup &S, const StabilizerGroup &T);

/// Splits S into a group on `left` and a group on the remaining qudits (both re-indexed in
/// increasing qudit order), when S is such a product.
std::optional<std::pair<StabilizerGroup, StabilizerGroup>> try_factor(const StabilizerGroup &S,
                                                                      std::span<const size_t> left);

/// g_i = X_i prod_j Z_j^{-Gamma_ij}.
StabilizerGroup from_graph(const GraphAdjacency &G);
/// <X_1 X_2, Z_1 Z_2^{-1}>
StabilizerGroup epr_group(int64_t D);
/// <X_1 X_2 X_3, Z_1 Z_2^{-1}, Z_1 Z_3^{-1}>
StabilizerGroup ghz_group(int64_t D);

/// Remaps a group on n qudits onto `placement` (qudit i goes to placement[i]) of a larger register.
StabilizerGroup embed(const StabilizerGroup &S, size_t n_total, std::span<const size_t> placement);
PauliProduct embed(const PauliProduct &p, size_t n_total, std::span<const size_t> placement);

/// U S U^dagger for the unitary U built from `gates` (first gate acts first).
StabilizerGroup conjugate(const StabilizerGroup &S, std::span<const Gate> gates);

/// QSTAB1 stabilizer / graph text formats.
std::string format_stabilizer(const StabilizerGroup &S);
StabilizerGroup parse_stabilizer(std::string_view text);
std::string format_graph(const GraphAdjacency &G);
GraphAdjacency parse_graph(std::string_view text);

/// Splits into non-empty lines without trailing comments or carriage returns.
std::vector<std::string> content_lines(std::string_view text);

}  // namespace qstab
