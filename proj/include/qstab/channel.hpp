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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qstab/canonicalize.hpp"
#include "qstab/clifford.hpp"
#include "qstab/pauli.hpp"
#include "qstab/stabilizer.hpp"

namespace qstab {

/// [[n, k]]_D graph code: graph state |G> on n qudits and Z-type coding generators f_1..f_k.
struct CodeSpec {
    int64_t D = 2;
    size_t n = 0;
    size_t k = 0;
    GraphAdjacency graph;
    std::vector<PauliProduct> coding;

    bool operator==(const CodeSpec &) const = default;
};

/// Throws InvalidCode (or NonPrimeD) unless the code is well formed and its coding kets are
/// mutually orthogonal.
void validate_code(const CodeSpec &code);

/// Subgroup of P_k containing lambda*I, kept as a reduced basis of its exponent vectors.
class InfoGroup {
   public:
    InfoGroup() = default;
    InfoGroup(int64_t D, size_t k, const std::vector<PauliProduct> &gens);

    int64_t dim() const {
        return D_;
    }
    size_t num_qudits() const {
        return k_;
    }
    /// Reduced, phase-free generators; lambda*I is implied.
    const std::vector<PauliProduct> &gens() const {
        return gens_;
    }
    /// log_D of |G| / |<lambda I>|.
    size_t rank() const {
        return gens_.size();
    }
    bool contains(const PauliProduct &p) const;

    bool operator==(const InfoGroup &) const = default;

   private:
    int64_t D_ = 2;
    size_t k_ = 0;
    std::vector<PauliProduct> gens_;
};

InfoGroup centralizer_in_pauli(const InfoGroup &G);

enum class Side { B, C };
enum class Basis { Transformed, Original };

struct ChannelAnalysis {
    int64_t D = 2;
    size_t n = 0;
    size_t k = 0;
    std::vector<size_t> B;
    std::vector<size_t> C;
    Counts counts;
    /// Normal form of the Choi state with parts (inputs, k + B, k + C).
    PrimeNormalForm form;
    /// Clifford U_A on the k inputs: the Choi state's part-A gates.
    std::vector<Gate> input_gates;
    /// Info groups in the transformed input basis.
    InfoGroup G_B;
    InfoGroup G_C;

    int q_B() const {
        return counts.m_AB;
    }
    int c_B() const {
        return counts.m_AB + counts.m_ABC;
    }
    int q_C() const {
        return counts.m_AC;
    }
    int c_C() const {
        return counts.m_AC + counts.m_ABC;
    }
};

/// Choi state on k + n qudits, inputs first.
StabilizerGroup code_to_choi_state(const CodeSpec &code);

struct GraphCode {
    CodeSpec code;
    /// Controlled phases among the inputs.
    std::vector<Gate> input_unitary;
};

/// Reads a code off a graph-form Choi state whose first k vertices are the inputs.
GraphCode graph_choi_to_code(const GraphAdjacency &graph, size_t k);

ChannelAnalysis analyze_channel(const CodeSpec &code, std::span<const size_t> B, std::span<const size_t> C);

InfoGroup info_group(const ChannelAnalysis &analysis, Side side, Basis basis = Basis::Transformed);

bool verify_duality(const ChannelAnalysis &analysis);

/// Capacities of a subcode, in units of log2 D; each is a lower bound for any enclosing code.
struct CapacityBounds {
    int64_t D = 2;
    int q_B = 0;
    int c_B = 0;
    int q_C = 0;
    int c_C = 0;

    std::string str() const;
};

CapacityBounds subcode_bounds(const CodeSpec &sub, std::span<const size_t> B, std::span<const size_t> C);

/// Text format: "QSTAB1 code", "D n", graph edges "i j w", "CODING k", k Pauli lines.
std::string format_code(const CodeSpec &code);
CodeSpec parse_code(std::string_view text);

/// Report with counts, capacities, the input gates and both info groups in both bases.
std::string format_channel_analysis(const ChannelAnalysis &a);
ChannelAnalysis parse_channel_analysis(std::string_view text);

}  // namespace qstab
