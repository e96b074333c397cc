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
#include <vector>

#include "qstab/clifford.hpp"
#include "qstab/stabilizer.hpp"

namespace qstab {

/// Two or three disjoint qudit sets covering 0..n-1. Parts may be empty.
struct Partition {
    std::vector<std::vector<size_t>> parts;

    size_t num_qudits() const;
    /// part_of()[q] is the index of the part holding qudit q.
    std::vector<int> part_of() const;
    /// Throws IndexOutOfRange unless the parts are disjoint, cover 0..n-1, and number 2 or 3.
    void validate(size_t n) const;

    /// `1,2/3/4,5` with 1-based qudits; an empty field is an empty part.
    static Partition parse(std::string_view text);
    std::string str() const;

    bool operator==(const Partition &) const = default;
};

struct Counts {
    int m_A = 0;
    int m_B = 0;
    int m_C = 0;
    int m_AB = 0;
    int m_AC = 0;
    int m_BC = 0;
    int m_ABC = 0;

    /// `m_A=.. m_B=.. m_C=.. m_AB=.. m_AC=.. m_BC=.. m_ABC=..`
    std::string str() const;
    bool operator==(const Counts &) const = default;
};

enum class FactorKind { Plus, Epr, Ghz };

/// One factor of the normal form: |+> on qudits[0]; an EPR pair on (qudits[0], qudits[1]);
/// or a GHZ state on (qudits[0], qudits[1], qudits[2]), listed in part order.
struct Factor {
    FactorKind kind = FactorKind::Plus;
    std::vector<size_t> qudits;

    std::string str() const;
    bool operator==(const Factor &) const = default;
};

/// Normal form over one prime p of D.
struct PrimeNormalForm {
    int64_t p = 2;
    Counts counts;
    /// Gates acting inside each part, in application order.
    std::vector<std::vector<Gate>> part_gates;
    /// Factors in extraction order.
    std::vector<Factor> factors;

    /// All gates of all parts (parts commute, so the order between parts is irrelevant).
    std::vector<Gate> all_gates() const;
    bool operator==(const PrimeNormalForm &) const = default;
};

struct NormalForm {
    int64_t D = 2;
    size_t n = 0;
    Partition partition;
    /// One entry per prime of D, increasing.
    std::vector<PrimeNormalForm> components;
    /// Equal to the single component for prime D; the componentwise minimum otherwise.
    Counts counts;
    /// Every prime component has the same counts, so the factors line up after swaps inside parts.
    bool aligned = true;

    bool operator==(const NormalForm &) const = default;
};

/// <X_q> for Plus factors, <X_a X_b, Z_a Z_b^{-1}> for EPR, <X_a X_b X_c, Z_a Z_b^{-1}, Z_a Z_c^{-1}>
/// for GHZ, over Z_p on n qudits.
StabilizerGroup normal_form_group(const PrimeNormalForm &nf, size_t n);

/// Result of one extraction step. `rest` lives on all n qudits and acts trivially on every
/// qudit already split off.
struct ExtractionStep {
    StabilizerGroup rest;
    CliffordTableau unitary;
    std::vector<size_t> qudits;
};

/// Splits off every unentangled qudit of `part`. Returns the remaining group, the local unitary
/// on `part`, and the extracted qudits. D prime.
ExtractionStep extract_unentangled(const StabilizerGroup &S, std::span<const size_t> part);

/// One EPR pair between the two parts, if their components of S_XY fail to commute. D prime;
/// no part may carry local elements.
std::optional<ExtractionStep> extract_epr_pair(const StabilizerGroup &S, std::span<const size_t> part_x,
                                               std::span<const size_t> part_y);

/// One GHZ triple. D prime; requires single-part and pairwise extraction to be complete.
std::optional<ExtractionStep> extract_ghz(const StabilizerGroup &S, std::span<const size_t> A,
                                          std::span<const size_t> B, std::span<const size_t> C);

NormalForm bipartition_normal_form(const StabilizerGroup &S, std::span<const size_t> A, std::span<const size_t> B);
NormalForm tripartition_normal_form(const StabilizerGroup &S, std::span<const size_t> A,
                                    std::span<const size_t> B, std::span<const size_t> C);
/// Bipartition or tripartition by the number of parts.
NormalForm canonicalize(const StabilizerGroup &S, const Partition &partition);

/// The prime-component groups that the gate lists of `nf` act on (S itself for prime D).
std::vector<StabilizerGroup> prime_components(const StabilizerGroup &S);

/// Conjugates each prime component by its gates and compares with the declared normal form.
bool verify_normal_form(const StabilizerGroup &S, const NormalForm &nf);

/// Counts implied by a factor list.
Counts count_factors(const std::vector<Factor> &factors, const Partition &partition);

/// log_p of the Schmidt rank predicted across `cut` (a union of parts): sum over factors
/// crossing the cut, for one prime component.
int crossing_count(const PrimeNormalForm &nf, const Partition &partition, std::span<const int> cut_parts);

std::string format_normal_form(const NormalForm &nf);
NormalForm parse_normal_form(std::string_view text);

}  // namespace qstab
