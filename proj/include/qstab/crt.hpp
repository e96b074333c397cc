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
#include <utility>
#include <vector>

#include "qstab/modring.hpp"
#include "qstab/pauli.hpp"
#include "qstab/stabilizer.hpp"

namespace qstab {

/// Order bookkeeping for splitting one generator of order delta = delta1 * delta2, where delta1
/// collects the primes of d1. mu_i = (delta / delta_i)^{-1} mod delta_i (0 when delta_i = 1).
struct GeneratorSplitData {
    int64_t delta = 1;
    int64_t delta1 = 1;
    int64_t delta2 = 1;
    int64_t mu1 = 0;
    int64_t mu2 = 0;

    static GeneratorSplitData make(int64_t delta, const CrtSplit &split);
};

/// U p U^dagger written as h1 (x) h2 over Z_{d1} and Z_{d2}, where U|a> = |a mod d1>|a mod d2>.
/// The scalar is shared out deterministically (h1 gets a phase in [0, d1)).
std::pair<PauliProduct, PauliProduct> split_pauli(const PauliProduct &p, const CrtSplit &split);

/// Inverse of split_pauli: the Pauli over Z_D whose image is h1 (x) h2.
PauliProduct combine_pauli(const PauliProduct &h1, const PauliProduct &h2, const CrtSplit &split);

/// Splits <U g U^dagger> = <h1> (x) <h2> with order(h_i) = delta_i, using
/// h1 (x) I = (U g U^dagger)^{mu1 delta2} and I (x) h2 = (U g U^dagger)^{mu2 delta1}.
std::pair<PauliProduct, PauliProduct> split_generator(const PauliProduct &g, const CrtSplit &split);

/// One group per prime power of D, in increasing prime order. Identity components are dropped.
std::vector<StabilizerGroup> decompose_group(const StabilizerGroup &A);

/// decompose_group for a state; every factor is a state on n qudits of its own dimension.
std::vector<StabilizerGroup> decompose_state(const StabilizerGroup &S);

/// The prime powers of D in the order used by decompose_group.
std::vector<int64_t> crt_moduli(int64_t D);

}  // namespace qstab
