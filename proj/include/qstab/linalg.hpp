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
#include <vector>

#include "qstab/pauli.hpp"

namespace qstab {

using IntMatrix = std::vector<std::vector<int64_t>>;

/// In-place reduced row echelon form over Z_p (p prime). Zero rows are removed.
/// Returns the pivot columns.
std::vector<size_t> rref_mod_p(IntMatrix &m, size_t ncols, int64_t p);

/// Basis of {v : m v = 0 mod p}.
IntMatrix nullspace_mod_p(IntMatrix m, size_t ncols, int64_t p);

/// log_p of the size of the row span of `rows` inside (Z_{p^e})^ncols.
int module_size_exponent(IntMatrix rows, size_t ncols, int64_t p, int e);

/// Exponent columns: 2q holds x_q, 2q+1 holds z_q.
std::vector<size_t> qudit_columns(std::span<const size_t> qudits);
int64_t column_exponent(const PauliProduct &g, size_t col);

/// g^e with e = 1 mod q and e = 0 mod D/q, for a prime power q exactly dividing D.
/// For D squarefree, g is the product of its components over all primes.
PauliProduct primary_component(const PauliProduct &g, int64_t q);

/// Column value of a component of order dividing prime p: exponent / (D/p) mod p.
int64_t component_value(const PauliProduct &g, size_t col, int64_t p);

/// Generators of a p-component group (D squarefree, p | D) brought to reduced echelon form on
/// `col_order` using exact Pauli multiplication. Rows past `rank` vanish on every listed column.
struct PauliEchelon {
    int64_t p = 2;
    std::vector<PauliProduct> rows;
    std::vector<size_t> pivot_cols;

    size_t rank() const {
        return pivot_cols.size();
    }

    /// Cancels h on the pivot columns. Returns the residual r and fills `used` with u so that
    /// h = u r (when the rows and h commute).
    PauliProduct reduce(const PauliProduct &h, PauliProduct *used = nullptr) const;
};

PauliEchelon pauli_echelon(std::vector<PauliProduct> rows, std::span<const size_t> col_order, int64_t p);

}  // namespace qstab
