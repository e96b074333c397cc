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

#include "qstab/pauli.hpp"

namespace qstab {

enum class GateKind { F, S, W, X, Z, CP, CNOT };

/// One elementary gate. `q` (and `r` for CP / CNOT) are 0-based qudit indices; `param` is
/// alpha for S, the power for X and Z, and the weight for CP.
struct Gate {
    GateKind kind = GateKind::F;
    size_t q = 0;
    size_t r = 0;
    int64_t param = 0;

    static Gate fourier(size_t q) {
        return {GateKind::F, q, 0, 0};
    }
    static Gate smult(size_t q, int64_t alpha) {
        return {GateKind::S, q, 0, alpha};
    }
    static Gate phase(size_t q) {
        return {GateKind::W, q, 0, 0};
    }
    static Gate pauli_x(size_t q, int64_t a) {
        return {GateKind::X, q, 0, a};
    }
    static Gate pauli_z(size_t q, int64_t b) {
        return {GateKind::Z, q, 0, b};
    }
    static Gate cphase(size_t q, size_t r, int64_t w) {
        return {GateKind::CP, q, r, w};
    }
    static Gate cnot(size_t control, size_t target) {
        return {GateKind::CNOT, control, target, 0};
    }

    bool two_qudit() const {
        return kind == GateKind::CP || kind == GateKind::CNOT;
    }

    /// Text form with 1-based indices: `F q`, `S q alpha`, `W q`, `X q a`, `Z q b`, `CP q r w`,
    /// `CNOT q r`.
    std::string str() const;
    static Gate parse(std::string_view line);

    bool operator==(const Gate &) const = default;
};

std::string format_gates(std::span<const Gate> gates);
/// Blank lines and lines starting with '#' are skipped.
std::vector<Gate> parse_gates(std::string_view text);

/// Throws unless the gate is well formed for n qudits of dimension D.
void validate_gate(const Gate &g, int64_t D, size_t n);

/// p <- G p G^dagger.
void conjugate_by_gate(const Gate &g, PauliProduct &p);

/// Gates whose product is the exact inverse (as a matrix) of the product of `gates`.
std::vector<Gate> inverse_gates(std::span<const Gate> gates, int64_t D);

/// Clifford unitary U stored as the images U X_q U^dagger and U Z_q U^dagger, together with the
/// elementary gates that built it (applied in order, earliest first).
class CliffordTableau {
   public:
    CliffordTableau() = default;
    static CliffordTableau identity(int64_t D, size_t n);
    static CliffordTableau replay(int64_t D, size_t n, std::span<const Gate> gates);

    int64_t dim() const {
        return D_;
    }
    size_t num_qudits() const {
        return image_x_.size();
    }

    /// U <- G U.
    CliffordTableau &apply(const Gate &g);
    CliffordTableau &fourier(size_t q) {
        return apply(Gate::fourier(q));
    }
    CliffordTableau &smult(size_t q, int64_t alpha) {
        return apply(Gate::smult(q, alpha));
    }
    CliffordTableau &phase(size_t q) {
        return apply(Gate::phase(q));
    }
    CliffordTableau &pauli_x(size_t q, int64_t a) {
        return apply(Gate::pauli_x(q, a));
    }
    CliffordTableau &pauli_z(size_t q, int64_t b) {
        return apply(Gate::pauli_z(q, b));
    }
    CliffordTableau &cphase(size_t q, size_t r, int64_t w) {
        return apply(Gate::cphase(q, r, w));
    }
    CliffordTableau &cnot(size_t control, size_t target) {
        return apply(Gate::cnot(control, target));
    }

    /// U p U^dagger.
    PauliProduct conjugate(const PauliProduct &p) const;

    const PauliProduct &image_x(size_t q) const {
        return image_x_[q];
    }
    const PauliProduct &image_z(size_t q) const {
        return image_z_[q];
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }

    /// Same conjugation action (the gate logs may differ).
    bool operator==(const CliffordTableau &other) const {
        return D_ == other.D_ && image_x_ == other.image_x_ && image_z_ == other.image_z_;
    }

   private:
    int64_t D_ = 2;
    std::vector<PauliProduct> image_x_;
    std::vector<PauliProduct> image_z_;
    std::vector<Gate> gates_;
};

/// t1 after t2.
CliffordTableau compose(const CliffordTableau &t1, const CliffordTableau &t2);
CliffordTableau inverse(const CliffordTableau &t);

/// Gates on qudit q taking X^a Z^b (not both zero) to exactly X. D prime.
std::vector<Gate> single_qudit_to_x(int64_t a, int64_t b, size_t q, int64_t D);

/// Gates supported on `part` that conjugate p to X_target (Z_target if want_z) on `part`,
/// leaving every qudit outside `part` untouched. With `fix_phase` the phase is removed too
/// whenever p^D = I. D must be prime and p must act on `part`.
std::vector<Gate> pivot_gates(const PauliProduct &p, std::span<const size_t> part, size_t target,
                              bool want_z = false, bool fix_phase = true);

CliffordTableau pivot_to_x1(const PauliProduct &p, std::span<const size_t> part, size_t target,
                            bool want_z = false);

}  // namespace qstab
