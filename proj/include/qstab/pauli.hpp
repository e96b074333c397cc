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

namespace qstab {

/// The operator lambda^phase (x) X_q^{x_q} Z_q^{z_q} on n qudits of dimension D, with
/// lambda = exp(i pi / D). Per qudit the X power stands to the left of the Z power.
///
/// X is the shift X|k> = |k-1> and Z|k> = omega^k |k>, so XZ = omega ZX. All exponents are kept
/// as canonical representatives: phase in [0, 2D), x_q and z_q in [0, D).
class PauliProduct {
   public:
    PauliProduct() = default;
    /// Identity on `n` qudits.
    PauliProduct(int64_t D, size_t n);
    PauliProduct(int64_t D, int64_t phase, std::vector<int64_t> xs, std::vector<int64_t> zs);

    static PauliProduct single_x(int64_t D, size_t n, size_t q, int64_t power = 1);
    static PauliProduct single_z(int64_t D, size_t n, size_t q, int64_t power = 1);
    /// lambda^phase I.
    static PauliProduct scalar(int64_t D, size_t n, int64_t phase);

    int64_t dim() const {
        return D_;
    }
    size_t num_qudits() const {
        return xs_.size();
    }
    int64_t phase() const {
        return phase_;
    }
    int64_t x(size_t q) const {
        return xs_[q];
    }
    int64_t z(size_t q) const {
        return zs_[q];
    }
    std::span<const int64_t> xs() const {
        return xs_;
    }
    std::span<const int64_t> zs() const {
        return zs_;
    }

    void set_phase(int64_t phase);
    void add_phase(int64_t delta);
    void set_x(size_t q, int64_t v);
    void set_z(size_t q, int64_t v);

    /// True when every X and Z exponent vanishes (the operator is a multiple of I).
    bool is_scalar() const;
    /// True for exactly I, phase included.
    bool is_identity() const {
        return phase_ == 0 && is_scalar();
    }
    bool acts_on(size_t q) const {
        return xs_[q] != 0 || zs_[q] != 0;
    }

    bool operator==(const PauliProduct &other) const = default;

    /// `phase | x1 ... xn | z1 ... zn`
    std::string str() const;
    static PauliProduct parse(std::string_view text, int64_t D);

   private:
    int64_t D_ = 2;
    int64_t phase_ = 0;
    std::vector<int64_t> xs_;
    std::vector<int64_t> zs_;
};

/// Normal-ordered product p q.
PauliProduct multiply(const PauliProduct &p, const PauliProduct &q);
inline PauliProduct operator*(const PauliProduct &p, const PauliProduct &q) {
    return multiply(p, q);
}

/// alpha in Z_D with p q = omega^alpha q p.
int64_t commutation_phase(const PauliProduct &p, const PauliProduct &q);
inline bool commute(const PauliProduct &p, const PauliProduct &q) {
    return commutation_phase(p, q) == 0;
}

/// Smallest alpha >= 1 with p^alpha proportional to I.
int64_t order(const PauliProduct &p);

/// p^k for any integer k (p^{2D} = I always).
PauliProduct power(const PauliProduct &p, int64_t k);
PauliProduct inverse(const PauliProduct &p);

/// p on the first qudits, q on the following ones.
PauliProduct tensor(const PauliProduct &p, const PauliProduct &q);

bool is_identity_on(const PauliProduct &p, std::span<const size_t> qudits);

/// The k with p = lambda^k q, when p and q share their X/Z exponents.
std::optional<int64_t> proportional(const PauliProduct &p, const PauliProduct &q);

/// Copy of p with every qudit outside `qudits` cleared and the phase kept.
PauliProduct restrict_to(const PauliProduct &p, std::span<const size_t> qudits);

/// Component on `qudits`, re-indexed to a |qudits|-qudit Pauli (phase kept).
PauliProduct extract(const PauliProduct &p, std::span<const size_t> qudits);

/// The operator conj(p) (complex conjugation in the computational basis).
PauliProduct complex_conjugate(const PauliProduct &p);

void check_same_shape(const PauliProduct &p, const PauliProduct &q);

}  // namespace qstab
