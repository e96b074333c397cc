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

#include "qstab/crt.hpp"

#include "qstab/error.hpp"

namespace qstab {

namespace {

PauliProduct component(const PauliProduct &p, int64_t d, int64_t r, int64_t phase) {
    std::vector<int64_t> xs(p.num_qudits()), zs(p.num_qudits());
    for (size_t q = 0; q < p.num_qudits(); ++q) {
        xs[q] = mod(p.x(q), d);
        zs[q] = mul_mod(r, p.z(q), d);
    }
    return PauliProduct(d, phase, std::move(xs), std::move(zs));
}

void check_split(const PauliProduct &p, const CrtSplit &split) {
    if (p.dim() != split.D()) {
        fail(ErrorCode::ShapeMismatch, "Pauli dimension differs from the split");
    }
    if (split.d1 < 2 || split.d2 < 2) {
        fail(ErrorCode::NotCoprime, "both factors of a split must be at least 2");
    }
}

}  // namespace

GeneratorSplitData GeneratorSplitData::make(int64_t delta, const CrtSplit &split) {
    GeneratorSplitData s;
    s.delta = delta;
    s.delta1 = gcd(delta, split.d1);
    s.delta2 = delta / s.delta1;
    s.mu1 = s.delta1 == 1 ? 0 : inv_mod(s.delta2 % s.delta1, s.delta1);
    s.mu2 = s.delta2 == 1 ? 0 : inv_mod(s.delta1 % s.delta2, s.delta2);
    return s;
}

std::pair<PauliProduct, PauliProduct> split_pauli(const PauliProduct &p, const CrtSplit &split) {
    check_split(p, split);
    const int64_t D = split.D();
    // gamma = gamma1 d2 + gamma2 d1 (mod 2D)
    int64_t u = 0, v = 0;
    extended_gcd(split.d2, split.d1, u, v);
    int64_t g1 = mul_mod(p.phase(), u, 2 * D);
    int64_t g2 = mul_mod(p.phase(), v, 2 * D);
    int64_t k = g1 / split.d1;
    g1 -= k * split.d1;
    g2 += k * split.d2;
    return {component(p, split.d1, split.r1, g1), component(p, split.d2, split.r2, g2)};
}

PauliProduct combine_pauli(const PauliProduct &h1, const PauliProduct &h2, const CrtSplit &split) {
    if (h1.dim() != split.d1 || h2.dim() != split.d2 || h1.num_qudits() != h2.num_qudits()) {
        fail(ErrorCode::ShapeMismatch, "components do not match the split");
    }
    const int64_t D = split.D();
    const int64_t s1 = inv_mod(split.r1, split.d1);
    const int64_t s2 = inv_mod(split.r2, split.d2);
    std::vector<int64_t> xs(h1.num_qudits()), zs(h1.num_qudits());
    for (size_t q = 0; q < h1.num_qudits(); ++q) {
        xs[q] = crt_combine(h1.x(q), h2.x(q), split);
        zs[q] = crt_combine(mul_mod(h1.z(q), s1, split.d1), mul_mod(h2.z(q), s2, split.d2), split);
    }
    int64_t phase = mul_mod(h1.phase(), split.d2, 2 * D) + mul_mod(h2.phase(), split.d1, 2 * D);
    return PauliProduct(D, phase, std::move(xs), std::move(zs));
}

std::pair<PauliProduct, PauliProduct> split_generator(const PauliProduct &g, const CrtSplit &split) {
    check_split(g, split);
    if (!power(g, order(g)).is_identity()) {
        fail(ErrorCode::InvalidStabilizer, g.str() + " has g^order != I");
    }
    auto s = GeneratorSplitData::make(order(g), split);
    PauliProduct g1 = power(g, s.mu1 * s.delta2);
    PauliProduct g2 = power(g, s.mu2 * s.delta1);
    // g1 only lives on the d1 factor, so its phase is a multiple of d2 (and symmetrically).
    if (g1.phase() % split.d2 != 0 || g2.phase() % split.d1 != 0) {
        fail(ErrorCode::InternalInvariant, "component phase is not a lambda power of its factor");
    }
    PauliProduct h1 = component(g1, split.d1, split.r1, g1.phase() / split.d2);
    PauliProduct h2 = component(g2, split.d2, split.r2, g2.phase() / split.d1);
    return {h1, h2};
}

std::vector<int64_t> crt_moduli(int64_t D) {
    std::vector<int64_t> out;
    for (const auto &f : factorize(D).factors) {
        out.push_back(f.value());
    }
    return out;
}

std::vector<StabilizerGroup> decompose_group(const StabilizerGroup &A) {
    const auto &factors = A.modulus().factors;
    if (factors.size() <= 1) {
        return {A};
    }
    const int64_t d1 = factors[0].value();
    const int64_t d2 = A.dim() / d1;
    auto split = CrtSplit::make(d1, d2);
    std::vector<PauliProduct> first, rest;
    for (const auto &g : A.gens()) {
        auto [h1, h2] = split_generator(g, split);
        if (!h1.is_identity()) {
            first.push_back(h1);
        }
        if (!h2.is_identity()) {
            rest.push_back(h2);
        }
    }
    std::vector<StabilizerGroup> out{StabilizerGroup(d1, A.num_qudits(), std::move(first))};
    auto tail = decompose_group(StabilizerGroup(d2, A.num_qudits(), std::move(rest)));
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

std::vector<StabilizerGroup> decompose_state(const StabilizerGroup &S) {
    if (!S.is_state()) {
        fail(ErrorCode::NotAState, "group does not have D^n elements");
    }
    return decompose_group(S);
}

}  // namespace qstab
