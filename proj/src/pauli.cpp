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

#include "qstab/pauli.hpp"

#include <algorithm>
#include <sstream>

#include "qstab/error.hpp"
#include "qstab/modring.hpp"

namespace qstab {

PauliProduct::PauliProduct(int64_t D, size_t n) : D_(D), phase_(0), xs_(n, 0), zs_(n, 0) {
    if (D < 2) {
        fail(ErrorCode::InvalidDimension, "qudit dimension must be >= 2");
    }
}

PauliProduct::PauliProduct(int64_t D, int64_t phase, std::vector<int64_t> xs, std::vector<int64_t> zs)
    : D_(D), phase_(0), xs_(std::move(xs)), zs_(std::move(zs)) {
    if (D < 2) {
        fail(ErrorCode::InvalidDimension, "qudit dimension must be >= 2");
    }
    if (xs_.size() != zs_.size()) {
        fail(ErrorCode::ShapeMismatch, "x and z exponent vectors differ in length");
    }
    phase_ = mod(phase, 2 * D);
    for (auto &v : xs_) {
        v = mod(v, D);
    }
    for (auto &v : zs_) {
        v = mod(v, D);
    }
}

PauliProduct PauliProduct::single_x(int64_t D, size_t n, size_t q, int64_t power) {
    PauliProduct p(D, n);
    p.set_x(q, power);
    return p;
}

PauliProduct PauliProduct::single_z(int64_t D, size_t n, size_t q, int64_t power) {
    PauliProduct p(D, n);
    p.set_z(q, power);
    return p;
}

PauliProduct PauliProduct::scalar(int64_t D, size_t n, int64_t phase) {
    PauliProduct p(D, n);
    p.set_phase(phase);
    return p;
}

void PauliProduct::set_phase(int64_t phase) {
    phase_ = mod(phase, 2 * D_);
}

void PauliProduct::add_phase(int64_t delta) {
    phase_ = mod(phase_ + mod(delta, 2 * D_), 2 * D_);
}

void PauliProduct::set_x(size_t q, int64_t v) {
    if (q >= xs_.size()) {
        fail(ErrorCode::IndexOutOfRange, "qudit " + std::to_string(q) + " out of range");
    }
    xs_[q] = mod(v, D_);
}

void PauliProduct::set_z(size_t q, int64_t v) {
    if (q >= zs_.size()) {
        fail(ErrorCode::IndexOutOfRange, "qudit " + std::to_string(q) + " out of range");
    }
    zs_[q] = mod(v, D_);
}

bool PauliProduct::is_scalar() const {
    for (size_t q = 0; q < xs_.size(); ++q) {
        if (xs_[q] != 0 || zs_[q] != 0) {
            return false;
        }
    }
    return true;
}

std::string PauliProduct::str() const {
    std::ostringstream out;
    out << phase_ << " |";
    for (auto v : xs_) {
        out << ' ' << v;
    }
    out << " |";
    for (auto v : zs_) {
        out << ' ' << v;
    }
    return out.str();
}

namespace {

std::vector<int64_t> parse_ints(std::string_view text) {
    std::vector<int64_t> out;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        try {
            size_t used = 0;
            out.push_back(std::stoll(tok, &used));
            if (used != tok.size()) {
                fail(ErrorCode::ParseError, "bad integer '" + tok + "'");
            }
        } catch (const std::logic_error &) {
            fail(ErrorCode::ParseError, "bad integer '" + tok + "'");
        }
    }
    return out;
}

}  // namespace

PauliProduct PauliProduct::parse(std::string_view text, int64_t D) {
    auto bar1 = text.find('|');
    auto bar2 = bar1 == std::string_view::npos ? bar1 : text.find('|', bar1 + 1);
    if (bar2 == std::string_view::npos || text.find('|', bar2 + 1) != std::string_view::npos) {
        fail(ErrorCode::ParseError, "Pauli line needs the form 'g | x.. | z..': " + std::string(text));
    }
    auto phase = parse_ints(text.substr(0, bar1));
    auto xs = parse_ints(text.substr(bar1 + 1, bar2 - bar1 - 1));
    auto zs = parse_ints(text.substr(bar2 + 1));
    if (phase.size() != 1 || xs.size() != zs.size()) {
        fail(ErrorCode::ParseError, "malformed Pauli line: " + std::string(text));
    }
    return PauliProduct(D, phase[0], std::move(xs), std::move(zs));
}

void check_same_shape(const PauliProduct &p, const PauliProduct &q) {
    if (p.dim() != q.dim() || p.num_qudits() != q.num_qudits()) {
        fail(ErrorCode::ShapeMismatch, "Pauli products live on different spaces");
    }
}

PauliProduct multiply(const PauliProduct &p, const PauliProduct &q) {
    check_same_shape(p, q);
    const int64_t D = p.dim();
    const size_t n = p.num_qudits();
    // Z^a X^b = omega^{-ab} X^b Z^a.
    int64_t swap = 0;
    std::vector<int64_t> xs(n), zs(n);
    for (size_t i = 0; i < n; ++i) {
        swap = mod(swap + mul_mod(p.z(i), q.x(i), D), D);
        xs[i] = p.x(i) + q.x(i);
        zs[i] = p.z(i) + q.z(i);
    }
    return PauliProduct(D, p.phase() + q.phase() - 2 * swap, std::move(xs), std::move(zs));
}

int64_t commutation_phase(const PauliProduct &p, const PauliProduct &q) {
    check_same_shape(p, q);
    const int64_t D = p.dim();
    int64_t alpha = 0;
    for (size_t i = 0; i < p.num_qudits(); ++i) {
        alpha += mul_mod(p.x(i), q.z(i), D) - mul_mod(p.z(i), q.x(i), D);
        alpha = mod(alpha, D);
    }
    return alpha;
}

int64_t order(const PauliProduct &p) {
    int64_t g = p.dim();
    for (size_t i = 0; i < p.num_qudits(); ++i) {
        g = gcd(g, p.x(i));
        g = gcd(g, p.z(i));
    }
    return p.dim() / g;
}

PauliProduct power(const PauliProduct &p, int64_t k) {
    const int64_t D = p.dim();
    const int64_t two_d = 2 * D;
    k = mod(k, two_d);
    int64_t xz = 0;
    std::vector<int64_t> xs(p.num_qudits()), zs(p.num_qudits());
    for (size_t i = 0; i < p.num_qudits(); ++i) {
        xz = mod(xz + mul_mod(p.x(i), p.z(i), D), D);
        xs[i] = mul_mod(p.x(i), k, D);
        zs[i] = mul_mod(p.z(i), k, D);
    }
    // (X^x Z^z)^k = omega^{-(x.z) k(k-1)/2} X^{kx} Z^{kz}
    int64_t phase = mul_mod(p.phase(), k, two_d) - mul_mod(xz, mul_mod(k, k - 1, two_d), two_d);
    return PauliProduct(D, phase, std::move(xs), std::move(zs));
}

PauliProduct inverse(const PauliProduct &p) {
    return power(p, -1);
}

PauliProduct tensor(const PauliProduct &p, const PauliProduct &q) {
    if (p.dim() != q.dim()) {
        fail(ErrorCode::ShapeMismatch, "tensor of Paulis with different dimensions");
    }
    std::vector<int64_t> xs(p.xs().begin(), p.xs().end());
    std::vector<int64_t> zs(p.zs().begin(), p.zs().end());
    xs.insert(xs.end(), q.xs().begin(), q.xs().end());
    zs.insert(zs.end(), q.zs().begin(), q.zs().end());
    return PauliProduct(p.dim(), p.phase() + q.phase(), std::move(xs), std::move(zs));
}

bool is_identity_on(const PauliProduct &p, std::span<const size_t> qudits) {
    for (size_t q : qudits) {
        if (q >= p.num_qudits()) {
            fail(ErrorCode::IndexOutOfRange, "qudit " + std::to_string(q) + " out of range");
        }
        if (p.acts_on(q)) {
            return false;
        }
    }
    return true;
}

std::optional<int64_t> proportional(const PauliProduct &p, const PauliProduct &q) {
    check_same_shape(p, q);
    if (!std::equal(p.xs().begin(), p.xs().end(), q.xs().begin()) ||
        !std::equal(p.zs().begin(), p.zs().end(), q.zs().begin())) {
        return std::nullopt;
    }
    return mod(p.phase() - q.phase(), 2 * p.dim());
}

PauliProduct restrict_to(const PauliProduct &p, std::span<const size_t> qudits) {
    PauliProduct out = PauliProduct::scalar(p.dim(), p.num_qudits(), p.phase());
    for (size_t q : qudits) {
        out.set_x(q, p.x(q));
        out.set_z(q, p.z(q));
    }
    return out;
}

PauliProduct extract(const PauliProduct &p, std::span<const size_t> qudits) {
    std::vector<int64_t> xs, zs;
    for (size_t q : qudits) {
        if (q >= p.num_qudits()) {
            fail(ErrorCode::IndexOutOfRange, "qudit " + std::to_string(q) + " out of range");
        }
        xs.push_back(p.x(q));
        zs.push_back(p.z(q));
    }
    return PauliProduct(p.dim(), p.phase(), std::move(xs), std::move(zs));
}

PauliProduct complex_conjugate(const PauliProduct &p) {
    std::vector<int64_t> xs(p.xs().begin(), p.xs().end());
    std::vector<int64_t> zs(p.zs().begin(), p.zs().end());
    for (auto &v : zs) {
        v = -v;
    }
    return PauliProduct(p.dim(), -p.phase(), std::move(xs), std::move(zs));
}

}  // namespace qstab
