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

#include "qstab/clifford.hpp"

#include <algorithm>
#include <sstream>

#include "qstab/error.hpp"
#include "qstab/modring.hpp"

namespace qstab {

namespace {

std::string_view kind_name(GateKind k) {
    switch (k) {
        case GateKind::F:
            return "F";
        case GateKind::S:
            return "S";
        case GateKind::W:
            return "W";
        case GateKind::X:
            return "X";
        case GateKind::Z:
            return "Z";
        case GateKind::CP:
            return "CP";
        case GateKind::CNOT:
            return "CNOT";
    }
    return "?";
}

int64_t parse_int(const std::string &tok, std::string_view line) {
    try {
        size_t used = 0;
        int64_t v = std::stoll(tok, &used);
        if (used == tok.size()) {
            return v;
        }
    } catch (const std::logic_error &) {
    }
    fail(ErrorCode::ParseError, "bad integer '" + tok + "' in gate line: " + std::string(line));
}

}  // namespace

std::string Gate::str() const {
    std::ostringstream out;
    out << kind_name(kind) << ' ' << q + 1;
    switch (kind) {
        case GateKind::F:
        case GateKind::W:
            break;
        case GateKind::S:
        case GateKind::X:
        case GateKind::Z:
            out << ' ' << param;
            break;
        case GateKind::CP:
            out << ' ' << r + 1 << ' ' << param;
            break;
        case GateKind::CNOT:
            out << ' ' << r + 1;
            break;
    }
    return out.str();
}

Gate Gate::parse(std::string_view line) {
    std::istringstream in{std::string(line)};
    std::vector<std::string> tok;
    for (std::string t; in >> t;) {
        tok.push_back(t);
    }
    if (tok.empty()) {
        fail(ErrorCode::ParseError, "empty gate line");
    }
    struct Shape {
        GateKind kind;
        size_t args;
    };
    static const std::pair<std::string_view, Shape> table[] = {
        {"F", {GateKind::F, 1}},   {"S", {GateKind::S, 2}},   {"W", {GateKind::W, 1}},
        {"X", {GateKind::X, 2}},   {"Z", {GateKind::Z, 2}},   {"CP", {GateKind::CP, 3}},
        {"CNOT", {GateKind::CNOT, 2}},
    };
    const Shape *shape = nullptr;
    for (const auto &[name, s] : table) {
        if (tok[0] == name) {
            shape = &s;
        }
    }
    if (shape == nullptr || tok.size() != shape->args + 1) {
        fail(ErrorCode::ParseError, "unrecognized gate line: " + std::string(line));
    }
    auto index = [&](const std::string &t) {
        int64_t v = parse_int(t, line);
        if (v < 1) {
            fail(ErrorCode::ParseError, "qudit indices are 1-based: " + std::string(line));
        }
        return static_cast<size_t>(v - 1);
    };
    Gate g;
    g.kind = shape->kind;
    g.q = index(tok[1]);
    switch (g.kind) {
        case GateKind::S:
        case GateKind::X:
        case GateKind::Z:
            g.param = parse_int(tok[2], line);
            break;
        case GateKind::CP:
            g.r = index(tok[2]);
            g.param = parse_int(tok[3], line);
            break;
        case GateKind::CNOT:
            g.r = index(tok[2]);
            break;
        default:
            break;
    }
    return g;
}

std::string format_gates(std::span<const Gate> gates) {
    std::string out;
    for (const auto &g : gates) {
        out += g.str();
        out += '\n';
    }
    return out;
}

std::vector<Gate> parse_gates(std::string_view text) {
    std::vector<Gate> out;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        out.push_back(Gate::parse(line));
    }
    return out;
}

void validate_gate(const Gate &g, int64_t D, size_t n) {
    if (g.q >= n || (g.two_qudit() && g.r >= n)) {
        fail(ErrorCode::IndexOutOfRange, "gate '" + g.str() + "' outside " + std::to_string(n) + " qudits");
    }
    if (g.two_qudit() && g.q == g.r) {
        fail(ErrorCode::IndexOutOfRange, "gate '" + g.str() + "' needs two distinct qudits");
    }
    if (g.kind == GateKind::S && gcd(mod(g.param, D), D) != 1) {
        fail(ErrorCode::NotInvertible, "S multiplier " + std::to_string(g.param) + " is not a unit mod " +
                                           std::to_string(D));
    }
}

void conjugate_by_gate(const Gate &g, PauliProduct &p) {
    const int64_t D = p.dim();
    validate_gate(g, D, p.num_qudits());
    const int64_t a = p.x(g.q);
    const int64_t b = p.z(g.q);
    switch (g.kind) {
        case GateKind::F:
            // X -> Z^{-1}, Z -> X
            p.set_x(g.q, b);
            p.set_z(g.q, -a);
            p.add_phase(2 * mul_mod(a, b, D));
            break;
        case GateKind::S: {
            int64_t alpha = mod(g.param, D);
            p.set_x(g.q, mul_mod(a, inv_mod(alpha, D), D));
            p.set_z(g.q, mul_mod(b, alpha, D));
            break;
        }
        case GateKind::W: {
            // X^a -> (lambda^e X Z)^a
            int64_t delta = (D % 2 == 0 ? a : 0) - mul_mod(a, a - 1, 2 * D);
            p.set_z(g.q, a + b);
            p.add_phase(delta);
            break;
        }
        case GateKind::X:
            p.add_phase(2 * mul_mod(g.param, b, D));
            break;
        case GateKind::Z:
            p.add_phase(-2 * mul_mod(g.param, a, D));
            break;
        case GateKind::CP: {
            const int64_t c = p.x(g.r);
            const int64_t d = p.z(g.r);
            const int64_t w = mod(g.param, D);
            p.set_z(g.q, b - mul_mod(w, c, D));
            p.set_z(g.r, d - mul_mod(w, a, D));
            p.add_phase(2 * mul_mod(w, mul_mod(a, c, D), D));
            break;
        }
        case GateKind::CNOT: {
            const int64_t c = p.x(g.r);
            const int64_t d = p.z(g.r);
            p.set_z(g.q, b + d);
            p.set_x(g.r, c - a);
            break;
        }
    }
}

std::vector<Gate> inverse_gates(std::span<const Gate> gates, int64_t D) {
    std::vector<Gate> out;
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        const Gate &g = *it;
        switch (g.kind) {
            case GateKind::F:
                out.insert(out.end(), 3, g);
                break;
            case GateKind::S:
                out.push_back(Gate::smult(g.q, inv_mod(mod(g.param, D), D)));
                break;
            case GateKind::W:
                // W^D = Z^{D/2} for even D and I for odd D.
                if (D % 2 == 0) {
                    out.push_back(Gate::pauli_z(g.q, D / 2));
                }
                out.insert(out.end(), static_cast<size_t>(D - 1), g);
                break;
            case GateKind::X:
                out.push_back(Gate::pauli_x(g.q, mod(-g.param, D)));
                break;
            case GateKind::Z:
                out.push_back(Gate::pauli_z(g.q, mod(-g.param, D)));
                break;
            case GateKind::CP:
                out.push_back(Gate::cphase(g.q, g.r, mod(-g.param, D)));
                break;
            case GateKind::CNOT:
                out.insert(out.end(), static_cast<size_t>(D - 1), g);
                break;
        }
    }
    return out;
}

CliffordTableau CliffordTableau::identity(int64_t D, size_t n) {
    CliffordTableau t;
    t.D_ = D;
    for (size_t q = 0; q < n; ++q) {
        t.image_x_.push_back(PauliProduct::single_x(D, n, q));
        t.image_z_.push_back(PauliProduct::single_z(D, n, q));
    }
    return t;
}

CliffordTableau CliffordTableau::replay(int64_t D, size_t n, std::span<const Gate> gates) {
    CliffordTableau t = identity(D, n);
    for (const auto &g : gates) {
        t.apply(g);
    }
    return t;
}

CliffordTableau &CliffordTableau::apply(const Gate &g) {
    validate_gate(g, D_, num_qudits());
    for (auto &p : image_x_) {
        conjugate_by_gate(g, p);
    }
    for (auto &p : image_z_) {
        conjugate_by_gate(g, p);
    }
    gates_.push_back(g);
    return *this;
}

PauliProduct CliffordTableau::conjugate(const PauliProduct &p) const {
    if (p.dim() != D_ || p.num_qudits() != num_qudits()) {
        fail(ErrorCode::ShapeMismatch, "Pauli and tableau live on different spaces");
    }
    PauliProduct out = PauliProduct::scalar(D_, num_qudits(), p.phase());
    for (size_t q = 0; q < num_qudits(); ++q) {
        if (p.x(q) != 0) {
            out = out * power(image_x_[q], p.x(q));
        }
        if (p.z(q) != 0) {
            out = out * power(image_z_[q], p.z(q));
        }
    }
    return out;
}

CliffordTableau compose(const CliffordTableau &t1, const CliffordTableau &t2) {
    if (t1.dim() != t2.dim() || t1.num_qudits() != t2.num_qudits()) {
        fail(ErrorCode::ShapeMismatch, "composing tableaux on different spaces");
    }
    std::vector<Gate> gates = t2.gates();
    gates.insert(gates.end(), t1.gates().begin(), t1.gates().end());
    return CliffordTableau::replay(t1.dim(), t1.num_qudits(), gates);
}

CliffordTableau inverse(const CliffordTableau &t) {
    return CliffordTableau::replay(t.dim(), t.num_qudits(), inverse_gates(t.gates(), t.dim()));
}

std::vector<Gate> single_qudit_to_x(int64_t a, int64_t b, size_t q, int64_t D) {
    a = mod(a, D);
    b = mod(b, D);
    std::vector<Gate> out;
    if (a == 0 && b == 0) {
        fail(ErrorCode::IdentityOnPart, "cannot map the identity to X");
    }
    if (a == 0) {
        // F: Z^b -> X^b
        out.push_back(Gate::fourier(q));
        a = b;
        b = 0;
    }
    if (b != 0) {
        // W^m: X^a Z^b -> X^a Z^{b + m a}
        int64_t m = mod(-mul_mod(b, inv_mod(a, D), D), D);
        out.insert(out.end(), static_cast<size_t>(m), Gate::phase(q));
    }
    if (a != 1) {
        out.push_back(Gate::smult(q, a));
    }
    return out;
}

std::vector<Gate> pivot_gates(const PauliProduct &p, std::span<const size_t> part, size_t target,
                              bool want_z, bool fix_phase) {
    const int64_t D = p.dim();
    if (!is_prime(D)) {
        fail(ErrorCode::NonPrimeD, "pivoting needs prime D, got " + std::to_string(D));
    }
    if (std::find(part.begin(), part.end(), target) == part.end()) {
        fail(ErrorCode::IndexOutOfRange, "pivot target is not in the part");
    }
    if (is_identity_on(p, part)) {
        fail(ErrorCode::IdentityOnPart, "Pauli acts trivially on the part");
    }
    std::vector<Gate> out;
    PauliProduct cur = p;
    auto push = [&](const Gate &g) {
        conjugate_by_gate(g, cur);
        out.push_back(g);
    };
    for (size_t q : part) {
        if (cur.acts_on(q)) {
            for (const auto &g : single_qudit_to_x(cur.x(q), cur.z(q), q, D)) {
                push(g);
            }
        }
    }
    if (!cur.acts_on(target)) {
        size_t s = *std::find_if(part.begin(), part.end(), [&](size_t q) { return cur.acts_on(q); });
        // X_s -> X_s X_t^{-1}
        push(Gate::cnot(s, target));
        if (D != 2) {
            push(Gate::smult(target, D - 1));
        }
    }
    for (size_t q : part) {
        if (q != target && cur.acts_on(q)) {
            push(Gate::cnot(target, q));
        }
    }
    if (fix_phase && cur.phase() % 2 == 0 && cur.phase() != 0) {
        push(Gate::pauli_z(target, cur.phase() / 2));
    }
    if (want_z) {
        push(Gate::fourier(target));
        if (D != 2) {
            push(Gate::smult(target, D - 1));
        }
    }
    return out;
}

CliffordTableau pivot_to_x1(const PauliProduct &p, std::span<const size_t> part, size_t target, bool want_z) {
    return CliffordTableau::replay(p.dim(), p.num_qudits(), pivot_gates(p, part, target, want_z));
}

}  // namespace qstab
