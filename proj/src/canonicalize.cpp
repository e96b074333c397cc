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

#include "qstab/canonicalize.hpp"

#include <algorithm>
#include <sstream>

#include "qstab/crt.hpp"
#include "qstab/error.hpp"
#include "qstab/linalg.hpp"
#include "qstab/modring.hpp"

namespace qstab {

// ---------------------------------------------------------------------------------------------
// Partition, Counts, Factor

size_t Partition::num_qudits() const {
    size_t n = 0;
    for (const auto &p : parts) {
        n += p.size();
    }
    return n;
}

std::vector<int> Partition::part_of() const {
    std::vector<int> out(num_qudits(), -1);
    for (size_t k = 0; k < parts.size(); ++k) {
        for (size_t q : parts[k]) {
            if (q < out.size()) {
                out[q] = static_cast<int>(k);
            }
        }
    }
    return out;
}

void Partition::validate(size_t n) const {
    if (parts.size() != 2 && parts.size() != 3) {
        fail(ErrorCode::IndexOutOfRange, "a partition needs 2 or 3 parts, got " + std::to_string(parts.size()));
    }
    std::vector<bool> seen(n, false);
    size_t total = 0;
    for (const auto &p : parts) {
        for (size_t q : p) {
            if (q >= n || seen[q]) {
                fail(ErrorCode::IndexOutOfRange, "partition is not a disjoint cover of " + std::to_string(n) + " qudits");
            }
            seen[q] = true;
            ++total;
        }
    }
    if (total != n) {
        fail(ErrorCode::IndexOutOfRange, "partition does not cover all " + std::to_string(n) + " qudits");
    }
}

Partition Partition::parse(std::string_view text) {
    Partition out;
    std::string s(text);
    size_t start = 0;
    while (true) {
        size_t slash = s.find('/', start);
        std::string field = s.substr(start, slash == std::string::npos ? std::string::npos : slash - start);
        std::vector<size_t> part;
        std::stringstream in(field);
        for (std::string tok; std::getline(in, tok, ',');) {
            tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
            if (tok.empty()) {
                continue;
            }
            size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(tok, &used);
            } catch (const std::logic_error &) {
                used = 0;
            }
            if (used != tok.size() || v < 1) {
                fail(ErrorCode::ParseError, "bad qudit index '" + tok + "' in partition '" + s + "'");
            }
            part.push_back(static_cast<size_t>(v - 1));
        }
        out.parts.push_back(std::move(part));
        if (slash == std::string::npos) {
            break;
        }
        start = slash + 1;
    }
    return out;
}

std::string Partition::str() const {
    std::string out;
    for (size_t k = 0; k < parts.size(); ++k) {
        if (k > 0) {
            out += '/';
        }
        for (size_t i = 0; i < parts[k].size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += std::to_string(parts[k][i] + 1);
        }
    }
    return out;
}

std::string Counts::str() const {
    std::ostringstream out;
    out << "m_A=" << m_A << " m_B=" << m_B << " m_C=" << m_C << " m_AB=" << m_AB << " m_AC=" << m_AC
        << " m_BC=" << m_BC << " m_ABC=" << m_ABC;
    return out.str();
}

std::string Factor::str() const {
    std::string out = kind == FactorKind::Plus ? "PLUS" : (kind == FactorKind::Epr ? "EPR" : "GHZ");
    for (size_t q : qudits) {
        out += ' ' + std::to_string(q + 1);
    }
    return out;
}

std::vector<Gate> PrimeNormalForm::all_gates() const {
    std::vector<Gate> out;
    for (const auto &g : part_gates) {
        out.insert(out.end(), g.begin(), g.end());
    }
    return out;
}

StabilizerGroup normal_form_group(const PrimeNormalForm &nf, size_t n) {
    const int64_t p = nf.p;
    std::vector<PauliProduct> gens;
    for (const auto &f : nf.factors) {
        const auto &q = f.qudits;
        switch (f.kind) {
            case FactorKind::Plus:
                gens.push_back(PauliProduct::single_x(p, n, q[0]));
                break;
            case FactorKind::Epr: {
                PauliProduct xx(p, n), zz(p, n);
                xx.set_x(q[0], 1);
                xx.set_x(q[1], 1);
                zz.set_z(q[0], 1);
                zz.set_z(q[1], -1);
                gens.push_back(xx);
                gens.push_back(zz);
                break;
            }
            case FactorKind::Ghz: {
                PauliProduct xxx(p, n), zab(p, n), zac(p, n);
                for (size_t k = 0; k < 3; ++k) {
                    xxx.set_x(q[k], 1);
                }
                zab.set_z(q[0], 1);
                zab.set_z(q[1], -1);
                zac.set_z(q[0], 1);
                zac.set_z(q[2], -1);
                gens.push_back(xxx);
                gens.push_back(zab);
                gens.push_back(zac);
                break;
            }
        }
    }
    return StabilizerGroup(p, n, std::move(gens));
}

// ---------------------------------------------------------------------------------------------
// Extraction engine over a prime dimension

namespace {

[[noreturn]] void internal(const std::string &msg) {
    fail(ErrorCode::InternalInvariant, msg);
}

class Engine {
   public:
    Engine(const StabilizerGroup &S, std::vector<int> part_of, size_t num_parts)
        : p_(S.dim()), n_(S.num_qudits()), part_of_(std::move(part_of)), gens_(S.gens()), gates_(num_parts) {
        if (!is_prime(p_)) {
            fail(ErrorCode::NonPrimeD, "extraction needs prime D, got " + std::to_string(p_));
        }
        active_.assign(n_, false);
        for (const auto &g : gens_) {
            for (size_t q = 0; q < n_; ++q) {
                if (g.acts_on(q)) {
                    active_[q] = true;
                }
            }
        }
    }

    const std::vector<PauliProduct> &gens() const {
        return gens_;
    }
    const std::vector<std::vector<Gate>> &gates() const {
        return gates_;
    }
    const std::vector<Factor> &factors() const {
        return factors_;
    }

    std::vector<size_t> active_in(std::initializer_list<int> parts) const {
        std::vector<size_t> out;
        for (size_t q = 0; q < n_; ++q) {
            if (active_[q] && std::find(parts.begin(), parts.end(), part_of_[q]) != parts.end()) {
                out.push_back(q);
            }
        }
        return out;
    }

    /// Step 1 on one part; returns the extracted qudits.
    std::vector<size_t> extract_unentangled(int part) {
        std::vector<size_t> out;
        while (true) {
            auto loc = local_elements({part});
            if (loc.empty()) {
                break;
            }
            PauliProduct s = loc[0];
            auto qs = active_in({part});
            size_t t = first_support(s, qs);
            apply_all(pivot_gates(s, qs, t, false, true), {&s});
            if (s != PauliProduct::single_x(p_, n_, t)) {
                internal("pivot did not produce X_t: " + s.str());
            }
            split({t}, {s}, Factor{FactorKind::Plus, {t}});
            out.push_back(t);
        }
        return out;
    }

    /// Step 2 on parts (px, py); false when the part-px components of S_XY all commute.
    bool extract_epr(int px, int py) {
        auto elems = local_elements({px, py});
        auto X = active_in({px});
        auto Y = active_in({py});
        size_t j = 0, k = 0;
        int64_t alpha = 0;
        for (size_t a = 0; a < elems.size() && alpha == 0; ++a) {
            for (size_t b = a + 1; b < elems.size() && alpha == 0; ++b) {
                alpha = commutation_phase(restrict_to(elems[b], X), restrict_to(elems[a], X));
                j = a;
                k = b;
            }
        }
        if (alpha == 0) {
            return false;
        }
        PauliProduct sj = elems[j];
        PauliProduct sk = power(elems[k], inv_mod(alpha, p_));
        const size_t x1 = first_support(sj, X);
        const size_t y1 = first_support(sj, Y);

        // s_j -> Z_{x1} Z_{y1}^{-1}
        apply_all(pivot_gates(sj, X, x1, true, false), {&sj, &sk});
        apply_all(pivot_gates(sj, Y, y1, false, false), {&sj, &sk});
        apply(Gate::fourier(y1), {&sj, &sk});
        PauliProduct want_z = z_pair(x1, y1);
        fix_phase_with_x(sj, want_z, x1, 1, {&sj, &sk});

        // s_k -> X_{x1} X_{y1}
        if (sk.x(x1) != 1 || sk.x(y1) != 1) {
            internal("EPR partner lacks X on the pivot qudits");
        }
        shape_to_x(sk, X, x1, {&sj, &sk});
        shape_to_x(sk, Y, y1, {&sj, &sk});
        PauliProduct want_x = x_string({x1, y1});
        fix_phase_with_z(sk, want_x, x1, {&sj, &sk});
        if (proportional(sj, want_z) != std::optional<int64_t>(0)) {
            internal("EPR Z generator drifted");
        }
        split({x1, y1}, {sk, sj}, Factor{FactorKind::Epr, {x1, y1}});
        return true;
    }

    /// Step 3; false when nothing is left.
    bool extract_ghz() {
        auto A = active_in({0});
        auto B = active_in({1});
        auto C = active_in({2});
        if (A.size() != B.size() || B.size() != C.size()) {
            fail(ErrorCode::PreconditionViolated, "GHZ extraction needs equal part sizes, got " +
                                                      std::to_string(A.size()) + "/" + std::to_string(B.size()) +
                                                      "/" + std::to_string(C.size()));
        }
        if (A.empty()) {
            return false;
        }
        check_no_epr({0, 1});
        check_no_epr({0, 2});
        check_no_epr({1, 2});

        auto bc = local_elements({1, 2});
        if (bc.empty()) {
            internal("S_BC is trivial while qudits remain");
        }
        PauliProduct t1 = bc[0];
        const size_t b1 = first_support(t1, B);
        const size_t c1 = first_support(t1, C);
        apply_all(pivot_gates(t1, B, b1, true, false), {&t1});
        apply_all(pivot_gates(t1, C, c1, false, false), {&t1});
        apply(Gate::fourier(c1), {&t1});
        fix_phase_with_x(t1, z_pair(b1, c1), b1, 1, {&t1});

        // t2 in S_AB with B component exactly Z_{b1}
        auto ab = local_elements({0, 1});
        auto ech = pauli_echelon(ab, qudit_columns(B), p_);
        PauliProduct t2(p_, n_);
        PauliProduct residual = ech.reduce(PauliProduct::single_z(p_, n_, b1), &t2);
        if (!is_identity_on(residual, B)) {
            internal("no element of S_AB carries Z_b1 on B");
        }
        const size_t a1 = first_support(t2, A);
        apply_all(pivot_gates(t2, A, a1, false, false), {&t1, &t2});
        apply(Gate::fourier(a1), {&t1, &t2});
        PauliProduct want_t2(p_, n_);
        want_t2.set_z(a1, -1);
        want_t2.set_z(b1, 1);
        fix_phase_with_x(t2, want_t2, a1, p_ - 1, {&t1, &t2});

        // t3 with C component exactly X_{c1}
        auto ech3 = pauli_echelon(gens_, qudit_columns(C), p_);
        PauliProduct t3(p_, n_);
        residual = ech3.reduce(PauliProduct::single_x(p_, n_, c1), &t3);
        if (!is_identity_on(residual, C)) {
            internal("no element carries X_c1 on C");
        }
        if (t3.x(a1) != 1 || t3.x(b1) != 1) {
            internal("GHZ X generator lacks X on the pivot qudits");
        }
        shape_to_x(t3, A, a1, {&t1, &t2, &t3});
        shape_to_x(t3, B, b1, {&t1, &t2, &t3});
        fix_phase_with_z(t3, x_string({a1, b1, c1}), a1, {&t1, &t2, &t3});
        if (proportional(t1, z_pair(b1, c1)) != std::optional<int64_t>(0) ||
            proportional(t2, want_t2) != std::optional<int64_t>(0)) {
            internal("GHZ Z generators drifted");
        }
        split({a1, b1, c1}, {t3, z_pair(a1, b1), z_pair(a1, c1)}, Factor{FactorKind::Ghz, {a1, b1, c1}});
        return true;
    }

   private:
    size_t first_support(const PauliProduct &s, std::span<const size_t> qs) const {
        for (size_t q : qs) {
            if (s.acts_on(q)) {
                return q;
            }
        }
        internal("element is the identity on a part where it must act");
    }

    PauliProduct z_pair(size_t a, size_t b) const {
        PauliProduct z(p_, n_);
        z.set_z(a, 1);
        z.set_z(b, -1);
        return z;
    }

    PauliProduct x_string(std::initializer_list<size_t> qs) const {
        PauliProduct x(p_, n_);
        for (size_t q : qs) {
            x.set_x(q, 1);
        }
        return x;
    }

    void apply(const Gate &g, std::initializer_list<PauliProduct *> tracked) {
        int part = part_of_[g.q];
        if (g.two_qudit() && part_of_[g.r] != part) {
            internal("gate crosses parts: " + g.str());
        }
        for (auto &h : gens_) {
            conjugate_by_gate(g, h);
        }
        for (auto *t : tracked) {
            conjugate_by_gate(g, *t);
        }
        gates_[static_cast<size_t>(part)].push_back(g);
    }

    void apply_all(const std::vector<Gate> &gates, std::initializer_list<PauliProduct *> tracked) {
        for (const auto &g : gates) {
            apply(g, tracked);
        }
    }

    /// s is lambda^{2g} want with want carrying Z^{zpow} at q; X(q)^a adds 2 a zpow to the phase.
    void fix_phase_with_x(PauliProduct &s, const PauliProduct &want, size_t q, int64_t zpow,
                          std::initializer_list<PauliProduct *> tracked) {
        auto k = proportional(s, want);
        if (!k.has_value() || *k % 2 != 0) {
            internal("cannot normalize " + s.str() + " to " + want.str());
        }
        int64_t g = *k / 2;
        if (g != 0) {
            apply(Gate::pauli_x(q, mod(-g * inv_mod(zpow, p_), p_)), tracked);
        }
        if (s != want) {
            internal("phase fix failed for " + s.str());
        }
    }

    /// s is lambda^{2g} want with X at q; Z(q)^b adds -2b to the phase.
    void fix_phase_with_z(PauliProduct &s, const PauliProduct &want, size_t q,
                          std::initializer_list<PauliProduct *> tracked) {
        auto k = proportional(s, want);
        if (!k.has_value() || *k % 2 != 0) {
            internal("cannot normalize " + s.str() + " to " + want.str());
        }
        int64_t g = *k / 2;
        if (g != 0) {
            apply(Gate::pauli_z(q, g), tracked);
        }
        if (s != want) {
            internal("phase fix failed for " + s.str());
        }
    }

    /// Clears s on qs except for X at q0 (which must already have x = 1), leaving any pure Z
    /// at q0 of other tracked elements alone.
    void shape_to_x(PauliProduct &s, std::span<const size_t> qs, size_t q0,
                    std::initializer_list<PauliProduct *> tracked) {
        int64_t m = mod(-s.z(q0), p_);
        for (int64_t i = 0; i < m; ++i) {
            apply(Gate::phase(q0), tracked);
        }
        for (size_t q : qs) {
            if (q == q0 || !s.acts_on(q)) {
                continue;
            }
            apply_all(single_qudit_to_x(s.x(q), s.z(q), q, p_), tracked);
            apply(Gate::cnot(q0, q), tracked);
        }
        for (size_t q : qs) {
            if ((q == q0) != (s.x(q) == 1 && s.z(q) == 0) || (q != q0 && s.acts_on(q))) {
                internal("shaping left residue on qudit " + std::to_string(q + 1));
            }
        }
    }

    /// Elements acting only on active qudits of `parts`, in reduced echelon form.
    std::vector<PauliProduct> local_elements(std::initializer_list<int> parts) const {
        auto inside = active_in(parts);
        std::vector<size_t> off;
        for (size_t q = 0; q < n_; ++q) {
            if (active_[q] && std::find(inside.begin(), inside.end(), q) == inside.end()) {
                off.push_back(q);
            }
        }
        auto cols = qudit_columns(off);
        const size_t n_off = cols.size();
        auto in_cols = qudit_columns(inside);
        cols.insert(cols.end(), in_cols.begin(), in_cols.end());
        auto ech = pauli_echelon(gens_, cols, p_);
        std::vector<PauliProduct> out;
        for (size_t i = 0; i < ech.rank(); ++i) {
            if (std::find(cols.begin() + static_cast<std::ptrdiff_t>(n_off), cols.end(), ech.pivot_cols[i]) !=
                cols.end()) {
                out.push_back(ech.rows[i]);
            }
        }
        return out;
    }

    void check_no_epr(std::initializer_list<int> pair) const {
        auto elems = local_elements(pair);
        auto X = active_in({*pair.begin()});
        for (size_t a = 0; a < elems.size(); ++a) {
            for (size_t b = a + 1; b < elems.size(); ++b) {
                if (commutation_phase(restrict_to(elems[a], X), restrict_to(elems[b], X)) != 0) {
                    fail(ErrorCode::PreconditionViolated, "pairwise EPR extraction is incomplete");
                }
            }
        }
    }

    /// The state is <fgens> (x) S' with fgens supported on F; keep S' and retire F.
    void split(const std::vector<size_t> &F, const std::vector<PauliProduct> &fgens, Factor factor) {
        auto fech = pauli_echelon(fgens, qudit_columns(F), p_);
        std::vector<PauliProduct> reduced;
        for (const auto &g : gens_) {
            auto r = fech.reduce(g);
            if (!is_identity_on(r, F)) {
                internal("generator does not factor through the extracted block: " + r.str());
            }
            reduced.push_back(r);
        }
        for (size_t q : F) {
            active_[q] = false;
        }
        std::vector<size_t> rest;
        for (size_t q = 0; q < n_; ++q) {
            if (active_[q]) {
                rest.push_back(q);
            }
        }
        auto ech = pauli_echelon(std::move(reduced), qudit_columns(rest), p_);
        for (size_t i = ech.rank(); i < ech.rows.size(); ++i) {
            if (!ech.rows[i].is_identity()) {
                internal("nontrivial scalar left after splitting: " + ech.rows[i].str());
            }
        }
        ech.rows.resize(ech.rank());
        if (ech.rows.size() != rest.size()) {
            internal("remaining group is not a state on the remaining qudits");
        }
        gens_ = std::move(ech.rows);
        factors_.push_back(std::move(factor));
    }

    int64_t p_;
    size_t n_;
    std::vector<int> part_of_;
    std::vector<bool> active_;
    std::vector<PauliProduct> gens_;
    std::vector<std::vector<Gate>> gates_;
    std::vector<Factor> factors_;
};

std::vector<int> labels(size_t n, std::initializer_list<std::span<const size_t>> parts) {
    std::vector<int> out(n, static_cast<int>(parts.size()));
    int k = 0;
    for (auto part : parts) {
        for (size_t q : part) {
            if (q >= n) {
                fail(ErrorCode::IndexOutOfRange, "qudit " + std::to_string(q + 1) + " out of range");
            }
            out[q] = k;
        }
        ++k;
    }
    return out;
}

ExtractionStep step_result(const Engine &e, int64_t p, size_t n, const std::vector<size_t> &qudits) {
    std::vector<Gate> all;
    for (const auto &g : e.gates()) {
        all.insert(all.end(), g.begin(), g.end());
    }
    return ExtractionStep{StabilizerGroup(p, n, e.gens()), CliffordTableau::replay(p, n, all), qudits};
}

}  // namespace

Counts count_factors(const std::vector<Factor> &factors, const Partition &partition) {
    const auto part_of = partition.part_of();
    Counts c;
    for (const auto &f : factors) {
        switch (f.kind) {
            case FactorKind::Plus: {
                int k = part_of[f.qudits[0]];
                (k == 0 ? c.m_A : (k == 1 ? c.m_B : c.m_C))++;
                break;
            }
            case FactorKind::Epr: {
                int a = part_of[f.qudits[0]];
                int b = part_of[f.qudits[1]];
                if (a == 0 && b == 1) {
                    ++c.m_AB;
                } else if (a == 0 && b == 2) {
                    ++c.m_AC;
                } else {
                    ++c.m_BC;
                }
                break;
            }
            case FactorKind::Ghz:
                ++c.m_ABC;
                break;
        }
    }
    return c;
}

namespace {

PrimeNormalForm run_prime(const StabilizerGroup &S, const Partition &partition) {
    const auto part_of = partition.part_of();
    const size_t k = partition.parts.size();
    Engine e(S, part_of, k);
    for (size_t part = 0; part < k; ++part) {
        e.extract_unentangled(static_cast<int>(part));
    }
    const std::vector<std::pair<int, int>> pairs =
        k == 3 ? std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}} : std::vector<std::pair<int, int>>{{0, 1}};
    bool progress = true;
    while (progress) {
        progress = false;
        for (auto [x, y] : pairs) {
            while (e.extract_epr(x, y)) {
                progress = true;
            }
        }
    }
    if (k == 3) {
        while (e.extract_ghz()) {
        }
    }
    if (!e.gens().empty()) {
        internal("residual group is not empty after extraction");
    }
    PrimeNormalForm nf;
    nf.p = S.dim();
    nf.part_gates = e.gates();
    nf.factors = e.factors();
    nf.counts = count_factors(nf.factors, partition);
    if (conjugate(S, nf.all_gates()) != normal_form_group(nf, S.num_qudits())) {
        internal("conjugated group differs from the normal form");
    }
    return nf;
}

Counts min_counts(const Counts &a, const Counts &b) {
    return Counts{std::min(a.m_A, b.m_A),   std::min(a.m_B, b.m_B),   std::min(a.m_C, b.m_C),
                  std::min(a.m_AB, b.m_AB), std::min(a.m_AC, b.m_AC), std::min(a.m_BC, b.m_BC),
                  std::min(a.m_ABC, b.m_ABC)};
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// Public extraction steps

ExtractionStep extract_unentangled(const StabilizerGroup &S, std::span<const size_t> part) {
    Engine e(S, labels(S.num_qudits(), {part}), 2);
    auto qs = e.extract_unentangled(0);
    return step_result(e, S.dim(), S.num_qudits(), qs);
}

std::optional<ExtractionStep> extract_epr_pair(const StabilizerGroup &S, std::span<const size_t> part_x,
                                               std::span<const size_t> part_y) {
    Engine e(S, labels(S.num_qudits(), {part_x, part_y}), 3);
    if (!e.extract_epr(0, 1)) {
        return std::nullopt;
    }
    return step_result(e, S.dim(), S.num_qudits(), e.factors().back().qudits);
}

std::optional<ExtractionStep> extract_ghz(const StabilizerGroup &S, std::span<const size_t> A,
                                          std::span<const size_t> B, std::span<const size_t> C) {
    Engine e(S, labels(S.num_qudits(), {A, B, C}), 4);
    if (!e.extract_ghz()) {
        return std::nullopt;
    }
    return step_result(e, S.dim(), S.num_qudits(), e.factors().back().qudits);
}

// ---------------------------------------------------------------------------------------------
// Normal forms

std::vector<StabilizerGroup> prime_components(const StabilizerGroup &S) {
    if (!S.modulus().squarefree()) {
        fail(ErrorCode::NotSquarefree, "D = " + std::to_string(S.dim()) + " is not squarefree");
    }
    if (!S.is_state()) {
        fail(ErrorCode::NotAState, "group does not have D^n elements");
    }
    return decompose_state(S);
}

NormalForm canonicalize(const StabilizerGroup &S, const Partition &partition) {
    partition.validate(S.num_qudits());
    NormalForm nf;
    nf.D = S.dim();
    nf.n = S.num_qudits();
    nf.partition = partition;
    for (const auto &comp : prime_components(S)) {
        nf.components.push_back(run_prime(comp, partition));
    }
    nf.counts = nf.components[0].counts;
    for (const auto &c : nf.components) {
        nf.counts = min_counts(nf.counts, c.counts);
        nf.aligned = nf.aligned && c.counts == nf.components[0].counts;
    }
    return nf;
}

NormalForm bipartition_normal_form(const StabilizerGroup &S, std::span<const size_t> A, std::span<const size_t> B) {
    Partition p;
    p.parts = {std::vector<size_t>(A.begin(), A.end()), std::vector<size_t>(B.begin(), B.end())};
    return canonicalize(S, p);
}

NormalForm tripartition_normal_form(const StabilizerGroup &S, std::span<const size_t> A,
                                    std::span<const size_t> B, std::span<const size_t> C) {
    Partition p;
    p.parts = {std::vector<size_t>(A.begin(), A.end()), std::vector<size_t>(B.begin(), B.end()),
               std::vector<size_t>(C.begin(), C.end())};
    return canonicalize(S, p);
}

bool verify_normal_form(const StabilizerGroup &S, const NormalForm &nf) {
    auto comps = prime_components(S);
    if (comps.size() != nf.components.size()) {
        return false;
    }
    for (size_t i = 0; i < comps.size(); ++i) {
        const auto &c = nf.components[i];
        if (c.p != comps[i].dim()) {
            return false;
        }
        if (conjugate(comps[i], c.all_gates()) != normal_form_group(c, S.num_qudits())) {
            return false;
        }
    }
    return true;
}

int crossing_count(const PrimeNormalForm &nf, const Partition &partition, std::span<const int> cut_parts) {
    auto part_of = partition.part_of();
    auto on_side = [&](size_t q) {
        return std::find(cut_parts.begin(), cut_parts.end(), part_of[q]) != cut_parts.end();
    };
    int total = 0;
    for (const auto &f : nf.factors) {
        bool in = false, out = false;
        for (size_t q : f.qudits) {
            (on_side(q) ? in : out) = true;
        }
        if (in && out) {
            ++total;
        }
    }
    return total;
}

// ---------------------------------------------------------------------------------------------
// Text format

std::string format_normal_form(const NormalForm &nf) {
    std::ostringstream out;
    out << "QSTAB1 normalform\n";
    out << nf.D << ' ' << nf.n << '\n';
    out << "parts " << nf.partition.str() << '\n';
    out << "counts " << nf.counts.str() << '\n';
    out << "aligned " << (nf.aligned ? "yes" : "no") << '\n';
    for (const auto &c : nf.components) {
        out << "component " << c.p << '\n';
        out << "counts " << c.counts.str() << '\n';
        for (size_t k = 0; k < c.part_gates.size(); ++k) {
            out << "part " << static_cast<char>('A' + k) << '\n';
            out << format_gates(c.part_gates[k]);
            out << "end\n";
        }
        out << "factors\n";
        for (const auto &f : c.factors) {
            out << f.str() << '\n';
        }
        out << "end\n";
    }
    return out.str();
}

namespace {

Counts parse_counts(const std::string &line) {
    Counts c;
    std::istringstream in(line);
    std::string tok;
    in >> tok;
    if (tok != "counts") {
        fail(ErrorCode::ParseError, "expected a counts line: " + line);
    }
    int *slots[] = {&c.m_A, &c.m_B, &c.m_C, &c.m_AB, &c.m_AC, &c.m_BC, &c.m_ABC};
    const char *names[] = {"m_A", "m_B", "m_C", "m_AB", "m_AC", "m_BC", "m_ABC"};
    for (size_t i = 0; i < 7; ++i) {
        if (!(in >> tok)) {
            fail(ErrorCode::ParseError, "truncated counts line: " + line);
        }
        std::string prefix = std::string(names[i]) + "=";
        if (tok.rfind(prefix, 0) != 0) {
            fail(ErrorCode::ParseError, "expected " + prefix + " in counts line: " + line);
        }
        try {
            *slots[i] = std::stoi(tok.substr(prefix.size()));
        } catch (const std::logic_error &) {
            fail(ErrorCode::ParseError, "bad count in: " + line);
        }
    }
    return c;
}

}  // namespace

NormalForm parse_normal_form(std::string_view text) {
    auto lines = content_lines(text);
    size_t i = 0;
    auto next = [&]() -> const std::string & {
        if (i >= lines.size()) {
            fail(ErrorCode::ParseError, "normal form file ends early");
        }
        return lines[i++];
    };
    if (next() != "QSTAB1 normalform") {
        fail(ErrorCode::ParseError, "missing header line 'QSTAB1 normalform'");
    }
    NormalForm nf;
    {
        std::istringstream in(next());
        long long D = 0, n = -1;
        if (!(in >> D >> n) || n < 0) {
            fail(ErrorCode::ParseError, "expected 'D n' line");
        }
        nf.D = D;
        nf.n = static_cast<size_t>(n);
    }
    {
        const auto &line = next();
        if (line.rfind("parts ", 0) != 0) {
            fail(ErrorCode::ParseError, "expected a parts line");
        }
        nf.partition = Partition::parse(line.substr(6));
        nf.partition.validate(nf.n);
    }
    nf.counts = parse_counts(next());
    {
        const auto &line = next();
        if (line != "aligned yes" && line != "aligned no") {
            fail(ErrorCode::ParseError, "expected 'aligned yes|no'");
        }
        nf.aligned = line == "aligned yes";
    }
    while (i < lines.size()) {
        const auto &head = next();
        if (head.rfind("component ", 0) != 0) {
            fail(ErrorCode::ParseError, "expected a component line: " + head);
        }
        PrimeNormalForm c;
        c.p = std::stoll(head.substr(10));
        c.counts = parse_counts(next());
        for (size_t k = 0; k < nf.partition.parts.size(); ++k) {
            std::string want = std::string("part ") + static_cast<char>('A' + k);
            if (next() != want) {
                fail(ErrorCode::ParseError, "expected '" + want + "'");
            }
            std::vector<Gate> gates;
            for (const std::string *line = &next(); *line != "end"; line = &next()) {
                gates.push_back(Gate::parse(*line));
            }
            c.part_gates.push_back(std::move(gates));
        }
        if (next() != "factors") {
            fail(ErrorCode::ParseError, "expected 'factors'");
        }
        for (const std::string *line = &next(); *line != "end"; line = &next()) {
            std::istringstream in(*line);
            std::string kind;
            in >> kind;
            Factor f;
            size_t want = 0;
            if (kind == "PLUS") {
                f.kind = FactorKind::Plus;
                want = 1;
            } else if (kind == "EPR") {
                f.kind = FactorKind::Epr;
                want = 2;
            } else if (kind == "GHZ") {
                f.kind = FactorKind::Ghz;
                want = 3;
            } else {
                fail(ErrorCode::ParseError, "unknown factor: " + *line);
            }
            long long q = 0;
            while (in >> q) {
                if (q < 1 || static_cast<size_t>(q) > nf.n) {
                    fail(ErrorCode::ParseError, "factor qudit out of range: " + *line);
                }
                f.qudits.push_back(static_cast<size_t>(q - 1));
            }
            if (f.qudits.size() != want) {
                fail(ErrorCode::ParseError, "wrong qudit count in factor: " + *line);
            }
            c.factors.push_back(std::move(f));
        }
        nf.components.push_back(std::move(c));
    }
    if (nf.components.empty()) {
        fail(ErrorCode::ParseError, "normal form without components");
    }
    return nf;
}

}  // namespace qstab
