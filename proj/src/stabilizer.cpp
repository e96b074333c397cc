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

#include "qstab/stabilizer.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qstab/error.hpp"
#include "qstab/linalg.hpp"

namespace qstab {

namespace {

void require_squarefree(const Modulus &m) {
    if (!m.squarefree()) {
        fail(ErrorCode::NotSquarefree, "D = " + std::to_string(m.D) + " is not squarefree");
    }
}

int valuation(int64_t v, int64_t p) {
    int k = 0;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    return k;
}

std::vector<size_t> all_qudits(size_t n) {
    std::vector<size_t> out(n);
    std::iota(out.begin(), out.end(), size_t{0});
    return out;
}

std::vector<size_t> complement(std::span<const size_t> part, size_t n) {
    std::vector<bool> in(n, false);
    for (size_t q : part) {
        if (q >= n) {
            fail(ErrorCode::IndexOutOfRange, "qudit " + std::to_string(q) + " out of range");
        }
        in[q] = true;
    }
    std::vector<size_t> out;
    for (size_t q = 0; q < n; ++q) {
        if (!in[q]) {
            out.push_back(q);
        }
    }
    return out;
}

std::vector<PauliProduct> components(std::span<const PauliProduct> gens, int64_t p) {
    std::vector<PauliProduct> out;
    for (const auto &g : gens) {
        out.push_back(primary_component(g, p));
    }
    return out;
}

PauliEchelon full_echelon(const StabilizerGroup &S, int64_t p) {
    auto cols = qudit_columns(all_qudits(S.num_qudits()));
    return pauli_echelon(components(S.gens(), p), cols, p);
}

}  // namespace

GraphAdjacency::GraphAdjacency(int64_t D, size_t n) : D_(D), n_(n), w_(n * n, 0) {
    if (D < 2) {
        fail(ErrorCode::InvalidDimension, "qudit dimension must be >= 2");
    }
}

void GraphAdjacency::set_edge(size_t i, size_t j, int64_t w) {
    if (i >= n_ || j >= n_) {
        fail(ErrorCode::IndexOutOfRange, "vertex out of range");
    }
    if (i == j) {
        fail(ErrorCode::ParseError, "graphs have no loops");
    }
    w_[i * n_ + j] = mod(w, D_);
    w_[j * n_ + i] = mod(w, D_);
}

std::vector<int> group_size_exponents(int64_t D, size_t n, std::span<const PauliProduct> gens) {
    Modulus m = factorize(D);
    std::vector<int> out;
    for (const auto &f : m.factors) {
        const int64_t q = f.value();
        IntMatrix rows;
        for (const auto &g : gens) {
            PauliProduct c = primary_component(g, q);
            std::vector<int64_t> row(2 * n);
            for (size_t col = 0; col < 2 * n; ++col) {
                row[col] = column_exponent(c, col) / (D / q);
            }
            rows.push_back(std::move(row));
        }
        out.push_back(module_size_exponent(std::move(rows), 2 * n, f.prime, f.exponent));
    }
    return out;
}

StabilizerGroup::StabilizerGroup(int64_t D, size_t n, std::vector<PauliProduct> gens)
    : D_(D), n_(n), mod_(factorize(D)), gens_(std::move(gens)) {
    for (const auto &g : gens_) {
        if (g.dim() != D || g.num_qudits() != n) {
            fail(ErrorCode::ShapeMismatch, "generator " + g.str() + " does not fit D=" + std::to_string(D) +
                                               ", n=" + std::to_string(n));
        }
        if (g.is_scalar()) {
            fail(ErrorCode::InvalidStabilizer, "generator " + g.str() + " is a multiple of the identity");
        }
        if (!power(g, order(g)).is_identity()) {
            fail(ErrorCode::InvalidStabilizer, "generator " + g.str() + " has g^order != I");
        }
    }
    for (size_t i = 0; i < gens_.size(); ++i) {
        for (size_t j = i + 1; j < gens_.size(); ++j) {
            if (!commute(gens_[i], gens_[j])) {
                fail(ErrorCode::InvalidStabilizer,
                     "generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " do not commute");
            }
        }
    }
    auto sizes = group_size_exponents(D, n, gens_);
    for (size_t f = 0; f < mod_.factors.size(); ++f) {
        int expected = 0;
        for (const auto &g : gens_) {
            expected += valuation(order(g), mod_.factors[f].prime);
        }
        if (expected != sizes[f]) {
            fail(ErrorCode::InvalidStabilizer, "generators are not independent");
        }
    }
}

std::vector<int> StabilizerGroup::size_exponents() const {
    return group_size_exponents(D_, n_, gens_);
}

bool StabilizerGroup::is_state() const {
    auto sizes = size_exponents();
    for (size_t f = 0; f < mod_.factors.size(); ++f) {
        if (sizes[f] != mod_.factors[f].exponent * static_cast<int>(n_)) {
            return false;
        }
    }
    return true;
}

bool StabilizerGroup::operator==(const StabilizerGroup &other) const {
    return D_ == other.D_ && n_ == other.n_ && canonical_form(*this) == canonical_form(other);
}

std::vector<PauliProduct> canonical_form(const StabilizerGroup &S) {
    require_squarefree(S.modulus());
    std::vector<PauliProduct> out;
    for (int64_t p : S.modulus().primes()) {
        auto ech = full_echelon(S, p);
        out.insert(out.end(), ech.rows.begin(), ech.rows.begin() + static_cast<std::ptrdiff_t>(ech.rank()));
    }
    return out;
}

bool contains(const StabilizerGroup &S, const PauliProduct &h) {
    require_squarefree(S.modulus());
    if (h.dim() != S.dim() || h.num_qudits() != S.num_qudits()) {
        fail(ErrorCode::ShapeMismatch, "Pauli does not fit the group");
    }
    if (!power(h, S.dim()).is_identity()) {
        return false;
    }
    for (int64_t p : S.modulus().primes()) {
        if (!full_echelon(S, p).reduce(primary_component(h, p)).is_identity()) {
            return false;
        }
    }
    return true;
}

StabilizerGroup subgroup_on_part(const StabilizerGroup &S, std::span<const size_t> part) {
    require_squarefree(S.modulus());
    auto off = complement(part, S.num_qudits());
    auto cols = qudit_columns(off);
    const size_t n_off_cols = cols.size();
    auto part_cols = qudit_columns(part);
    cols.insert(cols.end(), part_cols.begin(), part_cols.end());
    std::vector<PauliProduct> gens;
    for (int64_t p : S.modulus().primes()) {
        auto ech = pauli_echelon(components(S.gens(), p), cols, p);
        for (size_t i = 0; i < ech.rank(); ++i) {
            bool on_part = std::find(cols.begin() + static_cast<std::ptrdiff_t>(n_off_cols), cols.end(),
                                     ech.pivot_cols[i]) != cols.end();
            if (on_part) {
                gens.push_back(ech.rows[i]);
            }
        }
    }
    return StabilizerGroup(S.dim(), S.num_qudits(), std::move(gens));
}

uint64_t reduced_rank(const StabilizerGroup &S, std::span<const size_t> part) {
    auto sub = subgroup_on_part(S, part).size_exponents();
    const auto &factors = S.modulus().factors;
    unsigned __int128 rank = 1;
    for (size_t f = 0; f < factors.size(); ++f) {
        int e = factors[f].exponent * static_cast<int>(part.size()) - sub[f];
        for (int i = 0; i < e; ++i) {
            rank *= static_cast<uint64_t>(factors[f].prime);
            if (rank > UINT64_MAX) {
                fail(ErrorCode::TooLarge, "reduced rank overflows 64 bits");
            }
        }
    }
    return static_cast<uint64_t>(rank);
}

StabilizerGroup extend_generators(const StabilizerGroup &S_full, std::span<const PauliProduct> T) {
    if (!S_full.modulus().prime()) {
        fail(ErrorCode::NonPrimeD, "extend_generators needs prime D");
    }
    for (const auto &t : T) {
        if (!contains(S_full, t)) {
            fail(ErrorCode::NotSubgroup, t.str() + " is not an element of the group");
        }
    }
    std::vector<PauliProduct> cur(T.begin(), T.end());
    for (const auto &g : canonical_form(S_full)) {
        if (!contains(StabilizerGroup(S_full.dim(), S_full.num_qudits(), cur), g)) {
            cur.push_back(g);
        }
    }
    return StabilizerGroup(S_full.dim(), S_full.num_qudits(), std::move(cur));
}

StabilizerGroup tensor(const StabilizerGroup &S, const StabilizerGroup &T) {
    if (S.dim() != T.dim()) {
        fail(ErrorCode::ShapeMismatch, "tensor of groups with different dimensions");
    }
    std::vector<PauliProduct> gens;
    PauliProduct idS(S.dim(), S.num_qudits());
    PauliProduct idT(T.dim(), T.num_qudits());
    for (const auto &g : S.gens()) {
        gens.push_back(tensor(g, idT));
    }
    for (const auto &g : T.gens()) {
        gens.push_back(tensor(idS, g));
    }
    return StabilizerGroup(S.dim(), S.num_qudits() + T.num_qudits(), std::move(gens));
}

std::optional<std::pair<StabilizerGroup, StabilizerGroup>> try_factor(const StabilizerGroup &S,
                                                                      std::span<const size_t> left) {
    std::vector<size_t> l(left.begin(), left.end());
    std::sort(l.begin(), l.end());
    auto r = complement(l, S.num_qudits());
    auto SL = subgroup_on_part(S, l);
    auto SR = subgroup_on_part(S, r);
    auto a = SL.size_exponents();
    auto b = SR.size_exponents();
    auto total = S.size_exponents();
    for (size_t f = 0; f < total.size(); ++f) {
        if (a[f] + b[f] != total[f]) {
            return std::nullopt;
        }
    }
    std::vector<PauliProduct> gl, gr;
    for (const auto &g : SL.gens()) {
        gl.push_back(extract(g, l));
    }
    for (const auto &g : SR.gens()) {
        gr.push_back(extract(g, r));
    }
    return std::make_pair(StabilizerGroup(S.dim(), l.size(), std::move(gl)),
                          StabilizerGroup(S.dim(), r.size(), std::move(gr)));
}

StabilizerGroup from_graph(const GraphAdjacency &G) {
    const int64_t D = G.dim();
    const size_t n = G.num_vertices();
    std::vector<PauliProduct> gens;
    for (size_t i = 0; i < n; ++i) {
        PauliProduct g = PauliProduct::single_x(D, n, i);
        for (size_t j = 0; j < n; ++j) {
            g.set_z(j, -G.weight(i, j));
        }
        gens.push_back(std::move(g));
    }
    return StabilizerGroup(D, n, std::move(gens));
}

StabilizerGroup epr_group(int64_t D) {
    return StabilizerGroup(D, 2, {PauliProduct(D, 0, {1, 1}, {0, 0}), PauliProduct(D, 0, {0, 0}, {1, -1})});
}

StabilizerGroup ghz_group(int64_t D) {
    return StabilizerGroup(D, 3,
                           {PauliProduct(D, 0, {1, 1, 1}, {0, 0, 0}), PauliProduct(D, 0, {0, 0, 0}, {1, -1, 0}),
                            PauliProduct(D, 0, {0, 0, 0}, {1, 0, -1})});
}

PauliProduct embed(const PauliProduct &p, size_t n_total, std::span<const size_t> placement) {
    if (placement.size() != p.num_qudits()) {
        fail(ErrorCode::ShapeMismatch, "placement size differs from qudit count");
    }
    PauliProduct out = PauliProduct::scalar(p.dim(), n_total, p.phase());
    for (size_t i = 0; i < placement.size(); ++i) {
        out.set_x(placement[i], p.x(i));
        out.set_z(placement[i], p.z(i));
    }
    return out;
}

StabilizerGroup embed(const StabilizerGroup &S, size_t n_total, std::span<const size_t> placement) {
    std::vector<PauliProduct> gens;
    for (const auto &g : S.gens()) {
        gens.push_back(embed(g, n_total, placement));
    }
    return StabilizerGroup(S.dim(), n_total, std::move(gens));
}

StabilizerGroup conjugate(const StabilizerGroup &S, std::span<const Gate> gates) {
    std::vector<PauliProduct> gens = S.gens();
    for (const auto &g : gates) {
        for (auto &h : gens) {
            conjugate_by_gate(g, h);
        }
    }
    return StabilizerGroup(S.dim(), S.num_qudits(), std::move(gens));
}

std::vector<std::string> content_lines(std::string_view text) {
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
            line.pop_back();
        }
        if (line.find_first_not_of(" \t") != std::string::npos) {
            out.push_back(line);
        }
    }
    return out;
}

namespace {

std::vector<int64_t> read_ints(const std::string &line, size_t count) {
    std::istringstream in(line);
    std::vector<int64_t> out;
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
    if (out.size() != count) {
        fail(ErrorCode::ParseError, "expected " + std::to_string(count) + " integers in line: " + line);
    }
    return out;
}

void expect_magic(const std::vector<std::string> &lines, std::string_view kind) {
    std::string want = "QSTAB1 " + std::string(kind);
    if (lines.empty() || lines[0] != want) {
        fail(ErrorCode::ParseError, "missing header line '" + want + "'");
    }
}

}  // namespace

std::string format_stabilizer(const StabilizerGroup &S) {
    std::ostringstream out;
    out << "QSTAB1 stabilizer\n" << S.dim() << ' ' << S.num_qudits() << ' ' << S.gens().size() << '\n';
    for (const auto &g : S.gens()) {
        out << g.str() << '\n';
    }
    return out.str();
}

StabilizerGroup parse_stabilizer(std::string_view text) {
    auto lines = content_lines(text);
    expect_magic(lines, "stabilizer");
    if (lines.size() < 2) {
        fail(ErrorCode::ParseError, "missing 'D n k' line");
    }
    auto hdr = read_ints(lines[1], 3);
    if (hdr[1] < 0 || hdr[2] < 0 || lines.size() != 2 + static_cast<size_t>(hdr[2])) {
        fail(ErrorCode::ParseError, "generator count does not match the header");
    }
    std::vector<PauliProduct> gens;
    for (size_t i = 2; i < lines.size(); ++i) {
        gens.push_back(PauliProduct::parse(lines[i], hdr[0]));
        if (gens.back().num_qudits() != static_cast<size_t>(hdr[1])) {
            fail(ErrorCode::ParseError, "generator has the wrong number of qudits: " + lines[i]);
        }
    }
    return StabilizerGroup(hdr[0], static_cast<size_t>(hdr[1]), std::move(gens));
}

std::string format_graph(const GraphAdjacency &G) {
    std::ostringstream out;
    out << "QSTAB1 graph\n" << G.dim() << ' ' << G.num_vertices() << '\n';
    for (size_t i = 0; i < G.num_vertices(); ++i) {
        for (size_t j = i + 1; j < G.num_vertices(); ++j) {
            if (G.weight(i, j) != 0) {
                out << i + 1 << ' ' << j + 1 << ' ' << G.weight(i, j) << '\n';
            }
        }
    }
    return out.str();
}

GraphAdjacency parse_graph(std::string_view text) {
    auto lines = content_lines(text);
    expect_magic(lines, "graph");
    if (lines.size() < 2) {
        fail(ErrorCode::ParseError, "missing 'D n' line");
    }
    auto hdr = read_ints(lines[1], 2);
    if (hdr[1] < 0) {
        fail(ErrorCode::ParseError, "negative vertex count");
    }
    GraphAdjacency G(hdr[0], static_cast<size_t>(hdr[1]));
    for (size_t i = 2; i < lines.size(); ++i) {
        auto e = read_ints(lines[i], 3);
        if (e[0] < 1 || e[1] < 1 || e[0] > hdr[1] || e[1] > hdr[1]) {
            fail(ErrorCode::ParseError, "edge endpoint out of range: " + lines[i]);
        }
        G.set_edge(static_cast<size_t>(e[0] - 1), static_cast<size_t>(e[1] - 1), e[2]);
    }
    return G;
}

}  // namespace qstab
