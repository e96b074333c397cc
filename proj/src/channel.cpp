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

#include "qstab/channel.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "qstab/error.hpp"
#include "qstab/linalg.hpp"
#include "qstab/modring.hpp"

namespace qstab {

namespace {

std::vector<int64_t> exponent_row(const PauliProduct &p) {
    std::vector<int64_t> row(2 * p.num_qudits());
    for (size_t q = 0; q < p.num_qudits(); ++q) {
        row[2 * q] = p.x(q);
        row[2 * q + 1] = p.z(q);
    }
    return row;
}

PauliProduct from_row(int64_t D, size_t k, const std::vector<int64_t> &row) {
    PauliProduct p(D, k);
    for (size_t q = 0; q < k; ++q) {
        p.set_x(q, row[2 * q]);
        p.set_z(q, row[2 * q + 1]);
    }
    return p;
}

std::vector<size_t> shifted(std::span<const size_t> idx, size_t by) {
    std::vector<size_t> out;
    for (size_t q : idx) {
        out.push_back(q + by);
    }
    return out;
}

void require_prime(int64_t D) {
    if (!is_prime(D)) {
        fail(ErrorCode::NonPrimeD, "channel analysis needs prime D (got " + std::to_string(D) +
                                       "); split composite codes per prime with crt first");
    }
}

StabilizerGroup choi_unchecked(const CodeSpec &code) {
    const int64_t D = code.D;
    const size_t k = code.k;
    const size_t n = code.n;
    std::vector<size_t> outputs(n);
    for (size_t q = 0; q < n; ++q) {
        outputs[q] = k + q;
    }
    std::vector<PauliProduct> gens;
    const auto graph_state = from_graph(code.graph);
    for (const auto &g : graph_state.gens()) {
        auto h = embed(g, k + n, outputs);
        for (size_t l = 0; l < k; ++l) {
            h.set_z(l, -commutation_phase(g, code.coding[l]));
        }
        gens.push_back(std::move(h));
    }
    for (size_t l = 0; l < k; ++l) {
        auto h = embed(inverse(code.coding[l]), k + n, outputs);
        h.set_x(l, 1);
        gens.push_back(std::move(h));
    }
    try {
        return StabilizerGroup(D, k + n, std::move(gens));
    } catch (const Error &e) {
        fail(ErrorCode::InvalidCode, std::string("coding generators do not define a code: ") + e.what());
    }
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// Codes

void validate_code(const CodeSpec &code) {
    require_prime(code.D);
    if (code.graph.dim() != code.D || code.graph.num_vertices() != code.n) {
        fail(ErrorCode::InvalidCode, "graph does not match D and n");
    }
    if (code.coding.size() != code.k) {
        fail(ErrorCode::InvalidCode, "expected " + std::to_string(code.k) + " coding generators");
    }
    IntMatrix rows;
    for (const auto &f : code.coding) {
        if (f.dim() != code.D || f.num_qudits() != code.n) {
            fail(ErrorCode::InvalidCode, "coding generator has the wrong shape");
        }
        for (size_t q = 0; q < code.n; ++q) {
            if (f.x(q) != 0) {
                fail(ErrorCode::InvalidCode, "coding generator is not Z-type: " + f.str());
            }
        }
        if (f.phase() % 2 != 0) {
            fail(ErrorCode::InvalidCode, "coding generator phase must be even: " + f.str());
        }
        rows.push_back(exponent_row(f));
    }
    if (rref_mod_p(rows, 2 * code.n, code.D).size() != code.k) {
        fail(ErrorCode::InvalidCode, "coding generators are dependent");
    }
    auto choi = choi_unchecked(code);
    uint64_t want = 1;
    for (size_t i = 0; i < code.k; ++i) {
        want *= static_cast<uint64_t>(code.D);
    }
    std::vector<size_t> inputs(code.k);
    for (size_t l = 0; l < code.k; ++l) {
        inputs[l] = l;
    }
    if (reduced_rank(choi, inputs) != want) {
        fail(ErrorCode::InvalidCode, "coding kets are not mutually orthogonal");
    }
}

StabilizerGroup code_to_choi_state(const CodeSpec &code) {
    validate_code(code);
    return choi_unchecked(code);
}

GraphCode graph_choi_to_code(const GraphAdjacency &graph, size_t k) {
    const int64_t D = graph.dim();
    require_prime(D);
    const size_t total = graph.num_vertices();
    if (k > total) {
        fail(ErrorCode::IndexOutOfRange, "more inputs than vertices");
    }
    const size_t n = total - k;
    std::vector<size_t> inputs(k);
    for (size_t l = 0; l < k; ++l) {
        inputs[l] = l;
    }
    uint64_t want = 1;
    for (size_t i = 0; i < k; ++i) {
        want *= static_cast<uint64_t>(D);
    }
    if (reduced_rank(from_graph(graph), inputs) != want) {
        fail(ErrorCode::NotMaximallyMixedInput, "the inputs are not maximally mixed");
    }
    GraphCode out;
    out.code.D = D;
    out.code.n = n;
    out.code.k = k;
    out.code.graph = GraphAdjacency(D, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (graph.weight(k + i, k + j) != 0) {
                out.code.graph.set_edge(i, j, graph.weight(k + i, k + j));
            }
        }
    }
    for (size_t l = 0; l < k; ++l) {
        PauliProduct f(D, n);
        for (size_t j = 0; j < n; ++j) {
            f.set_z(j, graph.weight(l, k + j));
        }
        out.code.coding.push_back(std::move(f));
        for (size_t m = l + 1; m < k; ++m) {
            if (graph.weight(l, m) != 0) {
                out.input_unitary.push_back(Gate::cphase(l, m, graph.weight(l, m)));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------------------------
// Info groups

InfoGroup::InfoGroup(int64_t D, size_t k, const std::vector<PauliProduct> &gens) : D_(D), k_(k) {
    require_prime(D);
    IntMatrix rows;
    for (const auto &g : gens) {
        if (g.dim() != D || g.num_qudits() != k) {
            fail(ErrorCode::ShapeMismatch, "info group generator has the wrong shape");
        }
        rows.push_back(exponent_row(g));
    }
    rref_mod_p(rows, 2 * k, D);
    for (const auto &r : rows) {
        gens_.push_back(from_row(D, k, r));
    }
}

bool InfoGroup::contains(const PauliProduct &p) const {
    check_same_shape(p, PauliProduct(D_, k_));
    IntMatrix rows;
    for (const auto &g : gens_) {
        rows.push_back(exponent_row(g));
    }
    rows.push_back(exponent_row(p));
    return rref_mod_p(rows, 2 * k_, D_).size() == gens_.size();
}

InfoGroup centralizer_in_pauli(const InfoGroup &G) {
    const int64_t D = G.dim();
    const size_t k = G.num_qudits();
    IntMatrix form;
    for (const auto &g : G.gens()) {
        std::vector<int64_t> row(2 * k);
        for (size_t q = 0; q < k; ++q) {
            row[2 * q] = mod(-g.z(q), D);
            row[2 * q + 1] = g.x(q);
        }
        form.push_back(std::move(row));
    }
    std::vector<PauliProduct> gens;
    for (const auto &v : nullspace_mod_p(form, 2 * k, D)) {
        gens.push_back(from_row(D, k, v));
    }
    return InfoGroup(D, k, gens);
}

// ---------------------------------------------------------------------------------------------
// Analysis

ChannelAnalysis analyze_channel(const CodeSpec &code, std::span<const size_t> B, std::span<const size_t> C) {
    auto choi = code_to_choi_state(code);
    const size_t k = code.k;
    Partition part;
    part.parts.resize(3);
    for (size_t l = 0; l < k; ++l) {
        part.parts[0].push_back(l);
    }
    part.parts[1] = shifted(B, k);
    part.parts[2] = shifted(C, k);
    part.validate(k + code.n);

    auto nf = canonicalize(choi, part);
    ChannelAnalysis a;
    a.D = code.D;
    a.n = code.n;
    a.k = k;
    a.B.assign(B.begin(), B.end());
    a.C.assign(C.begin(), C.end());
    a.counts = nf.counts;
    a.form = nf.components[0];
    a.input_gates = a.form.part_gates[0];
    if (a.counts.m_A != 0) {
        fail(ErrorCode::InternalInvariant, "an input qudit was left unentangled");
    }
    std::vector<PauliProduct> gb, gc;
    for (const auto &f : a.form.factors) {
        const size_t q = f.qudits[0];
        if (f.kind == FactorKind::Ghz) {
            gb.push_back(PauliProduct::single_z(code.D, k, q));
            gc.push_back(PauliProduct::single_z(code.D, k, q));
        } else if (f.kind == FactorKind::Epr && q < k) {
            auto &dest = nf.partition.part_of()[f.qudits[1]] == 1 ? gb : gc;
            dest.push_back(PauliProduct::single_x(code.D, k, q));
            dest.push_back(PauliProduct::single_z(code.D, k, q));
        }
    }
    a.G_B = InfoGroup(code.D, k, gb);
    a.G_C = InfoGroup(code.D, k, gc);
    return a;
}

InfoGroup info_group(const ChannelAnalysis &analysis, Side side, Basis basis) {
    const InfoGroup &G = side == Side::B ? analysis.G_B : analysis.G_C;
    if (basis == Basis::Transformed) {
        return G;
    }
    // The isometry picks up U_A^T; p is transmitted iff (U_A^T)^dag p U_A^T is.
    auto inv = inverse(CliffordTableau::replay(analysis.D, analysis.k, analysis.input_gates));
    std::vector<PauliProduct> gens;
    for (const auto &g : G.gens()) {
        gens.push_back(complex_conjugate(inv.conjugate(complex_conjugate(g))));
    }
    return InfoGroup(analysis.D, analysis.k, gens);
}

bool verify_duality(const ChannelAnalysis &analysis) {
    for (auto basis : {Basis::Transformed, Basis::Original}) {
        auto gb = info_group(analysis, Side::B, basis);
        auto gc = info_group(analysis, Side::C, basis);
        if (centralizer_in_pauli(gb) != gc || centralizer_in_pauli(gc) != gb) {
            return false;
        }
    }
    return true;
}

std::string CapacityBounds::str() const {
    const double unit = std::log2(static_cast<double>(D));
    auto line = [&](const char *name, int count) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s >= %g (log2 units)\n", name, count * unit);
        return std::string(buf);
    };
    return line("Q_B", q_B) + line("C_B", c_B) + line("Q_C", q_C) + line("C_C", c_C);
}

CapacityBounds subcode_bounds(const CodeSpec &sub, std::span<const size_t> B, std::span<const size_t> C) {
    auto a = analyze_channel(sub, B, C);
    return CapacityBounds{sub.D, a.q_B(), a.c_B(), a.q_C(), a.c_C()};
}

// ---------------------------------------------------------------------------------------------
// Text formats

std::string format_code(const CodeSpec &code) {
    std::string graph = format_graph(code.graph);
    std::ostringstream out;
    out << "QSTAB1 code\n" << graph.substr(graph.find('\n') + 1);
    out << "CODING " << code.k << '\n';
    for (const auto &f : code.coding) {
        out << f.str() << '\n';
    }
    return out.str();
}

CodeSpec parse_code(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty() || lines[0] != "QSTAB1 code") {
        fail(ErrorCode::ParseError, "missing header line 'QSTAB1 code'");
    }
    size_t coding_at = 1;
    while (coding_at < lines.size() && lines[coding_at].rfind("CODING", 0) != 0) {
        ++coding_at;
    }
    if (coding_at == lines.size()) {
        fail(ErrorCode::ParseError, "missing 'CODING k' line");
    }
    std::string graph = "QSTAB1 graph\n";
    for (size_t i = 1; i < coding_at; ++i) {
        graph += lines[i] + '\n';
    }
    CodeSpec code;
    code.graph = parse_graph(graph);
    code.D = code.graph.dim();
    code.n = code.graph.num_vertices();
    long long k = -1;
    {
        std::istringstream in(lines[coding_at].substr(6));
        std::string extra;
        if (!(in >> k) || k < 0 || (in >> extra)) {
            fail(ErrorCode::ParseError, "bad CODING line: " + lines[coding_at]);
        }
    }
    code.k = static_cast<size_t>(k);
    if (lines.size() - coding_at - 1 != code.k) {
        fail(ErrorCode::ParseError, "expected " + std::to_string(k) + " coding lines");
    }
    for (size_t i = coding_at + 1; i < lines.size(); ++i) {
        auto f = PauliProduct::parse(lines[i], code.D);
        if (f.num_qudits() != code.n) {
            fail(ErrorCode::ParseError, "coding line has the wrong length: " + lines[i]);
        }
        code.coding.push_back(std::move(f));
    }
    return code;
}

namespace {

std::string index_list(const std::vector<size_t> &idx) {
    std::string out;
    for (size_t i = 0; i < idx.size(); ++i) {
        out += (i ? "," : "") + std::to_string(idx[i] + 1);
    }
    return out.empty() ? "-" : out;
}

std::vector<size_t> parse_index_list(const std::string &s) {
    if (s == "-") {
        return {};
    }
    auto p = Partition::parse(s);
    if (p.parts.size() != 1) {
        fail(ErrorCode::ParseError, "bad index list: " + s);
    }
    return p.parts[0];
}

void write_group(std::ostringstream &out, const std::string &label, const InfoGroup &G) {
    out << label << ' ' << G.rank() << '\n';
    for (const auto &g : G.gens()) {
        out << g.str() << '\n';
    }
}

}  // namespace

std::string format_channel_analysis(const ChannelAnalysis &a) {
    std::ostringstream out;
    out << "QSTAB1 channel\n";
    out << a.D << ' ' << a.n << ' ' << a.k << '\n';
    out << "B " << index_list(a.B) << '\n';
    out << "C " << index_list(a.C) << '\n';
    out << "counts " << a.counts.str() << '\n';
    out << "capacity Q_B=" << a.q_B() << " C_B=" << a.c_B() << " Q_C=" << a.q_C() << " C_C=" << a.c_C() << '\n';
    out << "input\n" << format_gates(a.input_gates) << "end\n";
    write_group(out, "G_B", a.G_B);
    write_group(out, "G_C", a.G_C);
    write_group(out, "G_B original", info_group(a, Side::B, Basis::Original));
    write_group(out, "G_C original", info_group(a, Side::C, Basis::Original));
    return out.str();
}

ChannelAnalysis parse_channel_analysis(std::string_view text) {
    auto lines = content_lines(text);
    size_t i = 0;
    auto next = [&]() -> const std::string & {
        if (i >= lines.size()) {
            fail(ErrorCode::ParseError, "channel report ends early");
        }
        return lines[i++];
    };
    auto keyed = [&](const std::string &key) {
        const auto &line = next();
        if (line.rfind(key + " ", 0) != 0) {
            fail(ErrorCode::ParseError, "expected '" + key + " ...', got: " + line);
        }
        return line.substr(key.size() + 1);
    };
    if (next() != "QSTAB1 channel") {
        fail(ErrorCode::ParseError, "missing header line 'QSTAB1 channel'");
    }
    ChannelAnalysis a;
    {
        std::istringstream in(next());
        long long D = 0, n = -1, k = -1;
        if (!(in >> D >> n >> k) || n < 0 || k < 0) {
            fail(ErrorCode::ParseError, "expected 'D n k'");
        }
        require_prime(D);
        a.D = D;
        a.n = static_cast<size_t>(n);
        a.k = static_cast<size_t>(k);
    }
    a.B = parse_index_list(keyed("B"));
    a.C = parse_index_list(keyed("C"));
    {
        std::istringstream in(keyed("counts"));
        std::string tok;
        int *slots[] = {&a.counts.m_A, &a.counts.m_B, &a.counts.m_C, &a.counts.m_AB,
                        &a.counts.m_AC, &a.counts.m_BC, &a.counts.m_ABC};
        for (int *s : slots) {
            if (!(in >> tok) || tok.find('=') == std::string::npos) {
                fail(ErrorCode::ParseError, "malformed counts line");
            }
            *s = std::stoi(tok.substr(tok.find('=') + 1));
        }
    }
    keyed("capacity");
    if (next() != "input") {
        fail(ErrorCode::ParseError, "expected 'input'");
    }
    for (const std::string *line = &next(); *line != "end"; line = &next()) {
        a.input_gates.push_back(Gate::parse(*line));
    }
    auto read_group = [&](const std::string &key) {
        long long m = std::stoll(keyed(key));
        std::vector<PauliProduct> gens;
        for (long long j = 0; j < m; ++j) {
            gens.push_back(PauliProduct::parse(next(), a.D));
        }
        return InfoGroup(a.D, a.k, gens);
    };
    a.G_B = read_group("G_B");
    a.G_C = read_group("G_C");
    auto ob = read_group("G_B original");
    auto oc = read_group("G_C original");
    if (ob != info_group(a, Side::B, Basis::Original) || oc != info_group(a, Side::C, Basis::Original)) {
        fail(ErrorCode::ParseError, "original-basis groups disagree with the input gates");
    }
    return a;
}

}  // namespace qstab
