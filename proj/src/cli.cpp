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

#include "qstab/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qstab/canonicalize.hpp"
#include "qstab/channel.hpp"
#include "qstab/crt.hpp"
#include "qstab/error.hpp"
#include "qstab/oracle.hpp"
#include "qstab/random.hpp"

namespace qstab::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    if (path.empty()) {
        throw UsageError("missing input file");
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) {
        throw UsageError("cannot write " + path);
    }
}

void emit(const RunConfig &c, std::ostream &out, const std::string &text) {
    if (c.out.empty()) {
        out << text;
    } else {
        write_file(c.out, text);
    }
}

/// Accepts either a stabilizer file or a graph file.
StabilizerGroup load_state(const std::string &path) {
    auto text = read_file(path);
    auto lines = content_lines(text);
    if (!lines.empty() && lines[0] == "QSTAB1 graph") {
        return from_graph(parse_graph(text));
    }
    return parse_stabilizer(text);
}

std::vector<size_t> index_list(const std::string &s) {
    if (s.empty() || s == "-") {
        return {};
    }
    auto p = Partition::parse(s);
    if (p.parts.size() != 1) {
        fail(ErrorCode::ParseError, "expected a comma-separated index list: " + s);
    }
    return p.parts[0];
}

// ---------------------------------------------------------------------------------------------
// Dense checks

bool dense_normal_form_ok(const StabilizerGroup &S, const NormalForm &nf, std::ostream &err) {
    if (nf.D != S.dim() || nf.n != S.num_qudits()) {
        err << "normal form is for D=" << nf.D << ", n=" << nf.n << '\n';
        return false;
    }
    if (!verify_normal_form(S, nf)) {
        err << "gates do not carry the state to the declared normal form\n";
        return false;
    }
    auto comps = prime_components(S);
    for (size_t i = 0; i < comps.size(); ++i) {
        const auto &c = nf.components[i];
        if (c.counts != count_factors(c.factors, nf.partition)) {
            err << "component p=" << c.p << ": counts disagree with its factors\n";
            return false;
        }
        if (oracle::hilbert_dim(c.p, S.num_qudits()) <= oracle::kMaxDim) {
            auto psi = oracle::apply_gates(c.all_gates(), c.p, S.num_qudits(), oracle::state_from_group(comps[i]));
            auto want = oracle::state_from_group(normal_form_group(c, S.num_qudits()));
            if (oracle::fidelity(psi, want) < 1.0 - oracle::kRankTol) {
                err << "component p=" << c.p << ": dense state differs from the normal form\n";
                return false;
            }
        }
    }
    if (oracle::hilbert_dim(S.dim(), S.num_qudits()) <= oracle::kMaxDim) {
        auto psi = oracle::state_from_group(S);
        for (int k = 0; k < static_cast<int>(nf.partition.parts.size()); ++k) {
            std::vector<int> cut{k};
            double predicted = 1;
            for (const auto &c : nf.components) {
                predicted *= std::pow(static_cast<double>(c.p), crossing_count(c, nf.partition, cut));
            }
            int rank = oracle::schmidt_rank(psi, S.dim(), S.num_qudits(), nf.partition.parts[static_cast<size_t>(k)]);
            if (rank != static_cast<int>(std::lround(predicted))) {
                err << "Schmidt rank " << rank << " across part " << static_cast<char>('A' + k)
                    << " disagrees with the normal form\n";
                return false;
            }
        }
    }
    return true;
}

bool dense_channel_ok(const CodeSpec &code, const ChannelAnalysis &a, std::ostream &err) {
    if (a.D != code.D || a.n != code.n || a.k != code.k) {
        err << "report does not match the code's D, n, k\n";
        return false;
    }
    const auto &m = a.counts;
    if (m.m_A != 0 || m.m_AB + m.m_AC + m.m_ABC != static_cast<int>(code.k) ||
        a.G_B.rank() != static_cast<size_t>(2 * m.m_AB + m.m_ABC) ||
        a.G_C.rank() != static_cast<size_t>(2 * m.m_AC + m.m_ABC)) {
        err << "counts and information groups are inconsistent\n";
        return false;
    }
    if (centralizer_in_pauli(a.G_B) != a.G_C || centralizer_in_pauli(a.G_C) != a.G_B) {
        err << "information groups are not dual\n";
        return false;
    }
    if (oracle::hilbert_dim(code.D, code.n + code.k) > oracle::kMaxDim) {
        err << "code too large for the dense oracle\n";
        return false;
    }
    auto psi = oracle::state_from_group(code_to_choi_state(code));
    auto shifted = [&](const std::vector<size_t> &idx) {
        std::vector<size_t> out;
        for (size_t q : idx) {
            out.push_back(q + code.k);
        }
        return out;
    };
    auto log_rank = [&](std::span<const size_t> part) {
        int r = oracle::schmidt_rank(psi, code.D, code.n + code.k, part);
        int e = 0;
        for (; r > 1; r /= static_cast<int>(code.D)) {
            ++e;
        }
        return e;
    };
    if (log_rank(shifted(a.B)) != m.m_AB + m.m_BC + m.m_ABC || log_rank(shifted(a.C)) != m.m_AC + m.m_BC + m.m_ABC) {
        err << "Choi-state Schmidt ranks disagree with the counts\n";
        return false;
    }
    for (auto [side, part] : {std::pair{Side::B, a.B}, std::pair{Side::C, a.C}}) {
        InfoGroup brute(code.D, code.k, oracle::transmitted_paulis(code, part));
        if (brute != info_group(a, side, Basis::Original)) {
            err << "information group " << (side == Side::B ? "G_B" : "G_C") << " differs from the dense channel\n";
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------------------------
// Verbs

int do_canonicalize(const RunConfig &c, std::ostream &out, std::ostream &err) {
    auto S = load_state(c.state);
    if (c.parts.empty()) {
        throw UsageError("--parts is required");
    }
    auto nf = canonicalize(S, Partition::parse(c.parts));
    if (c.verify && !dense_normal_form_ok(S, nf, err)) {
        err << "error: OracleMismatch\n";
        return 1;
    }
    if (!c.emit_gates.empty()) {
        std::string text;
        for (const auto &comp : nf.components) {
            text += "# component p=" + std::to_string(comp.p) + "\n" + format_gates(comp.all_gates());
        }
        write_file(c.emit_gates, text);
    }
    emit(c, out, format_normal_form(nf));
    return 0;
}

int do_crt(const RunConfig &c, std::ostream &out) {
    auto S = load_state(c.state);
    auto comps = prime_components(S);
    std::ostringstream text;
    text << "QSTAB1 crt\n" << S.dim() << ' ' << S.num_qudits() << ' ' << comps.size() << '\n';
    for (const auto &comp : comps) {
        text << format_stabilizer(comp);
    }
    emit(c, out, text.str());
    return 0;
}

int do_channel(const RunConfig &c, std::ostream &out, std::ostream &err) {
    auto code = parse_code(read_file(c.code));
    auto B = index_list(c.B);
    auto C = index_list(c.C);
    auto a = analyze_channel(code, B, C);
    if (c.verify && !dense_channel_ok(code, a, err)) {
        err << "error: OracleMismatch\n";
        return 1;
    }
    if (!c.emit_choi.empty()) {
        write_file(c.emit_choi, format_stabilizer(code_to_choi_state(code)));
    }
    std::string text = format_channel_analysis(a);
    if (c.bounds) {
        std::istringstream lines(subcode_bounds(code, B, C).str());
        for (std::string line; std::getline(lines, line);) {
            text += "bound " + line + '\n';
        }
    }
    emit(c, out, text);
    return 0;
}

int do_oracle_verify(const RunConfig &c, std::ostream &out, std::ostream &err) {
    bool ok = false;
    if (!c.normal_form.empty()) {
        auto S = load_state(c.state);
        ok = dense_normal_form_ok(S, parse_normal_form(read_file(c.normal_form)), err);
    } else if (!c.channel_report.empty()) {
        auto code = parse_code(read_file(c.code));
        ok = dense_channel_ok(code, parse_channel_analysis(read_file(c.channel_report)), err);
    } else {
        throw UsageError("oracle-verify needs --normal-form with --state, or --channel with --code");
    }
    if (!ok) {
        err << "error: OracleMismatch\n";
        return 1;
    }
    out << "OK\n";
    return 0;
}

int do_random_state(const RunConfig &c, std::ostream &out) {
    Rng rng(c.seed);
    emit(c, out, format_stabilizer(random_state(rng, c.D, c.n, c.scramble)));
    return 0;
}

int do_random_code(const RunConfig &c, std::ostream &out) {
    Rng rng(c.seed);
    emit(c, out, format_code(random_code(rng, c.D, c.n, c.k)));
    return 0;
}

}  // namespace

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
    try {
        const auto &v = config.verb;
        if (v == "canonicalize") {
            return do_canonicalize(config, out, err);
        }
        if (v == "crt-decompose") {
            return do_crt(config, out);
        }
        if (v == "channel") {
            return do_channel(config, out, err);
        }
        if (v == "oracle-verify") {
            return do_oracle_verify(config, out, err);
        }
        if (v == "random-state") {
            return do_random_state(config, out);
        }
        if (v == "random-code") {
            return do_random_code(config, out);
        }
        throw UsageError("unknown verb '" + v + "'");
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

int main_with_args(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Qudit stabilizer states: normal forms, CRT factors and code channels", "qstab"};
    app.require_subcommand(1);
    RunConfig c;

    auto *canon = app.add_subcommand("canonicalize", "EPR/GHZ normal form of a state over 2 or 3 parts");
    canon->add_option("--state", c.state, "stabilizer or graph file")->required();
    canon->add_option("--parts", c.parts, "parts such as 1,2/3/4 (1-based)")->required();
    canon->add_option("--out", c.out, "output file");
    canon->add_option("--emit-gates", c.emit_gates, "also write the local gates here");
    canon->add_flag("--verify", c.verify, "re-check against the dense oracle");

    auto *crt = app.add_subcommand("crt-decompose", "split a squarefree-D state into prime factors");
    crt->add_option("--state", c.state, "stabilizer or graph file")->required();
    crt->add_option("--out", c.out, "output file");

    auto *chan = app.add_subcommand("channel", "decompose a stabilizer code channel");
    chan->add_option("--code", c.code, "code file")->required();
    chan->add_option("--B", c.B, "outputs kept by the direct channel (1-based)")->required();
    chan->add_option("--C", c.C, "remaining outputs (1-based)")->required();
    chan->add_option("--out", c.out, "output file");
    chan->add_option("--emit-choi", c.emit_choi, "write the Choi state here");
    chan->add_flag("--bounds", c.bounds, "report capacity lower bounds");
    chan->add_flag("--verify", c.verify, "re-check against the dense oracle");

    auto *ov = app.add_subcommand("oracle-verify", "re-check a normal form or channel report densely");
    ov->add_option("--state", c.state, "state the normal form belongs to");
    ov->add_option("--normal-form", c.normal_form, "normal form file");
    ov->add_option("--code", c.code, "code the report belongs to");
    ov->add_option("--channel", c.channel_report, "channel report file");

    auto *rs = app.add_subcommand("random-state", "seeded random stabilizer state");
    auto *rc = app.add_subcommand("random-code", "seeded random graph code");
    for (auto *sub : {rs, rc}) {
        sub->add_option("--D", c.D, "qudit dimension")->required()->check(CLI::Range(int64_t{2}, int64_t{1} << 30));
        sub->add_option("--n", c.n, "number of qudits")->required()->check(CLI::Range(size_t{1}, size_t{4096}));
        sub->add_option("--seed", c.seed, "random seed");
        sub->add_option("--out", c.out, "output file");
    }
    rs->add_option("--scramble", c.scramble, "random single-qudit gates after the graph");
    rc->add_option("--k", c.k, "number of inputs")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << '\n' << "run 'qstab --help' for usage\n";
        return 2;
    }
    c.verb = app.get_subcommands().front()->get_name();
    return run(c, out, err);
}

}  // namespace qstab::cli
