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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qstab/canonicalize.hpp"
#include "qstab/channel.hpp"
#include "qstab/cli.hpp"
#include "qstab/stabilizer.hpp"

using namespace qstab;
namespace fs = std::filesystem;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "qstab");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int status = cli::main_with_args(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

class Cli : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("qstab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override {
        fs::remove_all(dir_);
    }
    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }
    std::string write(const std::string &name, const std::string &text) const {
        std::ofstream(path(name)) << text;
        return path(name);
    }
    std::string read(const std::string &name) const {
        std::ifstream in(path(name));
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

    fs::path dir_;
};

std::string pentagon_code(const std::string &f) {
    return "QSTAB1 code\n2 5\n1 2 1\n2 3 1\n3 4 1\n4 5 1\n1 5 1\nCODING 1\n0 | 0 0 0 0 0 | " + f + "\n";
}

}  // namespace

TEST_F(Cli, CanonicalizeGhz) {
    auto state = write("ghz6.stab", format_stabilizer(ghz_group(6)));
    auto r = run_cli({"canonicalize", "--state", state, "--parts", "1/2/3", "--verify", "--emit-gates", path("g.txt")});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_NE(r.out.find("m_ABC=1"), std::string::npos);
    auto nf = parse_normal_form(r.out);
    EXPECT_EQ(nf.counts.m_ABC, 1);
    EXPECT_TRUE(verify_normal_form(ghz_group(6), nf));
    EXPECT_NE(read("g.txt").find("# component p=3"), std::string::npos);
}

TEST_F(Cli, CanonicalizeGraphInputAndBipartition) {
    GraphAdjacency g(3, 2);
    g.set_edge(0, 1, 2);
    auto state = write("edge.graph", format_graph(g));
    auto r = run_cli({"canonicalize", "--state", state, "--parts", "1/2", "--out", path("nf.txt")});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(parse_normal_form(read("nf.txt")).counts.m_AB, 1);
}

TEST_F(Cli, RandomStateIsSeedDeterministic) {
    auto a = run_cli({"random-state", "--D", "5", "--n", "4", "--seed", "7", "--scramble", "9"});
    auto b = run_cli({"random-state", "--D", "5", "--n", "4", "--seed", "7", "--scramble", "9"});
    auto c = run_cli({"random-state", "--D", "5", "--n", "4", "--seed", "8", "--scramble", "9"});
    ASSERT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, c.out);
    auto S = parse_stabilizer(a.out);
    EXPECT_TRUE(S.is_state());
    EXPECT_EQ(format_stabilizer(S), a.out);
}

TEST_F(Cli, RandomCodeRoundTripsThroughChannel) {
    auto r = run_cli({"random-code", "--D", "3", "--n", "4", "--k", "2", "--seed", "3", "--out", path("c.code")});
    ASSERT_EQ(r.status, 0) << r.err;
    auto code = parse_code(read("c.code"));
    EXPECT_EQ(format_code(code), read("c.code"));
    auto ch = run_cli({"channel", "--code", path("c.code"), "--B", "1,3", "--C", "2,4", "--verify", "--emit-choi",
                       path("choi.stab"), "--out", path("report.txt")});
    ASSERT_EQ(ch.status, 0) << ch.err;
    EXPECT_EQ(parse_stabilizer(read("choi.stab")), code_to_choi_state(code));
    auto v = run_cli({"oracle-verify", "--code", path("c.code"), "--channel", path("report.txt")});
    EXPECT_EQ(v.status, 0) << v.err;
    EXPECT_EQ(format_channel_analysis(parse_channel_analysis(read("report.txt"))), read("report.txt"));
}

TEST_F(Cli, PentagonBounds) {
    auto v0 = write("v0.code", pentagon_code("1 1 0 1 0"));
    auto r = run_cli({"channel", "--code", v0, "--B", "1,2", "--C", "3,4,5", "--bounds"});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_NE(r.out.find("Q_C >= 1 (log2 units)"), std::string::npos) << r.out;
    auto v1 = write("v1.code", pentagon_code("0 1 1 0 1"));
    r = run_cli({"channel", "--code", v1, "--B", "1,2", "--C", "3,4,5", "--bounds"});
    EXPECT_NE(r.out.find("C_B >= 1 (log2 units)"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("C_C >= 1 (log2 units)"), std::string::npos) << r.out;
}

TEST_F(Cli, CrtDecompose) {
    auto state = write("s.stab", format_stabilizer(ghz_group(15)));
    auto r = run_cli({"crt-decompose", "--state", state});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(r.out.rfind("QSTAB1 crt\n15 3 2\n", 0), 0u);
    EXPECT_NE(r.out.find("QSTAB1 stabilizer\n3 3"), std::string::npos);
    EXPECT_NE(r.out.find("QSTAB1 stabilizer\n5 3"), std::string::npos);
}

TEST_F(Cli, OracleVerifyCatchesTampering) {
    auto state = write("s.stab", run_cli({"random-state", "--D", "3", "--n", "4", "--seed", "5", "--scramble", "6"}).out);
    auto r = run_cli({"canonicalize", "--state", state, "--parts", "1,2/3/4", "--out", path("nf.txt")});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(run_cli({"oracle-verify", "--state", state, "--normal-form", path("nf.txt")}).status, 0);
    auto nf = parse_normal_form(read("nf.txt"));
    auto &gates = nf.components[0].part_gates[0];
    gates.push_back(Gate::fourier(0));
    write("bad.txt", format_normal_form(nf));
    auto bad = run_cli({"oracle-verify", "--state", state, "--normal-form", path("bad.txt")});
    EXPECT_EQ(bad.status, 1);
    EXPECT_NE(bad.err.find("OracleMismatch"), std::string::npos);
}

TEST_F(Cli, ExitCodes) {
    EXPECT_EQ(run_cli({}).status, 2);
    EXPECT_EQ(run_cli({"frobnicate"}).status, 2);
    EXPECT_EQ(run_cli({"canonicalize", "--state", path("missing")}).status, 2);
    EXPECT_EQ(run_cli({"canonicalize", "--state", path("missing"), "--parts", "1/2"}).status, 2);
    auto four = write("ghz4.stab", format_stabilizer(ghz_group(4)));
    auto r = run_cli({"canonicalize", "--state", four, "--parts", "1/2/3"});
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.err.find("NotSquarefree"), std::string::npos);
    auto three = write("ghz3.stab", format_stabilizer(ghz_group(3)));
    r = run_cli({"canonicalize", "--state", three, "--parts", "1/2"});
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.err.find("IndexOutOfRange"), std::string::npos);
    auto garbage = write("g.stab", "QSTAB1 nonsense\n");
    EXPECT_EQ(run_cli({"canonicalize", "--state", garbage, "--parts", "1/2"}).status, 1);
    auto bad_code = write("x.code", "QSTAB1 code\n3 1\nCODING 1\n0 | 1 | 0\n");
    r = run_cli({"channel", "--code", bad_code, "--B", "1", "--C", "-"});
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.err.find("InvalidCode"), std::string::npos);
    EXPECT_EQ(run_cli({"random-state", "--D", "1", "--n", "2"}).status, 2);
    EXPECT_EQ(run_cli({"--help"}).status, 0);
}
