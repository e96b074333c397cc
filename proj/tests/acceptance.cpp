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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qstab/canonicalize.hpp"
#include "qstab/channel.hpp"
#include "qstab/crt.hpp"
#include "qstab/error.hpp"
#include "qstab/oracle.hpp"
#include "qstab/random.hpp"

using namespace qstab;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    int failures = 0;

    void check(bool cond, const std::string &what) {
        if (!cond) {
            ok = false;
            if (failures++ < 3) {
                std::fprintf(stderr, "    failed: %s\n", what.c_str());
            }
        }
    }
};

int report(int id, const std::string &title, double limit_s, const std::function<void(Outcome &)> &body) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception &e) {
        o.ok = false;
        std::fprintf(stderr, "    exception: %s\n", e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && secs > limit_s) {
        o.ok = false;
        std::fprintf(stderr, "    too slow: %.2f s > %.0f s\n", secs, limit_s);
    }
    std::printf("criterion %2d: %s  %s (%s%.2f s)\n", id, o.ok ? "PASS" : "FAIL", title.c_str(),
                o.detail.empty() ? "" : (o.detail + ", ").c_str(), secs);
    std::fflush(stdout);
    return o.ok ? 0 : 1;
}

StabilizerGroup s1(int64_t D) {
    return StabilizerGroup(D, 3,
                           {PauliProduct(D, 0, {0, 0, 0}, {1, 0, -1}), PauliProduct(D, 0, {1, 0, 1}, {0, 0, 0}),
                            PauliProduct(D, 0, {0, 1, 0}, {0, 0, 0})});
}

StabilizerGroup s2(int64_t D) {
    return StabilizerGroup(D, 3,
                           {PauliProduct(D, 0, {0, 0, 0}, {1, 0, -1}), PauliProduct(D, 0, {1, 0, 1}, {0, -1, 0}),
                            PauliProduct(D, 0, {0, 1, 0}, {-1, 0, 0})});
}

Partition random_tripartition(Rng &rng, size_t n) {
    Partition p;
    p.parts.resize(3);
    for (size_t q = 0; q < n; ++q) {
        p.parts[static_cast<size_t>(uniform(rng, 3))].push_back(q);
    }
    return p;
}

size_t max_qudits(int64_t D) {
    size_t n = 1;
    for (uint64_t dim = static_cast<uint64_t>(D) * static_cast<uint64_t>(D); n < 6 && dim <= oracle::kMaxDim;
         dim *= static_cast<uint64_t>(D)) {
        ++n;
    }
    return n;
}

struct Case {
    StabilizerGroup S;
    Partition part;
};

/// The 200 seeded cases shared by criteria 3 and 4.
std::vector<Case> random_cases() {
    Rng rng(20260401);
    std::vector<Case> out;
    const int64_t dims[] = {2, 3, 5, 6};
    for (int i = 0; i < 200; ++i) {
        int64_t D = dims[i % 4];
        size_t n = 2 + static_cast<size_t>(uniform(rng, static_cast<int64_t>(max_qudits(D)) - 1));
        auto S = random_state(rng, D, n, 3 * n);
        out.push_back({S, random_tripartition(rng, n)});
    }
    return out;
}

PauliProduct zs(int64_t D, size_t n, std::initializer_list<size_t> qs) {
    PauliProduct p(D, n);
    for (size_t q : qs) {
        p.set_z(q, 1);
    }
    return p;
}

CodeSpec make_code(int64_t D, size_t n, std::vector<std::pair<size_t, size_t>> edges, std::vector<PauliProduct> f) {
    CodeSpec c;
    c.D = D;
    c.n = n;
    c.k = f.size();
    c.graph = GraphAdjacency(D, n);
    for (auto [i, j] : edges) {
        c.graph.set_edge(i, j, 1);
    }
    c.coding = std::move(f);
    return c;
}

std::string counts_str(const ChannelAnalysis &a) {
    return "(" + std::to_string(a.q_B()) + "," + std::to_string(a.c_B()) + "," + std::to_string(a.q_C()) + "," +
           std::to_string(a.c_C()) + ")";
}

}  // namespace

int main() {
    int failed = 0;
    const auto cases = random_cases();

    failed += report(1, "S1/S2 bipartitions give (m_AB, m_A, m_B) = (1, 1, 0)", 1.0, [](Outcome &o) {
        for (int64_t D : {2, 3, 5}) {
            for (const auto &S : {s1(D), s2(D)}) {
                auto c = canonicalize(S, Partition::parse("1,2/3")).counts;
                o.check(c.m_AB == 1 && c.m_A == 1 && c.m_B == 0, "D=" + std::to_string(D) + " counts " + c.str());
            }
        }
    });

    failed += report(2, "GHZ gives m_ABC = 1, EPR gives m_AB = 1", 1.0, [](Outcome &o) {
        for (int64_t D : {2, 3, 5, 6, 15}) {
            auto g = canonicalize(ghz_group(D), Partition::parse("1/2/3")).counts;
            o.check(g == Counts{0, 0, 0, 0, 0, 0, 1}, "GHZ D=" + std::to_string(D) + " " + g.str());
            auto e = canonicalize(epr_group(D), Partition::parse("1/2")).counts;
            o.check(e == Counts{0, 0, 0, 1, 0, 0, 0}, "EPR D=" + std::to_string(D) + " " + e.str());
        }
    });

    failed += report(3, "dense Schmidt ranks match the normal form on 200 random states", 300.0, [&](Outcome &o) {
        int cuts = 0;
        for (size_t i = 0; i < cases.size(); ++i) {
            const auto &[S, part] = cases[i];
            auto nf = canonicalize(S, part);
            auto psi = oracle::state_from_group(S);
            const std::vector<std::vector<int>> sides{{0}, {1}, {2}, {0, 1}};
            for (const auto &side : sides) {
                std::vector<size_t> qs;
                for (int k : side) {
                    qs.insert(qs.end(), part.parts[static_cast<size_t>(k)].begin(),
                              part.parts[static_cast<size_t>(k)].end());
                }
                long long predicted = 1;
                for (const auto &c : nf.components) {
                    for (int j = crossing_count(c, part, side); j > 0; --j) {
                        predicted *= c.p;
                    }
                }
                int rank = oracle::schmidt_rank(psi, S.dim(), S.num_qudits(), qs);
                o.check(rank == predicted, "case " + std::to_string(i) + " rank " + std::to_string(rank) +
                                               " vs " + std::to_string(predicted));
                ++cuts;
            }
        }
        o.detail = std::to_string(cuts) + " cuts";
    });

    failed += report(4, "returned gates carry each input exactly onto its normal form", 300.0, [&](Outcome &o) {
        for (size_t i = 0; i < cases.size(); ++i) {
            const auto &[S, part] = cases[i];
            auto nf = canonicalize(S, part);
            auto comps = prime_components(S);
            for (size_t j = 0; j < comps.size(); ++j) {
                const auto &c = nf.components[j];
                auto moved = canonical_form(conjugate(comps[j], c.all_gates()));
                auto target = canonical_form(normal_form_group(c, S.num_qudits()));
                o.check(moved == target, "case " + std::to_string(i) + " component p=" + std::to_string(c.p));
            }
        }
    });

    failed += report(5, "CRT factor states match the regrouped dense state", 0, [](Outcome &o) {
        Rng rng(5);
        double worst = 1.0;
        for (int64_t D : {6, 10}) {
            for (int trial = 0; trial < 50; ++trial) {
                size_t n = 1 + static_cast<size_t>(uniform(rng, D == 6 ? 4 : 3));
                auto S = random_state(rng, D, n, 2 * n);
                auto parts = decompose_state(S);
                auto mapped = oracle::crt_map_state(oracle::state_from_group(S), D, n, crt_moduli(D));
                auto prod = oracle::state_from_group(parts[0]);
                for (size_t j = 1; j < parts.size(); ++j) {
                    prod = oracle::kron(prod, oracle::state_from_group(parts[j]));
                }
                double f = oracle::fidelity(mapped, prod);
                worst = std::min(worst, f);
                o.check(f >= 1.0 - 1e-9, "D=" + std::to_string(D) + " fidelity " + std::to_string(f));
            }
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "min fidelity %.12f", worst);
        o.detail = buf;
    });

    failed += report(6, "identity and GHZ code capacities", 0, [](Outcome &o) {
        for (int64_t D : {2, 3, 5}) {
            for (size_t k : {1u, 2u}) {
                std::vector<PauliProduct> f;
                std::vector<size_t> all;
                for (size_t l = 0; l < k; ++l) {
                    f.push_back(PauliProduct::single_z(D, k, l));
                    all.push_back(l);
                }
                auto a = analyze_channel(make_code(D, k, {}, f), all, {});
                const int kk = static_cast<int>(k);
                o.check(a.q_B() == kk && a.c_B() == kk && a.q_C() == 0 && a.c_C() == 0,
                        "identity code D=" + std::to_string(D) + " " + counts_str(a));
            }
            std::vector<size_t> B{0}, C{1};
            auto g = analyze_channel(make_code(D, 2, {}, {zs(D, 2, {0, 1})}), B, C);
            o.check(g.q_B() == 0 && g.c_B() == 1 && g.q_C() == 0 && g.c_C() == 1,
                    "GHZ code D=" + std::to_string(D) + " " + counts_str(g));
        }
    });

    failed += report(7, "duality on 100 random codes; info groups match the dense channel", 0, [](Outcome &o) {
        Rng rng(7);
        int dense = 0;
        const int64_t dims[] = {2, 3, 5};
        for (int trial = 0; trial < 100; ++trial) {
            int64_t D = dims[trial % 3];
            size_t n = 1 + static_cast<size_t>(uniform(rng, 5));
            size_t k = static_cast<size_t>(uniform(rng, static_cast<int64_t>(std::min<size_t>(n, 2)) + 1));
            auto code = random_code(rng, D, n, k);
            std::vector<size_t> B, C;
            for (size_t q = 0; q < n; ++q) {
                (uniform(rng, 2) ? B : C).push_back(q);
            }
            auto a = analyze_channel(code, B, C);
            o.check(verify_duality(a), "duality, trial " + std::to_string(trial));
            if (std::pow(static_cast<double>(D), static_cast<double>(n + k)) <= 1024) {
                ++dense;
                InfoGroup brute(D, k, oracle::transmitted_paulis(code, B));
                o.check(brute == info_group(a, Side::B, Basis::Original), "G_B vs dense, trial " + std::to_string(trial));
            }
        }
        o.detail = std::to_string(dense) + " dense checks";
    });

    failed += report(8, "worked example: G_B = <lI, X1, Z1, Z3>, G_C = <lI, X2, Z2, Z3>", 0, [](Outcome &o) {
        for (int64_t D : {2, 3, 5}) {
            // outputs B1, B2, C1, C2
            auto code = make_code(D, 4, {}, {zs(D, 4, {0}), zs(D, 4, {2}), zs(D, 4, {1, 3})});
            std::vector<size_t> B{0, 1}, C{2, 3};
            auto a = analyze_channel(code, B, C);
            InfoGroup gb(D, 3, {PauliProduct::single_x(D, 3, 0), PauliProduct::single_z(D, 3, 0),
                                PauliProduct::single_z(D, 3, 2)});
            InfoGroup gc(D, 3, {PauliProduct::single_x(D, 3, 1), PauliProduct::single_z(D, 3, 1),
                                PauliProduct::single_z(D, 3, 2)});
            o.check(info_group(a, Side::B, Basis::Original) == gb, "G_B at D=" + std::to_string(D));
            o.check(info_group(a, Side::C, Basis::Original) == gc, "G_C at D=" + std::to_string(D));
            o.check(verify_duality(a), "duality at D=" + std::to_string(D));
        }
    });

    failed += report(9, "pentagon subcodes: V0 gives Q_C >= 1, V1 gives C_B, C_C >= 1", 0, [](Outcome &o) {
        const std::vector<std::pair<size_t, size_t>> ring{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
        std::vector<size_t> B{0, 1}, C{2, 3, 4};
        auto v0 = subcode_bounds(make_code(2, 5, ring, {zs(2, 5, {0, 1, 3})}), B, C);
        auto v1 = subcode_bounds(make_code(2, 5, ring, {zs(2, 5, {1, 2, 4})}), B, C);
        o.check(v0.q_C >= 1, "V0 Q_C = " + std::to_string(v0.q_C));
        o.check(v1.c_B >= 1 && v1.c_C >= 1, "V1 C_B, C_C = " + std::to_string(v1.c_B) + ", " + std::to_string(v1.c_C));
        o.detail = "V0 Q_C=" + std::to_string(v0.q_C) + " bit, V1 C_B=" + std::to_string(v1.c_B) +
                   " C_C=" + std::to_string(v1.c_C) + " bit";
    });

    failed += report(10, "50 within-part Clifford scrambles never change a count", 0, [&](Outcome &o) {
        Rng rng(10);
        for (size_t i = 0; i < 50; ++i) {
            const auto &[S, part] = cases[i * 4 % cases.size() + i % 4];
            auto before = canonicalize(S, part);
            auto after = canonicalize(conjugate(S, random_local_gates(rng, S.dim(), part.parts, 50)), part);
            bool same = before.counts == after.counts && before.aligned == after.aligned;
            for (size_t j = 0; j < before.components.size(); ++j) {
                same = same && before.components[j].counts == after.components[j].counts;
            }
            o.check(same, "case " + std::to_string(i));
        }
    });

    std::printf("%s: %d of 10 criteria failed\n", failed ? "FAIL" : "PASS", failed);
    return failed ? 1 : 0;
}
