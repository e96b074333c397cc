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

#include "qstab/random.hpp"

#include "qstab/error.hpp"
#include "qstab/modring.hpp"

namespace qstab {

int64_t uniform(Rng &rng, int64_t m) {
    return static_cast<int64_t>(rng() % static_cast<uint64_t>(m));
}

int64_t random_unit(Rng &rng, int64_t D) {
    while (true) {
        int64_t a = uniform(rng, D);
        if (gcd(a, D) == 1) {
            return a;
        }
    }
}

PauliProduct random_pauli(Rng &rng, int64_t D, size_t n, bool random_phase) {
    std::vector<int64_t> xs(n), zs(n);
    for (size_t i = 0; i < n; ++i) {
        xs[i] = uniform(rng, D);
        zs[i] = uniform(rng, D);
    }
    int64_t phase = random_phase ? uniform(rng, 2 * D) : 0;
    return PauliProduct(D, phase, std::move(xs), std::move(zs));
}

Gate random_gate(Rng &rng, int64_t D, std::span<const size_t> qudits) {
    int kinds = qudits.size() >= 2 ? 7 : 5;
    size_t q = qudits[static_cast<size_t>(uniform(rng, static_cast<int64_t>(qudits.size())))];
    switch (uniform(rng, kinds)) {
        case 0:
            return Gate::fourier(q);
        case 1:
            return Gate::smult(q, random_unit(rng, D));
        case 2:
            return Gate::phase(q);
        case 3:
            return Gate::pauli_x(q, uniform(rng, D));
        case 4:
            return Gate::pauli_z(q, uniform(rng, D));
        default:
            break;
    }
    size_t r = q;
    while (r == q) {
        r = qudits[static_cast<size_t>(uniform(rng, static_cast<int64_t>(qudits.size())))];
    }
    if (uniform(rng, 2) == 0) {
        return Gate::cphase(q, r, 1 + uniform(rng, D - 1));
    }
    return Gate::cnot(q, r);
}

std::vector<Gate> random_local_gates(Rng &rng, int64_t D, std::span<const std::vector<size_t>> parts, size_t count) {
    std::vector<const std::vector<size_t> *> nonempty;
    for (const auto &p : parts) {
        if (!p.empty()) {
            nonempty.push_back(&p);
        }
    }
    std::vector<Gate> out;
    if (nonempty.empty()) {
        return out;
    }
    for (size_t i = 0; i < count; ++i) {
        const auto &part = *nonempty[static_cast<size_t>(uniform(rng, static_cast<int64_t>(nonempty.size())))];
        out.push_back(random_gate(rng, D, part));
    }
    return out;
}

GraphAdjacency random_graph(Rng &rng, int64_t D, size_t n) {
    GraphAdjacency G(D, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            G.set_edge(i, j, uniform(rng, D));
        }
    }
    return G;
}

StabilizerGroup random_state(Rng &rng, int64_t D, size_t n, size_t scramble) {
    auto S = from_graph(random_graph(rng, D, n));
    if (n == 0 || scramble == 0) {
        return S;
    }
    std::vector<Gate> gates;
    for (size_t i = 0; i < scramble; ++i) {
        size_t q = static_cast<size_t>(uniform(rng, static_cast<int64_t>(n)));
        gates.push_back(random_gate(rng, D, std::span<const size_t>(&q, 1)));
    }
    return conjugate(S, gates);
}

}  // namespace qstab

namespace qstab {

CodeSpec random_code(Rng &rng, int64_t D, size_t n, size_t k) {
    if (k > n) {
        fail(ErrorCode::InvalidCode, "a code cannot have more inputs than outputs");
    }
    std::vector<size_t> inputs(k);
    for (size_t l = 0; l < k; ++l) {
        inputs[l] = l;
    }
    uint64_t want = 1;
    for (size_t i = 0; i < k; ++i) {
        want *= static_cast<uint64_t>(D);
    }
    for (int attempt = 0; attempt < 10000; ++attempt) {
        auto graph = random_graph(rng, D, k + n);
        if (reduced_rank(from_graph(graph), inputs) != want) {
            continue;
        }
        auto code = graph_choi_to_code(graph, k).code;
        for (size_t l = 0; l < k; ++l) {
            for (size_t m = 0; m < k; ++m) {
                if (m != l) {
                    code.coding[l] = code.coding[l] * power(code.coding[m], uniform(rng, D));
                }
            }
        }
        return code;
    }
    fail(ErrorCode::InternalInvariant, "no random code found");
}

}  // namespace qstab
