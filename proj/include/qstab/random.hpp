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

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "qstab/channel.hpp"
#include "qstab/clifford.hpp"
#include "qstab/pauli.hpp"
#include "qstab/stabilizer.hpp"

namespace qstab {

/// Seeded generator. Draws use `rng() % m` so streams are identical on every platform.
using Rng = std::mt19937_64;

int64_t uniform(Rng &rng, int64_t m);
/// A uniformly chosen unit of Z_D.
int64_t random_unit(Rng &rng, int64_t D);

PauliProduct random_pauli(Rng &rng, int64_t D, size_t n, bool random_phase = true);

/// One elementary gate acting inside `qudits`; two-qudit gates only when |qudits| >= 2.
Gate random_gate(Rng &rng, int64_t D, std::span<const size_t> qudits);

/// `count` gates, each confined to one randomly chosen part.
std::vector<Gate> random_local_gates(Rng &rng, int64_t D, std::span<const std::vector<size_t>> parts, size_t count);

/// Each pair gets an independent uniform weight in Z_D.
GraphAdjacency random_graph(Rng &rng, int64_t D, size_t n);

/// Random graph state scrambled by `scramble` random single-qudit gates.
StabilizerGroup random_state(Rng &rng, int64_t D, size_t n, size_t scramble = 0);

/// Random [[n, k]]_D graph code: a random graph on k + n vertices with maximally mixed inputs,
/// read off as a code, with the coding generators randomly rebased. D prime, k <= n.
CodeSpec random_code(Rng &rng, int64_t D, size_t n, size_t k);

}  // namespace qstab
