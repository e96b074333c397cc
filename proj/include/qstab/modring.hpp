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
#include <vector>

namespace qstab {

/// Canonical representative of `a` in [0, m).
inline int64_t mod(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline int64_t mul_mod(int64_t a, int64_t b, int64_t m) {
    __int128 r = static_cast<__int128>(mod(a, m)) * mod(b, m);
    return static_cast<int64_t>(r % m);
}

int64_t gcd(int64_t a, int64_t b);

/// Multiplicative inverse of `a` modulo `m` via extended Euclid.
/// Throws NotInvertible when gcd(a, m) != 1.
int64_t inv_mod(int64_t a, int64_t m);

/// Solves u*a + v*b = gcd(a, b); returns gcd.
int64_t extended_gcd(int64_t a, int64_t b, int64_t &u, int64_t &v);

bool is_prime(int64_t n);

struct PrimePower {
    int64_t prime;
    int exponent;

    int64_t value() const;
    bool operator==(const PrimePower &) const = default;
};

struct Modulus {
    int64_t D = 0;
    std::vector<PrimePower> factors;  // primes strictly increasing

    bool squarefree() const;
    bool prime() const {
        return factors.size() == 1 && factors[0].exponent == 1;
    }
    std::vector<int64_t> primes() const;
};

/// Trial-division factorization, 2 <= D <= 2^31.
Modulus factorize(int64_t D);

/// Coprime split D = d1 * d2 with r_i = (D / d_i)^{-1} mod d_i.
struct CrtSplit {
    int64_t d1 = 1;
    int64_t d2 = 1;
    int64_t r1 = 0;
    int64_t r2 = 0;

    static CrtSplit make(int64_t d1, int64_t d2);
    int64_t D() const {
        return d1 * d2;
    }
};

/// Inverse of a -> (a mod d1, a mod d2): returns a1 r1 d2 + a2 r2 d1 mod D.
int64_t crt_combine(int64_t a1, int64_t a2, const CrtSplit &split);

/// Idempotent e with e = 1 mod p and e = 0 mod D/p (D squarefree, p | D).
int64_t sylow_idempotent(int64_t D, int64_t p);

}  // namespace qstab
