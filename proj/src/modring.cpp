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

#include "qstab/modring.hpp"

#include <string>

#include "qstab/error.hpp"

namespace qstab {

int64_t gcd(int64_t a, int64_t b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int64_t extended_gcd(int64_t a, int64_t b, int64_t &u, int64_t &v) {
    int64_t old_r = a, r = b;
    int64_t old_u = 1, cur_u = 0;
    int64_t old_v = 0, cur_v = 1;
    while (r != 0) {
        int64_t q = old_r / r;
        int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_u - q * cur_u;
        old_u = cur_u;
        cur_u = t;
        t = old_v - q * cur_v;
        old_v = cur_v;
        cur_v = t;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_u = -old_u;
        old_v = -old_v;
    }
    u = old_u;
    v = old_v;
    return old_r;
}

int64_t inv_mod(int64_t a, int64_t m) {
    if (m < 2) {
        fail(ErrorCode::InvalidDimension, "modulus must be >= 2, got " + std::to_string(m));
    }
    int64_t u = 0, v = 0;
    int64_t g = extended_gcd(mod(a, m), m, u, v);
    if (g != 1) {
        fail(ErrorCode::NotInvertible,
             std::to_string(a) + " has no inverse mod " + std::to_string(m));
    }
    return mod(u, m);
}

bool is_prime(int64_t n) {
    if (n < 2) {
        return false;
    }
    for (int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

int64_t PrimePower::value() const {
    int64_t v = 1;
    for (int i = 0; i < exponent; ++i) {
        v *= prime;
    }
    return v;
}

bool Modulus::squarefree() const {
    for (const auto &f : factors) {
        if (f.exponent != 1) {
            return false;
        }
    }
    return true;
}

std::vector<int64_t> Modulus::primes() const {
    std::vector<int64_t> out;
    out.reserve(factors.size());
    for (const auto &f : factors) {
        out.push_back(f.prime);
    }
    return out;
}

Modulus factorize(int64_t D) {
    if (D < 2 || D > (int64_t{1} << 31)) {
        fail(ErrorCode::InvalidDimension, "dimension must lie in [2, 2^31], got " + std::to_string(D));
    }
    Modulus m;
    m.D = D;
    int64_t rest = D;
    for (int64_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) {
            continue;
        }
        PrimePower f{p, 0};
        while (rest % p == 0) {
            rest /= p;
            ++f.exponent;
        }
        m.factors.push_back(f);
    }
    if (rest > 1) {
        m.factors.push_back({rest, 1});
    }
    return m;
}

CrtSplit CrtSplit::make(int64_t d1, int64_t d2) {
    if (d1 < 1 || d2 < 1 || gcd(d1, d2) != 1) {
        fail(ErrorCode::NotCoprime,
             "CRT split needs coprime factors, got " + std::to_string(d1) + " and " + std::to_string(d2));
    }
    CrtSplit s;
    s.d1 = d1;
    s.d2 = d2;
    s.r1 = d1 == 1 ? 0 : inv_mod(d2 % d1, d1);
    s.r2 = d2 == 1 ? 0 : inv_mod(d1 % d2, d2);
    return s;
}

int64_t crt_combine(int64_t a1, int64_t a2, const CrtSplit &split) {
    int64_t D = split.D();
    int64_t t1 = mul_mod(mul_mod(a1, split.r1, D), split.d2, D);
    int64_t t2 = mul_mod(mul_mod(a2, split.r2, D), split.d1, D);
    return mod(t1 + t2, D);
}

int64_t sylow_idempotent(int64_t D, int64_t p) {
    int64_t rest = D / p;
    return mul_mod(rest, inv_mod(rest % p, p), D);
}

}  // namespace qstab
