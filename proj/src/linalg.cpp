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

#include "qstab/linalg.hpp"

#include <algorithm>

#include "qstab/error.hpp"
#include "qstab/modring.hpp"

namespace qstab {

std::vector<size_t> rref_mod_p(IntMatrix &m, size_t ncols, int64_t p) {
    for (auto &row : m) {
        for (auto &v : row) {
            v = mod(v, p);
        }
    }
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < m.size(); ++c) {
        size_t i = r;
        while (i < m.size() && m[i][c] == 0) {
            ++i;
        }
        if (i == m.size()) {
            continue;
        }
        std::swap(m[i], m[r]);
        int64_t inv = inv_mod(m[r][c], p);
        for (auto &v : m[r]) {
            v = mul_mod(v, inv, p);
        }
        for (size_t j = 0; j < m.size(); ++j) {
            if (j == r || m[j][c] == 0) {
                continue;
            }
            int64_t k = m[j][c];
            for (size_t t = 0; t < ncols; ++t) {
                m[j][t] = mod(m[j][t] - mul_mod(k, m[r][t], p), p);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

IntMatrix nullspace_mod_p(IntMatrix m, size_t ncols, int64_t p) {
    auto pivots = rref_mod_p(m, ncols, p);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivots) {
        is_pivot[c] = true;
    }
    IntMatrix basis;
    for (size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        std::vector<int64_t> v(ncols, 0);
        v[f] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) {
            v[pivots[i]] = mod(-m[i][f], p);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

int module_size_exponent(IntMatrix rows, size_t ncols, int64_t p, int e) {
    int64_t q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
    }
    auto valuation = [&](int64_t v) {
        int k = 0;
        while (v % p == 0) {
            v /= p;
            ++k;
        }
        return k;
    };
    for (auto &row : rows) {
        for (auto &v : row) {
            v = mod(v, q);
        }
    }
    std::vector<bool> col_done(ncols, false);
    int total = 0;
    size_t r = 0;
    while (r < rows.size()) {
        int best = e;
        size_t bi = 0, bj = 0;
        for (size_t i = r; i < rows.size(); ++i) {
            for (size_t j = 0; j < ncols; ++j) {
                if (!col_done[j] && rows[i][j] != 0) {
                    int v = valuation(rows[i][j]);
                    if (v < best) {
                        best = v;
                        bi = i;
                        bj = j;
                    }
                }
            }
        }
        if (best == e) {
            break;
        }
        std::swap(rows[r], rows[bi]);
        int64_t pv = 1;
        for (int i = 0; i < best; ++i) {
            pv *= p;
        }
        int64_t unit = inv_mod(rows[r][bj] / pv, q);
        for (auto &v : rows[r]) {
            v = mul_mod(v, unit, q);
        }
        for (size_t i = r + 1; i < rows.size(); ++i) {
            int64_t k = rows[i][bj] / pv;
            if (k == 0) {
                continue;
            }
            for (size_t t = 0; t < ncols; ++t) {
                rows[i][t] = mod(rows[i][t] - mul_mod(k, rows[r][t], q), q);
            }
        }
        // The matching column operations only touch row r, which is retired here.
        col_done[bj] = true;
        total += e - best;
        ++r;
    }
    return total;
}

std::vector<size_t> qudit_columns(std::span<const size_t> qudits) {
    std::vector<size_t> cols;
    for (size_t q : qudits) {
        cols.push_back(2 * q);
        cols.push_back(2 * q + 1);
    }
    return cols;
}

int64_t column_exponent(const PauliProduct &g, size_t col) {
    return col % 2 == 0 ? g.x(col / 2) : g.z(col / 2);
}

PauliProduct primary_component(const PauliProduct &g, int64_t q) {
    const int64_t D = g.dim();
    if (D % q != 0 || gcd(q, D / q) != 1) {
        fail(ErrorCode::NotCoprime, std::to_string(q) + " is not a unitary divisor of " + std::to_string(D));
    }
    if (q == 1) {
        return PauliProduct(D, g.num_qudits());
    }
    if (q == D) {
        return g;
    }
    int64_t rest = D / q;
    int64_t e = mul_mod(rest, inv_mod(rest % q, q), D);
    return power(g, e);
}

int64_t component_value(const PauliProduct &g, size_t col, int64_t p) {
    return mod(column_exponent(g, col) / (g.dim() / p), p);
}

PauliProduct PauliEchelon::reduce(const PauliProduct &h, PauliProduct *used) const {
    PauliProduct r = h;
    PauliProduct u(h.dim(), h.num_qudits());
    for (size_t i = 0; i < rank(); ++i) {
        int64_t k = component_value(r, pivot_cols[i], p);
        if (k == 0) {
            continue;
        }
        r = r * power(rows[i], p - k);
        u = u * power(rows[i], k);
    }
    if (used != nullptr) {
        *used = u;
    }
    return r;
}

PauliEchelon pauli_echelon(std::vector<PauliProduct> rows, std::span<const size_t> col_order, int64_t p) {
    PauliEchelon ech;
    ech.p = p;
    size_t r = 0;
    for (size_t c : col_order) {
        if (r == rows.size()) {
            break;
        }
        size_t i = r;
        while (i < rows.size() && component_value(rows[i], c, p) == 0) {
            ++i;
        }
        if (i == rows.size()) {
            continue;
        }
        std::rotate(rows.begin() + static_cast<std::ptrdiff_t>(r), rows.begin() + static_cast<std::ptrdiff_t>(i),
                    rows.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        rows[r] = power(rows[r], inv_mod(component_value(rows[r], c, p), p));
        for (size_t j = 0; j < rows.size(); ++j) {
            if (j == r) {
                continue;
            }
            int64_t k = component_value(rows[j], c, p);
            if (k != 0) {
                rows[j] = rows[j] * power(rows[r], p - k);
            }
        }
        ech.pivot_cols.push_back(c);
        ++r;
    }
    ech.rows = std::move(rows);
    return ech;
}

}  // namespace qstab
