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

#include "qstab/oracle.hpp"

#include <cmath>
#include <numbers>

#include "qstab/error.hpp"
#include "qstab/modring.hpp"

namespace qstab::oracle {

namespace {

std::vector<int64_t> digits_of(uint64_t idx, int64_t D, size_t n) {
    std::vector<int64_t> d(n);
    for (size_t i = n; i-- > 0;) {
        d[i] = static_cast<int64_t>(idx % static_cast<uint64_t>(D));
        idx /= static_cast<uint64_t>(D);
    }
    return d;
}

uint64_t index_of(std::span<const int64_t> d, int64_t D) {
    uint64_t idx = 0;
    for (int64_t v : d) {
        idx = idx * static_cast<uint64_t>(D) + static_cast<uint64_t>(mod(v, D));
    }
    return idx;
}

/// p|b> = amplitude |index>.
std::pair<uint64_t, Complex> pauli_on_basis(const PauliProduct &p, std::vector<int64_t> b) {
    const int64_t D = p.dim();
    int64_t omega_exp = 0;
    for (size_t i = 0; i < b.size(); ++i) {
        omega_exp = mod(omega_exp + mul_mod(p.z(i), b[i], D), D);
        b[i] = mod(b[i] - p.x(i), D);
    }
    return {index_of(b, D), lambda_pow(D, p.phase() + 2 * omega_exp)};
}

DenseOperator local_matrix(const Gate &g, int64_t D) {
    const auto d = static_cast<Eigen::Index>(D);
    switch (g.kind) {
        case GateKind::F: {
            DenseOperator U(d, d);
            for (int64_t j = 0; j < D; ++j) {
                for (int64_t k = 0; k < D; ++k) {
                    U(j, k) = lambda_pow(D, 2 * mul_mod(j, k, D)) / std::sqrt(static_cast<double>(D));
                }
            }
            return U;
        }
        case GateKind::S: {
            DenseOperator U = DenseOperator::Zero(d, d);
            int64_t inv = inv_mod(mod(g.param, D), D);
            for (int64_t k = 0; k < D; ++k) {
                U(mul_mod(inv, k, D), k) = 1.0;
            }
            return U;
        }
        case GateKind::W: {
            DenseOperator U = DenseOperator::Zero(d, d);
            for (int64_t j = 0; j < D; ++j) {
                int64_t e = D % 2 == 0 ? j * (j + 2) : j * (j + 1);
                U(j, j) = lambda_pow(D, -mod(e, 2 * D));
            }
            return U;
        }
        case GateKind::X: {
            DenseOperator U = DenseOperator::Zero(d, d);
            for (int64_t k = 0; k < D; ++k) {
                U(mod(k - g.param, D), k) = 1.0;
            }
            return U;
        }
        case GateKind::Z: {
            DenseOperator U = DenseOperator::Zero(d, d);
            for (int64_t k = 0; k < D; ++k) {
                U(k, k) = lambda_pow(D, 2 * mul_mod(g.param, k, D));
            }
            return U;
        }
        case GateKind::CP: {
            DenseOperator U = DenseOperator::Zero(d * d, d * d);
            for (int64_t j = 0; j < D; ++j) {
                for (int64_t k = 0; k < D; ++k) {
                    U(j * D + k, j * D + k) = lambda_pow(D, 2 * mul_mod(g.param, j * k, D));
                }
            }
            return U;
        }
        case GateKind::CNOT: {
            DenseOperator U = DenseOperator::Zero(d * d, d * d);
            for (int64_t j = 0; j < D; ++j) {
                for (int64_t k = 0; k < D; ++k) {
                    U(j * D + mod(k - j, D), j * D + k) = 1.0;
                }
            }
            return U;
        }
    }
    return {};
}

}  // namespace

uint64_t hilbert_dim(int64_t D, size_t n) {
    uint64_t dim = 1;
    for (size_t i = 0; i < n; ++i) {
        dim *= static_cast<uint64_t>(D);
        if (dim > kMaxDim) {
            fail(ErrorCode::TooLarge, std::to_string(D) + "^" + std::to_string(n) + " exceeds the dense limit of " +
                                          std::to_string(kMaxDim));
        }
    }
    return dim;
}

Complex lambda_pow(int64_t D, int64_t k) {
    double angle = std::numbers::pi * static_cast<double>(mod(k, 2 * D)) / static_cast<double>(D);
    return std::polar(1.0, angle);
}

DenseOperator pauli_matrix(const PauliProduct &p) {
    const uint64_t dim = hilbert_dim(p.dim(), p.num_qudits());
    DenseOperator M = DenseOperator::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (uint64_t b = 0; b < dim; ++b) {
        auto [row, amp] = pauli_on_basis(p, digits_of(b, p.dim(), p.num_qudits()));
        M(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(b)) = amp;
    }
    return M;
}

DenseState apply_pauli(const PauliProduct &p, const DenseState &psi) {
    const uint64_t dim = hilbert_dim(p.dim(), p.num_qudits());
    DenseState out = DenseState::Zero(psi.size());
    for (uint64_t b = 0; b < dim; ++b) {
        auto [row, amp] = pauli_on_basis(p, digits_of(b, p.dim(), p.num_qudits()));
        out(static_cast<Eigen::Index>(row)) += amp * psi(static_cast<Eigen::Index>(b));
    }
    return out;
}

DenseState apply_gate(const Gate &g, int64_t D, size_t n, const DenseState &psi) {
    validate_gate(g, D, n);
    const uint64_t dim = hilbert_dim(D, n);
    DenseOperator U = local_matrix(g, D);
    DenseState out = DenseState::Zero(psi.size());
    for (uint64_t idx = 0; idx < dim; ++idx) {
        Complex amp = psi(static_cast<Eigen::Index>(idx));
        if (amp == Complex(0.0, 0.0)) {
            continue;
        }
        auto d = digits_of(idx, D, n);
        if (!g.two_qudit()) {
            int64_t k = d[g.q];
            for (int64_t j = 0; j < D; ++j) {
                Complex u = U(j, k);
                if (u != Complex(0.0, 0.0)) {
                    d[g.q] = j;
                    out(static_cast<Eigen::Index>(index_of(d, D))) += u * amp;
                }
            }
        } else {
            int64_t k = d[g.q] * D + d[g.r];
            for (int64_t j = 0; j < D * D; ++j) {
                Complex u = U(j, k);
                if (u != Complex(0.0, 0.0)) {
                    d[g.q] = j / D;
                    d[g.r] = j % D;
                    out(static_cast<Eigen::Index>(index_of(d, D))) += u * amp;
                }
            }
        }
    }
    return out;
}

DenseState apply_gates(std::span<const Gate> gates, int64_t D, size_t n, DenseState psi) {
    for (const auto &g : gates) {
        psi = apply_gate(g, D, n, psi);
    }
    return psi;
}

DenseOperator clifford_matrix(std::span<const Gate> gates, int64_t D, size_t n) {
    const auto dim = static_cast<Eigen::Index>(hilbert_dim(D, n));
    DenseOperator U(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        DenseState e = DenseState::Zero(dim);
        e(c) = 1.0;
        U.col(c) = apply_gates(gates, D, n, e);
    }
    return U;
}

std::vector<PauliProduct> group_elements(const StabilizerGroup &S) {
    std::vector<PauliProduct> elems{PauliProduct(S.dim(), S.num_qudits())};
    uint64_t total = 1;
    for (const auto &g : S.gens()) {
        total *= static_cast<uint64_t>(order(g));
        if (total > kMaxDim * kMaxDim) {
            fail(ErrorCode::TooLarge, "group too large to enumerate");
        }
    }
    for (const auto &g : S.gens()) {
        std::vector<PauliProduct> next;
        next.reserve(elems.size() * static_cast<size_t>(order(g)));
        for (const auto &e : elems) {
            PauliProduct cur = e;
            for (int64_t k = 0; k < order(g); ++k) {
                next.push_back(cur);
                cur = cur * g;
            }
        }
        elems = std::move(next);
    }
    return elems;
}

DenseState state_from_group(const StabilizerGroup &S) {
    const int64_t D = S.dim();
    const size_t n = S.num_qudits();
    const uint64_t dim = hilbert_dim(D, n);
    auto elems = group_elements(S);
    if (elems.size() != dim) {
        fail(ErrorCode::NotRankOne, "group of size " + std::to_string(elems.size()) + " does not fix a single state");
    }
    Complex trace = 0.0;
    for (const auto &s : elems) {
        if (s.is_scalar()) {
            trace += lambda_pow(D, s.phase());
        }
    }
    if (std::abs(trace - Complex(1.0, 0.0)) > kRankTol) {
        fail(ErrorCode::NotRankOne, "projector trace differs from 1");
    }
    DenseState psi;
    for (uint64_t b = 0; b < dim; ++b) {
        DenseState col = DenseState::Zero(static_cast<Eigen::Index>(dim));
        auto digits = digits_of(b, D, n);
        for (const auto &s : elems) {
            auto [row, amp] = pauli_on_basis(s, digits);
            col(static_cast<Eigen::Index>(row)) += amp;
        }
        col /= static_cast<double>(dim);
        if (col.norm() > 1e-6) {
            psi = col / col.norm();
            break;
        }
    }
    if (psi.size() == 0) {
        fail(ErrorCode::NotRankOne, "projector vanishes");
    }
    for (const auto &g : S.gens()) {
        if ((apply_pauli(g, psi) - psi).norm() > kRankTol) {
            fail(ErrorCode::NotRankOne, "generator " + g.str() + " does not fix the projected state");
        }
    }
    return psi;
}

namespace {

Eigen::MatrixXcd reshape(const DenseState &psi, int64_t D, size_t n, std::span<const size_t> part) {
    const uint64_t dim = hilbert_dim(D, n);
    std::vector<bool> in(n, false);
    for (size_t q : part) {
        if (q >= n) {
            fail(ErrorCode::IndexOutOfRange, "qudit out of range");
        }
        in[q] = true;
    }
    std::vector<size_t> rest;
    for (size_t q = 0; q < n; ++q) {
        if (!in[q]) {
            rest.push_back(q);
        }
    }
    uint64_t da = 1;
    for (size_t i = 0; i < part.size(); ++i) {
        da *= static_cast<uint64_t>(D);
    }
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(da), static_cast<Eigen::Index>(dim / da));
    for (uint64_t idx = 0; idx < dim; ++idx) {
        auto d = digits_of(idx, D, n);
        uint64_t a = 0, b = 0;
        for (size_t q : part) {
            a = a * static_cast<uint64_t>(D) + static_cast<uint64_t>(d[q]);
        }
        for (size_t q : rest) {
            b = b * static_cast<uint64_t>(D) + static_cast<uint64_t>(d[q]);
        }
        M(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = psi(static_cast<Eigen::Index>(idx));
    }
    return M;
}

}  // namespace

DenseOperator reduced_density(const DenseState &psi, int64_t D, size_t n, std::span<const size_t> part) {
    auto M = reshape(psi, D, n, part);
    return M * M.adjoint();
}

int schmidt_rank(const DenseState &psi, int64_t D, size_t n, std::span<const size_t> part) {
    auto M = reshape(psi, D, n, part);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(M);
    int rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        if (svd.singularValues()(i) > kRankTol) {
            ++rank;
        }
    }
    return rank;
}

double fidelity(const DenseState &a, const DenseState &b) {
    return std::norm(a.dot(b)) / (a.squaredNorm() * b.squaredNorm());
}

DenseState crt_map_state(const DenseState &psi, int64_t D, size_t n, std::span<const int64_t> moduli) {
    const uint64_t dim = hilbert_dim(D, n);
    int64_t prod = 1;
    for (int64_t q : moduli) {
        prod *= q;
    }
    if (prod != D) {
        fail(ErrorCode::NotCoprime, "moduli do not multiply to D");
    }
    DenseState out = DenseState::Zero(psi.size());
    for (uint64_t idx = 0; idx < dim; ++idx) {
        auto d = digits_of(idx, D, n);
        uint64_t target = 0;
        for (int64_t q : moduli) {
            for (size_t i = 0; i < n; ++i) {
                target = target * static_cast<uint64_t>(q) + static_cast<uint64_t>(d[i] % q);
            }
        }
        out(static_cast<Eigen::Index>(target)) += psi(static_cast<Eigen::Index>(idx));
    }
    return out;
}

DenseState kron(const DenseState &a, const DenseState &b) {
    DenseState out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

}  // namespace qstab::oracle

namespace qstab::oracle {

DenseOperator partial_trace(const DenseOperator &op, int64_t D, size_t n, std::span<const size_t> keep) {
    const uint64_t dim = hilbert_dim(D, n);
    if (static_cast<uint64_t>(op.rows()) != dim || static_cast<uint64_t>(op.cols()) != dim) {
        fail(ErrorCode::ShapeMismatch, "operator size does not match D^n");
    }
    std::vector<bool> kept(n, false);
    for (size_t q : keep) {
        if (q >= n) {
            fail(ErrorCode::IndexOutOfRange, "qudit " + std::to_string(q + 1) + " out of range");
        }
        kept[q] = true;
    }
    std::vector<Eigen::Index> kidx(dim), tidx(dim);
    for (uint64_t a = 0; a < dim; ++a) {
        auto d = digits_of(a, D, n);
        uint64_t ki = 0, ti = 0;
        for (size_t q = 0; q < n; ++q) {
            uint64_t &acc = kept[q] ? ki : ti;
            acc = acc * static_cast<uint64_t>(D) + static_cast<uint64_t>(d[q]);
        }
        kidx[a] = static_cast<Eigen::Index>(ki);
        tidx[a] = static_cast<Eigen::Index>(ti);
    }
    const auto kdim = static_cast<Eigen::Index>(hilbert_dim(D, keep.size()));
    DenseOperator out = DenseOperator::Zero(kdim, kdim);
    for (uint64_t a = 0; a < dim; ++a) {
        for (uint64_t b = 0; b < dim; ++b) {
            if (tidx[a] == tidx[b]) {
                out(kidx[a], kidx[b]) += op(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
            }
        }
    }
    return out;
}

DenseOperator code_isometry(const CodeSpec &code) {
    validate_code(code);
    if (hilbert_dim(code.D, code.n + code.k) > kMaxDim) {
        fail(ErrorCode::TooLarge, "code too large for the dense oracle");
    }
    const auto out_dim = static_cast<Eigen::Index>(hilbert_dim(code.D, code.n));
    const uint64_t in_dim = hilbert_dim(code.D, code.k);
    DenseState g = state_from_group(from_graph(code.graph));
    DenseOperator V(out_dim, static_cast<Eigen::Index>(in_dim));
    for (uint64_t i = 0; i < in_dim; ++i) {
        auto d = digits_of(i, code.D, code.k);
        DenseState col = g;
        for (size_t l = 0; l < code.k; ++l) {
            col = apply_pauli(power(code.coding[l], d[l]), col);
        }
        V.col(static_cast<Eigen::Index>(i)) = col;
    }
    return V;
}

DenseOperator apply_channel(const CodeSpec &code, std::span<const size_t> B, const DenseOperator &rho) {
    DenseOperator V = code_isometry(code);
    DenseOperator full = V * rho * V.adjoint();
    return partial_trace(full, code.D, code.n, B);
}

bool pauli_transmitted(const CodeSpec &code, std::span<const size_t> B, const PauliProduct &p) {
    return apply_channel(code, B, pauli_matrix(p)).cwiseAbs().maxCoeff() > kRankTol;
}

std::vector<PauliProduct> transmitted_paulis(const CodeSpec &code, std::span<const size_t> B) {
    DenseOperator V = code_isometry(code);
    const uint64_t count = hilbert_dim(code.D, 2 * code.k);
    std::vector<PauliProduct> out;
    for (uint64_t idx = 0; idx < count; ++idx) {
        auto d = digits_of(idx, code.D, 2 * code.k);
        PauliProduct p(code.D, code.k);
        for (size_t q = 0; q < code.k; ++q) {
            p.set_x(q, d[2 * q]);
            p.set_z(q, d[2 * q + 1]);
        }
        DenseOperator full = V * pauli_matrix(p) * V.adjoint();
        if (partial_trace(full, code.D, code.n, B).cwiseAbs().maxCoeff() > kRankTol) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

}  // namespace qstab::oracle
