// SPDX-License-Identifier: Apache-2.0
//
// Test-only reference simulator: every gate becomes a full 2^n x 2^n matrix
// assembled from Kronecker products of 2x2 operators (qubit 0 is the
// leftmost factor), and the state is evolved by plain matrix-vector
// multiplication. Shares nothing with the bit-mask kernels it checks.
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "mcq/statevector.hpp"

namespace mcq::oracle {

using cplx = std::complex<double>;
using Mat2 = std::array<cplx, 4>; // row-major

struct Dense {
    std::size_t dim;
    std::vector<cplx> data; // row-major

    explicit Dense(std::size_t d) : dim{d}, data(d * d, cplx{0, 0}) {}
    cplx &operator()(std::size_t r, std::size_t c) { return data[r * dim + c]; }
    cplx operator()(std::size_t r, std::size_t c) const {
        return data[r * dim + c];
    }
};

inline Dense kron(const Dense &a, const Dense &b) {
    Dense out(a.dim * b.dim);
    for (std::size_t ar = 0; ar < a.dim; ++ar)
        for (std::size_t ac = 0; ac < a.dim; ++ac)
            for (std::size_t br = 0; br < b.dim; ++br)
                for (std::size_t bc = 0; bc < b.dim; ++bc)
                    out(ar * b.dim + br, ac * b.dim + bc) =
                        a(ar, ac) * b(br, bc);
    return out;
}

inline Dense from2(const Mat2 &m) {
    Dense d(2);
    d.data.assign(m.begin(), m.end());
    return d;
}

inline const Mat2 kI{1, 0, 0, 1};
inline const Mat2 kX{0, 1, 1, 0};
inline const Mat2 kY{0, cplx{0, -1}, cplx{0, 1}, 0};
inline const Mat2 kZ{1, 0, 0, -1};
inline const Mat2 kP0{1, 0, 0, 0};
inline const Mat2 kP1{0, 0, 0, 1};
inline const Mat2 kH{1 / std::numbers::sqrt2, 1 / std::numbers::sqrt2,
                     1 / std::numbers::sqrt2, -1 / std::numbers::sqrt2};
inline const Mat2 kT{1, 0, 0, std::polar(1.0, std::numbers::pi / 4)};

/// Tensor product over n qubits with `ops[q]` on qubit q.
inline Dense tensor(const std::vector<Mat2> &ops) {
    Dense out = from2(ops[0]);
    for (std::size_t q = 1; q < ops.size(); ++q) {
        out = kron(out, from2(ops[q]));
    }
    return out;
}

inline Dense single(std::size_t n, std::size_t q, const Mat2 &op) {
    std::vector<Mat2> ops(n, kI);
    ops[q] = op;
    return tensor(ops);
}

inline Dense pair(std::size_t n, std::size_t a, const Mat2 &opa, std::size_t b,
                  const Mat2 &opb) {
    std::vector<Mat2> ops(n, kI);
    ops[a] = opa;
    ops[b] = opb;
    return tensor(ops);
}

inline void axpy(Dense &acc, const Dense &term, cplx scale = 1) {
    for (std::size_t i = 0; i < acc.data.size(); ++i) {
        acc.data[i] += scale * term.data[i];
    }
}

inline Dense gate_matrix(std::size_t n, const Gate &g) {
    switch (g.type) {
    case GateType::H:
        return single(n, g.first, kH);
    case GateType::T:
        return single(n, g.first, kT);
    case GateType::CNOT: {
        // |0><0|_c (x) I + |1><1|_c (x) X_t
        Dense m = single(n, g.first, kP0);
        axpy(m, pair(n, g.first, kP1, g.second, kX));
        return m;
    }
    case GateType::SWAP: {
        // (II + XX + YY + ZZ) / 2
        Dense m(std::size_t{1} << n);
        axpy(m, tensor(std::vector<Mat2>(n, kI)), 0.5);
        axpy(m, pair(n, g.first, kX, g.second, kX), 0.5);
        axpy(m, pair(n, g.first, kY, g.second, kY), 0.5);
        axpy(m, pair(n, g.first, kZ, g.second, kZ), 0.5);
        return m;
    }
    }
    return Dense(0);
}

inline std::vector<cplx> multiply(const Dense &m, const std::vector<cplx> &v) {
    std::vector<cplx> out(m.dim, cplx{0, 0});
    for (std::size_t r = 0; r < m.dim; ++r)
        for (std::size_t c = 0; c < m.dim; ++c)
            out[r] += m(r, c) * v[c];
    return out;
}

inline std::vector<cplx> zero_state(std::size_t n) {
    std::vector<cplx> v(std::size_t{1} << n, cplx{0, 0});
    v[0] = 1;
    return v;
}

template <class Gates>
std::vector<cplx> evolve(std::size_t n, const Gates &gates,
                         std::vector<cplx> state) {
    for (const Gate &g : gates) {
        state = multiply(gate_matrix(n, g), state);
    }
    return state;
}

} // namespace mcq::oracle
