#pragma once

// Brute-force dense-matrix reference for 1- and 2-qubit circuits. Builds the
// full 2^n x 2^n unitary of every gate from first principles (kron products
// over the little-endian qubit order) and applies it by plain matrix-vector
// multiplication. Shares only the Gate vocabulary with the library; none of
// the statevector update code.

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

#include "qmaze/quantum/state_vector.hpp"

namespace oracle {

using cplx = std::complex<double>;
using Mat = std::vector<std::vector<cplx>>;

inline Mat identity(int dim) {
    Mat m(dim, std::vector<cplx>(dim, {0.0, 0.0}));
    for (int i = 0; i < dim; ++i) m[i][i] = {1.0, 0.0};
    return m;
}

inline std::array<std::array<cplx, 2>, 2> single_matrix(const qmaze::quantum::Gate& g) {
    using qmaze::quantum::GateKind;
    const double r = 1.0 / std::sqrt(2.0);
    switch (g.kind) {
        case GateKind::H:
            return {{{cplx{r, 0}, cplx{r, 0}}, {cplx{r, 0}, cplx{-r, 0}}}};
        case GateKind::X:
            return {{{cplx{0, 0}, cplx{1, 0}}, {cplx{1, 0}, cplx{0, 0}}}};
        case GateKind::RY: {
            const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
            return {{{cplx{c, 0}, cplx{-s, 0}}, {cplx{s, 0}, cplx{c, 0}}}};
        }
        case GateKind::RZ:
            return {{{std::exp(cplx{0, -g.angle / 2}), cplx{0, 0}},
                     {cplx{0, 0}, std::exp(cplx{0, g.angle / 2})}}};
        case GateKind::P:
            return {{{cplx{1, 0}, cplx{0, 0}}, {cplx{0, 0}, std::exp(cplx{0, g.angle})}}};
        default:
            throw std::invalid_argument("not a single-qubit gate");
    }
}

// kron(A, B): A acts on the higher qubit, B on the lower (index = 2*q1 + q0).
inline Mat kron2(const std::array<std::array<cplx, 2>, 2>& a,
                 const std::array<std::array<cplx, 2>, 2>& b) {
    Mat m(4, std::vector<cplx>(4));
    for (int i0 = 0; i0 < 2; ++i0)
        for (int i1 = 0; i1 < 2; ++i1)
            for (int j0 = 0; j0 < 2; ++j0)
                for (int j1 = 0; j1 < 2; ++j1)
                    m[2 * i0 + i1][2 * j0 + j1] = a[i0][j0] * b[i1][j1];
    return m;
}

inline Mat gate_matrix(const qmaze::quantum::Gate& g, int n_qubits) {
    using qmaze::quantum::GateKind;
    if (n_qubits == 1) {
        auto u = single_matrix(g);
        return {{u[0][0], u[0][1]}, {u[1][0], u[1][1]}};
    }
    if (n_qubits != 2) throw std::invalid_argument("oracle supports 1 or 2 qubits");
    if (g.kind == GateKind::CX) {
        Mat m(4, std::vector<cplx>(4, {0.0, 0.0}));
        for (int k = 0; k < 4; ++k) {
            const bool control_set = (k >> g.control) & 1;
            const int to = control_set ? (k ^ (1 << g.target)) : k;
            m[to][k] = {1.0, 0.0};
        }
        return m;
    }
    const std::array<std::array<cplx, 2>, 2> eye = {{{cplx{1, 0}, cplx{0, 0}},
                                                     {cplx{0, 0}, cplx{1, 0}}}};
    const auto u = single_matrix(g);
    return g.target == 0 ? kron2(eye, u) : kron2(u, eye);
}

inline std::vector<cplx> apply(const Mat& m, const std::vector<cplx>& v) {
    std::vector<cplx> out(m.size(), {0.0, 0.0});
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

inline std::vector<cplx> run_circuit(int n_qubits,
                                     const std::vector<qmaze::quantum::Gate>& gates,
                                     std::size_t basis_index = 0) {
    std::vector<cplx> state(std::size_t{1} << n_qubits, {0.0, 0.0});
    state[basis_index] = {1.0, 0.0};
    for (const auto& g : gates) state = apply(gate_matrix(g, n_qubits), state);
    return state;
}

inline std::vector<double> probabilities(const std::vector<cplx>& state) {
    std::vector<double> p(state.size());
    for (std::size_t i = 0; i < state.size(); ++i) p[i] = std::norm(state[i]);
    return p;
}

} // namespace oracle
