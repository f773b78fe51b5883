#include "qmaze/quantum/state_vector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qmaze::quantum {

StateVector StateVector::zero_state(int n_qubits) {
    return basis_state(n_qubits, 0);
}

StateVector StateVector::basis_state(int n_qubits, std::size_t index) {
    if (n_qubits < 1) throw std::invalid_argument("state needs at least one qubit");
    StateVector s;
    s.n_qubits = n_qubits;
    s.amplitudes.assign(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
    if (index >= s.amplitudes.size())
        throw std::out_of_range("basis index out of range");
    s.amplitudes[index] = cplx{1.0, 0.0};
    return s;
}

double StateVector::norm() const {
    double s2 = 0.0;
    for (const auto& a : amplitudes) s2 += std::norm(a);
    return std::sqrt(s2);
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amplitudes.size());
    for (std::size_t i = 0; i < amplitudes.size(); ++i) p[i] = std::norm(amplitudes[i]);
    return p;
}

const char* gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::RY: return "RY";
        case GateKind::RZ: return "RZ";
        case GateKind::P: return "P";
        case GateKind::CX: return "CX";
    }
    return "?";
}

namespace {

// 2x2 unitary applied to one target qubit (little-endian mask loop).
void apply_single(StateVector& s, int q, const cplx u[2][2]) {
    const std::size_t n = s.amplitudes.size();
    const std::size_t mask = std::size_t{1} << q;
    for (std::size_t i = 0; i < n; ++i) {
        if (i & mask) continue;
        const std::size_t i1 = i | mask;
        const cplx a = s.amplitudes[i];
        const cplx b = s.amplitudes[i1];
        s.amplitudes[i] = u[0][0] * a + u[0][1] * b;
        s.amplitudes[i1] = u[1][0] * a + u[1][1] * b;
    }
}

void check_qubit(const StateVector& s, int q, const Gate& g) {
    if (q < 0 || q >= s.n_qubits)
        throw std::out_of_range(std::string(gate_name(g.kind)) +
                                " gate targets qubit " + std::to_string(q) +
                                " on a " + std::to_string(s.n_qubits) + "-qubit state");
}

} // namespace

void apply_gate_in_place(StateVector& state, const Gate& gate) {
    check_qubit(state, gate.target, gate);
    if (gate.is_rotation() && !std::isfinite(gate.angle))
        throw std::invalid_argument("rotation angle must be finite");

    switch (gate.kind) {
        case GateKind::H: {
            const double r = 1.0 / std::sqrt(2.0);
            const cplx u[2][2] = {{{r, 0.0}, {r, 0.0}}, {{r, 0.0}, {-r, 0.0}}};
            apply_single(state, gate.target, u);
            break;
        }
        case GateKind::X: {
            const cplx u[2][2] = {{{0.0, 0.0}, {1.0, 0.0}}, {{1.0, 0.0}, {0.0, 0.0}}};
            apply_single(state, gate.target, u);
            break;
        }
        case GateKind::RY: {
            const double c = std::cos(gate.angle / 2.0);
            const double s = std::sin(gate.angle / 2.0);
            const cplx u[2][2] = {{{c, 0.0}, {-s, 0.0}}, {{s, 0.0}, {c, 0.0}}};
            apply_single(state, gate.target, u);
            break;
        }
        case GateKind::RZ: {
            const cplx e0 = std::exp(cplx{0.0, -gate.angle / 2.0});
            const cplx e1 = std::exp(cplx{0.0, gate.angle / 2.0});
            const cplx u[2][2] = {{e0, {0.0, 0.0}}, {{0.0, 0.0}, e1}};
            apply_single(state, gate.target, u);
            break;
        }
        case GateKind::P: {
            // diag(1, e^{i angle}); differs from RZ only by global phase
            const cplx e1 = std::exp(cplx{0.0, gate.angle});
            const cplx u[2][2] = {{{1.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, e1}};
            apply_single(state, gate.target, u);
            break;
        }
        case GateKind::CX: {
            check_qubit(state, gate.control, gate);
            if (gate.control == gate.target)
                throw std::out_of_range("CX control and target must differ");
            const std::size_t cmask = std::size_t{1} << gate.control;
            const std::size_t tmask = std::size_t{1} << gate.target;
            const std::size_t n = state.amplitudes.size();
            for (std::size_t i = 0; i < n; ++i) {
                if ((i & cmask) && !(i & tmask))
                    std::swap(state.amplitudes[i], state.amplitudes[i | tmask]);
            }
            break;
        }
    }
}

StateVector apply_gate(const StateVector& state, const Gate& gate) {
    StateVector out = state;
    apply_gate_in_place(out, gate);
    return out;
}

} // namespace qmaze::quantum
