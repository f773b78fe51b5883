#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qmaze::quantum {

using cplx = std::complex<double>;

// Full statevector of an n-qubit register: 2^n complex amplitudes.
//
// Bit order is little-endian throughout this library: qubit 0 is the LEAST
// significant bit of the basis index. Basis index k therefore encodes the
// register as k = sum_q (bit of qubit q) * 2^q, and a probability vector
// returned by the sampler is ordered the same way.
struct StateVector {
    int n_qubits = 0;
    std::vector<cplx> amplitudes;

    // |00...0>
    static StateVector zero_state(int n_qubits);
    // |index> in the little-endian basis ordering above
    static StateVector basis_state(int n_qubits, std::size_t index);

    std::size_t dim() const { return amplitudes.size(); }
    double norm() const;
    // |amplitude_k|^2 for every basis index k
    std::vector<double> probabilities() const;
};

enum class GateKind { H, X, RY, RZ, P, CX };

const char* gate_name(GateKind kind);

// One concrete gate. Single-qubit gates use `target`; CX uses ordered
// (control, target). Rotation angles are radians.
struct Gate {
    GateKind kind;
    int target = 0;
    int control = -1;
    double angle = 0.0;

    static Gate h(int q) { return {GateKind::H, q}; }
    static Gate x(int q) { return {GateKind::X, q}; }
    static Gate ry(int q, double angle) { return {GateKind::RY, q, -1, angle}; }
    static Gate rz(int q, double angle) { return {GateKind::RZ, q, -1, angle}; }
    static Gate p(int q, double angle) { return {GateKind::P, q, -1, angle}; }
    static Gate cx(int control, int target) { return {GateKind::CX, target, control}; }

    bool is_rotation() const {
        return kind == GateKind::RY || kind == GateKind::RZ || kind == GateKind::P;
    }
};

// U * state for the gate's unitary. Throws std::out_of_range for invalid
// qubit indices and std::invalid_argument for non-finite angles.
StateVector apply_gate(const StateVector& state, const Gate& gate);

// In-place variant used by the circuit evaluator.
void apply_gate_in_place(StateVector& state, const Gate& gate);

} // namespace qmaze::quantum
