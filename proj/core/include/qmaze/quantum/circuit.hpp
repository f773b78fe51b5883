#pragma once

#include <span>
#include <string>
#include <vector>

#include "qmaze/quantum/state_vector.hpp"

namespace qmaze::quantum {

// How a gate template obtains its angle when the circuit is bound.
enum class Binding { Fixed, Input, Weight };

// One gate in a parameterized circuit: either fully fixed, or a rotation
// whose angle is scale * value(slot) at bind time. Input and weight slots
// are separate index spaces.
struct GateTemplate {
    GateKind kind;
    int target = 0;
    int control = -1;
    Binding binding = Binding::Fixed;
    int slot = -1;
    double scale = 1.0;
    double angle = 0.0;
};

class ParameterizedCircuit {
public:
    ParameterizedCircuit() = default;
    explicit ParameterizedCircuit(int n_qubits);
    // Raw construction; callers are responsible for sensible templates.
    ParameterizedCircuit(int n_qubits, std::vector<GateTemplate> gates,
                         int input_slots, int weight_slots);

    void add_fixed(const Gate& gate);
    // Bound rotation gate; only RY/RZ/P can carry a parameter slot.
    void add_bound(GateKind kind, int target, Binding binding, int slot, double scale = 1.0);

    // Concatenates another circuit's gates. Slot indices are preserved, not
    // offset; composing a feature map (input slots) with an ansatz (weight
    // slots) is the intended use.
    void append(const ParameterizedCircuit& other);

    int n_qubits() const { return n_qubits_; }
    int input_slots() const { return input_slots_; }
    int weight_slots() const { return weight_slots_; }
    const std::vector<GateTemplate>& gates() const { return gates_; }

    // Checks the slot-coverage invariant: every slot index in range is
    // referenced by at least one gate. Throws std::invalid_argument.
    void validate() const;

    // Fully fixed gate list for concrete parameter values.
    std::vector<Gate> bind(std::span<const double> inputs,
                           std::span<const double> weights) const;

    // Applies the bound circuit to |0...0>.
    StateVector evaluate(std::span<const double> inputs,
                         std::span<const double> weights) const;

    // Text dump, one gate per line, for golden-file comparison:
    //   "H 0", "CX 0 1", "P 0 x0*2", "RY 1 t3", "RZ 0 1.5707963267948966"
    // x<i> is input slot i, t<j> is weight slot j; "*s" appears when the
    // binding scale differs from 1.
    std::string dump() const;

private:
    int n_qubits_ = 0;
    std::vector<GateTemplate> gates_;
    int input_slots_ = 0;
    int weight_slots_ = 0;
};

// H on every qubit then P(2*x_i) on qubit i, repeated `reps` times.
// input_slots = n_qubits, weight_slots = 0.
ParameterizedCircuit build_z_feature_map(int n_qubits, int reps);

// (reps+1) layers of per-qubit RY, each bound to its own weight slot in
// layer-major order (layer0 q0, layer0 q1, ..., layer1 q0, ...). When
// `entangle` is set, a CX chain sits between consecutive rotation layers.
ParameterizedCircuit build_real_amplitudes(int n_qubits, int reps, bool entangle);

} // namespace qmaze::quantum
