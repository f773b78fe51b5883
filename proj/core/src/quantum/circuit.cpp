#include "qmaze/quantum/circuit.hpp"

#include <cstdio>
#include <stdexcept>
#include <string>

namespace qmaze::quantum {

ParameterizedCircuit::ParameterizedCircuit(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1) throw std::invalid_argument("circuit needs at least one qubit");
}

ParameterizedCircuit::ParameterizedCircuit(int n_qubits, std::vector<GateTemplate> gates,
                                           int input_slots, int weight_slots)
    : n_qubits_(n_qubits), gates_(std::move(gates)),
      input_slots_(input_slots), weight_slots_(weight_slots) {
    if (n_qubits < 1) throw std::invalid_argument("circuit needs at least one qubit");
}

void ParameterizedCircuit::add_fixed(const Gate& gate) {
    GateTemplate t;
    t.kind = gate.kind;
    t.target = gate.target;
    t.control = gate.control;
    t.angle = gate.angle;
    gates_.push_back(t);
}

void ParameterizedCircuit::add_bound(GateKind kind, int target, Binding binding,
                                     int slot, double scale) {
    if (kind != GateKind::RY && kind != GateKind::RZ && kind != GateKind::P)
        throw std::invalid_argument("only RY/RZ/P gates can bind a parameter slot");
    if (binding == Binding::Fixed || slot < 0)
        throw std::invalid_argument("bound gate needs a parameter slot");
    GateTemplate t;
    t.kind = kind;
    t.target = target;
    t.binding = binding;
    t.slot = slot;
    t.scale = scale;
    gates_.push_back(t);
    if (binding == Binding::Input && slot >= input_slots_) input_slots_ = slot + 1;
    if (binding == Binding::Weight && slot >= weight_slots_) weight_slots_ = slot + 1;
}

void ParameterizedCircuit::append(const ParameterizedCircuit& other) {
    if (other.n_qubits_ != n_qubits_)
        throw std::invalid_argument("appended circuit must act on the same register");
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    if (other.input_slots_ > input_slots_) input_slots_ = other.input_slots_;
    if (other.weight_slots_ > weight_slots_) weight_slots_ = other.weight_slots_;
}

void ParameterizedCircuit::validate() const {
    std::vector<bool> in_seen(input_slots_, false), w_seen(weight_slots_, false);
    for (const auto& g : gates_) {
        if (g.binding == Binding::Input) {
            if (g.slot < 0 || g.slot >= input_slots_)
                throw std::invalid_argument("input slot out of range");
            in_seen[g.slot] = true;
        } else if (g.binding == Binding::Weight) {
            if (g.slot < 0 || g.slot >= weight_slots_)
                throw std::invalid_argument("weight slot out of range");
            w_seen[g.slot] = true;
        }
        if (g.target < 0 || g.target >= n_qubits_)
            throw std::invalid_argument("gate target out of range");
        if (g.kind == GateKind::CX && (g.control < 0 || g.control >= n_qubits_ || g.control == g.target))
            throw std::invalid_argument("bad CX control");
    }
    for (int i = 0; i < input_slots_; ++i)
        if (!in_seen[i]) throw std::invalid_argument("input slot " + std::to_string(i) + " unused");
    for (int i = 0; i < weight_slots_; ++i)
        if (!w_seen[i]) throw std::invalid_argument("weight slot " + std::to_string(i) + " unused");
}

std::vector<Gate> ParameterizedCircuit::bind(std::span<const double> inputs,
                                             std::span<const double> weights) const {
    if (static_cast<int>(inputs.size()) != input_slots_)
        throw std::invalid_argument("expected " + std::to_string(input_slots_) +
                                    " input values, got " + std::to_string(inputs.size()));
    if (static_cast<int>(weights.size()) != weight_slots_)
        throw std::invalid_argument("expected " + std::to_string(weight_slots_) +
                                    " weight values, got " + std::to_string(weights.size()));
    std::vector<Gate> out;
    out.reserve(gates_.size());
    for (const auto& g : gates_) {
        Gate gate;
        gate.kind = g.kind;
        gate.target = g.target;
        gate.control = g.control;
        switch (g.binding) {
            case Binding::Fixed: gate.angle = g.angle; break;
            case Binding::Input: gate.angle = g.scale * inputs[g.slot]; break;
            case Binding::Weight: gate.angle = g.scale * weights[g.slot]; break;
        }
        out.push_back(gate);
    }
    return out;
}

StateVector ParameterizedCircuit::evaluate(std::span<const double> inputs,
                                           std::span<const double> weights) const {
    StateVector s = StateVector::zero_state(n_qubits_);
    for (const auto& gate : bind(inputs, weights)) apply_gate_in_place(s, gate);
    return s;
}

std::string ParameterizedCircuit::dump() const {
    std::string out;
    char buf[64];
    for (const auto& g : gates_) {
        out += gate_name(g.kind);
        if (g.kind == GateKind::CX) {
            std::snprintf(buf, sizeof buf, " %d %d", g.control, g.target);
            out += buf;
        } else {
            std::snprintf(buf, sizeof buf, " %d", g.target);
            out += buf;
        }
        if (g.binding != Binding::Fixed) {
            out += (g.binding == Binding::Input) ? " x" : " t";
            out += std::to_string(g.slot);
            if (g.scale != 1.0) {
                std::snprintf(buf, sizeof buf, "*%.17g", g.scale);
                out += buf;
            }
        } else if (g.kind == GateKind::RY || g.kind == GateKind::RZ || g.kind == GateKind::P) {
            std::snprintf(buf, sizeof buf, " %.17g", g.angle);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

ParameterizedCircuit build_z_feature_map(int n_qubits, int reps) {
    if (n_qubits < 1 || reps < 1)
        throw std::invalid_argument("feature map needs n_qubits >= 1 and reps >= 1");
    ParameterizedCircuit c(n_qubits);
    for (int r = 0; r < reps; ++r) {
        for (int q = 0; q < n_qubits; ++q) c.add_fixed(Gate::h(q));
        for (int q = 0; q < n_qubits; ++q) c.add_bound(GateKind::P, q, Binding::Input, q, 2.0);
    }
    return c;
}

ParameterizedCircuit build_real_amplitudes(int n_qubits, int reps, bool entangle) {
    if (n_qubits < 1 || reps < 1)
        throw std::invalid_argument("ansatz needs n_qubits >= 1 and reps >= 1");
    ParameterizedCircuit c(n_qubits);
    int slot = 0;
    for (int layer = 0; layer <= reps; ++layer) {
        if (entangle && layer > 0)
            for (int q = 0; q + 1 < n_qubits; ++q) c.add_fixed(Gate::cx(q, q + 1));
        for (int q = 0; q < n_qubits; ++q)
            c.add_bound(GateKind::RY, q, Binding::Weight, slot++);
    }
    return c;
}

} // namespace qmaze::quantum
