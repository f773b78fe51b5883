#include "qmaze/quantum/sampler_qnn.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qmaze::quantum {

SamplerQnn::SamplerQnn(ParameterizedCircuit circuit) : circuit_(std::move(circuit)) {
    circuit_.validate();
}

SamplerQnn SamplerQnn::make_default(int n_qubits, int feature_map_reps,
                                    int ansatz_reps, bool entangle) {
    ParameterizedCircuit c = build_z_feature_map(n_qubits, feature_map_reps);
    c.append(build_real_amplitudes(n_qubits, ansatz_reps, entangle));
    return SamplerQnn(std::move(c));
}

std::vector<double> SamplerQnn::forward(std::span<const double> inputs,
                                        std::span<const double> weights) const {
    return circuit_.evaluate(inputs, weights).probabilities();
}

namespace {

std::vector<double> run_gates(int n_qubits, const std::vector<Gate>& gates) {
    StateVector s = StateVector::zero_state(n_qubits);
    for (const auto& g : gates) apply_gate_in_place(s, g);
    return s.probabilities();
}

} // namespace

SamplerQnn::Jacobians SamplerQnn::parameter_shift_jacobians(
    std::span<const double> inputs, std::span<const double> weights) const {
    for (const auto& g : circuit_.gates())
        if (g.binding != Binding::Fixed && g.kind != GateKind::RY &&
            g.kind != GateKind::RZ && g.kind != GateKind::P)
            throw std::invalid_argument(
                std::string("parameter-shift rule does not cover bound ") + gate_name(g.kind) + " gates");

    std::vector<Gate> base = circuit_.bind(inputs, weights);
    const auto& templates = circuit_.gates();
    const int n_out = n_outputs();
    constexpr double half_pi = std::numbers::pi / 2.0;

    Jacobians jac;
    jac.d_inputs = Matrix(n_out, n_inputs());
    jac.d_weights = Matrix(n_out, n_weights());

    std::vector<Gate> shifted = base;
    for (std::size_t g = 0; g < templates.size(); ++g) {
        const auto& t = templates[g];
        if (t.binding == Binding::Fixed) continue;

        shifted[g].angle = base[g].angle + half_pi;
        std::vector<double> plus = run_gates(circuit_.n_qubits(), shifted);
        shifted[g].angle = base[g].angle - half_pi;
        std::vector<double> minus = run_gates(circuit_.n_qubits(), shifted);
        shifted[g].angle = base[g].angle;

        Matrix& m = (t.binding == Binding::Input) ? jac.d_inputs : jac.d_weights;
        for (int k = 0; k < n_out; ++k)
            m.at(k, t.slot) += t.scale * 0.5 * (plus[k] - minus[k]);
    }
    return jac;
}

std::vector<std::int64_t> SamplerQnn::sample_counts(std::span<const double> inputs,
                                                    std::span<const double> weights,
                                                    std::int64_t shots,
                                                    std::uint64_t seed) const {
    if (shots < 1) throw std::invalid_argument("shots must be >= 1");
    std::vector<double> probs = forward(inputs, weights);
    std::vector<double> cumulative(probs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        cumulative[i] = acc;
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<std::int64_t> counts(probs.size(), 0);
    for (std::int64_t s = 0; s < shots; ++s) {
        const double r = unif(rng) * acc;
        std::size_t idx = probs.size() - 1;
        for (std::size_t i = 0; i < cumulative.size(); ++i) {
            if (r < cumulative[i]) {
                idx = i;
                break;
            }
        }
        ++counts[idx];
    }
    return counts;
}

} // namespace qmaze::quantum
