#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qmaze/quantum/circuit.hpp"

namespace qmaze::quantum {

// Dense row-major matrix, just big enough for Jacobians.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}
    double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

// Sampler-style quantum neural network: the model is a parameterized circuit
// and the output is the probability distribution over all 2^n computational
// basis states. Output index k is little-endian (qubit 0 = least significant
// bit of k); see state_vector.hpp.
//
// All methods are pure functions of their arguments and safe to call from
// multiple threads.
class SamplerQnn {
public:
    explicit SamplerQnn(ParameterizedCircuit circuit);

    // Z feature map followed by a real-amplitudes ansatz, the 2-qubit
    // configuration used by the hybrid network (4 trainable angles when
    // n_qubits=2, ansatz_reps=1).
    static SamplerQnn make_default(int n_qubits = 2, int feature_map_reps = 1,
                                   int ansatz_reps = 1, bool entangle = false);

    int n_inputs() const { return circuit_.input_slots(); }
    int n_weights() const { return circuit_.weight_slots(); }
    int n_outputs() const { return 1 << circuit_.n_qubits(); }
    const ParameterizedCircuit& circuit() const { return circuit_; }

    // Probability vector; entries are >= 0 and sum to 1 up to rounding.
    std::vector<double> forward(std::span<const double> inputs,
                                std::span<const double> weights) const;

    struct Jacobians {
        Matrix d_inputs;   // n_outputs x n_inputs
        Matrix d_weights;  // n_outputs x n_weights
    };

    // Exact gradients of every output probability via the parameter-shift
    // rule: dp/dtheta = [p(theta + pi/2) - p(theta - pi/2)] / 2 per bound
    // gate occurrence, times the binding scale (chain rule), summed over
    // occurrences of the same slot.
    Jacobians parameter_shift_jacobians(std::span<const double> inputs,
                                        std::span<const double> weights) const;

    // Multinomial shot sampling from forward(); deterministic for a fixed
    // seed. Returns per-basis-index counts summing to `shots`.
    std::vector<std::int64_t> sample_counts(std::span<const double> inputs,
                                            std::span<const double> weights,
                                            std::int64_t shots,
                                            std::uint64_t seed) const;

private:
    ParameterizedCircuit circuit_;
};

} // namespace qmaze::quantum
