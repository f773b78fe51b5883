#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "qmaze/autodiff/tensor.hpp"
#include "qmaze/quantum/sampler_qnn.hpp"

namespace qmaze::autodiff {

// One record in the reverse-mode graph: the op's output tensor, references
// to its inputs, and a closure that pushes this node's gradient into them.
// Activations needed by the backward pass are read from the input nodes,
// which the shared_ptr links keep alive.
struct Node {
    const char* op = "leaf";
    std::vector<std::shared_ptr<Node>> inputs;
    Tensor out;
    std::vector<double> grad;      // dLoss/dout, sized during backward()
    bool needs_grad = false;       // any requires_grad leaf beneath this node
    TensorPtr leaf;                // set for parameter/input leaves
    std::function<void(Node&)> backward_fn;
};

// Value-semantics handle to a graph node.
class Var {
public:
    Var() = default;
    explicit Var(std::shared_ptr<Node> n) : node_(std::move(n)) {}

    const Tensor& value() const { return node_->out; }
    const std::vector<int>& shape() const { return node_->out.shape; }
    bool needs_grad() const { return node_ && node_->needs_grad; }
    const std::vector<double>& grad() const { return node_->grad; }
    const std::shared_ptr<Node>& node() const { return node_; }

private:
    std::shared_ptr<Node> node_;
};

// Leaf referencing a (possibly trainable) tensor owned elsewhere.
Var leaf(TensorPtr t);
// Constant leaf; never receives gradient.
Var constant(Tensor t);

// Cross-correlation, stride 1, no padding.
// input [C_in,H,W], weight [C_out,C_in,k,k], bias [C_out] -> [C_out,H-k+1,W-k+1]
Var conv2d(const Var& input, const Var& weight, const Var& bias);

// Elementwise max(0, x); gradient at exactly 0 is 0.
Var relu(const Var& input);

// weight [m,n] * input [n] + bias [m] -> [m]
Var linear(const Var& input, const Var& weight, const Var& bias);

// Row-major reshape to rank 1.
Var flatten(const Var& input);

// Single element of a rank-1 vector as a scalar.
Var gather(const Var& input, int index);

// Scalars -> rank-1 vector.
Var stack(const std::vector<Var>& scalars);

// Quantum circuit as a differentiable node: forward is the sampler
// probability vector, backward multiplies the upstream gradient row into the
// parameter-shift Jacobians for both the inputs and the weights.
Var quantum_layer(const Var& input, const Var& weights,
                  std::shared_ptr<const quantum::SamplerQnn> qnn);

// Mean of squared differences. `target` must not require gradient.
Var mse_loss(const Var& pred, const Var& target);

// Reverse sweep from a scalar loss. Visits each reachable node exactly once
// and accumulates (+=) into every requires_grad leaf tensor. Calling it
// twice without zero_grad doubles the accumulated gradients.
void backward(const Var& loss);

void zero_grad(const std::vector<TensorPtr>& params);

} // namespace qmaze::autodiff
