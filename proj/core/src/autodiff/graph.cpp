#include "qmaze/autodiff/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace qmaze::autodiff {

namespace {

std::shared_ptr<Node> make_node(const char* op, std::vector<std::shared_ptr<Node>> inputs,
                                Tensor out) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->inputs = std::move(inputs);
    n->out = std::move(out);
    for (const auto& in : n->inputs)
        if (in->needs_grad) n->needs_grad = true;
    return n;
}

void check_rank(const Var& v, std::size_t rank, const char* what) {
    if (v.shape().size() != rank)
        throw std::invalid_argument(std::string(what) + ": expected rank " +
                                    std::to_string(rank) + " tensor");
}

} // namespace

Var leaf(TensorPtr t) {
    if (!t) throw std::invalid_argument("leaf tensor must not be null");
    auto n = std::make_shared<Node>();
    n->op = "leaf";
    n->out = *t;  // copy of shape/values; gradient flows to the shared tensor
    n->needs_grad = t->requires_grad;
    n->leaf = std::move(t);
    return Var(n);
}

Var constant(Tensor t) {
    auto n = std::make_shared<Node>();
    n->op = "const";
    n->out = std::move(t);
    n->needs_grad = false;
    return Var(n);
}

Var conv2d(const Var& input, const Var& weight, const Var& bias) {
    check_rank(input, 3, "conv2d input");
    check_rank(weight, 4, "conv2d weight");
    check_rank(bias, 1, "conv2d bias");
    const int c_in = input.shape()[0], h = input.shape()[1], w = input.shape()[2];
    const int c_out = weight.shape()[0], k = weight.shape()[2];
    if (weight.shape()[1] != c_in || weight.shape()[3] != k)
        throw std::invalid_argument("conv2d: weight shape does not match input channels");
    if (bias.shape()[0] != c_out)
        throw std::invalid_argument("conv2d: bias length does not match output channels");
    if (k > h || k > w)
        throw std::invalid_argument("conv2d: kernel larger than input");

    const int oh = h - k + 1, ow = w - k + 1;
    Tensor out({c_out, oh, ow});
    const auto& x = input.value().values;
    const auto& wt = weight.value().values;
    const auto& b = bias.value().values;
    for (int co = 0; co < c_out; ++co)
        for (int i = 0; i < oh; ++i)
            for (int j = 0; j < ow; ++j) {
                double acc = b[co];
                for (int ci = 0; ci < c_in; ++ci)
                    for (int u = 0; u < k; ++u)
                        for (int v = 0; v < k; ++v)
                            acc += x[(ci * h + i + u) * w + j + v] *
                                   wt[((co * c_in + ci) * k + u) * k + v];
                out.values[(co * oh + i) * ow + j] = acc;
            }

    auto n = make_node("conv2d", {input.node(), weight.node(), bias.node()}, std::move(out));
    n->backward_fn = [c_in, h, w, c_out, k, oh, ow](Node& self) {
        Node& in = *self.inputs[0];
        Node& wn = *self.inputs[1];
        Node& bn = *self.inputs[2];
        const auto& g = self.grad;
        const auto& x = in.out.values;
        const auto& wt = wn.out.values;
        for (int co = 0; co < c_out; ++co)
            for (int i = 0; i < oh; ++i)
                for (int j = 0; j < ow; ++j) {
                    const double go = g[(co * oh + i) * ow + j];
                    if (bn.needs_grad) bn.grad[co] += go;
                    for (int ci = 0; ci < c_in; ++ci)
                        for (int u = 0; u < k; ++u)
                            for (int v = 0; v < k; ++v) {
                                const std::size_t xi = (ci * h + i + u) * w + j + v;
                                const std::size_t wi = ((co * c_in + ci) * k + u) * k + v;
                                if (wn.needs_grad) wn.grad[wi] += go * x[xi];
                                if (in.needs_grad) in.grad[xi] += go * wt[wi];
                            }
                }
    };
    return Var(n);
}

Var relu(const Var& input) {
    Tensor out = input.value();
    for (auto& v : out.values) v = std::max(0.0, v);
    auto n = make_node("relu", {input.node()}, std::move(out));
    n->backward_fn = [](Node& self) {
        Node& in = *self.inputs[0];
        if (!in.needs_grad) return;
        for (std::size_t i = 0; i < self.grad.size(); ++i)
            if (in.out.values[i] > 0.0) in.grad[i] += self.grad[i];
    };
    return Var(n);
}

Var linear(const Var& input, const Var& weight, const Var& bias) {
    check_rank(input, 1, "linear input");
    check_rank(weight, 2, "linear weight");
    check_rank(bias, 1, "linear bias");
    const int m = weight.shape()[0], k = weight.shape()[1];
    if (input.shape()[0] != k)
        throw std::invalid_argument("linear: input length does not match weight columns");
    if (bias.shape()[0] != m)
        throw std::invalid_argument("linear: bias length does not match weight rows");

    Tensor out({m});
    const auto& x = input.value().values;
    const auto& wt = weight.value().values;
    const auto& b = bias.value().values;
    for (int r = 0; r < m; ++r) {
        double acc = b[r];
        for (int c = 0; c < k; ++c) acc += wt[r * k + c] * x[c];
        out.values[r] = acc;
    }

    auto n = make_node("linear", {input.node(), weight.node(), bias.node()}, std::move(out));
    n->backward_fn = [m, k](Node& self) {
        Node& in = *self.inputs[0];
        Node& wn = *self.inputs[1];
        Node& bn = *self.inputs[2];
        const auto& g = self.grad;
        for (int r = 0; r < m; ++r) {
            if (bn.needs_grad) bn.grad[r] += g[r];
            for (int c = 0; c < k; ++c) {
                if (wn.needs_grad) wn.grad[r * k + c] += g[r] * in.out.values[c];
                if (in.needs_grad) in.grad[c] += g[r] * wn.out.values[r * k + c];
            }
        }
    };
    return Var(n);
}

Var flatten(const Var& input) {
    Tensor out({static_cast<int>(input.value().size())}, input.value().values);
    auto n = make_node("flatten", {input.node()}, std::move(out));
    n->backward_fn = [](Node& self) {
        Node& in = *self.inputs[0];
        if (!in.needs_grad) return;
        for (std::size_t i = 0; i < self.grad.size(); ++i) in.grad[i] += self.grad[i];
    };
    return Var(n);
}

Var gather(const Var& input, int index) {
    check_rank(input, 1, "gather input");
    if (index < 0 || index >= input.shape()[0])
        throw std::out_of_range("gather index out of range");
    Tensor out({1});
    out.values[0] = input.value().values[index];
    auto n = make_node("gather", {input.node()}, std::move(out));
    n->backward_fn = [index](Node& self) {
        Node& in = *self.inputs[0];
        if (in.needs_grad) in.grad[index] += self.grad[0];
    };
    return Var(n);
}

Var stack(const std::vector<Var>& scalars) {
    if (scalars.empty()) throw std::invalid_argument("stack needs at least one element");
    Tensor out({static_cast<int>(scalars.size())});
    std::vector<std::shared_ptr<Node>> inputs;
    inputs.reserve(scalars.size());
    for (std::size_t i = 0; i < scalars.size(); ++i) {
        if (scalars[i].value().size() != 1)
            throw std::invalid_argument("stack elements must be scalars");
        out.values[i] = scalars[i].value().values[0];
        inputs.push_back(scalars[i].node());
    }
    auto n = make_node("stack", std::move(inputs), std::move(out));
    n->backward_fn = [](Node& self) {
        for (std::size_t i = 0; i < self.inputs.size(); ++i) {
            Node& in = *self.inputs[i];
            if (in.needs_grad) in.grad[0] += self.grad[i];
        }
    };
    return Var(n);
}

Var quantum_layer(const Var& input, const Var& weights,
                  std::shared_ptr<const quantum::SamplerQnn> qnn) {
    if (!qnn) throw std::invalid_argument("quantum_layer needs a sampler");
    check_rank(input, 1, "quantum_layer input");
    check_rank(weights, 1, "quantum_layer weights");
    if (input.shape()[0] != qnn->n_inputs())
        throw std::invalid_argument("quantum_layer: circuit expects " +
                                    std::to_string(qnn->n_inputs()) + " inputs, got " +
                                    std::to_string(input.shape()[0]));
    if (weights.shape()[0] != qnn->n_weights())
        throw std::invalid_argument("quantum_layer: circuit expects " +
                                    std::to_string(qnn->n_weights()) + " weights, got " +
                                    std::to_string(weights.shape()[0]));

    Tensor out({qnn->n_outputs()},
               qnn->forward(input.value().values, weights.value().values));
    auto n = make_node("quantum", {input.node(), weights.node()}, std::move(out));
    n->backward_fn = [qnn](Node& self) {
        Node& in = *self.inputs[0];
        Node& wn = *self.inputs[1];
        auto jac = qnn->parameter_shift_jacobians(in.out.values, wn.out.values);
        const auto& g = self.grad;
        if (in.needs_grad)
            for (int c = 0; c < jac.d_inputs.cols; ++c)
                for (int r = 0; r < jac.d_inputs.rows; ++r)
                    in.grad[c] += g[r] * jac.d_inputs.at(r, c);
        if (wn.needs_grad)
            for (int c = 0; c < jac.d_weights.cols; ++c)
                for (int r = 0; r < jac.d_weights.rows; ++r)
                    wn.grad[c] += g[r] * jac.d_weights.at(r, c);
    };
    return Var(n);
}

Var mse_loss(const Var& pred, const Var& target) {
    if (pred.shape() != target.shape())
        throw std::invalid_argument("mse_loss: shape mismatch");
    if (target.needs_grad())
        throw std::invalid_argument("mse_loss: target must not require gradient");
    const std::size_t n = pred.value().size();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = pred.value().values[i] - target.value().values[i];
        acc += d * d;
    }
    Tensor out({1});
    out.values[0] = acc / static_cast<double>(n);
    auto node = make_node("mse", {pred.node(), target.node()}, std::move(out));
    node->backward_fn = [n](Node& self) {
        Node& p = *self.inputs[0];
        Node& t = *self.inputs[1];
        if (!p.needs_grad) return;
        const double scale = 2.0 / static_cast<double>(n) * self.grad[0];
        for (std::size_t i = 0; i < n; ++i)
            p.grad[i] += scale * (p.out.values[i] - t.out.values[i]);
    };
    return Var(node);
}

void backward(const Var& loss) {
    if (!loss.node()) throw std::invalid_argument("backward on empty Var");
    if (loss.value().size() != 1)
        throw std::invalid_argument("backward requires a scalar root");

    // Iterative post-order DFS; reverse of it is a topological order.
    std::vector<Node*> order;
    std::unordered_set<Node*> visited;
    std::vector<std::pair<Node*, std::size_t>> stack{{loss.node().get(), 0}};
    visited.insert(loss.node().get());
    while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (next < node->inputs.size()) {
            Node* child = node->inputs[next++].get();
            if (visited.insert(child).second) stack.push_back({child, 0});
        } else {
            order.push_back(node);
            stack.pop_back();
        }
    }

    for (Node* n : order) n->grad.assign(n->out.values.size(), 0.0);
    loss.node()->grad[0] = 1.0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Node* n = *it;
        if (n->backward_fn && n->needs_grad) n->backward_fn(*n);
    }
    for (Node* n : order) {
        if (n->leaf && n->leaf->requires_grad) {
            n->leaf->ensure_grad();
            for (std::size_t i = 0; i < n->grad.size(); ++i)
                n->leaf->grad[i] += n->grad[i];
        }
    }
}

void zero_grad(const std::vector<TensorPtr>& params) {
    for (const auto& p : params)
        if (p) p->zero_grad();
}

} // namespace qmaze::autodiff
