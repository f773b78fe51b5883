#include "qmaze/agent/network.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "qmaze/errors.hpp"

namespace qmaze::agent {

using autodiff::Tensor;
using autodiff::TensorPtr;
using autodiff::Var;

const char* architecture_name(Architecture a) {
    return a == Architecture::HybridQnn ? "hybrid_qnn" : "classical_cnn";
}

Architecture architecture_from_name(const std::string& name) {
    if (name == "hybrid_qnn" || name == "hybrid") return Architecture::HybridQnn;
    if (name == "classical_cnn" || name == "classical") return Architecture::ClassicalCnn;
    throw config_error("unknown architecture \"" + name + "\" (expected classical or hybrid)");
}

namespace {

int kernel_for(int maze_size) { return maze_size >= 5 ? 3 : 2; }

TensorPtr init_uniform(std::vector<int> shape, int fan_in, std::mt19937_64& rng) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
    std::uniform_real_distribution<double> unif(-bound, bound);
    auto t = autodiff::make_tensor(std::move(shape), true);
    for (auto& v : t->values) v = unif(rng);
    return t;
}

TensorPtr init_angles(int count, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 2.0 * std::numbers::pi);
    auto t = autodiff::make_tensor({count}, true);
    for (auto& v : t->values) v = unif(rng);
    return t;
}

int conv_out(int in, int k) { return in - k + 1; }

std::string shape_str(const std::vector<int>& shape) {
    std::string s = "[-1";
    for (int d : shape) s += ", " + std::to_string(d);
    return s + "]";
}

} // namespace

QNetwork QNetwork::build(Architecture arch, int maze_size, std::mt19937_64& rng,
                         const QnnOptions& qnn) {
    if (maze_size < 3)
        throw config_error("no architecture defined for maze size " + std::to_string(maze_size));

    QNetwork net;
    net.arch_ = arch;
    net.n_ = maze_size;
    net.kernel_ = kernel_for(maze_size);
    net.qnn_opts_ = qnn;

    const int k = net.kernel_;
    const int h1 = conv_out(maze_size, k);
    const int h2 = conv_out(h1, k);
    if (h2 < 1)
        throw config_error("maze size " + std::to_string(maze_size) +
                           " too small for two " + std::to_string(k) + "x" +
                           std::to_string(k) + " conv layers");
    const int flat = 32 * h2 * h2;

    auto add = [&](const std::string& name, TensorPtr t) {
        net.params_.push_back({name, std::move(t)});
    };
    add("conv1.weight", init_uniform({16, 1, k, k}, 1 * k * k, rng));
    add("conv1.bias", init_uniform({16}, 1 * k * k, rng));
    add("conv2.weight", init_uniform({32, 16, k, k}, 16 * k * k, rng));
    add("conv2.bias", init_uniform({32}, 16 * k * k, rng));

    if (arch == Architecture::HybridQnn) {
        auto sampler = std::make_shared<quantum::SamplerQnn>(quantum::SamplerQnn::make_default(
            2, qnn.feature_map_reps, qnn.ansatz_reps, qnn.entangle));
        add("fc_pre.weight", init_uniform({sampler->n_inputs(), flat}, flat, rng));
        add("fc_pre.bias", init_uniform({sampler->n_inputs()}, flat, rng));
        add("qnn.weights", init_angles(sampler->n_weights(), rng));
        add("head.weight",
            init_uniform({env::kNumActions, sampler->n_outputs()}, sampler->n_outputs(), rng));
        add("head.bias", init_uniform({env::kNumActions}, sampler->n_outputs(), rng));
        net.qnn_ = std::move(sampler);
    } else {
        add("fc1.weight", init_uniform({32, flat}, flat, rng));
        add("fc1.bias", init_uniform({32}, flat, rng));
        add("fc2.weight", init_uniform({8, 32}, 32, rng));
        add("fc2.bias", init_uniform({8}, 32, rng));
        add("fc3.weight", init_uniform({env::kNumActions, 8}, 8, rng));
        add("fc3.bias", init_uniform({env::kNumActions}, 8, rng));
    }
    return net;
}

QNetwork QNetwork::build(Architecture arch, int maze_size, std::uint64_t seed,
                         const QnnOptions& qnn) {
    std::mt19937_64 rng(seed);
    return build(arch, maze_size, rng, qnn);
}

QNetwork QNetwork::build_hybrid(int maze_size, std::uint64_t seed, const QnnOptions& qnn) {
    return build(Architecture::HybridQnn, maze_size, seed, qnn);
}

QNetwork QNetwork::build_classical(int maze_size, std::uint64_t seed) {
    return build(Architecture::ClassicalCnn, maze_size, seed);
}

std::vector<TensorPtr> QNetwork::parameter_tensors() const {
    std::vector<TensorPtr> out;
    out.reserve(params_.size());
    for (const auto& p : params_) out.push_back(p.tensor);
    return out;
}

long QNetwork::total_params() const {
    long n = 0;
    for (const auto& p : params_) n += static_cast<long>(p.tensor->size());
    return n;
}

std::vector<std::pair<std::string, long>> QNetwork::layer_param_counts() const {
    // weight+bias pairs count as one layer; the quantum weights stand alone
    std::vector<std::pair<std::string, long>> out;
    for (std::size_t i = 0; i < params_.size();) {
        const auto& name = params_[i].name;
        const auto dot = name.find('.');
        const std::string layer = name.substr(0, dot);
        long count = 0;
        while (i < params_.size() && params_[i].name.compare(0, dot, layer) == 0 &&
               (params_[i].name.size() <= dot || params_[i].name[dot] == '.')) {
            count += static_cast<long>(params_[i].tensor->size());
            ++i;
        }
        out.emplace_back(layer, count);
    }
    return out;
}

LeafSet QNetwork::make_leaves() const {
    LeafSet set;
    set.leaves.reserve(params_.size());
    for (const auto& p : params_) set.leaves.push_back(autodiff::leaf(p.tensor));
    return set;
}

Var QNetwork::forward(const env::Observation& obs, const LeafSet& leaves) const {
    if (obs.n != n_)
        throw std::invalid_argument("observation size does not match network maze size");
    const auto& L = leaves.leaves;
    Var x = autodiff::constant(Tensor({1, n_, n_}, obs.values));
    x = autodiff::relu(autodiff::conv2d(x, L[0], L[1]));
    x = autodiff::relu(autodiff::conv2d(x, L[2], L[3]));
    x = autodiff::flatten(x);
    if (arch_ == Architecture::HybridQnn) {
        x = autodiff::linear(x, L[4], L[5]);
        x = autodiff::quantum_layer(x, L[6], qnn_);
        x = autodiff::linear(x, L[7], L[8]);
    } else {
        x = autodiff::relu(autodiff::linear(x, L[4], L[5]));
        x = autodiff::relu(autodiff::linear(x, L[6], L[7]));
        x = autodiff::linear(x, L[8], L[9]);
    }
    return x;
}

Var QNetwork::forward(const env::Observation& obs) const {
    return forward(obs, make_leaves());
}

std::array<double, env::kNumActions> QNetwork::q_values(const env::Observation& obs) const {
    const Var out = forward(obs);
    std::array<double, env::kNumActions> q{};
    for (int i = 0; i < env::kNumActions; ++i) q[i] = out.value().values[i];
    return q;
}

std::vector<std::vector<int>> QNetwork::layer_output_shapes(const env::Observation& obs) const {
    if (obs.n != n_)
        throw std::invalid_argument("observation size does not match network maze size");
    const LeafSet leaves = make_leaves();
    const auto& L = leaves.leaves;
    std::vector<std::vector<int>> shapes;
    Var x = autodiff::constant(Tensor({1, n_, n_}, obs.values));
    x = autodiff::relu(autodiff::conv2d(x, L[0], L[1]));
    shapes.push_back(x.shape());
    x = autodiff::relu(autodiff::conv2d(x, L[2], L[3]));
    shapes.push_back(x.shape());
    x = autodiff::flatten(x);
    if (arch_ == Architecture::HybridQnn) {
        x = autodiff::linear(x, L[4], L[5]);
        shapes.push_back(x.shape());
        x = autodiff::quantum_layer(x, L[6], qnn_);
        shapes.push_back(x.shape());
        x = autodiff::linear(x, L[7], L[8]);
        shapes.push_back(x.shape());
    } else {
        x = autodiff::relu(autodiff::linear(x, L[4], L[5]));
        shapes.push_back(x.shape());
        x = autodiff::relu(autodiff::linear(x, L[6], L[7]));
        shapes.push_back(x.shape());
        x = autodiff::linear(x, L[8], L[9]);
        shapes.push_back(x.shape());
    }
    return shapes;
}

std::string QNetwork::summary() const {
    const int k = kernel_;
    const int h1 = conv_out(n_, k);
    const int h2 = conv_out(h1, k);
    const int flat = 32 * h2 * h2;

    struct Row {
        std::string type;
        std::vector<int> shape;
        long params;
    };
    std::vector<Row> rows;
    rows.push_back({"Conv2d", {16, h1, h1}, 16L * k * k + 16});
    rows.push_back({"ReLU", {16, h1, h1}, 0});
    rows.push_back({"Conv2d", {32, h2, h2}, 32L * 16 * k * k + 32});
    rows.push_back({"ReLU", {32, h2, h2}, 0});
    if (arch_ == Architecture::HybridQnn) {
        const int qi = qnn_->n_inputs(), qo = qnn_->n_outputs();
        rows.push_back({"Linear", {qi}, static_cast<long>(qi) * flat + qi});
        rows.push_back({"QuantumLayer", {qo}, qnn_->n_weights()});
        rows.push_back({"Linear", {env::kNumActions}, static_cast<long>(env::kNumActions) * qo + env::kNumActions});
    } else {
        rows.push_back({"Linear", {32}, 32L * flat + 32});
        rows.push_back({"ReLU", {32}, 0});
        rows.push_back({"Linear", {8}, 8L * 32 + 8});
        rows.push_back({"ReLU", {8}, 0});
        rows.push_back({"Linear", {env::kNumActions}, 8L * env::kNumActions + env::kNumActions});
    }

    std::string out;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%-18s %-18s %s\n", "Layer (type)", "Output Shape", "Param #");
    out += buf;
    int idx = 1;
    long total = 0;
    for (const auto& r : rows) {
        const std::string label = r.type + "-" + std::to_string(idx++);
        std::snprintf(buf, sizeof buf, "%-18s %-18s %ld\n", label.c_str(),
                      shape_str(r.shape).c_str(), r.params);
        out += buf;
        total += r.params;
    }
    out += "Total params: " + std::to_string(total) + "\n";
    return out;
}

QNetwork QNetwork::clone() const {
    QNetwork copy;
    copy.arch_ = arch_;
    copy.n_ = n_;
    copy.kernel_ = kernel_;
    copy.qnn_opts_ = qnn_opts_;
    copy.qnn_ = qnn_;
    copy.params_.reserve(params_.size());
    for (const auto& p : params_) {
        auto t = std::make_shared<Tensor>(p.tensor->shape, p.tensor->values,
                                          p.tensor->requires_grad);
        copy.params_.push_back({p.name, std::move(t)});
    }
    return copy;
}

void QNetwork::copy_from(const QNetwork& other) {
    if (arch_ != other.arch_ || n_ != other.n_)
        throw std::invalid_argument("copy_from requires identical architectures");
    for (std::size_t i = 0; i < params_.size(); ++i)
        params_[i].tensor->values = other.params_[i].tensor->values;
}

} // namespace qmaze::agent
