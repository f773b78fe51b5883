#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "qmaze/autodiff/graph.hpp"
#include "qmaze/env/env.hpp"

namespace qmaze::agent {

enum class Architecture { ClassicalCnn, HybridQnn };

const char* architecture_name(Architecture a);
Architecture architecture_from_name(const std::string& name);  // config_error on unknown

struct QnnOptions {
    int feature_map_reps = 1;
    int ansatz_reps = 1;
    bool entangle = false;
};

struct NamedParam {
    std::string name;
    autodiff::TensorPtr tensor;
};

// Leaf nodes for one set of parameters, built once and shared across every
// sample of a batch so backward() sums the whole batch into the same
// gradient buffers.
struct LeafSet {
    std::vector<autodiff::Var> leaves;  // same order as parameters()
};

// A Q-value network: observation in, one Q-value per action out.
//
// The hybrid variant is conv -> relu -> conv -> relu -> flatten -> linear(2)
// -> quantum sampler layer (4 probabilities) -> linear(4). The classical
// variant replaces the quantum stage with a dense head (hidden widths 32, 8).
// Conv kernels are 2x2 below maze size 5 and 3x3 from 5 up.
class QNetwork {
public:
    static QNetwork build(Architecture arch, int maze_size, std::mt19937_64& rng,
                          const QnnOptions& qnn = {});
    static QNetwork build(Architecture arch, int maze_size, std::uint64_t seed,
                          const QnnOptions& qnn = {});
    static QNetwork build_hybrid(int maze_size, std::uint64_t seed, const QnnOptions& qnn = {});
    static QNetwork build_classical(int maze_size, std::uint64_t seed);

    Architecture architecture() const { return arch_; }
    int maze_size() const { return n_; }
    int kernel_size() const { return kernel_; }

    const std::vector<NamedParam>& parameters() const { return params_; }
    std::vector<autodiff::TensorPtr> parameter_tensors() const;
    long total_params() const;
    // Trainable layers in network order: {layer label, parameter count}.
    std::vector<std::pair<std::string, long>> layer_param_counts() const;

    LeafSet make_leaves() const;
    autodiff::Var forward(const env::Observation& obs, const LeafSet& leaves) const;
    autodiff::Var forward(const env::Observation& obs) const;
    std::array<double, env::kNumActions> q_values(const env::Observation& obs) const;

    // Output shape of every weighted stage for a given input, in network
    // order (activations do not change shapes).
    std::vector<std::vector<int>> layer_output_shapes(const env::Observation& obs) const;

    // Layer table: type, output shape, parameter count, plus a total row.
    std::string summary() const;

    QNetwork clone() const;
    // Copies parameter values (target-network sync). Architectures must match.
    void copy_from(const QNetwork& other);

    const std::shared_ptr<const quantum::SamplerQnn>& qnn() const { return qnn_; }

private:
    QNetwork() = default;

    Architecture arch_ = Architecture::ClassicalCnn;
    int n_ = 0;
    int kernel_ = 0;
    QnnOptions qnn_opts_;
    std::vector<NamedParam> params_;
    std::shared_ptr<const quantum::SamplerQnn> qnn_;
};

} // namespace qmaze::agent
