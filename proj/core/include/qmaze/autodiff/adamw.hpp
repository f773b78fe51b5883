#pragma once

#include <cstdint>
#include <vector>

#include "qmaze/autodiff/tensor.hpp"

namespace qmaze::autodiff {

struct AdamWConfig {
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    double weight_decay = 1e-2;
};

// AdamW with decoupled weight decay: each step first shrinks the parameter
// by lr*weight_decay*p, then applies the bias-corrected Adam update from the
// accumulated gradients.
class AdamW {
public:
    explicit AdamW(std::vector<TensorPtr> params, AdamWConfig config = {});

    // Throws std::logic_error if any parameter is missing its gradient.
    void step();
    void zero_grad();

    std::int64_t step_count() const { return t_; }
    const AdamWConfig& config() const { return config_; }
    const std::vector<std::vector<double>>& first_moments() const { return m_; }
    const std::vector<std::vector<double>>& second_moments() const { return v_; }

private:
    std::vector<TensorPtr> params_;
    AdamWConfig config_;
    std::vector<std::vector<double>> m_;
    std::vector<std::vector<double>> v_;
    std::int64_t t_ = 0;
};

} // namespace qmaze::autodiff
