#include "qmaze/autodiff/adamw.hpp"

#include <cmath>
#include <stdexcept>

namespace qmaze::autodiff {

AdamW::AdamW(std::vector<TensorPtr> params, AdamWConfig config)
    : params_(std::move(params)), config_(config) {
    m_.reserve(params_.size());
    v_.reserve(params_.size());
    for (const auto& p : params_) {
        if (!p) throw std::invalid_argument("optimizer parameter must not be null");
        m_.emplace_back(p->size(), 0.0);
        v_.emplace_back(p->size(), 0.0);
    }
}

void AdamW::step() {
    for (const auto& p : params_)
        if (p->grad.size() != p->values.size())
            throw std::logic_error("AdamW::step called with missing gradients");

    ++t_;
    const double bc1 = 1.0 - std::pow(config_.beta1, static_cast<double>(t_));
    const double bc2 = 1.0 - std::pow(config_.beta2, static_cast<double>(t_));
    for (std::size_t i = 0; i < params_.size(); ++i) {
        Tensor& p = *params_[i];
        auto& m = m_[i];
        auto& v = v_[i];
        for (std::size_t j = 0; j < p.values.size(); ++j) {
            const double g = p.grad[j];
            p.values[j] -= config_.lr * config_.weight_decay * p.values[j];
            m[j] = config_.beta1 * m[j] + (1.0 - config_.beta1) * g;
            v[j] = config_.beta2 * v[j] + (1.0 - config_.beta2) * g * g;
            const double m_hat = m[j] / bc1;
            const double v_hat = v[j] / bc2;
            p.values[j] -= config_.lr * m_hat / (std::sqrt(v_hat) + config_.eps);
        }
    }
}

void AdamW::zero_grad() {
    for (const auto& p : params_) p->zero_grad();
}

} // namespace qmaze::autodiff
