#pragma once

#include <cstddef>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qmaze::autodiff {

inline std::size_t shape_size(const std::vector<int>& shape) {
    std::size_t n = 1;
    for (int d : shape) {
        if (d <= 0) throw std::invalid_argument("tensor dimensions must be positive");
        n *= static_cast<std::size_t>(d);
    }
    return n;
}

// Dense row-major tensor of doubles plus an optional gradient buffer of the
// same length. Parameter tensors are shared (via TensorPtr) between the
// network that owns them and the graph leaves built during a forward pass;
// backward() accumulates into `grad`.
struct Tensor {
    std::vector<int> shape;
    std::vector<double> values;
    bool requires_grad = false;
    std::vector<double> grad;

    Tensor() = default;

    explicit Tensor(std::vector<int> shape_, bool requires_grad_ = false)
        : shape(std::move(shape_)), values(shape_size(shape), 0.0),
          requires_grad(requires_grad_) {}

    Tensor(std::vector<int> shape_, std::vector<double> values_, bool requires_grad_ = false)
        : shape(std::move(shape_)), values(std::move(values_)), requires_grad(requires_grad_) {
        if (values.size() != shape_size(shape))
            throw std::invalid_argument("tensor value count does not match shape");
    }

    std::size_t size() const { return values.size(); }

    void ensure_grad() {
        if (grad.size() != values.size()) grad.assign(values.size(), 0.0);
    }

    void zero_grad() { grad.assign(values.size(), 0.0); }
};

using TensorPtr = std::shared_ptr<Tensor>;

inline TensorPtr make_tensor(std::vector<int> shape, bool requires_grad = false) {
    return std::make_shared<Tensor>(std::move(shape), requires_grad);
}

inline TensorPtr make_tensor(std::vector<int> shape, std::vector<double> values,
                             bool requires_grad = false) {
    return std::make_shared<Tensor>(std::move(shape), std::move(values), requires_grad);
}

} // namespace qmaze::autodiff
