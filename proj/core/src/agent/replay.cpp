#include "qmaze/agent/replay.hpp"

#include <numeric>
#include <stdexcept>

namespace qmaze::agent {

ReplayBuffer::ReplayBuffer(std::size_t capacity) : capacity_(capacity) {
    if (capacity == 0) throw std::invalid_argument("replay capacity must be positive");
    storage_.reserve(capacity);
}

void ReplayBuffer::push(Transition t) {
    if (storage_.size() < capacity_) {
        storage_.push_back(std::move(t));
    } else {
        storage_[cursor_] = std::move(t);
        cursor_ = (cursor_ + 1) % capacity_;
    }
}

const Transition& ReplayBuffer::at(std::size_t logical_index) const {
    if (logical_index >= storage_.size())
        throw std::out_of_range("replay buffer index out of range");
    if (storage_.size() < capacity_) return storage_[logical_index];
    return storage_[(cursor_ + logical_index) % capacity_];
}

std::vector<Transition> ReplayBuffer::sample(std::size_t k, std::mt19937_64& rng) const {
    if (k > storage_.size())
        throw std::out_of_range("replay buffer holds " + std::to_string(storage_.size()) +
                                " transitions, cannot sample " + std::to_string(k));
    // partial Fisher-Yates over an index vector: without replacement,
    // deterministic under the caller's rng
    std::vector<std::size_t> idx(storage_.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Transition> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, idx.size() - 1);
        std::swap(idx[i], idx[pick(rng)]);
        out.push_back(storage_[idx[i]]);
    }
    return out;
}

} // namespace qmaze::agent
