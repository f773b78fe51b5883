#pragma once

#include <random>
#include <vector>

#include "qmaze/env/env.hpp"

namespace qmaze::agent {

struct Transition {
    env::Observation state;
    env::Action action = env::Action::Left;
    double reward = 0.0;
    env::Observation next_state;
    bool done = false;
};

// Bounded ring buffer; once full, each push overwrites the oldest entry.
class ReplayBuffer {
public:
    explicit ReplayBuffer(std::size_t capacity);

    void push(Transition t);

    // Uniform sample of k distinct entries. Throws std::out_of_range when
    // fewer than k transitions are stored.
    std::vector<Transition> sample(std::size_t k, std::mt19937_64& rng) const;

    std::size_t size() const { return storage_.size(); }
    std::size_t capacity() const { return capacity_; }
    const Transition& at(std::size_t logical_index) const;  // 0 = oldest

private:
    std::size_t capacity_;
    std::vector<Transition> storage_;
    std::size_t cursor_ = 0;  // next write position once full
};

} // namespace qmaze::agent
