#pragma once

#include <array>
#include <random>

#include "qmaze/agent/network.hpp"
#include "qmaze/env/env.hpp"

namespace qmaze::agent {

// Exponential exploration decay: eps(e) = end + (start - end) * exp(-e/tau).
struct EpsilonSchedule {
    double eps_start = 1.0;
    double eps_end = 0.05;
    double tau = 200.0;  // decay time constant, in episodes
};

double epsilon_at(const EpsilonSchedule& schedule, int episode);

// Argmax over Q-values; ties resolve to the lowest action index.
env::Action greedy_action(const std::array<double, env::kNumActions>& q);

// With probability epsilon a uniform random action, otherwise greedy.
// Always consumes exactly one uniform draw for the explore/exploit choice,
// plus one more when exploring, so a run's rng stream is reproducible.
env::Action select_action(const QNetwork& net, const env::Observation& obs,
                          double epsilon, std::mt19937_64& rng);

} // namespace qmaze::agent
