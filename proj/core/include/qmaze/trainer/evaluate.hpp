#pragma once

#include <array>
#include <functional>
#include <vector>

#include "qmaze/agent/network.hpp"
#include "qmaze/env/env.hpp"

namespace qmaze::trainer {

// Anything that maps an observation to 4 Q-values can be evaluated.
using QFunction = std::function<std::array<double, env::kNumActions>(const env::Observation&)>;

struct RolloutResult {
    env::GridPos start;
    int steps = 0;
    bool success = false;
};

struct PolicyEval {
    double success_fraction = 0.0;
    std::vector<RolloutResult> rollouts;  // one per free non-exit start cell
    // Greedy action index per cell (row-major); -1 on walls.
    std::vector<int> policy_map;
};

// Greedy rollout (epsilon = 0) from every free non-exit cell, capped at
// 2*N*N steps each; success means reaching the exit.
PolicyEval evaluate_policy(const QFunction& q, const env::Maze& maze);
PolicyEval evaluate_policy(const agent::QNetwork& net, const env::Maze& maze);

} // namespace qmaze::trainer
