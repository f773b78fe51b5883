#pragma once

#include <cstdint>
#include <vector>

#include "qmaze/agent/policy.hpp"
#include "qmaze/env/env.hpp"

namespace qmaze::trainer {

// Plain Q-table over (cell, action), updated with
//   Q(s,a) += alpha * (r + gamma * (1-done) * max_a' Q(s',a') - Q(s,a)).
// Serves as the small-instance reference for the DQN pipeline.
class TabularQ {
public:
    explicit TabularQ(int maze_size);

    double q(env::GridPos cell, env::Action a) const;
    double& q(env::GridPos cell, env::Action a);
    double max_q(env::GridPos cell) const;
    env::Action greedy(env::GridPos cell) const;  // ties -> lowest action index
    // Gap between the best and second-best action values at a cell.
    double greedy_gap(env::GridPos cell) const;
    int maze_size() const { return n_; }

private:
    int n_;
    std::vector<double> table_;
};

struct TabularConfig {
    double alpha = 0.25;
    double gamma = 0.95;
    int episodes = 5000;
    int max_steps = 0;  // 0 -> 4*N*N
    agent::EpsilonSchedule epsilon{1.0, 0.05, 0.0};  // tau 0 -> episodes/5
    std::uint64_t seed = 7;
};

// Epsilon-greedy tabular Q-learning under the same environment dynamics and
// reward scheme as the DQN trainer.
TabularQ tabular_q_learn(const env::Maze& maze, const TabularConfig& config);

} // namespace qmaze::trainer
