#include "qmaze/trainer/tabular_q.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qmaze::trainer {

TabularQ::TabularQ(int maze_size) : n_(maze_size) {
    if (maze_size < 1) throw std::invalid_argument("maze size must be positive");
    table_.assign(static_cast<std::size_t>(n_) * n_ * env::kNumActions, 0.0);
}

double TabularQ::q(env::GridPos cell, env::Action a) const {
    return table_[(static_cast<std::size_t>(cell.row) * n_ + cell.col) * env::kNumActions +
                  static_cast<int>(a)];
}

double& TabularQ::q(env::GridPos cell, env::Action a) {
    return table_[(static_cast<std::size_t>(cell.row) * n_ + cell.col) * env::kNumActions +
                  static_cast<int>(a)];
}

double TabularQ::max_q(env::GridPos cell) const {
    double best = q(cell, env::Action::Left);
    for (int a = 1; a < env::kNumActions; ++a)
        best = std::max(best, q(cell, static_cast<env::Action>(a)));
    return best;
}

env::Action TabularQ::greedy(env::GridPos cell) const {
    int best = 0;
    for (int a = 1; a < env::kNumActions; ++a)
        if (q(cell, static_cast<env::Action>(a)) > q(cell, static_cast<env::Action>(best)))
            best = a;
    return static_cast<env::Action>(best);
}

double TabularQ::greedy_gap(env::GridPos cell) const {
    double best = -1e300, second = -1e300;
    for (int a = 0; a < env::kNumActions; ++a) {
        const double v = q(cell, static_cast<env::Action>(a));
        if (v > best) {
            second = best;
            best = v;
        } else if (v > second) {
            second = v;
        }
    }
    return best - second;
}

TabularQ tabular_q_learn(const env::Maze& maze, const TabularConfig& config0) {
    TabularConfig config = config0;
    if (config.max_steps <= 0) config.max_steps = 4 * maze.size() * maze.size();
    if (config.epsilon.tau <= 0.0)
        config.epsilon.tau = std::max(1.0, config.episodes / 5.0);

    TabularQ table(maze.size());
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::uniform_int_distribution<int> random_action(0, env::kNumActions - 1);

    for (int ep = 0; ep < config.episodes; ++ep) {
        const double eps = agent::epsilon_at(config.epsilon, ep);
        env::EnvState state = env::reset(maze, std::nullopt, rng);
        for (int s = 0; s < config.max_steps && state.status == env::Status::Ongoing; ++s) {
            env::Action action;
            if (unif(rng) < eps)
                action = static_cast<env::Action>(random_action(rng));
            else
                action = table.greedy(state.agent);

            const env::StepResult result = env::step(maze, state, action);
            const bool done = result.state.status != env::Status::Ongoing;
            const double bootstrap = done ? 0.0 : config.gamma * table.max_q(result.state.agent);
            double& cell = table.q(state.agent, action);
            cell += config.alpha * (result.reward + bootstrap - cell);
            state = result.state;
        }
    }
    return table;
}

} // namespace qmaze::trainer
