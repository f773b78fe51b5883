#include "qmaze/trainer/evaluate.hpp"

#include <random>

#include "qmaze/agent/policy.hpp"

namespace qmaze::trainer {

PolicyEval evaluate_policy(const QFunction& q, const env::Maze& maze) {
    const int n = maze.size();
    PolicyEval eval;
    eval.policy_map.assign(static_cast<std::size_t>(n) * n, -1);

    // rng only feeds reset(); starts are explicit
    std::mt19937_64 rng(0);

    for (const auto& cell : maze.free_cells()) {
        env::EnvState probe = env::reset(maze, cell, rng);
        const auto obs = env::encode_observation(maze, probe);
        eval.policy_map[static_cast<std::size_t>(cell.row) * n + cell.col] =
            static_cast<int>(agent::greedy_action(q(obs)));
    }

    const auto starts = maze.free_non_exit_cells();
    const int step_cap = 2 * n * n;
    int successes = 0;
    for (const auto& start : starts) {
        env::EnvState state = env::reset(maze, start, rng);
        int steps = 0;
        while (state.status == env::Status::Ongoing && steps < step_cap) {
            const auto obs = env::encode_observation(maze, state);
            state = env::step(maze, state, agent::greedy_action(q(obs))).state;
            ++steps;
        }
        const bool success = state.status == env::Status::Win;
        successes += success ? 1 : 0;
        eval.rollouts.push_back({start, steps, success});
    }
    eval.success_fraction =
        starts.empty() ? 0.0 : static_cast<double>(successes) / static_cast<double>(starts.size());
    return eval;
}

PolicyEval evaluate_policy(const agent::QNetwork& net, const env::Maze& maze) {
    return evaluate_policy([&net](const env::Observation& obs) { return net.q_values(obs); },
                           maze);
}

} // namespace qmaze::trainer
