#include "qmaze/env/env.hpp"

#include <stdexcept>

namespace qmaze::env {

GridPos action_delta(Action a) {
    switch (a) {
        case Action::Left: return {0, -1};
        case Action::Up: return {-1, 0};
        case Action::Right: return {0, 1};
        case Action::Down: return {1, 0};
    }
    return {0, 0};
}

const char* action_name(Action a) {
    switch (a) {
        case Action::Left: return "left";
        case Action::Up: return "up";
        case Action::Right: return "right";
        case Action::Down: return "down";
    }
    return "?";
}

const char* action_arrow(Action a) {
    switch (a) {
        case Action::Left: return "←";
        case Action::Up: return "↑";
        case Action::Right: return "→";
        case Action::Down: return "↓";
    }
    return "?";
}

EnvState reset(const Maze& maze, std::optional<GridPos> start_override,
               std::mt19937_64& rng) {
    GridPos start;
    if (start_override) {
        if (!maze.is_free(*start_override))
            throw std::invalid_argument("start override must be a free cell");
        start = *start_override;
    } else {
        const auto candidates = maze.free_non_exit_cells();
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        start = candidates[pick(rng)];
    }
    EnvState s;
    s.agent = start;
    s.visited.assign(static_cast<std::size_t>(maze.size()) * maze.size(), 0);
    s.visited[static_cast<std::size_t>(start.row) * maze.size() + start.col] = 1;
    s.status = (start == maze.exit()) ? Status::Win : Status::Ongoing;
    return s;
}

StepResult step(const Maze& maze, const EnvState& state, Action action) {
    if (state.status != Status::Ongoing)
        throw std::logic_error("step called on a terminal episode");

    EnvState next = state;
    const GridPos d = action_delta(action);
    const GridPos target{state.agent.row + d.row, state.agent.col + d.col};

    double reward;
    if (!maze.is_free(target)) {
        reward = kBlockedReward;
    } else if (target == maze.exit()) {
        next.agent = target;
        reward = kWinReward;
    } else if (state.was_visited(target, maze.size())) {
        next.agent = target;
        reward = kRevisitReward;
    } else {
        next.agent = target;
        reward = kStepReward;
    }

    next.visited[static_cast<std::size_t>(next.agent.row) * maze.size() + next.agent.col] = 1;
    next.cumulative_reward += reward;
    next.step_count += 1;
    if (next.agent == maze.exit())
        next.status = Status::Win;
    else if (next.cumulative_reward < lose_threshold(maze.size()))
        next.status = Status::Lose;

    return {next, reward, encode_observation(maze, next)};
}

Observation encode_observation(const Maze& maze, const EnvState& state) {
    const int n = maze.size();
    Observation obs;
    obs.n = n;
    obs.values.resize(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            obs.values[static_cast<std::size_t>(r) * n + c] =
                maze.at({r, c}) == Cell::Wall ? 0.0 : 1.0;
    obs.values[static_cast<std::size_t>(state.agent.row) * n + state.agent.col] = 0.5;
    return obs;
}

std::vector<Action> valid_actions(const Maze& maze, const EnvState& state) {
    std::vector<Action> out;
    for (int a = 0; a < kNumActions; ++a) {
        const GridPos d = action_delta(static_cast<Action>(a));
        if (maze.is_free({state.agent.row + d.row, state.agent.col + d.col}))
            out.push_back(static_cast<Action>(a));
    }
    return out;
}

} // namespace qmaze::env
