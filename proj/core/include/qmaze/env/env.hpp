#pragma once

#include <optional>
#include <random>
#include <vector>

#include "qmaze/env/maze.hpp"

namespace qmaze::env {

// Fixed action order; the Q-network's 4 outputs use the same indices.
enum class Action : int { Left = 0, Up = 1, Right = 2, Down = 3 };

inline constexpr int kNumActions = 4;

GridPos action_delta(Action a);
const char* action_name(Action a);
// UTF-8 arrow used by the policy-map rendering.
const char* action_arrow(Action a);

// Shaped reward scheme. Every non-winning move costs something, so the
// cumulative reward strictly decreases until the episode ends; crossing
// lose_threshold terminates it.
inline constexpr double kWinReward = 1.0;
inline constexpr double kStepReward = -0.04;     // move onto an unvisited free cell
inline constexpr double kRevisitReward = -0.25;  // move onto an already-visited cell
inline constexpr double kBlockedReward = -0.75;  // bump into a wall or the boundary

inline double lose_threshold(int maze_size) {
    return -0.5 * maze_size * maze_size;
}

enum class Status { Ongoing, Win, Lose };

struct EnvState {
    GridPos agent;
    std::vector<char> visited;  // maze_size^2 flags
    double cumulative_reward = 0.0;
    int step_count = 0;
    Status status = Status::Ongoing;

    bool was_visited(GridPos p, int maze_size) const {
        return visited[static_cast<std::size_t>(p.row) * maze_size + p.col] != 0;
    }
};

// Single-channel, row-major 1 x n x n grid: 0.0 wall, 1.0 free, 0.5 agent.
struct Observation {
    int n = 0;
    std::vector<double> values;

    bool operator==(const Observation&) const = default;
};

// Places the agent at `start_override` when given (must be a free cell),
// otherwise at a uniformly random free non-exit cell.
EnvState reset(const Maze& maze, std::optional<GridPos> start_override,
               std::mt19937_64& rng);

struct StepResult {
    EnvState state;
    double reward = 0.0;
    Observation observation;
};

// One attempted move. Blocked moves leave the position unchanged. Throws
// std::logic_error when the episode is already terminal.
StepResult step(const Maze& maze, const EnvState& state, Action action);

Observation encode_observation(const Maze& maze, const EnvState& state);

// Actions whose target cell is inside the grid and free.
std::vector<Action> valid_actions(const Maze& maze, const EnvState& state);

} // namespace qmaze::env
