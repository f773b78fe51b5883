#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qmaze/agent/network.hpp"
#include "qmaze/agent/policy.hpp"
#include "qmaze/agent/replay.hpp"
#include "qmaze/autodiff/adamw.hpp"
#include "qmaze/env/env.hpp"

namespace qmaze::trainer {

struct TrainConfig {
    std::string maze_path;  // used by train(config); train(maze, config) ignores it
    agent::Architecture architecture = agent::Architecture::ClassicalCnn;
    int episodes = 1000;
    int max_steps = 0;          // 0 -> 4*N*N
    int batch_size = 32;
    double gamma = 0.95;
    int replay_capacity = 0;    // 0 -> 10*N^4
    int target_sync_interval = 10;  // episodes
    autodiff::AdamWConfig optimizer;
    agent::EpsilonSchedule epsilon{1.0, 0.05, 0.0};  // tau 0 -> episodes/5
    std::uint64_t seed = 1;
    int eval_every = 25;        // greedy-policy check cadence; 0 disables
    bool episode_timing = false;
    agent::QnnOptions qnn;
};

// Fills the auto (zero) fields from the maze size.
TrainConfig resolve_defaults(TrainConfig config, const env::Maze& maze);

struct EpisodeRecord {
    int episode = 0;
    double reward = 0.0;
    int steps = 0;
    double epsilon = 0.0;
    bool win = false;
    std::int64_t ms = 0;  // 0 unless episode timing is enabled
};

struct TrainReport {
    std::vector<EpisodeRecord> episodes;
    double win_rate_pct = 0.0;
    double train_seconds = 0.0;
    long total_params = 0;
    // First episode (1-based) whose periodic greedy evaluation solved every
    // free start; -1 when never observed.
    int solved_at_episode = -1;
    double final_success_fraction = 0.0;
};

// Win counts over total episodes, as a percentage; 0 for an empty report.
double win_rate(const TrainReport& report);

// Mean over the batch of the squared Bellman residual
//   (r + gamma * (1-done) * max_a' Q_target(s',a') - Q(s,a))^2
// with the target treated as a constant (no gradient through target_net).
autodiff::Var q_loss(const agent::QNetwork& net, const agent::QNetwork& target_net,
                     const std::vector<agent::Transition>& batch, double gamma);

// Per-episode hook: called after the episode's record is appended. `net` and
// `target_net` views allow progress printing and invariant checks.
struct EpisodeEvent {
    const EpisodeRecord& record;
    const agent::QNetwork& net;
    const agent::QNetwork& target_net;
};
using EpisodeCallback = std::function<void(const EpisodeEvent&)>;

struct TrainResult {
    agent::QNetwork net;
    TrainReport report;
};

// Replay-buffer DQN: per episode, reset to a random free cell and roll out
// epsilon-greedy; per step, push the transition and (once the buffer holds a
// batch) zero gradients, sample, take the Q-loss, backpropagate, and step
// the optimizer. The target network is re-synced from the online network
// every target_sync_interval episodes. Deterministic for a fixed seed.
TrainResult train(const env::Maze& maze, const TrainConfig& config,
                  const EpisodeCallback& on_episode = {});

// Loads config.maze_path first; refuses to start on an unsolvable maze.
TrainResult train(const TrainConfig& config, const EpisodeCallback& on_episode = {});

} // namespace qmaze::trainer
