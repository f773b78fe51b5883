#pragma once

#include <string>

#include "qmaze/trainer/trainer.hpp"

namespace qmaze::cli {

// Flat "key = value" run configuration with '#' comments. Unknown keys are
// rejected; missing keys keep the TrainConfig defaults. Keys:
//   maze, model, episodes, max_steps, batch_size, gamma, replay_capacity,
//   target_sync_interval, lr, beta1, beta2, adam_eps, weight_decay,
//   eps_start, eps_end, eps_decay, seed, out, eval_every, episode_timing,
//   feature_map_reps, ansatz_reps, entangle
struct RunConfig {
    trainer::TrainConfig train;
    std::string out_dir = "runs/out";
};

RunConfig parse_run_config(const std::string& text);
RunConfig load_run_config_file(const std::string& path);

} // namespace qmaze::cli
