#pragma once

#include <string>
#include <vector>

#include "qmaze/trainer/trainer.hpp"

namespace qmaze::trainer {

// history.csv: header "episode,reward,steps,epsilon,win,ms", one row per
// episode, reward/epsilon with 6 decimals, win as 0/1. Identical reports
// produce byte-identical files.
std::string history_csv(const TrainReport& report);
void write_history_csv(const TrainReport& report, const std::string& path);

// Parses a history CSV; throws qmaze::config_error on malformed content.
std::vector<EpisodeRecord> read_history_csv(const std::string& path);

// Win rate recomputed from exported win flags, same formula as win_rate().
double win_rate_from_records(const std::vector<EpisodeRecord>& records);

// summary.json fields: model, maze, maze_size, total_params, win_rate_pct,
// train_seconds, seed, solved_at_episode, final_success_fraction, config.
std::string summary_json(const TrainReport& report, const TrainConfig& config,
                         const std::string& maze_path, int maze_size);
void write_summary_json(const TrainReport& report, const TrainConfig& config,
                        const std::string& maze_path, int maze_size,
                        const std::string& path);

} // namespace qmaze::trainer
