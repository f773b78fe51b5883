#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qmaze/env/maze.hpp"
#include "qmaze/trainer/evaluate.hpp"

namespace qmaze::cli {

// Exit codes shared by every command: 0 success, 2 usage/config error,
// 3 domain error (unsolvable maze, incompatible checkpoint).
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

struct TrainArgs {
    std::string config_path;
    std::optional<std::uint64_t> seed;      // overrides the config file
    std::optional<std::string> out_dir;     // overrides the config file
    std::optional<std::string> maze_path;   // overrides the config file
    std::optional<std::string> model;       // overrides the config file
    std::optional<int> episodes;            // overrides the config file
    bool quiet = false;
};

// Trains per config and writes model.json, history.csv, summary.json into
// the output directory.
int cmd_train(const TrainArgs& args, std::ostream& out, std::ostream& err);

struct EvalArgs {
    std::string checkpoint_path;
    std::string maze_path;
    std::optional<std::string> out_path;  // also write the rendered map here
};

// Prints the greedy success fraction and an arrow-per-cell policy map.
int cmd_eval(const EvalArgs& args, std::ostream& out, std::ostream& err);

struct BenchmarkArgs {
    int maze_size = 4;
    std::vector<std::string> models;     // "classical", "hybrid"
    std::vector<std::uint64_t> seeds;
    std::optional<int> episodes;         // default: 1000 (N<=4) / 2000 (N>=5)
    std::string out_dir = "bench_out";
    std::optional<std::string> maze_path;  // default: mazes/maze<N>.txt
    int jobs = 1;
    bool quiet = false;
};

// Trains every (model, seed) pair and prints a comparison table with
// Model / Model Size / Win Rate / Training Runtime columns.
int cmd_benchmark(const BenchmarkArgs& args, std::ostream& out, std::ostream& err);

struct PlotArgs {
    std::vector<std::string> csv_paths;
    std::string out_dir = ".";
};

// Writes <stem>_epsilon.svg and <stem>_reward.svg per input history CSV.
int cmd_plot(const PlotArgs& args, std::ostream& out, std::ostream& err);

// '#' walls, 'E' exit, UTF-8 arrows on free cells (greedy action).
std::string render_policy_map(const env::Maze& maze, const std::vector<int>& policy_map);

} // namespace qmaze::cli
