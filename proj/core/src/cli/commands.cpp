#include "qmaze/cli/commands.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

#include "qmaze/agent/checkpoint.hpp"
#include "qmaze/cli/run_config.hpp"
#include "qmaze/cli/svg.hpp"
#include "qmaze/errors.hpp"
#include "qmaze/trainer/report_io.hpp"
#include "qmaze/trainer/trainer.hpp"

namespace qmaze::cli {

namespace fs = std::filesystem;

namespace {

int report_error(const std::exception& e, std::ostream& err, int code) {
    err << "error: " << e.what() << "\n";
    return code;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw config_error("cannot write file: " + path);
    out << content;
}

} // namespace

std::string render_policy_map(const env::Maze& maze, const std::vector<int>& policy_map) {
    const int n = maze.size();
    std::string out;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (c) out += ' ';
            const env::GridPos p{r, c};
            if (maze.at(p) == env::Cell::Wall)
                out += '#';
            else if (p == maze.exit())
                out += 'E';
            else
                out += env::action_arrow(
                    static_cast<env::Action>(policy_map[static_cast<std::size_t>(r) * n + c]));
        }
        out += '\n';
    }
    return out;
}

int cmd_train(const TrainArgs& args, std::ostream& out, std::ostream& err) {
    try {
        RunConfig rc = load_run_config_file(args.config_path);
        if (args.seed) rc.train.seed = *args.seed;
        if (args.out_dir) rc.out_dir = *args.out_dir;
        if (args.maze_path) rc.train.maze_path = *args.maze_path;
        if (args.model) rc.train.architecture = agent::architecture_from_name(*args.model);
        if (args.episodes) rc.train.episodes = *args.episodes;
        if (rc.train.maze_path.empty())
            throw config_error("config is missing the maze path (key \"maze\")");

        const env::Maze maze = env::load_maze_file(rc.train.maze_path);
        const trainer::TrainConfig config = trainer::resolve_defaults(rc.train, maze);
        fs::create_directories(rc.out_dir);

        trainer::EpisodeCallback progress;
        if (!args.quiet) {
            progress = [&out, &config](const trainer::EpisodeEvent& ev) {
                const int ep = ev.record.episode + 1;
                if (ep % 100 == 0 || ep == config.episodes) {
                    char buf[128];
                    std::snprintf(buf, sizeof buf,
                                  "episode %5d/%d  reward %8.3f  steps %3d  eps %.3f\n", ep,
                                  config.episodes, ev.record.reward, ev.record.steps,
                                  ev.record.epsilon);
                    out << buf;
                }
            };
        }

        trainer::TrainResult result = trainer::train(maze, config, progress);
        const fs::path dir(rc.out_dir);
        agent::save_checkpoint(result.net, (dir / "model.json").string());
        trainer::write_history_csv(result.report, (dir / "history.csv").string());
        trainer::write_summary_json(result.report, config, config.maze_path, maze.size(),
                                    (dir / "summary.json").string());

        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "model %s  params %ld  win rate %.2f%%  success %.2f  %.2fs\n",
                      agent::architecture_name(config.architecture), result.report.total_params,
                      result.report.win_rate_pct, result.report.final_success_fraction,
                      result.report.train_seconds);
        out << buf;
        out << "wrote " << (dir / "model.json").string() << ", " << (dir / "history.csv").string()
            << ", " << (dir / "summary.json").string() << "\n";
        return kExitOk;
    } catch (const config_error& e) {
        return report_error(e, err, kExitUsage);
    } catch (const unsolvable_maze_error& e) {
        return report_error(e, err, kExitDomain);
    } catch (const checkpoint_error& e) {
        return report_error(e, err, kExitDomain);
    }
}

int cmd_eval(const EvalArgs& args, std::ostream& out, std::ostream& err) {
    try {
        const agent::Checkpoint cp = agent::load_checkpoint(args.checkpoint_path);
        const env::Maze maze = env::load_maze_file(args.maze_path);
        if (cp.net.maze_size() != maze.size())
            throw checkpoint_error("checkpoint was trained for maze size " +
                                   std::to_string(cp.net.maze_size()) + ", maze has size " +
                                   std::to_string(maze.size()));

        const trainer::PolicyEval eval = trainer::evaluate_policy(cp.net, maze);
        char buf[64];
        std::snprintf(buf, sizeof buf, "success %.2f\n", eval.success_fraction);
        const std::string map = render_policy_map(maze, eval.policy_map);
        out << buf << map;
        if (args.out_path) write_text(*args.out_path, std::string(buf) + map);
        return kExitOk;
    } catch (const config_error& e) {
        return report_error(e, err, kExitUsage);
    } catch (const unsolvable_maze_error& e) {
        return report_error(e, err, kExitDomain);
    } catch (const checkpoint_error& e) {
        return report_error(e, err, kExitDomain);
    }
}

namespace {

struct BenchRun {
    std::string model;
    std::uint64_t seed = 0;
    trainer::TrainReport report;
};

double mean(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

double sample_std(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const double m = mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(v.size() - 1));
}

} // namespace

int cmd_benchmark(const BenchmarkArgs& args, std::ostream& out, std::ostream& err) {
    try {
        if (args.models.empty()) throw config_error("benchmark needs at least one model");
        if (args.seeds.empty()) throw config_error("benchmark needs at least one seed");
        if (args.jobs < 1) throw config_error("jobs must be >= 1");

        const std::string maze_path =
            args.maze_path ? *args.maze_path
                           : (fs::path("mazes") / ("maze" + std::to_string(args.maze_size) + ".txt"))
                                 .string();
        const env::Maze maze = env::load_maze_file(maze_path);
        const int episodes = args.episodes ? *args.episodes : (args.maze_size >= 5 ? 2000 : 1000);

        std::vector<BenchRun> runs;
        for (const auto& model : args.models)
            for (const auto seed : args.seeds) runs.push_back({model, seed, {}});

        // independent configurations; trivially parallel
        std::mutex log_mutex;
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= runs.size()) return;
                BenchRun& run = runs[i];
                trainer::TrainConfig config;
                config.maze_path = maze_path;
                config.architecture = agent::architecture_from_name(run.model);
                config.episodes = episodes;
                config.seed = run.seed;
                run.report = trainer::train(maze, config).report;
                if (!args.quiet) {
                    std::scoped_lock lock(log_mutex);
                    char buf[160];
                    std::snprintf(buf, sizeof buf,
                                  "done: %s seed %llu  win rate %.2f%%  %.2fs\n",
                                  run.model.c_str(), static_cast<unsigned long long>(run.seed),
                                  run.report.win_rate_pct, run.report.train_seconds);
                    out << buf;
                }
            }
        };
        // architecture names are validated before any training starts
        for (const auto& r : runs) agent::architecture_from_name(r.model);

        if (args.jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            const int n_threads = std::min<int>(args.jobs, static_cast<int>(runs.size()));
            pool.reserve(static_cast<std::size_t>(n_threads));
            for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }

        fs::create_directories(args.out_dir);
        for (const auto& run : runs) {
            const std::string stem = run.model + "_s" + std::to_string(run.seed);
            trainer::TrainConfig config;
            config.maze_path = maze_path;
            config.architecture = agent::architecture_from_name(run.model);
            config.episodes = episodes;
            config.seed = run.seed;
            trainer::write_history_csv(run.report,
                                       (fs::path(args.out_dir) / (stem + "_history.csv")).string());
            trainer::write_summary_json(run.report, trainer::resolve_defaults(config, maze),
                                        maze_path, maze.size(),
                                        (fs::path(args.out_dir) / (stem + "_summary.json")).string());
        }

        char buf[160];
        std::snprintf(buf, sizeof buf, "%-14s %-11s %-18s %s\n", "Model", "Model Size",
                      "Win Rate", "Training Runtime");
        out << buf;
        for (const auto& model : args.models) {
            std::vector<double> rates, seconds;
            long params = 0;
            for (const auto& run : runs) {
                if (run.model != model) continue;
                rates.push_back(run.report.win_rate_pct);
                seconds.push_back(run.report.train_seconds);
                params = run.report.total_params;
            }
            const std::string label =
                agent::architecture_from_name(model) == agent::Architecture::HybridQnn
                    ? "Hybrid QNN"
                    : "Classical CNN";
            std::string rate;
            char rbuf[64];
            if (rates.size() > 1)
                std::snprintf(rbuf, sizeof rbuf, "%.2f +/- %.2f %%", mean(rates),
                              sample_std(rates));
            else
                std::snprintf(rbuf, sizeof rbuf, "%.2f %%", mean(rates));
            rate = rbuf;
            std::snprintf(buf, sizeof buf, "%-14s %-11ld %-18s %.2f sec\n", label.c_str(), params,
                          rate.c_str(), mean(seconds));
            out << buf;
        }
        return kExitOk;
    } catch (const config_error& e) {
        return report_error(e, err, kExitUsage);
    } catch (const unsolvable_maze_error& e) {
        return report_error(e, err, kExitDomain);
    }
}

int cmd_plot(const PlotArgs& args, std::ostream& out, std::ostream& err) {
    try {
        if (args.csv_paths.empty()) throw config_error("plot needs at least one history CSV");
        fs::create_directories(args.out_dir);
        for (const auto& csv : args.csv_paths) {
            const auto records = trainer::read_history_csv(csv);
            if (records.empty()) throw config_error("history file has no rows: " + csv);
            std::vector<double> episodes, epsilons, rewards;
            episodes.reserve(records.size());
            for (const auto& r : records) {
                episodes.push_back(r.episode);
                epsilons.push_back(r.epsilon);
                rewards.push_back(r.reward);
            }
            const std::string stem = fs::path(csv).stem().string();
            const fs::path eps_path = fs::path(args.out_dir) / (stem + "_epsilon.svg");
            const fs::path reward_path = fs::path(args.out_dir) / (stem + "_reward.svg");
            write_text(eps_path.string(), svg_line_chart(stem + ": epsilon profile", "episode",
                                                         "epsilon", episodes, epsilons));
            write_text(reward_path.string(), svg_line_chart(stem + ": reward history", "episode",
                                                            "reward", episodes, rewards));
            out << "wrote " << eps_path.string() << ", " << reward_path.string() << "\n";
        }
        return kExitOk;
    } catch (const config_error& e) {
        return report_error(e, err, kExitUsage);
    }
}

} // namespace qmaze::cli
