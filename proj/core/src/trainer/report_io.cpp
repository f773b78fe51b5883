#include "qmaze/trainer/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qmaze/errors.hpp"

namespace qmaze::trainer {

std::string history_csv(const TrainReport& report) {
    std::string out = "episode,reward,steps,epsilon,win,ms\n";
    char buf[128];
    for (const auto& e : report.episodes) {
        std::snprintf(buf, sizeof buf, "%d,%.6f,%d,%.6f,%d,%lld\n", e.episode, e.reward,
                      e.steps, e.epsilon, e.win ? 1 : 0, static_cast<long long>(e.ms));
        out += buf;
    }
    return out;
}

void write_history_csv(const TrainReport& report, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw config_error("cannot write history file: " + path);
    out << history_csv(report);
}

std::vector<EpisodeRecord> read_history_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open history file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw config_error("history file is empty: " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "episode,reward,steps,epsilon,win,ms")
        throw config_error("history file has an unexpected header: " + path);

    std::vector<EpisodeRecord> records;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        EpisodeRecord rec;
        int win = 0;
        long long ms = 0;
        const int got = std::sscanf(line.c_str(), "%d,%lf,%d,%lf,%d,%lld", &rec.episode,
                                    &rec.reward, &rec.steps, &rec.epsilon, &win, &ms);
        if (got != 6)
            throw config_error("history file " + path + ": malformed row at line " +
                               std::to_string(line_no));
        rec.win = win != 0;
        rec.ms = ms;
        records.push_back(rec);
    }
    return records;
}

double win_rate_from_records(const std::vector<EpisodeRecord>& records) {
    if (records.empty()) return 0.0;
    long wins = 0;
    for (const auto& r : records) wins += r.win ? 1 : 0;
    return 100.0 * static_cast<double>(wins) / static_cast<double>(records.size());
}

std::string summary_json(const TrainReport& report, const TrainConfig& config,
                         const std::string& maze_path, int maze_size) {
    nlohmann::ordered_json doc;
    doc["model"] = agent::architecture_name(config.architecture);
    doc["maze"] = maze_path;
    doc["maze_size"] = maze_size;
    doc["total_params"] = report.total_params;
    doc["win_rate_pct"] = report.win_rate_pct;
    doc["train_seconds"] = report.train_seconds;
    doc["seed"] = config.seed;
    doc["solved_at_episode"] = report.solved_at_episode;
    doc["final_success_fraction"] = report.final_success_fraction;
    doc["config"] = {{"episodes", config.episodes},
                     {"max_steps", config.max_steps},
                     {"batch_size", config.batch_size},
                     {"gamma", config.gamma},
                     {"replay_capacity", config.replay_capacity},
                     {"target_sync_interval", config.target_sync_interval},
                     {"lr", config.optimizer.lr},
                     {"beta1", config.optimizer.beta1},
                     {"beta2", config.optimizer.beta2},
                     {"adam_eps", config.optimizer.eps},
                     {"weight_decay", config.optimizer.weight_decay},
                     {"eps_start", config.epsilon.eps_start},
                     {"eps_end", config.epsilon.eps_end},
                     {"eps_decay", config.epsilon.tau},
                     {"eval_every", config.eval_every},
                     {"episode_timing", config.episode_timing},
                     {"feature_map_reps", config.qnn.feature_map_reps},
                     {"ansatz_reps", config.qnn.ansatz_reps},
                     {"entangle", config.qnn.entangle}};
    return doc.dump(1) + "\n";
}

void write_summary_json(const TrainReport& report, const TrainConfig& config,
                        const std::string& maze_path, int maze_size,
                        const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw config_error("cannot write summary file: " + path);
    out << summary_json(report, config, maze_path, maze_size);
}

} // namespace qmaze::trainer
