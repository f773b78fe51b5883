#include "qmaze/cli/run_config.hpp"

#include <fstream>
#include <sstream>

#include "qmaze/errors.hpp"

namespace qmaze::cli {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

long long parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw config_error("config key \"" + key + "\": expected an integer, got \"" + value + "\"");
    }
}

double parse_real(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw config_error("config key \"" + key + "\": expected a number, got \"" + value + "\"");
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw config_error("config key \"" + key + "\": expected true/false, got \"" + value + "\"");
}

} // namespace

RunConfig parse_run_config(const std::string& text) {
    RunConfig rc;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("config line " + std::to_string(line_no) +
                               ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw config_error("config line " + std::to_string(line_no) +
                               ": expected key = value");

        auto& t = rc.train;
        if (key == "maze") t.maze_path = value;
        else if (key == "model") t.architecture = agent::architecture_from_name(value);
        else if (key == "episodes") t.episodes = static_cast<int>(parse_int(key, value));
        else if (key == "max_steps") t.max_steps = static_cast<int>(parse_int(key, value));
        else if (key == "batch_size") t.batch_size = static_cast<int>(parse_int(key, value));
        else if (key == "gamma") t.gamma = parse_real(key, value);
        else if (key == "replay_capacity") t.replay_capacity = static_cast<int>(parse_int(key, value));
        else if (key == "target_sync_interval") t.target_sync_interval = static_cast<int>(parse_int(key, value));
        else if (key == "lr") t.optimizer.lr = parse_real(key, value);
        else if (key == "beta1") t.optimizer.beta1 = parse_real(key, value);
        else if (key == "beta2") t.optimizer.beta2 = parse_real(key, value);
        else if (key == "adam_eps") t.optimizer.eps = parse_real(key, value);
        else if (key == "weight_decay") t.optimizer.weight_decay = parse_real(key, value);
        else if (key == "eps_start") t.epsilon.eps_start = parse_real(key, value);
        else if (key == "eps_end") t.epsilon.eps_end = parse_real(key, value);
        else if (key == "eps_decay") t.epsilon.tau = parse_real(key, value);
        else if (key == "seed") t.seed = static_cast<std::uint64_t>(parse_int(key, value));
        else if (key == "out") rc.out_dir = value;
        else if (key == "eval_every") t.eval_every = static_cast<int>(parse_int(key, value));
        else if (key == "episode_timing") t.episode_timing = parse_bool(key, value);
        else if (key == "feature_map_reps") t.qnn.feature_map_reps = static_cast<int>(parse_int(key, value));
        else if (key == "ansatz_reps") t.qnn.ansatz_reps = static_cast<int>(parse_int(key, value));
        else if (key == "entangle") t.qnn.entangle = parse_bool(key, value);
        else throw config_error("unknown config key \"" + key + "\"");
    }
    return rc;
}

RunConfig load_run_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_run_config(buf.str());
}

} // namespace qmaze::cli
