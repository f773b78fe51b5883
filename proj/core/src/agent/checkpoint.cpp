#include "qmaze/agent/checkpoint.hpp"

#include <fstream>

#include <json.hpp>

#include "qmaze/errors.hpp"

namespace qmaze::agent {

namespace {
constexpr const char* kFormatTag = "qmaze-checkpoint-v1";
}

void save_checkpoint(const QNetwork& net, const std::string& path,
                     const OptimizerState* optimizer) {
    nlohmann::ordered_json doc;
    doc["format"] = kFormatTag;
    doc["architecture"] = architecture_name(net.architecture());
    doc["maze_size"] = net.maze_size();
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& p : net.parameters()) params[p.name] = p.tensor->values;
    doc["params"] = std::move(params);
    if (optimizer) {
        doc["optimizer"] = {{"step_count", optimizer->step_count},
                            {"m", optimizer->first_moments},
                            {"v", optimizer->second_moments}};
    }
    std::ofstream out(path);
    if (!out) throw config_error("cannot write checkpoint file: " + path);
    out << doc.dump(1) << '\n';
}

Checkpoint load_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open checkpoint file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw config_error("checkpoint is not valid JSON: " + std::string(e.what()));
    }

    try {
        if (doc.value("format", "") != kFormatTag)
            throw checkpoint_error("unrecognized checkpoint format");
        const Architecture arch = architecture_from_name(doc.at("architecture").get<std::string>());
        const int maze_size = doc.at("maze_size").get<int>();

        // seed is irrelevant: every parameter is overwritten below
        Checkpoint cp{QNetwork::build(arch, maze_size, std::uint64_t{0}), std::nullopt};
        const auto& params = doc.at("params");
        for (const auto& p : cp.net.parameters()) {
            if (!params.contains(p.name))
                throw checkpoint_error("checkpoint is missing parameter array \"" + p.name + "\"");
            const auto values = params.at(p.name).get<std::vector<double>>();
            if (values.size() != p.tensor->size())
                throw checkpoint_error("parameter \"" + p.name + "\" has length " +
                                       std::to_string(values.size()) + ", expected " +
                                       std::to_string(p.tensor->size()));
            p.tensor->values = values;
        }
        if (doc.contains("optimizer")) {
            OptimizerState opt;
            opt.step_count = doc["optimizer"].at("step_count").get<std::int64_t>();
            opt.first_moments = doc["optimizer"].at("m").get<std::vector<std::vector<double>>>();
            opt.second_moments = doc["optimizer"].at("v").get<std::vector<std::vector<double>>>();
            cp.optimizer = std::move(opt);
        }
        return cp;
    } catch (const nlohmann::json::exception& e) {
        throw checkpoint_error("malformed checkpoint: " + std::string(e.what()));
    } catch (const config_error& e) {
        throw checkpoint_error(e.what());
    }
}

} // namespace qmaze::agent
