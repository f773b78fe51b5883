#pragma once

#include <optional>
#include <string>

#include "qmaze/agent/network.hpp"
#include "qmaze/autodiff/adamw.hpp"

namespace qmaze::agent {

// Optimizer moments saved alongside the parameters when requested.
struct OptimizerState {
    std::int64_t step_count = 0;
    std::vector<std::vector<double>> first_moments;
    std::vector<std::vector<double>> second_moments;
};

// Single-document JSON checkpoint: architecture id, maze size, named
// parameter arrays, optional optimizer state. Values are written with
// enough digits to round-trip exactly.
void save_checkpoint(const QNetwork& net, const std::string& path,
                     const OptimizerState* optimizer = nullptr);

struct Checkpoint {
    QNetwork net;
    std::optional<OptimizerState> optimizer;
};

// Throws qmaze::config_error when the file is unreadable or not JSON, and
// qmaze::checkpoint_error when the document does not describe a buildable
// network (unknown architecture, wrong array lengths).
Checkpoint load_checkpoint(const std::string& path);

} // namespace qmaze::agent
