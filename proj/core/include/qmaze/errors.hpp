#pragma once

#include <stdexcept>
#include <string>

namespace qmaze {

// Bad user input: unreadable files, malformed configs, unknown keys.
// The CLI maps this to exit code 2.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Maze whose exit cannot be reached from the start. Exit code 3.
struct unsolvable_maze_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Checkpoint that cannot be applied (wrong architecture, wrong maze size,
// missing parameter arrays). Exit code 3.
struct checkpoint_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qmaze
