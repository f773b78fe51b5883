#pragma once

#include <string>
#include <vector>

namespace qmaze::env {

struct GridPos {
    int row = 0;
    int col = 0;
    bool operator==(const GridPos&) const = default;
};

enum class Cell : unsigned char { Free, Wall };

// Immutable N x N grid world. Only constructible through the loaders, which
// enforce: N >= 3, exactly one start and one exit (both free, distinct), and
// an existing free-cell path from start to exit.
class Maze {
public:
    int size() const { return n_; }
    Cell at(GridPos p) const { return cells_[static_cast<std::size_t>(p.row) * n_ + p.col]; }
    bool in_bounds(GridPos p) const {
        return p.row >= 0 && p.row < n_ && p.col >= 0 && p.col < n_;
    }
    bool is_free(GridPos p) const { return in_bounds(p) && at(p) == Cell::Free; }
    GridPos start() const { return start_; }
    GridPos exit() const { return exit_; }

    std::vector<GridPos> free_cells() const;
    // Free cells excluding the exit; the start-cell candidates.
    std::vector<GridPos> free_non_exit_cells() const;

    friend Maze load_maze(const std::string& text);

private:
    Maze() = default;
    int n_ = 0;
    std::vector<Cell> cells_;
    GridPos start_;
    GridPos exit_;
};

// Parses the text maze format:
//   line 1: N
//   lines 2..N+1: N characters each from {'.' free, '#' wall, 'S' start, 'E' exit}
// Throws qmaze::config_error on malformed input and
// qmaze::unsolvable_maze_error when the exit is unreachable from the start.
Maze load_maze(const std::string& text);

// Reads the file and delegates to load_maze; a missing file is a
// config_error whose message names the path.
Maze load_maze_file(const std::string& path);

} // namespace qmaze::env
