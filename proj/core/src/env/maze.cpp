#include "qmaze/env/maze.hpp"

#include <deque>
#include <fstream>
#include <sstream>

#include "qmaze/errors.hpp"

namespace qmaze::env {

std::vector<GridPos> Maze::free_cells() const {
    std::vector<GridPos> out;
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c)
            if (at({r, c}) == Cell::Free) out.push_back({r, c});
    return out;
}

std::vector<GridPos> Maze::free_non_exit_cells() const {
    std::vector<GridPos> out;
    for (const auto& p : free_cells())
        if (!(p == exit_)) out.push_back(p);
    return out;
}

namespace {

bool exit_reachable(const Maze& m) {
    std::vector<char> seen(static_cast<std::size_t>(m.size()) * m.size(), 0);
    std::deque<GridPos> queue{m.start()};
    seen[static_cast<std::size_t>(m.start().row) * m.size() + m.start().col] = 1;
    while (!queue.empty()) {
        GridPos p = queue.front();
        queue.pop_front();
        if (p == m.exit()) return true;
        const GridPos next[4] = {{p.row, p.col - 1}, {p.row - 1, p.col},
                                 {p.row, p.col + 1}, {p.row + 1, p.col}};
        for (const auto& q : next) {
            if (!m.is_free(q)) continue;
            char& mark = seen[static_cast<std::size_t>(q.row) * m.size() + q.col];
            if (!mark) {
                mark = 1;
                queue.push_back(q);
            }
        }
    }
    return false;
}

} // namespace

Maze load_maze(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw config_error("maze file is empty");

    int n = 0;
    try {
        std::size_t pos = 0;
        n = std::stoi(line, &pos);
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\r')) ++pos;
        if (pos != line.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw config_error("maze file: first line must be the grid size, got \"" + line + "\"");
    }
    if (n < 3) throw config_error("maze size must be at least 3");

    Maze m;
    m.n_ = n;
    m.cells_.assign(static_cast<std::size_t>(n) * n, Cell::Free);
    int starts = 0, exits = 0;
    for (int r = 0; r < n; ++r) {
        if (!std::getline(in, line))
            throw config_error("maze file: expected " + std::to_string(n) + " grid rows");
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (static_cast<int>(line.size()) != n)
            throw config_error("maze file: row " + std::to_string(r + 1) + " must have exactly " +
                               std::to_string(n) + " characters");
        for (int c = 0; c < n; ++c) {
            switch (line[c]) {
                case '.': break;
                case '#': m.cells_[static_cast<std::size_t>(r) * n + c] = Cell::Wall; break;
                case 'S':
                    m.start_ = {r, c};
                    ++starts;
                    break;
                case 'E':
                    m.exit_ = {r, c};
                    ++exits;
                    break;
                default:
                    throw config_error(std::string("maze file: invalid character '") + line[c] +
                                       "' at row " + std::to_string(r + 1));
            }
        }
    }
    if (starts != 1) throw config_error("maze file must contain exactly one 'S'");
    if (exits != 1) throw config_error("maze file must contain exactly one 'E'");
    if (m.start_ == m.exit_) throw config_error("start and exit must be distinct");
    if (!exit_reachable(m))
        throw unsolvable_maze_error("maze has no free-cell path from start to exit");
    return m;
}

Maze load_maze_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open maze file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_maze(buf.str());
}

} // namespace qmaze::env
