#pragma once

// Breadth-first-search reference for shortest paths to the exit,
// independent of the environment's own reachability check.

#include <deque>
#include <vector>

#include "qmaze/env/env.hpp"

namespace oracle {

// Shortest free-cell step count from every cell to the exit; -1 for walls
// and unreachable cells.
inline std::vector<int> bfs_distances_to_exit(const qmaze::env::Maze& maze) {
    const int n = maze.size();
    std::vector<int> dist(static_cast<std::size_t>(n) * n, -1);
    std::deque<qmaze::env::GridPos> queue{maze.exit()};
    dist[static_cast<std::size_t>(maze.exit().row) * n + maze.exit().col] = 0;
    while (!queue.empty()) {
        const auto p = queue.front();
        queue.pop_front();
        const int d = dist[static_cast<std::size_t>(p.row) * n + p.col];
        const qmaze::env::GridPos next[4] = {{p.row, p.col - 1}, {p.row - 1, p.col},
                                             {p.row, p.col + 1}, {p.row + 1, p.col}};
        for (const auto& q : next) {
            if (!maze.is_free(q)) continue;
            int& dq = dist[static_cast<std::size_t>(q.row) * n + q.col];
            if (dq < 0) {
                dq = d + 1;
                queue.push_back(q);
            }
        }
    }
    return dist;
}

// Actions from `cell` that strictly decrease the BFS distance to the exit.
inline std::vector<qmaze::env::Action> bfs_optimal_actions(const qmaze::env::Maze& maze,
                                                           qmaze::env::GridPos cell,
                                                           const std::vector<int>& dist) {
    const int n = maze.size();
    const int here = dist[static_cast<std::size_t>(cell.row) * n + cell.col];
    std::vector<qmaze::env::Action> out;
    for (int a = 0; a < qmaze::env::kNumActions; ++a) {
        const auto d = qmaze::env::action_delta(static_cast<qmaze::env::Action>(a));
        const qmaze::env::GridPos to{cell.row + d.row, cell.col + d.col};
        if (!maze.is_free(to)) continue;
        const int there = dist[static_cast<std::size_t>(to.row) * n + to.col];
        if (there >= 0 && there == here - 1) out.push_back(static_cast<qmaze::env::Action>(a));
    }
    return out;
}

} // namespace oracle
