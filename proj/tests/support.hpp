#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gapcert/gapcert.hpp"

namespace testsupport {

// Count k-vertex walks from `start` (1-based) by literally enumerating
// every walk with an explicit stack; independent of the library's
// recurrence. Only sane for small graphs and k.
inline std::uint64_t enumerate_walks_from(const gapcert::Graph& g, int start, int k) {
    struct Frame {
        int vertex;
        int depth;
    };
    std::uint64_t count = 0;
    std::vector<Frame> stack{{start - 1, 1}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.depth == k) {
            ++count;
            continue;
        }
        for (int w : g.neighbors(f.vertex)) stack.push_back({w, f.depth + 1});
    }
    return count;
}

inline std::vector<std::uint64_t> enumerate_walks(const gapcert::Graph& g, int k) {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(g.vertex_count()));
    for (int u = 1; u <= g.vertex_count(); ++u)
        counts[static_cast<std::size_t>(u - 1)] = enumerate_walks_from(g, u, k);
    return counts;
}

// Rebuild g with vertex u renamed to to_new[u-1] (a 1-based permutation).
inline gapcert::Graph relabel(const gapcert::Graph& g, const std::vector<int>& to_new) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges())
        edges.emplace_back(to_new[static_cast<std::size_t>(u - 1)],
                           to_new[static_cast<std::size_t>(v - 1)]);
    return gapcert::Graph::from_edge_list(g.vertex_count(), edges);
}

// Five-cycle with one chord: the smallest handy nonbipartite irregular graph.
inline gapcert::Graph c5_with_chord() {
    return gapcert::Graph::from_edge_list(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 3}});
}

inline gapcert::Graph two_triangles() {
    return gapcert::Graph::from_edge_list(6, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}});
}

}  // namespace testsupport
