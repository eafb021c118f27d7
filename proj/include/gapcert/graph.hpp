#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gapcert/errors.hpp"

namespace gapcert {

// Immutable undirected simple graph in compressed (CSR) form.
// Vertices are 0-based everywhere inside the library; 1-based ids appear
// only at the I/O boundary (edge lists, error messages, reports).
class Graph {
public:
    Graph() = default;

    // Builds a graph from 1-based edge endpoints. Validation is strict:
    // self-loops and duplicate edges are hard errors, not repaired.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
        if (n < 1) throw InvalidParamsError("vertex count must be positive");
        for (auto [u, v] : edges) {
            if (u < 1 || u > n) throw VertexOutOfRangeError(u, n);
            if (v < 1 || v > n) throw VertexOutOfRangeError(v, n);
            if (u == v) throw SelfLoopError(u);
        }
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        for (auto [u, v] : edges) {
            ++deg[static_cast<std::size_t>(u - 1)];
            ++deg[static_cast<std::size_t>(v - 1)];
        }
        Graph g;
        g.n_ = n;
        g.m_ = static_cast<int>(edges.size());
        g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int v = 0; v < n; ++v)
            g.offsets_[static_cast<std::size_t>(v) + 1] =
                g.offsets_[static_cast<std::size_t>(v)] + deg[static_cast<std::size_t>(v)];
        g.adj_.resize(static_cast<std::size_t>(2) * edges.size());
        std::vector<int> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
        for (auto [u, v] : edges) {
            g.adj_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(u - 1)]++)] = v - 1;
            g.adj_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(v - 1)]++)] = u - 1;
        }
        for (int v = 0; v < n; ++v) {
            auto first = g.adj_.begin() + g.offsets_[static_cast<std::size_t>(v)];
            auto last = g.adj_.begin() + g.offsets_[static_cast<std::size_t>(v) + 1];
            std::sort(first, last);
            auto dup = std::adjacent_find(first, last);
            if (dup != last) throw DuplicateEdgeError(v + 1, *dup + 1);
        }
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    std::span<const int> neighbors(int v) const {
        return {adj_.data() + offsets_[static_cast<std::size_t>(v)],
                adj_.data() + offsets_[static_cast<std::size_t>(v) + 1]};
    }

    int degree(int v) const {
        return offsets_[static_cast<std::size_t>(v) + 1] - offsets_[static_cast<std::size_t>(v)];
    }

    bool has_edge(int u, int v) const {
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    // 1-based sorted edge pairs (u < v), the canonical external form.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u + 1, v + 1);
        return out;
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && offsets_ == other.offsets_ && adj_ == other.adj_;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<int> offsets_;
    std::vector<int> adj_;
};

struct StructureReport {
    bool connected = false;
    std::optional<std::vector<std::uint8_t>> bipartition;  // side label 0/1 per vertex
    std::optional<int> diameter;                           // present iff connected
    int max_degree = 0;
    int min_degree = 0;
    bool irregular = false;
};

namespace detail {

// BFS from `source`, writing distances into `dist` (must be sized n, filled
// with -1). Returns the eccentricity of `source` within its component.
inline int bfs_distances(const Graph& g, int source, std::vector<int>& dist,
                         std::vector<int>& queue) {
    queue.clear();
    queue.push_back(source);
    dist[static_cast<std::size_t>(source)] = 0;
    int ecc = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        int du = dist[static_cast<std::size_t>(u)];
        ecc = std::max(ecc, du);
        for (int w : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = du + 1;
                queue.push_back(w);
            }
        }
    }
    return ecc;
}

}  // namespace detail

inline bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return false;
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n));
    detail::bfs_distances(g, 0, dist, queue);
    return static_cast<int>(queue.size()) == n;
}

// Connectivity, two-coloring, exact diameter (one BFS per vertex), and
// degree extremes in a single report.
inline StructureReport structure(const Graph& g) {
    const int n = g.vertex_count();
    StructureReport rep;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        rep.max_degree = std::max(rep.max_degree, d);
        rep.min_degree = (v == 0) ? d : std::min(rep.min_degree, d);
    }
    rep.irregular = rep.min_degree < rep.max_degree;

    // Color every component; a graph is bipartite iff all components are.
    std::vector<std::uint8_t> color(static_cast<std::size_t>(n), 2);
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n));
    bool bipartite = true;
    int first_component_size = 0;
    for (int start = 0; start < n; ++start) {
        if (color[static_cast<std::size_t>(start)] != 2) continue;
        queue.clear();
        queue.push_back(start);
        color[static_cast<std::size_t>(start)] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int w : g.neighbors(u)) {
                if (color[static_cast<std::size_t>(w)] == 2) {
                    color[static_cast<std::size_t>(w)] =
                        static_cast<std::uint8_t>(1 - color[static_cast<std::size_t>(u)]);
                    queue.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(u)]) {
                    bipartite = false;
                }
            }
        }
        if (start == 0) first_component_size = static_cast<int>(queue.size());
    }
    rep.connected = (first_component_size == n);
    if (bipartite) rep.bipartition = std::move(color);

    if (rep.connected) {
        std::vector<int> dist(static_cast<std::size_t>(n));
        int diameter = 0;
        for (int s = 0; s < n; ++s) {
            std::fill(dist.begin(), dist.end(), -1);
            diameter = std::max(diameter, detail::bfs_distances(g, s, dist, queue));
        }
        rep.diameter = diameter;
    }
    return rep;
}

}  // namespace gapcert
