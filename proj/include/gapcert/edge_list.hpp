#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gapcert/graph.hpp"

namespace gapcert {

// Text format: first meaningful line is `n m`, followed by m lines `u v`
// with 1-based endpoints. Lines starting with `#` and blank lines are
// skipped anywhere in the file.
inline Graph parse_edge_list(std::istream& in) {
    int line_no = 0;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first.front() == '#') continue;
        if (n < 0) {
            std::istringstream hs(line);
            std::string tail;
            if (!(hs >> n >> m) || n < 0 || m < 0 || (hs >> tail))
                throw MalformedLineError(line_no, "expected header `n m`");
            continue;
        }
        int u = 0, v = 0;
        std::istringstream es(line);
        std::string tail;
        if (!(es >> u >> v) || (es >> tail))
            throw MalformedLineError(line_no, "expected edge `u v`");
        if (static_cast<int>(edges.size()) == m)
            throw HeaderMismatchError("more edge lines than the declared m = " + std::to_string(m));
        edges.emplace_back(u, v);
    }
    if (n < 0) throw HeaderMismatchError("missing header line `n m`");
    if (static_cast<int>(edges.size()) != m)
        throw HeaderMismatchError("declared m = " + std::to_string(m) + " but found " +
                                  std::to_string(edges.size()) + " edge lines");
    return Graph::from_edge_list(n, edges);
}

inline Graph parse_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return parse_edge_list(in);
}

// Canonical form: header, then edges sorted with u < v.
inline void emit_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline void emit_edge_list(const Graph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    emit_edge_list(g, out);
    if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace gapcert
