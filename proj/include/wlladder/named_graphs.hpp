#ifndef WLLADDER_NAMED_GRAPHS_HPP
#define WLLADDER_NAMED_GRAPHS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace wlladder {

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v});
    return Graph::build(n, std::move(e));
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < n; ++u) e.push_back({u, (u + 1) % n});
    return Graph::build(n, std::move(e));
}

inline Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path graph needs n >= 1");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u + 1 < n; ++u) e.push_back({u, u + 1});
    return Graph::build(n, std::move(e));
}

/// Triangular prism: two triangles {0,1,2}, {3,4,5} joined by a matching.
inline Graph prism_graph() {
    return Graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

inline Graph k33_graph() {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < 3; ++u)
        for (Vertex v = 3; v < 6; ++v) e.push_back({u, v});
    return Graph::build(6, std::move(e));
}

/// Families: complete, cycle, path (take n); prism, k33 (fixed size).
inline Graph named_graph(const std::string& name, int n = -1) {
    if (name == "complete") {
        if (n < 0) throw std::invalid_argument("family 'complete' requires a size");
        return complete_graph(n);
    }
    if (name == "cycle") {
        if (n < 0) throw std::invalid_argument("family 'cycle' requires a size");
        return cycle_graph(n);
    }
    if (name == "path") {
        if (n < 0) throw std::invalid_argument("family 'path' requires a size");
        return path_graph(n);
    }
    if (name == "prism") return prism_graph();
    if (name == "k33") return k33_graph();
    throw std::invalid_argument("unknown graph family: '" + name + "'");
}

}  // namespace wlladder

#endif
