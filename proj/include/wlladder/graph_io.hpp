#ifndef WLLADDER_GRAPH_IO_HPP
#define WLLADDER_GRAPH_IO_HPP

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "graph.hpp"

namespace wlladder {

/// Text format: header "n m", then m lines "u v" or "u v w" (w > 0),
/// 0-indexed. Lines starting with '#' are comments.
inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto next_data_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            std::size_t pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos) continue;
            if (line[pos] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_data_line(header)) throw std::invalid_argument("empty graph file");
    long n, m;
    {
        std::istringstream hs(header);
        if (!(hs >> n >> m) || n < 0 || m < 0)
            throw std::invalid_argument("malformed header: '" + header + "'");
        std::string extra;
        if (hs >> extra) throw std::invalid_argument("malformed header: '" + header + "'");
    }

    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<double> weights;
    for (long i = 0; i < m; ++i) {
        std::string el;
        if (!next_data_line(el))
            throw std::invalid_argument("expected " + std::to_string(m) + " edges, got " +
                                        std::to_string(i));
        std::istringstream es(el);
        long u, v;
        if (!(es >> u >> v)) throw std::invalid_argument("malformed edge line: '" + el + "'");
        double w;
        if (es >> w) {
            if (i != static_cast<long>(weights.size()))
                throw std::invalid_argument("mixed weighted and unweighted edge lines");
            weights.push_back(w);
            std::string extra;
            if (es >> extra) throw std::invalid_argument("malformed edge line: '" + el + "'");
        } else if (!weights.empty()) {
            throw std::invalid_argument("mixed weighted and unweighted edge lines");
        }
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    std::string trailing;
    if (next_data_line(trailing))
        throw std::invalid_argument("trailing content after edge list: '" + trailing + "'");
    return Graph::build(static_cast<int>(n), std::move(edges), std::move(weights));
}

/// Bit-exact emission: edges sorted lexicographically, weights with
/// 17 significant digits.
inline std::string write_graph(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    char buf[64];
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edge(i);
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
        if (g.weighted()) {
            std::snprintf(buf, sizeof(buf), " %.17g", g.weight(i));
            out += buf;
        }
        out += '\n';
    }
    return out;
}

inline Graph load_graph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_graph(ss.str());
}

inline void save_graph_file(const Graph& g, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << write_graph(g);
    if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace wlladder

#endif
