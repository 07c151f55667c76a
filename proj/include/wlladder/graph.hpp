#ifndef WLLADDER_GRAPH_HPP
#define WLLADDER_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wlladder {

using Vertex = int;

/// Undirected simple graph with implicit self-loops and optional
/// positive edge weights. Immutable after construction; safe to share
/// across threads.
class Graph {
public:
    struct Edge {
        Vertex u, v;  // u < v
        friend bool operator==(const Edge&, const Edge&) = default;
        friend auto operator<=>(const Edge& a, const Edge& b) {
            return std::pair(a.u, a.v) <=> std::pair(b.u, b.v);
        }
    };

    Graph() = default;

    static Graph build(int n, std::vector<std::pair<Vertex, Vertex>> edges,
                       std::vector<double> weights = {}) {
        if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
        if (!weights.empty() && weights.size() != edges.size())
            throw std::invalid_argument("weight list length does not match edge list");
        Graph g;
        g.n_ = n;
        g.edges_.reserve(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto [u, v] = edges[i];
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("edge endpoint out of range: (" +
                                            std::to_string(u) + "," + std::to_string(v) + ")");
            if (u == v)
                throw std::invalid_argument("self-loop not allowed: vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
            g.edges_.push_back({u, v});
        }
        if (!weights.empty()) {
            for (double w : weights)
                if (!(w > 0.0))
                    throw std::invalid_argument("edge weight must be strictly positive");
            // sort edges and weights together
            std::vector<std::size_t> order(g.edges_.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return g.edges_[a] < g.edges_[b];
            });
            std::vector<Edge> se;
            std::vector<double> sw;
            se.reserve(order.size());
            sw.reserve(order.size());
            for (std::size_t i : order) {
                se.push_back(g.edges_[i]);
                sw.push_back(weights[i]);
            }
            g.edges_ = std::move(se);
            g.weights_ = std::move(sw);
        } else {
            std::sort(g.edges_.begin(), g.edges_.end());
        }
        for (std::size_t i = 1; i < g.edges_.size(); ++i)
            if (g.edges_[i] == g.edges_[i - 1])
                throw std::invalid_argument("duplicate edge (" + std::to_string(g.edges_[i].u) +
                                            "," + std::to_string(g.edges_[i].v) + ")");
        g.build_adjacency();
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool weighted() const { return !weights_.empty(); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }
    double weight(int i) const { return weights_.empty() ? 1.0 : weights_[static_cast<std::size_t>(i)]; }

    int degree(Vertex u) const { return static_cast<int>(adj_[static_cast<std::size_t>(u)].size()); }

    /// Neighbors of u as (neighbor, edge index), sorted by neighbor.
    const std::vector<std::pair<Vertex, int>>& adjacency(Vertex u) const {
        return adj_[static_cast<std::size_t>(u)];
    }

    /// Index of edge {u,v} in the sorted edge list, or -1 if absent.
    int edge_index(Vertex u, Vertex v) const {
        const auto& a = adj_[static_cast<std::size_t>(u)];
        auto it = std::lower_bound(a.begin(), a.end(), v,
                                   [](const std::pair<Vertex, int>& p, Vertex x) { return p.first < x; });
        if (it != a.end() && it->first == v) return it->second;
        return -1;
    }

    bool has_edge(Vertex u, Vertex v) const { return u != v && edge_index(u, v) >= 0; }

    /// N[u] = N(u) ∪ {u}, sorted.
    std::vector<Vertex> closed_neighborhood(Vertex u) const {
        check_vertex(u);
        std::vector<Vertex> out;
        const auto& a = adj_[static_cast<std::size_t>(u)];
        out.reserve(a.size() + 1);
        bool placed = false;
        for (auto [x, ei] : a) {
            (void)ei;
            if (!placed && u < x) {
                out.push_back(u);
                placed = true;
            }
            out.push_back(x);
        }
        if (!placed) out.push_back(u);
        return out;
    }

    /// Deletes S (sorted, distinct) and compacts remaining vertex labels
    /// preserving relative order. Edges with both endpoints outside S
    /// survive; weights carried over.
    Graph induced_delete(std::span<const Vertex> s) const {
        for (std::size_t i = 0; i < s.size(); ++i) {
            check_vertex(s[i]);
            if (i > 0 && s[i] <= s[i - 1])
                throw std::invalid_argument("vertex set must be strictly increasing");
        }
        std::vector<int> relabel(static_cast<std::size_t>(n_), 0);
        std::size_t si = 0;
        int next = 0;
        for (Vertex v = 0; v < n_; ++v) {
            if (si < s.size() && s[si] == v) {
                relabel[static_cast<std::size_t>(v)] = -1;
                ++si;
            } else {
                relabel[static_cast<std::size_t>(v)] = next++;
            }
        }
        Graph g;
        g.n_ = next;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            int u2 = relabel[static_cast<std::size_t>(edges_[i].u)];
            int v2 = relabel[static_cast<std::size_t>(edges_[i].v)];
            if (u2 < 0 || v2 < 0) continue;
            g.edges_.push_back({u2, v2});
            if (!weights_.empty()) g.weights_.push_back(weights_[i]);
        }
        g.build_adjacency();
        return g;
    }

    bool connected() const {
        if (n_ <= 1) return true;
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        std::vector<Vertex> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (auto [x, ei] : adjacency(u)) {
                (void)ei;
                if (!seen[static_cast<std::size_t>(x)]) {
                    seen[static_cast<std::size_t>(x)] = 1;
                    ++count;
                    stack.push_back(x);
                }
            }
        }
        return count == n_;
    }

    std::vector<int> degree_sequence() const {
        std::vector<int> d(static_cast<std::size_t>(n_));
        for (Vertex u = 0; u < n_; ++u) d[static_cast<std::size_t>(u)] = degree(u);
        std::sort(d.begin(), d.end());
        return d;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_ && a.weights_ == b.weights_;
    }

private:
    void check_vertex(Vertex u) const {
        if (u < 0 || u >= n_)
            throw std::invalid_argument("vertex out of range: " + std::to_string(u));
    }

    void build_adjacency() {
        adj_.assign(static_cast<std::size_t>(n_), {});
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            adj_[static_cast<std::size_t>(edges_[i].u)].push_back({edges_[i].v, static_cast<int>(i)});
            adj_[static_cast<std::size_t>(edges_[i].v)].push_back({edges_[i].u, static_cast<int>(i)});
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<double> weights_;
    std::vector<std::vector<std::pair<Vertex, int>>> adj_;
};

}  // namespace wlladder

#endif
