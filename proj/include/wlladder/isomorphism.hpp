#ifndef WLLADDER_ISOMORPHISM_HPP
#define WLLADDER_ISOMORPHISM_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace wlladder {

namespace detail {

class IsoSearch {
public:
    IsoSearch(const Graph& g, const Graph& h) : g_(g), h_(h), n_(g.vertex_count()) {
        map_.assign(static_cast<std::size_t>(n_), -1);
        used_.assign(static_cast<std::size_t>(n_), 0);
        order_ = search_order();
    }

    bool run() { return extend(0); }

private:
    // Vertices of G ordered so each vertex after the first in its
    // component has an already-placed neighbor; ties broken by degree
    // descending (constrains the search earliest).
    std::vector<Vertex> search_order() const {
        std::vector<Vertex> order;
        std::vector<char> placed(static_cast<std::size_t>(n_), 0);
        auto pick_seed = [&]() {
            Vertex best = -1;
            for (Vertex v = 0; v < n_; ++v)
                if (!placed[static_cast<std::size_t>(v)] &&
                    (best < 0 || g_.degree(v) > g_.degree(best)))
                    best = v;
            return best;
        };
        while (static_cast<int>(order.size()) < n_) {
            Vertex seed = pick_seed();
            placed[static_cast<std::size_t>(seed)] = 1;
            order.push_back(seed);
            // grow this component breadth-first, highest degree first
            for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
                std::vector<Vertex> frontier;
                for (auto [x, ei] : g_.adjacency(order[head])) {
                    (void)ei;
                    if (!placed[static_cast<std::size_t>(x)]) frontier.push_back(x);
                }
                std::sort(frontier.begin(), frontier.end(),
                          [&](Vertex a, Vertex b) { return g_.degree(a) > g_.degree(b); });
                for (Vertex x : frontier) {
                    placed[static_cast<std::size_t>(x)] = 1;
                    order.push_back(x);
                }
            }
        }
        return order;
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size()) return true;
        Vertex u = order_[depth];
        // candidate images: neighbors of a mapped neighbor's image, or
        // all unused vertices when u starts a new component
        Vertex anchor = -1;
        for (auto [x, ei] : g_.adjacency(u)) {
            (void)ei;
            if (map_[static_cast<std::size_t>(x)] >= 0) {
                anchor = map_[static_cast<std::size_t>(x)];
                break;
            }
        }
        auto try_vertex = [&](Vertex w) -> bool {
            if (used_[static_cast<std::size_t>(w)]) return false;
            if (h_.degree(w) != g_.degree(u)) return false;
            for (auto [x, ei] : g_.adjacency(u)) {
                (void)ei;
                Vertex mx = map_[static_cast<std::size_t>(x)];
                if (mx >= 0 && !h_.has_edge(w, mx)) return false;
            }
            // non-edges with mapped vertices must stay non-edges
            int mapped_neighbors = 0;
            for (auto [x, ei] : h_.adjacency(w)) {
                (void)ei;
                if (used_[static_cast<std::size_t>(x)]) ++mapped_neighbors;
            }
            int expected = 0;
            for (auto [x, ei] : g_.adjacency(u)) {
                (void)ei;
                if (map_[static_cast<std::size_t>(x)] >= 0) ++expected;
            }
            if (mapped_neighbors != expected) return false;
            map_[static_cast<std::size_t>(u)] = w;
            used_[static_cast<std::size_t>(w)] = 1;
            if (extend(depth + 1)) return true;
            map_[static_cast<std::size_t>(u)] = -1;
            used_[static_cast<std::size_t>(w)] = 0;
            return false;
        };
        if (anchor >= 0) {
            for (auto [w, ei] : h_.adjacency(anchor)) {
                (void)ei;
                if (try_vertex(w)) return true;
            }
        } else {
            for (Vertex w = 0; w < n_; ++w)
                if (try_vertex(w)) return true;
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    int n_;
    std::vector<Vertex> map_;
    std::vector<char> used_;
    std::vector<Vertex> order_;
};

}  // namespace detail

/// Exhaustive isomorphism test via degree-partitioned backtracking.
/// Only intended for certification at small n; refuses above the cap.
inline bool are_isomorphic_bruteforce(const Graph& g, const Graph& h, int limit = 16) {
    if (g.weighted() || h.weighted())
        throw std::invalid_argument("brute-force isomorphism supports unweighted graphs only");
    if (g.vertex_count() != h.vertex_count()) return false;
    if (g.vertex_count() > limit)
        throw std::invalid_argument("graph too large for brute-force isomorphism (n=" +
                                    std::to_string(g.vertex_count()) + ", limit=" +
                                    std::to_string(limit) + "); use fingerprints instead");
    if (g.edge_count() != h.edge_count()) return false;
    if (g.degree_sequence() != h.degree_sequence()) return false;
    if (g.vertex_count() == 0) return true;
    detail::IsoSearch search(g, h);
    return search.run();
}

}  // namespace wlladder

#endif
