#ifndef WLLADDER_TESTS_TEST_UTIL_HPP
#define WLLADDER_TESTS_TEST_UTIL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "wlladder/dress.hpp"
#include "wlladder/fingerprint.hpp"
#include "wlladder/graph.hpp"

namespace testutil {

using wlladder::Graph;
using wlladder::Vertex;

inline Graph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.push_back({u, v});
    return Graph::build(n, std::move(edges));
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<Vertex> pi(static_cast<std::size_t>(n));
    std::iota(pi.begin(), pi.end(), 0);
    std::shuffle(pi.begin(), pi.end(), rng);
    return pi;
}

inline Graph permute_graph(const Graph& g, const std::vector<Vertex>& pi) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<double> weights;
    for (int i = 0; i < g.edge_count(); ++i) {
        edges.push_back({pi[static_cast<std::size_t>(g.edge(i).u)],
                         pi[static_cast<std::size_t>(g.edge(i).v)]});
        if (g.weighted()) weights.push_back(g.weight(i));
    }
    return Graph::build(g.vertex_count(), std::move(edges), std::move(weights));
}

// Discrete companion of the DRESS update, used as the lockstep refinement
// oracle: slot colors (loops + edges) refined round by round through
// the multiset over x in N[u] ∩ N[v] of the unordered color pair
// {c(u,x), c(x,v)}. Starts from the same split as init_values (loops
// one color, edges another).
class LockstepRefiner {
public:
    explicit LockstepRefiner(const Graph& g) : g_(g) {
        int n = g.vertex_count(), m = g.edge_count();
        colors_.assign(static_cast<std::size_t>(n + m), 0);
        for (int u = 0; u < n; ++u) colors_[static_cast<std::size_t>(u)] = 1;  // loops
        for (int e = 0; e < m; ++e) colors_[static_cast<std::size_t>(n + e)] = 2;  // edges
    }

    // one refinement round over all slots; returns number of classes
    int step() {
        int n = g_.vertex_count(), m = g_.edge_count();
        std::vector<std::uint64_t> next(colors_.size());
        auto slot = [&](Vertex a, Vertex b) {
            return a == b ? a : n + g_.edge_index(std::min(a, b), std::max(a, b));
        };
        auto refine_pair = [&](Vertex u, Vertex v, std::uint64_t old) {
            auto cu = g_.closed_neighborhood(u);
            auto cv = g_.closed_neighborhood(v);
            std::vector<Vertex> common;
            std::set_intersection(cu.begin(), cu.end(), cv.begin(), cv.end(),
                                  std::back_inserter(common));
            std::vector<std::pair<std::uint64_t, std::uint64_t>> ms;
            for (Vertex x : common) {
                std::uint64_t a = colors_[static_cast<std::size_t>(slot(u, x))];
                std::uint64_t b = colors_[static_cast<std::size_t>(slot(x, v))];
                ms.push_back({std::min(a, b), std::max(a, b)});
            }
            std::sort(ms.begin(), ms.end());
            std::uint64_t h = wlladder::detail::mix64(old ^ 0x6a09e667f3bcc909ull);
            for (auto [a, b] : ms) {
                h = wlladder::detail::mix64(h ^ a);
                h = wlladder::detail::mix64(h + b);
            }
            return h;
        };
        for (int u = 0; u < n; ++u)
            next[static_cast<std::size_t>(u)] = refine_pair(u, u, colors_[static_cast<std::size_t>(u)]);
        for (int e = 0; e < m; ++e)
            next[static_cast<std::size_t>(n + e)] =
                refine_pair(g_.edge(e).u, g_.edge(e).v, colors_[static_cast<std::size_t>(n + e)]);
        colors_ = std::move(next);
        std::vector<std::uint64_t> tmp = colors_;
        std::sort(tmp.begin(), tmp.end());
        return static_cast<int>(std::unique(tmp.begin(), tmp.end()) - tmp.begin());
    }

    std::uint64_t edge_color(int e) const {
        return colors_[static_cast<std::size_t>(g_.vertex_count() + e)];
    }

private:
    const Graph& g_;
    std::vector<std::uint64_t> colors_;
};

}  // namespace testutil

#endif
