#ifndef WLLADDER_CFI_HPP
#define WLLADDER_CFI_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace wlladder {

/// One gadget vertex of the CFI construction: a base vertex together
/// with an even-cardinality subset of its base neighbors, stored as a
/// bitmask over the sorted neighbor list.
struct GadgetVertex {
    Vertex base_vertex;
    std::uint32_t even_subset_mask;  // bit i = i-th smallest base neighbor
};

struct CfiSpec {
    Graph base;
    std::vector<int> twist_edges;  // indices into base.edges()
};

struct CfiGraph {
    Graph graph;
    std::vector<GadgetVertex> gadget_map;  // vertex index -> gadget vertex
};

/// Builds the CFI graph over spec.base: vertices are all (v, S) with
/// S an even subset of v's neighbors; across base edge uv, (u,S) and
/// (v,T) are adjacent iff [v ∈ S ⟺ u ∈ T] XOR [uv twisted].
/// Vertex count is Σ_v 2^{deg(v)−1}. Ordering is base vertex major,
/// subset bitmask minor, so output files are deterministic.
inline CfiGraph cfi_build(const CfiSpec& spec) {
    const Graph& base = spec.base;
    if (base.vertex_count() < 2) throw std::invalid_argument("CFI base needs at least 2 vertices");
    if (!base.connected()) throw std::invalid_argument("CFI base must be connected");
    if (base.weighted()) throw std::invalid_argument("CFI base must be unweighted");
    for (int t : spec.twist_edges)
        if (t < 0 || t >= base.edge_count())
            throw std::invalid_argument("twist edge index out of range");
    for (Vertex v = 0; v < base.vertex_count(); ++v)
        if (base.degree(v) > 30)
            throw std::invalid_argument("base degree too large for gadget enumeration");

    std::vector<char> twisted(static_cast<std::size_t>(base.edge_count()), 0);
    for (int t : spec.twist_edges)
        twisted[static_cast<std::size_t>(t)] ^= 1;  // repeated indices cancel by parity

    CfiGraph out;
    std::vector<int> offset(static_cast<std::size_t>(base.vertex_count()) + 1, 0);
    for (Vertex v = 0; v < base.vertex_count(); ++v) {
        int d = base.degree(v);
        for (std::uint32_t mask = 0; mask < (1u << d); ++mask)
            if (__builtin_popcount(mask) % 2 == 0)
                out.gadget_map.push_back({v, mask});
        offset[static_cast<std::size_t>(v) + 1] = static_cast<int>(out.gadget_map.size());
    }

    // position of x in v's sorted neighbor list
    auto neighbor_pos = [&](Vertex v, Vertex x) {
        const auto& a = base.adjacency(v);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].first == x) return static_cast<int>(i);
        throw std::logic_error("neighbor lookup failed");
    };

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int ei = 0; ei < base.edge_count(); ++ei) {
        Vertex u = base.edge(ei).u, v = base.edge(ei).v;
        int pv = neighbor_pos(u, v);  // bit of v inside u's masks
        int pu = neighbor_pos(v, u);  // bit of u inside v's masks
        bool tw = twisted[static_cast<std::size_t>(ei)] != 0;
        for (int a = offset[static_cast<std::size_t>(u)]; a < offset[static_cast<std::size_t>(u) + 1]; ++a) {
            bool v_in_s = (out.gadget_map[static_cast<std::size_t>(a)].even_subset_mask >> pv) & 1u;
            for (int b = offset[static_cast<std::size_t>(v)]; b < offset[static_cast<std::size_t>(v) + 1]; ++b) {
                bool u_in_t = (out.gadget_map[static_cast<std::size_t>(b)].even_subset_mask >> pu) & 1u;
                if ((v_in_s == u_in_t) != tw) edges.push_back({a, b});
            }
        }
    }
    out.graph = Graph::build(static_cast<int>(out.gadget_map.size()), std::move(edges));
    return out;
}

/// The canonical pair: untwisted, and twisted on the lexicographically
/// first base edge. Any single-edge twist gives the same isomorphism
/// class by the twist parity property.
inline std::pair<Graph, Graph> cfi_pair(const Graph& base) {
    if (base.edge_count() == 0) throw std::invalid_argument("CFI base needs at least one edge");
    Graph untwisted = cfi_build({base, {}}).graph;
    Graph twisted = cfi_build({base, {0}}).graph;
    return {std::move(untwisted), std::move(twisted)};
}

}  // namespace wlladder

#endif
