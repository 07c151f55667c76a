#ifndef WLLADDER_DRESS_HPP
#define WLLADDER_DRESS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace wlladder {

/// Per-edge similarity state: one slot per vertex self-loop (d_uu) and
/// one per stored edge (d_uv). All values finite and positive.
struct EdgeValues {
    std::vector<double> loops;
    std::vector<double> edges;
};

struct ConvergenceReport {
    int iterations = 0;
    double final_delta = 0.0;
    bool converged = false;
};

namespace detail {

// Compensated (Kahan) accumulator; summation order is fixed by the
// caller so results are reproducible across relabelings.
struct KahanSum {
    double sum = 0.0, c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

// Precomputed slot indices for one graph. Slot layout: [0, n) loops,
// [n, n+m) edges.
struct DressWorkspace {
    int n = 0, m = 0;
    // per edge: flattened list of (slot(u,x), slot(x,v)) over
    // x ∈ N[u] ∩ N[v] in ascending x
    std::vector<std::pair<int, int>> edge_terms;
    std::vector<int> edge_term_begin;  // m+1 offsets
    // per vertex: slots of d_ux over x ∈ N[u] ascending (norm support)
    std::vector<int> norm_slots;
    std::vector<int> norm_begin;  // n+1 offsets

    explicit DressWorkspace(const Graph& g) : n(g.vertex_count()), m(g.edge_count()) {
        auto slot = [&](Vertex a, Vertex b, int ei) { return a == b ? a : n + ei; };
        norm_begin.reserve(static_cast<std::size_t>(n) + 1);
        norm_begin.push_back(0);
        for (Vertex u = 0; u < n; ++u) {
            bool placed = false;
            for (auto [x, ei] : g.adjacency(u)) {
                if (!placed && u < x) {
                    norm_slots.push_back(u);
                    placed = true;
                }
                norm_slots.push_back(slot(u, x, ei));
            }
            if (!placed) norm_slots.push_back(u);
            norm_begin.push_back(static_cast<int>(norm_slots.size()));
        }
        edge_term_begin.reserve(static_cast<std::size_t>(m) + 1);
        edge_term_begin.push_back(0);
        std::vector<Vertex> cu, cv, common;
        for (int ei = 0; ei < m; ++ei) {
            Vertex u = g.edge(ei).u, v = g.edge(ei).v;
            cu = g.closed_neighborhood(u);
            cv = g.closed_neighborhood(v);
            common.clear();
            std::set_intersection(cu.begin(), cu.end(), cv.begin(), cv.end(),
                                  std::back_inserter(common));
            for (Vertex x : common) {
                int sux = (x == u) ? u : slot(u, x, g.edge_index(std::min(u, x), std::max(u, x)));
                int sxv = (x == v) ? v : slot(v, x, g.edge_index(std::min(v, x), std::max(v, x)));
                edge_terms.push_back({sux, sxv});
            }
            edge_term_begin.push_back(static_cast<int>(edge_terms.size()));
        }
    }

    // One synchronous update. `vals` is the flat slot array of the
    // current state; `next` receives the new state; `norms` is scratch.
    void step(const std::vector<double>& vals, std::vector<double>& next,
              std::vector<double>& norms) const {
        for (int u = 0; u < n; ++u) {
            KahanSum s;
            for (int i = norm_begin[static_cast<std::size_t>(u)];
                 i < norm_begin[static_cast<std::size_t>(u) + 1]; ++i)
                s.add(vals[static_cast<std::size_t>(norm_slots[static_cast<std::size_t>(i)])]);
            norms[static_cast<std::size_t>(u)] = std::sqrt(s.sum);
        }
        // loop slots: numerator 2·‖u‖², computed by the same formula
        for (int u = 0; u < n; ++u) {
            KahanSum s;
            for (int i = norm_begin[static_cast<std::size_t>(u)];
                 i < norm_begin[static_cast<std::size_t>(u) + 1]; ++i) {
                double d = vals[static_cast<std::size_t>(norm_slots[static_cast<std::size_t>(i)])];
                s.add(d + d);
            }
            double nu = norms[static_cast<std::size_t>(u)];
            next[static_cast<std::size_t>(u)] = s.sum / (nu * nu);
        }
        // edge slots: numerators only; caller divides by norm products
        for (int ei = 0; ei < m; ++ei) {
            KahanSum s;
            for (int i = edge_term_begin[static_cast<std::size_t>(ei)];
                 i < edge_term_begin[static_cast<std::size_t>(ei) + 1]; ++i) {
                auto [a, b] = edge_terms[static_cast<std::size_t>(i)];
                s.add(vals[static_cast<std::size_t>(a)] + vals[static_cast<std::size_t>(b)]);
            }
            next[static_cast<std::size_t>(n + ei)] = s.sum;
        }
    }
};

inline void check_positive(const EdgeValues& d) {
    for (double x : d.loops)
        if (!(x > 0.0) || !std::isfinite(x))
            throw std::invalid_argument("corrupted DRESS state: non-positive loop value");
    for (double x : d.edges)
        if (!(x > 0.0) || !std::isfinite(x))
            throw std::invalid_argument("corrupted DRESS state: non-positive edge value");
}

}  // namespace detail

/// d_uu = 2 for every vertex; d_uv = 1 unweighted, w_uv weighted.
inline EdgeValues init_values(const Graph& g) {
    EdgeValues d;
    d.loops.assign(static_cast<std::size_t>(g.vertex_count()), 2.0);
    d.edges.resize(static_cast<std::size_t>(g.edge_count()));
    for (int i = 0; i < g.edge_count(); ++i)
        d.edges[static_cast<std::size_t>(i)] = g.weighted() ? g.weight(i) : 1.0;
    return d;
}

/// ‖u‖ = sqrt(Σ_{x ∈ N[u]} d_ux); at least sqrt(2).
inline double vertex_norm(const Graph& g, const EdgeValues& d, Vertex u) {
    detail::KahanSum s;
    bool placed = false;
    for (auto [x, ei] : g.adjacency(u)) {
        if (!placed && u < x) {
            s.add(d.loops[static_cast<std::size_t>(u)]);
            placed = true;
        }
        s.add(d.edges[static_cast<std::size_t>(ei)]);
    }
    if (!placed) s.add(d.loops[static_cast<std::size_t>(u)]);
    return std::sqrt(s.sum);
}

namespace detail {

// Full engine state reused across iterations of one fixpoint run.
class DressEngine {
public:
    explicit DressEngine(const Graph& g)
        : ws_(g), cur_(static_cast<std::size_t>(ws_.n + ws_.m)),
          nxt_(static_cast<std::size_t>(ws_.n + ws_.m)),
          norms_(static_cast<std::size_t>(ws_.n)) {
        endpoints_.reserve(static_cast<std::size_t>(ws_.m));
        for (int ei = 0; ei < ws_.m; ++ei)
            endpoints_.push_back({g.edge(ei).u, g.edge(ei).v});
    }

    void load(const EdgeValues& d) {
        for (int u = 0; u < ws_.n; ++u) cur_[static_cast<std::size_t>(u)] = d.loops[static_cast<std::size_t>(u)];
        for (int ei = 0; ei < ws_.m; ++ei)
            cur_[static_cast<std::size_t>(ws_.n + ei)] = d.edges[static_cast<std::size_t>(ei)];
    }

    EdgeValues unload() const {
        EdgeValues d;
        d.loops.assign(cur_.begin(), cur_.begin() + ws_.n);
        d.edges.assign(cur_.begin() + ws_.n, cur_.end());
        return d;
    }

    // applies one Jacobi step; returns max absolute per-slot change
    double step() {
        ws_.step(cur_, nxt_, norms_);
        for (int ei = 0; ei < ws_.m; ++ei) {
            auto [u, v] = endpoints_[static_cast<std::size_t>(ei)];
            nxt_[static_cast<std::size_t>(ws_.n + ei)] /=
                norms_[static_cast<std::size_t>(u)] * norms_[static_cast<std::size_t>(v)];
        }
        double delta = 0.0;
        for (std::size_t i = 0; i < cur_.size(); ++i) {
            double ch = std::abs(nxt_[i] - cur_[i]);
            if (ch > delta) delta = ch;
        }
        cur_.swap(nxt_);
        return delta;
    }

private:
    DressWorkspace ws_;
    std::vector<double> cur_, nxt_, norms_;
    std::vector<std::pair<Vertex, Vertex>> endpoints_;
};

}  // namespace detail

/// One synchronous (Jacobi) update of Eq-style edge refinement:
/// d′_uv = Σ_{x ∈ N[u]∩N[v]} (d_ux + d_xv) / (‖u‖·‖v‖), loop slots
/// included (they come out as exactly 2 up to rounding).
inline EdgeValues dress_step(const Graph& g, const EdgeValues& d) {
    detail::check_positive(d);
    detail::DressEngine eng(g);
    eng.load(d);
    eng.step();
    return eng.unload();
}

/// Iterates dress_step until the max per-slot change drops below eps
/// or the budget runs out. Non-convergence is reported, not thrown.
inline std::pair<EdgeValues, ConvergenceReport> dress_fixpoint(const Graph& g, double eps = 1e-6,
                                                               int max_iter = 100) {
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    if (max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");
    EdgeValues d = init_values(g);
    ConvergenceReport rep;
    if (g.edge_count() == 0) {
        rep.converged = true;
        return {std::move(d), rep};
    }
    detail::DressEngine eng(g);
    eng.load(d);
    for (int it = 0; it < max_iter; ++it) {
        double delta = eng.step();
        rep.iterations = it + 1;
        rep.final_delta = delta;
        if (delta < eps) {
            rep.converged = true;
            break;
        }
    }
    return {eng.unload(), rep};
}

}  // namespace wlladder

#endif
