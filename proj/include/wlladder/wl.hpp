#ifndef WLLADDER_WL_HPP
#define WLLADDER_WL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "fingerprint.hpp"
#include "graph.hpp"

namespace wlladder {

struct WlOptions {
    std::size_t memory_cap_bytes = std::size_t(2) << 30;  // tuple storage cap
    Vertex individualized = -1;  // give this vertex a unique initial color
};

/// Stable coloring of j-tuples. Colors are 64-bit structural hashes:
/// label-independent and directly comparable across graphs, so two
/// separate runs can be checked for distinguishability without a
/// joint refinement pass.
struct WlColoring {
    int dimension = 1;
    int rounds = 0;
    int color_classes = 0;
    std::vector<std::uint64_t> colors;  // indexed by tuple (base-n little endian)
};

/// Canonical multiset of stable colors with multiplicities.
struct WlSignature {
    int j = 1;
    int n = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> classes;  // sorted (color, count)

    friend bool operator==(const WlSignature&, const WlSignature&) = default;
};

namespace detail {

inline std::uint64_t hash_word_seq(const std::uint64_t* w, std::size_t len, std::uint64_t seed) {
    std::uint64_t h = mix64(seed ^ (0x1000193u + len));
    for (std::size_t i = 0; i < len; ++i) h = mix64(h ^ w[i]);
    return h;
}

inline int count_distinct(std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    return static_cast<int>(std::unique(v.begin(), v.end()) - v.begin());
}

// 1-WL: colors on vertices, refined by sorted neighbor color multisets.
inline WlColoring wl1(const Graph& g, const WlOptions& opt) {
    int n = g.vertex_count();
    WlColoring c;
    c.dimension = 1;
    c.colors.assign(static_cast<std::size_t>(n), 0);
    for (Vertex u = 0; u < n; ++u) {
        std::uint64_t base = 0x517cc1b727220a95ull;
        if (u == opt.individualized) base = mix64(base ^ 0xdeadbeefull);
        c.colors[static_cast<std::size_t>(u)] = base;
    }
    int prev_classes = count_distinct(c.colors);
    std::vector<std::uint64_t> next(static_cast<std::size_t>(n));
    std::vector<std::uint64_t> buf;
    for (;;) {
        for (Vertex u = 0; u < n; ++u) {
            buf.clear();
            for (auto [x, ei] : g.adjacency(u)) {
                (void)ei;
                buf.push_back(c.colors[static_cast<std::size_t>(x)]);
            }
            std::sort(buf.begin(), buf.end());
            std::uint64_t h = hash_word_seq(buf.data(), buf.size(),
                                            c.colors[static_cast<std::size_t>(u)]);
            next[static_cast<std::size_t>(u)] = h;
        }
        c.colors.swap(next);
        ++c.rounds;
        int classes = count_distinct(c.colors);
        if (classes == prev_classes) break;  // refinement never coarsens
        prev_classes = classes;
    }
    c.color_classes = prev_classes;
    return c;
}

// initial color of an ordered j-tuple: its atomic type (position
// equalities + adjacencies) plus individualization marks
inline std::uint64_t atomic_type(const Graph& g, const std::vector<Vertex>& t, Vertex mark) {
    int j = static_cast<int>(t.size());
    std::uint64_t w = 0;
    int bit = 0;
    for (int p = 0; p < j; ++p)
        for (int q = p + 1; q < j; ++q) {
            if (t[static_cast<std::size_t>(p)] == t[static_cast<std::size_t>(q)]) w |= 1ull << bit;
            ++bit;
            if (g.has_edge(t[static_cast<std::size_t>(p)], t[static_cast<std::size_t>(q)])) w |= 1ull << bit;
            ++bit;
        }
    for (int p = 0; p < j; ++p) {
        if (t[static_cast<std::size_t>(p)] == mark) w |= 1ull << bit;
        ++bit;
    }
    return mix64(w ^ 0xa0761d6478bd642full);
}

// folklore j-WL for j >= 2 on all n^j ordered tuples
inline WlColoring wlj(const Graph& g, int j, const WlOptions& opt) {
    std::size_t n = static_cast<std::size_t>(g.vertex_count());
    std::size_t tuples = 1;
    for (int i = 0; i < j; ++i) {
        if (n != 0 && tuples > opt.memory_cap_bytes / n) {
            // report the budget two uint64 arrays would need
            double need = 1.0;
            for (int q = 0; q < j; ++q) need *= static_cast<double>(n);
            throw std::runtime_error("wl_refine memory cap exceeded: n^" + std::to_string(j) +
                                     " tuples need about " + std::to_string(need * 16.0) +
                                     " bytes, cap is " + std::to_string(opt.memory_cap_bytes));
        }
        tuples *= n;
    }
    if (tuples * 16 > opt.memory_cap_bytes)
        throw std::runtime_error("wl_refine memory cap exceeded: need about " +
                                 std::to_string(tuples * 16) + " bytes, cap is " +
                                 std::to_string(opt.memory_cap_bytes));

    WlColoring c;
    c.dimension = j;
    if (n == 0) {
        c.color_classes = 0;
        return c;
    }
    c.colors.assign(tuples, 0);

    std::vector<std::size_t> pow(static_cast<std::size_t>(j));
    pow[0] = 1;
    for (int i = 1; i < j; ++i) pow[static_cast<std::size_t>(i)] = pow[static_cast<std::size_t>(i - 1)] * n;

    std::vector<Vertex> t(static_cast<std::size_t>(j), 0);
    for (std::size_t idx = 0; idx < tuples; ++idx) {
        std::size_t rest = idx;
        for (int p = 0; p < j; ++p) {
            t[static_cast<std::size_t>(p)] = static_cast<Vertex>(rest % n);
            rest /= n;
        }
        c.colors[idx] = atomic_type(g, t, opt.individualized);
    }

    int prev_classes = count_distinct(c.colors);
    std::vector<std::uint64_t> next(tuples);
    std::vector<std::uint64_t> composites;
    composites.reserve(n);
    std::vector<std::uint64_t> sub(static_cast<std::size_t>(j));
    for (;;) {
        for (std::size_t idx = 0; idx < tuples; ++idx) {
            std::size_t rest = idx;
            for (int p = 0; p < j; ++p) {
                t[static_cast<std::size_t>(p)] = static_cast<Vertex>(rest % n);
                rest /= n;
            }
            composites.clear();
            for (std::size_t w = 0; w < n; ++w) {
                for (int p = 0; p < j; ++p) {
                    std::size_t sidx = idx +
                        (w - static_cast<std::size_t>(t[static_cast<std::size_t>(p)])) *
                            pow[static_cast<std::size_t>(p)];
                    sub[static_cast<std::size_t>(p)] = c.colors[sidx];
                }
                composites.push_back(hash_word_seq(sub.data(), sub.size(), 0x85ebca77c2b2ae63ull));
            }
            std::sort(composites.begin(), composites.end());
            next[idx] = hash_word_seq(composites.data(), composites.size(), c.colors[idx]);
        }
        c.colors.swap(next);
        ++c.rounds;
        int classes = count_distinct(c.colors);
        if (classes == prev_classes) break;
        prev_classes = classes;
    }
    c.color_classes = prev_classes;
    return c;
}

}  // namespace detail

/// Folklore j-WL refinement to the stable coloring. j = 1 is classic
/// vertex color refinement. Cost O(n^{j+1}) per round for j >= 2.
inline WlColoring wl_refine(const Graph& g, int j, const WlOptions& opt = {}) {
    if (j < 1) throw std::invalid_argument("WL dimension must be at least 1");
    if (opt.individualized >= g.vertex_count())
        throw std::invalid_argument("individualized vertex out of range");
    return j == 1 ? detail::wl1(g, opt) : detail::wlj(g, j, opt);
}

inline WlSignature wl_signature(const WlColoring& c, int n) {
    WlSignature s;
    s.j = c.dimension;
    s.n = n;
    std::map<std::uint64_t, std::uint64_t> counts;
    for (std::uint64_t col : c.colors) ++counts[col];
    s.classes.assign(counts.begin(), counts.end());
    return s;
}

inline WlSignature wl_signature(const Graph& g, int j, const WlOptions& opt = {}) {
    return wl_signature(wl_refine(g, j, opt), g.vertex_count());
}

inline Verdict wl_distinguish(const Graph& g, const Graph& h, int j, const WlOptions& opt = {}) {
    if (g.vertex_count() != h.vertex_count()) return Verdict::distinguished;
    return wl_signature(g, j, opt) == wl_signature(h, j, opt) ? Verdict::not_distinguished
                                                              : Verdict::distinguished;
}

/// Refinement with vertex v given a unique initial color. Running this
/// over all v captures one extra WL level via the individualization
/// characterization.
inline WlSignature wl_individualized(const Graph& g, Vertex v, int j, WlOptions opt = {}) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    opt.individualized = v;
    return wl_signature(g, j, opt);
}

/// Digest of a signature, for compact reporting.
inline Digest wl_signature_digest(const WlSignature& s) {
    detail::DigestStream st;
    st.absorb(static_cast<std::uint64_t>(s.j));
    st.absorb(static_cast<std::uint64_t>(s.n));
    for (auto [col, cnt] : s.classes) {
        st.absorb(col);
        st.absorb(cnt);
    }
    return st.finish();
}

}  // namespace wlladder

#endif
