#ifndef WLLADDER_SUBSETS_HPP
#define WLLADDER_SUBSETS_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace wlladder {

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        // r * num is divisible by i at every step
        if (r > std::numeric_limits<std::uint64_t>::max() / num)
            throw std::overflow_error("binomial coefficient overflow");
        r = r * num / static_cast<std::uint64_t>(i);
    }
    return r;
}

/// k-subsets of {0..n-1} in colexicographic order: {0..k-1} first,
/// {n-k..n-1} last. Rank r recovers the r-th subset directly, so the
/// stream splits into contiguous ranges for parallel sweeps.
namespace colex {

inline std::vector<Vertex> unrank(std::uint64_t rank, int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("subset size out of range");
    std::vector<Vertex> s(static_cast<std::size_t>(k));
    for (int i = k; i >= 1; --i) {
        // largest c with C(c, i) <= rank
        int c = i - 1;
        while (c + 1 < n && binomial(c + 1, i) <= rank) ++c;
        s[static_cast<std::size_t>(i - 1)] = c;
        rank -= binomial(c, i);
    }
    return s;
}

/// Advances s to its colex successor; returns false after the last one.
inline bool next(std::vector<Vertex>& s, int n) {
    int k = static_cast<int>(s.size());
    for (int i = 0; i < k; ++i) {
        Vertex cap = (i + 1 < k) ? s[static_cast<std::size_t>(i) + 1] : n;
        if (s[static_cast<std::size_t>(i)] + 1 < cap) {
            ++s[static_cast<std::size_t>(i)];
            for (int j = 0; j < i; ++j) s[static_cast<std::size_t>(j)] = j;
            return true;
        }
    }
    return false;
}

}  // namespace colex

/// All C(n,k) subsets, in colex order. Intended for tests and small n.
inline std::vector<std::vector<Vertex>> enumerate_subsets(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("subset size out of range");
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i;
    do {
        out.push_back(s);
    } while (colex::next(s, n));
    return out;
}

}  // namespace wlladder

#endif
