#ifndef WLLADDER_DELTA_HPP
#define WLLADDER_DELTA_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "dress.hpp"
#include "fingerprint.hpp"
#include "graph.hpp"
#include "subsets.hpp"

namespace wlladder {

enum class SweepMode { pooled, multiset, both };

struct SweepConfig {
    int k = 0;
    double eps = 1e-6;
    int max_iter = 100;
    double bin_width = 1e-6;
    int workers = 1;  // 0 = hardware concurrency
    SweepMode mode = SweepMode::both;
};

struct SweepReport {
    std::uint64_t subsets = 0;
    std::uint64_t nonconverged = 0;
    std::uint64_t pooled_values = 0;
};

/// Multiset of per-subset fingerprint digests, stored canonically as
/// a sorted digest sequence.
struct DeckFingerprint {
    int k = 0;
    std::vector<Digest> members;

    friend bool operator==(const DeckFingerprint&, const DeckFingerprint&) = default;
};

struct SweepResult {
    SparseHistogram pooled;
    DeckFingerprint deck;
    SweepReport report;
};

namespace detail {

struct WorkerAccum {
    SparseHistogram hist;
    std::vector<Digest> deck;
    std::uint64_t nonconverged = 0;
    std::uint64_t pooled_values = 0;
};

// Processes subsets [lo, hi) of the colex stream. Jobs are
// independent and side-effect-free; accumulators are worker-private.
inline void sweep_range(const Graph& g, const SweepConfig& cfg, std::uint64_t lo, std::uint64_t hi,
                        WorkerAccum& acc) {
    acc.hist.bin_width = cfg.bin_width;
    int n = g.vertex_count();
    std::vector<Vertex> s = colex::unrank(lo, n, cfg.k);
    for (std::uint64_t r = lo; r < hi; ++r) {
        Graph sub = g.induced_delete(s);
        auto [vals, rep] = dress_fixpoint(sub, cfg.eps, cfg.max_iter);
        if (!rep.converged) ++acc.nonconverged;  // last iterate still contributes
        Fingerprint fp = sorted_fingerprint(vals);
        SparseHistogram h = quantize(fp, cfg.bin_width);
        acc.pooled_values += h.total;
        if (cfg.mode != SweepMode::multiset) merge_into(acc.hist, h);
        if (cfg.mode != SweepMode::pooled) acc.deck.push_back(digest(h));
        if (r + 1 < hi) colex::next(s, n);
    }
}

}  // namespace detail

/// Runs DRESS on every k-deletion subgraph of G; pools histograms
/// and/or collects the digest deck. Output is independent of worker
/// count: the subset stream is split into contiguous colex ranges and
/// worker-private accumulators are merged in range order.
inline SweepResult delta_sweep(const Graph& g, const SweepConfig& cfg) {
    int n = g.vertex_count();
    if (cfg.k < 0 || cfg.k > n) throw std::invalid_argument("deletion depth k out of range");
    std::uint64_t count = binomial(n, cfg.k);
    unsigned workers = cfg.workers > 0 ? static_cast<unsigned>(cfg.workers)
                                       : std::max(1u, std::thread::hardware_concurrency());
    if (workers > count) workers = static_cast<unsigned>(count);
    if (workers == 0) workers = 1;

    std::vector<detail::WorkerAccum> accs(workers);
    if (workers == 1) {
        detail::sweep_range(g, cfg, 0, count, accs[0]);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) {
            std::uint64_t lo = count * w / workers;
            std::uint64_t hi = count * (w + 1) / workers;
            threads.emplace_back(
                [&, lo, hi, w]() { detail::sweep_range(g, cfg, lo, hi, accs[w]); });
        }
        for (auto& t : threads) t.join();
    }

    SweepResult out;
    out.pooled.bin_width = cfg.bin_width;
    out.deck.k = cfg.k;
    out.report.subsets = count;
    for (auto& acc : accs) {
        if (cfg.mode != SweepMode::multiset) merge_into(out.pooled, acc.hist);
        if (cfg.mode != SweepMode::pooled)
            out.deck.members.insert(out.deck.members.end(), acc.deck.begin(), acc.deck.end());
        out.report.nonconverged += acc.nonconverged;
        out.report.pooled_values += acc.pooled_values;
    }
    std::sort(out.deck.members.begin(), out.deck.members.end());
    return out;
}

inline SparseHistogram delta_pooled(const Graph& g, SweepConfig cfg, SweepReport* report = nullptr) {
    cfg.mode = SweepMode::pooled;
    SweepResult r = delta_sweep(g, cfg);
    if (report) *report = r.report;
    return std::move(r.pooled);
}

inline DeckFingerprint delta_multiset(const Graph& g, SweepConfig cfg, SweepReport* report = nullptr) {
    cfg.mode = SweepMode::multiset;
    SweepResult r = delta_sweep(g, cfg);
    if (report) *report = r.report;
    return std::move(r.deck);
}

struct DeltaVerdict {
    std::optional<Verdict> pooled;
    std::optional<Verdict> multiset;

    Verdict overall() const {
        bool dist = (pooled && *pooled == Verdict::distinguished) ||
                    (multiset && *multiset == Verdict::distinguished);
        return dist ? Verdict::distinguished : Verdict::not_distinguished;
    }
};

inline DeltaVerdict compare_delta(const Graph& g, const Graph& h, const SweepConfig& cfg) {
    SweepResult rg = delta_sweep(g, cfg);
    SweepResult rh = delta_sweep(h, cfg);
    DeltaVerdict v;
    if (cfg.mode != SweepMode::multiset) v.pooled = compare_histograms(rg.pooled, rh.pooled);
    if (cfg.mode != SweepMode::pooled)
        v.multiset = rg.deck == rh.deck ? Verdict::not_distinguished : Verdict::distinguished;
    return v;
}

}  // namespace wlladder

#endif
