#ifndef WLLADDER_FINGERPRINT_HPP
#define WLLADDER_FINGERPRINT_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dress.hpp"

namespace wlladder {

/// Sorted ascending sequence of converged non-loop edge values.
using Fingerprint = std::vector<double>;

inline Fingerprint sorted_fingerprint(const EdgeValues& d) {
    Fingerprint fp = d.edges;
    std::sort(fp.begin(), fp.end());
    return fp;
}

/// Sparse ε-bin histogram of a fingerprint. Bins with zero count are
/// absent; the bin range is unbounded so weighted graphs need no
/// preallocation.
struct SparseHistogram {
    double bin_width = 1e-6;
    std::map<std::int64_t, std::uint64_t> bins;
    std::uint64_t total = 0;

    friend bool operator==(const SparseHistogram& a, const SparseHistogram& b) {
        return a.bin_width == b.bin_width && a.bins == b.bins;
    }
};

/// Round-to-nearest bin center: v -> floor(v / bin_width + 1/2).
inline std::int64_t bin_of(double v, double bin_width) {
    return static_cast<std::int64_t>(std::floor(v / bin_width + 0.5));
}

inline SparseHistogram quantize(const Fingerprint& fp, double bin_width = 1e-6) {
    if (!(bin_width > 0.0)) throw std::invalid_argument("bin_width must be positive");
    SparseHistogram h;
    h.bin_width = bin_width;
    for (double v : fp) ++h.bins[bin_of(v, bin_width)];
    h.total = fp.size();
    return h;
}

inline SparseHistogram merge(const SparseHistogram& a, const SparseHistogram& b) {
    if (a.bin_width != b.bin_width)
        throw std::invalid_argument("cannot merge histograms with different bin widths");
    SparseHistogram out = a;
    for (auto [idx, c] : b.bins) out.bins[idx] += c;
    out.total = a.total + b.total;
    return out;
}

inline void merge_into(SparseHistogram& a, const SparseHistogram& b) {
    if (a.bin_width != b.bin_width)
        throw std::invalid_argument("cannot merge histograms with different bin widths");
    for (auto [idx, c] : b.bins) a.bins[idx] += c;
    a.total += b.total;
}

enum class Verdict { distinguished, not_distinguished };

inline const char* to_string(Verdict v) {
    return v == Verdict::distinguished ? "distinguished" : "not_distinguished";
}

inline Verdict compare_histograms(const SparseHistogram& a, const SparseHistogram& b) {
    if (a.bin_width != b.bin_width)
        throw std::invalid_argument("cannot compare histograms with different bin widths");
    return a.bins == b.bins ? Verdict::not_distinguished : Verdict::distinguished;
}

/// 128-bit non-cryptographic digest. Equal histograms always map to
/// equal digests; distinct ones collide with negligible probability.
struct Digest {
    std::uint64_t hi = 0, lo = 0;

    friend bool operator==(const Digest&, const Digest&) = default;
    friend auto operator<=>(const Digest& a, const Digest& b) {
        return std::pair(a.hi, a.lo) <=> std::pair(b.hi, b.lo);
    }

    std::string hex() const {
        static const char* digits = "0123456789abcdef";
        std::string s(32, '0');
        for (int i = 0; i < 16; ++i) s[static_cast<std::size_t>(15 - i)] = digits[(hi >> (4 * i)) & 0xf];
        for (int i = 0; i < 16; ++i) s[static_cast<std::size_t>(31 - i)] = digits[(lo >> (4 * i)) & 0xf];
        return s;
    }
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct DigestStream {
    std::uint64_t h1 = 0x2545f4914f6cdd1dull;
    std::uint64_t h2 = 0x9e3779b97f4a7c15ull;
    void absorb(std::uint64_t w) {
        h1 = mix64(h1 ^ w);
        h2 = mix64(h2 + (w * 0xff51afd7ed558ccdull));
    }
    Digest finish() const { return {mix64(h1 ^ h2), mix64(h2 + h1)}; }
};

}  // namespace detail

/// Deterministic mix over bin_width and the sorted (bin, count) pairs.
inline Digest digest(const SparseHistogram& h) {
    detail::DigestStream s;
    s.absorb(std::bit_cast<std::uint64_t>(h.bin_width));
    for (auto [idx, c] : h.bins) {
        s.absorb(static_cast<std::uint64_t>(idx));
        s.absorb(c);
    }
    return s.finish();
}

/// Digest of a sorted digest sequence (deck identity).
inline Digest digest_of_digests(const std::vector<Digest>& sorted_digests) {
    detail::DigestStream s;
    s.absorb(sorted_digests.size());
    for (const Digest& d : sorted_digests) {
        s.absorb(d.hi);
        s.absorb(d.lo);
    }
    return s.finish();
}

}  // namespace wlladder

#endif
