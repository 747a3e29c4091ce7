// Orderly generation of connected biregular bipartite graphs, one
// representative per color-preserving isomorphism class.
//
// Rows are filled top to bottom as Sigma1-subsets in nondecreasing mask order
// (breaking row-permutation symmetry), with running column-capacity bounds;
// survivors are deduplicated by canonical form. The search space partitions
// by the first-row choice, which is what the worker threads split on.
#pragma once

#include "starquiver/graph.hpp"
#include "starquiver/graph_canon.hpp"

#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace starquiver {

struct EnumerateOptions {
    /// Prune candidates with two equal rows or two equal columns. Sound for
    /// 2-RF candidate searches: duplicated neighbourhoods are excluded anyway.
    bool distinct_neighborhoods = false;
    std::size_t vertex_limit = 20;
    unsigned workers = 0;  // 0: use STARQUIVER_WORKERS or hardware default
};

inline unsigned resolve_worker_count(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("STARQUIVER_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? std::min(hw, 8u) : 1u;
}

namespace detail {

struct BiregularSearch {
    std::size_t r, s;
    long sigma1, sigma2;
    bool distinct;
    std::vector<unsigned> row_masks;  // all Sigma1-subsets of [s], ascending

    BiregularSearch(std::size_t r_, long s1, std::size_t s_, long s2, bool distinct_)
        : r(r_), s(s_), sigma1(s1), sigma2(s2), distinct(distinct_) {
        for (unsigned mask = 0; mask < (1u << s); ++mask)
            if (__builtin_popcount(mask) == sigma1) row_masks.push_back(mask);
    }

    void leaf(const std::vector<unsigned>& rows,
              std::map<std::vector<int>, BipartiteGraph>& out) const {
        BipartiteGraph g(r, s);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < s; ++j)
                if (rows[i] >> j & 1u) g.set_multiplicity(i, j, 1);
        if (!is_connected(g)) return;
        if (distinct) {
            std::vector<unsigned> cols(s, 0);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < s; ++j)
                    if (rows[i] >> j & 1u) cols[j] |= 1u << i;
            for (std::size_t j = 0; j < s; ++j)
                for (std::size_t j2 = j + 1; j2 < s; ++j2)
                    if (cols[j] == cols[j2]) return;
        }
        auto key = canonical_form(g);
        out.emplace(std::move(key), std::move(g));
    }

    void recurse(std::size_t depth, std::size_t min_idx, std::vector<unsigned>& rows,
                 std::vector<long>& colsum,
                 std::map<std::vector<int>, BipartiteGraph>& out) const {
        if (depth == r) {
            for (std::size_t j = 0; j < s; ++j)
                if (colsum[j] != sigma2) return;
            leaf(rows, out);
            return;
        }
        const long remaining_rows = static_cast<long>(r - depth);
        for (std::size_t idx = min_idx; idx < row_masks.size(); ++idx) {
            const unsigned mask = row_masks[idx];
            if (distinct && depth > 0 && mask == rows[depth - 1]) continue;
            bool fits = true;
            for (std::size_t j = 0; fits && j < s; ++j)
                if (mask >> j & 1u) fits = colsum[j] < sigma2;
            if (!fits) continue;
            bool feasible = true;
            for (std::size_t j = 0; feasible && j < s; ++j) {
                long need = sigma2 - colsum[j] - ((mask >> j & 1u) ? 1 : 0);
                feasible = need <= remaining_rows - 1;
            }
            if (!feasible) continue;
            rows[depth] = mask;
            for (std::size_t j = 0; j < s; ++j)
                if (mask >> j & 1u) ++colsum[j];
            recurse(depth + 1, idx, rows, colsum, out);
            for (std::size_t j = 0; j < s; ++j)
                if (mask >> j & 1u) --colsum[j];
        }
    }
};

}  // namespace detail

/// All connected simple bipartite graphs with constant row degree Sigma1 and
/// column degree Sigma2, up to row/column permutation, sorted by canonical
/// form. Preconditions: r*Sigma1 = s*Sigma2, Sigma1 <= s, Sigma2 <= r.
inline std::vector<BipartiteGraph> enumerate_biregular(std::size_t r, long sigma1,
                                                       std::size_t s, long sigma2,
                                                       const EnumerateOptions& opts = {}) {
    if (r < 1 || s < 1 || sigma1 < 0 || sigma2 < 0)
        throw std::invalid_argument("enumerate_biregular: bad parameters");
    if (static_cast<long>(r) * sigma1 != static_cast<long>(s) * sigma2)
        throw std::invalid_argument("enumerate_biregular: r*Sigma1 != s*Sigma2");
    if (sigma1 > static_cast<long>(s) || sigma2 > static_cast<long>(r))
        throw std::invalid_argument("enumerate_biregular: degree exceeds class size");
    if (r + s > opts.vertex_limit)
        throw std::length_error("enumerate_biregular: vertex limit exceeded");

    detail::BiregularSearch search(r, sigma1, s, sigma2, opts.distinct_neighborhoods);
    const unsigned workers =
        std::min<unsigned>(resolve_worker_count(opts.workers), search.row_masks.size());

    std::map<std::vector<int>, BipartiteGraph> found;
    if (workers <= 1 || r == 1) {
        std::vector<unsigned> rows(r, 0);
        std::vector<long> colsum(s, 0);
        search.recurse(0, 0, rows, colsum, found);
    } else {
        // partition by first-row choice; merge is order-insensitive
        std::mutex merge_mutex;
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&]() {
                std::map<std::vector<int>, BipartiteGraph> local;
                for (;;) {
                    std::size_t idx = next.fetch_add(1);
                    if (idx >= search.row_masks.size()) break;
                    std::vector<unsigned> rows(r, 0);
                    std::vector<long> colsum(s, 0);
                    const unsigned mask = search.row_masks[idx];
                    rows[0] = mask;
                    for (std::size_t j = 0; j < s; ++j)
                        if (mask >> j & 1u) ++colsum[j];
                    search.recurse(1, idx, rows, colsum, local);
                }
                std::lock_guard<std::mutex> lock(merge_mutex);
                for (auto& [k, v] : local) found.emplace(k, std::move(v));
            });
        for (auto& t : pool) t.join();
    }

    // emit the canonical representative of each class: deterministic output
    // independent of exploration order and worker count
    std::vector<BipartiteGraph> out;
    out.reserve(found.size());
    for (const auto& [key, g] : found) {
        BipartiteGraph canon(r, s);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < s; ++j) canon.set_multiplicity(i, j, key[2 + i * s + j]);
        out.push_back(std::move(canon));
    }
    return out;
}

}  // namespace starquiver
