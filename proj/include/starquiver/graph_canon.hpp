// Canonical forms and automorphism search for bipartite graphs.
//
// The canonical form of a biadjacency matrix is the lexicographically minimal
// row-major reading over all row and column permutations. For a fixed row
// order the minimizing column order is simply "columns sorted by their value
// vector", which makes a branch-and-bound search over row prefixes exact.
#pragma once

#include "starquiver/graph.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

namespace starquiver {

namespace detail {

struct CanonSearch {
    const BipartiteGraph& g;
    std::size_t r, s;
    std::vector<std::size_t> chosen;   // row order prefix
    std::vector<char> used;
    std::vector<int> best;             // best full key found so far
    bool have_best = false;

    explicit CanonSearch(const BipartiteGraph& graph)
        : g(graph), r(graph.r()), s(graph.s()), used(r, 0) {}

    // Key of the prefix under the column order induced by sorting column
    // vectors restricted to the chosen rows. Ties cannot change the reading.
    std::vector<int> prefix_key() const {
        const std::size_t k = chosen.size();
        std::vector<std::vector<int>> colvecs(s, std::vector<int>(k));
        for (std::size_t j = 0; j < s; ++j)
            for (std::size_t t = 0; t < k; ++t) colvecs[j][t] = g.multiplicity(chosen[t], j);
        std::sort(colvecs.begin(), colvecs.end());
        std::vector<int> key;
        key.reserve(k * s);
        for (std::size_t t = 0; t < k; ++t)
            for (std::size_t j = 0; j < s; ++j) key.push_back(colvecs[j][t]);
        return key;
    }

    void run() {
        if (chosen.size() == r) {
            auto key = prefix_key();
            if (!have_best || key < best) {
                best = std::move(key);
                have_best = true;
            }
            return;
        }
        for (std::size_t i = 0; i < r; ++i) {
            if (used[i]) continue;
            chosen.push_back(i);
            used[i] = 1;
            bool prune = false;
            if (have_best) {
                auto key = prefix_key();
                // compare against the same-length prefix of the incumbent
                std::vector<int> inc(best.begin(), best.begin() + key.size());
                prune = key > inc;
            }
            if (!prune) run();
            used[i] = 0;
            chosen.pop_back();
        }
    }
};

}  // namespace detail

/// Lexicographically minimal row-major reading of the biadjacency matrix over
/// all row/column permutations; (r, s) prepended so keys are only equal for
/// graphs with identical color-class sizes.
inline std::vector<int> canonical_form(const BipartiteGraph& g) {
    detail::CanonSearch search(g);
    search.run();
    std::vector<int> key{static_cast<int>(g.r()), static_cast<int>(g.s())};
    key.insert(key.end(), search.best.begin(), search.best.end());
    return key;
}

/// Color-preserving isomorphism test (rows to rows, columns to columns).
inline bool isomorphic(const BipartiteGraph& a, const BipartiteGraph& b) {
    if (a.r() != b.r() || a.s() != b.s() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

namespace detail {

inline std::vector<std::vector<int>> distance_matrix(const BipartiteGraph& g) {
    const std::size_t n = g.vertex_count();
    const int INF = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, INF));
    for (std::size_t src = 0; src < n; ++src) {
        d[src][src] = 0;
        std::vector<std::size_t> frontier{src};
        int dist = 0;
        while (!frontier.empty()) {
            ++dist;
            std::vector<std::size_t> next;
            for (std::size_t v : frontier) {
                auto visit = [&](std::size_t u) {
                    if (d[src][u] > dist) {
                        d[src][u] = dist;
                        next.push_back(u);
                    }
                };
                if (v < g.r()) {
                    for (std::size_t j = 0; j < g.s(); ++j)
                        if (g.multiplicity(v, j)) visit(g.r() + j);
                } else {
                    for (std::size_t i = 0; i < g.r(); ++i)
                        if (g.multiplicity(i, v - g.r())) visit(i);
                }
            }
            frontier = std::move(next);
        }
    }
    return d;
}

// Backtracking search for a color-preserving isomorphism a -> b, optionally
// pinning one row image and one column image. Row images are chosen with
// pairwise-distance consistency; a full column matching is verified at the
// leaves by multiset comparison.
struct IsoSearch {
    const BipartiteGraph& a;
    const BipartiteGraph& b;
    std::vector<std::vector<int>> dist_a, dist_b;
    std::optional<std::pair<std::size_t, std::size_t>> pin_row, pin_col;
    std::vector<int> row_image;
    std::vector<char> row_used;

    IsoSearch(const BipartiteGraph& ga, const BipartiteGraph& gb)
        : a(ga), b(gb), dist_a(distance_matrix(ga)), dist_b(distance_matrix(gb)),
          row_image(ga.r(), -1), row_used(gb.r(), 0) {}

    bool columns_match() const {
        // column j of a, permuted by the row map, must match some unused
        // column of b exactly; equal vectors are interchangeable, so a sorted
        // multiset comparison suffices -- except for the pinned column, which
        // is checked directly.
        std::vector<std::vector<int>> cols_a, cols_b;
        for (std::size_t j = 0; j < a.s(); ++j) {
            std::vector<int> mapped(a.r());
            for (std::size_t i = 0; i < a.r(); ++i)
                mapped[static_cast<std::size_t>(row_image[i])] = a.multiplicity(i, j);
            cols_a.push_back(std::move(mapped));
        }
        for (std::size_t j = 0; j < b.s(); ++j) {
            std::vector<int> v(b.r());
            for (std::size_t i = 0; i < b.r(); ++i) v[i] = b.multiplicity(i, j);
            cols_b.push_back(std::move(v));
        }
        if (pin_col) {
            auto [ja, jb] = *pin_col;
            if (cols_a[ja] != cols_b[jb]) return false;
            cols_a.erase(cols_a.begin() + ja);
            cols_b.erase(cols_b.begin() + jb);
        }
        std::sort(cols_a.begin(), cols_a.end());
        std::sort(cols_b.begin(), cols_b.end());
        return cols_a == cols_b;
    }

    bool extend(std::size_t i) {
        if (i == a.r()) return columns_match();
        for (std::size_t t = 0; t < b.r(); ++t) {
            if (row_used[t]) continue;
            if (pin_row && i == pin_row->first && t != pin_row->second) continue;
            if (a.row_degree(i) != b.row_degree(t)) continue;
            bool ok = true;
            for (std::size_t p = 0; ok && p < i; ++p)
                ok = dist_a[i][p] == dist_b[t][row_image[p]];
            if (!ok) continue;
            row_image[i] = static_cast<int>(t);
            row_used[t] = 1;
            if (extend(i + 1)) return true;
            row_used[t] = 0;
            row_image[i] = -1;
        }
        return false;
    }

    bool find() {
        if (a.r() != b.r() || a.s() != b.s()) return false;
        return extend(0);
    }
};

inline bool exists_isomorphism(const BipartiteGraph& a, const BipartiteGraph& b,
                               std::optional<std::pair<std::size_t, std::size_t>> pin_row,
                               std::optional<std::pair<std::size_t, std::size_t>> pin_col) {
    IsoSearch search(a, b);
    search.pin_row = pin_row;
    search.pin_col = pin_col;
    return search.find();
}

}  // namespace detail

/// Edge transitivity under automorphisms that preserve the coloring, or swap
/// the two classes when r = s. Vacuously true for edgeless graphs.
inline bool is_edge_transitive(const BipartiteGraph& g, std::size_t vertex_limit = 32) {
    if (!g.is_simple()) throw std::domain_error("is_edge_transitive: simple graphs only");
    if (g.vertex_count() > vertex_limit)
        throw std::length_error("is_edge_transitive: graph exceeds the vertex limit");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < g.r(); ++i)
        for (std::size_t j = 0; j < g.s(); ++j)
            if (g.multiplicity(i, j)) edges.emplace_back(i, j);
    if (edges.empty()) return true;
    const auto [x0, y0] = edges.front();
    const BipartiteGraph gt = g.transposed();
    for (const auto& [x, y] : edges) {
        if (detail::exists_isomorphism(g, g, {{x0, x}}, {{y0, y}})) continue;
        // swap map: x0 -> y, y0 -> x, realized as an isomorphism g -> g^T
        if (g.r() == g.s() && detail::exists_isomorphism(g, gt, {{x0, y}}, {{y0, x}})) continue;
        return false;
    }
    return true;
}

}  // namespace starquiver
