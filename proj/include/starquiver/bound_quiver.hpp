// Bound quiver algebras with monomial and binary commutativity relations,
// truncated at a fixed path length, plus the star-algebra constructions
// Gamma_Lambda and the trivial extension T(Lambda).
#pragma once

#include "starquiver/matrix.hpp"
#include "starquiver/numeric.hpp"
#include "starquiver/quiver.hpp"
#include "starquiver/star_algebra.hpp"

#include <functional>
#include <map>
#include <vector>

namespace starquiver {

using ArrowPath = std::vector<int>;  // composable arrow indices

class BoundQuiverAlgebra {
   public:
    BoundQuiverAlgebra(Quiver quiver, int max_path_length)
        : quiver_(std::move(quiver)), max_len_(max_path_length) {
        if (max_path_length < 1)
            throw std::invalid_argument("BoundQuiverAlgebra: max path length must be positive");
    }

    void add_monomial_relation(ArrowPath path) {
        validate_path(path);
        monomial_.push_back(std::move(path));
    }

    /// Relation p - q between two parallel paths.
    void add_commutativity_relation(ArrowPath p, ArrowPath q) {
        validate_path(p);
        validate_path(q);
        if (path_source(p) != path_source(q) || path_target(p) != path_target(q))
            throw std::invalid_argument("commutativity relation: paths are not parallel");
        commutativity_.emplace_back(std::move(p), std::move(q));
    }

    const Quiver& quiver() const { return quiver_; }
    int max_path_length() const { return max_len_; }
    const std::vector<ArrowPath>& monomial_relations() const { return monomial_; }
    const std::vector<std::pair<ArrowPath, ArrowPath>>& commutativity_relations() const {
        return commutativity_;
    }
    bool is_monomial() const { return commutativity_.empty(); }

    int path_source(const ArrowPath& p) const {
        return p.empty() ? -1 : quiver_.arrows()[p.front()].source;
    }
    int path_target(const ArrowPath& p) const {
        return p.empty() ? -1 : quiver_.arrows()[p.back()].target;
    }

   private:
    void validate_path(const ArrowPath& p) const {
        if (p.empty()) throw std::invalid_argument("relation path is empty");
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (p[k] < 0 || p[k] >= quiver_.arrow_count())
                throw std::invalid_argument("relation path: arrow index out of range");
            if (k > 0 && quiver_.arrows()[p[k - 1]].target != quiver_.arrows()[p[k]].source)
                throw std::invalid_argument("relation path: arrows are not composable");
        }
        if (static_cast<int>(p.size()) > max_len_)
            throw std::invalid_argument("relation path exceeds the length bound");
    }

    Quiver quiver_;
    int max_len_;
    std::vector<ArrowPath> monomial_;
    std::vector<std::pair<ArrowPath, ArrowPath>> commutativity_;
};

namespace detail {

struct PathTable {
    // paths of length 0..max_len, indexed; trivial path v is index v
    std::vector<ArrowPath> paths;
    std::vector<int> source, target;
    std::map<ArrowPath, int> index_of_nontrivial;

    int index(const ArrowPath& p, int trivial_vertex = -1) const {
        if (p.empty()) return trivial_vertex;
        auto it = index_of_nontrivial.find(p);
        return it == index_of_nontrivial.end() ? -1 : it->second;
    }
};

inline PathTable enumerate_paths(const BoundQuiverAlgebra& a) {
    const Quiver& q = a.quiver();
    PathTable t;
    for (int v = 0; v < q.vertex_count(); ++v) {
        t.paths.push_back({});
        t.source.push_back(v);
        t.target.push_back(v);
    }
    std::size_t level_start = 0, level_end = t.paths.size();
    for (int len = 1; len <= a.max_path_length(); ++len) {
        const std::size_t next_start = t.paths.size();
        for (std::size_t p = level_start; p < level_end; ++p) {
            for (int ai = 0; ai < q.arrow_count(); ++ai) {
                if (q.arrows()[ai].source != t.target[p]) continue;
                ArrowPath ext = t.paths[p];
                ext.push_back(ai);
                t.source.push_back(len == 1 ? q.arrows()[ai].source : t.source[p]);
                t.target.push_back(q.arrows()[ai].target);
                t.index_of_nontrivial[ext] = static_cast<int>(t.paths.size());
                t.paths.push_back(std::move(ext));
            }
        }
        level_start = next_start;
        level_end = t.paths.size();
        if (level_start == level_end) break;  // no longer paths exist
    }
    return t;
}

// Sparse exact Gaussian elimination; returns the per-(source, target) count
// of surviving basis classes. All relation closure rows are +-1 combinations
// of one or two paths, so rows stay sparse throughout.
struct SparseEliminator {
    std::map<int, std::map<int, Rational>> pivots;  // pivot column -> reduced row

    void add_row(std::map<int, Rational> row) {
        while (!row.empty()) {
            const int col = row.begin()->first;
            auto piv = pivots.find(col);
            if (piv == pivots.end()) {
                const Rational lead = row.begin()->second;
                for (auto& [c, v] : row) v /= lead;
                pivots.emplace(col, std::move(row));
                return;
            }
            const Rational factor = row.begin()->second;
            for (const auto& [c, v] : piv->second) {
                auto it = row.find(c);
                if (it == row.end()) {
                    row.emplace(c, -factor * v);
                } else {
                    it->second -= factor * v;
                    if (it->second == 0) row.erase(it);
                }
            }
        }
    }

    std::size_t rank() const { return pivots.size(); }
};

}  // namespace detail

/// Dimension of the algebra: paths of length <= bound modulo the two-sided
/// ideal generated by the relations, by exact elimination on the path basis.
inline long bounded_dimension(const BoundQuiverAlgebra& a) {
    const auto table = detail::enumerate_paths(a);
    detail::SparseEliminator elim;

    auto closure_rows = [&](const std::vector<std::pair<ArrowPath, Rational>>& terms) {
        // multiply the generator by all path prefixes and suffixes within the bound
        const int glen = static_cast<int>(terms.front().first.size());
        const int gsrc = a.quiver().arrows()[terms.front().first.front()].source;
        const int gtgt = a.quiver().arrows()[terms.front().first.back()].target;
        for (std::size_t px = 0; px < table.paths.size(); ++px) {
            if (table.target[px] != gsrc) continue;
            const int xlen = static_cast<int>(table.paths[px].size());
            if (xlen + glen > a.max_path_length()) continue;
            for (std::size_t py = 0; py < table.paths.size(); ++py) {
                if (table.source[py] != gtgt) continue;
                const int ylen = static_cast<int>(table.paths[py].size());
                if (xlen + glen + ylen > a.max_path_length()) continue;
                std::map<int, Rational> row;
                for (const auto& [gpath, coeff] : terms) {
                    ArrowPath full = table.paths[px];
                    full.insert(full.end(), gpath.begin(), gpath.end());
                    full.insert(full.end(), table.paths[py].begin(), table.paths[py].end());
                    const int idx = table.index(full);
                    if (idx < 0) throw std::logic_error("bounded_dimension: missing closure path");
                    row[idx] += coeff;
                    if (row[idx] == 0) row.erase(idx);
                }
                if (!row.empty()) elim.add_row(std::move(row));
            }
        }
    };

    for (const auto& m : a.monomial_relations()) closure_rows({{m, Rational(1)}});
    for (const auto& [p, q] : a.commutativity_relations())
        closure_rows({{p, Rational(1)}, {q, Rational(-1)}});

    return static_cast<long>(table.paths.size()) - static_cast<long>(elim.rank());
}

/// Cartan matrix by path counting: entry (u, v) is dim e_u A e_v, the number
/// of independent paths u -> v in the bounded quotient.
inline IntMatrix cartan_from_paths(const BoundQuiverAlgebra& a) {
    const auto table = detail::enumerate_paths(a);
    const int n = a.quiver().vertex_count();

    // Eliminate per (source, target) block; relations are endpoint-homogeneous
    // so the global quotient splits.
    std::map<std::pair<int, int>, detail::SparseEliminator> elims;
    std::map<std::pair<int, int>, long> path_counts;
    for (std::size_t p = 0; p < table.paths.size(); ++p)
        ++path_counts[{table.source[p], table.target[p]}];

    auto closure_rows = [&](const std::vector<std::pair<ArrowPath, Rational>>& terms) {
        const int glen = static_cast<int>(terms.front().first.size());
        const int gsrc = a.quiver().arrows()[terms.front().first.front()].source;
        const int gtgt = a.quiver().arrows()[terms.front().first.back()].target;
        for (std::size_t px = 0; px < table.paths.size(); ++px) {
            if (table.target[px] != gsrc) continue;
            const int xlen = static_cast<int>(table.paths[px].size());
            if (xlen + glen > a.max_path_length()) continue;
            for (std::size_t py = 0; py < table.paths.size(); ++py) {
                if (table.source[py] != gtgt) continue;
                const int ylen = static_cast<int>(table.paths[py].size());
                if (xlen + glen + ylen > a.max_path_length()) continue;
                std::map<int, Rational> row;
                for (const auto& [gpath, coeff] : terms) {
                    ArrowPath full = table.paths[px];
                    full.insert(full.end(), gpath.begin(), gpath.end());
                    full.insert(full.end(), table.paths[py].begin(), table.paths[py].end());
                    row[table.index(full)] += coeff;
                }
                for (auto it = row.begin(); it != row.end();)
                    it = it->second == 0 ? row.erase(it) : std::next(it);
                if (!row.empty())
                    elims[{table.source[px], table.target[py]}].add_row(std::move(row));
            }
        }
    };

    for (const auto& m : a.monomial_relations()) closure_rows({{m, Rational(1)}});
    for (const auto& [p, q] : a.commutativity_relations())
        closure_rows({{p, Rational(1)}, {q, Rational(-1)}});

    IntMatrix cartan(n, n);
    for (const auto& [uv, count] : path_counts) {
        long rank = 0;
        auto it = elims.find(uv);
        if (it != elims.end()) rank = static_cast<long>(it->second.rank());
        cartan(uv.first, uv.second) = count - rank;
    }
    return cartan;
}

/// Gamma_Lambda = T(Lambda) / (a_1, ..., a_r), presented directly as the
/// one-point extension of the B_Lambda quiver: arrows b_j: z -> y_j and
/// beta_ji: y_j -> x_i, with one commutativity relation per pair of parallel
/// length-2 paths into each x_i. Vertex order: z, y_1..y_s, x_1..x_r.
inline BoundQuiverAlgebra gamma_lambda(const StarAlgebra& lam) {
    if (!is_balanced(lam))
        throw std::domain_error("gamma_lambda: star algebra must be balanced");
    const int r = static_cast<int>(lam.r()), s = static_cast<int>(lam.s());
    Quiver q;
    q.add_vertex("z");
    for (int j = 1; j <= s; ++j) q.add_vertex("y" + std::to_string(j));
    for (int i = 1; i <= r; ++i) q.add_vertex("x" + std::to_string(i));
    // arrows b_j first (index j-1), then beta_ji
    for (int j = 1; j <= s; ++j) q.add_arrow(0, j, "b" + std::to_string(j));
    std::map<std::pair<int, int>, int> beta_index;
    for (int j = 1; j <= s; ++j)
        for (int i = 1; i <= r; ++i)
            if (!lam.is_relation(i, j)) {
                beta_index[{j, i}] = q.arrow_count();
                q.add_arrow(j, s + i, "B" + std::to_string(j) + "_" + std::to_string(i));
            }
    BoundQuiverAlgebra gamma(std::move(q), 2);
    for (int i = 1; i <= r; ++i) {
        std::vector<int> incoming;
        for (int j = 1; j <= s; ++j)
            if (!lam.is_relation(i, j)) incoming.push_back(j);
        for (std::size_t u = 0; u < incoming.size(); ++u)
            for (std::size_t v = u + 1; v < incoming.size(); ++v) {
                int j = incoming[u], j2 = incoming[v];
                gamma.add_commutativity_relation({j - 1, beta_index[{j, i}]},
                                                 {j2 - 1, beta_index[{j2, i}]});
            }
    }
    return gamma;
}

/// T(Lambda) for a balanced star algebra: the star quiver plus the B_Lambda
/// arrows, with the original monomial relations, the two displayed families
/// of commutativity relations, and every path of length > 3 equal to zero.
/// Vertex order: x_1..x_r, z, y_1..y_s.
inline BoundQuiverAlgebra trivial_extension(const StarAlgebra& lam) {
    if (!is_balanced(lam))
        throw std::domain_error("trivial_extension: star algebra must be balanced");
    const int r = static_cast<int>(lam.r()), s = static_cast<int>(lam.s());
    Quiver q = star_quiver(lam.r(), lam.s());
    // arrow indices in star_quiver: a_i = i-1, b_j = r + j - 1
    std::map<std::pair<int, int>, int> beta_index;
    for (int j = 1; j <= s; ++j)
        for (int i = 1; i <= r; ++i)
            if (!lam.is_relation(i, j)) {
                beta_index[{j, i}] = q.arrow_count();
                q.add_arrow(r + j, i - 1, "B" + std::to_string(j) + "_" + std::to_string(i));
            }
    BoundQuiverAlgebra t(std::move(q), 3);
    for (const auto& [i, j] : lam.relations())
        t.add_monomial_relation({i - 1, r + j - 1});  // a_i b_j
    for (int j = 1; j <= s; ++j) {
        std::vector<int> is;
        for (int i = 1; i <= r; ++i)
            if (!lam.is_relation(i, j)) is.push_back(i);
        for (std::size_t u = 0; u < is.size(); ++u)
            for (std::size_t v = u + 1; v < is.size(); ++v)
                t.add_commutativity_relation({beta_index[{j, is[u]}], is[u] - 1},
                                             {beta_index[{j, is[v]}], is[v] - 1});
    }
    for (int i = 1; i <= r; ++i) {
        std::vector<int> js;
        for (int j = 1; j <= s; ++j)
            if (!lam.is_relation(i, j)) js.push_back(j);
        for (std::size_t u = 0; u < js.size(); ++u)
            for (std::size_t v = u + 1; v < js.size(); ++v)
                t.add_commutativity_relation({r + js[u] - 1, beta_index[{js[u], i}]},
                                             {r + js[v] - 1, beta_index[{js[v], i}]});
    }
    return t;
}

/// The star algebra itself as a monomial bound quiver algebra on S_(r,s).
inline BoundQuiverAlgebra star_bound_quiver_algebra(const StarAlgebra& lam) {
    const int r = static_cast<int>(lam.r());
    BoundQuiverAlgebra a(star_quiver(lam.r(), lam.s()), 2);
    for (const auto& [i, j] : lam.relations()) a.add_monomial_relation({i - 1, r + j - 1});
    return a;
}

/// Loewy length of the projective at v in an acyclic monomial algebra:
/// 1 + the longest path from v avoiding every relation subpath.
inline int loewy_length_projective(const BoundQuiverAlgebra& a, int v) {
    if (!a.is_monomial())
        throw std::domain_error("loewy_length_projective: algebra must be monomial");
    if (!a.quiver().is_acyclic())
        throw std::domain_error("loewy_length_projective: quiver must be acyclic");
    if (v < 0 || v >= a.quiver().vertex_count())
        throw std::invalid_argument("loewy_length_projective: bad vertex");

    const auto& arrows = a.quiver().arrows();
    int best = 0;
    ArrowPath current;
    auto is_zero = [&](const ArrowPath& p) {
        if (static_cast<int>(p.size()) > a.max_path_length()) return true;
        for (const auto& rel : a.monomial_relations()) {
            if (rel.size() > p.size()) continue;
            for (std::size_t off = 0; off + rel.size() <= p.size(); ++off)
                if (std::equal(rel.begin(), rel.end(), p.begin() + off)) return true;
        }
        return false;
    };
    std::function<void(int)> dfs = [&](int at) {
        best = std::max(best, static_cast<int>(current.size()));
        for (int ai = 0; ai < static_cast<int>(arrows.size()); ++ai) {
            if (arrows[ai].source != at) continue;
            current.push_back(ai);
            if (!is_zero(current)) dfs(arrows[ai].target);
            current.pop_back();
        }
    };
    dfs(v);
    return best + 1;
}

}  // namespace starquiver
