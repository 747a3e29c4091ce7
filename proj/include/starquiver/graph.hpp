// Bipartite loopless multigraphs with a fixed coloring (X, Y) and the
// spectral predicates built on exact Sturm counting.
//
// Vertices are ordered x_1 < ... < x_r < y_1 < ... < y_s everywhere, so the
// adjacency and Cartan block formulas are positional.
#pragma once

#include "starquiver/matrix.hpp"
#include "starquiver/numeric.hpp"
#include "starquiver/polynomial.hpp"
#include "starquiver/sturm.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace starquiver {

class BipartiteGraph {
   public:
    BipartiteGraph(std::size_t r, std::size_t s)
        : r_(r), s_(s), mult_(r * s, 0) {
        if (r < 1 || s < 1) throw std::invalid_argument("BipartiteGraph: empty color class");
    }

    static BipartiteGraph from_rows(const std::vector<std::vector<int>>& rows) {
        if (rows.empty() || rows[0].empty())
            throw std::invalid_argument("BipartiteGraph: empty matrix");
        BipartiteGraph g(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < g.r_; ++i) {
            if (rows[i].size() != g.s_) throw std::invalid_argument("BipartiteGraph: ragged rows");
            for (std::size_t j = 0; j < g.s_; ++j) {
                if (rows[i][j] < 0) throw std::invalid_argument("BipartiteGraph: negative multiplicity");
                g.mult_[i * g.s_ + j] = rows[i][j];
            }
        }
        return g;
    }

    std::size_t r() const { return r_; }
    std::size_t s() const { return s_; }
    std::size_t vertex_count() const { return r_ + s_; }

    int multiplicity(std::size_t i, std::size_t j) const { return mult_[i * s_ + j]; }
    void set_multiplicity(std::size_t i, std::size_t j, int m) {
        if (m < 0) throw std::invalid_argument("negative multiplicity");
        mult_[i * s_ + j] = m;
    }
    void add_edge(std::size_t i, std::size_t j) { ++mult_[i * s_ + j]; }

    bool is_simple() const {
        for (int m : mult_)
            if (m > 1) return false;
        return true;
    }

    std::size_t edge_count() const {
        std::size_t e = 0;
        for (int m : mult_) e += m;
        return e;
    }

    long row_degree(std::size_t i) const {
        long d = 0;
        for (std::size_t j = 0; j < s_; ++j) d += multiplicity(i, j);
        return d;
    }
    long col_degree(std::size_t j) const {
        long d = 0;
        for (std::size_t i = 0; i < r_; ++i) d += multiplicity(i, j);
        return d;
    }

    /// Edge list as 1-based (i, j) pairs, multiplicities expanded.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < s_; ++j)
                for (int m = 0; m < multiplicity(i, j); ++m)
                    out.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
        return out;
    }

    /// The biadjacency matrix R (r x s).
    IntMatrix biadjacency() const {
        IntMatrix m(r_, s_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < s_; ++j) m(i, j) = multiplicity(i, j);
        return m;
    }

    BipartiteGraph transposed() const {
        BipartiteGraph t(s_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < s_; ++j) t.mult_[j * r_ + i] = multiplicity(i, j);
        return t;
    }

    bool operator==(const BipartiteGraph& o) const {
        return r_ == o.r_ && s_ == o.s_ && mult_ == o.mult_;
    }
    bool operator!=(const BipartiteGraph& o) const { return !(*this == o); }

   private:
    std::size_t r_, s_;
    std::vector<int> mult_;
};

/// Symmetric block adjacency matrix [0 R; R^T 0] in the fixed vertex order.
inline IntMatrix adjacency(const BipartiteGraph& g) {
    const std::size_t r = g.r(), s = g.s();
    IntMatrix a(r + s, r + s);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            a(i, r + j) = g.multiplicity(i, j);
            a(r + j, i) = g.multiplicity(i, j);
        }
    return a;
}

/// R -> J - R. Only simple graphs have a bipartite complement.
inline BipartiteGraph bipartite_complement(const BipartiteGraph& g) {
    if (!g.is_simple())
        throw std::domain_error("bipartite_complement: undefined for multigraphs");
    BipartiteGraph c(g.r(), g.s());
    for (std::size_t i = 0; i < g.r(); ++i)
        for (std::size_t j = 0; j < g.s(); ++j)
            c.set_multiplicity(i, j, 1 - g.multiplicity(i, j));
    return c;
}

struct Bidegree {
    long sigma1;
    long sigma2;
    bool operator==(const Bidegree& o) const { return sigma1 == o.sigma1 && sigma2 == o.sigma2; }
};

/// (Sigma1, Sigma2) when every row degree is Sigma1 and every column degree
/// is Sigma2; nullopt when the graph is not semi-regular.
inline std::optional<Bidegree> bidegree(const BipartiteGraph& g) {
    long s1 = g.row_degree(0), s2 = g.col_degree(0);
    for (std::size_t i = 1; i < g.r(); ++i)
        if (g.row_degree(i) != s1) return std::nullopt;
    for (std::size_t j = 1; j < g.s(); ++j)
        if (g.col_degree(j) != s2) return std::nullopt;
    return Bidegree{s1, s2};
}

struct BiEigenPair {
    std::vector<Rational> d_x;
    std::vector<Rational> d_y;
    Rational sigma1;
    Rational sigma2;
};

/// Solves R d_y = Sigma1 d_x and R^T d_x = Sigma2 d_y for the pair of
/// bi-eigenvalues; nullopt when no exact scalars work. A zero block forces
/// the product to vanish and fixes the free scalar at 0.
inline std::optional<BiEigenPair> check_bi_eigen(const BipartiteGraph& g,
                                                 const std::vector<Rational>& d_x,
                                                 const std::vector<Rational>& d_y) {
    if (d_x.size() != g.r() || d_y.size() != g.s())
        throw std::invalid_argument("check_bi_eigen: vector length mismatch");
    bool x_zero = true, y_zero = true;
    for (const auto& v : d_x) x_zero = x_zero && v == 0;
    for (const auto& v : d_y) y_zero = y_zero && v == 0;
    if (x_zero && y_zero)
        throw std::invalid_argument("check_bi_eigen: both vectors are zero");

    std::vector<Rational> r_dy(g.r(), Rational(0)), rt_dx(g.s(), Rational(0));
    for (std::size_t i = 0; i < g.r(); ++i)
        for (std::size_t j = 0; j < g.s(); ++j) {
            const int m = g.multiplicity(i, j);
            if (!m) continue;
            r_dy[i] += Rational(m) * d_y[j];
            rt_dx[j] += Rational(m) * d_x[i];
        }

    auto solve_ratio = [](const std::vector<Rational>& prod,
                          const std::vector<Rational>& vec) -> std::optional<Rational> {
        Rational sigma(0);
        bool pinned = false;
        for (std::size_t i = 0; i < vec.size(); ++i) {
            if (vec[i] != 0) {
                Rational q = prod[i] / vec[i];
                if (pinned && q != sigma) return std::nullopt;
                sigma = q;
                pinned = true;
            } else if (prod[i] != 0) {
                return std::nullopt;
            }
        }
        return sigma;  // all-zero vec: product must vanish, scalar pinned at 0
    };

    auto s1 = solve_ratio(r_dy, d_x);
    auto s2 = solve_ratio(rt_dx, d_y);
    if (!s1 || !s2) return std::nullopt;
    return BiEigenPair{d_x, d_y, *s1, *s2};
}

/// Total multiplicity of adjacency eigenvalues strictly greater than 2.
inline long eigenvalues_above_two(const BipartiteGraph& g) {
    return sturm_count_greater_with_multiplicity(char_poly(adjacency(g)), Rational(2));
}

/// Second largest adjacency eigenvalue <= 2. Counted with multiplicity so
/// that disconnected inputs with several large components are rejected.
inline bool is_reflexive(const BipartiteGraph& g) { return eigenvalues_above_two(g) <= 1; }

/// Reflexive with largest eigenvalue strictly greater than 2.
inline bool is_salem(const BipartiteGraph& g) { return eigenvalues_above_two(g) == 1; }

/// Two X-vertices or two Y-vertices with identical neighbourhoods.
inline bool has_duplicate_neighborhoods(const BipartiteGraph& g) {
    if (!g.is_simple()) throw std::domain_error("has_duplicate_neighborhoods: simple graphs only");
    for (std::size_t i = 0; i < g.r(); ++i)
        for (std::size_t i2 = i + 1; i2 < g.r(); ++i2) {
            bool same = true;
            for (std::size_t j = 0; same && j < g.s(); ++j)
                same = g.multiplicity(i, j) == g.multiplicity(i2, j);
            if (same) return true;
        }
    for (std::size_t j = 0; j < g.s(); ++j)
        for (std::size_t j2 = j + 1; j2 < g.s(); ++j2) {
            bool same = true;
            for (std::size_t i = 0; same && i < g.r(); ++i)
                same = g.multiplicity(i, j) == g.multiplicity(i, j2);
            if (same) return true;
        }
    return false;
}

inline bool is_connected(const BipartiteGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        if (v < g.r()) {
            for (std::size_t j = 0; j < g.s(); ++j)
                if (g.multiplicity(v, j) && !seen[g.r() + j]) {
                    seen[g.r() + j] = 1;
                    ++count;
                    stack.push_back(g.r() + j);
                }
        } else {
            std::size_t j = v - g.r();
            for (std::size_t i = 0; i < g.r(); ++i)
                if (g.multiplicity(i, j) && !seen[i]) {
                    seen[i] = 1;
                    ++count;
                    stack.push_back(i);
                }
        }
    }
    return count == n;
}

/// Exact check that the squared spectral radius of A(G) equals n, via the
/// even/odd split of the characteristic polynomial. Returns false when the
/// parity split fails (a non-bipartite adjacency spectrum).
inline bool spectral_radius_squared_equals(const BipartiteGraph& g, const BigInt& n) {
    IntPoly p = char_poly(adjacency(g));
    // p(t) = t^e * h(t^2): pull out the even-part polynomial h.
    std::size_t low = 0;
    while (low <= static_cast<std::size_t>(p.degree()) && p.coeff(low) == 0) ++low;
    std::vector<BigInt> h;
    for (std::size_t k = low; k <= static_cast<std::size_t>(p.degree()); ++k) {
        if ((k - low) % 2 == 1) {
            if (p.coeff(k) != 0) return false;
            continue;
        }
        h.push_back(p.coeff(k));
    }
    IntPoly even(std::move(h));
    if (n == 0) return even.degree() == 0 || sturm_count_greater(even, Rational(0)) == 0;
    return even.eval(n) == 0 && sturm_count_greater(even, Rational(n)) == 0;
}

}  // namespace starquiver
