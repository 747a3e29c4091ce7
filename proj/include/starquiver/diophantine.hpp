// The system kl + a + b - ak = p, ak = bl over positive integers with
// p in {0..4}: closed-form solution families, a brute-force oracle, and the
// translation to star-algebra parameters (r, Sigma1, s, Sigma2).
#pragma once

#include <array>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace starquiver {

struct Solution {
    int p;
    long a, k, b, l;

    auto tie() const { return std::tie(p, a, k, b, l); }
    bool operator<(const Solution& o) const { return tie() < o.tie(); }
    bool operator==(const Solution& o) const { return tie() == o.tie(); }
};

inline bool is_solution(int p, long a, long k, long b, long l) {
    if (p < 0 || p > 4 || a < 1 || k < 1 || b < 1 || l < 1) return false;
    return k * l + a + b - a * k == p && a * k == b * l;
}

/// (p, a, k, b, l)* = (p, b, l, a, k); an involution preserving solutions.
inline Solution dual(const Solution& s) { return {s.p, s.b, s.l, s.a, s.k}; }

/// One-parameter family (p, a + a_x*x, k + k_x*x, b + b_x*x, l + l_x*x), x >= 1.
struct SolutionFamily {
    int p;
    long a, a_x, k, k_x, b, b_x, l, l_x;
    Solution at(long x) const { return {p, a + a_x * x, k + k_x * x, b + b_x * x, l + l_x * x}; }
};

namespace detail {

inline const std::vector<Solution>& base_solutions() {
    // S1, S2 and the finite members of S3, S4, transcribed verbatim.
    static const std::vector<Solution> s = {
        // S1
        {2, 1, 1, 1, 1}, {3, 1, 2, 2, 1}, {4, 1, 2, 1, 2}, {4, 1, 3, 3, 1}, {4, 2, 2, 2, 2},
        // S2
        {0, 6, 6, 12, 3}, {0, 8, 4, 8, 4}, {0, 9, 3, 9, 3}, {0, 9, 6, 9, 6}, {0, 12, 3, 6, 6},
        {1, 6, 5, 10, 3}, {1, 8, 3, 8, 3}, {1, 8, 5, 8, 5}, {2, 6, 4, 8, 3}, {2, 7, 3, 7, 3},
        {2, 7, 4, 7, 4}, {3, 6, 3, 6, 3},
        // S3 (finite part)
        {0, 5, 10, 25, 2}, {0, 6, 6, 18, 2}, {0, 8, 4, 16, 2}, {0, 12, 3, 18, 2},
        {1, 5, 8, 20, 2}, {1, 6, 5, 15, 2}, {1, 7, 4, 14, 2}, {1, 10, 3, 15, 2},
        {2, 5, 6, 15, 2}, {2, 6, 4, 12, 2}, {2, 8, 3, 12, 2}, {3, 2, 1, 2, 1},
        {3, 5, 4, 10, 2}, {3, 6, 3, 9, 2}, {4, 2, 2, 4, 1}, {4, 3, 1, 3, 1},
        // S4 (finite part)
        {0, 16, 6, 8, 12}, {0, 18, 4, 6, 12}, {0, 18, 10, 12, 15}, {0, 25, 3, 5, 15},
        {1, 14, 5, 7, 10}, {1, 15, 4, 6, 10}, {1, 15, 8, 10, 12}, {1, 20, 3, 5, 12},
        {2, 12, 4, 6, 8}, {2, 12, 6, 8, 9}, {2, 15, 3, 5, 9},
        {3, 9, 4, 6, 6}, {3, 10, 3, 5, 6}, {4, 3, 2, 3, 2}, {4, 4, 1, 2, 2},
    };
    return s;
}

inline const std::array<SolutionFamily, 4>& infinite_families() {
    // The four p = 4 one-parameter families: (4,4,x,2x,2), (4,x+2,2,x+2,2),
    // (4,x+2,x,x+2,x), (4,2x,2,4,x).
    static const std::array<SolutionFamily, 4> f = {{
        {4, 4, 0, 0, 1, 0, 2, 2, 0},
        {4, 2, 1, 2, 0, 2, 1, 2, 0},
        {4, 2, 1, 0, 1, 2, 1, 0, 1},
        {4, 0, 2, 2, 0, 4, 0, 0, 1},
    }};
    return f;
}

}  // namespace detail

/// The full solution set S = (U S_i) u (U S_i*), the four infinite p = 4
/// families instantiated for 1 <= x <= family_param_bound.
inline std::set<Solution> closed_form_solutions(long family_param_bound) {
    if (family_param_bound < 1)
        throw std::invalid_argument("closed_form_solutions: bound must be >= 1");
    std::set<Solution> out;
    for (const auto& s : detail::base_solutions()) {
        out.insert(s);
        out.insert(dual(s));
    }
    for (const auto& fam : detail::infinite_families())
        for (long x = 1; x <= family_param_bound; ++x) {
            out.insert(fam.at(x));
            out.insert(dual(fam.at(x)));
        }
    return out;
}

/// All solutions with a, k, b, l <= max by direct enumeration, the fourth
/// variable forced by ak = bl.
inline std::set<Solution> brute_force_solutions(long max) {
    if (max < 1) throw std::invalid_argument("brute_force_solutions: bound must be >= 1");
    std::set<Solution> out;
    for (long a = 1; a <= max; ++a)
        for (long k = 1; k <= max; ++k) {
            const long ak = a * k;
            for (long b = 1; b <= max; ++b) {
                if (ak % b) continue;
                const long l = ak / b;
                if (l < 1 || l > max) continue;
                const long p = k * l + a + b - ak;
                if (p >= 0 && p <= 4) out.insert({static_cast<int>(p), a, k, b, l});
            }
        }
    return out;
}

struct StarParameters {
    long r, sigma1, s, sigma2;
    auto tie() const { return std::tie(r, sigma1, s, sigma2); }
    bool operator<(const StarParameters& o) const { return tie() < o.tie(); }
    bool operator==(const StarParameters& o) const { return tie() == o.tie(); }
};

/// Translation (a, k, b, l) -> (r, Sigma1, s, Sigma2) = (a, k, b, l) for the
/// requested p, filtered by the 2-RF shape bounds 2 <= Sigma1 <= s-2 and
/// 2 <= Sigma2 <= r-2 (with (1,1,1,1) kept as the special shape). For p = 4
/// only (4,2,4,2) remains: a finite Coxeter-matrix order forces that tuple.
inline std::set<StarParameters> solutions_for_star(int p) {
    if (p < 1 || p > 4) throw std::invalid_argument("solutions_for_star: p must be in 1..4");
    if (p == 4) return {StarParameters{4, 2, 4, 2}};
    std::set<StarParameters> out;
    // p <= 3 receives no contribution from the infinite families.
    for (const auto& base : detail::base_solutions())
        for (const Solution& s : {base, dual(base)}) {
            if (s.p != p) continue;
            StarParameters sp{s.a, s.k, s.b, s.l};
            if (sp.r == 1 && sp.sigma1 == 1 && sp.s == 1 && sp.sigma2 == 1) {
                out.insert(sp);
                continue;
            }
            if (sp.sigma1 >= 2 && sp.sigma1 <= sp.s - 2 && sp.sigma2 >= 2 && sp.sigma2 <= sp.r - 2)
                out.insert(sp);
        }
    return out;
}

}  // namespace starquiver
