// Sturm chains over Z[t]: exact counting of real roots in (a, +inf).
#pragma once

#include "starquiver/polynomial.hpp"

#include <vector>

namespace starquiver {

/// Sturm chain of the squarefree part of p. Remainders are taken with
/// positive pseudo-division scalings and reduced to primitive parts to keep
/// coefficients small; neither step disturbs the sign sequence.
inline std::vector<IntPoly> sturm_chain(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("sturm_chain: zero polynomial");
    std::vector<IntPoly> chain;
    chain.push_back(squarefree_part(p));
    if (chain[0].degree() == 0) return chain;
    chain.push_back(chain[0].derivative().primitive_part());
    while (chain.back().degree() > 0) {
        IntPoly r = pseudo_remainder_pos(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;  // cannot happen for squarefree input
        chain.push_back((-r).primitive_part());
    }
    return chain;
}

namespace detail {

inline int sign_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace detail

/// Number of distinct real roots of p strictly greater than a.
inline long sturm_count_greater(const IntPoly& p, const Rational& a) {
    const auto chain = sturm_chain(p);
    std::vector<int> at_a, at_inf;
    at_a.reserve(chain.size());
    at_inf.reserve(chain.size());
    for (const auto& f : chain) {
        at_a.push_back(sign_of(f.eval(a)));
        at_inf.push_back(sign_of(f.leading()));
    }
    // Roots in (a, +inf): V(a) - V(+inf). Evaluations that hit a root exactly
    // drop out of the variation count, which matches the half-open convention.
    return detail::sign_variations(at_a) - detail::sign_variations(at_inf);
}

/// Number of real roots of p strictly greater than a, counted with
/// multiplicity: layer k of the iterated gcd tower carries the roots of
/// multiplicity > k.
inline long sturm_count_greater_with_multiplicity(const IntPoly& p, const Rational& a) {
    if (p.is_zero()) throw std::domain_error("sturm_count: zero polynomial");
    long total = 0;
    IntPoly layer = p.primitive_part();
    while (layer.degree() > 0) {
        total += sturm_count_greater(layer, a);
        layer = poly_gcd(layer, layer.derivative());
    }
    return total;
}

}  // namespace starquiver
