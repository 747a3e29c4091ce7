// Cyclotomic polynomials and Kronecker-style recognition of products of them.
#pragma once

#include "starquiver/polynomial.hpp"

#include <vector>

namespace starquiver {

inline long euler_phi(long d) {
    long result = d;
    for (long p = 2; p * p <= d; ++p) {
        if (d % p) continue;
        while (d % p == 0) d /= p;
        result -= result / p;
    }
    if (d > 1) result -= result / d;
    return result;
}

/// The d-th cyclotomic polynomial, via (t^d - 1) / prod_{e|d, e<d} Phi_e.
inline IntPoly cyclotomic_polynomial(long d) {
    if (d < 1) throw std::invalid_argument("cyclotomic_polynomial: d must be positive");
    std::vector<IntPoly> table(d + 1);
    for (long m = 1; m <= d; ++m) {
        if (d % m) continue;
        IntPoly num = IntPoly::monomial(1, m) - IntPoly::constant(1);
        for (long e = 1; e < m; ++e) {
            if (m % e) continue;
            auto q = divide_exact(num, table[e]);
            if (!q) throw std::logic_error("cyclotomic_polynomial: inexact division");
            num = *q;
        }
        table[m] = num;
    }
    return table[d];
}

/// True iff the monic integer polynomial p is a product of cyclotomic
/// polynomials, i.e. all its roots lie on the unit circle (Kronecker).
/// Decided by iterated trial division by Phi_d over all d with phi(d) <= deg p.
inline bool is_cyclotomic_product(const IntPoly& p) {
    if (p.is_zero() || !p.is_monic())
        throw std::domain_error("is_cyclotomic_product: polynomial must be monic");
    const long n = p.degree();
    if (n == 0) return true;
    IntPoly rest = p;
    // phi(d) > sqrt(d)/2 for all d, so phi(d) <= n forces d <= 4n^2 + 4.
    for (long d = 1; d <= 4 * n * n + 4 && rest.degree() > 0; ++d) {
        if (euler_phi(d) > n) continue;
        const IntPoly phi_d = cyclotomic_polynomial(d);
        while (rest.degree() >= phi_d.degree()) {
            auto q = divide_exact(rest, phi_d);
            if (!q) break;
            rest = *q;
        }
    }
    return rest.degree() == 0 && rest.leading() == 1;
}

}  // namespace starquiver
