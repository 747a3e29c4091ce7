// Multiplicative order of an integer matrix: finite k with M^k = I, a proof
// of infinitude, or an honest "unknown up to the bound".
#pragma once

#include "starquiver/cyclotomic.hpp"
#include "starquiver/matrix.hpp"
#include "starquiver/polynomial.hpp"

namespace starquiver {

struct OrderResult {
    enum class Kind { Finite, Infinite, Unknown };
    Kind kind;
    long value = 0;  // the order when Finite, the exhausted bound when Unknown

    static OrderResult finite(long k) { return {Kind::Finite, k}; }
    static OrderResult infinite() { return {Kind::Infinite, 0}; }
    static OrderResult unknown(long bound) { return {Kind::Unknown, bound}; }

    bool is_finite() const { return kind == Kind::Finite; }
    bool operator==(const OrderResult& o) const { return kind == o.kind && value == o.value; }

    std::string str() const {
        switch (kind) {
            case Kind::Finite: return std::to_string(value);
            case Kind::Infinite: return "infinite";
            default: return "unknown(bound " + std::to_string(value) + ")";
        }
    }
};

/// Order of M, resolved in three stages:
///   1. (M - I) nilpotent and M != I  =>  unipotent, infinite order;
///   2. characteristic polynomial not a product of cyclotomics  =>  an
///      eigenvalue off the unit circle, infinite order;
///   3. otherwise power iteration up to the bound; a cyclotomic spectrum with
///      no power reaching I within the bound reports Unknown.
inline OrderResult matrix_order(const IntMatrix& m, long bound = 1000) {
    if (!m.square()) throw std::invalid_argument("matrix_order: matrix is not square");
    if (bound < 1) throw std::invalid_argument("matrix_order: bound must be positive");
    if (det(m) == 0) throw std::domain_error("matrix_order: singular matrix");
    const std::size_t n = m.rows();
    const IntMatrix id = IntMatrix::identity(n);
    if (m == id) return OrderResult::finite(1);

    IntMatrix nil = m - id;
    for (std::size_t k = 0; k < n && !nil.is_zero(); ++k) nil = nil * (m - id);
    if (nil.is_zero()) return OrderResult::infinite();

    if (!is_cyclotomic_product(char_poly(m))) return OrderResult::infinite();

    IntMatrix p = m;
    for (long k = 1; k <= bound; ++k) {
        if (p == id) return OrderResult::finite(k);
        p = p * m;
    }
    return OrderResult::unknown(bound);
}

}  // namespace starquiver
