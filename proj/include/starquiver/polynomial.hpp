// Univariate integer polynomials with exact arithmetic: the coefficient
// vectors live in ascending degree order and never carry trailing zeros.
#pragma once

#include "starquiver/matrix.hpp"
#include "starquiver/numeric.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace starquiver {

class IntPoly {
   public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<BigInt> coeffs) : c_(coeffs) { trim(); }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(BigInt v) { return IntPoly({std::move(v)}); }
    /// c * t^k
    static IntPoly monomial(BigInt c, std::size_t k) {
        std::vector<BigInt> v(k + 1, BigInt(0));
        v[k] = std::move(c);
        return IntPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const BigInt& leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<BigInt>& coefficients() const { return c_; }

    BigInt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly operator+(const IntPoly& o) const {
        std::vector<BigInt> v(std::max(c_.size(), o.c_.size()), BigInt(0));
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
        return IntPoly(std::move(v));
    }

    IntPoly operator-(const IntPoly& o) const {
        std::vector<BigInt> v(std::max(c_.size(), o.c_.size()), BigInt(0));
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
        return IntPoly(std::move(v));
    }

    IntPoly operator-() const {
        std::vector<BigInt> v = c_;
        for (auto& x : v) x = -x;
        return IntPoly(std::move(v));
    }

    IntPoly operator*(const IntPoly& o) const {
        if (is_zero() || o.is_zero()) return IntPoly();
        std::vector<BigInt> v(c_.size() + o.c_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
        }
        return IntPoly(std::move(v));
    }

    IntPoly scaled(const BigInt& k) const {
        if (k == 0) return IntPoly();
        std::vector<BigInt> v = c_;
        for (auto& x : v) x *= k;
        return IntPoly(std::move(v));
    }

    BigInt eval(const BigInt& x) const {
        BigInt acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
        return acc;
    }

    IntPoly derivative() const {
        if (c_.size() <= 1) return IntPoly();
        std::vector<BigInt> v(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * BigInt(i);
        return IntPoly(std::move(v));
    }

    /// GCD of the coefficients; positive, 0 only for the zero polynomial.
    BigInt content() const {
        BigInt g(0);
        for (const auto& x : c_) g = boost::multiprecision::gcd(g, x);
        return g;
    }

    /// this / content, with positive leading coefficient.
    IntPoly primitive_part() const {
        if (is_zero()) return IntPoly();
        BigInt g = content();
        if (leading() < 0) g = -g;
        std::vector<BigInt> v = c_;
        for (auto& x : v) x /= g;
        return IntPoly(std::move(v));
    }

    /// t^n p(1/t) for n = degree: coefficient reversal.
    IntPoly reversed() const {
        std::vector<BigInt> v(c_.rbegin(), c_.rend());
        return IntPoly(std::move(v));
    }

    bool is_self_reciprocal() const {
        const int n = degree();
        if (n < 0) return false;
        for (int i = 0; i <= n; ++i)
            if (coeff(i) != coeff(n - i)) return false;
        return true;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            const BigInt& a = c_[k];
            if (a == 0) continue;
            if (!first) os << (a > 0 ? " + " : " - ");
            else if (a < 0) os << "-";
            BigInt mag = boost::multiprecision::abs(a);
            if (k == 0 || mag != 1) os << mag.str();
            if (k > 0) os << "t";
            if (k > 1) os << "^" << k;
            first = false;
        }
        return os.str();
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

/// Quotient when the division is exact over the integers; nullopt otherwise.
inline std::optional<IntPoly> divide_exact(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
    if (num.is_zero()) return IntPoly();
    if (num.degree() < den.degree()) return std::nullopt;
    std::vector<BigInt> rem(num.coefficients());
    std::vector<BigInt> quot(num.degree() - den.degree() + 1, BigInt(0));
    const auto& d = den.coefficients();
    for (int k = num.degree() - den.degree(); k >= 0; --k) {
        BigInt top = rem[k + den.degree()];
        if (top == 0) continue;
        if (top % den.leading() != 0) return std::nullopt;
        BigInt q = top / den.leading();
        quot[k] = q;
        for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] -= q * d[i];
    }
    for (const auto& x : rem)
        if (x != 0) return std::nullopt;
    return IntPoly(std::move(quot));
}

/// Pseudo-remainder with a guaranteed-positive scaling of the dividend, so
/// sign sequences (Sturm chains) stay valid.
inline IntPoly pseudo_remainder_pos(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw std::domain_error("pseudo_remainder: zero divisor");
    IntPoly r = f;
    const BigInt lg = g.leading();
    const BigInt lg2 = lg * lg;  // positive
    while (!r.is_zero() && r.degree() >= g.degree()) {
        r = r.scaled(lg2);
        BigInt q = r.leading() / lg;  // exact: leading of r is a multiple of lg^2
        r = r - (g * IntPoly::monomial(q, r.degree() - g.degree()));
    }
    return r;
}

/// Primitive polynomial GCD (positive leading coefficient).
inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
    a = a.primitive_part();
    b = b.primitive_part();
    while (!b.is_zero()) {
        IntPoly r = pseudo_remainder_pos(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return a.primitive_part();
}

/// Squarefree part p / gcd(p, p').
inline IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    IntPoly g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p.primitive_part();
    // Gauss: the primitive gcd divides the primitive part exactly in Z[t].
    auto q = divide_exact(p.primitive_part(), g);
    if (!q) throw std::logic_error("squarefree_part: gcd does not divide");
    return q->primitive_part();
}

/// Lagrange interpolation at integer nodes; the result must have integer
/// coefficients (the use sites interpolate determinants of integer pencils).
inline IntPoly interpolate_integer(const std::vector<BigInt>& nodes,
                                   const std::vector<BigInt>& values) {
    if (nodes.size() != values.size() || nodes.empty())
        throw std::invalid_argument("interpolate_integer: node/value mismatch");
    const std::size_t n = nodes.size();
    // Newton divided differences over the rationals.
    std::vector<Rational> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = Rational(values[i]);
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rational(nodes[i] - nodes[i - level]);
            if (i == level) break;
        }
    // Expand the Newton form.
    std::vector<Rational> coeffs(n, Rational(0));
    std::vector<Rational> basis(n, Rational(0));  // product of (t - nodes[j]), j < level
    basis[0] = 1;
    std::size_t basis_len = 1;
    for (std::size_t level = 0; level < n; ++level) {
        for (std::size_t k = 0; k < basis_len; ++k) coeffs[k] += dd[level] * basis[k];
        if (level + 1 < n) {
            // basis *= (t - nodes[level])
            for (std::size_t k = basis_len; k > 0; --k)
                basis[k] = basis[k - 1] - Rational(nodes[level]) * basis[k];
            basis[0] = -Rational(nodes[level]) * basis[0];
            ++basis_len;
        }
    }
    std::vector<BigInt> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = to_integer(coeffs[k]);
    return IntPoly(std::move(out));
}

/// Exact characteristic polynomial det(tI - M), monic of degree n.
inline IntPoly char_poly(const IntMatrix& m) {
    if (!m.square()) throw std::invalid_argument("char_poly: matrix is not square");
    const std::size_t n = m.rows();
    std::vector<BigInt> nodes(n + 1), values(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        nodes[k] = BigInt(k);
        IntMatrix a = m;
        for (std::size_t i = 0; i < n; ++i) {
            a(i, i) = BigInt(k) - m(i, i);
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) a(i, j) = -m(i, j);
        }
        values[k] = det(a);
    }
    IntPoly p = interpolate_integer(nodes, values);
    if (p.degree() != static_cast<int>(n) || !p.is_monic())
        throw std::logic_error("char_poly: interpolation produced a non-monic result");
    return p;
}

/// det(tC + C^T) as an exact polynomial, by evaluation at t = 0..n.
/// Requires det(C) = 1: only then does the pencil determinant equal the
/// characteristic polynomial of -C^T C^{-1}.
inline IntPoly poly_det_pencil(const IntMatrix& c) {
    if (!c.square()) throw std::invalid_argument("poly_det_pencil: matrix is not square");
    if (det(c) != 1) throw std::domain_error("poly_det_pencil: det(C) must be 1");
    const std::size_t n = c.rows();
    const IntMatrix ct = c.transpose();
    std::vector<BigInt> nodes(n + 1), values(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        nodes[k] = BigInt(k);
        IntMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = BigInt(k) * c(i, j) + ct(i, j);
        values[k] = det(a);
    }
    IntPoly p = interpolate_integer(nodes, values);
    if (p.degree() != static_cast<int>(n) || !p.is_monic())
        throw std::logic_error("poly_det_pencil: expected a monic degree-n polynomial");
    return p;
}

}  // namespace starquiver
