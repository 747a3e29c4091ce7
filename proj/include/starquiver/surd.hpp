// Quadratic surds a + b*sqrt(D) with rational a, b and squarefree D >= 1.
// Used only to report the two roots of w(t) exactly.
#pragma once

#include "starquiver/numeric.hpp"

#include <string>

namespace starquiver {

struct QuadraticSurd {
    Rational a;
    Rational b;
    BigInt d;  // squarefree, >= 1; b == 0 forces d == 1

    static QuadraticSurd rational(Rational v) { return {std::move(v), Rational(0), BigInt(1)}; }

    /// a + b * sqrt(radicand), the square part of the radicand pulled into b.
    static QuadraticSurd make(Rational a, Rational b, BigInt radicand) {
        if (radicand < 0) throw std::domain_error("QuadraticSurd: negative radicand");
        BigInt square(1), rest = radicand;
        for (BigInt f = 2; f * f <= rest; ++f)
            while (rest % (f * f) == 0) {
                rest /= f * f;
                square *= f;
            }
        QuadraticSurd out{std::move(a), b * Rational(square), rest};
        return out.normalized();
    }

    QuadraticSurd normalized() const {
        QuadraticSurd out = *this;
        if (out.d == 0) {  // sqrt(0) term vanishes
            out.b = 0;
            out.d = 1;
        }
        if (out.d == 1) {  // fold a rational square root into a
            out.a += out.b;
            out.b = 0;
            out.d = 1;
        }
        if (out.b == 0) out.d = 1;
        return out;
    }

    bool operator==(const QuadraticSurd& o) const { return a == o.a && b == o.b && d == o.d; }

    QuadraticSurd operator*(const QuadraticSurd& o) const {
        if (b != 0 && o.b != 0 && d != o.d)
            throw std::domain_error("QuadraticSurd: mixed radicands");
        const BigInt dd = (b != 0) ? d : o.d;
        QuadraticSurd out{a * o.a + b * o.b * Rational(dd), a * o.b + b * o.a, dd};
        return out.normalized();
    }

    std::string str() const {
        if (b == 0) return a.str();
        std::string out = a == 0 ? "" : a.str() + " + ";
        return out + b.str() + "*sqrt(" + d.str() + ")";
    }
};

}  // namespace starquiver
