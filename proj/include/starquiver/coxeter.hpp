// Cartan and Coxeter matrices of the bipartite constructions, the
// w * CP_Gamma = CP_KQ * p factorization, the adjacency <-> Coxeter
// eigenvalue correspondence, and the necessary-condition battery.
#pragma once

#include "starquiver/bound_quiver.hpp"
#include "starquiver/cyclotomic.hpp"
#include "starquiver/graph.hpp"
#include "starquiver/matrix_order.hpp"
#include "starquiver/polynomial.hpp"
#include "starquiver/star_algebra.hpp"
#include "starquiver/sturm.hpp"
#include "starquiver/surd.hpp"

#include <optional>
#include <string>
#include <vector>

namespace starquiver {

/// Cartan matrix of the bipartite path algebra KQ: [I_r R; 0 I_s].
inline IntMatrix cartan_of_bipartite_path_algebra(const BipartiteGraph& g) {
    const std::size_t r = g.r(), s = g.s();
    IntMatrix c = IntMatrix::identity(r + s);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < s; ++j) c(i, r + j) = g.multiplicity(i, j);
    return c;
}

/// Cartan matrix of the one-point extension: [1 d_x^T d_y^T; 0 I_r R; 0 0 I_s].
inline IntMatrix cartan_of_gamma(const BipartiteGraph& g, const std::vector<BigInt>& d_x,
                                 const std::vector<BigInt>& d_y) {
    if (d_x.size() != g.r() || d_y.size() != g.s())
        throw std::invalid_argument("cartan_of_gamma: dimension vector length mismatch");
    const std::size_t r = g.r(), s = g.s();
    IntMatrix c = IntMatrix::identity(1 + r + s);
    for (std::size_t i = 0; i < r; ++i) {
        c(0, 1 + i) = d_x[i];
        for (std::size_t j = 0; j < s; ++j) c(1 + i, 1 + r + j) = g.multiplicity(i, j);
    }
    for (std::size_t j = 0; j < s; ++j) c(0, 1 + r + j) = d_y[j];
    return c;
}

/// Cartan matrix of the star algebra in the order x_1..x_r, z, y_1..y_s:
/// paths x_i -> z always exist, x_i -> y_j exactly for the non-relations.
inline IntMatrix cartan_of_star(const StarAlgebra& lam) {
    const std::size_t r = lam.r(), s = lam.s();
    IntMatrix c = IntMatrix::identity(r + 1 + s);
    for (std::size_t i = 0; i < r; ++i) {
        c(i, r) = 1;
        for (std::size_t j = 0; j < s; ++j)
            if (!lam.is_relation(static_cast<int>(i) + 1, static_cast<int>(j) + 1))
                c(i, r + 1 + j) = 1;
    }
    for (std::size_t j = 0; j < s; ++j) c(r, r + 1 + j) = 1;
    return c;
}

/// Coxeter polynomial det(tC + C^T); requires det C = 1.
inline IntPoly coxeter_polynomial(const IntMatrix& cartan) { return poly_det_pencil(cartan); }

/// w(t) = (t+1)^2 - t*n = t^2 - (n-2)t + 1 for n = Sigma1*Sigma2.
/// n = 0 (an edgeless graph) degenerates to (t+1)^2 and is accepted.
inline IntPoly w_poly(const BigInt& sigma_product) {
    if (sigma_product < 0) throw std::domain_error("w_poly: Sigma1*Sigma2 must be nonnegative");
    return IntPoly{1, -(sigma_product - 2), 1};
}

struct PFactor {
    IntPoly p;  // (t+1) * q
    IntPoly q;  // t^2 - (inner)t + 1
};

/// p(t) = (t+1)(t^2 - (Sigma1 Sigma2 + |d_x|^2 + |d_y|^2 - |d_x|^2 Sigma1 - 2)t + 1).
inline PFactor p_poly(const Rational& sigma1, const Rational& sigma2, const BigInt& dx2,
                      const BigInt& dy2) {
    if (dx2 <= 0 || dy2 <= 0) throw std::domain_error("p_poly: |d_x|^2, |d_y|^2 must be positive");
    if (sigma1 * Rational(dx2) != sigma2 * Rational(dy2))
        throw std::domain_error("p_poly: Sigma1|d_x|^2 != Sigma2|d_y|^2");
    const Rational inner_rat =
        sigma1 * sigma2 + Rational(dx2) + Rational(dy2) - Rational(dx2) * sigma1 - 2;
    const BigInt inner = to_integer(inner_rat);
    PFactor out;
    out.q = IntPoly{1, -inner, 1};
    out.p = IntPoly{1, 1} * out.q;
    return out;
}

/// The two roots of w(t): f+-(lambda) = ((lambda^2-2) +- lambda sqrt(lambda^2-4))/2,
/// evaluated at lambda = sqrt(n) for integer n = Sigma1*Sigma2 >= 4.
/// Their product is always 1.
inline std::pair<QuadraticSurd, QuadraticSurd> f_plus_minus_squared(const BigInt& n) {
    if (n < 4) throw std::domain_error("f_plus_minus: lambda must be >= 2");
    // lambda*sqrt(lambda^2-4) = sqrt(n(n-4)) for lambda = sqrt(n)
    const Rational half(1, 2);
    QuadraticSurd plus = QuadraticSurd::make(Rational(n - 2) * half, half, n * (n - 4));
    QuadraticSurd minus = QuadraticSurd::make(Rational(n - 2) * half, -half, n * (n - 4));
    return {plus, minus};
}

/// f+- at a rational lambda >= 2.
inline std::pair<QuadraticSurd, QuadraticSurd> f_plus_minus(const Rational& lambda) {
    if (lambda < 2) throw std::domain_error("f_plus_minus: lambda must be >= 2");
    const Rational radicand_rat = lambda * lambda - 4;
    // sqrt(p/q) = sqrt(p q) / q
    const BigInt pq = numerator(radicand_rat) * denominator(radicand_rat);
    const Rational half_lambda_over_q = lambda / (2 * Rational(denominator(radicand_rat)));
    const Rational a = (lambda * lambda - 2) / 2;
    QuadraticSurd plus = QuadraticSurd::make(a, half_lambda_over_q, pq);
    QuadraticSurd minus = QuadraticSurd::make(a, -half_lambda_over_q, pq);
    return {plus, minus};
}

/// Checks w(t) * CP_Gamma(t) == CP_KQ(t) * p(t) and w | CP_KQ, for the
/// one-point extension attached to a nonnegative-integer bi-eigenvector.
inline bool verify_factorization(const BipartiteGraph& g, const std::vector<BigInt>& d_x,
                                 const std::vector<BigInt>& d_y) {
    std::vector<Rational> dx_rat(d_x.begin(), d_x.end()), dy_rat(d_y.begin(), d_y.end());
    auto pair = check_bi_eigen(g, dx_rat, dy_rat);
    if (!pair) throw std::domain_error("verify_factorization: not a bi-eigenvector");
    const BigInt sigma_product = to_integer(pair->sigma1 * pair->sigma2);
    BigInt dx2(0), dy2(0);
    for (const auto& v : d_x) dx2 += v * v;
    for (const auto& v : d_y) dy2 += v * v;

    const IntPoly w = w_poly(sigma_product);
    const IntPoly cp_kq = coxeter_polynomial(cartan_of_bipartite_path_algebra(g));
    const IntPoly cp_gamma = coxeter_polynomial(cartan_of_gamma(g, d_x, d_y));
    const PFactor pf = p_poly(pair->sigma1, pair->sigma2, dx2, dy2);
    if (!divide_exact(cp_kq, w).has_value()) return false;
    return w * cp_gamma == cp_kq * pf.p;
}

/// The cleared-denominator form of CP_KQ(z) = z^{(r+s)/2} CP_A(sqrt z + 1/sqrt z):
/// writing CP_A(t)^2 = h(t^2), checks z^{r+s} h((z+1)^2 / z) == CP_KQ(z)^2.
inline bool eigen_correspondence_identity(const BipartiteGraph& g) {
    const IntPoly cp_a = char_poly(adjacency(g));
    const std::size_t n = g.vertex_count();
    // parity: a bipartite adjacency char poly has terms of one parity only
    const IntPoly squared = cp_a * cp_a;
    for (int k = 1; k <= squared.degree(); k += 2)
        if (squared.coeff(k) != 0)
            throw std::logic_error("eigen_correspondence: spectrum not symmetric about 0");
    // h(u): even-part coefficients of CP_A^2
    std::vector<BigInt> h;
    for (int k = 0; k <= squared.degree(); k += 2) h.push_back(squared.coeff(k));
    // LHS = sum_k h_k (z+1)^{2k} z^{n-k}
    IntPoly lhs;
    const IntPoly zp1_sq = IntPoly{1, 2, 1};
    IntPoly zp1_pow = IntPoly::constant(1);
    for (std::size_t k = 0; k < h.size(); ++k) {
        if (h[k] != 0) lhs = lhs + (zp1_pow * IntPoly::monomial(h[k], n - k));
        zp1_pow = zp1_pow * zp1_sq;
    }
    const IntPoly cp_kq = coxeter_polynomial(cartan_of_bipartite_path_algebra(g));
    return lhs == cp_kq * cp_kq;
}

/// Order of -Phi = C^T C^{-1} for a Cartan matrix with det C = 1.
inline OrderResult neg_coxeter_order(const IntMatrix& cartan, long bound = 1000) {
    if (det(cartan) != 1) throw std::domain_error("neg_coxeter_order: det C must be 1");
    const RatMatrix inv = inverse(cartan.cast<Rational>());
    const IntMatrix m = to_integer_matrix(cartan.transpose().cast<Rational>() * inv);
    return matrix_order(m, bound);
}

enum class ConditionStatus { Pass, Fail, Undecided };

inline std::string to_string(ConditionStatus s) {
    switch (s) {
        case ConditionStatus::Pass: return "pass";
        case ConditionStatus::Fail: return "fail";
        default: return "undecided";
    }
}

struct Condition {
    std::string name;
    ConditionStatus status;
    std::string witness;
};

/// Per-algebra outcome of the necessary-condition battery. The battery can
/// exclude an algebra; it never certifies 2-representation-finiteness.
struct ConditionVerdict {
    std::vector<Condition> conditions;

    bool excluded() const {
        for (const auto& c : conditions)
            if (c.status == ConditionStatus::Fail) return true;
        return false;
    }
    bool all_pass() const {
        for (const auto& c : conditions)
            if (c.status != ConditionStatus::Pass) return false;
        return true;
    }
    /// "excluded", "candidate" (all conditions pass) or "undecided".
    std::string overall() const {
        if (excluded()) return "excluded";
        return all_pass() ? "candidate" : "undecided";
    }
};

/// Aggregated exact invariants of a star algebra.
struct CoxeterReport {
    IntMatrix cartan;         // Cartan of Lambda itself (star order)
    IntMatrix neg_coxeter;    // -Phi_Lambda = C^T C^{-1} (integral: det C = 1)
    IntPoly coxeter_poly;     // CP_Lambda(t)
    bool cyclotomic;          // CP_Lambda a product of cyclotomics
    std::optional<Bidegree> degrees;
    std::optional<BigInt> p_value;  // Sigma1 Sigma2 + r + s - r Sigma1
    IntPoly w;                // w(t) for Sigma1 Sigma2 (when semi-regular)
    IntPoly p_factor;         // (t+1) q(t)
    IntPoly q_factor;
    OrderResult neg_phi_order = OrderResult::unknown(0);  // order of -Phi_Gamma
};

inline const long kOrderByP[5] = {-1, 6, 4, 3, 0};  // p=1,2,3 pinned; p=4 any finite

inline CoxeterReport coxeter_report(const StarAlgebra& lam, long order_bound = 1000) {
    CoxeterReport rep{IntMatrix(), IntMatrix(), IntPoly(), false, std::nullopt,
                      std::nullopt, IntPoly(), IntPoly(), IntPoly()};
    rep.cartan = cartan_of_star(lam);
    rep.neg_coxeter =
        to_integer_matrix(rep.cartan.transpose().cast<Rational>() * inverse(rep.cartan.cast<Rational>()));
    rep.coxeter_poly = coxeter_polynomial(rep.cartan);
    rep.cyclotomic = is_cyclotomic_product(rep.coxeter_poly);
    const BipartiteGraph b = b_lambda(lam);
    rep.degrees = bidegree(b);
    if (rep.degrees) {
        const long r = static_cast<long>(lam.r()), s = static_cast<long>(lam.s());
        const BigInt ss = BigInt(rep.degrees->sigma1) * rep.degrees->sigma2;
        rep.p_value = ss + r + s - r * rep.degrees->sigma1;
        rep.w = w_poly(ss);
        const PFactor pf = p_poly(Rational(rep.degrees->sigma1), Rational(rep.degrees->sigma2),
                                  BigInt(r), BigInt(s));
        rep.p_factor = pf.p;
        rep.q_factor = pf.q;
        rep.neg_phi_order = neg_coxeter_order(
            cartan_of_gamma(b, std::vector<BigInt>(lam.r(), 1), std::vector<BigInt>(lam.s(), 1)),
            order_bound);
    }
    return rep;
}

/// The necessary-condition battery, evaluated in order. A failing condition
/// excludes the algebra; "undecided" marks conditions whose prerequisites
/// failed or whose order search exhausted its bound.
inline ConditionVerdict condition_battery(const StarAlgebra& lam, long order_bound = 1000) {
    ConditionVerdict verdict;
    auto push = [&](std::string name, ConditionStatus st, std::string witness) {
        verdict.conditions.push_back({std::move(name), st, std::move(witness)});
    };
    auto as_status = [](bool ok) { return ok ? ConditionStatus::Pass : ConditionStatus::Fail; };

    const bool shape = is_2rf_shape(lam);
    push("shape", as_status(shape),
         shape ? "(1,1) special case or r,s >= 4 with 2 <= |Z| <= class size - 2"
               : "zero-set sizes violate the 2-RF bounds");

    const BipartiteGraph b = b_lambda(lam);
    const auto deg = bidegree(b);
    push("semi-regular", as_status(deg.has_value()),
         deg ? "bidegree (" + std::to_string(deg->sigma1) + "," + std::to_string(deg->sigma2) + ")"
             : "row or column degrees are not constant");

    std::optional<BigInt> p_value;
    if (deg) {
        const long r = static_cast<long>(lam.r()), s = static_cast<long>(lam.s());
        p_value = BigInt(deg->sigma1) * deg->sigma2 + r + s - BigInt(r) * deg->sigma1;
        const bool in_range = *p_value >= 1 && *p_value <= 4;
        push("p-in-range", as_status(in_range), "p = " + p_value->str());
        if (!in_range) p_value.reset();
    } else {
        push("p-in-range", ConditionStatus::Undecided, "requires semi-regularity");
    }

    const bool dup = has_duplicate_neighborhoods(b);
    push("distinct-neighborhoods", as_status(!dup),
         dup ? "two vertices share their neighbourhood" : "all neighbourhoods distinct");

    const IntPoly cp = coxeter_polynomial(cartan_of_star(lam));
    const bool cyc = is_cyclotomic_product(cp);
    push("cyclotomic-coxeter", as_status(cyc),
         cyc ? "CP factors into cyclotomic polynomials" : "CP = " + cp.str());

    if (p_value) {
        const OrderResult order = neg_coxeter_order(
            cartan_of_gamma(b, std::vector<BigInt>(lam.r(), 1), std::vector<BigInt>(lam.s(), 1)),
            order_bound);
        const long p = to_long(*p_value);
        ConditionStatus st;
        if (order.kind == OrderResult::Kind::Unknown) {
            st = ConditionStatus::Undecided;
        } else if (!order.is_finite()) {
            st = ConditionStatus::Fail;
        } else if (p <= 3) {
            st = as_status(order.value == kOrderByP[p]);
        } else {
            st = ConditionStatus::Pass;  // p = 4: any finite order
        }
        push("coxeter-order", st,
             "order(-Phi_Gamma) = " + order.str() + ", expected " +
                 (p <= 3 ? std::to_string(kOrderByP[p]) : std::string("finite")));
    } else {
        push("coxeter-order", ConditionStatus::Undecided, "requires p in {1,2,3,4}");
    }

    const bool refl = is_reflexive(b);
    push("reflexive", as_status(refl),
         refl ? "second largest adjacency eigenvalue <= 2" : "second largest eigenvalue > 2");

    return verdict;
}

}  // namespace starquiver
