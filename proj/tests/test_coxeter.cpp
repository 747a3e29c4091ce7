#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "starquiver/catalog.hpp"
#include "starquiver/coxeter.hpp"

#include <map>
#include <random>

using namespace starquiver;

namespace {

std::vector<BigInt> ones(std::size_t n) { return std::vector<BigInt>(n, BigInt(1)); }

BipartiteGraph random_connected_bipartite(std::mt19937& rng, std::size_t r, std::size_t s) {
    std::uniform_int_distribution<int> coin(0, 2);
    for (;;) {
        BipartiteGraph g(r, s);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < s; ++j) g.set_multiplicity(i, j, coin(rng) == 0);
        if (g.edge_count() > 0 && is_connected(g)) return g;
    }
}

}  // namespace

TEST_CASE("cartan_of_bipartite_path_algebra") {
    BipartiteGraph single(1, 1);
    single.set_multiplicity(0, 0, 1);
    CHECK(cartan_of_bipartite_path_algebra(single) == IntMatrix{{1, 1}, {0, 1}});

    BipartiteGraph empty(2, 2);
    CHECK(cartan_of_bipartite_path_algebra(empty) == IntMatrix::identity(4));

    auto c = cartan_of_bipartite_path_algebra(named_graph("heawood"));
    CHECK(c.rows() == 14);
    CHECK(det(c) == 1);
}

TEST_CASE("cartan_of_gamma") {
    auto c8 = named_graph("c8");
    auto c = cartan_of_gamma(c8, ones(4), ones(4));
    CHECK(c.rows() == 9);
    CHECK(det(c) == 1);
    for (std::size_t j = 1; j < 9; ++j) CHECK(c(0, j) == 1);

    auto zero = cartan_of_gamma(c8, std::vector<BigInt>(4, BigInt(0)),
                                std::vector<BigInt>(4, BigInt(0)));
    for (std::size_t j = 1; j < 9; ++j) CHECK(zero(0, j) == 0);
    CHECK(det(zero) == 1);

    CHECK_THROWS_AS(cartan_of_gamma(c8, ones(3), ones(4)), std::invalid_argument);
}

TEST_CASE("cartan_of_star") {
    StarAlgebra a3(1, 1, {{1, 1}});
    CHECK(cartan_of_star(a3) == IntMatrix{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});

    StarAlgebra full(2, 2);
    auto c = cartan_of_star(full);
    CHECK(c == IntMatrix{{1, 0, 1, 1, 1}, {0, 1, 1, 1, 1}, {0, 0, 1, 1, 1},
                         {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});

    // path-count cross-check on the c8 fixture
    auto c8 = named_star_algebra("c8");
    CHECK(cartan_of_star(c8) == cartan_from_paths(star_bound_quiver_algebra(c8)));
}

TEST_CASE("coxeter_polynomial basics") {
    CHECK(coxeter_polynomial(IntMatrix::identity(2)) == IntPoly{1, 2, 1});
    CHECK(coxeter_polynomial(IntMatrix{{1, 1}, {0, 1}}) == IntPoly{1, 1, 1});
    CHECK_THROWS_AS(coxeter_polynomial(IntMatrix{{2}}), std::domain_error);
    // self-reciprocal on every fixture, for all three Cartans
    for (const auto& e : catalog()) {
        const auto b = b_lambda(e.algebra);
        CHECK(coxeter_polynomial(cartan_of_star(e.algebra)).is_self_reciprocal());
        CHECK(coxeter_polynomial(cartan_of_bipartite_path_algebra(b)).is_self_reciprocal());
        CHECK(coxeter_polynomial(cartan_of_gamma(b, ones(b.r()), ones(b.s())))
                  .is_self_reciprocal());
    }
}

TEST_CASE("star and gamma Cartans share one Coxeter polynomial") {
    // Lambda and Gamma_Lambda are derived equivalent
    for (const auto& e : catalog()) {
        const auto b = b_lambda(e.algebra);
        CHECK(coxeter_polynomial(cartan_of_star(e.algebra)) ==
              coxeter_polynomial(cartan_of_gamma(b, ones(b.r()), ones(b.s()))));
    }
}

TEST_CASE("gamma Cartan from the block formula equals the path count") {
    // the path algebra of Gamma orders vertices z, y_1..y_s, x_1..x_r, which
    // is the block formula on the transposed graph with swapped weights
    for (const auto& e : catalog()) {
        if (!is_balanced(e.algebra)) continue;
        const auto b = b_lambda(e.algebra);
        const auto block = cartan_of_gamma(b.transposed(), ones(b.s()), ones(b.r()));
        CHECK(cartan_from_paths(gamma_lambda(e.algebra)) == block);
    }
}

TEST_CASE("w_poly") {
    CHECK(w_poly(4) == IntPoly{1, -2, 1});
    CHECK(w_poly(9) == IntPoly{1, -7, 1});
    CHECK(w_poly(0) == IntPoly{1, 2, 1});
    CHECK_THROWS_AS(w_poly(-1), std::domain_error);
    // w(-1) = Sigma1 Sigma2
    for (int n = 0; n <= 12; ++n) CHECK(w_poly(n).eval(BigInt(-1)) == n);
}

TEST_CASE("p_poly") {
    // C8 parameters
    auto pf = p_poly(Rational(2), Rational(2), 4, 4);
    CHECK(pf.q == IntPoly{1, -2, 1});
    CHECK(pf.p == IntPoly{1, 1} * IntPoly{1, -2, 1});
    // Heawood parameters: q = t^2 + 1
    CHECK(p_poly(Rational(3), Rational(3), 7, 7).q == IntPoly{1, 0, 1});
    // G-9P730 parameters: q = t^2 - t + 1
    CHECK(p_poly(Rational(3), Rational(2), 6, 9).q == IntPoly{1, -1, 1});
    CHECK_THROWS_AS(p_poly(Rational(3), Rational(2), 6, 8), std::domain_error);
}

TEST_CASE("q factor is one of the five unit-circle quadratics") {
    const std::vector<IntPoly> allowed = {IntPoly{1, 0, 1}, IntPoly{1, 1, 1}, IntPoly{1, -1, 1},
                                          IntPoly{1, 2, 1}, IntPoly{1, -2, 1}};
    for (const auto& e : catalog()) {
        auto rep = coxeter_report(e.algebra);
        REQUIRE(rep.degrees.has_value());
        bool ok = false;
        for (const auto& a : allowed) ok = ok || rep.q_factor == a;
        CHECK_MESSAGE(ok, e.name);
    }
}

TEST_CASE("f_plus_minus") {
    auto [p2, m2] = f_plus_minus(Rational(2));
    CHECK(p2 == QuadraticSurd::rational(Rational(1)));
    CHECK(m2 == QuadraticSurd::rational(Rational(1)));

    auto [p9, m9] = f_plus_minus_squared(9);
    CHECK(p9 == QuadraticSurd::make(Rational(7, 2), Rational(1, 2), 45));
    CHECK(p9.d == 5);
    CHECK(p9.b == Rational(3, 2));
    // product is always 1
    for (int n = 5; n <= 12; ++n) {
        auto [fp, fm] = f_plus_minus_squared(n);
        CHECK(fp * fm == QuadraticSurd::rational(Rational(1)));
    }
    CHECK_THROWS_AS(f_plus_minus_squared(3), std::domain_error);
}

TEST_CASE("verify_factorization on the catalog") {
    for (const auto& e : catalog()) {
        const auto b = b_lambda(e.algebra);
        CHECK_MESSAGE(verify_factorization(b, ones(b.r()), ones(b.s())), e.name);
    }
}

TEST_CASE("verify_factorization: single edge by hand") {
    BipartiteGraph single(1, 1);
    single.set_multiplicity(0, 0, 1);
    // w = t^2+t+1, CP_KQ = t^2+t+1, p = (t+1)(t^2+1); CP_Gamma = t^3+t^2+t+1
    CHECK(w_poly(1) == IntPoly{1, 1, 1});
    CHECK(coxeter_polynomial(cartan_of_bipartite_path_algebra(single)) == IntPoly{1, 1, 1});
    CHECK(coxeter_polynomial(cartan_of_gamma(single, ones(1), ones(1))) == IntPoly{1, 1, 1, 1});
    CHECK(verify_factorization(single, ones(1), ones(1)));

    // complete bipartite K_{2,2}
    BipartiteGraph k22(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) k22.set_multiplicity(i, j, 1);
    CHECK(verify_factorization(k22, ones(2), ones(2)));

    // non-bi-eigenvector input is a precondition error
    BipartiteGraph path(2, 2);
    path.set_multiplicity(0, 0, 1);
    path.set_multiplicity(1, 0, 1);
    path.set_multiplicity(1, 1, 1);
    CHECK_THROWS_AS(verify_factorization(path, ones(2), ones(2)), std::domain_error);
}

TEST_CASE("factorization holds on random semi-regular graphs") {
    // greedy biregular fill randomized by degree-preserving 2x2 switches
    std::mt19937 rng(2024);
    const std::vector<std::array<long, 4>> shapes = {
        {2, 1, 2, 1}, {3, 2, 3, 2}, {4, 2, 4, 2}, {4, 3, 6, 2},
        {6, 2, 4, 3}, {5, 3, 5, 3}, {6, 3, 6, 3}, {6, 2, 3, 4}};
    for (int done = 0; done < 40; ++done) {
        const auto [r, s1, s, s2] = shapes[done % shapes.size()];
        BipartiteGraph g(r, s);
        std::vector<long> cap(s, s2);
        for (long i = 0; i < r; ++i) {
            std::vector<std::size_t> order(s);
            for (std::size_t j = 0; j < static_cast<std::size_t>(s); ++j) order[j] = j;
            std::sort(order.begin(), order.end(), [&](auto a, auto b) { return cap[a] > cap[b]; });
            for (long t = 0; t < s1; ++t) {
                g.set_multiplicity(i, order[t], 1);
                --cap[order[t]];
            }
        }
        std::uniform_int_distribution<std::size_t> ri(0, r - 1), rj(0, s - 1);
        for (int sw = 0; sw < 300; ++sw) {
            auto i1 = ri(rng), i2 = ri(rng), j1 = rj(rng), j2 = rj(rng);
            if (g.multiplicity(i1, j1) && g.multiplicity(i2, j2) && !g.multiplicity(i1, j2) &&
                !g.multiplicity(i2, j1)) {
                g.set_multiplicity(i1, j1, 0);
                g.set_multiplicity(i2, j2, 0);
                g.set_multiplicity(i1, j2, 1);
                g.set_multiplicity(i2, j1, 1);
            }
        }
        const auto deg = bidegree(g);
        REQUIRE(deg.has_value());
        CHECK(verify_factorization(g, ones(r), ones(s)));
        // w divides CP_KQ
        const auto cp_kq = coxeter_polynomial(cartan_of_bipartite_path_algebra(g));
        CHECK(divide_exact(cp_kq, w_poly(BigInt(deg->sigma1) * deg->sigma2)).has_value());
    }
}

TEST_CASE("eigen_correspondence_identity") {
    BipartiteGraph single(1, 1);
    single.set_multiplicity(0, 0, 1);
    CHECK(eigen_correspondence_identity(single));
    for (const auto& e : catalog())
        CHECK_MESSAGE(eigen_correspondence_identity(b_lambda(e.algebra)), e.name);

    std::mt19937 rng(17);
    for (int it = 0; it < 30; ++it) {
        const std::size_t r = 1 + it % 5, s = 1 + (it / 5) % 5;
        CHECK(eigen_correspondence_identity(random_connected_bipartite(rng, r, s)));
    }
}

TEST_CASE("neg_coxeter_order: the order table on the catalog") {
    const std::map<std::string, long> expected = {
        {"p2-complement", 4}, {"c8", 4},       {"heawood", 4},  {"heawood-c", 4},
        {"g9p730", 3},        {"g9p730-c", 3}, {"g9p731", 3},   {"g9p731-c", 3},
        {"mobius-kantor", 6}};
    for (const auto& e : catalog()) {
        const auto b = b_lambda(e.algebra);
        const auto order =
            neg_coxeter_order(cartan_of_gamma(b, ones(b.r()), ones(b.s())), 1000);
        REQUIRE_MESSAGE(order.is_finite(), e.name);
        CHECK_MESSAGE(order.value == expected.at(e.name), e.name);
    }
    CHECK_THROWS_AS(neg_coxeter_order(IntMatrix{{2, 0}, {0, 1}}), std::domain_error);
}

TEST_CASE("condition battery: all nine fixtures pass every condition") {
    for (const auto& e : catalog()) {
        const auto verdict = condition_battery(e.algebra);
        CHECK_MESSAGE(verdict.all_pass(), e.name);
        CHECK(verdict.overall() == "candidate");
    }
}

TEST_CASE("condition battery: duplicated neighbourhood excludes") {
    // rows 1 and 2 share their neighbourhood, rows 3 and 4 likewise
    StarAlgebra lam(4, 4, {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 3}, {3, 4}, {4, 3}, {4, 4}});
    const auto verdict = condition_battery(lam);
    CHECK(verdict.excluded());
    bool dup_failed = false;
    for (const auto& c : verdict.conditions)
        if (c.name == "distinct-neighborhoods") dup_failed = c.status == ConditionStatus::Fail;
    CHECK(dup_failed);
}

TEST_CASE("condition battery: koszul duality gives identical verdicts") {
    // the complement pairing only holds for balanced algebras; the dual of
    // the (1,1) fixture is the hereditary star algebra, which the shape
    // filter rejects
    for (const auto& e : catalog()) {
        if (!is_balanced(e.algebra)) {
            CHECK(condition_battery(koszul_dual_star(e.algebra)).excluded());
            continue;
        }
        const auto direct = condition_battery(e.algebra);
        const auto dual = condition_battery(koszul_dual_star(e.algebra));
        CHECK_MESSAGE(direct.overall() == dual.overall(), e.name);
    }
}

TEST_CASE("condition battery: C10 star algebra stays undecided") {
    // (5,2,5,2): passes shape and spectral filters; the order search cannot
    // resolve the non-diagonalizable Coxeter matrix and reports unknown
    std::set<std::pair<int, int>> rels;
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j)
            if (j != i && j != (i % 5) + 1) rels.insert({i, j});
    StarAlgebra c10(5, 5, rels);
    REQUIRE(bidegree(b_lambda(c10)).has_value());
    const auto verdict = condition_battery(c10, 200);
    CHECK_FALSE(verdict.excluded());
    CHECK(verdict.overall() == "undecided");
}
