#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "starquiver/bound_quiver.hpp"
#include "starquiver/catalog.hpp"
#include "starquiver/graph_canon.hpp"
#include "starquiver/quiver.hpp"
#include "starquiver/star_algebra.hpp"

using namespace starquiver;

namespace {

std::vector<std::string> balanced_fixture_names() {
    std::vector<std::string> out;
    for (const auto& e : catalog())
        if (is_balanced(e.algebra)) out.push_back(e.name);
    return out;
}

}  // namespace

TEST_CASE("compute_levels") {
    // star quiver: x at 2, z at 1, y at 0
    auto sq = star_quiver(3, 2);
    auto lm = compute_levels(sq);
    REQUIRE(lm.has_value());
    CHECK(lm->top == 2);
    CHECK(lm->level[sq.vertex_index("x1")] == 2);
    CHECK(lm->level[sq.vertex_index("z")] == 1);
    CHECK(lm->level[sq.vertex_index("y2")] == 0);

    // bipartite-oriented quiver: levels {1, 0}
    auto bq = b_quiver(named_star_algebra("c8"));
    auto bl = compute_levels(bq);
    REQUIRE(bl.has_value());
    CHECK(bl->top == 1);

    // a 2-cycle cannot be levelled
    Quiver cyc;
    cyc.add_vertex("u");
    cyc.add_vertex("v");
    cyc.add_arrow(0, 1, "f");
    cyc.add_arrow(1, 0, "g");
    CHECK_FALSE(compute_levels(cyc).has_value());

    Quiver disconnected;
    disconnected.add_vertex("u");
    disconnected.add_vertex("v");
    CHECK_THROWS_AS(compute_levels(disconnected), std::invalid_argument);
}

TEST_CASE("b_lambda") {
    CHECK(isomorphic(b_lambda(named_star_algebra("c8")), named_graph("c8")));
    // no relations: complete bipartite
    StarAlgebra full(2, 3);
    CHECK(b_lambda(full).edge_count() == 6);
    // the (1,1) algebra: two isolated vertices
    StarAlgebra a3(1, 1, {{1, 1}});
    CHECK(b_lambda(a3).edge_count() == 0);
    CHECK_THROWS_AS(StarAlgebra(2, 2, {{3, 1}}), std::invalid_argument);
}

TEST_CASE("zero sets") {
    auto c8 = named_star_algebra("c8");
    auto z = zero_sets(c8);
    for (const auto& zx : z.at_x) CHECK(zx.size() == 2);
    for (const auto& zy : z.at_y) CHECK(zy.size() == 2);

    StarAlgebra full(2, 3);
    auto zf = zero_sets(full);
    for (const auto& zx : zf.at_x) CHECK(zx.empty());

    auto hw = named_star_algebra("heawood");
    auto zh = zero_sets(hw);
    for (const auto& zx : zh.at_x) CHECK(zx.size() == 4);
}

TEST_CASE("balanced and 2-RF shape") {
    StarAlgebra a3(1, 1, {{1, 1}});
    CHECK_FALSE(is_balanced(a3));
    CHECK(is_2rf_shape(a3));

    CHECK(is_balanced(named_star_algebra("c8")));
    CHECK(is_2rf_shape(named_star_algebra("c8")));

    StarAlgebra no_rel(2, 3);
    CHECK_FALSE(is_balanced(no_rel));

    // (3,3) with balanced zero sets still fails the r,s >= 4 requirement
    StarAlgebra small(3, 3, {{1, 1}, {2, 2}, {3, 3}});
    CHECK(is_balanced(small));
    CHECK_FALSE(is_2rf_shape(small));

    for (const auto& e : catalog()) CHECK_MESSAGE(is_2rf_shape(e.algebra), e.name);
}

TEST_CASE("koszul dual") {
    auto hw = named_star_algebra("heawood");
    auto dual = koszul_dual_star(hw);
    // B of the dual is the transposed bipartite complement, exactly
    CHECK(b_lambda(dual) == bipartite_complement(b_lambda(hw)).transposed());
    // and is isomorphic to the heawood-complement fixture
    CHECK(isomorphic(b_lambda(dual).transposed(), named_graph("heawood-c")));
    // double dual has the same B graph
    CHECK(b_lambda(koszul_dual_star(dual)) == b_lambda(hw));

    auto g730 = named_star_algebra("g9p730");
    auto dual730 = koszul_dual_star(g730);
    CHECK(dual730.r() == 9);
    CHECK(dual730.s() == 6);
    CHECK(b_lambda(dual730).transposed() == named_graph("g9p730-c"));
}

TEST_CASE("one_point_extension_quiver") {
    auto bq = b_quiver(named_star_algebra("c8"));
    // top of the all-ones module sits on the sources y_j: 4 new arrows
    std::vector<int> topdims(8, 0);
    for (int j = 0; j < 4; ++j) topdims[4 + j] = 1;
    auto ext = one_point_extension_quiver(bq, topdims, "z");
    CHECK(ext.vertex_count() == 9);
    CHECK(ext.arrow_count() == bq.arrow_count() + 4);

    // zero dims: isolated new vertex
    auto iso = one_point_extension_quiver(bq, std::vector<int>(8, 0));
    CHECK(iso.arrow_count() == bq.arrow_count());

    // single vertex, topdim 2: double arrow
    Quiver pt;
    pt.add_vertex("v");
    auto dbl = one_point_extension_quiver(pt, {2});
    CHECK(dbl.arrow_count() == 2);
}

TEST_CASE("gamma_lambda structure") {
    auto g = gamma_lambda(named_star_algebra("c8"));
    CHECK(g.quiver().vertex_count() == 9);
    CHECK(g.quiver().arrow_count() == 12);  // 4 + 8
    CHECK(g.commutativity_relations().size() == 4);
    CHECK(g.monomial_relations().empty());

    auto h = gamma_lambda(named_star_algebra("heawood"));
    CHECK(h.quiver().vertex_count() == 15);
    CHECK(h.quiver().arrow_count() == 28);  // 7 + 21
    CHECK(h.commutativity_relations().size() == 21);  // 7 * C(3,2)

    CHECK_THROWS_AS(gamma_lambda(StarAlgebra(1, 1, {{1, 1}})), std::domain_error);
}

TEST_CASE("gamma_lambda levels: extension vertex alone on top") {
    for (const auto& name : balanced_fixture_names()) {
        auto g = gamma_lambda(named_star_algebra(name));
        auto lm = compute_levels(g.quiver());
        REQUIRE(lm.has_value());
        CHECK(lm->top == 2);
        CHECK(lm->level[g.quiver().vertex_index("z")] == 2);
        auto sizes = lm->level_sizes();
        // exactly one singleton level, and it is the extension vertex's
        int singletons = 0;
        for (int l = 0; l <= lm->top; ++l) singletons += sizes[l] == 1;
        CHECK(singletons == 1);
        CHECK(sizes[2] == 1);
    }
}

TEST_CASE("trivial_extension structure") {
    auto t = trivial_extension(named_star_algebra("c8"));
    CHECK(t.quiver().vertex_count() == 9);
    CHECK(t.quiver().arrow_count() == 16);  // 4 + 4 + 8
    CHECK(t.monomial_relations().size() == 8);
    // per j: C(Sigma2, 2), per i: C(Sigma1, 2); Sigma1 = Sigma2 = 2
    CHECK(t.commutativity_relations().size() == 4 + 4);

    auto th = trivial_extension(named_star_algebra("heawood"));
    CHECK(th.quiver().arrow_count() == 35);  // 7 + 7 + 21
    CHECK(th.commutativity_relations().size() == 7 * 3 + 7 * 3);  // C(3,2) = 3 each side

    CHECK_THROWS_AS(trivial_extension(StarAlgebra(2, 2)), std::domain_error);
}

TEST_CASE("every star arrow lies in a nonzero cycle of T(Lambda)") {
    for (const auto& name : balanced_fixture_names()) {
        auto lam = named_star_algebra(name);
        // for each i, some j with (i,j) not a relation; for each j, some i
        for (int i = 1; i <= static_cast<int>(lam.r()); ++i) {
            bool found = false;
            for (int j = 1; j <= static_cast<int>(lam.s()); ++j) found |= !lam.is_relation(i, j);
            CHECK(found);
        }
        for (int j = 1; j <= static_cast<int>(lam.s()); ++j) {
            bool found = false;
            for (int i = 1; i <= static_cast<int>(lam.r()); ++i) found |= !lam.is_relation(i, j);
            CHECK(found);
        }
    }
}

TEST_CASE("bounded_dimension: star algebras") {
    // dim = (r+s+1) + (r+s) + #nonzero length-2 paths
    auto c8 = named_star_algebra("c8");
    CHECK(bounded_dimension(star_bound_quiver_algebra(c8)) == 25);
    auto a3 = StarAlgebra(1, 1, {{1, 1}});
    CHECK(bounded_dimension(star_bound_quiver_algebra(a3)) == 5);
    for (const auto& e : catalog()) {
        const long nonrel =
            static_cast<long>(e.algebra.r() * e.algebra.s() - e.algebra.relations().size());
        const long expected = static_cast<long>(2 * (e.algebra.r() + e.algebra.s()) + 1 + nonrel);
        CHECK(bounded_dimension(star_bound_quiver_algebra(e.algebra)) == expected);
    }
}

TEST_CASE("bounded_dimension: trivial extension doubles the dimension") {
    for (const auto& name : balanced_fixture_names()) {
        auto lam = named_star_algebra(name);
        const long dim_lambda = bounded_dimension(star_bound_quiver_algebra(lam));
        CHECK(bounded_dimension(trivial_extension(lam)) == 2 * dim_lambda);
    }
}

TEST_CASE("bounded_dimension: gamma of C8") {
    // 9 vertices + 12 arrows + one independent length-2 path per x_i
    CHECK(bounded_dimension(gamma_lambda(named_star_algebra("c8"))) == 25);
}

TEST_CASE("loewy lengths of star projectives") {
    auto c8 = star_bound_quiver_algebra(named_star_algebra("c8"));
    // vertex order: x1..x4, z, y1..y4
    for (int i = 0; i < 4; ++i) CHECK(loewy_length_projective(c8, i) == 3);
    CHECK(loewy_length_projective(c8, 4) == 2);  // z
    for (int j = 5; j < 9; ++j) CHECK(loewy_length_projective(c8, j) == 1);

    CHECK_THROWS_AS(loewy_length_projective(gamma_lambda(named_star_algebra("c8")), 0),
                    std::domain_error);  // not monomial
}

TEST_CASE("loewy length bounded by level spread") {
    for (const auto& e : catalog()) {
        auto a = star_bound_quiver_algebra(e.algebra);
        auto lm = compute_levels(a.quiver());
        REQUIRE(lm.has_value());
        for (int v = 0; v < a.quiver().vertex_count(); ++v) {
            const int ll = loewy_length_projective(a, v);
            CHECK(ll <= lm->level[v] + 1);  // minlevel over the support is >= 0
        }
    }
}
