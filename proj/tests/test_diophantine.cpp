#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "starquiver/diophantine.hpp"

using namespace starquiver;

TEST_CASE("is_solution") {
    CHECK(is_solution(2, 1, 1, 1, 1));
    CHECK(is_solution(3, 6, 3, 6, 3));
    CHECK_FALSE(is_solution(2, 1, 1, 1, 2));  // ak != bl
    CHECK_FALSE(is_solution(5, 1, 1, 1, 1));
    CHECK_FALSE(is_solution(2, 0, 1, 1, 1));
}

TEST_CASE("dual") {
    CHECK(dual({3, 1, 2, 2, 1}) == Solution{3, 2, 1, 1, 2});
    CHECK(dual({4, 2, 2, 2, 2}) == Solution{4, 2, 2, 2, 2});  // self-dual
    const Solution s{1, 6, 5, 10, 3};
    CHECK(dual(dual(s)) == s);
    CHECK(is_solution(dual(s).p, dual(s).a, dual(s).k, dual(s).b, dual(s).l));
}

TEST_CASE("closed form: pinned members") {
    auto sols = closed_form_solutions(10);
    // S1 entirely
    for (const Solution s : {Solution{2, 1, 1, 1, 1}, Solution{3, 1, 2, 2, 1},
                             Solution{4, 1, 2, 1, 2}, Solution{4, 1, 3, 3, 1},
                             Solution{4, 2, 2, 2, 2}})
        CHECK(sols.count(s) == 1);
    CHECK(sols.count({0, 9, 3, 9, 3}) == 1);
    CHECK(sols.count({1, 8, 5, 8, 5}) == 1);
    // family members: (4,4,x,2x,2) at x = 7 and its dual
    CHECK(sols.count({4, 4, 7, 14, 2}) == 1);
    CHECK(sols.count({4, 14, 2, 4, 7}) == 1);
    CHECK_THROWS_AS(closed_form_solutions(0), std::invalid_argument);
}

TEST_CASE("closed form is dual-closed and every member solves the system") {
    for (const auto& s : closed_form_solutions(25)) {
        CHECK(is_solution(s.p, s.a, s.k, s.b, s.l));
        CHECK(closed_form_solutions(25).count(dual(s)) == 1);
    }
}

TEST_CASE("brute force") {
    auto small = brute_force_solutions(1);
    REQUIRE(small.size() == 1);
    CHECK(*small.begin() == Solution{2, 1, 1, 1, 1});
    auto s4 = brute_force_solutions(4);
    for (const Solution s : {Solution{2, 1, 1, 1, 1}, Solution{3, 1, 2, 2, 1},
                             Solution{4, 1, 2, 1, 2}, Solution{4, 1, 3, 3, 1},
                             Solution{4, 2, 2, 2, 2}})
        CHECK(s4.count(s) == 1);
    for (const auto& s : s4) CHECK(is_solution(s.p, s.a, s.k, s.b, s.l));
    CHECK_THROWS_AS(brute_force_solutions(0), std::invalid_argument);
}

TEST_CASE("closed form equals brute force up to 40") {
    const long bound = 40;
    auto brute = brute_force_solutions(bound);
    std::set<Solution> closed;
    for (const auto& s : closed_form_solutions(bound))
        if (s.a <= bound && s.k <= bound && s.b <= bound && s.l <= bound) closed.insert(s);
    CHECK(brute == closed);
}

TEST_CASE("solutions_for_star") {
    auto p2 = solutions_for_star(2);
    CHECK(p2.count({1, 1, 1, 1}) == 1);
    CHECK(p2.count({7, 3, 7, 3}) == 1);
    CHECK(p2.count({7, 4, 7, 4}) == 1);

    auto p3 = solutions_for_star(3);
    CHECK(p3.count({5, 4, 10, 2}) == 1);
    CHECK(p3.count({6, 3, 9, 2}) == 1);
    // the shape bounds remove (2,1,2,1) and friends
    CHECK(p3.count({2, 1, 2, 1}) == 0);

    auto p4 = solutions_for_star(4);
    REQUIRE(p4.size() == 1);
    CHECK(*p4.begin() == StarParameters{4, 2, 4, 2});

    auto p1 = solutions_for_star(1);
    CHECK(p1.count({8, 3, 8, 3}) == 1);
    CHECK(p1.count({8, 5, 8, 5}) == 1);

    CHECK_THROWS_AS(solutions_for_star(0), std::invalid_argument);
    CHECK_THROWS_AS(solutions_for_star(5), std::invalid_argument);
}

TEST_CASE("star translation satisfies r Sigma1 = s Sigma2") {
    for (int p = 1; p <= 4; ++p)
        for (const auto& sp : solutions_for_star(p)) {
            CHECK(sp.r * sp.sigma1 == sp.s * sp.sigma2);
            CHECK(is_solution(p, sp.r, sp.sigma1, sp.s, sp.sigma2));
        }
}
