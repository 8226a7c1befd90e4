#include <catch2/catch_amalgamated.hpp>

#include "yflip/repcc.hpp"
#include "yflip/verify.hpp"

using namespace yflip;

TEST_CASE("positive roots are interval vectors") {
    auto r2 = positive_roots_An(2);
    CHECK(std::set<std::vector<int>>(r2.begin(), r2.end()) ==
          std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}});
    CHECK(positive_roots_An(3).size() == 6);
    CHECK(positive_roots_An(1) == std::vector<std::vector<int>>{{1}});
}

TEST_CASE("interval modules") {
    IntervalModule V(quiver_An(3), 2, 3);
    CHECK(V.dim_vector() == std::vector<int>{0, 1, 1});
    CHECK_THROWS_AS(IntervalModule(quiver_An(3), 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(IntervalModule(quiver_An(3), 1, 4), std::invalid_argument);
}

TEST_CASE("subrepresentation test") {
    IntervalModule V(quiver_An(2), 1, 2);
    CHECK(grassmannian_chi(V, {1, 0}) == 0);  // identity map forces e_2 >= e_1
    CHECK(grassmannian_chi(V, {0, 1}) == 1);
    CHECK(grassmannian_chi(V, {0, 0}) == 1);
    CHECK(grassmannian_chi(V, {1, 1}) == 1);
    CHECK_THROWS_AS(grassmannian_chi(V, {2, 0}), std::invalid_argument);
    // reversed orientation flips the closure condition
    Quiver rev(2, 2);
    rev.add_arrow(2, 1);
    IntervalModule W(rev, 1, 2);
    CHECK(grassmannian_chi(W, {1, 0}) == 1);
    CHECK(grassmannian_chi(W, {0, 1}) == 0);
}

TEST_CASE("cluster character, pinned values") {
    Laurent x1 = Laurent::x(1), x2 = Laurent::x(2);
    CHECK(cc_map(IntervalModule(quiver_An(2), 1, 2)) ==
          div_exact(Laurent(1) + x1 + x2, x1 * x2));
    CHECK(cc_map(IntervalModule(quiver_An(2), 2, 2)) == div_exact(Laurent(1) + x1, x2));
    CHECK(cc_map(IntervalModule(quiver_An(1), 1, 1)) == div_exact(Laurent(2), x1));
    // a middle simple module picks up both neighbors
    CHECK(cc_map(IntervalModule(quiver_An(3), 2, 2)) ==
          div_exact(x1 + Laurent::x(3), x2));
}

TEST_CASE("denominator vectors") {
    Laurent v = div_exact(Laurent(1) + Laurent::x(1) + Laurent::x(2),
                          Laurent::x(1) * Laurent::x(2));
    CHECK(denominator_vector(v, 2) == std::vector<int>{1, 1});
    CHECK(denominator_vector(Laurent::x(3), 3) == std::vector<int>{0, 0, 0});
    CHECK(denominator_vector(div_exact(Laurent(1) + Laurent::x(1), Laurent::x(2)), 2) ==
          std::vector<int>{0, 1});
}

TEST_CASE("character denominators and positivity") {
    for (int n = 1; n <= 4; ++n) {
        Quiver q = quiver_An(n);
        for (int lo = 1; lo <= n; ++lo)
            for (int hi = lo; hi <= n; ++hi) {
                IntervalModule V(q, lo, hi);
                Laurent val = cc_map(V);
                CHECK(val.all_coefficients_positive());
                CHECK(denominator_vector(val, n) == V.dim_vector());
            }
    }
}

TEST_CASE("characters equal closure variables") {
    for (int n = 1; n <= 4; ++n) CHECK(verify_cc_theorem(n));
}

TEST_CASE("characters are stable under ambient extension") {
    for (int n = 1; n < 6; ++n)
        for (int N = n + 1; N <= 6; ++N) CHECK(infinite_extension_check(n, N));
    CHECK(verify_cc_stability());
}
