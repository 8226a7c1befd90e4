#include <catch2/catch_amalgamated.hpp>

#include "yflip/laurent.hpp"
#include "yflip/verify.hpp"

using namespace yflip;

TEST_CASE("arithmetic basics") {
    Laurent x1 = Laurent::x(1), x2 = Laurent::x(2);
    CHECK(Laurent::x(1) * Laurent::x(1, -1) == Laurent(1));
    CHECK(x1 + Laurent() == x1);
    CHECK((Laurent(1) + x2) * (Laurent(1) + x1) ==
          Laurent(1) + x1 + x2 + x1 * x2);
    CHECK((x1 - x1).is_zero());
    CHECK(x1 * x2 == x2 * x1);
}

TEST_CASE("exact division") {
    Laurent x1 = Laurent::x(1), x2 = Laurent::x(2);
    CHECK(div_exact(Laurent(1) + x1 + x2 + x1 * x2, Laurent(1) + x1) == Laurent(1) + x2);
    CHECK(div_exact(x1 + x2, x1) == Laurent(1) + Laurent::x(1, -1) * x2);
    CHECK_THROWS_AS(div_exact(Laurent(1) + x1, Laurent(1) + x2), NotDivisible);
    CHECK_THROWS_AS(div_exact(x1, Laurent()), std::invalid_argument);
    CHECK(div_exact(Laurent(), x1).is_zero());
    // mixed coefficient symbols
    Laurent c3 = Laurent::c(3);
    CHECK(div_exact((x1 + c3) * (x2 + c3), x2 + c3) == x1 + c3);
}

TEST_CASE("evaluation") {
    Laurent p = Laurent::x(1) + Laurent::x(2);
    std::map<int, BigRational> pt{{var_x(1), BigRational(1)}, {var_x(2), BigRational(1)}};
    CHECK(p.eval(pt) == 2);
    CHECK(Laurent::x(1, -1).eval({{var_x(1), BigRational(2)}}) == BigRational(1, 2));
    CHECK_THROWS_AS(Laurent::x(1, -1).eval({{var_x(1), BigRational(0)}}), std::domain_error);
}

TEST_CASE("randomized ring laws, canonicality, parser round trip") {
    CHECK(verify_laurent_ring());
}

TEST_CASE("textual form") {
    CHECK(Laurent().to_string() == "0");
    CHECK(Laurent(-3).to_string() == "-3");
    CHECK((Laurent::x(1) * Laurent::x(2, -1) + Laurent(2)).to_string() == "x1*x2^-1 + 2");
    CHECK(Laurent::parse("x1*x2^-1 + 2") == Laurent::x(1) * Laurent::x(2, -1) + Laurent(2));
    CHECK(Laurent::parse("1 + x2") == Laurent(1) + Laurent::x(2));
    CHECK(Laurent::parse("-x1 + c2^3") ==
          Laurent(-1) * Laurent::x(1) + Laurent::c(2) * Laurent::c(2) * Laurent::c(2));
    CHECK_THROWS_AS(Laurent::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Laurent::parse(""), std::invalid_argument);
}

TEST_CASE("variable index space keeps x and c apart") {
    CHECK(var_x(3) != var_c(3));
    CHECK(var_name(var_x(3)) == "x3");
    CHECK(var_name(var_c(3)) == "c3");
    CHECK(is_var_x(var_x(7)));
    CHECK_FALSE(is_var_x(var_c(7)));
    CHECK(var_index(var_x(7)) == 7);
    CHECK(var_index(var_c(7)) == 7);
}

TEST_CASE("min exponents and positivity") {
    Laurent p = Laurent::x(1, -2) * Laurent::x(2) + Laurent::x(2, 3);
    auto mins = p.min_exponents();
    CHECK(mins[var_x(1)] == -2);
    CHECK(mins[var_x(2)] == 1);
    CHECK(p.all_coefficients_positive());
    CHECK_FALSE((p - Laurent::x(3)).all_coefficients_positive());
}
