#include <catch2/catch_amalgamated.hpp>

#include "yflip/triangulation.hpp"
#include "yflip/verify.hpp"

using namespace yflip;

namespace {
Triangulation octagon_example() {
    return Triangulation::parse("8; (4,6),(2,4),(2,6),(0,2),(0,6)");
}
}  // namespace

TEST_CASE("crossing predicate") {
    CHECK(diagonals_cross(Diagonal(0, 2), Diagonal(1, 3)));
    CHECK_FALSE(diagonals_cross(Diagonal(0, 2), Diagonal(2, 4)));
    CHECK_FALSE(diagonals_cross(Diagonal(0, 5), Diagonal(1, 3)));
}

TEST_CASE("validation") {
    CHECK(validate(octagon_example()));
    CHECK(validate(Triangulation{4, {Diagonal(0, 2)}}));
    CHECK_FALSE(validate(Triangulation{5, {Diagonal(0, 2), Diagonal(1, 3)}}));
    CHECK_FALSE(validate(Triangulation{5, {Diagonal(0, 2)}}));  // wrong count
    CHECK_FALSE(validate(Triangulation{4, {Diagonal(0, 3)}}));  // closing side
}

TEST_CASE("tails read off the diagram, pinned example") {
    CHECK(lambda_map(octagon_example()) == Partition{4, 2, 2});
    CHECK(lambda_map(Triangulation{4, {Diagonal(0, 2)}}) == Partition{});
    CHECK(lambda_map(Triangulation{4, {Diagonal(1, 3)}}) == Partition{1});
}

TEST_CASE("inverse construction, pinned example") {
    CHECK(lambda_inverse(Partition{4, 2, 2}, 8) == octagon_example());
    CHECK(lambda_inverse(Partition{}, 4) == Triangulation{4, {Diagonal(0, 2)}});
    CHECK_THROWS_AS(lambda_inverse(Partition{4}, 5), std::invalid_argument);
}

TEST_CASE("round trips over all of Y_5") {
    for (const auto& p : enumerate_fitting(5)) {
        Triangulation t = lambda_inverse(p, 7);
        CHECK(validate(t));
        CHECK(lambda_map(t) == p);
    }
    for (const auto& t : enumerate_triangulations(7))
        CHECK(lambda_inverse(lambda_map(t), 7) == t);
}

TEST_CASE("diagonal numbering order") {
    auto ordered = diag_order(octagon_example());
    CHECK(ordered == std::vector<Diagonal>{Diagonal(4, 6), Diagonal(2, 4), Diagonal(2, 6),
                                           Diagonal(0, 2), Diagonal(0, 6)});
    for (const auto& t : enumerate_triangulations(8)) {
        auto seq = diag_order(t);
        std::vector<int> tails;
        for (const auto& d : seq) tails.push_back(d.tail);
        CHECK(Partition(tails) == lambda_map(t));
        CHECK(std::is_sorted(tails.rbegin(), tails.rend()));
    }
}

TEST_CASE("diagonal heads match the formula") {
    for (int n = 2; n <= 6; ++n) CHECK(verify_heads(n));
}

TEST_CASE("flips of diagonals") {
    CHECK(flip_diagonal(Triangulation{4, {Diagonal(0, 2)}}, Diagonal(0, 2)) ==
          Triangulation{4, {Diagonal(1, 3)}});
    CHECK_THROWS_AS(flip_diagonal(octagon_example(), Diagonal(1, 3)), std::invalid_argument);
    for (const auto& t : enumerate_triangulations(7))
        for (const auto& d : t.diagonals) {
            Triangulation f = flip_diagonal(t, d);
            CHECK(validate(f));
            Diagonal repl = *f.diagonals.begin();
            for (const auto& e : f.diagonals)
                if (!t.diagonals.count(e)) repl = e;
            CHECK(flip_diagonal(f, repl) == t);
        }
}

TEST_CASE("flip conjugation under the bijection") {
    for (int n = 2; n <= 6; ++n) CHECK(verify_flip_conjugation(n));
}

TEST_CASE("relabeling symmetries") {
    for (const auto& t : enumerate_triangulations(7)) {
        Triangulation r = t;
        for (int i = 0; i < 7; ++i) r = rotate(r);
        CHECK(r == t);
        CHECK(reflect(reflect(t)) == t);
        CHECK(validate(rotate(t)));
        CHECK(validate(reflect(t)));
    }
}

TEST_CASE("the bijection intertwines the dihedral actions") {
    CHECK(verify_equivariance(8));
    for (int N = 4; N <= 7; ++N) CHECK(verify_equivariance(N));
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_triangulations(4).size() == 2);
    CHECK(enumerate_triangulations(5).size() == 5);
    CHECK(enumerate_triangulations(8).size() == 132);
    CHECK_THROWS_AS(enumerate_triangulations(13), std::invalid_argument);
}

TEST_CASE("textual form round trip") {
    Triangulation t = octagon_example();
    CHECK(t.to_string() == "8; (4,6),(2,4),(2,6),(0,2),(0,6)");
    CHECK(Triangulation::parse(t.to_string()) == t);
    CHECK(Triangulation::parse("8; (0,2),(0,6),(2,4),(2,6),(4,6)") == t);  // unordered input
}
