#include <catch2/catch_amalgamated.hpp>

#include "yflip/flip_graph.hpp"
#include "yflip/verify.hpp"

using namespace yflip;

TEST_CASE("graph shape: counts, regularity, connectivity") {
    for (int n = 1; n <= 8; ++n) CHECK(verify_flip_graph_shape(n));
    FlipGraph g4 = build_flip_graph(4);
    CHECK(g4.vertices.size() == 14);
    CHECK(g4.edges.size() == 21);
    FlipGraph g1 = build_flip_graph(1);
    CHECK(g1.vertices.size() == 1);
    CHECK(g1.edges.empty());
}

TEST_CASE("the pentagon") {
    FlipGraph g = build_flip_graph(3);
    CHECK(g.vertices.size() == 5);
    CHECK(g.edges.size() == 5);
    // cross-check edges against triangulation flips of the pentagon
    for (const auto& t : enumerate_triangulations(5))
        for (const auto& d : t.diagonals)
            CHECK(g.has_edge(lambda_map(t), lambda_map(flip_diagonal(t, d))));
}

TEST_CASE("flip graph matches the triangulation flip graph") {
    for (int n = 2; n <= 6; ++n) {
        FlipGraph g = build_flip_graph(n);
        std::set<std::pair<Partition, Partition>> via_tri;
        for (const auto& t : enumerate_triangulations(n + 2))
            for (const auto& d : t.diagonals) {
                Partition p = lambda_map(t), q = lambda_map(flip_diagonal(t, d));
                via_tri.insert(p < q ? std::make_pair(p, q) : std::make_pair(q, p));
            }
        CHECK(via_tri == g.edges);
    }
}

TEST_CASE("filtration: Y_n sits inside Y_{n+1} with the same edges") {
    for (int n = 1; n <= 8; ++n) CHECK(embedding_check(n));
}

TEST_CASE("face counts") {
    CHECK(count_faces(2, 0) == 5);
    CHECK(count_faces(2, 1) == 5);
    CHECK(count_faces(2, 2) == 1);
    CHECK(verify_faces_small());
    CHECK_THROWS_AS(count_faces(3, 5), std::invalid_argument);
}

TEST_CASE("transposition breaks some flip edge") {
    CHECK(transpose_edge_defect(2).empty());
    CHECK(verify_transpose_defect());
    bool nonempty = false;
    for (int n = 1; n <= 7; ++n)
        if (!transpose_edge_defect(n).empty()) {
            nonempty = true;
            break;
        }
    CHECK(nonempty);
}

TEST_CASE("exports are deterministic and parse back") {
    FlipGraph g = build_flip_graph(3);
    std::string el = export_graph(g, GraphFormat::edge_list);
    CHECK(el == export_graph(g, GraphFormat::edge_list));
    CHECK(std::count(el.begin(), el.end(), '\n') == 6);  // header + 5 edges
    CHECK(el.find("-- ") != std::string::npos);
    std::string dj = export_graph(g, GraphFormat::adjacency_json);
    FlipGraph back = parse_adjacency_json(dj);
    CHECK(back.n == g.n);
    CHECK(back.vertices == g.vertices);
    CHECK(back.edges == g.edges);
    CHECK_THROWS_AS(parse_format("csv"), std::invalid_argument);
    std::string dot = export_graph(g, GraphFormat::dot_like);
    CHECK(dot.rfind("graph", 0) == 0);
    // edge-list of the single-vertex graph: header only
    std::string trivial = export_graph(build_flip_graph(1), GraphFormat::edge_list);
    CHECK(std::count(trivial.begin(), trivial.end(), '\n') == 1);
}
