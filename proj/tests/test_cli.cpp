#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "yflip/cli.hpp"

using namespace yflip;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("worked examples") {
    CHECK(run_cli({"bijection", "--to-partition", "8; (4,6),(2,4),(2,6),(0,2),(0,6)"}).out ==
          "[4,2,2]\n");
    CHECK(run_cli({"bijection", "--to-triangulation", "[4,2,2]", "--ngon", "8"}).out ==
          "8; (4,6),(2,4),(2,6),(0,2),(0,6)\n");
    CHECK(run_cli({"flip", "--partition", "[4,2,2]", "--row", "2"}).out == "[4,3,2]\n");
}

TEST_CASE("pentagon exchange graph") {
    Result r = run_cli({"exchange-graph", "--type", "A", "--n", "2"});
    REQUIRE(r.code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "# seeds=5 edges=5");
}

TEST_CASE("exit codes") {
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({}).code == 1);                      // a subcommand is required
    CHECK(run_cli({"frobnicate"}).code == 1);          // unknown verb
    CHECK(run_cli({"faces"}).code == 1);               // missing required option
    Result r = run_cli({"flip", "--triangulation", "6; (0,2),(0,4),(2,4)",
                        "--diagonal", "(1,3)"});
    CHECK(r.code == 2);                                // diagonal not present
    CHECK(r.err.substr(0, 7) == "error: ");
    CHECK(run_cli({"bijection", "--to-triangulation", "[9,9]", "--ngon", "5"}).code == 2);
}

TEST_CASE("deterministic output") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"graph", "--n", "4", "--format", "adjacency-json"},
             {"exchange-graph", "--type", "A", "--n", "3"},
             {"neighbors", "--list-diagrams", "4"},
             {"arcs", "--family", "fountain:0", "--window", "-4:4"}}) {
        Result a = run_cli(args), b = run_cli(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("verb smoke coverage") {
    CHECK(run_cli({"bijection", "--validate", "6; (0,2),(0,4),(2,4)"}).out == "true\n");
    CHECK(run_cli({"bijection", "--heads", "[4,2,2]", "--n", "6"}).out == "[6,4,6,2,6]\n");
    CHECK(run_cli({"bijection", "--order", "8; (0,2),(2,4),(2,6),(4,6),(0,6)"}).out ==
          "(4,6) (2,4) (2,6) (0,2) (0,6)\n");
    CHECK(run_cli({"neighbors", "--partition", "[]", "--n", "2"}).out == "[1]\n");
    CHECK(run_cli({"dihedral", "--transpose", "[4,2,2]"}).out == "[3,3,1,1]\n");
    CHECK(run_cli({"dihedral", "--partition", "[2]", "--n", "2", "--apply", "aa"}).out ==
          "[2]\n");
    CHECK(run_cli({"faces", "--n", "2"}).out == "5 5 1\n");
    CHECK(run_cli({"faces", "--n", "2", "--k", "2"}).out == "1\n");
    CHECK(run_cli({"graph", "--n", "3", "--embedding-check", "3"}).out == "true\n");
    CHECK(run_cli({"cc", "--roots", "2"}).out == "[1,0]\n[1,1]\n[0,1]\n");
    CHECK(run_cli({"cc", "--n", "2", "--lo", "1", "--hi", "2", "--chi", "1,0"}).out == "0\n");
    CHECK(run_cli({"arcs", "--crossing", "(0,2)(1,3)"}).out == "true\n");
    CHECK(run_cli({"arcs", "--classify", "--family", "leapfrog"}).out == "locally_finite\n");
    CHECK(run_cli({"arcs", "--collection", "(0,2)", "--flip", "(0,2)", "--window", "0:3"}).out ==
          "(1,3)\n");
    CHECK(run_cli({"arcs", "--family", "fountain:0", "--window", "-5:5",
                   "--reach-budget", "2"}).out == "true\n");
}

TEST_CASE("cluster character through the front door") {
    Result r = run_cli({"cc", "--n", "2", "--lo", "1", "--hi", "2"});
    REQUIRE(r.code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    Laurent expected = div_exact(Laurent(1) + Laurent::x(1) + Laurent::x(2),
                                 Laurent::x(1) * Laurent::x(2));
    CHECK(Laurent::parse(lines[0]) == expected);
    CHECK(lines[1] == "denominator [1,1]");
}

TEST_CASE("verify verbs report pass and fail status") {
    Result r = run_cli({"verify", "faces"});
    CHECK(r.code == 0);
    CHECK(r.out == "PASS faces\n");
    CHECK(run_cli({"verify", "cc", "--n", "2"}).out == "PASS cc\n");
    CHECK(run_cli({"verify", "no-such-suite"}).code == 1);
}

TEST_CASE("every library operation is reachable from a verb") {
    const std::vector<std::string> operations = {
        "fits_in", "flip_row", "flip_neighbors", "heads", "transpose", "act_alpha",
        "act_beta", "act", "validate", "lambda_map", "lambda_inverse", "diag_order",
        "flip_diagonal", "rotate", "reflect", "enumerate_triangulations",
        "build_flip_graph", "embedding_check", "count_faces", "transpose_edge_defect",
        "export_graph", "add", "mul", "div_exact", "eval", "mutate_quiver", "mutate_seed",
        "initial_seed_An", "initial_seed_An_ice", "initial_seed_Dinfty_window",
        "triangulation_to_ice_quiver", "exchange_graph", "exchange_graph_is_associahedron",
        "mutate_lazy", "quiver_isomorphic", "alt_equivalence_check", "positive_roots_An",
        "grassmannian_chi", "cc_map", "verify_cc_theorem", "denominator_vector",
        "infinite_extension_check", "crossing", "materialize", "classify", "flip_arc",
        "reachability_window_check"};
    std::set<std::string> reachable;
    for (const auto& [verb, op] : cli::dispatch_table()) {
        CHECK_FALSE(verb.empty());
        reachable.insert(op);
    }
    for (const auto& op : operations) {
        INFO(op);
        CHECK(reachable.count(op) == 1);
    }
}
