#pragma once

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "yflip/arcs.hpp"
#include "yflip/flip_graph.hpp"
#include "yflip/laurent.hpp"
#include "yflip/partition.hpp"
#include "yflip/repcc.hpp"
#include "yflip/seed.hpp"
#include "yflip/triangulation.hpp"
#include "yflip/verify.hpp"

namespace yflip::cli {

/// Which library operations each verb reaches (coverage is tested).
inline const std::vector<std::pair<std::string, std::string>>& dispatch_table() {
    static const std::vector<std::pair<std::string, std::string>> table = {
        {"bijection", "lambda_map"},
        {"bijection", "lambda_inverse"},
        {"bijection", "validate"},
        {"bijection", "diag_order"},
        {"bijection", "heads"},
        {"bijection", "fits_in"},
        {"flip", "flip_row"},
        {"flip", "flip_diagonal"},
        {"neighbors", "flip_neighbors"},
        {"neighbors", "enumerate_fitting"},
        {"neighbors", "enumerate_triangulations"},
        {"dihedral", "act_alpha"},
        {"dihedral", "act_beta"},
        {"dihedral", "act"},
        {"dihedral", "transpose"},
        {"dihedral", "rotate"},
        {"dihedral", "reflect"},
        {"graph", "build_flip_graph"},
        {"graph", "export_graph"},
        {"graph", "embedding_check"},
        {"graph", "transpose_edge_defect"},
        {"faces", "count_faces"},
        {"mutate", "mutate_quiver"},
        {"mutate", "mutate_seed"},
        {"mutate", "initial_seed_An"},
        {"mutate", "initial_seed_An_ice"},
        {"mutate", "initial_seed_Dinfty_window"},
        {"mutate", "triangulation_to_ice_quiver"},
        {"mutate", "mutate_lazy"},
        {"exchange-graph", "exchange_graph"},
        {"verify", "exchange_graph_is_associahedron"},
        {"verify", "quiver_isomorphic"},
        {"verify", "alt_equivalence_check"},
        {"verify", "verify_cc_theorem"},
        {"verify", "infinite_extension_check"},
        {"verify", "reachability_window_check"},
        {"verify", "add"},
        {"verify", "mul"},
        {"verify", "div_exact"},
        {"verify", "eval"},
        {"cc", "cc_map"},
        {"cc", "denominator_vector"},
        {"cc", "positive_roots_An"},
        {"cc", "grassmannian_chi"},
        {"arcs", "crossing"},
        {"arcs", "materialize"},
        {"arcs", "classify"},
        {"arcs", "flip_arc"},
    };
    return table;
}

namespace detail {

inline Diagonal parse_diagonal(const std::string& s) {
    size_t open = s.find('('), comma = s.find(','), close = s.find(')');
    if (open == std::string::npos || comma == std::string::npos || close == std::string::npos)
        throw std::invalid_argument("bad diagonal literal: " + s);
    return Diagonal(std::stoi(s.substr(open + 1, comma - open - 1)),
                    std::stoi(s.substr(comma + 1, close - comma - 1)));
}

inline std::set<Arc> parse_arcs(const std::string& s) {
    std::set<Arc> out;
    size_t pos = 0;
    while ((pos = s.find('(', pos)) != std::string::npos) {
        size_t comma = s.find(',', pos), close = s.find(')', pos);
        if (comma == std::string::npos || close == std::string::npos || comma > close)
            throw std::invalid_argument("bad arc list: " + s);
        out.insert(Arc(std::stoi(s.substr(pos + 1, comma - pos - 1)),
                       std::stoi(s.substr(comma + 1, close - comma - 1))));
        pos = close + 1;
    }
    return out;
}

inline std::pair<int, int> parse_window(const std::string& s) {
    size_t colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("window must be lo:hi");
    return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
}

inline std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

inline void print_seed(std::ostream& out, const Seed& s) {
    const Quiver& q = s.quiver;
    out << "mutable " << q.mutable_count() << " frozen " << q.size() - q.mutable_count()
        << "\n";
    for (int i = 1; i <= q.size(); ++i)
        for (int j = 1; j <= q.size(); ++j)
            if (q.b(i, j) > 0) out << i << " -> " << j << " x" << q.b(i, j) << "\n";
    for (size_t k = 0; k < s.vars.size(); ++k)
        out << "u" << k + 1 << " = " << s.vars[k].to_string() << "\n";
}

inline std::string vec_to_string(const std::vector<int>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + "]";
}

}  // namespace detail

/**
 * Entry point shared by the binary and the tests. Exit codes:
 * 0 success, 1 usage error, 2 domain error.
 */
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"associahedron and cluster mutation toolkit"};
    app.require_subcommand(1);

    // bijection
    auto* bij = app.add_subcommand("bijection", "translate between triangulations and diagrams");
    std::string bij_tri, bij_part, bij_validate, bij_order, bij_heads;
    int bij_ngon = 0, bij_n = 0;
    bij->add_option("--to-partition", bij_tri, "triangulation literal");
    bij->add_option("--to-triangulation", bij_part, "partition literal");
    bij->add_option("--ngon", bij_ngon, "polygon size for --to-triangulation");
    bij->add_option("--validate", bij_validate, "triangulation literal");
    bij->add_option("--order", bij_order, "triangulation literal");
    bij->add_option("--heads", bij_heads, "partition literal");
    bij->add_option("--n", bij_n, "line parameter for --heads");

    // flip
    auto* flip = app.add_subcommand("flip", "flip one row or one diagonal");
    std::string flip_part, flip_tri, flip_diag;
    int flip_row_k = 0;
    flip->add_option("--partition", flip_part, "partition literal");
    flip->add_option("--row", flip_row_k, "row to flip");
    flip->add_option("--triangulation", flip_tri, "triangulation literal");
    flip->add_option("--diagonal", flip_diag, "diagonal (a,b)");

    // neighbors
    auto* nbr = app.add_subcommand("neighbors", "all flips of a diagram or triangulation");
    std::string nbr_part, nbr_tri;
    int nbr_n = 0, nbr_list = 0, nbr_list_tri = 0;
    nbr->add_option("--partition", nbr_part, "partition literal");
    nbr->add_option("--n", nbr_n, "line parameter");
    nbr->add_option("--triangulation", nbr_tri, "triangulation literal");
    nbr->add_option("--list-diagrams", nbr_list, "enumerate all of Y_n");
    nbr->add_option("--list-triangulations", nbr_list_tri, "enumerate all of T_N");

    // dihedral
    auto* dih = app.add_subcommand("dihedral", "polygon symmetries and transposition");
    std::string dih_part, dih_tri, dih_word, dih_transpose;
    int dih_n = 0;
    dih->add_option("--partition", dih_part, "partition literal");
    dih->add_option("--n", dih_n, "line parameter");
    dih->add_option("--apply", dih_word, "word over a (reflect) and b (rotate)");
    dih->add_option("--triangulation", dih_tri, "triangulation literal");
    dih->add_option("--transpose", dih_transpose, "partition literal");

    // graph
    auto* gr = app.add_subcommand("graph", "flip graph construction and export");
    int gr_n = 0, gr_embed = -1, gr_defect = -1;
    std::string gr_format = "edge-list";
    gr->add_option("--n", gr_n, "line parameter");
    gr->add_option("--format", gr_format, "edge-list | dot-like | adjacency-json");
    gr->add_option("--embedding-check", gr_embed, "check Y_n inside Y_{n+1}");
    gr->add_option("--transpose-defect", gr_defect, "edges broken by transposition");

    // faces
    auto* fc = app.add_subcommand("faces", "face counts of the associahedron");
    int fc_n = 0, fc_k = -1;
    fc->add_option("--n", fc_n, "dimension")->required();
    fc->add_option("--k", fc_k, "face dimension (all if omitted)");

    // mutate
    auto* mu = app.add_subcommand("mutate", "seed mutation");
    std::string mu_type = "A", mu_at, mu_dual;
    int mu_n = 0;
    bool mu_quiver_only = false;
    mu->add_option("--type", mu_type, "A | A-alt | A-ice | A-infty | D");
    mu->add_option("--n", mu_n, "rank (window size for infinite types)");
    mu->add_option("--at", mu_at, "comma-separated mutation indices");
    mu->add_option("--dual", mu_dual, "triangulation whose dual ice quiver to use");
    mu->add_flag("--quiver-only", mu_quiver_only, "print only the mutated quiver");

    // exchange-graph
    auto* ex = app.add_subcommand("exchange-graph", "mutation closure of a seed");
    int ex_n = 0, ex_budget = 10000;
    std::string ex_type = "A", ex_format = "edge-list";
    ex->add_option("--type", ex_type, "A | A-ice");
    ex->add_option("--n", ex_n, "rank")->required();
    ex->add_option("--budget", ex_budget, "vertex cap");
    ex->add_option("--format", ex_format, "edge-list | dot-like");

    // verify
    auto* ver = app.add_subcommand("verify", "named invariant suites");
    std::string ver_name;
    int ver_n = -1, ver_N = -1;
    ver->add_option("suite", ver_name, "suite name")->required();
    ver->add_option("--n", ver_n, "primary size parameter");
    ver->add_option("--N", ver_N, "secondary size parameter");

    // cc
    auto* cc = app.add_subcommand("cc", "cluster characters of interval modules");
    int cc_n = 0, cc_lo = 0, cc_hi = 0, cc_roots = -1;
    std::string cc_e;
    bool cc_alt = false;
    cc->add_option("--n", cc_n, "ambient rank");
    cc->add_option("--lo", cc_lo, "support start");
    cc->add_option("--hi", cc_hi, "support end");
    cc->add_flag("--alt", cc_alt, "use the alternating orientation");
    cc->add_option("--roots", cc_roots, "print the positive roots of A_n");
    cc->add_option("--chi", cc_e, "subrepresentation vector e1,e2,...");

    // arcs
    auto* ar = app.add_subcommand("arcs", "integer arc collections");
    std::string ar_family, ar_window, ar_coll, ar_arc, ar_cross_a, ar_cross_b;
    int ar_budget = -1;
    bool ar_classify = false, ar_clipped = false;
    ar->add_option("--family", ar_family, "fountain:c | leapfrog | fountain-spaced:c | leapfrog-shifted");
    ar->add_option("--window", ar_window, "lo:hi");
    ar->add_flag("--classify", ar_classify, "classify the family");
    ar->add_option("--collection", ar_coll, "arc list (m,n);(p,q)");
    ar->add_option("--flip", ar_arc, "arc to flip");
    ar->add_flag("--clipped", ar_clipped, "reject flips leaning on the window hull");
    ar->add_option("--reach-budget", ar_budget, "run the fountain reachability check");
    std::string ar_cross;
    ar->add_option("--crossing", ar_cross, "two arcs (a,b)(c,d)");

    std::vector<const char*> argv;
    std::vector<std::string> storage;
    storage.push_back("yflip");
    for (auto& a : args) storage.push_back(a);
    for (auto& s : storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (bij->parsed()) {
            if (!bij_tri.empty())
                out << lambda_map(Triangulation::parse(bij_tri)).to_string() << "\n";
            if (!bij_part.empty()) {
                Partition p = Partition::parse(bij_part);
                if (!fits_in(p, bij_ngon - 2))
                    throw std::invalid_argument("partition does not fit in Y_{N-2}");
                out << lambda_inverse(p, bij_ngon).to_string() << "\n";
            }
            if (!bij_validate.empty())
                out << (validate(Triangulation::parse(bij_validate)) ? "true" : "false") << "\n";
            if (!bij_order.empty()) {
                bool first = true;
                for (const auto& d : diag_order(Triangulation::parse(bij_order))) {
                    out << (first ? "" : " ") << "(" << d.tail << "," << d.head << ")";
                    first = false;
                }
                out << "\n";
            }
            if (!bij_heads.empty())
                out << detail::vec_to_string(heads(Partition::parse(bij_heads), bij_n)) << "\n";
        } else if (flip->parsed()) {
            if (!flip_part.empty())
                out << flip_row(Partition::parse(flip_part), flip_row_k).to_string() << "\n";
            if (!flip_tri.empty())
                out << flip_diagonal(Triangulation::parse(flip_tri),
                                     detail::parse_diagonal(flip_diag))
                           .to_string()
                    << "\n";
        } else if (nbr->parsed()) {
            if (!nbr_part.empty())
                for (const auto& q : flip_neighbors(Partition::parse(nbr_part), nbr_n))
                    out << q.to_string() << "\n";
            if (!nbr_tri.empty()) {
                Triangulation t = Triangulation::parse(nbr_tri);
                std::set<Triangulation> flips;
                for (const auto& d : t.diagonals) flips.insert(flip_diagonal(t, d));
                for (const auto& f : flips) out << f.to_string() << "\n";
            }
            if (nbr_list > 0)
                for (const auto& p : enumerate_fitting(nbr_list)) out << p.to_string() << "\n";
            if (nbr_list_tri > 0)
                for (const auto& t : enumerate_triangulations(nbr_list_tri))
                    out << t.to_string() << "\n";
        } else if (dih->parsed()) {
            if (!dih_transpose.empty())
                out << transpose(Partition::parse(dih_transpose)).to_string() << "\n";
            if (!dih_part.empty()) {
                Partition p = Partition::parse(dih_part);
                DihedralElement g = DihedralElement::identity(dih_n);
                for (char ch : dih_word) {
                    if (ch == 'a')
                        g = compose(DihedralElement::alpha(dih_n), g);
                    else if (ch == 'b')
                        g = compose(DihedralElement::beta(dih_n), g);
                    else
                        throw std::invalid_argument("word must use only a and b");
                }
                out << act(g, p, dih_n).to_string() << "\n";
            }
            if (!dih_tri.empty()) {
                Triangulation t = Triangulation::parse(dih_tri);
                for (char ch : dih_word) {
                    if (ch == 'a')
                        t = reflect(t);
                    else if (ch == 'b')
                        t = rotate(t);
                    else
                        throw std::invalid_argument("word must use only a and b");
                }
                out << t.to_string() << "\n";
            }
        } else if (gr->parsed()) {
            if (gr_embed >= 0)
                out << (embedding_check(gr_embed) ? "true" : "false") << "\n";
            else if (gr_defect >= 0)
                for (const auto& e : transpose_edge_defect(gr_defect))
                    out << e.first.to_string() << " -- " << e.second.to_string() << "\n";
            else
                out << export_graph(build_flip_graph(gr_n), parse_format(gr_format));
        } else if (fc->parsed()) {
            if (fc_k >= 0) {
                out << count_faces(fc_n, fc_k) << "\n";
            } else {
                for (int k = 0; k <= fc_n; ++k) out << (k ? " " : "") << count_faces(fc_n, k);
                out << "\n";
            }
        } else if (mu->parsed()) {
            std::vector<int> schedule = detail::parse_int_list(mu_at);
            if (mu_type == "A-infty") {
                LazySeedAInfty lazy(mu_n > 0 ? mu_n : 2);
                for (int k : schedule) lazy = lazy.mutated(k);
                out << "window " << lazy.window() << "\n";
                for (int i = 1; i <= lazy.window(); ++i)
                    out << "u" << i << " = " << lazy.var(i).to_string() << "\n";
            } else {
                Seed s;
                if (!mu_dual.empty())
                    s = triangulation_to_ice_quiver(Triangulation::parse(mu_dual));
                else if (mu_type == "A")
                    s = initial_seed_An(mu_n);
                else if (mu_type == "A-alt") {
                    s.quiver = quiver_An_alt(mu_n);
                    for (int i = 1; i <= mu_n; ++i) s.vars.push_back(Laurent::x(i));
                } else if (mu_type == "A-ice")
                    s = initial_seed_An_ice(mu_n);
                else if (mu_type == "D")
                    s = initial_seed_Dinfty_window(mu_n);
                else
                    throw std::invalid_argument("unknown quiver type: " + mu_type);
                if (mu_quiver_only) {
                    Quiver q = s.quiver;
                    for (int k : schedule) q = q.mutated(k);
                    s.quiver = q;
                    s.vars.clear();
                } else {
                    for (int k : schedule) s = mutate_seed(s, k);
                }
                detail::print_seed(out, s);
            }
        } else if (ex->parsed()) {
            Seed start = ex_type == "A-ice" ? initial_seed_An_ice(ex_n) : initial_seed_An(ex_n);
            ExchangeGraph g = exchange_graph(start, ex_budget);
            // stable labels: sort cluster keys, label seeds s0, s1, ...
            std::vector<std::vector<Laurent>> keys;
            for (const auto& s : g.seeds) keys.push_back(s.cluster_key());
            std::vector<int> order(keys.size());
            for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
            std::sort(order.begin(), order.end(),
                      [&](int a, int b) { return keys[a] < keys[b]; });
            std::vector<int> label(order.size());
            for (size_t i = 0; i < order.size(); ++i) label[order[i]] = static_cast<int>(i);
            out << "# seeds=" << g.seeds.size() << " edges=" << g.edges.size() << "\n";
            std::set<std::pair<int, int>> relabeled;
            for (const auto& e : g.edges)
                relabeled.insert({std::min(label[e.first], label[e.second]),
                                  std::max(label[e.first], label[e.second])});
            for (const auto& e : relabeled) out << "s" << e.first << " -- s" << e.second << "\n";
        } else if (ver->parsed()) {
            auto with_default = [](int v, int d) { return v >= 0 ? v : d; };
            bool ok;
            if (ver_name == "bijection")
                ok = verify_bijection(with_default(ver_n, 6));
            else if (ver_name == "flip-conjugation")
                ok = verify_flip_conjugation(with_default(ver_n, 5));
            else if (ver_name == "heads")
                ok = verify_heads(with_default(ver_n, 5));
            else if (ver_name == "embedding")
                ok = embedding_check(with_default(ver_n, 5));
            else if (ver_name == "dihedral")
                ok = verify_dihedral(with_default(ver_n, 5));
            else if (ver_name == "equivariance")
                ok = verify_equivariance(with_default(ver_n, 8));
            else if (ver_name == "graph-shape")
                ok = verify_flip_graph_shape(with_default(ver_n, 6));
            else if (ver_name == "faces")
                ok = verify_faces_small();
            else if (ver_name == "transpose-defect")
                ok = verify_transpose_defect();
            else if (ver_name == "laurent-ring")
                ok = verify_laurent_ring();
            else if (ver_name == "laurent-phenomenon")
                ok = verify_laurent_phenomenon(with_default(ver_n, 3)) && verify_ainfty_walks();
            else if (ver_name == "mutation-rules")
                ok = verify_mutation_rules_agree();
            else if (ver_name == "census")
                ok = verify_census(with_default(ver_n, 3));
            else if (ver_name == "gsv")
                ok = verify_gsv(with_default(ver_n, 3)) && verify_gsv_lazy();
            else if (ver_name == "assoc")
                ok = exchange_graph_is_associahedron(with_default(ver_n, 3));
            else if (ver_name == "ice-flip")
                ok = verify_ice_quiver_flip(with_default(ver_n, 6));
            else if (ver_name == "alt")
                ok = alt_equivalence_check(with_default(ver_n, 8)) &&
                     quiver_isomorphic(quiver_An(3), quiver_An(3));
            else if (ver_name == "cc")
                ok = verify_cc_theorem(with_default(ver_n, 3));
            else if (ver_name == "cc-stability")
                ok = ver_N >= 0 && ver_n >= 0 ? infinite_extension_check(ver_n, ver_N)
                                              : verify_cc_stability();
            else if (ver_name == "arcs-polygon")
                ok = verify_arcs_polygon(with_default(ver_n, 6));
            else if (ver_name == "arcs-reachability")
                ok = verify_arcs_reachability();
            else
                throw CLI::ValidationError("unknown suite: " + ver_name);
            out << (ok ? "PASS " : "FAIL ") << ver_name << "\n";
            return ok ? 0 : 2;
        } else if (cc->parsed()) {
            if (cc_roots >= 0) {
                for (const auto& r : positive_roots_An(cc_roots))
                    out << detail::vec_to_string(r) << "\n";
            } else {
                Quiver q = cc_alt ? quiver_An_alt(cc_n) : quiver_An(cc_n);
                IntervalModule V(q, cc_lo, cc_hi);
                if (!cc_e.empty()) {
                    out << grassmannian_chi(V, detail::parse_int_list(cc_e)) << "\n";
                } else {
                    Laurent v = cc_map(V);
                    out << v.to_string() << "\n";
                    out << "denominator " << detail::vec_to_string(denominator_vector(v, cc_n))
                        << "\n";
                }
            }
        } else if (ar->parsed()) {
            if (!ar_cross.empty()) {
                auto arcs = detail::parse_arcs(ar_cross);
                if (arcs.size() != 2) throw std::invalid_argument("--crossing needs two arcs");
                out << (crossing(*arcs.begin(), *std::next(arcs.begin())) ? "true" : "false")
                    << "\n";
            } else if (ar_classify) {
                Classification c = classify(ArcFamily::parse(ar_family));
                if (c.is_fountain)
                    out << "fountain(" << c.center << ")\n";
                else
                    out << "locally_finite\n";
            } else if (!ar_arc.empty()) {
                auto [lo, hi] = detail::parse_window(ar_window);
                auto coll = detail::parse_arcs(ar_coll);
                auto arc_set = detail::parse_arcs(ar_arc);
                if (arc_set.size() != 1) throw std::invalid_argument("--flip needs one arc");
                auto flipped = flip_arc(coll, *arc_set.begin(), lo, hi,
                                        ar_clipped ? FlipMode::clipped : FlipMode::polygon);
                bool first = true;
                for (const auto& a : flipped) {
                    out << (first ? "" : ";") << a.to_string();
                    first = false;
                }
                out << "\n";
            } else if (ar_budget >= 0) {
                auto [lo, hi] = detail::parse_window(ar_window);
                bool ok = reachability_window_check(ArcFamily::parse(ar_family), lo, hi,
                                                    ar_budget);
                out << (ok ? "true" : "false") << "\n";
            } else {
                auto [lo, hi] = detail::parse_window(ar_window);
                bool first = true;
                for (const auto& a : materialize(ArcFamily::parse(ar_family), lo, hi)) {
                    out << (first ? "" : ";") << a.to_string();
                    first = false;
                }
                out << "\n";
            }
        }
    } catch (const CLI::Error& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace yflip::cli
