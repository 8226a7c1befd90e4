#pragma once

#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "yflip/partition.hpp"
#include "yflip/triangulation.hpp"

namespace yflip {

/**
 * 1-skeleton of the (n-1)-dimensional associahedron on vertex set Y_n,
 * edges given by row flips.
 */
struct FlipGraph {
    int n = 1;
    std::vector<Partition> vertices;                    // sorted
    std::set<std::pair<Partition, Partition>> edges;    // each pair with first < second

    bool has_edge(const Partition& a, const Partition& b) const {
        if (a == b) return false;
        return edges.count(a < b ? std::make_pair(a, b) : std::make_pair(b, a)) > 0;
    }

    bool operator==(const FlipGraph&) const = default;
};

inline FlipGraph build_flip_graph(int n) {
    if (n < 1 || n > 9) throw std::invalid_argument("n out of the supported range [1,9]");
    FlipGraph g;
    g.n = n;
    g.vertices = enumerate_fitting(n);
    for (const auto& p : g.vertices)
        for (const auto& q : flip_neighbors(p, n))
            if (p != q) g.edges.insert(p < q ? std::make_pair(p, q) : std::make_pair(q, p));
    return g;
}

/// The flip graph of Y_n must equal the induced subgraph of Y_{n+1} on Y_n.
inline bool embedding_check(int n) {
    if (n > 8) throw std::invalid_argument("n out of the supported range");
    FlipGraph small = build_flip_graph(n);
    FlipGraph big = build_flip_graph(n + 1);
    std::set<Partition> small_set(small.vertices.begin(), small.vertices.end());
    std::set<std::pair<Partition, Partition>> induced;
    for (const auto& e : big.edges)
        if (small_set.count(e.first) && small_set.count(e.second)) induced.insert(e);
    return induced == small.edges;
}

namespace detail {
inline long long count_noncrossing_sets(int N, int size) {
    // all diagonals of the N-gon, then DFS over extensions in index order
    std::vector<Diagonal> all;
    Triangulation shape{N, {}};
    for (int a = 0; a + 2 <= N - 1; ++a)
        for (int b = a + 2; b <= N - 1; ++b)
            if (shape.is_diagonal_shape(Diagonal(a, b))) all.push_back(Diagonal(a, b));
    long long count = 0;
    std::vector<Diagonal> chosen;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (static_cast<int>(chosen.size()) == size) {
            ++count;
            return;
        }
        if (i >= all.size()) return;
        if (all.size() - i < size - chosen.size()) return;
        rec(i + 1);
        for (const auto& d : chosen)
            if (diagonals_cross(d, all[i])) return;
        chosen.push_back(all[i]);
        rec(i + 1);
        chosen.pop_back();
    };
    rec(0);
    return count;
}
}  // namespace detail

/// Number of k-dimensional faces of the n-dimensional associahedron:
/// partial triangulations of the (n+3)-gon with n-k diagonals.
inline long long count_faces(int n, int k) {
    if (k < 0 || k > n || n > 7) throw std::invalid_argument("face query out of range");
    return detail::count_noncrossing_sets(n + 3, n - k);
}

/// Flip-graph edges not preserved by the diagram transposition.
inline std::set<std::pair<Partition, Partition>> transpose_edge_defect(int n) {
    if (n > 7) throw std::invalid_argument("n out of the supported range");
    FlipGraph g = build_flip_graph(n);
    std::set<std::pair<Partition, Partition>> defect;
    for (const auto& e : g.edges) {
        Partition a = transpose(e.first), b = transpose(e.second);
        if (!g.has_edge(a, b)) defect.insert(e);
    }
    return defect;
}

enum class GraphFormat { edge_list, dot_like, adjacency_json };

inline GraphFormat parse_format(const std::string& s) {
    if (s == "edge-list") return GraphFormat::edge_list;
    if (s == "dot-like") return GraphFormat::dot_like;
    if (s == "adjacency-json") return GraphFormat::adjacency_json;
    throw std::invalid_argument("unknown format: " + s);
}

inline std::string export_graph(const FlipGraph& g, GraphFormat format) {
    std::ostringstream os;
    switch (format) {
        case GraphFormat::edge_list: {
            os << "# n=" << g.n << " vertices=" << g.vertices.size()
               << " edges=" << g.edges.size() << "\n";
            for (const auto& e : g.edges)
                os << e.first.to_string() << " -- " << e.second.to_string() << "\n";
            break;
        }
        case GraphFormat::dot_like: {
            os << "graph flipgraph_" << g.n << " {\n";
            for (const auto& v : g.vertices) os << "  \"" << v.to_string() << "\";\n";
            for (const auto& e : g.edges)
                os << "  \"" << e.first.to_string() << "\" -- \"" << e.second.to_string()
                   << "\";\n";
            os << "}\n";
            break;
        }
        case GraphFormat::adjacency_json: {
            nlohmann::json j;
            j["schema"] = 1;
            j["n"] = g.n;
            nlohmann::json adj = nlohmann::json::object();
            for (const auto& v : g.vertices) adj[v.to_string()] = nlohmann::json::array();
            for (const auto& e : g.edges) {
                adj[e.first.to_string()].push_back(e.second.to_string());
                adj[e.second.to_string()].push_back(e.first.to_string());
            }
            for (auto& [key, nbrs] : adj.items()) {
                std::vector<std::string> v = nbrs.get<std::vector<std::string>>();
                std::sort(v.begin(), v.end());
                adj[key] = v;
            }
            j["adjacency"] = adj;
            os << j.dump(2) << "\n";
            break;
        }
    }
    return os.str();
}

inline FlipGraph parse_adjacency_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("schema") || j["schema"] != 1)
        throw std::invalid_argument("unsupported graph schema");
    FlipGraph g;
    g.n = j["n"].get<int>();
    for (auto& [key, nbrs] : j["adjacency"].items()) {
        Partition p = Partition::parse(key);
        g.vertices.push_back(p);
        for (const auto& q_text : nbrs) {
            Partition q = Partition::parse(q_text.get<std::string>());
            if (p != q) g.edges.insert(p < q ? std::make_pair(p, q) : std::make_pair(q, p));
        }
    }
    std::sort(g.vertices.begin(), g.vertices.end());
    return g;
}

inline bool graph_connected(const FlipGraph& g) {
    if (g.vertices.empty()) return true;
    std::map<Partition, std::vector<Partition>> adj;
    for (const auto& e : g.edges) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    std::set<Partition> seen{g.vertices.front()};
    std::vector<Partition> stack{g.vertices.front()};
    while (!stack.empty()) {
        Partition v = stack.back();
        stack.pop_back();
        for (const auto& w : adj[v])
            if (seen.insert(w).second) stack.push_back(w);
    }
    return seen.size() == g.vertices.size();
}

}  // namespace yflip
