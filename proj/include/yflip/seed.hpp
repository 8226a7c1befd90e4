#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "yflip/flip_graph.hpp"
#include "yflip/laurent.hpp"
#include "yflip/quiver.hpp"
#include "yflip/triangulation.hpp"

namespace yflip {

/**
 * A seed: quiver plus one Laurent expression per mutable vertex. Frozen
 * vertex n+j carries the coefficient symbol c_j.
 */
struct Seed {
    Quiver quiver;
    std::vector<Laurent> vars;  // vars[k-1] sits at mutable vertex k

    /// Expression carried by any vertex, mutable or frozen.
    Laurent var_at(int v) const {
        if (v <= quiver.mutable_count()) return vars[v - 1];
        return Laurent::c(v - quiver.mutable_count());
    }

    /// Identity key: the unordered cluster (frozen symbols excluded).
    std::vector<Laurent> cluster_key() const {
        std::vector<Laurent> key = vars;
        std::sort(key.begin(), key.end());
        return key;
    }

    bool operator==(const Seed&) const = default;
};

inline Seed mutate_seed(const Seed& s, int k) {
    const Quiver& q = s.quiver;
    if (k < 1 || k > q.mutable_count()) throw std::invalid_argument("not a mutable vertex");
    Laurent in_prod(1), out_prod(1);
    for (int v = 1; v <= q.size(); ++v) {
        int a = q.b(v, k);
        if (a > 0)
            for (int t = 0; t < a; ++t) in_prod = in_prod * s.var_at(v);
        else if (a < 0)
            for (int t = 0; t < -a; ++t) out_prod = out_prod * s.var_at(v);
    }
    Seed out;
    out.quiver = q.mutated(k);
    out.vars = s.vars;
    out.vars[k - 1] = div_exact(in_prod + out_prod, s.vars[k - 1]);
    return out;
}

/// Initial seed on the linear quiver 1 -> 2 -> ... -> n, vars x_1..x_n.
inline Seed initial_seed_An(int n) {
    Seed s;
    s.quiver = quiver_An(n);
    for (int i = 1; i <= n; ++i) s.vars.push_back(Laurent::x(i));
    return s;
}

/**
 * Ice quiver dual to a triangulation: one mutable vertex per diagonal in
 * diag_order, one frozen vertex per side (side (j-1,j) is c_j, side
 * (0,N-1) is c_N). In each triangle a < b < c the arrows run
 * (a,c) -> (b,c) -> (a,b) -> (a,c); frozen-frozen arrows are dropped.
 * vars are x_1..x_{N-3} in diagonal order.
 */
inline Seed triangulation_to_ice_quiver(const Triangulation& t) {
    if (!validate(t)) throw std::invalid_argument("invalid triangulation");
    const int N = t.ngon;
    const int n = N - 3;
    std::vector<Diagonal> diags = diag_order(t);
    auto vertex_of_edge = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        if (b - a == 1) return n + b;                  // side (j-1, j) is c_j
        if (a == 0 && b == N - 1) return n + N;        // closing side is c_N
        auto it = std::find(diags.begin(), diags.end(), Diagonal(a, b));
        return static_cast<int>(it - diags.begin()) + 1;
    };
    Seed s;
    s.quiver = Quiver(n + N, n);
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b)
            for (int c = b + 1; c < N; ++c) {
                if (!(t.is_edge(a, b) && t.is_edge(b, c) && t.is_edge(a, c))) continue;
                int ab = vertex_of_edge(a, b), bc = vertex_of_edge(b, c),
                    ac = vertex_of_edge(a, c);
                // counter-clockwise within the triangle
                auto arrow = [&](int u, int v) {
                    if (s.quiver.is_frozen(u) && s.quiver.is_frozen(v)) return;
                    s.quiver.add_arrow(u, v);
                };
                arrow(ac, bc);
                arrow(bc, ab);
                arrow(ab, ac);
            }
    for (int i = 1; i <= n; ++i) s.vars.push_back(Laurent::x(i));
    return s;
}

/// The displayed initial ice seed: the fan triangulation of the (n+3)-gon.
inline Seed initial_seed_An_ice(int n) {
    return triangulation_to_ice_quiver(lambda_inverse(Partition{}, n + 3));
}

inline Seed initial_seed_Dinfty_window(int N) {
    Seed s;
    s.quiver = quiver_Dinfty_window(N);
    for (int i = 1; i <= N; ++i) s.vars.push_back(Laurent::x(i));
    return s;
}

/// Exchange graph: seeds up to cluster identity, edges given by mutations.
struct ExchangeGraph {
    std::vector<Seed> seeds;  // seeds[i] is a representative of vertex i
    std::set<std::pair<int, int>> edges;
    std::map<std::vector<Laurent>, int> index_of;  // cluster key -> vertex
};

inline ExchangeGraph exchange_graph(const Seed& start, int budget = 10000) {
    ExchangeGraph g;
    g.seeds.push_back(start);
    g.index_of[start.cluster_key()] = 0;
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int i : frontier) {
            Seed s = g.seeds[i];
            for (int k = 1; k <= s.quiver.mutable_count(); ++k) {
                Seed t = mutate_seed(s, k);
                auto key = t.cluster_key();
                auto it = g.index_of.find(key);
                int j;
                if (it == g.index_of.end()) {
                    if (static_cast<int>(g.seeds.size()) >= budget)
                        throw std::runtime_error("exchange graph budget exceeded");
                    j = static_cast<int>(g.seeds.size());
                    g.seeds.push_back(t);
                    g.index_of[key] = j;
                    next.push_back(j);
                } else {
                    j = it->second;
                }
                if (i != j) g.edges.insert({std::min(i, j), std::max(i, j)});
            }
        }
        frontier = std::move(next);
    }
    return g;
}

/// All distinct cluster variables appearing in the closure.
inline std::set<Laurent> cluster_variables(const ExchangeGraph& g) {
    std::set<Laurent> out;
    for (const auto& s : g.seeds)
        for (const auto& v : s.vars) out.insert(v);
    return out;
}

/**
 * Pairs the A_n exchange closure with triangulations of the (n+3)-gon:
 * BFS from (initial seed, fan) keeping a per-vertex diagonal assignment,
 * mutating at k together with flipping the k-th assigned diagonal. True
 * iff the pairing is a well-defined graph isomorphism onto the flip graph.
 */
inline bool exchange_graph_is_associahedron(int n) {
    if (n > 4) throw std::invalid_argument("n out of the supported range");
    const int N = n + 3;
    struct State {
        Seed seed;
        Triangulation tri;
        std::vector<Diagonal> assign;  // assign[k-1] = diagonal at mutable vertex k
    };
    State init{initial_seed_An(n), lambda_inverse(Partition{}, N), {}};
    for (int k = 1; k <= n; ++k) init.assign.push_back(Diagonal(0, k + 1));

    std::map<std::vector<Laurent>, Triangulation> tri_of_key;
    std::map<Triangulation, std::vector<Laurent>> key_of_tri;
    std::set<std::pair<Triangulation, Triangulation>> tri_edges;
    std::vector<State> frontier{init};
    tri_of_key[init.seed.cluster_key()] = init.tri;
    key_of_tri[init.tri] = init.seed.cluster_key();
    while (!frontier.empty()) {
        std::vector<State> next;
        for (const auto& st : frontier) {
            for (int k = 1; k <= n; ++k) {
                State nst{mutate_seed(st.seed, k), flip_diagonal(st.tri, st.assign[k - 1]),
                          st.assign};
                // the flipped diagonal is the one not shared with the old set
                for (const auto& d : nst.tri.diagonals)
                    if (!st.tri.diagonals.count(d)) nst.assign[k - 1] = d;
                auto key = nst.seed.cluster_key();
                auto it = tri_of_key.find(key);
                if (it != tri_of_key.end()) {
                    if (it->second != nst.tri) return false;  // pairing not well-defined
                } else {
                    if (key_of_tri.count(nst.tri)) return false;  // not injective
                    tri_of_key[key] = nst.tri;
                    key_of_tri[nst.tri] = key;
                    next.push_back(nst);
                }
                Triangulation a = st.tri, b = nst.tri;
                tri_edges.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
            }
        }
        frontier = std::move(next);
    }
    // the paired triangulation set must be all of T_N with flip adjacency
    if (static_cast<long long>(tri_of_key.size()) != catalan(n + 1)) return false;
    FlipGraph fg = build_flip_graph(n + 1);
    std::set<std::pair<Partition, Partition>> mapped;
    for (const auto& e : tri_edges) {
        Partition p = lambda_map(e.first), q = lambda_map(e.second);
        mapped.insert(p < q ? std::make_pair(p, q) : std::make_pair(q, p));
    }
    return mapped == fg.edges;
}

/**
 * Lazily windowed seed of the infinite linear quiver 1 -> 2 -> 3 -> ...
 * Indices beyond the window are guaranteed untouched by the history.
 */
class LazySeedAInfty {
public:
    explicit LazySeedAInfty(int window = 2) : window_(std::max(window, 2)) {
        seed_ = initial_seed_An(window_);
    }

    int window() const { return window_; }
    const std::vector<int>& history() const { return history_; }
    const Seed& seed() const { return seed_; }

    /// vars at index i; initial x_i beyond the window.
    Laurent var(int i) const {
        if (i < 1) throw std::invalid_argument("index is 1-based");
        return i <= window_ ? seed_.vars[i - 1] : Laurent::x(i);
    }

    LazySeedAInfty mutated(int k) const {
        LazySeedAInfty out = *this;
        out.ensure_window(k + 2);
        out.seed_ = mutate_seed(out.seed_, k);
        out.history_.push_back(k);
        return out;
    }

    /// Replays history inside a wider window; must agree with the current
    /// seed wherever both are defined (window coherence).
    LazySeedAInfty rebuilt(int window) const {
        LazySeedAInfty out(std::max(window, window_));
        for (int k : history_) out = out.mutated(k);
        return out;
    }

    /// Unordered cluster restricted to indices 1..m.
    std::vector<Laurent> cluster_key(int m) const {
        std::vector<Laurent> key;
        for (int i = 1; i <= m; ++i) key.push_back(var(i));
        std::sort(key.begin(), key.end());
        return key;
    }

private:
    void ensure_window(int needed) {
        if (needed <= window_) return;
        Seed wider = initial_seed_An(needed);
        for (int k : history_) wider = mutate_seed(wider, k);
        seed_ = std::move(wider);
        window_ = needed;
    }

    int window_;
    Seed seed_;
    std::vector<int> history_;
};

/**
 * Mutation schedule turning the alternating orientation into a linear one:
 * for m = n down to 2, mutate one parity class of 1..m-1 and then the
 * other. The composition is read left to right, so for even m the even
 * vertices 2..m-2 go first and the odd ones 1..m-1 second; for odd m the
 * odd vertices 1..m-2 first and the even ones 2..m-1 second.
 */
inline std::vector<int> alt_to_linear_schedule(int n) {
    std::vector<int> sched;
    for (int m = n; m >= 2; --m) {
        std::vector<int> first, second;
        if (m % 2 == 0) {
            for (int k = 2; k <= m - 2; k += 2) first.push_back(k);
            for (int k = 1; k <= m - 1; k += 2) second.push_back(k);
        } else {
            for (int k = 1; k <= m - 2; k += 2) first.push_back(k);
            for (int k = 2; k <= m - 1; k += 2) second.push_back(k);
        }
        sched.insert(sched.end(), first.begin(), first.end());
        sched.insert(sched.end(), second.begin(), second.end());
    }
    return sched;
}

inline bool alt_equivalence_check(int n) {
    if (n > 9) throw std::invalid_argument("n out of the supported range");
    Quiver q = quiver_An_alt(n);
    for (int k : alt_to_linear_schedule(n)) q = q.mutated(k);
    return quiver_isomorphic(q, quiver_An(n));
}

}  // namespace yflip
