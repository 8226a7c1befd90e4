#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "yflip/partition.hpp"

namespace yflip {

/// A diagonal of a labeled convex polygon, kept with tail < head.
struct Diagonal {
    int tail;
    int head;

    Diagonal(int a, int b) : tail(std::min(a, b)), head(std::max(a, b)) {
        if (head - tail < 1) throw std::invalid_argument("degenerate diagonal");
    }

    auto operator<=>(const Diagonal&) const = default;
};

/// Two chords cross iff their endpoints strictly interleave.
inline bool diagonals_cross(const Diagonal& a, const Diagonal& b) {
    return (a.tail < b.tail && b.tail < a.head && a.head < b.head) ||
           (b.tail < a.tail && a.tail < b.head && b.head < a.head);
}

/**
 * A triangulation of the convex N-gon with vertices 0..N-1 labeled
 * counter-clockwise, stored as its set of diagonals.
 */
struct Triangulation {
    int ngon = 3;
    std::set<Diagonal> diagonals;

    auto operator<=>(const Triangulation&) const = default;

    bool is_diagonal_shape(const Diagonal& d) const {
        if (d.tail < 0 || d.head > ngon - 1) return false;
        if (d.head - d.tail < 2) return false;               // polygon side
        if (d.tail == 0 && d.head == ngon - 1) return false; // the closing side
        return true;
    }

    /// Side or diagonal of this triangulation.
    bool is_edge(int a, int b) const {
        if (a > b) std::swap(a, b);
        if (b - a == 1 || (a == 0 && b == ngon - 1)) return true;
        return b - a >= 2 && diagonals.count(Diagonal(a, b)) > 0;
    }

    /// "N; (a,b),(c,d),..." with diagonals in canonical numbering order.
    std::string to_string() const;

    static Triangulation parse(const std::string& text);
};

inline bool validate(const Triangulation& t) {
    if (t.ngon < 3) return false;
    if (static_cast<int>(t.diagonals.size()) != t.ngon - 3) return false;
    for (const auto& d : t.diagonals)
        if (!t.is_diagonal_shape(d)) return false;
    for (auto it = t.diagonals.begin(); it != t.diagonals.end(); ++it)
        for (auto jt = std::next(it); jt != t.diagonals.end(); ++jt)
            if (diagonals_cross(*it, *jt)) return false;
    return true;
}

/**
 * Canonical diagonal numbering: (a,b) precedes (c,d) iff a > c, or
 * a == c and b < d. Tails along this order read off Lambda.
 */
inline std::vector<Diagonal> diag_order(const Triangulation& t) {
    if (!validate(t)) throw std::invalid_argument("invalid triangulation");
    std::vector<Diagonal> out(t.diagonals.begin(), t.diagonals.end());
    std::sort(out.begin(), out.end(), [](const Diagonal& x, const Diagonal& y) {
        if (x.tail != y.tail) return x.tail > y.tail;
        return x.head < y.head;
    });
    return out;
}

/// Lambda: the decreasing sequence of diagonal tails, as a partition.
inline Partition lambda_map(const Triangulation& t) {
    if (!validate(t)) throw std::invalid_argument("invalid triangulation");
    std::vector<int> tails;
    for (const auto& d : t.diagonals) tails.push_back(d.tail);
    return Partition(tails);
}

/**
 * Inverse of Lambda on the N-gon, by the inductive truncation construction:
 * peel the largest row b1, build the triangulation of the truncated polygon,
 * then glue back the diagonal (b1, b1+2).
 */
inline Triangulation lambda_inverse(const Partition& p, int N) {
    if (N < 3) throw std::invalid_argument("need at least a triangle");
    if (!fits_in(p, N - 2)) throw std::invalid_argument("partition does not fit in Y_{N-2}");
    if (p.empty()) {
        Triangulation t{N, {}};
        for (int j = 2; j <= N - 2; ++j) t.diagonals.insert(Diagonal(0, j));
        return t;
    }
    const int b1 = p.row(1);
    std::vector<int> rest(p.rows().begin() + 1, p.rows().end());
    Triangulation inner = lambda_inverse(Partition(rest), N - 1);
    Triangulation t{N, {}};
    for (const auto& d : inner.diagonals) {
        int a = d.tail > b1 ? d.tail + 1 : d.tail;  // reinsert vertex b1+1
        int b = d.head > b1 ? d.head + 1 : d.head;
        t.diagonals.insert(Diagonal(a, b));
    }
    t.diagonals.insert(Diagonal(b1, b1 + 2));
    return t;
}

/**
 * Flip of the diagonal d: in the quadrilateral formed by the two adjacent
 * triangles, replace d by the other diagonal.
 */
inline Triangulation flip_diagonal(const Triangulation& t, const Diagonal& d) {
    if (!t.diagonals.count(d)) throw std::invalid_argument("diagonal not in triangulation");
    // apex on each side of d: the unique w with both (tail,w) and (w,head) edges
    int apex_in = -1, apex_out = -1;
    for (int w = d.tail + 1; w < d.head; ++w)
        if (t.is_edge(d.tail, w) && t.is_edge(w, d.head)) { apex_in = w; break; }
    for (int w = (d.head + 1) % t.ngon; w != d.tail; w = (w + 1) % t.ngon)
        if (t.is_edge(d.tail, w) && t.is_edge(w, d.head)) { apex_out = w; break; }
    if (apex_in < 0 || apex_out < 0) throw std::logic_error("no adjacent triangles");
    Triangulation out = t;
    out.diagonals.erase(d);
    out.diagonals.insert(Diagonal(apex_in, apex_out));
    return out;
}

/// beta on triangulations: relabel v -> v+1 mod N.
inline Triangulation rotate(const Triangulation& t) {
    Triangulation out{t.ngon, {}};
    for (const auto& d : t.diagonals)
        out.diagonals.insert(Diagonal((d.tail + 1) % t.ngon, (d.head + 1) % t.ngon));
    return out;
}

/// alpha on triangulations: relabel v -> N-1-v (fixes side (0, N-1) setwise).
inline Triangulation reflect(const Triangulation& t) {
    Triangulation out{t.ngon, {}};
    for (const auto& d : t.diagonals)
        out.diagonals.insert(Diagonal(t.ngon - 1 - d.tail, t.ngon - 1 - d.head));
    return out;
}

namespace detail {
// Triangulate the polygon induced by the label list: pick the apex of the
// triangle on the edge (first, last) and recurse into the two flanks.
inline void enum_tris(const std::vector<int>& verts, std::set<Diagonal>& acc,
                      std::vector<Triangulation>& out, int ngon) {
    const int m = static_cast<int>(verts.size());
    if (m < 3) {
        Triangulation t{ngon, acc};
        out.push_back(t);
        return;
    }
    // apex verts[i] strictly between verts[0] and verts[m-1]
    for (int i = 1; i < m - 1; ++i) {
        std::set<Diagonal> saved = acc;
        auto add_chord = [&](int a, int b) {
            if (std::abs(a - b) == 1 || (std::min(a, b) == 0 && std::max(a, b) == ngon - 1))
                return;  // polygon side
            acc.insert(Diagonal(a, b));
        };
        add_chord(verts[0], verts[i]);
        add_chord(verts[i], verts[m - 1]);
        std::vector<int> left(verts.begin(), verts.begin() + i + 1);
        std::vector<int> right(verts.begin() + i, verts.end());
        // recurse left, then for each left completion recurse right; since the
        // two flanks are independent we thread the accumulator sequentially
        std::vector<Triangulation> mid;
        enum_tris(left, acc, mid, ngon);
        for (auto& partial : mid) {
            std::set<Diagonal> acc2 = partial.diagonals;
            enum_tris(right, acc2, out, ngon);
        }
        acc = saved;
    }
}
}  // namespace detail

/// All triangulations of the N-gon; |result| = Catalan(N-2).
inline std::vector<Triangulation> enumerate_triangulations(int N) {
    if (N < 3 || N > 12) throw std::invalid_argument("ngon out of the supported range [3,12]");
    std::vector<int> verts(N);
    for (int i = 0; i < N; ++i) verts[i] = i;
    std::set<Diagonal> acc;
    std::vector<Triangulation> out;
    detail::enum_tris(verts, acc, out, N);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::string Triangulation::to_string() const {
    std::ostringstream os;
    os << ngon << ";";
    bool first = true;
    for (const auto& d : diag_order(*this)) {
        os << (first ? " " : ",") << "(" << d.tail << "," << d.head << ")";
        first = false;
    }
    return os.str();
}

inline Triangulation Triangulation::parse(const std::string& text) {
    auto fail = [&] { throw std::invalid_argument("bad triangulation literal: " + text); };
    size_t semi = text.find(';');
    if (semi == std::string::npos) fail();
    Triangulation t;
    t.ngon = std::stoi(text.substr(0, semi));
    std::string rest = text.substr(semi + 1);
    size_t pos = 0;
    while ((pos = rest.find('(', pos)) != std::string::npos) {
        size_t comma = rest.find(',', pos);
        size_t close = rest.find(')', pos);
        if (comma == std::string::npos || close == std::string::npos || comma > close) fail();
        int a = std::stoi(rest.substr(pos + 1, comma - pos - 1));
        int b = std::stoi(rest.substr(comma + 1, close - comma - 1));
        t.diagonals.insert(Diagonal(a, b));
        pos = close + 1;
    }
    return t;
}

}  // namespace yflip
