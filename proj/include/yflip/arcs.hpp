#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "yflip/triangulation.hpp"

namespace yflip {

/// Arc connecting two non-neighboring integers on the line, m < n.
struct Arc {
    int m;
    int n;

    Arc(int a, int b) : m(std::min(a, b)), n(std::max(a, b)) {
        if (n - m < 2) throw std::invalid_argument("endpoints must be non-neighboring");
    }

    auto operator<=>(const Arc&) const = default;

    std::string to_string() const {
        return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
    }
};

inline bool crossing(const Arc& a, const Arc& b) {
    return (a.m < b.m && b.m < a.n && a.n < b.n) || (b.m < a.m && a.m < b.n && b.n < a.n);
}

enum class ArcFamilyKind { explicit_set, fountain_T0, leapfrog_T0prime, fountain_spaced,
                           leapfrog_shifted };

/**
 * Maximal non-crossing arc collections built from parametric families, handled
 * through finite windows, plus explicit finite sets.
 */
struct ArcFamily {
    ArcFamilyKind kind = ArcFamilyKind::explicit_set;
    int center = 0;           // fountain kinds only
    std::set<Arc> arcs;       // explicit kind only

    static ArcFamily explicit_set(std::set<Arc> arcs) {
        ArcFamily f;
        f.kind = ArcFamilyKind::explicit_set;
        f.arcs = std::move(arcs);
        return f;
    }
    static ArcFamily fountain(int center) {
        return ArcFamily{ArcFamilyKind::fountain_T0, center, {}};
    }
    static ArcFamily leapfrog() { return ArcFamily{ArcFamilyKind::leapfrog_T0prime, 0, {}}; }
    static ArcFamily fountain_spaced(int center) {
        return ArcFamily{ArcFamilyKind::fountain_spaced, center, {}};
    }
    static ArcFamily leapfrog_shifted() {
        return ArcFamily{ArcFamilyKind::leapfrog_shifted, 0, {}};
    }

    /// Family spec strings: "fountain:5", "leapfrog", "fountain-spaced:5",
    /// "leapfrog-shifted".
    static ArcFamily parse(const std::string& text) {
        auto colon = text.find(':');
        std::string head = text.substr(0, colon);
        int arg = colon == std::string::npos ? 0 : std::stoi(text.substr(colon + 1));
        if (head == "fountain") return fountain(arg);
        if (head == "leapfrog") return leapfrog();
        if (head == "fountain-spaced") return fountain_spaced(arg);
        if (head == "leapfrog-shifted") return leapfrog_shifted();
        throw std::invalid_argument("unknown family: " + text);
    }
};

/// All family arcs with both endpoints inside [lo, hi].
inline std::set<Arc> materialize(const ArcFamily& f, int lo, int hi) {
    if (lo >= hi) throw std::invalid_argument("bad window");
    std::set<Arc> out;
    auto put = [&](int a, int b) {
        if (a >= lo && b <= hi && b - a >= 2) out.insert(Arc(a, b));
    };
    switch (f.kind) {
        case ArcFamilyKind::explicit_set:
            for (const auto& a : f.arcs)
                if (a.m >= lo && a.n <= hi) out.insert(a);
            break;
        case ArcFamilyKind::fountain_T0:
            // {(c-k, c), (c, c+k) : k >= 2}
            for (int k = 2; k <= hi - lo; ++k) {
                put(f.center - k, f.center);
                put(f.center, f.center + k);
            }
            break;
        case ArcFamilyKind::fountain_spaced:
            // even-spread variant {(c-2k, c), (c, c+2k) : k >= 1}
            for (int k = 1; 2 * k <= hi - lo; ++k) {
                put(f.center - 2 * k, f.center);
                put(f.center, f.center + 2 * k);
            }
            break;
        case ArcFamilyKind::leapfrog_T0prime:
            // {(-n, n), (-n, n+1) : n >= 1}
            for (int n = 1; n <= std::max(std::abs(lo), std::abs(hi)); ++n) {
                put(-n, n);
                put(-n, n + 1);
            }
            break;
        case ArcFamilyKind::leapfrog_shifted:
            // {(-n, n), (-(n+1), n) : n >= 1}
            for (int n = 1; n <= std::max(std::abs(lo), std::abs(hi)); ++n) {
                put(-n, n);
                put(-(n + 1), n);
            }
            break;
    }
    return out;
}

struct Classification {
    bool is_fountain = false;
    int center = 0;  // meaningful when is_fountain
    bool operator==(const Classification&) const = default;
};

/**
 * Fountain kinds have infinitely many left and right arcs at the center;
 * the leapfrog kinds have finitely many arcs at every integer.
 */
inline Classification classify(const ArcFamily& f) {
    switch (f.kind) {
        case ArcFamilyKind::fountain_T0:
        case ArcFamilyKind::fountain_spaced:
            return {true, f.center};
        case ArcFamilyKind::leapfrog_T0prime:
        case ArcFamilyKind::leapfrog_shifted:
            return {false, 0};
        case ArcFamilyKind::explicit_set:
            throw std::invalid_argument("finite data cannot witness either class");
    }
    throw std::logic_error("unreachable");
}

namespace detail {
/// The window's convex hull turns points lo..hi into an N-gon; the hull
/// chord (lo, hi) plays the closing side, never a collection member.
inline Triangulation as_polygon(const std::set<Arc>& coll, int lo, int hi) {
    Triangulation t{hi - lo + 1, {}};
    for (const auto& a : coll) {
        if (a.m < lo || a.n > hi) throw std::invalid_argument("arc outside the window");
        if (a.m == lo && a.n == hi)
            throw std::invalid_argument("the hull chord is implicit, not a member");
        t.diagonals.insert(Diagonal(a.m - lo, a.n - lo));
    }
    return t;
}

inline std::set<Arc> from_polygon(const Triangulation& t, int lo) {
    std::set<Arc> out;
    for (const auto& d : t.diagonals) out.insert(Arc(d.tail + lo, d.head + lo));
    return out;
}
}  // namespace detail

/// Inclusion-maximal among non-crossing window arcs (hull chord implicit).
inline bool windowed_maximal(const std::set<Arc>& coll, int lo, int hi) {
    return validate(detail::as_polygon(coll, lo, hi));
}

struct NoUniqueReplacement : std::runtime_error {
    NoUniqueReplacement() : std::runtime_error("flip is not localized by the window") {}
};

enum class FlipMode {
    polygon,  // the hull chord is a real side; flips may lean on it
    clipped   // a flip whose quadrilateral needs the hull is not localized
};

/**
 * Flip inside a window: remove a and insert the unique other arc keeping
 * the collection maximal. In clipped mode a flip adjacent to the window's
 * hull is rejected, since only a larger window could certify what the
 * infinite collection does there.
 */
inline std::set<Arc> flip_arc(const std::set<Arc>& coll, const Arc& a, int lo, int hi,
                              FlipMode mode = FlipMode::polygon) {
    if (!coll.count(a)) throw std::invalid_argument("arc not in collection");
    Triangulation t = detail::as_polygon(coll, lo, hi);
    if (!validate(t)) throw std::invalid_argument("collection is not maximal in the window");
    Diagonal d(a.m - lo, a.n - lo);
    Triangulation flipped = flip_diagonal(t, d);
    if (mode == FlipMode::clipped) {
        // reject if either triangle of the flip quadrilateral has the hull
        // chord (0, N-1) as an edge
        Diagonal repl(0, 1);
        bool found = false;
        for (const auto& e : flipped.diagonals)
            if (!t.diagonals.count(e)) {
                repl = e;
                found = true;
            }
        if (!found) throw std::logic_error("flip produced no new arc");
        const int last = t.ngon - 1;
        auto uses_hull = [&](const Diagonal& x, const Diagonal& y) {
            // the quadrilateral x cup y has vertices {x.tail, x.head,
            // y.tail, y.head}; hull participates iff 0 and last are both
            // corners and (0, last) is one of its four sides
            std::set<int> corners{x.tail, x.head, y.tail, y.head};
            if (!corners.count(0) || !corners.count(last)) return false;
            std::vector<int> cyc(corners.begin(), corners.end());
            for (size_t i = 0; i < cyc.size(); ++i)
                if ((cyc[i] == 0 && cyc[(i + 1) % cyc.size()] == last) ||
                    (cyc[i] == last && cyc[(i + 1) % cyc.size()] == 0))
                    return true;
            return false;
        };
        if (uses_hull(d, repl)) throw NoUniqueReplacement();
    }
    return detail::from_polygon(flipped, lo);
}

/// Triangulation of the N-gon as a windowed arc collection on 0..N-1.
inline std::set<Arc> arcs_of_triangulation(const Triangulation& t) {
    std::set<Arc> out;
    for (const auto& d : t.diagonals) out.insert(Arc(d.tail, d.head));
    return out;
}

/**
 * Finite shadow of fountain flip-reachability: explore all <= B flip
 * descendants of the materialized fountain and report whether every arc
 * ever seen satisfies the sign condition (k - c)(l - c) >= 0, i.e. no arc
 * jumps over the fountain's center.
 */
inline bool reachability_window_check(const ArcFamily& f, int lo, int hi, int budget) {
    Classification cls = classify(f);
    if (!cls.is_fountain) throw std::invalid_argument("family has no fountain");
    const int c = cls.center;
    std::set<std::set<Arc>> seen;
    std::vector<std::set<Arc>> frontier{materialize(f, lo, hi)};
    seen.insert(frontier.front());
    for (int step = 0; step <= budget; ++step) {
        for (const auto& coll : frontier)
            for (const auto& a : coll)
                if ((a.m - c) * static_cast<long long>(a.n - c) < 0) return false;
        if (step == budget) break;
        std::vector<std::set<Arc>> next;
        for (const auto& coll : frontier)
            for (const auto& a : coll) {
                std::set<Arc> flipped;
                try {
                    flipped = flip_arc(coll, a, lo, hi, FlipMode::clipped);
                } catch (const NoUniqueReplacement&) {
                    continue;  // not localized; a larger window would decide it
                }
                if (seen.insert(flipped).second) next.push_back(flipped);
            }
        frontier = std::move(next);
    }
    return true;
}

}  // namespace yflip
