#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace yflip {

/**
 * A partition, i.e. a weakly decreasing sequence of positive integers,
 * viewed as a Young diagram. Stored in canonical form (no zero rows);
 * row indices are 1-based and rows past the stored length read as 0.
 */
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> rows) : rows_(std::move(rows)) {
        // canonicalize: sort decreasing, strip zeros
        std::sort(rows_.begin(), rows_.end(), std::greater<int>());
        while (!rows_.empty() && rows_.back() <= 0) {
            if (rows_.back() < 0) throw std::invalid_argument("negative row length");
            rows_.pop_back();
        }
    }

    Partition(std::initializer_list<int> rows) : Partition(std::vector<int>(rows)) {}

    /// Length of row k (1-based); 0 past the stored rows.
    int row(int k) const {
        if (k < 1) throw std::out_of_range("row index is 1-based");
        return k <= static_cast<int>(rows_.size()) ? rows_[k - 1] : 0;
    }

    int num_rows() const { return static_cast<int>(rows_.size()); }
    const std::vector<int>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }

    /// Total number of cells.
    long long weight() const {
        long long s = 0;
        for (int r : rows_) s += r;
        return s;
    }

    auto operator<=>(const Partition&) const = default;

    /// Textual form "[4,2,2]"; empty partition is "[]".
    std::string to_string() const {
        std::string s = "[";
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(rows_[i]);
        }
        s += ']';
        return s;
    }

    static Partition parse(const std::string& text) {
        auto fail = [&] { throw std::invalid_argument("bad partition literal: " + text); };
        size_t a = text.find('[');
        size_t b = text.rfind(']');
        if (a == std::string::npos || b == std::string::npos || b < a) fail();
        std::string body = text.substr(a + 1, b - a - 1);
        std::vector<int> rows;
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.find_first_not_of(" \t") == std::string::npos) continue;
            rows.push_back(std::stoi(tok));
        }
        return Partition(rows);
    }

private:
    std::vector<int> rows_;
};

/// p lies weakly above the line y = x - n, i.e. p_i + i <= n for every row.
inline bool fits_in(const Partition& p, int n) {
    for (int i = 1; i <= p.num_rows(); ++i)
        if (p.row(i) + i > n) return false;
    return true;
}

/// All diagrams of Y_n, sorted; |Y_n| = Catalan(n).
inline std::vector<Partition> enumerate_fitting(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    // rows_ are built largest-first; row i may be at most min(prev, n - i)
    std::function<void(int, int)> rec = [&](int i, int cap) {
        out.emplace_back(cur);
        for (int len = std::min(cap, n - i); len >= 1; --len) {
            cur.push_back(len);
            rec(i + 1, len);
            cur.pop_back();
        }
    };
    rec(1, n);
    std::sort(out.begin(), out.end());
    return out;
}

/**
 * Flip in row k. The row is removed and a row of length l is inserted,
 * with l given by the two-case rule:
 *   equal next row:   l = k + mu_k - max{m < k : m + mu_m >= k + mu_k}  (or k + mu_k)
 *   shorter next row: l = k + mu_k - min{m > k : m + mu_m >= k + mu_k}  (or 0)
 * Zero rows always fall into the equality case.
 */
inline Partition flip_row(const Partition& p, int k) {
    if (k < 1) throw std::invalid_argument("row index must be positive");
    const int mk = p.row(k);
    const int target = k + mk;
    int l;
    if (p.row(k + 1) == mk) {
        int best = 0;  // max of T_k, 0 when empty
        for (int m = 1; m < k; ++m)
            if (m + p.row(m) >= target) best = m;
        l = target - best;
    } else {
        l = 0;  // fallback when T_k empty
        for (int m = k + 1; m <= target; ++m) {
            if (m + p.row(m) >= target) {
                l = target - m;
                break;
            }
        }
    }
    std::vector<int> rows = p.rows();
    if (k <= p.num_rows()) rows.erase(rows.begin() + (k - 1));
    if (l > 0) rows.push_back(l);
    return Partition(rows);
}

/// The n-1 flip neighbours of p inside Y_n.
inline std::set<Partition> flip_neighbors(const Partition& p, int n) {
    if (!fits_in(p, n)) throw std::invalid_argument("partition does not fit in Y_n");
    std::set<Partition> out;
    for (int k = 1; k <= n - 1; ++k) out.insert(flip_row(p, k));
    return out;
}

/**
 * Heads l_1..l_{n-1} of the diagonals of the triangulation corresponding
 * to p in the (n+2)-gon:
 *   l_k = 1 + (k + d_k - max({m < k : m + d_m > k + d_k} U {0})).
 */
inline std::vector<int> heads(const Partition& p, int n) {
    if (!fits_in(p, n)) throw std::invalid_argument("partition does not fit in Y_n");
    std::vector<int> out;
    out.reserve(std::max(0, n - 1));
    for (int k = 1; k <= n - 1; ++k) {
        const int target = k + p.row(k);
        int best = 0;
        for (int m = 1; m < k; ++m)
            if (m + p.row(m) > target) best = m;
        out.push_back(1 + target - best);
    }
    return out;
}

/// Conjugate partition (reflect the diagram across the main diagonal).
inline Partition transpose(const Partition& p) {
    std::vector<int> cols;
    for (int c = 1; c <= p.row(1); ++c) {
        int len = 0;
        while (len < p.num_rows() && p.row(len + 1) >= c) ++len;
        cols.push_back(len);
    }
    return Partition(cols);
}

/// Reflection over the perpendicular bisector of side (0, n+1):
/// alpha A = (n+1-l_{n-1}, ..., n+1-l_1), canonicalized.
inline Partition act_alpha(const Partition& p, int n) {
    auto ls = heads(p, n);
    std::vector<int> rows;
    for (int l : ls) rows.push_back(n + 1 - l);
    return Partition(rows);
}

/// Rotation by 2*pi/(n+2):
/// each of the rows 1..n-1 gains a square, rows hitting the line drop to 0.
inline Partition act_beta(const Partition& p, int n) {
    if (!fits_in(p, n)) throw std::invalid_argument("partition does not fit in Y_n");
    std::vector<int> rows;
    for (int i = 1; i <= n - 1; ++i) {
        int a = p.row(i);
        rows.push_back(a < n - i ? a + 1 : 0);
    }
    return Partition(rows);
}

/**
 * Element of the dihedral group D_{n+2} in the normal form alpha^r * beta^t
 * (r in {0,1}, t mod n+2).
 */
struct DihedralElement {
    bool reflect = false;
    int rotations = 0;  // exponent of beta, reduced mod modulus
    int modulus = 1;    // n + 2

    static DihedralElement identity(int n) { return {false, 0, n + 2}; }
    static DihedralElement alpha(int n) { return {true, 0, n + 2}; }
    static DihedralElement beta(int n) { return {false, 1, n + 2}; }

    bool operator==(const DihedralElement&) const = default;
};

/// Composition g*h, acting as h first: alpha^a beta^b alpha^c beta^d
/// = alpha^(a+c) beta^((-1)^c b + d).
inline DihedralElement compose(const DihedralElement& g, const DihedralElement& h) {
    if (g.modulus != h.modulus) throw std::invalid_argument("mixed dihedral moduli");
    const int m = g.modulus;
    int t = (h.reflect ? -g.rotations : g.rotations) + h.rotations;
    t = ((t % m) + m) % m;
    return {g.reflect != h.reflect, t, m};
}

inline DihedralElement inverse(const DihedralElement& g) {
    if (g.reflect) return g;  // reflections are involutions
    const int m = g.modulus;
    return {false, (m - g.rotations % m) % m, m};
}

/// Action of g = alpha^r beta^t on Y_n (beta applied first).
inline Partition act(const DihedralElement& g, const Partition& p, int n) {
    if (g.modulus != n + 2) throw std::invalid_argument("group element for the wrong polygon");
    Partition q = p;
    for (int i = 0; i < g.rotations; ++i) q = act_beta(q, n);
    if (g.reflect) q = act_alpha(q, n);
    return q;
}

inline long long catalan(int n) {
    std::vector<long long> c(n + 1, 0);
    c[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j < i; ++j) c[i] += c[j] * c[i - 1 - j];
    return c[n];
}

}  // namespace yflip
