#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace yflip {

/**
 * Quiver without loops or 2-cycles, possibly with frozen vertices, stored
 * as its skew-symmetric exchange matrix. Vertices are 1-based; vertices
 * 1..mutable_count are mutable, the rest frozen. b(i,j) > 0 means b(i,j)
 * arrows i -> j.
 */
class Quiver {
public:
    Quiver() = default;

    Quiver(int size, int mutable_count) : n_(mutable_count), m_(size), b_(size * size, 0) {
        if (mutable_count < 0 || mutable_count > size)
            throw std::invalid_argument("bad mutable count");
    }

    int size() const { return m_; }
    int mutable_count() const { return n_; }
    bool is_frozen(int v) const { return v > n_; }

    int b(int i, int j) const { return b_[idx(i, j)]; }

    void add_arrow(int i, int j, int mult = 1) {
        if (i == j) throw std::invalid_argument("loops are not allowed");
        b_[idx(i, j)] += mult;
        b_[idx(j, i)] -= mult;
    }

    bool operator==(const Quiver&) const = default;
    auto operator<=>(const Quiver&) const = default;

    /// Matrix mutation at mutable vertex k; frozen-frozen arrows dropped.
    Quiver mutated(int k) const {
        if (k < 1 || k > n_) throw std::invalid_argument("not a mutable vertex");
        Quiver out = *this;
        for (int i = 1; i <= m_; ++i)
            for (int j = 1; j <= m_; ++j) {
                if (i == k || j == k)
                    out.b_[idx(i, j)] = -b(i, j);
                else
                    out.b_[idx(i, j)] =
                        b(i, j) + (std::abs(b(i, k)) * b(k, j) + b(i, k) * std::abs(b(k, j))) / 2;
            }
        for (int i = n_ + 1; i <= m_; ++i)
            for (int j = n_ + 1; j <= m_; ++j) out.b_[idx(i, j)] = 0;
        return out;
    }

    /**
     * Pictorial form of the same rule, kept as an independent implementation
     * for cross-validation: reverse arrows at k, and for each path
     * i ->q k ->r j adjust the i -> j count by q*r.
     */
    Quiver mutated_pictorial(int k) const {
        if (k < 1 || k > n_) throw std::invalid_argument("not a mutable vertex");
        Quiver out = *this;
        for (int i = 1; i <= m_; ++i)
            for (int j = 1; j <= m_; ++j) {
                if (i == k || j == k) continue;
                int q = b(i, k);  // arrows i -> k
                int r = b(k, j);  // arrows k -> j
                if (q > 0 && r > 0) out.b_[idx(i, j)] += q * r;
                out.b_[idx(j, i)] = -out.b_[idx(i, j)];
            }
        for (int i = 1; i <= m_; ++i) {
            out.b_[idx(i, k)] = -b(i, k);
            out.b_[idx(k, i)] = -b(k, i);
        }
        for (int i = n_ + 1; i <= m_; ++i)
            for (int j = n_ + 1; j <= m_; ++j) out.b_[idx(i, j)] = 0;
        return out;
    }

private:
    int idx(int i, int j) const {
        if (i < 1 || i > m_ || j < 1 || j > m_) throw std::out_of_range("vertex out of range");
        return (i - 1) * m_ + (j - 1);
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<int> b_;
};

/// Linear orientation 1 -> 2 -> ... -> n of the type A diagram.
inline Quiver quiver_An(int n) {
    Quiver q(n, n);
    for (int i = 1; i < n; ++i) q.add_arrow(i, i + 1);
    return q;
}

/// Alternating orientation with odd vertices as sources: 1 -> 2 <- 3 -> 4 ...
inline Quiver quiver_An_alt(int n) {
    Quiver q(n, n);
    for (int i = 1; i < n; ++i) {
        if (i % 2 == 1)
            q.add_arrow(i, i + 1);
        else
            q.add_arrow(i + 1, i);
    }
    return q;
}

/// Truncation of the D-type infinite quiver: sources 1 and 2 into 3,
/// then the chain 3 -> 4 -> ... -> N.
inline Quiver quiver_Dinfty_window(int N) {
    if (N < 3) throw std::invalid_argument("window must cover the fork");
    Quiver q(N, N);
    q.add_arrow(1, 3);
    q.add_arrow(2, 3);
    for (int i = 3; i < N; ++i) q.add_arrow(i, i + 1);
    return q;
}

/**
 * Exact isomorphism test by exhaustive permutation, respecting the
 * mutable/frozen split. Sizes up to 9 mutable vertices.
 */
inline bool quiver_isomorphic(const Quiver& a, const Quiver& b) {
    if (a.size() != b.size() || a.mutable_count() != b.mutable_count()) return false;
    const int n = a.mutable_count();
    const int m = a.size();
    if (n > 9) throw std::invalid_argument("isomorphism budget exceeded");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> frozen(m - n);
    std::iota(frozen.begin(), frozen.end(), n + 1);
    do {
        std::vector<int> fperm = frozen;
        bool found = false;
        do {
            auto image = [&](int v) { return v <= n ? perm[v - 1] : fperm[v - n - 1]; };
            bool ok = true;
            for (int i = 1; i <= m && ok; ++i)
                for (int j = 1; j <= m && ok; ++j)
                    if (a.b(i, j) != b.b(image(i), image(j))) ok = false;
            if (ok) found = true;
        } while (!found && std::next_permutation(fperm.begin(), fperm.end()));
        if (found) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace yflip
