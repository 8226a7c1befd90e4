#pragma once

#include <algorithm>
#include <cctype>
#include <climits>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace yflip {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/**
 * Variable index space. Cluster variables x_i and coefficient symbols c_j
 * live in disjoint integer ranges so one exponent map covers both.
 */
inline int var_x(int i) {
    if (i < 1) throw std::invalid_argument("x index is 1-based");
    return 2 * i;
}
inline int var_c(int j) {
    if (j < 1) throw std::invalid_argument("c index is 1-based");
    return 2 * j + 1;
}
inline bool is_var_x(int v) { return v % 2 == 0; }
inline int var_index(int v) { return is_var_x(v) ? v / 2 : (v - 1) / 2; }

inline std::string var_name(int v) {
    return (is_var_x(v) ? "x" : "c") + std::to_string(var_index(v));
}

/// Finitely supported exponent map; zero exponents never stored.
struct Monomial {
    std::map<int, int> exp;

    void set(int v, int e) {
        if (e == 0)
            exp.erase(v);
        else
            exp[v] = e;
    }
    int get(int v) const {
        auto it = exp.find(v);
        return it == exp.end() ? 0 : it->second;
    }

    auto operator<=>(const Monomial&) const = default;

    Monomial operator*(const Monomial& o) const {
        Monomial m = *this;
        for (const auto& [v, e] : o.exp) m.set(v, m.get(v) + e);
        return m;
    }
    Monomial operator/(const Monomial& o) const {
        Monomial m = *this;
        for (const auto& [v, e] : o.exp) m.set(v, m.get(v) - e);
        return m;
    }

    /// Graded lex: total degree first, then the earlier variable with the
    /// larger exponent wins. Multiplicative, hence safe for division.
    static bool grlex_less(const Monomial& a, const Monomial& b) {
        long long da = 0, db = 0;
        for (const auto& [v, e] : a.exp) da += e;
        for (const auto& [v, e] : b.exp) db += e;
        if (da != db) return da < db;
        auto ia = a.exp.begin(), ib = b.exp.begin();
        while (ia != a.exp.end() || ib != b.exp.end()) {
            int va = ia == a.exp.end() ? INT_MAX : ia->first;
            int vb = ib == b.exp.end() ? INT_MAX : ib->first;
            int v = std::min(va, vb);
            int ea = va == v ? ia->second : 0;
            int eb = vb == v ? ib->second : 0;
            if (ea != eb) return ea < eb;
            if (va == v) ++ia;
            if (vb == v) ++ib;
        }
        return false;
    }
};

/**
 * Sparse Laurent polynomial with arbitrary-precision integer coefficients.
 * The stored form is canonical: equal polynomials compare equal as maps.
 */
class Laurent {
public:
    Laurent() = default;

    /*implicit*/ Laurent(long long c) {
        if (c != 0) terms_[Monomial{}] = c;
    }
    /*implicit*/ Laurent(BigInt c) {
        if (c != 0) terms_[Monomial{}] = std::move(c);
    }

    static Laurent variable(int v, int power = 1) {
        Laurent p;
        Monomial m;
        m.set(v, power);
        p.terms_[m] = 1;
        return p;
    }
    static Laurent x(int i, int power = 1) { return variable(var_x(i), power); }
    static Laurent c(int j, int power = 1) { return variable(var_c(j), power); }

    const std::map<Monomial, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const Laurent&) const = default;
    auto operator<=>(const Laurent&) const = default;

    Laurent operator+(const Laurent& o) const {
        Laurent r = *this;
        for (const auto& [m, c] : o.terms_) {
            BigInt& slot = r.terms_[m];
            slot += c;
            if (slot == 0) r.terms_.erase(m);
        }
        return r;
    }
    Laurent operator-() const {
        Laurent r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    Laurent operator-(const Laurent& o) const { return *this + (-o); }

    Laurent operator*(const Laurent& o) const {
        Laurent r;
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) {
                Monomial m = m1 * m2;
                BigInt& slot = r.terms_[m];
                slot += c1 * c2;
                if (slot == 0) r.terms_.erase(m);
            }
        return r;
    }

    /// Multiply by a bare monomial (cheap shift).
    Laurent shifted(const Monomial& m) const {
        Laurent r;
        for (const auto& [mm, c] : terms_) r.terms_[mm * m] = c;
        return r;
    }

    bool all_coefficients_positive() const {
        for (const auto& [m, c] : terms_)
            if (c <= 0) return false;
        return true;
    }

    /// Componentwise minimum exponent of each appearing variable.
    std::map<int, int> min_exponents() const {
        std::map<int, int> out;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.exp) out[v] = 0;
        for (auto& [v, e] : out) {
            bool started = false;
            for (const auto& [m, c] : terms_) {
                int ex = m.get(v);
                e = started ? std::min(e, ex) : ex;
                started = true;
            }
        }
        return out;
    }

    /// Deterministic textual form, e.g. "x1^-1*x2 + 2*c3 - 1".
    std::string to_string() const;

    static Laurent parse(const std::string& text);

    /// Exact evaluation; throws on zero under a negative exponent.
    BigRational eval(const std::map<int, BigRational>& assignment) const {
        BigRational total = 0;
        for (const auto& [m, c] : terms_) {
            BigRational term = BigRational(c);
            for (const auto& [v, e] : m.exp) {
                auto it = assignment.find(v);
                BigRational val = it == assignment.end() ? BigRational(1) : it->second;
                if (val == 0 && e < 0) throw std::domain_error("zero under a negative exponent");
                BigRational pw = 1;
                for (int i = 0; i < std::abs(e); ++i) pw *= val;
                if (e < 0) pw = BigRational(1) / pw;
                term *= pw;
            }
            total += term;
        }
        return total;
    }

private:
    std::map<Monomial, BigInt> terms_;
    friend Laurent div_exact(const Laurent&, const Laurent&);
};

struct NotDivisible : std::runtime_error {
    NotDivisible() : std::runtime_error("no Laurent quotient exists") {}
};

/**
 * Exact division: returns q with q*b == a, throws NotDivisible otherwise.
 * Both operands are shifted to honest polynomials, then divided by
 * leading-term elimination under graded lex.
 */
inline Laurent div_exact(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero");
    if (a.is_zero()) return Laurent();

    // shift so every variable has minimum exponent exactly 0; then Laurent
    // divisibility reduces to polynomial divisibility
    auto normalize = [](const Laurent& p, Monomial& shift_out) {
        Monomial shift;
        for (const auto& [v, e] : p.min_exponents()) shift.set(v, -e);
        shift_out = shift;
        return p.shifted(shift);
    };
    Monomial sa, sb;
    Laurent pa = normalize(a, sa);
    Laurent pb = normalize(b, sb);

    // long division: repeatedly cancel the grlex-leading term
    auto leading = [](const Laurent& p) {
        auto best = p.terms().begin();
        for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
            if (Monomial::grlex_less(best->first, it->first)) best = it;
        return best;
    };
    Laurent q;
    Laurent rem = pa;
    auto lead_b = leading(pb);
    while (!rem.is_zero()) {
        auto lead_r = leading(rem);
        Monomial qm = lead_r->first / lead_b->first;
        for (const auto& [v, e] : qm.exp)
            if (e < 0) throw NotDivisible();
        if (lead_r->second % lead_b->second != 0) throw NotDivisible();
        BigInt qc = lead_r->second / lead_b->second;
        Laurent t;
        t = Laurent(qc).shifted(qm);
        q = q + t;
        rem = rem - t * pb;
    }
    // undo the two monomial shifts: q * x^sb / x^sa
    Monomial undo = sb / sa;
    return q.shifted(undo);
}

inline std::string Laurent::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print in descending grlex order for readability
    std::vector<const std::pair<const Monomial, BigInt>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](auto* l, auto* r) {
        return Monomial::grlex_less(r->first, l->first);
    });
    for (auto* t : ts) {
        const BigInt& c = t->second;
        BigInt abs_c = c < 0 ? BigInt(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool printed_coeff = false;
        if (abs_c != 1 || t->first.exp.empty()) {
            os << abs_c;
            printed_coeff = true;
        }
        bool first_var = true;
        for (const auto& [v, e] : t->first.exp) {
            if (printed_coeff || !first_var) os << "*";
            os << var_name(v);
            if (e != 1) os << "^" << e;
            first_var = false;
        }
    }
    return os.str();
}

inline Laurent Laurent::parse(const std::string& text) {
    auto fail = [&] { throw std::invalid_argument("bad polynomial literal: " + text); };
    Laurent total;
    size_t i = 0;
    const size_t n = text.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i == n) fail();
    bool expect_term = true;
    int sign = 1;
    while (i < n) {
        skip_ws();
        if (i >= n) break;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -sign : sign;
            ++i;
            expect_term = true;
            continue;
        }
        if (!expect_term) fail();
        BigInt coeff = 1;
        Monomial mono;
        bool saw_factor = false;
        while (true) {
            skip_ws();
            if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                size_t j = i;
                while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                coeff *= BigInt(text.substr(i, j - i));
                i = j;
                saw_factor = true;
            } else if (i < n && (text[i] == 'x' || text[i] == 'c')) {
                bool is_x = text[i] == 'x';
                ++i;
                size_t j = i;
                while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                if (j == i) fail();
                int idx = std::stoi(text.substr(i, j - i));
                i = j;
                int e = 1;
                if (i < n && text[i] == '^') {
                    ++i;
                    size_t k = i;
                    if (k < n && text[k] == '-') ++k;
                    size_t j2 = k;
                    while (j2 < n && std::isdigit(static_cast<unsigned char>(text[j2]))) ++j2;
                    if (j2 == k) fail();
                    e = std::stoi(text.substr(i, j2 - i));
                    i = j2;
                }
                int v = is_x ? var_x(idx) : var_c(idx);
                mono.set(v, mono.get(v) + e);
                saw_factor = true;
            } else {
                break;
            }
            skip_ws();
            if (i < n && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!saw_factor) fail();
        Laurent term = Laurent(sign * coeff).shifted(mono);
        total = total + term;
        sign = 1;
        expect_term = false;
    }
    if (expect_term) fail();
    return total;
}

}  // namespace yflip
