#ifndef TAME_STAR_HPP
#define TAME_STAR_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace tame
{

// Exact rationals. mpq_class keeps the canonical form (den > 0, reduced) after
// every arithmetic operation; only construction from raw parts needs canonicalize().
using Rational = mpq_class;

inline Rational make_rational(const std::string &num, const std::string &den = "1")
{
    Rational r{mpz_class(num), mpz_class(den)};
    if (r.get_den() == 0) {
        throw std::invalid_argument("zero denominator in rational literal");
    }
    r.canonicalize();
    return r;
}

// n/d in canonical form.
inline Rational ratio(long n, long d)
{
    if (d == 0) {
        throw std::invalid_argument("zero denominator");
    }
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline Rational parse_rational(const std::string &text)
{
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return make_rational(text);
    }
    return make_rational(text.substr(0, slash), text.substr(slash + 1));
}

inline std::string to_string(const Rational &q)
{
    return q.get_str();
}

inline std::size_t hash_rational(const Rational &q)
{
    // Good enough for bucketing: low limbs of numerator and denominator.
    const auto n = q.get_num().get_si();
    const auto d = q.get_den().get_si();
    return std::hash<long>{}(n) * 1000003u ^ std::hash<long>{}(d);
}

// An element of the tame extension M* of (Q,<,+): a finite formal sum
// sum_e q_e * scale^e. Exponent 0 is the standard part, e > 0 are infinite
// scales (omega^e) and e < 0 infinitesimal scales (eps^-e). Terms are kept
// sorted by decreasing exponent, without zero coefficients.
class StarNum
{
public:
    using term = std::pair<int, Rational>;

    StarNum() = default;
    StarNum(const Rational &q)
    {
        if (q != 0) {
            m_terms.emplace_back(0, q);
        }
    }
    StarNum(long v) : StarNum(Rational(v)) {}

    static StarNum eps()
    {
        return scale(-1);
    }
    static StarNum omega()
    {
        return scale(1);
    }
    static StarNum scale(int e, const Rational &q = 1)
    {
        StarNum r;
        if (q != 0) {
            r.m_terms.emplace_back(e, q);
        }
        return r;
    }
    static StarNum from_terms(std::vector<term> ts)
    {
        StarNum r;
        for (auto &[e, q] : ts) {
            r += scale(e, q);
        }
        return r;
    }

    const std::vector<term> &terms() const
    {
        return m_terms;
    }
    bool is_zero() const
    {
        return m_terms.empty();
    }
    // True iff the number lies in the embedded copy of Q.
    bool is_standard() const
    {
        return m_terms.empty() || (m_terms.size() == 1 && m_terms.front().first == 0);
    }
    Rational coeff(int e) const
    {
        for (const auto &[ee, q] : m_terms) {
            if (ee == e) {
                return q;
            }
        }
        return 0;
    }
    // Requires is_standard().
    Rational standard_value() const
    {
        if (!is_standard()) {
            throw std::logic_error("standard_value() of a nonstandard star number");
        }
        return coeff(0);
    }
    int sign() const
    {
        return m_terms.empty() ? 0 : sgn(m_terms.front().second);
    }

    StarNum &operator+=(const StarNum &o)
    {
        std::vector<term> out;
        out.reserve(m_terms.size() + o.m_terms.size());
        auto i = m_terms.begin();
        auto j = o.m_terms.begin();
        while (i != m_terms.end() || j != o.m_terms.end()) {
            if (j == o.m_terms.end() || (i != m_terms.end() && i->first > j->first)) {
                out.push_back(*i++);
            } else if (i == m_terms.end() || j->first > i->first) {
                out.push_back(*j++);
            } else {
                Rational s = i->second + j->second;
                if (s != 0) {
                    out.emplace_back(i->first, std::move(s));
                }
                ++i;
                ++j;
            }
        }
        m_terms = std::move(out);
        return *this;
    }
    StarNum &operator-=(const StarNum &o)
    {
        return *this += -o;
    }
    StarNum &operator*=(const Rational &q)
    {
        if (q == 0) {
            m_terms.clear();
        } else {
            for (auto &t : m_terms) {
                t.second *= q;
            }
        }
        return *this;
    }
    friend StarNum operator-(StarNum a)
    {
        for (auto &t : a.m_terms) {
            t.second = -t.second;
        }
        return a;
    }
    friend StarNum operator+(StarNum a, const StarNum &b)
    {
        return a += b;
    }
    friend StarNum operator-(StarNum a, const StarNum &b)
    {
        return a -= b;
    }
    friend StarNum operator*(StarNum a, const Rational &q)
    {
        return a *= q;
    }
    friend StarNum operator*(const Rational &q, StarNum a)
    {
        return a *= q;
    }
    friend StarNum operator/(StarNum a, const Rational &q)
    {
        return a *= Rational(1 / q);
    }

    friend bool operator==(const StarNum &a, const StarNum &b)
    {
        return a.m_terms == b.m_terms;
    }
    // Lexicographic by scale: the sign of the difference is the sign of its
    // coefficient at the largest exponent where the two numbers differ.
    friend std::strong_ordering operator<=>(const StarNum &a, const StarNum &b)
    {
        const int s = (a - b).sign();
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::size_t hash() const
    {
        std::size_t h = 0x9e3779b9u;
        for (const auto &[e, q] : m_terms) {
            h = h * 31u + std::hash<int>{}(e);
            h = h * 31u + hash_rational(q);
        }
        return h;
    }

private:
    std::vector<term> m_terms;
};

// Standard part: a rational, or +/- infinity.
class StdValue
{
public:
    enum class kind { neg_inf, finite, pos_inf };

    StdValue(const Rational &q) : m_kind(kind::finite), m_value(q) {}
    static StdValue pos_inf()
    {
        return StdValue(kind::pos_inf);
    }
    static StdValue neg_inf()
    {
        return StdValue(kind::neg_inf);
    }

    kind get_kind() const
    {
        return m_kind;
    }
    bool is_finite() const
    {
        return m_kind == kind::finite;
    }
    const Rational &value() const
    {
        if (!is_finite()) {
            throw std::logic_error("value() of an infinite standard part");
        }
        return m_value;
    }

    friend bool operator==(const StdValue &a, const StdValue &b)
    {
        return a.m_kind == b.m_kind && (!a.is_finite() || a.m_value == b.m_value);
    }
    friend std::strong_ordering operator<=>(const StdValue &a, const StdValue &b)
    {
        if (a.m_kind != b.m_kind) {
            return static_cast<int>(a.m_kind) <=> static_cast<int>(b.m_kind);
        }
        if (!a.is_finite()) {
            return std::strong_ordering::equal;
        }
        const int c = cmp(a.m_value, b.m_value);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string str() const
    {
        switch (m_kind) {
            case kind::neg_inf:
                return "-inf";
            case kind::pos_inf:
                return "+inf";
            default:
                return to_string(m_value);
        }
    }

private:
    explicit StdValue(kind k) : m_kind(k) {}
    kind m_kind;
    Rational m_value;
};

// sup{q in Q : q <= a}. Total, since every element of M* has a rational cut.
inline StdValue std_part(const StarNum &a)
{
    if (!a.terms().empty() && a.terms().front().first > 0) {
        return a.sign() > 0 ? StdValue::pos_inf() : StdValue::neg_inf();
    }
    return StdValue(a.coeff(0));
}

// Sign of a - std(a) for finite std(a); 0 when a is standard.
inline int infinitesimal_sign(const StarNum &a)
{
    for (const auto &[e, q] : a.terms()) {
        if (e < 0) {
            return sgn(q);
        }
    }
    return 0;
}

inline std::string to_string(const StarNum &a)
{
    if (a.is_standard()) {
        return to_string(a.standard_value());
    }
    if (a == StarNum::eps()) {
        return "eps";
    }
    if (a == StarNum::omega()) {
        return "omega";
    }
    std::ostringstream os;
    os << "(star";
    for (const auto &[e, q] : a.terms()) {
        os << " (" << e << ' ' << to_string(q) << ')';
    }
    os << ')';
    return os.str();
}

inline std::ostream &operator<<(std::ostream &os, const StarNum &a)
{
    return os << to_string(a);
}

using StarPoint = std::vector<StarNum>;

} // namespace tame

#endif // TAME_STAR_HPP
