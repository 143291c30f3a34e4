#ifndef TAME_FORMULA_HPP
#define TAME_FORMULA_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <tame/star.hpp>

namespace tame
{

using Assignment = std::map<std::string, StarNum>;

class EvalError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// sum_v c_v * v + constant. Coefficients are rational and nonzero, sorted by
// variable name; the constant may be a star number.
class LinTerm
{
public:
    using entry = std::pair<std::string, Rational>;

    LinTerm() = default;
    LinTerm(const StarNum &c) : m_const(c) {}
    LinTerm(const Rational &c) : m_const(c) {}
    static LinTerm var(const std::string &v, const Rational &c = 1)
    {
        LinTerm t;
        if (c != 0) {
            t.m_coeffs.emplace_back(v, c);
        }
        return t;
    }

    const std::vector<entry> &coeffs() const
    {
        return m_coeffs;
    }
    const StarNum &constant() const
    {
        return m_const;
    }
    bool is_constant() const
    {
        return m_coeffs.empty();
    }
    Rational coeff(const std::string &v) const
    {
        auto it = std::lower_bound(m_coeffs.begin(), m_coeffs.end(), v,
                                   [](const entry &e, const std::string &s) { return e.first < s; });
        return (it != m_coeffs.end() && it->first == v) ? it->second : Rational(0);
    }
    bool mentions(const std::string &v) const
    {
        return coeff(v) != 0;
    }
    LinTerm without(const std::string &v) const
    {
        LinTerm t = *this;
        std::erase_if(t.m_coeffs, [&](const entry &e) { return e.first == v; });
        return t;
    }
    LinTerm linear_part() const
    {
        LinTerm t = *this;
        t.m_const = StarNum{};
        return t;
    }

    LinTerm &operator+=(const LinTerm &o)
    {
        std::vector<entry> out;
        out.reserve(m_coeffs.size() + o.m_coeffs.size());
        auto i = m_coeffs.begin();
        auto j = o.m_coeffs.begin();
        while (i != m_coeffs.end() || j != o.m_coeffs.end()) {
            if (j == o.m_coeffs.end() || (i != m_coeffs.end() && i->first < j->first)) {
                out.push_back(*i++);
            } else if (i == m_coeffs.end() || j->first < i->first) {
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
        m_coeffs = std::move(out);
        m_const += o.m_const;
        return *this;
    }
    LinTerm &operator*=(const Rational &q)
    {
        if (q == 0) {
            m_coeffs.clear();
        } else {
            for (auto &e : m_coeffs) {
                e.second *= q;
            }
        }
        m_const *= q;
        return *this;
    }
    friend LinTerm operator+(LinTerm a, const LinTerm &b)
    {
        return a += b;
    }
    friend LinTerm operator-(LinTerm a, const LinTerm &b)
    {
        LinTerm nb = b;
        nb *= Rational(-1);
        return a += nb;
    }
    friend LinTerm operator-(LinTerm a)
    {
        a *= Rational(-1);
        return a;
    }
    friend LinTerm operator*(const Rational &q, LinTerm a)
    {
        a *= q;
        return a;
    }
    friend bool operator==(const LinTerm &, const LinTerm &) = default;

    // Replace v by t.
    LinTerm substitute(const std::string &v, const LinTerm &t) const
    {
        const Rational c = coeff(v);
        if (c == 0) {
            return *this;
        }
        return without(v) + c * t;
    }
    LinTerm substitute(const std::map<std::string, LinTerm> &sigma) const
    {
        LinTerm out(m_const);
        for (const auto &[v, c] : m_coeffs) {
            auto it = sigma.find(v);
            out += (it == sigma.end()) ? var(v, c) : c * it->second;
        }
        return out;
    }

    StarNum eval(const Assignment &env) const
    {
        StarNum s = m_const;
        for (const auto &[v, c] : m_coeffs) {
            auto it = env.find(v);
            if (it == env.end()) {
                throw EvalError("unbound free variable: " + v);
            }
            s += it->second * c;
        }
        return s;
    }

    std::size_t hash() const
    {
        std::size_t h = m_const.hash();
        for (const auto &[v, c] : m_coeffs) {
            h = h * 1000003u ^ std::hash<std::string>{}(v);
            h = h * 31u + hash_rational(c);
        }
        return h;
    }

private:
    std::vector<entry> m_coeffs;
    StarNum m_const;
};

inline int compare_linear_parts(const LinTerm &a, const LinTerm &b)
{
    const auto &x = a.coeffs();
    const auto &y = b.coeffs();
    for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
        if (x[i].first != y[i].first) {
            return x[i].first < y[i].first ? -1 : 1;
        }
        if (x[i].second != y[i].second) {
            return x[i].second < y[i].second ? -1 : 1;
        }
    }
    if (x.size() != y.size()) {
        return x.size() < y.size() ? -1 : 1;
    }
    return 0;
}

enum class Rel { lt, le, eq };

// term rel 0.
struct Atom {
    LinTerm term;
    Rel rel;

    bool holds(const StarNum &value) const
    {
        const int s = value.sign();
        switch (rel) {
            case Rel::lt:
                return s < 0;
            case Rel::le:
                return s <= 0;
            default:
                return s == 0;
        }
    }
};

enum class Kind { top, bottom, atom, negation, conj, disj, exists, forall };

struct Node;
using Formula = std::shared_ptr<const Node>;

struct Node {
    Kind kind;
    Atom atom{};
    std::vector<Formula> kids;
    std::string var;
    std::vector<std::string> free; // sorted
    std::size_t hash = 0;
    bool has_star = false;
};

namespace detail
{

inline std::vector<std::string> merge_vars(const std::vector<std::string> &a, const std::vector<std::string> &b)
{
    std::vector<std::string> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Formula make_node(Node n)
{
    std::size_t h = static_cast<std::size_t>(n.kind) * 0x9e3779b97f4a7c15ull;
    if (n.kind == Kind::atom) {
        h ^= n.atom.term.hash() * 7u + static_cast<std::size_t>(n.atom.rel);
        for (const auto &[v, c] : n.atom.term.coeffs()) {
            n.free.push_back(v);
        }
        n.has_star = !n.atom.term.constant().is_standard();
    }
    for (const auto &k : n.kids) {
        h = h * 1000003u ^ k->hash;
        n.free = merge_vars(n.free, k->free);
        n.has_star = n.has_star || k->has_star;
    }
    if (n.kind == Kind::exists || n.kind == Kind::forall) {
        h ^= std::hash<std::string>{}(n.var) + 0x51ed27u;
        std::erase(n.free, n.var);
    }
    n.hash = h;
    return std::make_shared<const Node>(std::move(n));
}

inline const Formula &true_node()
{
    static const Formula t = make_node(Node{Kind::top});
    return t;
}
inline const Formula &false_node()
{
    static const Formula f = make_node(Node{Kind::bottom});
    return f;
}

} // namespace detail

inline Formula mk_true()
{
    return detail::true_node();
}
inline Formula mk_false()
{
    return detail::false_node();
}
inline Formula mk_bool(bool b)
{
    return b ? mk_true() : mk_false();
}
inline bool is_true(const Formula &f)
{
    return f->kind == Kind::top;
}
inline bool is_false(const Formula &f)
{
    return f->kind == Kind::bottom;
}

// Canonical atom: variable-free atoms fold to a truth value; otherwise the
// term is scaled so the least variable has coefficient 1 in absolute value
// (exactly +1 for equations).
inline Formula mk_atom(LinTerm t, Rel rel)
{
    if (t.is_constant()) {
        return mk_bool(Atom{t, rel}.holds(t.constant()));
    }
    const Rational lead = t.coeffs().front().second;
    if (rel == Rel::eq) {
        t *= Rational(1 / lead);
    } else {
        t *= Rational(1 / abs(lead));
    }
    Node n{Kind::atom};
    n.atom = Atom{std::move(t), rel};
    return detail::make_node(std::move(n));
}

// lhs rel rhs, with the full relation set of the surface syntax.
inline Formula mk_lt(const LinTerm &a, const LinTerm &b)
{
    return mk_atom(a - b, Rel::lt);
}
inline Formula mk_le(const LinTerm &a, const LinTerm &b)
{
    return mk_atom(a - b, Rel::le);
}
inline Formula mk_eq(const LinTerm &a, const LinTerm &b)
{
    return mk_atom(a - b, Rel::eq);
}

int compare(const Formula &a, const Formula &b);

inline int compare_atoms(const Atom &a, const Atom &b)
{
    if (const int c = compare_linear_parts(a.term, b.term); c != 0) {
        return c;
    }
    if (a.rel != b.rel) {
        return a.rel < b.rel ? -1 : 1;
    }
    const auto &x = a.term.constant();
    const auto &y = b.term.constant();
    if (x == y) {
        return 0;
    }
    return x < y ? -1 : 1;
}

// Total structural order, used for canonical child ordering and dedup.
inline int compare(const Formula &a, const Formula &b)
{
    if (a == b) {
        return 0;
    }
    if (a->kind != b->kind) {
        return a->kind < b->kind ? -1 : 1;
    }
    switch (a->kind) {
        case Kind::top:
        case Kind::bottom:
            return 0;
        case Kind::atom:
            return compare_atoms(a->atom, b->atom);
        case Kind::exists:
        case Kind::forall:
            if (a->var != b->var) {
                return a->var < b->var ? -1 : 1;
            }
            break;
        default:
            break;
    }
    if (a->kids.size() != b->kids.size()) {
        return a->kids.size() < b->kids.size() ? -1 : 1;
    }
    for (std::size_t i = 0; i < a->kids.size(); ++i) {
        if (const int c = compare(a->kids[i], b->kids[i]); c != 0) {
            return c;
        }
    }
    return 0;
}

inline bool equal(const Formula &a, const Formula &b)
{
    return a == b || (a->hash == b->hash && compare(a, b) == 0);
}

namespace detail
{

// Bounds collected for one linear part L (leading coefficient +1).
struct Bounds {
    std::optional<std::pair<StarNum, bool>> upper; // L < v (strict) or L <= v
    std::optional<std::pair<StarNum, bool>> lower; // L > v (strict) or L >= v
    std::vector<StarNum> eqs;
};

// Decompose a canonical atom as a constraint on its sign-normalized linear part.
inline void add_bound(std::map<LinTerm, Bounds, bool (*)(const LinTerm &, const LinTerm &)> &groups, const Atom &a,
                      bool conjunctive)
{
    LinTerm lin = a.term.linear_part();
    StarNum c = a.term.constant();
    bool flipped = false;
    if (lin.coeffs().front().second < 0) {
        lin = -lin;
        c = -c;
        flipped = true;
    }
    auto &b = groups[lin];
    // Atom is (+/-)(L) + c' rel 0, i.e. L rel -c (unflipped) or L rel' c'' (flipped).
    const StarNum v = -c;
    if (a.rel == Rel::eq) {
        b.eqs.push_back(v);
        return;
    }
    const bool strict = a.rel == Rel::lt;
    auto &slot = flipped ? b.lower : b.upper;
    if (!slot) {
        slot.emplace(v, strict);
        return;
    }
    auto &[w, ws] = *slot;
    // Conjunction keeps the tighter bound, disjunction the looser.
    const bool tighter = flipped ? (v > w || (v == w && strict)) : (v < w || (v == w && strict));
    if (tighter == conjunctive && !(v == w && strict == ws)) {
        slot.emplace(v, strict);
    }
}

inline bool lin_less(const LinTerm &a, const LinTerm &b)
{
    return compare_linear_parts(a, b) < 0;
}

inline Formula upper_atom(const LinTerm &lin, const StarNum &v, bool strict)
{
    return mk_atom(lin - LinTerm(v), strict ? Rel::lt : Rel::le);
}
inline Formula lower_atom(const LinTerm &lin, const StarNum &v, bool strict)
{
    return mk_atom(LinTerm(v) - lin, strict ? Rel::lt : Rel::le);
}
inline Formula eq_atom(const LinTerm &lin, const StarNum &v)
{
    return mk_atom(lin - LinTerm(v), Rel::eq);
}

inline void sort_unique(std::vector<Formula> &v)
{
    std::sort(v.begin(), v.end(), [](const Formula &a, const Formula &b) { return compare(a, b) < 0; });
    v.erase(std::unique(v.begin(), v.end(), [](const Formula &a, const Formula &b) { return equal(a, b); }),
            v.end());
}

inline Formula build_junction(Kind k, std::vector<Formula> parts)
{
    const bool conj = k == Kind::conj;
    std::vector<Formula> flat;
    for (auto &p : parts) {
        if (p->kind == k) {
            flat.insert(flat.end(), p->kids.begin(), p->kids.end());
        } else if ((conj && is_true(p)) || (!conj && is_false(p))) {
            continue;
        } else if ((conj && is_false(p)) || (!conj && is_true(p))) {
            return mk_bool(!conj);
        } else {
            flat.push_back(std::move(p));
        }
    }
    std::map<LinTerm, Bounds, bool (*)(const LinTerm &, const LinTerm &)> groups(lin_less);
    std::vector<Formula> out;
    for (auto &p : flat) {
        if (p->kind == Kind::atom) {
            add_bound(groups, p->atom, conj);
        } else {
            out.push_back(p);
        }
    }
    for (auto &[lin, b] : groups) {
        std::sort(b.eqs.begin(), b.eqs.end());
        b.eqs.erase(std::unique(b.eqs.begin(), b.eqs.end()), b.eqs.end());
        if (conj) {
            if (b.eqs.size() > 1) {
                return mk_false();
            }
            if (b.eqs.size() == 1) {
                const StarNum &e = b.eqs.front();
                if (b.upper && (e > b.upper->first || (e == b.upper->first && b.upper->second))) {
                    return mk_false();
                }
                if (b.lower && (e < b.lower->first || (e == b.lower->first && b.lower->second))) {
                    return mk_false();
                }
                out.push_back(eq_atom(lin, e));
                continue;
            }
            if (b.upper && b.lower) {
                const auto &[u, us] = *b.upper;
                const auto &[l, ls] = *b.lower;
                if (l > u || (l == u && (us || ls))) {
                    return mk_false();
                }
                if (l == u) {
                    out.push_back(eq_atom(lin, u));
                    continue;
                }
            }
        } else {
            std::vector<StarNum> keep;
            for (const auto &e : b.eqs) {
                if (b.upper && (e < b.upper->first || (e == b.upper->first && !b.upper->second))) {
                    continue;
                }
                if (b.lower && (e > b.lower->first || (e == b.lower->first && !b.lower->second))) {
                    continue;
                }
                if (b.upper && e == b.upper->first) {
                    b.upper->second = false;
                    continue;
                }
                if (b.lower && e == b.lower->first) {
                    b.lower->second = false;
                    continue;
                }
                keep.push_back(e);
            }
            b.eqs = std::move(keep);
            if (b.upper && b.lower) {
                const auto &[u, us] = *b.upper;
                const auto &[l, ls] = *b.lower;
                if (l < u || (l == u && !(us && ls))) {
                    return mk_true();
                }
            }
            for (const auto &e : b.eqs) {
                out.push_back(eq_atom(lin, e));
            }
        }
        if (b.upper) {
            out.push_back(upper_atom(lin, b.upper->first, b.upper->second));
        }
        if (b.lower) {
            out.push_back(lower_atom(lin, b.lower->first, b.lower->second));
        }
    }
    sort_unique(out);
    if (out.empty()) {
        return mk_bool(conj);
    }
    if (out.size() == 1) {
        return out.front();
    }
    Node n{k};
    n.kids = std::move(out);
    return make_node(std::move(n));
}

} // namespace detail

inline Formula mk_and(std::vector<Formula> parts)
{
    return detail::build_junction(Kind::conj, std::move(parts));
}
inline Formula mk_or(std::vector<Formula> parts)
{
    return detail::build_junction(Kind::disj, std::move(parts));
}
inline Formula mk_and(const Formula &a, const Formula &b)
{
    return mk_and(std::vector<Formula>{a, b});
}
inline Formula mk_or(const Formula &a, const Formula &b)
{
    return mk_or(std::vector<Formula>{a, b});
}

inline Formula negate_atom(const Atom &a)
{
    switch (a.rel) {
        case Rel::lt:
            return mk_atom(-a.term, Rel::le);
        case Rel::le:
            return mk_atom(-a.term, Rel::lt);
        default:
            return mk_or(mk_atom(a.term, Rel::lt), mk_atom(-a.term, Rel::lt));
    }
}

// Negation. Atoms and constants are negated in place; compound formulas get a
// negation node that nnf() later pushes inward.
inline Formula mk_not(const Formula &f)
{
    switch (f->kind) {
        case Kind::top:
            return mk_false();
        case Kind::bottom:
            return mk_true();
        case Kind::atom:
            return negate_atom(f->atom);
        case Kind::negation:
            return f->kids.front();
        default: {
            Node n{Kind::negation};
            n.kids = {f};
            return detail::make_node(std::move(n));
        }
    }
}

inline Formula mk_implies(const Formula &a, const Formula &b)
{
    return mk_or(mk_not(a), b);
}
inline Formula mk_iff(const Formula &a, const Formula &b)
{
    return mk_and(mk_implies(a, b), mk_implies(b, a));
}

inline bool is_free(const Formula &f, const std::string &v)
{
    return std::binary_search(f->free.begin(), f->free.end(), v);
}

inline Formula mk_quant(Kind k, const std::string &v, const Formula &body)
{
    if (!is_free(body, v)) {
        return body;
    }
    Node n{k};
    n.var = v;
    n.kids = {body};
    return detail::make_node(std::move(n));
}
inline Formula mk_exists(const std::string &v, const Formula &body)
{
    return mk_quant(Kind::exists, v, body);
}
inline Formula mk_forall(const std::string &v, const Formula &body)
{
    return mk_quant(Kind::forall, v, body);
}
inline Formula mk_exists(const std::vector<std::string> &vs, Formula body)
{
    for (auto it = vs.rbegin(); it != vs.rend(); ++it) {
        body = mk_exists(*it, body);
    }
    return body;
}
inline Formula mk_forall(const std::vector<std::string> &vs, Formula body)
{
    for (auto it = vs.rbegin(); it != vs.rend(); ++it) {
        body = mk_forall(*it, body);
    }
    return body;
}

inline const std::vector<std::string> &free_vars(const Formula &f)
{
    return f->free;
}

inline bool has_star_constants(const Formula &f)
{
    return f->has_star;
}

inline bool is_quantifier_free(const Formula &f)
{
    if (f->kind == Kind::exists || f->kind == Kind::forall) {
        return false;
    }
    return std::all_of(f->kids.begin(), f->kids.end(), [](const Formula &k) { return is_quantifier_free(k); });
}

inline void collect_vars(const Formula &f, std::set<std::string> &out)
{
    if (f->kind == Kind::atom) {
        for (const auto &[v, c] : f->atom.term.coeffs()) {
            out.insert(v);
        }
    }
    if (!f->var.empty()) {
        out.insert(f->var);
    }
    for (const auto &k : f->kids) {
        collect_vars(k, out);
    }
}

inline void collect_atoms(const Formula &f, std::vector<Atom> &out)
{
    if (f->kind == Kind::atom) {
        out.push_back(f->atom);
    }
    for (const auto &k : f->kids) {
        collect_atoms(k, out);
    }
}

// Smallest name of the form base#n not in `taken`.
inline std::string fresh_name(const std::string &base, const std::set<std::string> &taken)
{
    const std::string stem = base.substr(0, base.find('#'));
    for (int i = 1;; ++i) {
        std::string cand = stem + "#" + std::to_string(i);
        if (!taken.contains(cand)) {
            return cand;
        }
    }
}

Formula substitute(const Formula &f, const std::map<std::string, LinTerm> &sigma);

namespace detail
{

inline Formula rebuild(const Formula &f, std::vector<Formula> kids)
{
    switch (f->kind) {
        case Kind::conj:
            return mk_and(std::move(kids));
        case Kind::disj:
            return mk_or(std::move(kids));
        case Kind::negation:
            return mk_not(kids.front());
        case Kind::exists:
        case Kind::forall:
            return mk_quant(f->kind, f->var, kids.front());
        default:
            return f;
    }
}

} // namespace detail

// Capture-avoiding simultaneous substitution of terms for free variables.
inline Formula substitute(const Formula &f, const std::map<std::string, LinTerm> &sigma)
{
    bool relevant = false;
    for (const auto &[v, t] : sigma) {
        relevant = relevant || is_free(f, v);
    }
    if (!relevant) {
        return f;
    }
    switch (f->kind) {
        case Kind::atom:
            return mk_atom(f->atom.term.substitute(sigma), f->atom.rel);
        case Kind::exists:
        case Kind::forall: {
            std::map<std::string, LinTerm> inner;
            std::set<std::string> incoming;
            for (const auto &[v, t] : sigma) {
                if (v != f->var && is_free(f, v)) {
                    inner.emplace(v, t);
                    for (const auto &[w, c] : t.coeffs()) {
                        incoming.insert(w);
                    }
                }
            }
            Formula body = f->kids.front();
            std::string bound = f->var;
            if (incoming.contains(bound)) {
                std::set<std::string> taken = incoming;
                collect_vars(body, taken);
                for (const auto &[v, t] : inner) {
                    taken.insert(v);
                }
                const std::string renamed = fresh_name(bound, taken);
                body = substitute(body, {{bound, LinTerm::var(renamed)}});
                bound = renamed;
            }
            return mk_quant(f->kind, bound, substitute(body, inner));
        }
        default: {
            std::vector<Formula> kids;
            kids.reserve(f->kids.size());
            for (const auto &k : f->kids) {
                kids.push_back(substitute(k, sigma));
            }
            return detail::rebuild(f, std::move(kids));
        }
    }
}

inline Formula substitute(const Formula &f, const std::string &v, const LinTerm &t)
{
    return substitute(f, std::map<std::string, LinTerm>{{v, t}});
}

// Substitute constants for variables.
inline Formula instantiate(const Formula &f, const Assignment &env)
{
    std::map<std::string, LinTerm> sigma;
    for (const auto &[v, x] : env) {
        sigma.emplace(v, LinTerm(x));
    }
    return substitute(f, sigma);
}

// Rename variables (bijectively) without capture checks; callers pass fresh names.
inline Formula rename(const Formula &f, const std::map<std::string, std::string> &names)
{
    std::map<std::string, LinTerm> sigma;
    for (const auto &[a, b] : names) {
        sigma.emplace(a, LinTerm::var(b));
    }
    return substitute(f, sigma);
}

// Negation normal form: negations pushed to atoms (where they disappear).
inline Formula nnf(const Formula &f, bool negate = false)
{
    switch (f->kind) {
        case Kind::top:
        case Kind::bottom:
        case Kind::atom:
            return negate ? mk_not(f) : f;
        case Kind::negation:
            return nnf(f->kids.front(), !negate);
        case Kind::conj:
        case Kind::disj: {
            std::vector<Formula> kids;
            for (const auto &k : f->kids) {
                kids.push_back(nnf(k, negate));
            }
            const bool as_and = (f->kind == Kind::conj) != negate;
            return as_and ? mk_and(std::move(kids)) : mk_or(std::move(kids));
        }
        case Kind::exists:
        case Kind::forall: {
            const bool as_exists = (f->kind == Kind::exists) != negate;
            return mk_quant(as_exists ? Kind::exists : Kind::forall, f->var, nnf(f->kids.front(), negate));
        }
    }
    return f;
}

// Truth value of a quantifier-free formula at a point of M* (or of M).
inline bool eval_qf(const Formula &f, const Assignment &env)
{
    switch (f->kind) {
        case Kind::top:
            return true;
        case Kind::bottom:
            return false;
        case Kind::atom:
            return f->atom.holds(f->atom.term.eval(env));
        case Kind::negation:
            return !eval_qf(f->kids.front(), env);
        case Kind::conj:
            return std::all_of(f->kids.begin(), f->kids.end(), [&](const Formula &k) { return eval_qf(k, env); });
        case Kind::disj:
            return std::any_of(f->kids.begin(), f->kids.end(), [&](const Formula &k) { return eval_qf(k, env); });
        default:
            throw EvalError("eval_qf: quantified formula; use evaluate() from qe.hpp");
    }
}

inline std::size_t formula_size(const Formula &f)
{
    std::size_t s = 1;
    for (const auto &k : f->kids) {
        s += formula_size(k);
    }
    return s;
}

} // namespace tame

#endif // TAME_FORMULA_HPP
