#ifndef TAME_STAR_SETS_HPP
#define TAME_STAR_SETS_HPP

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <tame/formula.hpp>
#include <tame/qe.hpp>
#include <tame/star.hpp>

namespace tame
{

// Exact truth in M* at a point whose coordinates may be star numbers.
inline bool eval_star(const Formula &f, const Assignment &point)
{
    return evaluate(f, point);
}

namespace detail
{

inline Formula qf(const Formula &f)
{
    return is_quantifier_free(f) ? nnf(f) : qe_eliminate(f);
}

// Boundary points of a one-variable formula: the roots of its atoms, sorted.
inline std::vector<StarNum> star_roots(const Formula &f, const std::string &t)
{
    std::vector<Atom> atoms;
    collect_atoms(f, atoms);
    std::vector<StarNum> roots;
    for (const auto &a : atoms) {
        const Rational c = a.term.coeff(t);
        if (c == 0) {
            continue;
        }
        if (a.term.coeffs().size() != 1) {
            throw std::invalid_argument("one-variable formula expected, found atom over several variables");
        }
        roots.push_back(a.term.constant() * Rational(-1 / c));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

inline bool holds_at(const Formula &f, const std::string &t, const StarNum &x)
{
    return eval_qf(f, Assignment{{t, x}});
}

} // namespace detail

class UnboundedSetError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Sum of the lengths of the components of a bounded one-variable set in M*.
inline StarNum mu_star(const Formula &a, const std::string &t)
{
    const Formula f = detail::qf(a);
    const auto roots = detail::star_roots(f, t);
    if (roots.empty()) {
        if (detail::holds_at(f, t, StarNum{})) {
            throw UnboundedSetError("mu_star: the set is the whole line");
        }
        return StarNum{};
    }
    if (detail::holds_at(f, t, roots.front() - StarNum::omega()) ||
        detail::holds_at(f, t, roots.back() + StarNum::omega())) {
        // Truth is constant beyond the extreme roots, so one far point decides it.
        throw UnboundedSetError("mu_star: the set is unbounded");
    }
    StarNum total;
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
        if (detail::holds_at(f, t, (roots[i] + roots[i + 1]) / Rational(2))) {
            total += roots[i + 1] - roots[i];
        }
    }
    return total;
}

// The standard trace B n M of a one-variable set B in M*. Membership is
// constant on the standard points strictly between consecutive standard
// parts of boundary points, so the trace is fixed by the sorted finite
// standard parts c_1 < ... < c_k (the parameters) and k + (k + 1) bits.
struct StandardTrace1d {
    std::string var;
    std::vector<Rational> points;
    std::vector<bool> at_point; // c_i in B
    std::vector<bool> between;  // (-inf,c_1), (c_1,c_2), ..., (c_k,+inf); (-inf,+inf) when k = 0

    // The trace as a formula over var and the parameter terms z_1..z_k.
    Formula template_formula(const std::vector<LinTerm> &z) const
    {
        const LinTerm t = LinTerm::var(var);
        std::vector<Formula> parts;
        const std::size_t k = points.size();
        if (k == 0) {
            return mk_bool(between.front());
        }
        for (std::size_t i = 0; i < k; ++i) {
            if (at_point[i]) {
                parts.push_back(mk_eq(t, z[i]));
            }
        }
        if (between.front()) {
            parts.push_back(mk_lt(t, z.front()));
        }
        for (std::size_t i = 0; i + 1 < k; ++i) {
            if (between[i + 1]) {
                parts.push_back(mk_and(mk_lt(z[i], t), mk_lt(t, z[i + 1])));
            }
        }
        if (between.back()) {
            parts.push_back(mk_lt(z.back(), t));
        }
        return mk_or(std::move(parts));
    }

    Formula formula() const
    {
        std::vector<LinTerm> z;
        for (const auto &c : points) {
            z.emplace_back(c);
        }
        return template_formula(z);
    }

    // Membership bits as text: x for in, o for out; points are framed by bars.
    std::string shape() const
    {
        std::string s;
        for (std::size_t i = 0; i < between.size(); ++i) {
            s += between[i] ? 'x' : 'o';
            if (i < at_point.size()) {
                s += at_point[i] ? "|x|" : "|o|";
            }
        }
        return s;
    }
};

inline StandardTrace1d standard_points_1d(const Formula &b, const std::string &t)
{
    const Formula f = detail::qf(b);
    StandardTrace1d out{t, {}, {}, {}};
    for (const auto &r : detail::star_roots(f, t)) {
        const StdValue s = std_part(r);
        if (s.is_finite()) {
            out.points.push_back(s.value());
        }
    }
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    const auto &c = out.points;
    if (c.empty()) {
        out.between.push_back(detail::holds_at(f, t, StarNum{}));
        return out;
    }
    out.between.push_back(detail::holds_at(f, t, StarNum(Rational(c.front() - 1))));
    for (std::size_t i = 0; i < c.size(); ++i) {
        out.at_point.push_back(detail::holds_at(f, t, StarNum(c[i])));
        if (i + 1 < c.size()) {
            out.between.push_back(detail::holds_at(f, t, StarNum(Rational((c[i] + c[i + 1]) / 2))));
        }
    }
    out.between.push_back(detail::holds_at(f, t, StarNum(Rational(c.back() + 1))));
    return out;
}

// Standard condition equivalent, at standard points, to the atom
// L + s rel 0 where L is a standard linear form and s a star constant.
// With r = std(s) and w = L + r: for s - r > 0, "<" and "<=" both become
// w < 0; for s - r < 0 both become w <= 0; "=" survives only when s is
// standard. An infinite s decides the atom outright.
inline Formula standardize_atom(const Atom &a, const std::function<LinTerm(const Rational &)> &std_term)
{
    const StarNum &s = a.term.constant();
    const StdValue r = std_part(s);
    if (!r.is_finite()) {
        const bool below = r.get_kind() == StdValue::kind::neg_inf;
        return mk_bool(below && a.rel != Rel::eq);
    }
    const int sigma = infinitesimal_sign(s);
    if (a.rel == Rel::eq && sigma != 0) {
        return mk_false();
    }
    const LinTerm w = a.term.linear_part() + std_term(r.value());
    switch (a.rel) {
        case Rel::eq:
            return mk_atom(w, Rel::eq);
        case Rel::lt:
            return mk_atom(w, sigma < 0 ? Rel::le : Rel::lt);
        case Rel::le:
            return mk_atom(w, sigma > 0 ? Rel::lt : Rel::le);
    }
    return mk_false();
}

inline Formula standardize_atom(const Atom &a)
{
    return standardize_atom(a, [](const Rational &r) { return LinTerm(r); });
}

// The standard trace of a formula with star constants: a standard formula
// that agrees with it at every standard point. `std_term` supplies the term
// used for each standard part, in atom order.
inline Formula standardize_atomwise(const Formula &f, const std::function<LinTerm(const Rational &)> &std_term)
{
    const Formula g = detail::qf(f);
    std::function<Formula(const Formula &)> rec = [&](const Formula &h) -> Formula {
        switch (h->kind) {
            case Kind::atom:
                return standardize_atom(h->atom, std_term);
            case Kind::conj:
            case Kind::disj: {
                std::vector<Formula> kids;
                for (const auto &k : h->kids) {
                    kids.push_back(rec(k));
                }
                return h->kind == Kind::conj ? mk_and(std::move(kids)) : mk_or(std::move(kids));
            }
            default:
                return h;
        }
    };
    return rec(g);
}

inline Formula standardize_atomwise(const Formula &f)
{
    return standardize_atomwise(f, [](const Rational &r) { return LinTerm(r); });
}

} // namespace tame

#endif // TAME_STAR_SETS_HPP
