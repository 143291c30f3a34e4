#ifndef TAME_FM_HPP
#define TAME_FM_HPP

#include <optional>
#include <string>
#include <vector>

#include <tame/formula.hpp>

namespace tame::fm
{

// Conjunctions are kept as formulas built with mk_and over atoms, so parallel
// constraints are merged and contradictions fold to false on construction.

inline std::vector<Atom> atoms_of(const Formula &conj)
{
    std::vector<Atom> out;
    if (conj->kind == Kind::atom) {
        out.push_back(conj->atom);
    } else if (conj->kind == Kind::conj) {
        for (const auto &k : conj->kids) {
            if (k->kind != Kind::atom) {
                throw std::logic_error("fm: conjunction of atoms expected");
            }
            out.push_back(k->atom);
        }
    } else if (!is_true(conj) && !is_false(conj)) {
        throw std::logic_error("fm: conjunction of atoms expected");
    }
    return out;
}

// Exact projection: returns a conjunction equivalent to (exists v. conj).
inline Formula project(const Formula &conj, const std::string &v)
{
    if (is_false(conj) || !is_free(conj, v)) {
        return conj;
    }
    const auto atoms = atoms_of(conj);
    // Equalities first: solve and substitute.
    for (const auto &a : atoms) {
        if (a.rel == Rel::eq && a.term.mentions(v)) {
            const Rational c = a.term.coeff(v);
            const LinTerm sol = Rational(-1 / c) * a.term.without(v);
            std::vector<Formula> rest;
            for (const auto &b : atoms) {
                rest.push_back(mk_atom(b.term.substitute(v, sol), b.rel));
            }
            return mk_and(std::move(rest));
        }
    }
    std::vector<Formula> out;
    std::vector<Atom> lowers;
    std::vector<Atom> uppers;
    for (const auto &a : atoms) {
        const Rational c = a.term.coeff(v);
        if (c == 0) {
            out.push_back(mk_atom(a.term, a.rel));
        } else if (c < 0) {
            lowers.push_back(a);
        } else {
            uppers.push_back(a);
        }
    }
    for (const auto &lo : lowers) {
        for (const auto &up : uppers) {
            const Rational a = -lo.term.coeff(v);
            const Rational b = up.term.coeff(v);
            LinTerm comb = b * lo.term + a * up.term;
            const bool strict = lo.rel == Rel::lt || up.rel == Rel::lt;
            out.push_back(mk_atom(comb.without(v), strict ? Rel::lt : Rel::le));
        }
    }
    return mk_and(std::move(out));
}

inline Formula project(Formula conj, const std::vector<std::string> &vs)
{
    for (const auto &v : vs) {
        conj = project(conj, v);
        if (is_false(conj)) {
            break;
        }
    }
    return conj;
}

inline bool feasible(const Formula &conj)
{
    return !is_false(project(conj, conj->free));
}

// A point of a one-variable constraint set: the equation value if any,
// otherwise a midpoint, an offset by 1 from a one-sided bound, or 0.
inline std::optional<StarNum> pick_value(const std::vector<Atom> &atoms, const std::string &v)
{
    std::optional<std::pair<StarNum, bool>> lo;
    std::optional<std::pair<StarNum, bool>> hi;
    std::optional<StarNum> eq;
    for (const auto &a : atoms) {
        const Rational c = a.term.coeff(v);
        if (c == 0) {
            if (!a.holds(a.term.constant())) {
                return std::nullopt;
            }
            continue;
        }
        const StarNum root = a.term.constant() * Rational(-1 / c);
        if (a.rel == Rel::eq) {
            if (eq && *eq != root) {
                return std::nullopt;
            }
            eq = root;
        } else if (c > 0) {
            const bool s = a.rel == Rel::lt;
            if (!hi || root < hi->first || (root == hi->first && s)) {
                hi.emplace(root, s);
            }
        } else {
            const bool s = a.rel == Rel::lt;
            if (!lo || root > lo->first || (root == lo->first && s)) {
                lo.emplace(root, s);
            }
        }
    }
    auto ok = [&](const StarNum &x) {
        return (!lo || x > lo->first || (x == lo->first && !lo->second)) &&
               (!hi || x < hi->first || (x == hi->first && !hi->second));
    };
    if (eq) {
        return ok(*eq) ? eq : std::nullopt;
    }
    StarNum x;
    if (lo && hi) {
        if (lo->first == hi->first) {
            x = lo->first;
        } else {
            x = (lo->first + hi->first) / Rational(2);
        }
    } else if (lo) {
        x = lo->first + StarNum(1);
    } else if (hi) {
        x = hi->first - StarNum(1);
    }
    return ok(x) ? std::optional<StarNum>(x) : std::nullopt;
}

// A satisfying point of a conjunction by projection and back-substitution.
inline std::optional<Assignment> model(const Formula &conj)
{
    const std::vector<std::string> vs = conj->free;
    std::vector<Formula> stages{conj};
    for (const auto &v : vs) {
        stages.push_back(project(stages.back(), v));
        if (is_false(stages.back())) {
            return std::nullopt;
        }
    }
    Assignment env;
    for (std::size_t i = vs.size(); i-- > 0;) {
        Assignment partial = env;
        const Formula f = instantiate(stages[i], partial);
        auto x = pick_value(atoms_of(f), vs[i]);
        if (!x) {
            if (is_false(f)) {
                return std::nullopt;
            }
            throw std::logic_error("fm::model: back-substitution failed");
        }
        env[vs[i]] = *x;
    }
    return env;
}

} // namespace tame::fm

#endif // TAME_FM_HPP
