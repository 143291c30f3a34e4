#ifndef TAME_QE_HPP
#define TAME_QE_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <tame/fm.hpp>
#include <tame/formula.hpp>

namespace tame
{

// ---------------------------------------------------------------------------
// Cube enumeration: lazily walks the disjunctive normal form of a
// quantifier-free formula, pruning branches whose partial conjunction is
// infeasible. The callback returns false to stop.

namespace detail
{

inline bool cube_implies(const Formula &cube, const Atom &a)
{
    switch (a.rel) {
        case Rel::lt:
            return !fm::feasible(mk_and(cube, mk_atom(-a.term, Rel::le)));
        case Rel::le:
            return !fm::feasible(mk_and(cube, mk_atom(-a.term, Rel::lt)));
        case Rel::eq:
            return !fm::feasible(mk_and(cube, mk_atom(a.term, Rel::lt))) &&
                   !fm::feasible(mk_and(cube, mk_atom(-a.term, Rel::lt)));
    }
    return false;
}

inline bool enumerate_rec(std::vector<Formula> pending, Formula cube,
                          const std::function<bool(const Formula &)> &emit)
{
    std::vector<Formula> ors;
    while (!pending.empty()) {
        Formula f = std::move(pending.back());
        pending.pop_back();
        switch (f->kind) {
            case Kind::top:
                break;
            case Kind::bottom:
                return true;
            case Kind::atom:
                cube = mk_and(cube, f);
                if (is_false(cube)) {
                    return true;
                }
                break;
            case Kind::conj:
                pending.insert(pending.end(), f->kids.begin(), f->kids.end());
                break;
            case Kind::disj:
                ors.push_back(std::move(f));
                break;
            default:
                throw std::logic_error("cube enumeration needs a quantifier-free NNF formula");
        }
    }
    if (!fm::feasible(cube)) {
        return true;
    }
    // Drop disjunctions already implied by the cube and atom disjuncts that
    // contradict it; a disjunction left with one disjunct is forced.
    for (std::size_t i = 0; i < ors.size();) {
        std::vector<Formula> live;
        bool implied = false;
        for (const auto &d : ors[i]->kids) {
            if (d->kind == Kind::atom) {
                if (!fm::feasible(mk_and(cube, d))) {
                    continue;
                }
                if (cube_implies(cube, d->atom)) {
                    implied = true;
                    break;
                }
            }
            live.push_back(d);
        }
        if (implied) {
            ors.erase(ors.begin() + static_cast<long>(i));
        } else if (live.empty()) {
            return true;
        } else if (live.size() == 1) {
            Formula forced = live.front();
            ors.erase(ors.begin() + static_cast<long>(i));
            ors.push_back(forced);
            return enumerate_rec(std::move(ors), cube, emit);
        } else {
            if (live.size() < ors[i]->kids.size()) {
                ors[i] = mk_or(std::move(live));
            }
            ++i;
        }
    }
    if (ors.empty()) {
        return emit(cube);
    }
    // Branch on the smallest disjunction first.
    auto it = std::min_element(ors.begin(), ors.end(),
                               [](const Formula &a, const Formula &b) { return a->kids.size() < b->kids.size(); });
    const Formula chosen = *it;
    ors.erase(it);
    for (const auto &d : chosen->kids) {
        std::vector<Formula> next = ors;
        next.push_back(d);
        if (!enumerate_rec(std::move(next), cube, emit)) {
            return false;
        }
    }
    return true;
}

} // namespace detail

inline void enumerate_cubes(const Formula &f, const std::function<bool(const Formula &)> &emit)
{
    detail::enumerate_rec({nnf(f)}, mk_true(), emit);
}

inline std::vector<Formula> cubes(const Formula &f)
{
    std::vector<Formula> out;
    enumerate_cubes(f, [&](const Formula &c) {
        out.push_back(c);
        return true;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Virtual substitution (Loos-Weispfenning) over DOAG. The test points for
// exists v. phi are the bounds on one side of v (exact for weak bounds and
// equations, bound +/- an infinitesimal for strict ones) plus the matching
// infinity. Star constants pass through untouched: only additions and
// rational scalings are applied to them.

struct QeOptions {
    // When set, blocks of like quantifiers are eliminated in a shuffled order.
    std::mt19937_64 *shuffle = nullptr;
};

namespace detail
{

enum class Virtual { exact, plus_eps, minus_eps, neg_inf, pos_inf };

inline Formula vsub_atom(const Atom &a, const std::string &v, const LinTerm &t, Virtual mode)
{
    const Rational c = a.term.coeff(v);
    if (c == 0) {
        return mk_atom(a.term, a.rel);
    }
    switch (mode) {
        case Virtual::exact:
            return mk_atom(a.term.substitute(v, t), a.rel);
        case Virtual::neg_inf:
            return mk_bool(a.rel != Rel::eq && c > 0);
        case Virtual::pos_inf:
            return mk_bool(a.rel != Rel::eq && c < 0);
        default: {
            if (a.rel == Rel::eq) {
                return mk_false();
            }
            const LinTerm w = a.term.substitute(v, t);
            // w + c*e with e a positive (plus_eps) or negative (minus_eps) infinitesimal.
            const bool pushes_up = (c > 0) == (mode == Virtual::plus_eps);
            return mk_atom(w, pushes_up ? Rel::lt : Rel::le);
        }
    }
}

inline Formula vsub(const Formula &f, const std::string &v, const LinTerm &t, Virtual mode)
{
    if (!is_free(f, v)) {
        return f;
    }
    switch (f->kind) {
        case Kind::atom:
            return vsub_atom(f->atom, v, t, mode);
        case Kind::conj:
        case Kind::disj: {
            std::vector<Formula> kids;
            kids.reserve(f->kids.size());
            for (const auto &k : f->kids) {
                kids.push_back(vsub(k, v, t, mode));
                if (f->kind == Kind::conj && is_false(kids.back())) {
                    return mk_false();
                }
                if (f->kind == Kind::disj && is_true(kids.back())) {
                    return mk_true();
                }
            }
            return f->kind == Kind::conj ? mk_and(std::move(kids)) : mk_or(std::move(kids));
        }
        default:
            throw std::logic_error("vsub: quantifier-free NNF expected");
    }
}

inline Formula vs_exists(const std::string &v, const Formula &phi)
{
    if (!is_free(phi, v)) {
        return phi;
    }
    if (phi->kind == Kind::disj) {
        std::vector<Formula> parts;
        for (const auto &k : phi->kids) {
            parts.push_back(vs_exists(v, k));
            if (is_true(parts.back())) {
                return mk_true();
            }
        }
        return mk_or(std::move(parts));
    }
    if (phi->kind == Kind::conj) {
        std::vector<Formula> outside;
        std::vector<Formula> inside;
        for (const auto &k : phi->kids) {
            (is_free(k, v) ? inside : outside).push_back(k);
        }
        // Gauss step: an equation in v determines it.
        for (const auto &k : inside) {
            if (k->kind == Kind::atom && k->atom.rel == Rel::eq) {
                const Rational c = k->atom.term.coeff(v);
                const LinTerm sol = Rational(-1 / c) * k->atom.term.without(v);
                std::vector<Formula> parts = outside;
                for (const auto &j : inside) {
                    parts.push_back(vsub(j, v, sol, Virtual::exact));
                }
                return mk_and(std::move(parts));
            }
        }
        if (!outside.empty()) {
            outside.push_back(vs_exists(v, mk_and(inside)));
            return mk_and(std::move(outside));
        }
    }
    std::vector<Atom> atoms;
    collect_atoms(phi, atoms);
    std::vector<std::pair<LinTerm, Virtual>> lower_pts;
    std::vector<std::pair<LinTerm, Virtual>> upper_pts;
    std::vector<std::string> seen_lo;
    std::vector<std::string> seen_hi;
    for (const auto &a : atoms) {
        const Rational c = a.term.coeff(v);
        if (c == 0) {
            continue;
        }
        const LinTerm root = Rational(-1 / c) * a.term.without(v);
        auto add = [&](auto &pts, Virtual mode) {
            for (const auto &[t, m] : pts) {
                if (m == mode && t == root) {
                    return;
                }
            }
            pts.emplace_back(root, mode);
        };
        if (a.rel == Rel::eq) {
            add(lower_pts, Virtual::exact);
            add(upper_pts, Virtual::exact);
        } else if (c < 0) {
            add(lower_pts, a.rel == Rel::lt ? Virtual::plus_eps : Virtual::exact);
        } else {
            add(upper_pts, a.rel == Rel::lt ? Virtual::minus_eps : Virtual::exact);
        }
    }
    const bool use_lower = lower_pts.size() <= upper_pts.size();
    const auto &pts = use_lower ? lower_pts : upper_pts;
    std::vector<Formula> parts{vsub(phi, v, LinTerm{}, use_lower ? Virtual::neg_inf : Virtual::pos_inf)};
    for (const auto &[t, mode] : pts) {
        if (is_true(parts.back())) {
            break;
        }
        parts.push_back(vsub(phi, v, t, mode));
    }
    return mk_or(std::move(parts));
}

inline Formula fm_exists(const std::string &v, const Formula &phi)
{
    if (!is_free(phi, v)) {
        return phi;
    }
    std::vector<Formula> parts;
    enumerate_cubes(phi, [&](const Formula &cube) {
        parts.push_back(fm::project(cube, v));
        return !is_true(parts.back());
    });
    return mk_or(std::move(parts));
}

using ExistsEngine = Formula (*)(const std::string &, const Formula &);

inline Formula qe_rec(const Formula &f, ExistsEngine engine, const QeOptions &opt)
{
    switch (f->kind) {
        case Kind::top:
        case Kind::bottom:
        case Kind::atom:
            return f;
        case Kind::negation:
            return nnf(mk_not(qe_rec(f->kids.front(), engine, opt)));
        case Kind::conj:
        case Kind::disj: {
            std::vector<Formula> kids;
            for (const auto &k : f->kids) {
                kids.push_back(qe_rec(k, engine, opt));
            }
            return f->kind == Kind::conj ? mk_and(std::move(kids)) : mk_or(std::move(kids));
        }
        case Kind::exists:
        case Kind::forall: {
            std::vector<std::string> block;
            Formula body = f;
            while (body->kind == f->kind) {
                block.push_back(body->var);
                body = body->kids.front();
            }
            Formula m = nnf(qe_rec(body, engine, opt));
            if (opt.shuffle) {
                std::shuffle(block.begin(), block.end(), *opt.shuffle);
            } else {
                std::reverse(block.begin(), block.end());
            }
            const bool universal = f->kind == Kind::forall;
            if (universal) {
                m = nnf(mk_not(m));
            }
            for (const auto &v : block) {
                m = engine(v, m);
            }
            return universal ? nnf(mk_not(m)) : m;
        }
    }
    return f;
}

} // namespace detail

// Quantifier-free equivalent over DOAG (virtual substitution engine).
inline Formula qe_eliminate(const Formula &f, const QeOptions &opt = {})
{
    if (is_quantifier_free(f)) {
        return nnf(f);
    }
    return detail::qe_rec(f, detail::vs_exists, opt);
}

// Same contract, Fourier-Motzkin over DNF cubes. Used as an independent cross-check.
inline Formula qe_fourier_motzkin(const Formula &f, const QeOptions &opt = {})
{
    if (is_quantifier_free(f)) {
        return nnf(f);
    }
    return detail::qe_rec(f, detail::fm_exists, opt);
}

class FreeVariableError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

inline bool decide(const Formula &sentence, const QeOptions &opt = {})
{
    if (!sentence->free.empty()) {
        throw FreeVariableError("decide: sentence has free variable " + sentence->free.front());
    }
    const Formula r = qe_eliminate(sentence, opt);
    if (is_true(r)) {
        return true;
    }
    if (is_false(r)) {
        return false;
    }
    throw std::logic_error("decide: elimination left a non-constant formula");
}

inline Formula universal_closure(const Formula &f)
{
    return mk_forall(f->free, f);
}
inline Formula existential_closure(const Formula &f)
{
    return mk_exists(f->free, f);
}

// Satisfiability over M (or M* when star constants occur), by cube search.
inline bool satisfiable(const Formula &f)
{
    const Formula g = is_quantifier_free(f) ? f : qe_eliminate(f);
    bool found = false;
    enumerate_cubes(g, [&](const Formula &) {
        found = true;
        return false;
    });
    return found;
}

// Truth of the universal closure. The closure is decided as the
// unsatisfiability of the negated matrix, which avoids eliminating the outer
// universal block.
inline bool valid(const Formula &f)
{
    const Formula g = is_quantifier_free(f) ? f : qe_eliminate(f);
    return !satisfiable(nnf(mk_not(g)));
}

inline bool equivalent(const Formula &a, const Formula &b)
{
    return valid(mk_iff(a, b));
}

// A satisfying assignment of the free variables, if one exists.
inline std::optional<Assignment> find_model(const Formula &f)
{
    const Formula g = is_quantifier_free(f) ? f : qe_eliminate(f);
    std::optional<Assignment> out;
    enumerate_cubes(g, [&](const Formula &cube) {
        out = fm::model(cube);
        return !out.has_value();
    });
    if (out) {
        for (const auto &v : f->free) {
            out->try_emplace(v, StarNum{});
        }
    }
    return out;
}

// Truth value at a point; quantified formulas are decided after instantiation.
inline bool evaluate(const Formula &f, const Assignment &env)
{
    for (const auto &v : f->free) {
        if (!env.contains(v)) {
            throw EvalError("unbound free variable: " + v);
        }
    }
    if (is_quantifier_free(f)) {
        return eval_qf(f, env);
    }
    return decide(instantiate(f, env));
}

// Evaluation over the standard model: all scalars rational.
inline bool evaluate(const Formula &f, const std::map<std::string, Rational> &point)
{
    if (has_star_constants(f)) {
        throw EvalError("mixed scalar domains: formula has star constants but the point is rational");
    }
    Assignment env;
    for (const auto &[v, q] : point) {
        env.emplace(v, StarNum(q));
    }
    return evaluate(f, env);
}

} // namespace tame

#endif // TAME_QE_HPP
