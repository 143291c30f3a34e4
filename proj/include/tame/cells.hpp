#ifndef TAME_CELLS_HPP
#define TAME_CELLS_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <tame/formula.hpp>
#include <tame/qe.hpp>
#include <tame/semilinear.hpp>

namespace tame
{

// One coordinate of a cell: a graph u = value, or a band lower < u < upper
// where a missing bound means -inf / +inf.
struct CellCoord {
    std::string var;
    bool graph = false;
    LinTerm value;
    std::optional<LinTerm> lower;
    std::optional<LinTerm> upper;

    Formula formula() const
    {
        const LinTerm u = LinTerm::var(var);
        if (graph) {
            return mk_eq(u, value);
        }
        std::vector<Formula> parts;
        if (lower) {
            parts.push_back(mk_lt(*lower, u));
        }
        if (upper) {
            parts.push_back(mk_lt(u, *upper));
        }
        return mk_and(std::move(parts));
    }
};

struct Cell {
    Formula guard; // over the parameters only
    std::vector<CellCoord> coords;

    int dim() const
    {
        return static_cast<int>(std::count_if(coords.begin(), coords.end(), [](const CellCoord &c) { return !c.graph; }));
    }
    Formula formula() const
    {
        std::vector<Formula> parts{guard};
        for (const auto &c : coords) {
            parts.push_back(c.formula());
        }
        return mk_and(std::move(parts));
    }
};

struct CellDecomposition {
    std::vector<std::string> params;
    std::vector<std::string> vars;
    std::vector<Cell> cells;

    Formula formula() const
    {
        std::vector<Formula> parts;
        for (const auto &c : cells) {
            parts.push_back(c.formula());
        }
        return mk_or(std::move(parts));
    }
};

namespace detail
{

// Distinct solutions u = t of the atoms of f that mention u.
inline std::vector<LinTerm> bound_terms(const Formula &f, const std::string &u)
{
    std::vector<Atom> atoms;
    collect_atoms(f, atoms);
    std::vector<LinTerm> out;
    for (const auto &a : atoms) {
        const Rational c = a.term.coeff(u);
        if (c == 0) {
            continue;
        }
        LinTerm root = Rational(-1 / c) * a.term.without(u);
        if (std::find(out.begin(), out.end(), root) == out.end()) {
            out.push_back(std::move(root));
        }
    }
    return out;
}

inline Formula distinct_from_earlier(const std::vector<LinTerm> &ts, std::size_t i)
{
    std::vector<Formula> parts;
    for (std::size_t k = 0; k < i; ++k) {
        parts.push_back(nnf(mk_not(mk_eq(ts[k], ts[i]))));
    }
    return mk_and(std::move(parts));
}

inline Formula at(const Formula &f, const std::string &u, const LinTerm &t)
{
    return substitute(f, u, t);
}

} // namespace detail

struct Cell1d {
    Formula guard; // over the variables other than u
    CellCoord coord;
};

// Cells of S in its variable u over the remaining variables. On each guard
// the fiber piece is a graph or a band between consecutive bound terms, so
// the truth of S is constant on it; pieces are pairwise disjoint and cover S.
inline std::vector<Cell1d> decompose_1d(const Formula &s, const std::string &u)
{
    const Formula f = nnf(is_quantifier_free(s) ? s : qe_eliminate(s));
    const std::vector<LinTerm> ts = detail::bound_terms(f, u);
    std::vector<Cell1d> out;
    auto push = [&](const Formula &guard, CellCoord coord) {
        Formula g = simplify(guard);
        if (!is_false(g) && satisfiable(g)) {
            out.push_back({g, std::move(coord)});
        }
    };
    if (ts.empty()) {
        push(f, CellCoord{u, false, {}, std::nullopt, std::nullopt});
        return out;
    }
    const std::size_t r = ts.size();
    for (std::size_t i = 0; i < r; ++i) {
        push(mk_and(detail::at(f, u, ts[i]), detail::distinct_from_earlier(ts, i)), CellCoord{u, true, ts[i]});
    }
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            if (i == j) {
                continue;
            }
            std::vector<Formula> parts{mk_lt(ts[i], ts[j]), detail::distinct_from_earlier(ts, i),
                                       detail::distinct_from_earlier(ts, j)};
            for (std::size_t k = 0; k < r; ++k) {
                if (k != i && k != j) {
                    parts.push_back(mk_or(mk_le(ts[k], ts[i]), mk_le(ts[j], ts[k])));
                }
            }
            parts.push_back(detail::at(f, u, Rational(1, 2) * (ts[i] + ts[j])));
            push(mk_and(std::move(parts)), CellCoord{u, false, {}, ts[i], ts[j]});
        }
    }
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Formula> lo{detail::distinct_from_earlier(ts, i)};
        std::vector<Formula> hi{detail::distinct_from_earlier(ts, i)};
        for (std::size_t k = 0; k < r; ++k) {
            lo.push_back(mk_le(ts[i], ts[k]));
            hi.push_back(mk_le(ts[k], ts[i]));
        }
        lo.push_back(detail::at(f, u, ts[i] - LinTerm(Rational(1))));
        hi.push_back(detail::at(f, u, ts[i] + LinTerm(Rational(1))));
        push(mk_and(std::move(lo)), CellCoord{u, false, {}, std::nullopt, ts[i]});
        push(mk_and(std::move(hi)), CellCoord{u, false, {}, ts[i], std::nullopt});
    }
    return out;
}

// Cylindrical decomposition of S over `vars` (last variable innermost);
// every other free variable is a parameter and appears only in guards.
inline CellDecomposition cell_decompose(const Formula &s, const std::vector<std::string> &vars)
{
    CellDecomposition out;
    out.vars = vars;
    for (const auto &v : s->free) {
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
            out.params.push_back(v);
        }
    }
    std::function<void(const Formula &, std::size_t, std::vector<CellCoord> &)> rec =
        [&](const Formula &g, std::size_t r, std::vector<CellCoord> &suffix) {
            if (r == 0) {
                Cell c{simplify(g), {suffix.rbegin(), suffix.rend()}};
                out.cells.push_back(std::move(c));
                return;
            }
            for (auto &piece : decompose_1d(g, vars[r - 1])) {
                suffix.push_back(piece.coord);
                rec(piece.guard, r - 1, suffix);
                suffix.pop_back();
            }
        };
    std::vector<CellCoord> suffix;
    rec(s, vars.size(), suffix);
    return out;
}

inline CellDecomposition cell_decompose(const SemilinearSet &s)
{
    return cell_decompose(s.formula, s.vars);
}

struct DecompositionCertificate {
    bool disjoint = true;
    bool covering = true;
};

inline DecompositionCertificate check_decomposition(const CellDecomposition &d, const Formula &s)
{
    DecompositionCertificate cert;
    for (std::size_t i = 0; i < d.cells.size() && cert.disjoint; ++i) {
        for (std::size_t j = i + 1; j < d.cells.size() && cert.disjoint; ++j) {
            cert.disjoint = !satisfiable(mk_and(d.cells[i].formula(), d.cells[j].formula()));
        }
    }
    cert.covering = equivalent(d.formula(), is_quantifier_free(s) ? s : qe_eliminate(s));
    return cert;
}

// ---------------------------------------------------------------------------
// Definable choice.

struct ChoicePiece {
    Formula guard;
    std::vector<LinTerm> values;
};

// A piecewise linear selection x -> S_x. Pieces have pairwise disjoint guards
// covering {x : S_x nonempty}; parameters with an empty fiber fall into
// `empty_guard` and get the all-zero default.
struct Choice {
    std::vector<std::string> vars;
    std::vector<ChoicePiece> pieces;
    Formula empty_guard;

    // Formula over the parameters and `target` saying that the chosen point is target.
    Formula graph(const std::vector<LinTerm> &target) const
    {
        std::vector<Formula> parts;
        for (const auto &p : pieces) {
            std::vector<Formula> conj{p.guard};
            for (std::size_t i = 0; i < vars.size(); ++i) {
                conj.push_back(mk_eq(target[i], p.values[i]));
            }
            parts.push_back(mk_and(std::move(conj)));
        }
        std::vector<Formula> conj{empty_guard};
        for (std::size_t i = 0; i < vars.size(); ++i) {
            conj.push_back(mk_eq(target[i], LinTerm{}));
        }
        parts.push_back(mk_and(std::move(conj)));
        return mk_or(std::move(parts));
    }

    // phi evaluated at the chosen point: phi's variables `at_vars` replaced
    // by the selected values, piece by piece.
    Formula apply(const Formula &phi, const std::vector<std::string> &at_vars) const
    {
        std::vector<Formula> parts;
        for (const auto &p : pieces) {
            std::map<std::string, LinTerm> sigma;
            for (std::size_t i = 0; i < at_vars.size(); ++i) {
                sigma.emplace(at_vars[i], p.values[i]);
            }
            parts.push_back(mk_and(p.guard, substitute(phi, sigma)));
        }
        std::map<std::string, LinTerm> zero;
        for (const auto &v : at_vars) {
            zero.emplace(v, LinTerm{});
        }
        parts.push_back(mk_and(empty_guard, substitute(phi, zero)));
        return mk_or(std::move(parts));
    }

    // Rename the parameters of the map (guards and values).
    Choice rename_params(const std::map<std::string, LinTerm> &sigma) const
    {
        Choice c{vars, {}, substitute(empty_guard, sigma)};
        for (const auto &p : pieces) {
            ChoicePiece q{substitute(p.guard, sigma), {}};
            for (const auto &t : p.values) {
                q.values.push_back(t.substitute(sigma));
            }
            c.pieces.push_back(std::move(q));
        }
        return c;
    }
};

namespace detail
{

inline Formula no_point_below(const Formula &t_set, const std::string &u, const LinTerm &t)
{
    return nnf(mk_not(vs_exists(u, mk_and(mk_lt(LinTerm::var(u), t), t_set))));
}

// Every point strictly between lo and hi (either may be infinite) is in the set.
inline Formula fills(const Formula &t_set, const std::string &u, const std::optional<LinTerm> &lo,
                     const std::optional<LinTerm> &hi)
{
    std::vector<Formula> range;
    if (lo) {
        range.push_back(mk_lt(*lo, LinTerm::var(u)));
    }
    if (hi) {
        range.push_back(mk_lt(LinTerm::var(u), *hi));
    }
    range.push_back(nnf(mk_not(t_set)));
    return nnf(mk_not(vs_exists(u, mk_and(std::move(range)))));
}

} // namespace detail

// Selection from a one-dimensional family T(x, u). The chosen point depends
// only on the set T_x: its minimum when attained, otherwise a point of the
// leftmost component (midpoint, lower end + 1, upper end - 1, or 0).
inline std::vector<std::pair<Formula, LinTerm>> choose_1d(const Formula &t_set_in, const std::string &u)
{
    const Formula t_set = nnf(is_quantifier_free(t_set_in) ? t_set_in : qe_eliminate(t_set_in));
    const std::vector<LinTerm> ts = detail::bound_terms(t_set, u);
    const std::size_t r = ts.size();
    std::vector<Formula> at(r);
    std::vector<Formula> right(r);
    std::vector<Formula> inf(r);
    for (std::size_t i = 0; i < r; ++i) {
        at[i] = substitute(t_set, u, ts[i]);
        right[i] = detail::vsub(t_set, u, ts[i], detail::Virtual::plus_eps);
        inf[i] = mk_and({detail::no_point_below(t_set, u, ts[i]), mk_or(at[i], right[i]),
                         detail::distinct_from_earlier(ts, i)});
    }
    const Formula unbounded_below = detail::vsub(t_set, u, LinTerm{}, detail::Virtual::neg_inf);
    std::vector<std::pair<Formula, LinTerm>> out;
    auto push = [&](const Formula &g, const LinTerm &v) {
        Formula s = simplify(g);
        if (!is_false(s) && satisfiable(s)) {
            out.emplace_back(s, v);
        }
    };
    // End of the component that starts at `lo`: t_j when the component stops there.
    auto ends_at = [&](const std::optional<LinTerm> &lo, std::size_t j) {
        std::vector<Formula> parts{detail::fills(t_set, u, lo, ts[j]), nnf(mk_not(mk_and(at[j], right[j]))),
                                   detail::distinct_from_earlier(ts, j)};
        if (lo) {
            parts.push_back(mk_lt(*lo, ts[j]));
        }
        return mk_and(std::move(parts));
    };
    for (std::size_t i = 0; i < r; ++i) {
        push(mk_and(inf[i], at[i]), ts[i]);
    }
    for (std::size_t i = 0; i < r; ++i) {
        const Formula open_start = mk_and(inf[i], nnf(mk_not(at[i])));
        for (std::size_t j = 0; j < r; ++j) {
            if (j != i) {
                push(mk_and(open_start, ends_at(ts[i], j)), Rational(1, 2) * (ts[i] + ts[j]));
            }
        }
        push(mk_and(open_start, detail::fills(t_set, u, ts[i], std::nullopt)), ts[i] + LinTerm(Rational(1)));
    }
    for (std::size_t j = 0; j < r; ++j) {
        push(mk_and(unbounded_below, ends_at(std::nullopt, j)), ts[j] - LinTerm(Rational(1)));
    }
    push(detail::fills(t_set, u, std::nullopt, std::nullopt), LinTerm{});
    return out;
}

// Piecewise choice of a point of S_x, coordinate by coordinate in the order
// of `vars`; all other free variables of S are parameters.
inline Choice definable_choice(const Formula &s_in, const std::vector<std::string> &vars)
{
    const Formula s = nnf(is_quantifier_free(s_in) ? s_in : qe_eliminate(s_in));
    Choice out{vars, {}, simplify(nnf(mk_not(project_exists(vars, s))))};
    std::vector<LinTerm> values;
    std::function<void(const Formula &, std::size_t, const Formula &)> rec = [&](const Formula &cur, std::size_t i,
                                                                                const Formula &guard) {
        if (i == vars.size()) {
            out.pieces.push_back({guard, values});
            return;
        }
        const std::vector<std::string> later(vars.begin() + static_cast<long>(i) + 1, vars.end());
        const Formula t = simplify(project_exists(later, cur));
        for (const auto &[g, v] : choose_1d(t, vars[i])) {
            const Formula ng = simplify(mk_and(guard, g));
            if (is_false(ng)) {
                continue;
            }
            values.push_back(v);
            rec(mk_and(substitute(cur, vars[i], v), g), i + 1, ng);
            values.pop_back();
        }
    };
    rec(s, 0, mk_true());
    return out;
}

// decide(forall x (S_x nonempty -> chosen(x) in S_x)), plus disjointness of guards.
inline bool check_choice(const Choice &c, const Formula &s)
{
    for (std::size_t i = 0; i < c.pieces.size(); ++i) {
        std::map<std::string, LinTerm> sigma;
        for (std::size_t k = 0; k < c.vars.size(); ++k) {
            sigma.emplace(c.vars[k], c.pieces[i].values[k]);
        }
        if (!valid(mk_implies(c.pieces[i].guard, substitute(s, sigma)))) {
            return false;
        }
        for (std::size_t j = i + 1; j < c.pieces.size(); ++j) {
            if (satisfiable(mk_and(c.pieces[i].guard, c.pieces[j].guard))) {
                return false;
            }
        }
    }
    std::vector<Formula> guards{c.empty_guard};
    for (const auto &p : c.pieces) {
        guards.push_back(p.guard);
    }
    return valid(mk_or(std::move(guards)));
}

// ---------------------------------------------------------------------------
// Measure of one-dimensional fibers.

class UnboundedFiberError : public std::runtime_error
{
public:
    UnboundedFiberError(const std::string &msg, Formula witness_guard)
        : std::runtime_error(msg), m_guard(std::move(witness_guard))
    {
    }
    const Formula &guard() const
    {
        return m_guard;
    }

private:
    Formula m_guard;
};

struct MeasurePiece {
    Formula guard;
    LinTerm value;
};

// mu(A_x) as a piecewise linear function of the parameters: the sum of the
// lengths of the band cells present in the fiber. Constants may be star numbers.
inline std::vector<MeasurePiece> mu_function(const Formula &a, const std::string &u)
{
    const auto cells = decompose_1d(a, u);
    std::vector<const Cell1d *> bands;
    for (const auto &c : cells) {
        if (c.coord.graph) {
            continue;
        }
        if (!c.coord.lower || !c.coord.upper) {
            throw UnboundedFiberError("mu: fiber is unbounded where the guard holds", c.guard);
        }
        bands.push_back(&c);
    }
    std::vector<MeasurePiece> raw;
    std::function<void(std::size_t, const Formula &, const LinTerm &)> rec = [&](std::size_t i, const Formula &cond,
                                                                                 const LinTerm &sum) {
        if (!satisfiable(cond)) {
            return;
        }
        if (i == bands.size()) {
            raw.push_back({cond, sum});
            return;
        }
        const Cell1d &b = *bands[i];
        rec(i + 1, mk_and(cond, b.guard), sum + (*b.coord.upper - *b.coord.lower));
        rec(i + 1, mk_and(cond, nnf(mk_not(b.guard))), sum);
    };
    rec(0, mk_true(), LinTerm{});
    // Merge pieces with the same value.
    std::vector<MeasurePiece> out;
    for (auto &p : raw) {
        auto it = std::find_if(out.begin(), out.end(), [&](const MeasurePiece &q) { return q.value == p.value; });
        if (it == out.end()) {
            out.push_back(std::move(p));
        } else {
            it->guard = mk_or(it->guard, p.guard);
        }
    }
    for (auto &p : out) {
        p.guard = simplify(p.guard);
    }
    return out;
}

} // namespace tame

#endif // TAME_CELLS_HPP
