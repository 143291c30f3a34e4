#ifndef TAME_SEMILINEAR_HPP
#define TAME_SEMILINEAR_HPP

#include <algorithm>
#include <compare>
#include <functional>
#include <optional>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <tame/fm.hpp>
#include <tame/formula.hpp>
#include <tame/qe.hpp>

namespace tame
{

// A definable subset of M^m: a formula together with the ordered tuple of
// its coordinate variables. Other free variables of the formula, if any, act
// as parameters.
struct SemilinearSet {
    std::vector<std::string> vars;
    Formula formula;

    std::size_t arity() const
    {
        return vars.size();
    }
    std::vector<std::string> params() const
    {
        std::vector<std::string> out;
        for (const auto &v : formula->free) {
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
                out.push_back(v);
            }
        }
        return out;
    }
};

// Dimension with a sentinel for the empty set, ordered EMPTY < 0 < 1 < ...
class Dim
{
public:
    static Dim empty()
    {
        return Dim(-1);
    }
    static Dim of(int d)
    {
        return Dim(d);
    }
    bool is_empty() const
    {
        return m_value < 0;
    }
    int value() const
    {
        return m_value;
    }
    std::string str() const
    {
        return is_empty() ? "EMPTY" : std::to_string(m_value);
    }
    friend bool operator==(Dim, Dim) = default;
    friend std::strong_ordering operator<=>(Dim a, Dim b)
    {
        return a.m_value <=> b.m_value;
    }

private:
    explicit Dim(int v) : m_value(v) {}
    int m_value;
};

// ---------------------------------------------------------------------------
// Cube-level helpers.

namespace detail
{

inline bool cube_implies_atom(const Formula &cube, const Atom &a)
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

// Drop atoms implied by the remaining ones.
inline Formula reduce_cube(const Formula &cube)
{
    std::vector<Atom> atoms = fm::atoms_of(cube);
    for (std::size_t i = 0; i < atoms.size();) {
        std::vector<Formula> rest;
        for (std::size_t j = 0; j < atoms.size(); ++j) {
            if (j != i) {
                rest.push_back(mk_atom(atoms[j].term, atoms[j].rel));
            }
        }
        if (cube_implies_atom(mk_and(rest), atoms[i])) {
            atoms.erase(atoms.begin() + static_cast<long>(i));
        } else {
            ++i;
        }
    }
    std::vector<Formula> kept;
    for (const auto &a : atoms) {
        kept.push_back(mk_atom(a.term, a.rel));
    }
    return mk_and(std::move(kept));
}

inline bool cube_contained(const Formula &small, const Formula &big)
{
    for (const auto &a : fm::atoms_of(big)) {
        if (!cube_implies_atom(small, a)) {
            return false;
        }
    }
    return true;
}

} // namespace detail

// Feasible DNF cubes of a formula, or nullopt when there are more than `cap`.
inline std::optional<std::vector<Formula>> bounded_cubes(const Formula &f, std::size_t cap)
{
    std::vector<Formula> out;
    bool overflow = false;
    enumerate_cubes(f, [&](const Formula &c) {
        out.push_back(c);
        overflow = out.size() > cap;
        return !overflow;
    });
    if (overflow) {
        return std::nullopt;
    }
    return out;
}

// Equivalent formula, usually smaller: feasible DNF cubes with redundant atoms
// and subsumed cubes removed. Falls back to the input when the DNF is large.
inline Formula simplify(const Formula &f, std::size_t cap = 400)
{
    const Formula g = is_quantifier_free(f) ? nnf(f) : qe_eliminate(f);
    if (g->kind == Kind::top || g->kind == Kind::bottom || g->kind == Kind::atom) {
        return g;
    }
    auto cs = bounded_cubes(g, cap);
    if (!cs) {
        return g;
    }
    for (auto &c : *cs) {
        c = detail::reduce_cube(c);
        if (is_true(c)) {
            return mk_true();
        }
    }
    std::sort(cs->begin(), cs->end(), [](const Formula &a, const Formula &b) { return compare(a, b) < 0; });
    cs->erase(std::unique(cs->begin(), cs->end(), [](const Formula &a, const Formula &b) { return equal(a, b); }),
              cs->end());
    std::vector<Formula> kept;
    for (std::size_t i = 0; i < cs->size(); ++i) {
        bool subsumed = false;
        for (std::size_t j = 0; j < cs->size() && !subsumed; ++j) {
            if (i == j) {
                continue;
            }
            // Among mutually contained cubes keep the first.
            if (detail::cube_contained((*cs)[i], (*cs)[j]) &&
                (j < i || !detail::cube_contained((*cs)[j], (*cs)[i]))) {
                subsumed = true;
            }
        }
        if (!subsumed) {
            kept.push_back((*cs)[i]);
        }
    }
    Formula out = mk_or(std::move(kept));
    return formula_size(out) <= formula_size(g) ? out : g;
}

// exists vs. f for quantifier-free f, by Fourier-Motzkin on each cube.
inline Formula project_exists(const std::vector<std::string> &vs, const Formula &f)
{
    const Formula g = is_quantifier_free(f) ? f : qe_eliminate(f);
    bool relevant = false;
    for (const auto &v : vs) {
        relevant = relevant || is_free(g, v);
    }
    if (!relevant) {
        return nnf(g);
    }
    std::vector<Formula> parts;
    enumerate_cubes(g, [&](const Formula &cube) {
        parts.push_back(fm::project(cube, vs));
        return !is_true(parts.back());
    });
    return mk_or(std::move(parts));
}

inline Formula project_forall(const std::vector<std::string> &vs, const Formula &f)
{
    return nnf(mk_not(project_exists(vs, nnf(mk_not(f)))));
}

// Topological closure in the coordinates `vars`, other variables fixed. The
// closure of a nonempty polyhedron is obtained by making its strict
// inequalities weak; a cube contributes only where its fiber is nonempty.
inline Formula closure(const Formula &f, const std::vector<std::string> &vars)
{
    const Formula g = is_quantifier_free(f) ? f : qe_eliminate(f);
    std::vector<Formula> parts;
    enumerate_cubes(g, [&](const Formula &cube) {
        std::vector<Formula> weak;
        for (const auto &a : fm::atoms_of(cube)) {
            weak.push_back(mk_atom(a.term, a.rel == Rel::lt ? Rel::le : a.rel));
        }
        parts.push_back(mk_and(mk_and(std::move(weak)), fm::project(cube, vars)));
        return true;
    });
    return mk_or(std::move(parts));
}

// ---------------------------------------------------------------------------
// Dimension. A cube is a convex polyhedron; its dimension is the number of
// coordinates minus the rank of its equations together with the weak
// inequalities that hold with equality everywhere on it.

namespace detail
{

inline int rank_of(const std::vector<Atom> &rows, const std::vector<std::string> &vars)
{
    std::vector<std::vector<Rational>> m;
    for (const auto &a : rows) {
        std::vector<Rational> r;
        for (const auto &v : vars) {
            r.push_back(a.term.coeff(v));
        }
        m.push_back(std::move(r));
    }
    int rank = 0;
    const std::size_t cols = vars.size();
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < m.size(); ++c) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < m.size() && m[piv][c] == 0) {
            ++piv;
        }
        if (piv == m.size()) {
            continue;
        }
        std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
        const auto &p = m[static_cast<std::size_t>(rank)];
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r != static_cast<std::size_t>(rank) && m[r][c] != 0) {
                const Rational k = m[r][c] / p[c];
                for (std::size_t j = c; j < cols; ++j) {
                    m[r][j] -= k * p[j];
                }
            }
        }
        ++rank;
    }
    return rank;
}

inline bool mentions_any(const LinTerm &t, const std::vector<std::string> &vars)
{
    for (const auto &v : vars) {
        if (t.mentions(v)) {
            return true;
        }
    }
    return false;
}

inline Formula atom_formula(const Atom &a)
{
    return mk_atom(a.term, a.rel);
}

} // namespace detail

// Dimension of the set defined by f in the coordinates `vars` (other free
// variables of f are treated as further coordinates of no interest: they
// must not occur).
inline Dim dim(const Formula &f, const std::vector<std::string> &vars)
{
    const Formula g = is_quantifier_free(f) ? f : qe_eliminate(f);
    int best = -1;
    const int m = static_cast<int>(vars.size());
    enumerate_cubes(g, [&](const Formula &cube) {
        std::vector<Atom> rows;
        for (const auto &a : fm::atoms_of(cube)) {
            if (a.rel == Rel::eq) {
                rows.push_back(a);
            } else if (a.rel == Rel::le && !fm::feasible(mk_and(cube, mk_atom(a.term, Rel::lt)))) {
                rows.push_back(a);
            }
        }
        best = std::max(best, m - detail::rank_of(rows, vars));
        return best < m;
    });
    return best < 0 ? Dim::empty() : Dim::of(best);
}

inline Dim dim(const SemilinearSet &s)
{
    return dim(s.formula, s.vars);
}

struct FiberPiece {
    Formula guard;
    Dim dim;
};

// Partition of the parameter space by the dimension of the fiber S_x, where
// the fiber coordinates are `fiber` and every other free variable of S is a
// parameter. Pieces come sorted by dimension, EMPTY first; empty guards are
// omitted.
inline std::vector<FiberPiece> fiber_dim_partition(const Formula &s, const std::vector<std::string> &fiber)
{
    const Formula g = is_quantifier_free(s) ? s : qe_eliminate(s);
    const int m = static_cast<int>(fiber.size());
    std::vector<std::vector<Formula>> at_least(static_cast<std::size_t>(m) + 1);
    enumerate_cubes(g, [&](const Formula &cube) {
        const std::vector<Atom> atoms = fm::atoms_of(cube);
        const Formula nonempty = fm::project(cube, fiber);
        std::vector<Atom> eqs;
        std::vector<Atom> weak;
        std::vector<Formula> implicit;
        for (const auto &a : atoms) {
            if (!detail::mentions_any(a.term, fiber)) {
                continue;
            }
            if (a.rel == Rel::eq) {
                eqs.push_back(a);
            } else if (a.rel == Rel::le) {
                weak.push_back(a);
                implicit.push_back(nnf(mk_not(fm::project(mk_and(cube, mk_atom(a.term, Rel::lt)), fiber))));
            }
        }
        // Branch on which weak inequalities are implicit equalities.
        std::vector<Atom> rows = eqs;
        std::function<void(std::size_t, Formula)> branch = [&](std::size_t i, Formula cond) {
            if (!satisfiable(cond)) {
                return;
            }
            if (i == weak.size()) {
                const int d = m - detail::rank_of(rows, fiber);
                for (int k = 0; k <= d; ++k) {
                    at_least[static_cast<std::size_t>(k)].push_back(cond);
                }
                return;
            }
            rows.push_back(weak[i]);
            branch(i + 1, mk_and(cond, implicit[i]));
            rows.pop_back();
            branch(i + 1, mk_and(cond, nnf(mk_not(implicit[i]))));
        };
        branch(0, nonempty);
        return true;
    });
    std::vector<Formula> ge;
    for (auto &parts : at_least) {
        ge.push_back(simplify(mk_or(std::move(parts))));
    }
    std::vector<FiberPiece> out;
    const Formula empty_guard = simplify(nnf(mk_not(ge.front())));
    if (satisfiable(empty_guard)) {
        out.push_back({empty_guard, Dim::empty()});
    }
    for (int d = 0; d <= m; ++d) {
        const auto ud = static_cast<std::size_t>(d);
        Formula guard = ud + 1 < ge.size() ? simplify(mk_and(ge[ud], nnf(mk_not(ge[ud + 1])))) : ge[ud];
        if (satisfiable(guard)) {
            out.push_back({guard, Dim::of(d)});
        }
    }
    return out;
}

// Parameters x for which dim(S_x) satisfies `pred`, as a formula over x.
template <typename Pred>
Formula fiber_dim_where(const std::vector<FiberPiece> &pieces, Pred pred)
{
    std::vector<Formula> parts;
    for (const auto &p : pieces) {
        if (pred(p.dim)) {
            parts.push_back(p.guard);
        }
    }
    return mk_or(std::move(parts));
}

} // namespace tame

#endif // TAME_SEMILINEAR_HPP
