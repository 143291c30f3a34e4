#ifndef TAME_GENERATORS_HPP
#define TAME_GENERATORS_HPP

#include <algorithm>
#include <string>
#include <vector>

#include <tame/cutdef.hpp>
#include <tame/io.hpp>
#include <tame/random.hpp>

namespace tame
{

// Random elimination instance: delta over x1..xm, y1..yn with at most
// `max_atoms` atoms (sometimes under one quantifier) and a random star point.
inline EliminateDecl random_eliminate(Generator &g, std::size_t max_m = 3, std::size_t max_n = 2, int max_atoms = 6)
{
    EliminateDecl d;
    const auto m = static_cast<std::size_t>(g.uniform(1, static_cast<long>(max_m)));
    const auto n = static_cast<std::size_t>(g.uniform(0, static_cast<long>(max_n)));
    d.x = tuple_names("x", m);
    d.y = tuple_names("y", n);
    std::vector<std::string> vars = d.x;
    vars.insert(vars.end(), d.y.begin(), d.y.end());
    d.delta = g.coin(0.25) ? g.formula(vars, 1, max_atoms, 5) : g.boolean(vars, static_cast<int>(g.uniform(1, max_atoms)), 5);
    for (std::size_t i = 0; i < m; ++i) {
        d.a.push_back(g.star());
    }
    return d;
}

// A random bounded standard subset of the line: at most `components` disjoint
// open intervals inside (-10, 10), as sorted endpoint pairs.
inline std::vector<std::pair<Rational, Rational>> random_intervals(Generator &g, int components = 4)
{
    const int k = static_cast<int>(g.uniform(1, components));
    std::set<Rational> ends;
    while (static_cast<int>(ends.size()) < 2 * k) {
        ends.insert(ratio(g.uniform(-40, 40), 4));
    }
    std::vector<Rational> e(ends.begin(), ends.end());
    std::vector<std::pair<Rational, Rational>> out;
    for (std::size_t i = 0; i + 1 < e.size(); i += 2) {
        out.emplace_back(e[i], e[i + 1]);
    }
    return out;
}

// Union of intervals (lo + dlo, hi + dhi) over variable t, each kind of
// endpoint closed or open as requested.
inline Formula interval_union(const std::vector<std::pair<Rational, Rational>> &ivs, const std::string &t,
                              const StarNum &dlo, const StarNum &dhi, bool closed = false)
{
    std::vector<Formula> parts;
    const LinTerm x = LinTerm::var(t);
    for (const auto &[lo, hi] : ivs) {
        const LinTerm l = LinTerm(StarNum(lo) + dlo);
        const LinTerm h = LinTerm(StarNum(hi) + dhi);
        parts.push_back(closed ? mk_and(mk_le(l, x), mk_le(x, h)) : mk_and(mk_lt(l, x), mk_lt(x, h)));
    }
    return mk_or(std::move(parts));
}

// Random star set V over the order's left variables that cuts P: unions of
// star initial segments {p <=_P s} / {p <_P s} and tilted half-spaces
// c.p + s < 0. Candidates that are not cuts are redrawn (at most `tries`).
inline std::optional<CutSpec> random_cutspec(Generator &g, const DefLinOrder &p, int tries = 40)
{
    const auto left = as_terms(p.left);
    for (int t = 0; t < tries; ++t) {
        std::vector<Formula> parts;
        const int k = static_cast<int>(g.uniform(1, 2));
        for (int i = 0; i < k; ++i) {
            if (g.coin(0.6)) {
                std::vector<LinTerm> s;
                for (std::size_t j = 0; j < p.arity(); ++j) {
                    s.emplace_back(g.coin(0.5) ? g.star() : StarNum(g.rational(4, 2)));
                }
                parts.push_back(g.coin() ? p.le(left, s) : p.lt(left, s));
            } else {
                LinTerm h(g.star());
                for (const auto &v : p.left) {
                    h += LinTerm::var(v, Rational(g.uniform(-3, 3)));
                }
                parts.push_back(g.coin() ? mk_atom(h, Rel::lt) : mk_atom(h, Rel::le));
            }
        }
        CutSpec spec{p, mk_or(std::move(parts))};
        if (is_cut(spec).cut) {
            return spec;
        }
    }
    return std::nullopt;
}

} // namespace tame

#endif // TAME_GENERATORS_HPP
