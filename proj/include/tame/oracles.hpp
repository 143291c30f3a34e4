#ifndef TAME_ORACLES_HPP
#define TAME_ORACLES_HPP

#include <algorithm>
#include <map>
#include <vector>

#include <tame/formula.hpp>
#include <tame/qe.hpp>

namespace tame
{

// Brute-force evaluation of quantified formulas. A quantifier over a
// quantifier-free body is evaluated by enumerating the endpoint test set:
// every boundary point of the body's atoms at the current point, the
// midpoints of neighbouring boundary points, and one step beyond either end.
// Truth is constant between neighbouring boundary points, so the set is
// sufficient. Nested quantified bodies are first made quantifier-free with
// the Fourier-Motzkin engine, never with virtual substitution.
class EndpointOracle
{
public:
    bool eval(const Formula &f, const Assignment &env)
    {
        switch (f->kind) {
            case Kind::top:
            case Kind::bottom:
            case Kind::atom:
                return eval_qf(f, env);
            case Kind::negation:
                return !eval(f->kids.front(), env);
            case Kind::conj:
                return std::all_of(f->kids.begin(), f->kids.end(), [&](const Formula &k) { return eval(k, env); });
            case Kind::disj:
                return std::any_of(f->kids.begin(), f->kids.end(), [&](const Formula &k) { return eval(k, env); });
            case Kind::exists:
            case Kind::forall: {
                const Formula body = qf_body(f->kids.front());
                const bool want = f->kind == Kind::exists;
                for (const auto &x : test_points(body, f->var, env)) {
                    Assignment e = env;
                    e[f->var] = x;
                    if (eval_qf(body, e) == want) {
                        return want;
                    }
                }
                return !want;
            }
        }
        return false;
    }

    static std::vector<StarNum> test_points(const Formula &body, const std::string &v, const Assignment &env)
    {
        std::vector<Atom> atoms;
        collect_atoms(body, atoms);
        std::vector<StarNum> roots;
        for (const auto &a : atoms) {
            const Rational c = a.term.coeff(v);
            if (c == 0) {
                continue;
            }
            Assignment e = env;
            e[v] = StarNum{};
            roots.push_back(a.term.eval(e) * Rational(-1 / c));
        }
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        std::vector<StarNum> pts;
        if (roots.empty()) {
            pts.emplace_back(0);
            return pts;
        }
        pts.push_back(roots.front() - StarNum(1));
        for (std::size_t i = 0; i < roots.size(); ++i) {
            pts.push_back(roots[i]);
            if (i + 1 < roots.size()) {
                pts.push_back((roots[i] + roots[i + 1]) / Rational(2));
            }
        }
        pts.push_back(roots.back() + StarNum(1));
        return pts;
    }

private:
    Formula qf_body(const Formula &body)
    {
        if (is_quantifier_free(body)) {
            return body;
        }
        auto it = m_cache.find(body.get());
        if (it == m_cache.end()) {
            it = m_cache.emplace(body.get(), std::make_pair(body, qe_fourier_motzkin(body))).first;
        }
        return it->second.second;
    }

    std::map<const Node *, std::pair<Formula, Formula>> m_cache;
};

} // namespace tame

#endif // TAME_ORACLES_HPP
