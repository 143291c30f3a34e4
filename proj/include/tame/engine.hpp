#ifndef TAME_ENGINE_HPP
#define TAME_ENGINE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <tame/cutdef.hpp>
#include <tame/io.hpp>
#include <tame/random.hpp>
#include <tame/star_sets.hpp>

namespace tame
{

// One atom handled at one level of the elimination.
struct AtomStep {
    std::string atom;
    std::string form;        // "(1)", "not (1)", "(2)", "not (2)", "(1) and (2)" or "(3)"
    bool quasi_order = true; // transitivity and totality of the induced quasi-order
    bool cut = true;         // the image of the star set is a cut in the quotient order
    std::size_t quotient_dim = 0;
    std::vector<std::string> shape;
    std::size_t omega = 0;
};

struct LevelTrace {
    std::size_t m = 0;
    std::vector<AtomStep> steps;
    std::vector<LevelTrace> children;

    std::size_t depth() const
    {
        std::size_t d = 0;
        for (const auto &c : children) {
            d = std::max(d, c.depth());
        }
        return m == 0 ? 0 : d + 1;
    }

    // Every recursive call has x-arity exactly one less, and all certificates hold.
    bool well_formed() const
    {
        for (const auto &s : steps) {
            if (!s.quasi_order || !s.cut) {
                return false;
            }
        }
        return std::all_of(children.begin(), children.end(),
                           [&](const LevelTrace &c) { return c.m + 1 == m && c.well_formed(); });
    }
};

struct TypeDefResult {
    Formula phi; // over z and y
    std::vector<std::string> z;
    std::vector<std::string> y;
    std::vector<Rational> omega;
    LevelTrace trace;

    Formula instantiated() const
    {
        std::map<std::string, LinTerm> sigma;
        for (std::size_t i = 0; i < z.size(); ++i) {
            sigma.emplace(z[i], LinTerm(omega[i]));
        }
        return simplify(substitute(phi, sigma));
    }
};

namespace detail
{

// The quotient order of a single linear functional d.y on M^n: one point per
// level set, ordered by the value of d.y (or reversed).
struct FunctionalOrder {
    DefLinOrder order;
    PiecewiseMap rep;
    bool quasi_order = true;
    LevelTrace gamma_trace;
};

class TypeDefiner
{
public:
    TypeDefiner(std::vector<std::string> xs, std::vector<std::string> ys, StarPoint a, ZPool &pool)
        : m_x(std::move(xs)), m_y(std::move(ys)), m_a(std::move(a)), m_pool(pool)
    {
        m_u = tuple_names("_u", m_y.size());
        m_v = tuple_names("_v", m_y.size());
    }

    // A standard formula over z and y equivalent at standard y to delta(a|m, y),
    // where delta mentions x1..xm only.
    Formula run(const Formula &delta, std::size_t m, LevelTrace &trace)
    {
        trace.m = m;
        if (m == 0) {
            return delta;
        }
        // The cell X carrying forms (1) and (2) is the whole space here; its
        // recursive definition is trivial but keeps one child per level.
        LevelTrace x_trace;
        const Formula x_def = run(mk_true(), m - 1, x_trace);
        trace.children.push_back(std::move(x_trace));
        return mk_and(x_def, map_atoms(qf(delta), [&](const Atom &at) { return atom_case(at, m, trace); }));
    }

private:
    std::vector<std::string> m_x;
    std::vector<std::string> m_y;
    std::vector<std::string> m_u;
    std::vector<std::string> m_v;
    StarPoint m_a;
    ZPool &m_pool;
    std::map<std::string, FunctionalOrder> m_orders;

    template <typename Fn>
    static Formula map_atoms(const Formula &f, Fn fn)
    {
        switch (f->kind) {
            case Kind::atom:
                return fn(f->atom);
            case Kind::conj:
            case Kind::disj: {
                std::vector<Formula> kids;
                for (const auto &k : f->kids) {
                    kids.push_back(map_atoms(k, fn));
                }
                return f->kind == Kind::conj ? mk_and(std::move(kids)) : mk_or(std::move(kids));
            }
            default:
                return f;
        }
    }

    LinTerm rename_y(const LinTerm &t, const std::vector<std::string> &to) const
    {
        return t.substitute(tame::bind(m_y, as_terms(to)));
    }

    // gamma(u, v) := f(u) <= f(v); x-hat cancels, so gamma is handled by the
    // recursion at m - 1 without any star parameter.
    FunctionalOrder &functional_order(const LinTerm &f, std::size_t m, LevelTrace &trace)
    {
        LinTerm dy;
        for (const auto &[v, c] : f.coeffs()) {
            if (std::find(m_y.begin(), m_y.end(), v) != m_y.end()) {
                dy += LinTerm::var(v, c);
            }
        }
        const std::string key = std::to_string(m) + ":" + print_term(dy);
        if (auto it = m_orders.find(key); it != m_orders.end()) {
            return it->second;
        }
        FunctionalOrder fo;
        const Formula gamma = mk_le(rename_y(dy, m_u), rename_y(dy, m_v));
        fo.gamma_trace.m = m - 1;
        const Formula c = simplify(run(gamma, m - 1, fo.gamma_trace));
        const auto u = as_terms(m_u);
        const auto v = as_terms(m_v);
        const auto w = as_terms(tuple_names("_w", m_y.size()));
        const auto cu = [&](const std::vector<LinTerm> &p, const std::vector<LinTerm> &q) {
            std::map<std::string, LinTerm> s = tame::bind(m_u, p);
            for (auto &[k, t] : tame::bind(m_v, q)) {
                s.emplace(k, t);
            }
            return substitute(c, s);
        };
        fo.quasi_order = valid(mk_implies(mk_and(cu(u, v), cu(v, w)), cu(u, w))) && valid(mk_or(cu(u, v), cu(v, u)));
        const Formula same = mk_and(cu(u, v), cu(v, u));
        fo.rep = PiecewiseMap::from_choice(definable_choice(same, m_v), m_u);
        fo.order = DefLinOrder{m_u, m_v, simplify(fo.rep.graph(u, u)), c};
        trace.children.push_back(fo.gamma_trace);
        return m_orders.emplace(key, std::move(fo)).first->second;
    }

    // The set {b : f(a-hat, b) <= a_m} (strict: <) as a standard formula over y.
    Formula side(const LinTerm &f, std::size_t m, bool strict, AtomStep &step, LevelTrace &trace)
    {
        FunctionalOrder &fo = functional_order(f, m, trace);
        step.quasi_order = step.quasi_order && fo.quasi_order;
        std::map<std::string, LinTerm> sigma = tame::bind(m_y, as_terms(m_u));
        for (std::size_t i = 0; i + 1 < m; ++i) {
            sigma.emplace(m_x[i], LinTerm(m_a[i]));
        }
        const LinTerm fa = f.substitute(sigma);
        const LinTerm am(m_a[m - 1]);
        const Formula v = strict ? mk_lt(fa, am) : mk_le(fa, am);
        const CutSpec spec{fo.order, v};
        step.cut = step.cut && is_cut(spec).cut;
        step.quotient_dim = std::max<std::size_t>(step.quotient_dim, std::max(0, dim(fo.order.carrier_set()).value()));
        const CutResult r = cut_definable(spec, default_skeletons(), &m_pool);
        step.shape.insert(step.shape.end(), r.shape.begin(), r.shape.end());
        step.omega += r.omega.size();
        m_omega.insert(m_omega.end(), r.omega.begin(), r.omega.end());
        return fo.rep.pullback(r.w_template, m_u, as_terms(m_y));
    }

    Formula atom_case(const Atom &at, std::size_t m, LevelTrace &trace)
    {
        const std::string &xm = m_x[m - 1];
        AtomStep step;
        step.atom = print(mk_atom(at.term, at.rel));
        const Rational cm = at.term.coeff(xm);
        if (cm == 0) {
            step.form = "(3)";
            LevelTrace child;
            const Formula out = run(mk_atom(at.term, at.rel), m - 1, child);
            trace.children.push_back(std::move(child));
            trace.steps.push_back(std::move(step));
            return out;
        }
        // cm*xm + rest rel 0  <=>  xm rel' f with f = -rest/cm.
        LinTerm f = at.term.without(xm);
        f *= -1 / cm;
        Formula out;
        if (at.rel == Rel::eq) {
            step.form = "(1) and (2)";
            out = mk_and(side(f, m, false, step, trace), mk_not(side(f, m, true, step, trace)));
        } else if ((at.rel == Rel::lt) == (cm > 0)) {
            // xm < f (cm > 0) or f < xm (cm < 0): not (1), resp. not (2).
            const bool lt = at.rel == Rel::lt;
            step.form = lt ? "not (1)" : "(1)";
            out = lt ? mk_not(side(f, m, false, step, trace)) : side(f, m, false, step, trace);
        } else {
            const bool lt = at.rel == Rel::lt;
            step.form = lt ? "not (2)" : "(2)";
            out = lt ? side(f, m, true, step, trace) : mk_not(side(f, m, true, step, trace));
        }
        trace.steps.push_back(std::move(step));
        return out;
    }

public:
    std::vector<Rational> m_omega;
};

inline void check_elimination_input(const Formula &delta, const std::vector<std::string> &xs,
                                    const std::vector<std::string> &ys, const StarPoint &a)
{
    if (xs.size() != a.size()) {
        throw std::invalid_argument("arity mismatch: " + std::to_string(xs.size()) + " x-variables but " +
                                    std::to_string(a.size()) + " values");
    }
    if (has_star_constants(delta)) {
        throw std::invalid_argument("delta must be standard");
    }
    for (const auto &v : delta->free) {
        if (std::find(xs.begin(), xs.end(), v) == xs.end() && std::find(ys.begin(), ys.end(), v) == ys.end()) {
            throw std::invalid_argument("delta mentions undeclared variable " + v);
        }
    }
}

inline std::set<std::string> taken_names(const Formula &delta, const std::vector<std::string> &xs,
                                         const std::vector<std::string> &ys)
{
    std::set<std::string> out(xs.begin(), xs.end());
    out.insert(ys.begin(), ys.end());
    collect_vars(delta, out);
    return out;
}

} // namespace detail

// A standard formula phi(z, y) and standard values Omega such that, for every
// standard b, delta(a, b) holds in the star model iff phi(Omega, b) holds.
inline TypeDefResult define_type(const Formula &delta, const std::vector<std::string> &xs,
                                 const std::vector<std::string> &ys, const StarPoint &a)
{
    detail::check_elimination_input(delta, xs, ys, a);
    ZPool pool(detail::taken_names(delta, xs, ys));
    detail::TypeDefiner definer(xs, ys, a, pool);
    TypeDefResult out;
    out.phi = definer.run(delta, xs.size(), out.trace);
    out.z = pool.names();
    out.omega = definer.m_omega;
    out.y = ys;
    return out;
}

inline TypeDefResult define_type(const EliminateDecl &d)
{
    return define_type(d.delta, d.x, d.y, d.a);
}

// Direct definition: substitute a, eliminate quantifiers, standardize atomwise.
inline TypeDefResult oracle_define_type(const Formula &delta, const std::vector<std::string> &xs,
                                        const std::vector<std::string> &ys, const StarPoint &a)
{
    detail::check_elimination_input(delta, xs, ys, a);
    ZPool pool(detail::taken_names(delta, xs, ys));
    TypeDefResult out;
    std::map<std::string, LinTerm> sigma;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sigma.emplace(xs[i], LinTerm(a[i]));
    }
    out.phi = standardize_atomwise(substitute(delta, sigma), [&](const Rational &r) {
        out.omega.push_back(r);
        return LinTerm::var(pool.fresh());
    });
    out.z = pool.names();
    out.y = ys;
    return out;
}

inline TypeDefResult oracle_define_type(const EliminateDecl &d)
{
    return oracle_define_type(d.delta, d.x, d.y, d.a);
}

// ---------------------------------------------------------------------------
// Verification.

// Probe points for y: every tuple over a coordinate set built from the omega
// values, the constants of the definitions, their midpoints and neighbours
// (when there are few enough), plus `random` seeded random tuples.
inline std::vector<std::vector<Rational>> probe_points(std::size_t n, const std::vector<Formula> &defs,
                                                       const std::vector<std::vector<Rational>> &omegas,
                                                       std::uint64_t seed, int random = 200)
{
    std::set<Rational> base{Rational(0)};
    for (const auto &o : omegas) {
        base.insert(o.begin(), o.end());
    }
    for (const auto &f : defs) {
        std::vector<Atom> atoms;
        collect_atoms(f, atoms);
        for (const auto &at : atoms) {
            const StdValue s = std_part(at.term.constant());
            if (s.is_finite()) {
                base.insert(s.value());
                base.insert(-s.value());
            }
        }
    }
    std::vector<Rational> coords(base.begin(), base.end());
    std::set<Rational> all(base.begin(), base.end());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        all.insert(coords[i] + 1);
        all.insert(coords[i] - 1);
        if (i + 1 < coords.size()) {
            all.insert((coords[i] + coords[i + 1]) / 2);
        }
    }
    coords.assign(all.begin(), all.end());
    std::vector<std::vector<Rational>> out;
    std::size_t grid = 1;
    for (std::size_t i = 0; i < n && grid <= 4096; ++i) {
        grid *= coords.size();
    }
    if (grid <= 4096) {
        std::vector<std::size_t> idx(n, 0);
        for (;;) {
            std::vector<Rational> p;
            for (auto k : idx) {
                p.push_back(coords[k]);
            }
            out.push_back(std::move(p));
            std::size_t k = 0;
            while (k < n && ++idx[k] == coords.size()) {
                idx[k++] = 0;
            }
            if (k == n) {
                break;
            }
        }
    }
    Generator g(seed);
    for (int r = 0; r < random && n > 0; ++r) {
        std::vector<Rational> p;
        for (std::size_t i = 0; i < n; ++i) {
            p.push_back(g.coin(0.5) ? coords[static_cast<std::size_t>(g.uniform(0, static_cast<long>(coords.size()) - 1))]
                                    : g.rational(30, 7));
        }
        out.push_back(std::move(p));
    }
    return out;
}

struct Verification {
    bool ok = true;
    std::string reason;
    std::optional<Assignment> witness; // a standard y where something disagrees
    std::size_t probes = 0;
};

// Checks that two definitions of the type of a over delta are equivalent (by
// decision) and that both agree with direct evaluation in the star model on
// probe points.
inline Verification verify_equivalence(const Formula &delta, const std::vector<std::string> &xs,
                                       const std::vector<std::string> &ys, const StarPoint &a,
                                       const TypeDefResult &r1, const TypeDefResult &r2, std::uint64_t seed = 0,
                                       int random = 200)
{
    Verification out;
    const Formula p1 = r1.instantiated();
    const Formula p2 = r2.instantiated();
    if (auto m = find_model(mk_or(mk_and(p1, nnf(mk_not(p2))), mk_and(p2, nnf(mk_not(p1)))))) {
        out.ok = false;
        out.reason = "definitions differ";
        out.witness = *m;
        return out;
    }
    std::map<std::string, LinTerm> sigma;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sigma.emplace(xs[i], LinTerm(a[i]));
    }
    const Formula at_a = detail::qf(substitute(delta, sigma));
    for (const auto &b : probe_points(ys.size(), {p1, p2, delta}, {r1.omega, r2.omega}, seed, random)) {
        Assignment env;
        for (std::size_t i = 0; i < ys.size(); ++i) {
            env[ys[i]] = StarNum(b[i]);
        }
        ++out.probes;
        const bool truth = eval_qf(at_a, env);
        if (eval_qf(p1, env) != truth || eval_qf(p2, env) != truth) {
            out.ok = false;
            out.reason = "disagrees with evaluation in the star model";
            out.witness = env;
            return out;
        }
    }
    return out;
}

inline Verification verify_equivalence(const EliminateDecl &d, const TypeDefResult &r1, const TypeDefResult &r2,
                                       std::uint64_t seed = 0, int random = 200)
{
    return verify_equivalence(d.delta, d.x, d.y, d.a, r1, r2, seed, random);
}

} // namespace tame

#endif // TAME_ENGINE_HPP
