#ifndef TAME_CUTDEF_HPP
#define TAME_CUTDEF_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <tame/cells.hpp>
#include <tame/io.hpp>
#include <tame/ordkit.hpp>
#include <tame/star_sets.hpp>

namespace tame
{

// The standard trace of V on P: a standard formula over P.left agreeing with
// membership in V at every standard point of P.
inline Formula trace_on(const CutSpec &spec)
{
    return simplify(mk_and(spec.order.carrier, standardize_atomwise(spec.v)));
}

struct CutCheck {
    bool cut = true;
    // a <=_P b with b in W and a not in W.
    std::optional<std::pair<Assignment, Assignment>> witness;
};

namespace detail
{

inline std::pair<Assignment, Assignment> split_pair(const Assignment &model, const std::vector<std::string> &xs,
                                                    const std::vector<std::string> &ys,
                                                    const std::vector<std::string> &names)
{
    Assignment a;
    Assignment b;
    for (std::size_t i = 0; i < names.size(); ++i) {
        auto get = [&](const std::string &v) {
            auto it = model.find(v);
            return it == model.end() ? StarNum{} : it->second;
        };
        a[names[i]] = get(xs[i]);
        b[names[i]] = get(ys[i]);
    }
    return {a, b};
}

} // namespace detail

// Is the standard set W (a formula over p.left) downward closed in P?
inline CutCheck is_downward_closed(const DefLinOrder &p, const Formula &w)
{
    const auto xs = tuple_names("_x", p.arity());
    const auto ys = tuple_names("_y", p.arity());
    const auto x = as_terms(xs);
    const auto y = as_terms(ys);
    const Formula wx = substitute(w, bind(p.left, x));
    const Formula wy = substitute(w, bind(p.left, y));
    const auto model = find_model(mk_and({p.in(x), p.in(y), wy, p.le(x, y), nnf(mk_not(wx))}));
    if (!model) {
        return {};
    }
    return {false, detail::split_pair(*model, xs, ys, p.left)};
}

// W = V n P is a cut in P.
inline CutCheck is_cut(const CutSpec &spec)
{
    return is_downward_closed(spec.order, trace_on(spec));
}

// ---------------------------------------------------------------------------
// Results.

struct CutFrame {
    int dim = 0;
    std::size_t cells = 0;
    std::size_t b_size = 0;          // size of the B formula (0 in the base case)
    std::set<int> b_scales;          // exponents of the star constants in B
    std::string lambda;              // how the boundary fiber was resolved
};

// Fresh parameter names z1, z2, ... avoiding a set of taken names.
class ZPool
{
public:
    explicit ZPool(std::set<std::string> taken = {}) : m_taken(std::move(taken)) {}

    std::string fresh()
    {
        for (;;) {
            std::string n = "z" + std::to_string(++m_next);
            if (!m_taken.contains(n)) {
                m_names.push_back(n);
                return n;
            }
        }
    }
    const std::vector<std::string> &names() const
    {
        return m_names;
    }

private:
    std::set<std::string> m_taken;
    std::vector<std::string> m_names;
    int m_next = 0;
};

struct CutResult {
    Formula w;
    Formula w_template; // w with the omega values replaced by parameters (base case only)
    std::vector<std::string> z;
    std::vector<Rational> omega;
    std::vector<std::string> shape; // one trace shape per base-case curve
    std::vector<CutFrame> frames;   // outermost first
};

class NotACutError : public std::runtime_error
{
public:
    NotACutError(const std::string &msg, std::pair<Assignment, Assignment> witness)
        : std::runtime_error(msg), m_witness(std::move(witness))
    {
    }
    const std::pair<Assignment, Assignment> &witness() const
    {
        return m_witness;
    }

private:
    std::pair<Assignment, Assignment> m_witness;
};

inline std::set<int> star_scales(const Formula &f)
{
    std::vector<Atom> atoms;
    collect_atoms(f, atoms);
    std::set<int> out;
    for (const auto &a : atoms) {
        for (const auto &[e, q] : a.term.constant().terms()) {
            if (e != 0) {
                out.insert(e);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Base case: P of dimension <= 1 without parameters.

namespace detail
{

// The coordinates of a point of a cell of dimension <= 1 as affine functions
// of the band coordinate t (constants for a point cell).
inline std::vector<LinTerm> cell_curve(const Cell &c, const std::string &t, std::optional<std::size_t> &band)
{
    std::map<std::string, LinTerm> sigma;
    std::vector<LinTerm> out;
    band.reset();
    for (std::size_t k = 0; k < c.coords.size(); ++k) {
        const CellCoord &cc = c.coords[k];
        LinTerm v;
        if (cc.graph) {
            v = cc.value.substitute(sigma);
        } else {
            if (band) {
                throw DimensionError("base case needs cells of dimension <= 1");
            }
            band = k;
            v = LinTerm::var(t);
        }
        sigma.emplace(cc.var, v);
        out.push_back(v);
    }
    return out;
}

} // namespace detail

inline CutResult base_cut(const DefLinOrder &p, const Formula &v, ZPool *pool = nullptr)
{
    if (!p.params().empty()) {
        throw std::invalid_argument("base_cut needs a parameter-free order");
    }
    const CellDecomposition cd = cell_decompose(p.carrier, p.left);
    CutResult out;
    CutFrame frame;
    frame.cells = cd.cells.size();
    const std::string t = "_t";
    std::vector<Formula> parts;
    std::vector<Formula> templ;
    for (const auto &cell : cd.cells) {
        std::optional<std::size_t> band;
        const auto curve = detail::cell_curve(cell, t, band);
        frame.dim = std::max(frame.dim, band ? 1 : 0);
        const Formula along = substitute(v, bind(p.left, curve));
        if (!band) {
            if (evaluate(along, Assignment{})) {
                parts.push_back(cell.formula());
                templ.push_back(cell.formula());
            }
            out.shape.push_back(evaluate(along, Assignment{}) ? "x" : "o");
            continue;
        }
        const StandardTrace1d tr = standard_points_1d(along, t);
        out.omega.insert(out.omega.end(), tr.points.begin(), tr.points.end());
        out.shape.push_back(tr.shape());
        const LinTerm coord = LinTerm::var(p.left[*band]);
        parts.push_back(mk_and(cell.formula(), substitute(tr.formula(), t, coord)));
        if (pool) {
            std::vector<LinTerm> zs;
            for (std::size_t k = 0; k < tr.points.size(); ++k) {
                out.z.push_back(pool->fresh());
                zs.push_back(LinTerm::var(out.z.back()));
            }
            templ.push_back(mk_and(cell.formula(), substitute(tr.template_formula(zs), t, coord)));
        }
    }
    out.w = simplify(mk_or(std::move(parts)));
    out.w_template = pool ? mk_or(std::move(templ)) : out.w;
    frame.lambda = "base";
    out.frames.push_back(std::move(frame));
    return out;
}

// ---------------------------------------------------------------------------
// Inductive case.

// Quotient and fiber coordinates of an order, computed once per order.
struct OrderSkeleton {
    MonotoneQuotient quotient;
    IotaCoord iota;
};

class SkeletonCache
{
public:
    const OrderSkeleton &get(const DefLinOrder &p)
    {
        const std::string key = print_deflinorder(p);
        auto it = m_cache.find(key);
        if (it == m_cache.end()) {
            MonotoneQuotient mq = quotient_reduce(p);
            if (!mq.cert.all()) {
                throw std::logic_error("quotient certificate failed for " + key);
            }
            IotaCoord io = iota_coordinatize(p, mq);
            if (!io.injective) {
                throw std::logic_error("fiber coordinates are not injective for " + key);
            }
            it = m_cache.emplace(key, std::make_shared<OrderSkeleton>(OrderSkeleton{std::move(mq), std::move(io)}))
                     .first;
        }
        return *it->second;
    }

private:
    std::map<std::string, std::shared_ptr<OrderSkeleton>> m_cache;
};

inline SkeletonCache &default_skeletons()
{
    static SkeletonCache cache;
    return cache;
}

namespace detail
{

// Conditions on q saying that, on the component `coord` (guarded by `guard`)
// of the fiber set P(q,i,j), the star set vset covers more than half.
inline Formula majority_condition(const Formula &vset, const std::string &x, const Formula &guard,
                                  const CellCoord &coord)
{
    if (coord.graph) {
        return mk_implies(guard, substitute(vset, x, coord.value));
    }
    LinTerm lo;
    LinTerm hi;
    if (coord.lower && coord.upper) {
        lo = *coord.lower;
        hi = *coord.upper;
    } else if (coord.lower) {
        lo = *coord.lower;
        hi = lo + LinTerm(Rational(1));
    } else if (coord.upper) {
        hi = *coord.upper;
        lo = hi - LinTerm(Rational(1));
    } else {
        lo = LinTerm(Rational(0));
        hi = LinTerm(Rational(1));
    }
    const LinTerm u = LinTerm::var(x);
    const Formula inside = mk_and({vset, mk_lt(lo, u), mk_lt(u, hi)});
    const LinTerm half = Rational(1, 2) * (hi - lo);
    std::vector<Formula> big;
    for (const auto &piece : mu_function(mk_and(guard, inside), x)) {
        big.push_back(mk_and(piece.guard, mk_lt(half, piece.value)));
    }
    return mk_implies(guard, mk_or(std::move(big)));
}

// The least q of Q (under <=_Q) satisfying `pred`, or the greatest, if it exists.
inline std::optional<std::vector<Rational>> extreme(const DefLinOrder &q, const Formula &pred, bool greatest)
{
    const auto a = as_terms(q.left);
    const auto rs = tuple_names("_r", q.arity());
    const auto r = as_terms(rs);
    const Formula pred_r = substitute(pred, bind(q.left, r));
    const Formula beyond = greatest ? q.lt(a, r) : q.lt(r, a);
    const Formula other = project_exists(rs, mk_and({q.in(r), pred_r, beyond}));
    const auto model = find_model(mk_and({q.in(a), pred, nnf(mk_not(other))}));
    if (!model) {
        return std::nullopt;
    }
    std::vector<Rational> out;
    for (const auto &v : q.left) {
        auto it = model->find(v);
        out.push_back(it == model->end() ? Rational(0) : it->second.standard_value());
    }
    return out;
}

} // namespace detail

inline CutResult cut_definable(const CutSpec &spec, SkeletonCache &cache, ZPool *pool = nullptr);

// The B set of the recursion: q in Q such that V covers more than half of
// every component of every coordinate set P(q,i,j) and contains its points.
inline Formula b_formula(const CutSpec &spec, const OrderSkeleton &sk, std::size_t &cells)
{
    const DefLinOrder &p = spec.order;
    const IotaCoord &io = sk.iota;
    const auto q = as_terms(p.left);
    // Inside the coordinate sets the point p is bound; use fresh names for it.
    const auto inner = tuple_names("_p", p.arity());
    IotaCoord local = io;
    std::map<std::string, std::string> ren;
    for (std::size_t k = 0; k < p.arity(); ++k) {
        ren.emplace(p.left[k], inner[k]);
    }
    for (auto &f : local.part) {
        f = rename(f, ren);
    }
    for (auto &row : local.index) {
        for (auto &f : row) {
            f = rename(f, ren);
        }
    }
    local.rho = {inner, io.rho.out_arity, io.rho.at(as_terms(inner))};
    local.vars = inner;
    const Formula v_inner = rename(spec.v, ren);
    const std::string x = "_x";
    std::vector<Formula> conds{sk.quotient.target.in(q)};
    for (std::size_t i = 0; i < local.index.size(); ++i) {
        for (std::size_t j = 0; j < local.index[i].size(); ++j) {
            const Formula pset = simplify(local.coordinate_set(i, j, q, LinTerm::var(x)));
            if (is_false(pset)) {
                continue;
            }
            const Formula vset = simplify(qe_eliminate(local.pull(v_inner, i, j, q, LinTerm::var(x))));
            for (const auto &c : decompose_1d(pset, x)) {
                ++cells;
                conds.push_back(detail::majority_condition(vset, x, c.guard, c.coord));
            }
        }
    }
    return simplify(mk_and(std::move(conds)));
}

inline CutResult inductive_cut(const CutSpec &spec, SkeletonCache &cache)
{
    const DefLinOrder &p = spec.order;
    const OrderSkeleton &sk = cache.get(p);
    const DefLinOrder &qo = sk.quotient.target;
    CutFrame frame;
    frame.dim = sk.quotient.source_dim.value();
    const Formula b = b_formula(spec, sk, frame.cells);
    frame.b_size = formula_size(b);
    frame.b_scales = star_scales(b);
    CutResult inner = cut_definable(CutSpec{qo, b}, cache);
    const Formula c = simplify(mk_and(qo.carrier, inner.w));
    const auto lambda1 = detail::extreme(qo, c, true);
    const auto lambda2 = detail::extreme(qo, nnf(mk_not(c)), false);
    const auto a = as_terms(p.left);
    const PiecewiseMap &rho = sk.quotient.rho;
    CutResult out;
    std::vector<Formula> special;
    std::vector<Formula> parts;
    std::vector<std::string> notes;
    auto fiber = [&](const std::vector<Rational> &lam, const char *name, bool in_b) {
        const Formula at_lam = rho.graph(a, as_terms(lam));
        special.push_back(at_lam);
        const DefLinOrder f = p.restrict(at_lam);
        CutResult fc = base_cut(f, spec.v);
        out.omega.insert(out.omega.end(), lam.begin(), lam.end());
        out.omega.insert(out.omega.end(), fc.omega.begin(), fc.omega.end());
        out.shape.insert(out.shape.end(), fc.shape.begin(), fc.shape.end());
        const bool full = valid(mk_implies(f.carrier, fc.w));
        const bool empty = !satisfiable(fc.w);
        std::string note = std::string(name) + (full ? " full" : (empty ? " empty" : " partial"));
        if (!full && !empty) {
            note += in_b ? " (Lambda in B)" : " (Lambda above B)";
        }
        notes.push_back(note);
        parts.push_back(mk_and(at_lam, fc.w));
    };
    if (lambda1) {
        fiber(*lambda1, "max", true);
    }
    if (lambda2) {
        fiber(*lambda2, "min-above", false);
    }
    std::vector<Formula> rest{p.in(a), rho.pullback(c, qo.left, a)};
    for (const auto &s : special) {
        rest.push_back(nnf(mk_not(s)));
    }
    parts.push_back(mk_and(std::move(rest)));
    out.w = simplify(mk_and(p.in(a), mk_or(std::move(parts))));
    out.w_template = out.w;
    out.omega.insert(out.omega.end(), inner.omega.begin(), inner.omega.end());
    out.shape.insert(out.shape.end(), inner.shape.begin(), inner.shape.end());
    for (std::size_t i = 0; i < notes.size(); ++i) {
        frame.lambda += (i ? "; " : "") + notes[i];
    }
    if (notes.empty()) {
        frame.lambda = "no boundary fiber";
    }
    out.frames.push_back(std::move(frame));
    out.frames.insert(out.frames.end(), inner.frames.begin(), inner.frames.end());
    return out;
}

// A standard definition of W = V n P, by induction on dim P.
inline CutResult cut_definable(const CutSpec &spec, SkeletonCache &cache, ZPool *pool)
{
    const Dim d = dim(spec.order.carrier_set());
    if (d <= Dim::of(1)) {
        return base_cut(spec.order, spec.v, pool);
    }
    return inductive_cut(spec, cache);
}

inline CutResult cut_definable(const CutSpec &spec)
{
    if (auto check = is_cut(spec); !check.cut) {
        throw NotACutError("V n P is not a cut in P", *check.witness);
    }
    return cut_definable(spec, default_skeletons());
}

// The convex hull shortcut {p in P : p <=_P v for some v in V n P*}, traced on
// standard points. Correct only when V n P* is itself a cut of P*.
inline Formula hull_cut(const CutSpec &spec)
{
    const DefLinOrder &p = spec.order;
    const auto vs = tuple_names("_v", p.arity());
    const auto v = as_terms(vs);
    const Formula reach =
        mk_exists(vs, mk_and({substitute(spec.v, bind(p.left, v)), p.in(v), p.le(as_terms(p.left), v)}));
    return simplify(mk_and(p.carrier, standardize_atomwise(qe_eliminate(reach))));
}

// ---------------------------------------------------------------------------
// Uniform families.

struct UniformCutInstance {
    StarPoint x;
    CutResult result;
};

// One cut per parameter value of a family V_x over a fixed order. All
// instances share the order's quotient and fiber coordinates; instances with
// the same shape tags share the defining formula up to the values in omega.
inline std::vector<UniformCutInstance> cut_definable_uniform(const DefLinOrder &p, const Formula &v_family,
                                                             const std::vector<std::string> &xs,
                                                             const std::vector<StarPoint> &instances,
                                                             SkeletonCache &cache)
{
    std::vector<UniformCutInstance> out;
    for (const auto &x : instances) {
        std::map<std::string, LinTerm> sigma;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sigma.emplace(xs[i], LinTerm(x[i]));
        }
        const CutSpec spec{p, substitute(v_family, sigma)};
        if (auto check = is_cut(spec); !check.cut) {
            throw NotACutError("family member is not a cut", *check.witness);
        }
        out.push_back({x, cut_definable(spec, cache)});
    }
    return out;
}

} // namespace tame

#endif // TAME_CUTDEF_HPP
