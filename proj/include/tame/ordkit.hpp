#ifndef TAME_ORDKIT_HPP
#define TAME_ORDKIT_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <tame/cells.hpp>
#include <tame/formula.hpp>
#include <tame/qe.hpp>
#include <tame/semilinear.hpp>

namespace tame
{

// ---------------------------------------------------------------------------
// Tuples of variables.

inline std::vector<std::string> tuple_names(const std::string &prefix, std::size_t m)
{
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= m; ++i) {
        out.push_back(prefix + std::to_string(i));
    }
    return out;
}

inline std::vector<LinTerm> as_terms(const std::vector<std::string> &names)
{
    std::vector<LinTerm> out;
    for (const auto &n : names) {
        out.push_back(LinTerm::var(n));
    }
    return out;
}

inline std::vector<LinTerm> as_terms(const std::vector<Rational> &values)
{
    std::vector<LinTerm> out;
    for (const auto &v : values) {
        out.emplace_back(v);
    }
    return out;
}

inline Formula tuple_eq(const std::vector<LinTerm> &a, const std::vector<LinTerm> &b)
{
    std::vector<Formula> parts;
    for (std::size_t i = 0; i < a.size(); ++i) {
        parts.push_back(mk_eq(a[i], b[i]));
    }
    return mk_and(std::move(parts));
}

inline Formula lex_lt(const std::vector<LinTerm> &a, const std::vector<LinTerm> &b)
{
    std::vector<Formula> parts;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::vector<Formula> conj;
        for (std::size_t k = 0; k < i; ++k) {
            conj.push_back(mk_eq(a[k], b[k]));
        }
        conj.push_back(mk_lt(a[i], b[i]));
        parts.push_back(mk_and(std::move(conj)));
    }
    return mk_or(std::move(parts));
}

inline std::map<std::string, LinTerm> bind(const std::vector<std::string> &names, const std::vector<LinTerm> &values)
{
    std::map<std::string, LinTerm> sigma;
    for (std::size_t i = 0; i < names.size(); ++i) {
        sigma.emplace(names[i], values[i]);
    }
    return sigma;
}

// ---------------------------------------------------------------------------
// Definable linear orders.

// A definable linear order (P, <=_P). The carrier is a formula over `left`;
// the order is a formula over `left` (the smaller point) and `right`. Free
// variables outside both tuples are parameters of a uniform family.
struct DefLinOrder {
    std::vector<std::string> left;
    std::vector<std::string> right;
    Formula carrier;
    Formula order;

    std::size_t arity() const
    {
        return left.size();
    }
    std::vector<std::string> params() const
    {
        std::vector<std::string> out;
        for (const auto &f : {carrier, order}) {
            for (const auto &v : f->free) {
                if (std::find(left.begin(), left.end(), v) == left.end() &&
                    std::find(right.begin(), right.end(), v) == right.end() &&
                    std::find(out.begin(), out.end(), v) == out.end()) {
                    out.push_back(v);
                }
            }
        }
        return out;
    }
    Formula in(const std::vector<LinTerm> &p) const
    {
        return substitute(carrier, bind(left, p));
    }
    Formula le(const std::vector<LinTerm> &a, const std::vector<LinTerm> &b) const
    {
        auto sigma = bind(left, a);
        sigma.merge(bind(right, b));
        return substitute(order, sigma);
    }
    Formula lt(const std::vector<LinTerm> &a, const std::vector<LinTerm> &b) const
    {
        return mk_and(le(a, b), nnf(mk_not(tuple_eq(a, b))));
    }
    SemilinearSet carrier_set() const
    {
        return {left, carrier};
    }
    // Same order on a smaller carrier.
    DefLinOrder restrict(const Formula &sub) const
    {
        return {left, right, simplify(mk_and(carrier, sub)), order};
    }
};

// A relation over (left, right) evaluated at the tuples (x, y).
inline Formula at_pair(const DefLinOrder &p, const Formula &rel, const std::vector<LinTerm> &x,
                       const std::vector<LinTerm> &y)
{
    auto sigma = bind(p.left, x);
    sigma.merge(bind(p.right, y));
    return substitute(rel, sigma);
}

inline DefLinOrder make_order(const Formula &carrier, const Formula &order, std::size_t m,
                              const std::string &left = "a", const std::string &right = "b")
{
    return {tuple_names(left, m), tuple_names(right, m), carrier, order};
}

// Lexicographic order on `carrier` (a formula over a1..am).
inline DefLinOrder lex_order(const Formula &carrier, std::size_t m)
{
    const auto a = tuple_names("a", m);
    const auto b = tuple_names("b", m);
    return {a, b, carrier, mk_or(lex_lt(as_terms(a), as_terms(b)), tuple_eq(as_terms(a), as_terms(b)))};
}

inline Formula open_box(const std::vector<std::string> &vars, const Rational &lo = 0, const Rational &hi = 1)
{
    std::vector<Formula> parts;
    for (const auto &v : vars) {
        parts.push_back(mk_lt(LinTerm(lo), LinTerm::var(v)));
        parts.push_back(mk_lt(LinTerm::var(v), LinTerm(hi)));
    }
    return mk_and(std::move(parts));
}

struct OrderCertificate {
    bool ok = true;
    std::string failed; // reflexivity, antisymmetry, transitivity or totality
    Assignment witness;
};

// Decide the linear order axioms on the carrier (for every parameter value
// of a family). A failure carries a point (pair, triple) violating the axiom.
inline OrderCertificate check_linear_order(const DefLinOrder &p)
{
    const std::size_t m = p.arity();
    const auto x = as_terms(tuple_names("_x", m));
    const auto y = as_terms(tuple_names("_y", m));
    const auto z = as_terms(tuple_names("_z", m));
    const std::vector<std::pair<std::string, Formula>> violations{
        {"reflexivity", mk_and(p.in(x), nnf(mk_not(p.le(x, x))))},
        {"antisymmetry", mk_and({p.in(x), p.in(y), p.le(x, y), p.le(y, x), nnf(mk_not(tuple_eq(x, y)))})},
        {"totality", mk_and({p.in(x), p.in(y), nnf(mk_not(p.le(x, y))), nnf(mk_not(p.le(y, x)))})},
        {"transitivity",
         mk_and({p.in(x), p.in(y), p.in(z), p.le(x, y), p.le(y, z), nnf(mk_not(p.le(x, z)))})},
    };
    for (const auto &[name, bad] : violations) {
        if (auto w = find_model(bad)) {
            return {false, name, *w};
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Interval dimensions.

// (a,b)_P = {c in P : a <_P c <_P b}.
inline Formula open_interval(const DefLinOrder &p, const std::vector<LinTerm> &a, const std::vector<LinTerm> &b,
                             const std::vector<LinTerm> &c)
{
    return mk_and({p.in(c), p.lt(a, c), p.lt(c, b)});
}

// The partition of pairs (a,b) = (left, right) by dim (a,b)_P.
struct IntervalDims {
    std::vector<FiberPiece> pieces;

    // dim (a,b)_P < d, as a formula over the given tuples.
    Formula below(const DefLinOrder &p, int d, const std::vector<LinTerm> &a, const std::vector<LinTerm> &b) const
    {
        auto sigma = bind(p.left, a);
        sigma.merge(bind(p.right, b));
        const Formula f = fiber_dim_where(pieces, [d](Dim x) { return x < Dim::of(d); });
        return substitute(f, sigma);
    }
};

inline IntervalDims interval_dims(const DefLinOrder &p)
{
    const auto c = tuple_names("_c", p.arity());
    const Formula inside = open_interval(p, as_terms(p.left), as_terms(p.right), as_terms(c));
    return {fiber_dim_partition(mk_and({p.in(as_terms(p.left)), p.in(as_terms(p.right)), inside}), c)};
}

// a ~_d b iff dim of the interval between a and b is < d; a formula over
// (left, right), restricted to carrier points.
inline Formula interval_dim_relation(const DefLinOrder &p, int d, const IntervalDims &dims)
{
    const auto a = as_terms(p.left);
    const auto b = as_terms(p.right);
    return simplify(mk_and({p.in(a), p.in(b),
                            mk_or(mk_and(p.le(a, b), dims.below(p, d, a, b)),
                                  mk_and(p.le(b, a), dims.below(p, d, b, a)))}));
}

inline Formula interval_dim_relation(const DefLinOrder &p, int d)
{
    return interval_dim_relation(p, d, interval_dims(p));
}

// ---------------------------------------------------------------------------
// Piecewise linear maps.

// A map given by disjoint guards over `src` with one LinTerm tuple per guard.
struct PiecewiseMap {
    std::vector<std::string> src;
    std::size_t out_arity = 0;
    std::vector<ChoicePiece> pieces;

    static PiecewiseMap identity(const std::vector<std::string> &src)
    {
        return {src, src.size(), {{mk_true(), as_terms(src)}}};
    }

    // The choice map of a family whose parameters are `src`; points with an
    // empty fiber go to the origin.
    static PiecewiseMap from_choice(const Choice &c, const std::vector<std::string> &src)
    {
        PiecewiseMap out{src, c.vars.size(), c.pieces};
        if (satisfiable(c.empty_guard)) {
            out.pieces.push_back({c.empty_guard, std::vector<LinTerm>(c.vars.size())});
        }
        return out;
    }

    std::vector<ChoicePiece> at(const std::vector<LinTerm> &arg) const
    {
        const auto sigma = bind(src, arg);
        std::vector<ChoicePiece> out;
        for (const auto &pc : pieces) {
            ChoicePiece q{substitute(pc.guard, sigma), {}};
            for (const auto &v : pc.values) {
                q.values.push_back(v.substitute(sigma));
            }
            out.push_back(std::move(q));
        }
        return out;
    }

    // f(arg) = target.
    Formula graph(const std::vector<LinTerm> &arg, const std::vector<LinTerm> &target) const
    {
        std::vector<Formula> parts;
        for (const auto &pc : at(arg)) {
            parts.push_back(mk_and(pc.guard, tuple_eq(pc.values, target)));
        }
        return mk_or(std::move(parts));
    }

    // f(a) = f(b).
    Formula same_image(const std::vector<LinTerm> &a, const std::vector<LinTerm> &b) const
    {
        std::vector<Formula> parts;
        const auto pa = at(a);
        const auto pb = at(b);
        for (const auto &x : pa) {
            for (const auto &y : pb) {
                parts.push_back(mk_and({x.guard, y.guard, tuple_eq(x.values, y.values)}));
            }
        }
        return mk_or(std::move(parts));
    }

    // phi(f(arg)) for phi over `target_vars`.
    Formula pullback(const Formula &phi, const std::vector<std::string> &target_vars,
                     const std::vector<LinTerm> &arg) const
    {
        std::vector<Formula> parts;
        for (const auto &pc : at(arg)) {
            parts.push_back(mk_and(pc.guard, substitute(phi, bind(target_vars, pc.values))));
        }
        return mk_or(std::move(parts));
    }

    // g o f, where g takes this map's output tuple as its `src`.
    PiecewiseMap then(const PiecewiseMap &g) const
    {
        PiecewiseMap out{src, g.out_arity, {}};
        for (const auto &f : pieces) {
            for (const auto &h : g.at(f.values)) {
                const Formula guard = simplify(mk_and(f.guard, h.guard));
                if (!is_false(guard) && satisfiable(guard)) {
                    out.pieces.push_back({guard, h.values});
                }
            }
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// Counting points.

namespace detail
{

// Largest k <= cap for which `chain(k)` is satisfiable (0 if none is).
template <typename Chain>
int max_chain(Chain chain, int cap)
{
    int k = 0;
    while (k < cap && satisfiable(chain(k + 1))) {
        ++k;
    }
    return k;
}

inline std::vector<std::vector<LinTerm>> fresh_tuples(const std::string &prefix, int k, std::size_t m)
{
    std::vector<std::vector<LinTerm>> out;
    for (int s = 0; s < k; ++s) {
        out.push_back(as_terms(tuple_names(prefix + std::to_string(s) + "_", m)));
    }
    return out;
}

// Lexicographically increasing points b^1 < ... < b^k, each satisfying member(b^s).
template <typename Member>
Formula increasing_chain(const std::vector<std::vector<LinTerm>> &bs, Member member)
{
    std::vector<Formula> parts;
    for (std::size_t s = 0; s < bs.size(); ++s) {
        parts.push_back(member(bs[s]));
        if (s > 0) {
            parts.push_back(lex_lt(bs[s - 1], bs[s]));
        }
    }
    return mk_and(std::move(parts));
}

} // namespace detail

// ---------------------------------------------------------------------------
// Collapsing finite intervals.

// P -> R collapsing each maximal finite interval (a class of ~_1) to its
// chosen representative. `class_bound` is the largest class size.
struct Collapse {
    DefLinOrder target;
    PiecewiseMap map;
    bool identity = true;
    int class_bound = 1;
};

inline constexpr int kCountCap = 16;

inline Collapse collapse_finite_intervals(const DefLinOrder &p, const IntervalDims &dims)
{
    const auto a = as_terms(p.left);
    const auto b = as_terms(p.right);
    const Formula rel = interval_dim_relation(p, 1, dims);
    if (valid(mk_implies(rel, tuple_eq(a, b)))) {
        return {p, PiecewiseMap::identity(p.left), true, 1};
    }
    const PiecewiseMap map = PiecewiseMap::from_choice(definable_choice(rel, p.right), p.left);
    Collapse out{p.restrict(map.graph(a, a)), map, false, 1};
    const std::size_t m = p.arity();
    out.class_bound = detail::max_chain(
        [&](int k) {
            const auto bs = detail::fresh_tuples("_k", k, m);
            return detail::increasing_chain(
                bs, [&](const auto &x) { return mk_and(p.in(x), at_pair(p, rel, bs.front(), x)); });
        },
        kCountCap);
    return out;
}

inline Collapse collapse_finite_intervals(const DefLinOrder &p)
{
    return collapse_finite_intervals(p, interval_dims(p));
}

// ---------------------------------------------------------------------------
// Monotone quotient.

struct QuotientCertificate {
    bool monotone = false;
    bool into = false;
    bool surjective = false;
    bool fiber_dim = false;
    bool dim_drop = false;

    bool all() const
    {
        return monotone && into && surjective && fiber_dim && dim_drop;
    }
};

struct MonotoneQuotient {
    DefLinOrder source;
    DefLinOrder target;
    PiecewiseMap rho;
    int threshold = 2;
    Dim source_dim = Dim::empty();
    Dim target_dim = Dim::empty();
    std::vector<FiberPiece> fiber_dims;
    Collapse collapse;
    QuotientCertificate cert;
};

inline QuotientCertificate check_quotient(const MonotoneQuotient &mq)
{
    const DefLinOrder &p = mq.source;
    const DefLinOrder &q = mq.target;
    const auto a = as_terms(p.left);
    const auto b = as_terms(p.right);
    QuotientCertificate c;
    const auto pa = mq.rho.at(a);
    const auto pb = mq.rho.at(b);
    c.into = true;
    for (const auto &x : pa) {
        c.into = c.into && !satisfiable(mk_and({p.in(a), x.guard, nnf(mk_not(q.in(x.values)))}));
    }
    c.monotone = true;
    for (std::size_t i = 0; i < pa.size() && c.monotone; ++i) {
        for (std::size_t j = 0; j < pb.size() && c.monotone; ++j) {
            c.monotone = !satisfiable(mk_and({p.in(a), p.in(b), p.le(a, b), pa[i].guard, pb[j].guard,
                                              nnf(mk_not(q.le(pa[i].values, pb[j].values)))}));
        }
    }
    const auto t = as_terms(tuple_names("_t", p.arity()));
    const Formula hit = project_exists(p.left, mk_and(p.in(a), mq.rho.graph(a, t)));
    c.surjective = !satisfiable(mk_and(q.in(t), nnf(mk_not(hit))));
    c.fiber_dim = true;
    for (const auto &piece : mq.fiber_dims) {
        c.fiber_dim = c.fiber_dim && piece.dim <= Dim::of(1);
    }
    c.dim_drop = !mq.source_dim.is_empty() && mq.target_dim == Dim::of(mq.source_dim.value() - 1);
    return c;
}

class DimensionError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// rho : P -> Q monotone and surjective with fibers of dim <= 1: collapse
// finite intervals, then identify points whose interval has dim < threshold
// and keep the chosen representative of each class.
inline MonotoneQuotient quotient_reduce(const DefLinOrder &p, int threshold = 2)
{
    MonotoneQuotient out;
    out.source = p;
    out.threshold = threshold;
    out.source_dim = dim(p.carrier_set());
    if (out.source_dim < Dim::of(2)) {
        throw DimensionError("quotient_reduce needs an order of dimension >= 2, got " + out.source_dim.str());
    }
    const IntervalDims dims = interval_dims(p);
    out.collapse = collapse_finite_intervals(p, dims);
    const DefLinOrder &r = out.collapse.target;
    const IntervalDims dims_r = out.collapse.identity ? dims : interval_dims(r);
    const Formula rel = interval_dim_relation(r, threshold, dims_r);
    const PiecewiseMap rho1 = PiecewiseMap::from_choice(definable_choice(rel, r.right), r.left);
    const auto a = as_terms(r.left);
    out.target = r.restrict(rho1.graph(a, a));
    out.rho = out.collapse.map.then(rho1);
    out.target_dim = dim(out.target.carrier_set());
    const auto t = tuple_names("_t", p.arity());
    out.fiber_dims =
        fiber_dim_partition(mk_and(p.in(as_terms(p.left)), out.rho.graph(as_terms(p.left), as_terms(t))), p.left);
    out.cert = check_quotient(out);
    return out;
}

// ---------------------------------------------------------------------------
// Fiber coordinates.

// The injective map iota(p) = (rho(p), p_i, i, j): P_q^i is the greedy part
// of the fiber on which the i-th coordinate is finite-to-one, j the
// lexicographic rank of p among the points of P_q^i with the same p_i.
struct IotaCoord {
    int m = 0;
    int n_bound = 0;
    std::vector<std::string> vars;
    PiecewiseMap rho;
    std::vector<Formula> part;               // over vars
    std::vector<std::vector<Formula>> index; // index[i][j]: rank j + 1 within part i
    bool injective = false;

    // The point set P(q, i, j) = {p_i : p in P_q^i of rank j + 1}, over (q, x).
    Formula coordinate_set(std::size_t i, std::size_t j, const std::vector<LinTerm> &q, const LinTerm &x) const
    {
        const auto p = as_terms(vars);
        return project_exists(vars, mk_and({index[i][j], rho.graph(p, q), mk_eq(p[i], x)}));
    }
    // {x : the point of P_q^i with rank j + 1 and coordinate x satisfies phi}.
    Formula pull(const Formula &phi, std::size_t i, std::size_t j, const std::vector<LinTerm> &q,
                 const LinTerm &x) const
    {
        const auto p = as_terms(vars);
        return mk_exists(vars, mk_and({index[i][j], rho.graph(p, q), mk_eq(p[i], x), phi}));
    }
};

class IotaError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

inline IotaCoord iota_coordinatize(const DefLinOrder &p, const MonotoneQuotient &mq)
{
    const std::size_t m = p.arity();
    IotaCoord out;
    out.m = static_cast<int>(m);
    out.vars = p.left;
    out.rho = mq.rho;
    const auto a = as_terms(p.left);
    const auto b = as_terms(p.right);
    auto same = [&](const std::vector<LinTerm> &x, const std::vector<LinTerm> &y) { return mq.rho.same_image(x, y); };
    auto at = [&](const Formula &f, const std::vector<LinTerm> &x) { return substitute(f, bind(p.left, x)); };
    Formula rem = p.carrier;
    for (std::size_t i = 0; i < m; ++i) {
        const Formula family = mk_and({rem, at(rem, b), same(a, b), mk_eq(a[i], b[i])});
        const auto pieces = fiber_dim_partition(family, p.right);
        const Formula finite = fiber_dim_where(pieces, [](Dim d) { return d <= Dim::of(0); });
        const Formula part = simplify(mk_and(rem, finite));
        out.part.push_back(part);
        rem = simplify(mk_and(rem, nnf(mk_not(part))));
    }
    if (satisfiable(rem)) {
        throw IotaError("fiber points not covered by any coordinate: fibers must have dimension <= 1");
    }
    for (std::size_t i = 0; i < m; ++i) {
        const Formula &part = out.part[i];
        auto member_of = [&](const std::vector<LinTerm> &anchor) {
            return [&, anchor](const std::vector<LinTerm> &x) {
                return mk_and({at(part, x), same(anchor, x), mk_eq(x[i], anchor[i])});
            };
        };
        const int n_i = detail::max_chain(
            [&](int k) {
                const auto bs = detail::fresh_tuples("_k", k, m);
                return detail::increasing_chain(bs, member_of(bs.front()));
            },
            kCountCap);
        out.n_bound = std::max(out.n_bound, n_i);
        // below(k): at least k points of the same part and i-fiber lie lexicographically below a.
        std::vector<Formula> below{mk_true()};
        for (int k = 1; k <= n_i; ++k) {
            const auto bs = detail::fresh_tuples("_k", k, m);
            Formula chain = mk_and(detail::increasing_chain(bs, member_of(a)), lex_lt(bs.back(), a));
            std::vector<std::string> bound;
            for (int s = 0; s < k; ++s) {
                for (const auto &n : tuple_names("_k" + std::to_string(s) + "_", m)) {
                    bound.push_back(n);
                }
            }
            below.push_back(simplify(project_exists(bound, chain)));
        }
        below.push_back(mk_false());
        std::vector<Formula> idx;
        for (int j = 0; j < n_i; ++j) {
            const auto uj = static_cast<std::size_t>(j);
            idx.push_back(simplify(mk_and({part, below[uj], nnf(mk_not(below[uj + 1]))})));
        }
        out.index.push_back(std::move(idx));
    }
    out.injective = true;
    for (std::size_t i = 0; i < m; ++i) {
        for (const auto &f : out.index[i]) {
            out.injective = out.injective && !satisfiable(mk_and({f, at(f, b), same(a, b), mk_eq(a[i], b[i]),
                                                                 nnf(mk_not(tuple_eq(a, b)))}));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Structural lemmas, as checkable statements about a given order.

// A pair a <_P b whose open interval has full dimension, if any.
inline std::optional<Assignment> full_dim_interval(const DefLinOrder &p, const IntervalDims &dims)
{
    const Dim l = dim(p.carrier_set());
    const Formula guard = fiber_dim_where(dims.pieces, [&](Dim d) { return d == l; });
    return find_model(mk_and({p.in(as_terms(p.left)), p.in(as_terms(p.right)), guard}));
}

// Points a of P at which both rays (-inf,a]_P and [a,+inf)_P are closed in P.
inline Formula closed_rays_locus(const DefLinOrder &p)
{
    const auto a = as_terms(p.left);
    const auto xs = tuple_names("_x", p.arity());
    const auto x = as_terms(xs);
    const Formula down = mk_and(p.in(x), p.le(x, a));
    const Formula up = mk_and(p.in(x), p.le(a, x));
    const Formula leaks_down = project_exists(xs, mk_and({p.in(x), closure(down, xs), nnf(mk_not(p.le(x, a)))}));
    const Formula leaks_up = project_exists(xs, mk_and({p.in(x), closure(up, xs), nnf(mk_not(p.le(a, x)))}));
    return simplify(mk_and({p.in(a), nnf(mk_not(leaks_down)), nnf(mk_not(leaks_up))}));
}

// a ~ b, a <=_P c <=_P b implies a ~ c.
inline bool classes_convex(const DefLinOrder &p, const Formula &rel)
{
    const auto a = as_terms(p.left);
    const auto b = as_terms(p.right);
    const auto c = as_terms(tuple_names("_c", p.arity()));
    const Formula rel_ac = at_pair(p, rel, a, c);
    return !satisfiable(mk_and({rel, p.in(c), p.le(a, c), p.le(c, b), nnf(mk_not(rel_ac))}));
}

// The partition of P by the dimension of the class [a] of rel.
inline std::vector<FiberPiece> class_dims(const DefLinOrder &p, const Formula &rel)
{
    return fiber_dim_partition(rel, p.right);
}

// Points of P whose class is finite.
inline Formula finite_class_locus(const DefLinOrder &p, const std::vector<FiberPiece> &dims)
{
    return simplify(mk_and(p.in(as_terms(p.left)), fiber_dim_where(dims, [](Dim d) { return d <= Dim::of(0); })));
}

} // namespace tame

#endif // TAME_ORDKIT_HPP
