#ifndef TAME_ACCEPTANCE_HPP
#define TAME_ACCEPTANCE_HPP

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <tame/cutdef.hpp>
#include <tame/engine.hpp>
#include <tame/generators.hpp>
#include <tame/io.hpp>
#include <tame/oracles.hpp>
#include <tame/ordkit.hpp>
#include <tame/random.hpp>
#include <tame/star_sets.hpp>
#include <tame/syntax.hpp>

namespace tame::acceptance
{

struct Options {
    std::uint64_t seed = 0;
    std::optional<int> count; // instances per randomized criterion (default: full size)
    std::string corpus_dir;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = true;
    int instances = 0;
    int failures = 0;
    std::string detail; // first failure, if any
    double seconds = 0; // not part of the report
};

struct NamedOrder {
    std::string name;
    DefLinOrder order;
};

// Every *.sexp file of the corpus directory, sorted by name.
inline std::vector<NamedOrder> load_corpus(const std::string &dir)
{
    std::vector<std::filesystem::path> files;
    for (const auto &e : std::filesystem::directory_iterator(dir)) {
        if (e.path().extension() == ".sexp") {
            files.push_back(e.path());
        }
    }
    std::sort(files.begin(), files.end(),
              [](const auto &a, const auto &b) { return a.stem().string() < b.stem().string(); });
    std::vector<NamedOrder> out;
    for (const auto &f : files) {
        out.push_back({f.stem().string(), parse_deflinorder(read_file(f.string()).at(0))});
    }
    return out;
}

// Orders of the corpus that satisfy the linear order axioms.
inline std::vector<NamedOrder> valid_orders(const std::vector<NamedOrder> &corpus)
{
    std::vector<NamedOrder> out;
    for (const auto &o : corpus) {
        if (check_linear_order(o.order).ok) {
            out.push_back(o);
        }
    }
    return out;
}

namespace detail
{

inline int count_or(const Options &o, int full)
{
    return o.count ? std::min(*o.count, full) : full;
}

inline Generator generator(const Options &o, int criterion)
{
    return Generator(o.seed * 1000003u + static_cast<std::uint64_t>(criterion));
}

// Runs `body` for instances 0..n-1; a false return or an exception is a failure.
inline void run_instances(CriterionResult &r, int n, const std::function<bool(int, std::string &)> &body)
{
    for (int i = 0; i < n; ++i) {
        std::string why;
        bool ok = false;
        try {
            ok = body(i, why);
        } catch (const std::exception &e) {
            why = std::string("exception: ") + e.what();
        }
        ++r.instances;
        if (!ok) {
            ++r.failures;
            if (r.detail.empty()) {
                r.detail = "instance " + std::to_string(i) + ": " + why;
            }
        }
    }
    r.passed = r.failures == 0 && r.instances > 0;
}

inline std::vector<Rational> grid(const Rational &lo, const Rational &hi, const Rational &step)
{
    std::vector<Rational> out;
    for (Rational x = lo; x <= hi; x += step) {
        out.push_back(x);
    }
    return out;
}

// Standard points of P on a grid, plus its isolated integer points.
inline std::vector<Assignment> carrier_probes(const DefLinOrder &p)
{
    const auto axis = grid(Rational(-1), Rational(5), Rational(1, 4));
    std::vector<Assignment> out;
    std::vector<std::size_t> idx(p.arity(), 0);
    for (;;) {
        Assignment env;
        for (std::size_t k = 0; k < p.arity(); ++k) {
            env[p.left[k]] = StarNum(axis[idx[k]]);
        }
        if (eval_qf(p.carrier, env)) {
            out.push_back(std::move(env));
        }
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == axis.size()) {
            idx[k++] = 0;
        }
        if (k == idx.size()) {
            break;
        }
    }
    return out;
}

} // namespace detail

// 1. Quantifier elimination against brute-force evaluation, VS against FM.
inline CriterionResult qe_soundness(const Options &o)
{
    CriterionResult r{1, "QE soundness"};
    Generator g = detail::generator(o, 1);
    EndpointOracle oracle;
    const std::vector<std::string> free{"a", "b"};
    const std::vector<Rational> axis{Rational(-2), Rational(-1), Rational(-1, 2), Rational(0),
                                     Rational(1, 2), Rational(1), Rational(2)};
    detail::run_instances(r, detail::count_or(o, 500), [&](int, std::string &why) {
        const Formula f = g.formula(free, 3, 8, 5);
        const Formula vs = qe_eliminate(f);
        if (!is_quantifier_free(vs)) {
            why = "output has quantifiers: " + print(f);
            return false;
        }
        for (const auto &a : axis) {
            for (const auto &b : axis) {
                const Assignment env{{"a", StarNum(a)}, {"b", StarNum(b)}};
                if (eval_qf(vs, env) != oracle.eval(f, env)) {
                    why = "disagrees with endpoint evaluation: " + print(f);
                    return false;
                }
            }
        }
        if (!equivalent(vs, qe_fourier_motzkin(f))) {
            why = "virtual substitution and Fourier-Motzkin differ: " + print(f);
            return false;
        }
        return true;
    });
    return r;
}

// 2. The defining property of define_type against the atomwise oracle.
inline CriterionResult type_definitions(const Options &o)
{
    CriterionResult r{2, "definable types"};
    Generator g = detail::generator(o, 2);
    detail::run_instances(r, detail::count_or(o, 300), [&](int i, std::string &why) {
        const EliminateDecl d = random_eliminate(g, 3, 2, 6);
        const TypeDefResult t = define_type(d);
        const TypeDefResult oracle = oracle_define_type(d);
        const Verification v = verify_equivalence(d, t, oracle, o.seed + static_cast<std::uint64_t>(i));
        if (!v.ok) {
            why = v.reason + ": " + print(d.delta);
            return false;
        }
        if (t.trace.depth() != d.x.size() || !t.trace.well_formed()) {
            why = "trace certificate failed: " + print(d.delta);
            return false;
        }
        return true;
    });
    return r;
}

// 3. Quotient certificates on the corpus, and the threshold-one divergence.
inline CriterionResult quotient_certificates(const Options &o, const std::vector<NamedOrder> &orders)
{
    CriterionResult r{3, "quotient certificates"};
    const int n = detail::count_or(o, static_cast<int>(orders.size()));
    detail::run_instances(r, n, [&](int i, std::string &why) {
        const MonotoneQuotient q = quotient_reduce(orders[static_cast<std::size_t>(i)].order);
        const QuotientCertificate &c = q.cert;
        if (!c.all() || q.target_dim.value() + 1 != q.source_dim.value()) {
            why = orders[static_cast<std::size_t>(i)].name + ": certificate failed";
            return false;
        }
        return true;
    });
    const auto lex = std::find_if(orders.begin(), orders.end(), [](const NamedOrder &x) { return x.name == "lex-square"; });
    detail::run_instances(r, lex == orders.end() ? 0 : 1, [&](int, std::string &why) {
        why = "threshold one should keep dimension 2 on the lex square";
        return !quotient_reduce(lex->order, 1).cert.dim_drop && quotient_reduce(lex->order, 2).cert.dim_drop;
    });
    r.passed = r.failures == 0 && lex != orders.end() && static_cast<int>(orders.size()) >= std::min(n, 6);
    return r;
}

// 4. Lemmas on intervals, rays and classes over the corpus.
inline CriterionResult order_lemmas(const Options &o, const std::vector<NamedOrder> &orders)
{
    CriterionResult r{4, "order lemmas"};
    detail::run_instances(r, detail::count_or(o, static_cast<int>(orders.size())), [&](int i, std::string &why) {
        const NamedOrder &no = orders[static_cast<std::size_t>(i)];
        const DefLinOrder &p = no.order;
        const int l = dim(p.carrier_set()).value();
        const IntervalDims dims = interval_dims(p);
        if (!full_dim_interval(p, dims)) {
            why = no.name + ": no full-dimensional interval";
            return false;
        }
        if (dim(closed_rays_locus(p), p.left) > Dim::of(1)) {
            why = no.name + ": closed-rays locus too large";
            return false;
        }
        for (int d = 1; d <= l; ++d) {
            const Formula rel = interval_dim_relation(p, d, dims);
            if (!classes_convex(p, rel)) {
                why = no.name + ": classes not convex for d = " + std::to_string(d);
                return false;
            }
            const auto cd = class_dims(p, rel);
            for (const auto &piece : cd) {
                if (piece.dim >= Dim::of(d)) {
                    why = no.name + ": class dimension bound fails for d = " + std::to_string(d);
                    return false;
                }
            }
            if (d == l && dim(finite_class_locus(p, cd), p.left) >= Dim::of(l)) {
                why = no.name + ": finite-class locus too large";
                return false;
            }
        }
        return true;
    });
    return r;
}

// 5. Standard part of the measure of infinitesimally perturbed sets.
inline CriterionResult measure_lemma(const Options &o)
{
    CriterionResult r{5, "measure of perturbed sets"};
    Generator g = detail::generator(o, 5);
    const StarNum eps = StarNum::eps();
    detail::run_instances(r, detail::count_or(o, 100), [&](int, std::string &why) {
        const auto ivs = random_intervals(g, 4);
        Rational length(0);
        std::vector<std::pair<Rational, Rational>> beyond;
        for (const auto &[lo, hi] : ivs) {
            length += hi - lo;
        }
        const Formula a = interval_union(ivs, "t", StarNum{}, StarNum{});
        const Formula fat = interval_union(ivs, "t", -eps, eps, g.coin());
        // eps-scaled translates placed just right of each component.
        std::vector<Formula> parts;
        const LinTerm t = LinTerm::var("t");
        for (const auto &[lo, hi] : ivs) {
            parts.push_back(mk_and(mk_lt(LinTerm(hi), t), mk_lt(t, LinTerm(StarNum(hi) + eps * (hi - lo)))));
        }
        const Formula shifted = mk_or(std::move(parts));
        if (!valid(mk_implies(a, fat)) || satisfiable(mk_and(a, shifted))) {
            why = "generated sets have the wrong shape";
            return false;
        }
        const StarNum ma = mu_star(a, "t");
        const StdValue sf = std_part(mu_star(fat, "t"));
        const StdValue ss = std_part(mu_star(shifted, "t"));
        if (ma != StarNum(length) || !(length > 0) || sf != StdValue(length) || ss != StdValue(Rational(0))) {
            why = "measure mismatch on " + print(a);
            return false;
        }
        return true;
    });
    return r;
}

// 6. cut_definable on random cuts of corpus orders, and the rejected non-cut.
inline CriterionResult cut_soundness(const Options &o, const std::vector<NamedOrder> &orders)
{
    CriterionResult r{6, "definable cuts"};
    Generator g = detail::generator(o, 6);
    SkeletonCache cache;
    detail::run_instances(r, detail::count_or(o, 100), [&](int i, std::string &why) {
        const NamedOrder &no = orders[static_cast<std::size_t>(i) % orders.size()];
        const auto spec = random_cutspec(g, no.order);
        if (!spec) {
            why = no.name + ": no cut generated";
            return false;
        }
        const CutResult c = cut_definable(*spec, cache);
        if (!is_downward_closed(no.order, c.w).cut) {
            why = no.name + ": output is not a cut for V = " + print(spec->v);
            return false;
        }
        if (!equivalent(c.w, trace_on(*spec))) {
            why = no.name + ": output differs from the standard trace for V = " + print(spec->v);
            return false;
        }
        for (const auto &env : detail::carrier_probes(no.order)) {
            if (eval_qf(c.w, env) != eval_star(spec->v, env)) {
                why = no.name + ": probe disagreement for V = " + print(spec->v);
                return false;
            }
        }
        return true;
    });
    detail::run_instances(r, 1, [&](int, std::string &why) {
        const DefLinOrder line = make_order(parse("true"), parse("(<= a1 b1)"), 1);
        const CutSpec bad{line, parse("(or (and (< 0 a1) (< a1 1)) (= a1 omega))")};
        const CutCheck check = is_cut(bad);
        why = "(0,1) u {omega} should be rejected and the hull shortcut should differ on it";
        return !check.cut && check.witness && !equivalent(hull_cut(bad), trace_on(bad));
    });
    return r;
}

// 7. One-variable standard traces against dense probes and the atomwise table.
inline CriterionResult base_case(const Options &o)
{
    CriterionResult r{7, "one-variable traces"};
    Generator g = detail::generator(o, 7);
    const auto axis = detail::grid(Rational(-8), Rational(8), Rational(1, 8));
    detail::run_instances(r, detail::count_or(o, 50), [&](int, std::string &why) {
        const Formula a = g.boolean({"t"}, static_cast<int>(g.uniform(1, 4)), 5);
        const Formula b = g.star_boolean({"t"}, static_cast<int>(g.uniform(1, 4)), 5);
        const Formula s = mk_and(a, b);
        const StandardTrace1d tr = standard_points_1d(s, "t");
        const Formula w = tr.formula();
        std::vector<Rational> probes = axis;
        for (std::size_t k = 0; k < tr.points.size(); ++k) {
            probes.push_back(tr.points[k]);
            probes.push_back(tr.points[k] + Rational(1, 1000));
            probes.push_back(tr.points[k] - Rational(1, 1000));
        }
        for (const auto &x : probes) {
            const Assignment env{{"t", StarNum(x)}};
            if (eval_qf(w, env) != eval_star(s, env)) {
                why = "trace disagrees with membership for " + print(s);
                return false;
            }
        }
        if (!equivalent(w, standardize_atomwise(s))) {
            why = "trace differs from the atomwise table for " + print(s);
            return false;
        }
        return true;
    });
    return r;
}

inline nlohmann::ordered_json to_json(const std::vector<CriterionResult> &results, const Options &o)
{
    nlohmann::ordered_json j;
    j["seed"] = o.seed;
    j["count"] = o.count ? nlohmann::ordered_json(*o.count) : nlohmann::ordered_json(nullptr);
    j["criteria"] = nlohmann::ordered_json::array();
    for (const auto &c : results) {
        j["criteria"].push_back({{"id", c.id},
                                 {"name", c.name},
                                 {"passed", c.passed},
                                 {"instances", c.instances},
                                 {"failures", c.failures},
                                 {"detail", c.detail}});
    }
    return j;
}

// Criteria 1-7 once.
inline std::vector<CriterionResult> run_suite(const Options &o)
{
    const auto corpus = load_corpus(o.corpus_dir);
    const auto orders = valid_orders(corpus);
    const std::vector<std::function<CriterionResult()>> steps{
        [&] { return qe_soundness(o); },
        [&] { return type_definitions(o); },
        [&] { return quotient_certificates(o, orders); },
        [&] { return order_lemmas(o, orders); },
        [&] { return measure_lemma(o); },
        [&] { return cut_soundness(o, orders); },
        [&] { return base_case(o); },
    };
    std::vector<CriterionResult> out;
    for (const auto &step : steps) {
        const auto t0 = std::chrono::steady_clock::now();
        CriterionResult c = step();
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(c));
    }
    return out;
}

struct SuiteRun {
    std::vector<CriterionResult> results; // criteria 1-8
    std::string report;                   // JSON of the first run, criterion 8 included
};

// The suite twice; criterion 8 compares the two reports and checks the
// time of one run against `budget_seconds`.
inline SuiteRun run_acceptance(const Options &o, double budget_seconds = 600)
{
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<CriterionResult> first = run_suite(o);
    const double once = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const std::vector<CriterionResult> second = run_suite(o);
    const bool same = to_json(first, o).dump() == to_json(second, o).dump();
    CriterionResult det{8, "determinism and budget"};
    det.instances = 2;
    det.passed = same && once < budget_seconds;
    det.failures = det.passed ? 0 : 1;
    det.seconds = once;
    if (!same) {
        det.detail = "reports differ between runs";
    } else if (once >= budget_seconds) {
        det.detail = "suite exceeded the time budget";
    }
    first.push_back(det);
    return {first, to_json(first, o).dump(2)};
}

} // namespace tame::acceptance

#endif // TAME_ACCEPTANCE_HPP
