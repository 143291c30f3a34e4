// tame-elim: command-line front end.
//
// Exit codes: 0 success, 1 verification or certificate failure, 2 input error.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <tame/acceptance.hpp>
#include <tame/cells.hpp>
#include <tame/cutdef.hpp>
#include <tame/engine.hpp>
#include <tame/io.hpp>
#include <tame/ordkit.hpp>
#include <tame/qe.hpp>
#include <tame/report.hpp>
#include <tame/semilinear.hpp>
#include <tame/syntax.hpp>

#ifndef TAME_CORPUS_DIR
#define TAME_CORPUS_DIR "corpus"
#endif

using namespace tame;

namespace
{

struct Settings {
    std::string file;
    bool json = false;
    std::uint64_t seed = 0;
    std::optional<int> count;
    bool iterate = false;
    bool trace = false;
    bool oracle = false;
    bool verify = false;
    std::string corpus = TAME_CORPUS_DIR;
};

// Input problems: exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Timer
{
public:
    explicit Timer(std::string phase) : m_phase(std::move(phase)), m_t0(std::chrono::steady_clock::now()) {}
    ~Timer()
    {
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - m_t0).count();
        std::cerr << "# time " << m_phase << ": " << s << " s\n";
    }

private:
    std::string m_phase;
    std::chrono::steady_clock::time_point m_t0;
};

struct Input {
    std::string text;
    std::vector<SExpr> exprs;
};

Input load(const Settings &s)
{
    Input in;
    try {
        in.text = read_text(s.file);
        in.exprs = SExprReader(in.text).read_all();
    } catch (const std::exception &e) {
        throw InputError(e.what());
    }
    if (in.exprs.empty()) {
        throw InputError(s.file + ": no input");
    }
    return in;
}

const SExpr &declaration(const Input &in, std::string_view head)
{
    for (const auto &e : in.exprs) {
        if (detail::is_decl(e, head)) {
            return e;
        }
    }
    throw InputError("expected a (" + std::string(head) + " ...) declaration");
}

template <typename T, typename Fn>
T parse_input(Fn fn)
{
    try {
        return fn();
    } catch (const InputError &) {
        throw;
    } catch (const std::exception &e) {
        throw InputError(e.what());
    }
}

std::vector<Formula> formulas(const Input &in)
{
    return parse_input<std::vector<Formula>>([&] {
        std::vector<Formula> out;
        for (const auto &e : in.exprs) {
            out.push_back(parse_formula(e));
        }
        return out;
    });
}

std::string label(std::size_t i, std::size_t n, const std::string &base)
{
    return n == 1 ? base : base + "[" + std::to_string(i) + "]";
}

std::vector<std::string> sorted_free(const Formula &f)
{
    return {f->free.begin(), f->free.end()};
}

std::string print_assignment(const Assignment &a)
{
    std::string s = "(";
    bool first = true;
    for (const auto &[k, v] : a) {
        s += (first ? "" : " ") + std::string("(") + k + " " + to_string(v) + ")";
        first = false;
    }
    return s + ")";
}

RunReport start(const std::string &command, const Input &in)
{
    RunReport r;
    r.command = command;
    r.input_digest = digest(in.text);
    return r;
}

// ---------------------------------------------------------------------------
// Commands. Each returns the report; certificate failures are recorded in it.

RunReport cmd_qe(const Settings &s)
{
    const Input in = load(s);
    RunReport r = start("qe", in);
    const auto fs = formulas(in);
    Timer t("qe");
    for (std::size_t i = 0; i < fs.size(); ++i) {
        r.add(label(i, fs.size(), "result"), print(qe_eliminate(fs[i])));
    }
    return r;
}

RunReport cmd_decide(const Settings &s)
{
    const Input in = load(s);
    RunReport r = start("decide", in);
    const auto fs = formulas(in);
    Timer t("decide");
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (!fs[i]->free.empty()) {
            throw InputError("decide needs a sentence; free variables: " + print_names(sorted_free(fs[i])));
        }
        r.add(label(i, fs.size(), "result"), decide(fs[i]) ? "true" : "false");
    }
    return r;
}

RunReport cmd_dim(const Settings &s)
{
    const Input in = load(s);
    RunReport r = start("dim", in);
    const auto fs = formulas(in);
    Timer t("dim");
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (has_star_constants(fs[i])) {
            throw InputError("dim needs a standard formula");
        }
        const Dim d = dim(qe_eliminate(fs[i]), sorted_free(fs[i]));
        r.add(label(i, fs.size(), "result"), d.is_empty() ? "empty" : std::to_string(d.value()));
    }
    return r;
}

RunReport cmd_celldec(const Settings &s)
{
    const Input in = load(s);
    RunReport r = start("celldec", in);
    const auto fs = formulas(in);
    Timer t("celldec");
    Json cells = Json::array();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (has_star_constants(fs[i])) {
            throw InputError("celldec needs a standard formula");
        }
        const auto vars = sorted_free(fs[i]);
        const CellDecomposition cd = cell_decompose(qe_eliminate(fs[i]), vars);
        r.add(label(i, fs.size(), "vars"), print_names(vars));
        for (std::size_t k = 0; k < cd.cells.size(); ++k) {
            const Cell &c = cd.cells[k];
            r.add(label(i, fs.size(), "cell") + " " + std::to_string(k) + " dim " + std::to_string(c.dim()),
                  print(c.formula()));
        }
        r.extra[label(i, fs.size(), "cells")] = cd.cells.size();
    }
    return r;
}

DefLinOrder order_input(const Input &in)
{
    return parse_input<DefLinOrder>([&] { return parse_deflinorder(declaration(in, "deflinorder")); });
}

void order_axioms(RunReport &r, const DefLinOrder &p)
{
    const OrderCertificate c = check_linear_order(p);
    r.certify("linear_order", c.ok);
    if (!c.ok) {
        r.add("violated", c.failed);
        r.add("witness", print_assignment(c.witness));
    }
}

RunReport cmd_ordcheck(const Settings &s)
{
    const Input in = load(s);
    RunReport r = start("ordcheck", in);
    const DefLinOrder p = order_input(in);
    Timer t("ordcheck");
    order_axioms(r, p);
    const Dim d = dim(p.carrier_set());
    r.add("dim", d.is_empty() ? "empty" : std::to_string(d.value()));
    return r;
}

RunReport cmd_reduce_order(const Settings &s)
{
    const Input in = load(s);
    RunReport r = start("reduce-order", in);
    DefLinOrder p = order_input(in);
    Timer t("reduce-order");
    order_axioms(r, p);
    if (!r.certified()) {
        return r;
    }
    Json chain = Json::array();
    for (int step = 0;; ++step) {
        const Dim d = dim(p.carrier_set());
        if (d <= Dim::of(1)) {
            if (step == 0) {
                throw InputError("reduce-order needs an order of dimension >= 2");
            }
            break;
        }
        const MonotoneQuotient q = quotient_reduce(p);
        const std::string tag = s.iterate ? "step " + std::to_string(step) + " " : "";
        r.add(tag + "quotient", print_deflinorder(q.target));
        r.add(tag + "dims", std::to_string(q.source_dim.value()) + " -> " + std::to_string(q.target_dim.value()));
        for (std::size_t k = 0; k < q.rho.pieces.size(); ++k) {
            const auto &pc = q.rho.pieces[k];
            std::string vals;
            for (const auto &v : pc.values) {
                vals += (vals.empty() ? "" : " ") + print_term(v);
            }
            r.add(tag + "rho " + std::to_string(k), print(pc.guard) + " -> (" + vals + ")");
        }
        const std::string prefix = s.iterate ? "step" + std::to_string(step) + "." : "";
        r.certify(prefix + "monotone", q.cert.monotone && q.cert.into);
        r.certify(prefix + "surjective", q.cert.surjective);
        r.certify(prefix + "fiber_dim", q.cert.fiber_dim);
        r.certify(prefix + "dim_drop", q.cert.dim_drop);
        chain.push_back({{"source_dim", q.source_dim.value()},
                         {"target_dim", q.target_dim.value()},
                         {"certificates", to_json(q.cert)},
                         {"rho", map_pieces(q.rho)}});
        if (!s.iterate || !q.cert.all()) {
            break;
        }
        p = q.target;
    }
    r.extra["chain"] = chain;
    return r;
}

RunReport cmd_cutdef(const Settings &s)
{
    const Input in = load(s);
    RunReport r = start("cutdef", in);
    const CutSpec spec = parse_input<CutSpec>([&] { return parse_cutspec(declaration(in, "cutspec")); });
    Timer t("cutdef");
    order_axioms(r, spec.order);
    if (!r.certified()) {
        return r;
    }
    const CutCheck check = is_cut(spec);
    r.certify("cut", check.cut);
    if (!check.cut) {
        r.add("witness_below", print_assignment(check.witness->first));
        r.add("witness_in_w", print_assignment(check.witness->second));
        return r;
    }
    const CutResult c = cut_definable(spec, default_skeletons());
    r.add("w", print(c.w));
    r.omega = c.omega;
    r.certify("downward_closed", is_downward_closed(spec.order, c.w).cut);
    std::string shapes;
    for (const auto &sh : c.shape) {
        shapes += (shapes.empty() ? "" : " ") + sh;
    }
    r.add("shape", shapes);
    if (s.trace) {
        Json frames = Json::array();
        for (const auto &f : c.frames) {
            frames.push_back(to_json(f));
        }
        r.trace = {{"frames", frames}};
    }
    return r;
}

EliminateDecl eliminate_input(const Input &in)
{
    return parse_input<EliminateDecl>([&] { return parse_eliminate(declaration(in, "eliminate")); });
}

void add_type(RunReport &r, const std::string &prefix, const TypeDefResult &t)
{
    r.add(prefix + "phi", print(t.instantiated()));
    r.add(prefix + "template", print(t.phi));
    r.add(prefix + "z", print_names(t.z));
}

void add_verification(RunReport &r, const Verification &v)
{
    r.certify("equivalent", v.ok);
    r.add("probes", std::to_string(v.probes));
    if (!v.ok) {
        r.add("failure", v.reason);
        if (v.witness) {
            r.add("witness", print_assignment(*v.witness));
        }
    }
}

RunReport cmd_eliminate(const Settings &s)
{
    const Input in = load(s);
    RunReport r = start("eliminate", in);
    const EliminateDecl d = eliminate_input(in);
    std::optional<TypeDefResult> t;
    {
        Timer tm("define_type");
        t = define_type(d);
    }
    add_type(r, "", *t);
    r.omega = t->omega;
    r.certify("quasi_order_and_cut", t->trace.well_formed());
    r.certify("depth", t->trace.depth() == d.x.size());
    if (s.trace) {
        r.trace = to_json(t->trace);
    }
    if (s.oracle || s.verify) {
        Timer tm("oracle");
        const TypeDefResult o = oracle_define_type(d);
        if (s.oracle) {
            add_type(r, "oracle ", o);
            r.extra["oracle_omega"] = to_json(o.omega);
        }
        if (s.verify) {
            add_verification(r, verify_equivalence(d, *t, o, s.seed));
        }
    }
    return r;
}

RunReport cmd_oracle(const Settings &s)
{
    const Input in = load(s);
    RunReport r = start("oracle", in);
    const EliminateDecl d = eliminate_input(in);
    Timer tm("oracle");
    const TypeDefResult o = oracle_define_type(d);
    add_type(r, "", o);
    r.omega = o.omega;
    return r;
}

RunReport cmd_verify(const Settings &s)
{
    const Input in = load(s);
    RunReport r = start("verify", in);
    const EliminateDecl d = eliminate_input(in);
    Timer tm("verify");
    const TypeDefResult t = define_type(d);
    const TypeDefResult o = oracle_define_type(d);
    r.add("phi", print(t.instantiated()));
    r.add("oracle phi", print(o.instantiated()));
    r.omega = t.omega;
    add_verification(r, verify_equivalence(d, t, o, s.seed));
    return r;
}

int cmd_selftest(const Settings &s)
{
    acceptance::Options o;
    o.seed = s.seed;
    o.count = s.count;
    o.corpus_dir = s.corpus;
    const auto run = acceptance::run_acceptance(o);
    bool all = true;
    for (const auto &c : run.results) {
        std::cerr << "# time criterion " << c.id << ": " << c.seconds << " s\n";
        all = all && c.passed;
    }
    if (s.json) {
        std::cout << run.report << "\n";
    } else {
        for (const auto &c : run.results) {
            std::cout << "criterion " << c.id << " " << c.name << ": " << (c.passed ? "pass" : "FAIL") << " ("
                      << c.instances << " instances, " << c.failures << " failures)";
            if (!c.detail.empty()) {
                std::cout << " " << c.detail;
            }
            std::cout << "\n";
        }
    }
    return all ? 0 : 1;
}

int emit(const Settings &s, const RunReport &r)
{
    if (s.json) {
        std::cout << r.to_json().dump(2) << "\n";
    } else {
        std::cout << r.to_text();
    }
    return r.certified() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Definable types over ordered vector spaces: elimination, orders and cuts"};
    app.require_subcommand(1);
    app.fallthrough();
    Settings s;
    app.add_flag("--json", s.json, "print one JSON report");
    app.add_option("--seed", s.seed, "random seed");
    app.add_option("--count", s.count, "instances per randomized suite");
    app.add_flag("--iterate", s.iterate, "reduce-order: repeat until dimension 1");
    app.add_flag("--trace", s.trace, "include the recursion trace");
    if (const char *env = std::getenv("TAME_ELIM_TRACE"); env && std::string(env) == "1") {
        s.trace = true;
    }

    std::vector<std::pair<std::string, std::function<RunReport(const Settings &)>>> file_cmds{
        {"qe", cmd_qe},
        {"decide", cmd_decide},
        {"dim", cmd_dim},
        {"celldec", cmd_celldec},
        {"ordcheck", cmd_ordcheck},
        {"reduce-order", cmd_reduce_order},
        {"cutdef", cmd_cutdef},
        {"eliminate", cmd_eliminate},
        {"oracle", cmd_oracle},
        {"verify", cmd_verify},
    };
    const std::map<std::string, std::string> help{
        {"qe", "eliminate quantifiers from each formula"},
        {"decide", "decide each sentence"},
        {"dim", "dimension of each formula's set"},
        {"celldec", "cell decomposition of each formula"},
        {"ordcheck", "check the linear order axioms of a deflinorder"},
        {"reduce-order", "monotone quotient of a deflinorder"},
        {"cutdef", "standard definition of a cut"},
        {"eliminate", "defining formula of the type of a over delta"},
        {"oracle", "atomwise definition of the type"},
        {"verify", "compare eliminate against the oracle"},
    };
    std::function<RunReport(const Settings &)> chosen;
    for (const auto &[name, fn] : file_cmds) {
        CLI::App *sub = app.add_subcommand(name, help.at(name));
        sub->add_option("file", s.file, "input file")->required();
        if (name == "eliminate") {
            sub->add_flag("--oracle", s.oracle, "also print the atomwise result");
            sub->add_flag("--verify", s.verify, "check against the oracle");
        }
        sub->callback([&chosen, f = fn] { chosen = f; });
    }
    bool selftest = false;
    CLI::App *st = app.add_subcommand("selftest", "run the acceptance suite");
    st->add_option("--corpus", s.corpus, "order corpus directory");
    st->callback([&] { selftest = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        if (selftest) {
            return cmd_selftest(s);
        }
        return emit(s, chosen(s));
    } catch (const InputError &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
