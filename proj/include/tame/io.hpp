#ifndef TAME_IO_HPP
#define TAME_IO_HPP

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <tame/ordkit.hpp>
#include <tame/sexpr.hpp>
#include <tame/syntax.hpp>

namespace tame
{

// Input declarations:
//   (deflinorder :carrier F :order F :arity m [:left (a1 ..) :right (b1 ..)])
//   (cutspec :order (deflinorder ..) :v F)
//   (eliminate :delta F :x (x1 ..) :y (y1 ..) :a (s1 ..))
// Any other top-level expression is read as a formula.

struct EliminateDecl {
    Formula delta;
    std::vector<std::string> x;
    std::vector<std::string> y;
    StarPoint a;
};

struct CutSpec {
    DefLinOrder order;
    Formula v; // over order.left, may carry star constants
};

inline std::string read_text(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline std::vector<SExpr> read_file(const std::string &path)
{
    return SExprReader(read_text(path)).read_all();
}

namespace detail
{

inline bool is_decl(const SExpr &e, std::string_view head)
{
    return e.is_list && !e.items.empty() && e.items[0].is_symbol(head);
}

// Keyword arguments of (head :k1 v1 :k2 v2 ...); every key must be in `allowed`.
inline std::map<std::string, const SExpr *> keywords(const SExpr &e, const std::vector<std::string> &allowed)
{
    std::map<std::string, const SExpr *> out;
    if ((e.items.size() % 2) != 1) {
        e.fail("expected keyword/value pairs");
    }
    for (std::size_t i = 1; i + 1 < e.items.size(); i += 2) {
        const SExpr &k = e.items[i];
        if (k.is_list || k.atom.empty() || k.atom[0] != ':') {
            k.fail("expected a keyword");
        }
        const std::string key = k.atom.substr(1);
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            k.fail("unknown keyword :" + key);
        }
        if (!out.emplace(key, &e.items[i + 1]).second) {
            k.fail("duplicate keyword :" + key);
        }
    }
    return out;
}

inline const SExpr &required(const std::map<std::string, const SExpr *> &kw, const SExpr &e, const std::string &key)
{
    auto it = kw.find(key);
    if (it == kw.end()) {
        e.fail("missing :" + key);
    }
    return *it->second;
}

inline std::vector<std::string> name_list(const SExpr &e)
{
    if (!e.is_list) {
        e.fail("expected a list of variable names");
    }
    std::vector<std::string> out;
    for (const auto &v : e.items) {
        if (v.is_list || !is_identifier(v.atom)) {
            v.fail("expected a variable name");
        }
        out.push_back(v.atom);
    }
    return out;
}

} // namespace detail

inline DefLinOrder parse_deflinorder(const SExpr &e)
{
    if (!detail::is_decl(e, "deflinorder")) {
        e.fail("expected (deflinorder ...)");
    }
    const auto kw = detail::keywords(e, {"carrier", "order", "arity", "left", "right"});
    const SExpr &ar = detail::required(kw, e, "arity");
    if (ar.is_list || !detail::looks_numeric(ar.atom) || std::stol(ar.atom) < 1) {
        ar.fail("arity must be a positive integer");
    }
    const auto m = static_cast<std::size_t>(std::stol(ar.atom));
    DefLinOrder p = make_order(parse_formula(detail::required(kw, e, "carrier")),
                               parse_formula(detail::required(kw, e, "order")), m);
    if (kw.contains("left")) {
        p.left = detail::name_list(*kw.at("left"));
    }
    if (kw.contains("right")) {
        p.right = detail::name_list(*kw.at("right"));
    }
    if (p.left.size() != m || p.right.size() != m) {
        e.fail("arity mismatch: :left and :right must have " + std::to_string(m) + " names");
    }
    for (const auto &v : p.carrier->free) {
        if (std::find(p.right.begin(), p.right.end(), v) != p.right.end()) {
            e.fail("carrier mentions right-hand variable " + v);
        }
    }
    return p;
}

inline CutSpec parse_cutspec(const SExpr &e)
{
    if (!detail::is_decl(e, "cutspec")) {
        e.fail("expected (cutspec ...)");
    }
    const auto kw = detail::keywords(e, {"order", "v"});
    return {parse_deflinorder(detail::required(kw, e, "order")), parse_formula(detail::required(kw, e, "v"))};
}

inline EliminateDecl parse_eliminate(const SExpr &e)
{
    if (!detail::is_decl(e, "eliminate")) {
        e.fail("expected (eliminate ...)");
    }
    const auto kw = detail::keywords(e, {"delta", "x", "y", "a"});
    EliminateDecl d{parse_formula(detail::required(kw, e, "delta")), detail::name_list(detail::required(kw, e, "x")),
                    detail::name_list(detail::required(kw, e, "y")), {}};
    const SExpr &a = detail::required(kw, e, "a");
    if (!a.is_list) {
        a.fail("expected a list of star literals");
    }
    for (const auto &s : a.items) {
        d.a.push_back(parse_star(s));
    }
    if (d.a.size() != d.x.size()) {
        a.fail("arity mismatch: " + std::to_string(d.x.size()) + " x-variables but " + std::to_string(d.a.size()) +
               " values");
    }
    for (const auto &v : d.delta->free) {
        if (std::find(d.x.begin(), d.x.end(), v) == d.x.end() && std::find(d.y.begin(), d.y.end(), v) == d.y.end()) {
            e.fail("delta mentions undeclared variable " + v);
        }
    }
    if (has_star_constants(d.delta)) {
        e.fail("delta must be standard; pass star values through :a");
    }
    return d;
}

inline std::string print_names(const std::vector<std::string> &names)
{
    std::string s = "(";
    for (std::size_t i = 0; i < names.size(); ++i) {
        s += (i ? " " : "") + names[i];
    }
    return s + ")";
}

inline std::string print_deflinorder(const DefLinOrder &p)
{
    return "(deflinorder :carrier " + print(p.carrier) + " :order " + print(p.order) +
           " :arity " + std::to_string(p.arity()) + " :left " + print_names(p.left) + " :right " +
           print_names(p.right) + ")";
}

inline std::string print_tuple(const std::vector<Rational> &values)
{
    std::string s = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        s += (i ? " " : "") + to_string(values[i]);
    }
    return s + ")";
}

} // namespace tame

#endif // TAME_IO_HPP
