#ifndef TAME_SYNTAX_HPP
#define TAME_SYNTAX_HPP

#include <cctype>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <tame/formula.hpp>
#include <tame/sexpr.hpp>
#include <tame/star.hpp>

namespace tame
{

namespace detail
{

inline const std::set<std::string> &reserved_words()
{
    static const std::set<std::string> words{"<",   "<=",     ">",      ">=",   "=",    "+",       "-",
                                             "*",   "and",    "or",     "not",  "true", "false",   "exists",
                                             "forall", "implies", "iff", "eps", "omega", "star"};
    return words;
}

inline bool looks_numeric(const std::string &s)
{
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
        return false;
    }
    bool slash = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '/' && !slash && i + 1 < s.size()) {
            slash = true;
        } else if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

inline Rational rational_literal(const SExpr &e)
{
    if (e.is_list || !looks_numeric(e.atom)) {
        e.fail("expected a rational literal");
    }
    std::string s = e.atom;
    if (s[0] == '+') {
        s.erase(0, 1);
    }
    try {
        return parse_rational(s);
    } catch (const std::invalid_argument &ex) {
        e.fail(ex.what());
    }
}

inline bool is_identifier(const std::string &s)
{
    if (s.empty() || looks_numeric(s) || reserved_words().contains(s)) {
        return false;
    }
    const unsigned char c = static_cast<unsigned char>(s[0]);
    return std::isalpha(c) || c == '_';
}

} // namespace detail

inline StarNum parse_star(const SExpr &e)
{
    if (!e.is_list) {
        if (e.atom == "eps") {
            return StarNum::eps();
        }
        if (e.atom == "omega") {
            return StarNum::omega();
        }
        return StarNum(detail::rational_literal(e));
    }
    if (e.items.empty() || !e.items[0].is_symbol("star")) {
        e.fail("expected a star literal");
    }
    StarNum s;
    for (std::size_t i = 1; i < e.items.size(); ++i) {
        const auto &t = e.items[i];
        if (!t.is_list || t.items.size() != 2) {
            t.fail("star component must be (exponent coefficient)");
        }
        const Rational ex = detail::rational_literal(t.items[0]);
        if (ex.get_den() != 1 || !ex.get_num().fits_sint_p()) {
            t.items[0].fail("star exponent must be a small integer");
        }
        s += StarNum::scale(static_cast<int>(ex.get_num().get_si()), detail::rational_literal(t.items[1]));
    }
    return s;
}

inline LinTerm parse_term(const SExpr &e)
{
    if (!e.is_list) {
        if (e.atom == "eps" || e.atom == "omega" || detail::looks_numeric(e.atom)) {
            return LinTerm(parse_star(e));
        }
        if (!detail::is_identifier(e.atom)) {
            e.fail("unknown symbol '" + e.atom + "' in term position");
        }
        return LinTerm::var(e.atom);
    }
    if (e.items.empty() || e.items[0].is_list) {
        e.fail("expected a term");
    }
    const std::string &op = e.items[0].atom;
    const std::size_t n = e.items.size() - 1;
    if (op == "star") {
        return LinTerm(parse_star(e));
    }
    if (op == "+") {
        LinTerm t;
        for (std::size_t i = 1; i <= n; ++i) {
            t += parse_term(e.items[i]);
        }
        return t;
    }
    if (op == "-") {
        if (n == 1) {
            return -parse_term(e.items[1]);
        }
        if (n != 2) {
            e.fail("arity mismatch: '-' takes one or two arguments");
        }
        return parse_term(e.items[1]) - parse_term(e.items[2]);
    }
    if (op == "*") {
        if (n < 2) {
            e.fail("arity mismatch: '*' takes at least two arguments");
        }
        Rational scale = 1;
        std::optional<LinTerm> rest;
        for (std::size_t i = 1; i <= n; ++i) {
            const auto &a = e.items[i];
            if (!a.is_list && detail::looks_numeric(a.atom)) {
                scale *= detail::rational_literal(a);
            } else if (rest) {
                a.fail("nonlinear product: at most one non-numeric factor");
            } else {
                rest = parse_term(a);
            }
        }
        return scale * (rest ? *rest : LinTerm(Rational(1)));
    }
    e.items[0].fail("unknown symbol '" + op + "' in term position");
}

inline Formula parse_formula(const SExpr &e)
{
    if (!e.is_list) {
        if (e.atom == "true") {
            return mk_true();
        }
        if (e.atom == "false") {
            return mk_false();
        }
        e.fail("unknown symbol '" + e.atom + "' in formula position");
    }
    if (e.items.empty() || e.items[0].is_list) {
        e.fail("expected a formula");
    }
    const std::string &op = e.items[0].atom;
    const std::size_t n = e.items.size() - 1;
    auto binary = [&](auto make) {
        if (n != 2) {
            e.fail("arity mismatch: '" + op + "' takes two arguments");
        }
        return make(parse_term(e.items[1]), parse_term(e.items[2]));
    };
    if (op == "<") {
        return binary([](const LinTerm &a, const LinTerm &b) { return mk_lt(a, b); });
    }
    if (op == "<=") {
        return binary([](const LinTerm &a, const LinTerm &b) { return mk_le(a, b); });
    }
    if (op == ">") {
        return binary([](const LinTerm &a, const LinTerm &b) { return mk_lt(b, a); });
    }
    if (op == ">=") {
        return binary([](const LinTerm &a, const LinTerm &b) { return mk_le(b, a); });
    }
    if (op == "=") {
        return binary([](const LinTerm &a, const LinTerm &b) { return mk_eq(a, b); });
    }
    if (op == "and" || op == "or") {
        std::vector<Formula> kids;
        for (std::size_t i = 1; i <= n; ++i) {
            kids.push_back(parse_formula(e.items[i]));
        }
        return op == "and" ? mk_and(std::move(kids)) : mk_or(std::move(kids));
    }
    if (op == "not") {
        if (n != 1) {
            e.fail("arity mismatch: 'not' takes one argument");
        }
        return mk_not(parse_formula(e.items[1]));
    }
    if (op == "implies" || op == "iff") {
        if (n != 2) {
            e.fail("arity mismatch: '" + op + "' takes two arguments");
        }
        const Formula a = parse_formula(e.items[1]);
        const Formula b = parse_formula(e.items[2]);
        return op == "implies" ? mk_implies(a, b) : mk_iff(a, b);
    }
    if (op == "exists" || op == "forall") {
        if (n != 2 || !e.items[1].is_list) {
            e.fail("arity mismatch: '" + op + "' takes a variable list and a body");
        }
        std::vector<std::string> vs;
        for (const auto &v : e.items[1].items) {
            if (v.is_list || !detail::is_identifier(v.atom)) {
                v.fail("expected a variable name");
            }
            vs.push_back(v.atom);
        }
        const Formula body = parse_formula(e.items[2]);
        return op == "exists" ? mk_exists(vs, body) : mk_forall(vs, body);
    }
    e.items[0].fail("unknown symbol '" + op + "' in formula position");
}

inline Formula parse(std::string_view text)
{
    return parse_formula(read_sexpr(text));
}

inline std::string print_term(const LinTerm &t)
{
    std::vector<std::string> parts;
    for (const auto &[v, c] : t.coeffs()) {
        parts.push_back(c == 1 ? v : "(* " + to_string(c) + " " + v + ")");
    }
    if (!t.constant().is_zero() || parts.empty()) {
        parts.push_back(to_string(t.constant()));
    }
    if (parts.size() == 1) {
        return parts.front();
    }
    std::string s = "(+";
    for (const auto &p : parts) {
        s += " " + p;
    }
    return s + ")";
}

namespace detail
{

inline void print_rec(const Formula &f, std::string &out)
{
    switch (f->kind) {
        case Kind::top:
            out += "true";
            return;
        case Kind::bottom:
            out += "false";
            return;
        case Kind::atom: {
            // Split t = pos - neg so that the atom reads pos rel neg.
            LinTerm pos;
            LinTerm neg;
            for (const auto &[v, c] : f->atom.term.coeffs()) {
                (c > 0 ? pos : neg) += LinTerm::var(v, c > 0 ? c : Rational(-c));
            }
            const StarNum &k = f->atom.term.constant();
            // A constant goes to the side without variables when there is one.
            if (neg.is_constant() && !pos.is_constant()) {
                neg += LinTerm(-k);
            } else if (pos.is_constant() && !neg.is_constant()) {
                pos += LinTerm(k);
            } else if (k.sign() > 0) {
                pos += LinTerm(k);
            } else if (k.sign() < 0) {
                neg += LinTerm(-k);
            }
            const char *op = f->atom.rel == Rel::lt ? "<" : (f->atom.rel == Rel::le ? "<=" : "=");
            out += std::string("(") + op + " " + print_term(pos) + " " + print_term(neg) + ")";
            return;
        }
        case Kind::negation:
            out += "(not ";
            print_rec(f->kids.front(), out);
            out += ")";
            return;
        case Kind::conj:
        case Kind::disj:
            out += f->kind == Kind::conj ? "(and" : "(or";
            for (const auto &k : f->kids) {
                out += " ";
                print_rec(k, out);
            }
            out += ")";
            return;
        case Kind::exists:
        case Kind::forall: {
            std::vector<std::string> vs;
            Formula g = f;
            while (g->kind == f->kind) {
                vs.push_back(g->var);
                g = g->kids.front();
            }
            out += f->kind == Kind::exists ? "(exists (" : "(forall (";
            for (std::size_t i = 0; i < vs.size(); ++i) {
                out += (i ? " " : "") + vs[i];
            }
            out += ") ";
            print_rec(g, out);
            out += ")";
            return;
        }
    }
}

} // namespace detail

inline std::string print(const Formula &f)
{
    std::string out;
    detail::print_rec(f, out);
    return out;
}

} // namespace tame

#endif // TAME_SYNTAX_HPP
