#include <map>
#include <string>

#include <gtest/gtest.h>

#include <tame/formula.hpp>
#include <tame/qe.hpp>
#include <tame/random.hpp>
#include <tame/syntax.hpp>

using namespace tame;

namespace
{

Assignment point(std::initializer_list<std::pair<const char *, StarNum>> xs)
{
    Assignment env;
    for (const auto &[k, v] : xs) {
        env.emplace(k, v);
    }
    return env;
}

Assignment random_point(Generator &g, const std::vector<std::string> &vars)
{
    Assignment env;
    for (const auto &v : vars) {
        env[v] = StarNum(g.rational(10, 3));
    }
    return env;
}

} // namespace

TEST(Syntax, ParsesLinearAtom)
{
    const Formula f = parse("(< (+ x (* 3/2 y)) 2)");
    ASSERT_EQ(f->kind, Kind::atom);
    EXPECT_EQ(f->atom.rel, Rel::lt);
    EXPECT_EQ(f->atom.term.coeff("x"), 1);
    EXPECT_EQ(f->atom.term.coeff("y"), Rational(3, 2));
    EXPECT_EQ(f->atom.term.constant(), StarNum(-2));
    EXPECT_EQ(print(f), "(< (+ x (* 3/2 y)) 2)");
}

TEST(Syntax, ParsesQuantifierWithBoundVariable)
{
    const Formula f = parse("(exists (u) (and (< a u) (< u b)))");
    ASSERT_EQ(f->kind, Kind::exists);
    EXPECT_EQ(f->var, "u");
    EXPECT_EQ(free_vars(f), (std::vector<std::string>{"a", "b"}));
}

TEST(Syntax, StarConstantLandsInConstantSlot)
{
    const Formula f = parse("(< x eps)");
    ASSERT_EQ(f->kind, Kind::atom);
    EXPECT_EQ(f->atom.term.constant(), -StarNum::eps());
    EXPECT_TRUE(has_star_constants(f));
    EXPECT_EQ(parse_star(read_sexpr("(star (0 3) (-1 5))")), StarNum(3) + StarNum::eps() * Rational(5));
}

TEST(Syntax, SugarAndComments)
{
    const Formula f = parse("; comment\n(>= (- x) 1) ; trailing");
    EXPECT_EQ(print(f), "(<= x -1)");
    EXPECT_TRUE(is_true(parse("(< 1 2)")));
    EXPECT_TRUE(is_false(parse("(< 2 (* 1/2 4))")));
}

TEST(Syntax, ErrorsCarryPosition)
{
    try {
        parse("(and (< x 1)\n  (frob y))");
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 2);
        EXPECT_EQ(e.column(), 4);
    }
    EXPECT_THROW(parse("(< x)"), ParseError);
    EXPECT_THROW(parse("(< (* x y) 1)"), ParseError);
    EXPECT_THROW(parse("(< x 1"), ParseError);
    EXPECT_THROW(parse("(< x 1/0)"), ParseError);
}

TEST(Evaluate, Boundaries)
{
    const Formula f = parse("(< x 2)");
    EXPECT_TRUE(evaluate(f, point({{"x", StarNum(Rational(3, 2))}})));
    EXPECT_FALSE(evaluate(f, point({{"x", StarNum(2)}})));
    EXPECT_TRUE(evaluate(parse("(< x eps)"), point({{"x", StarNum(0)}})));
}

TEST(Evaluate, Errors)
{
    EXPECT_THROW(evaluate(parse("(< x y)"), point({{"x", StarNum(0)}})), EvalError);
    std::map<std::string, Rational> q{{"x", Rational(0)}};
    EXPECT_THROW(evaluate(parse("(< x eps)"), q), EvalError);
    EXPECT_TRUE(evaluate(parse("(< x 1)"), q));
}

TEST(Substitute, Basics)
{
    const Formula f = parse("(< x y)");
    const Formula g = substitute(f, "x", LinTerm::var("y") + LinTerm(Rational(1)));
    EXPECT_TRUE(is_false(g));
    EXPECT_TRUE(equal(substitute(f, std::map<std::string, LinTerm>{{"x", LinTerm::var("x")}}), f));
}

TEST(Substitute, AvoidsCapture)
{
    const Formula f = parse("(exists (u) (< u x))");
    const Formula g = substitute(f, "x", LinTerm::var("u"));
    ASSERT_EQ(g->kind, Kind::exists);
    EXPECT_NE(g->var, "u");
    EXPECT_EQ(free_vars(g), std::vector<std::string>{"u"});
    // exists u'. u' < u is true for every u.
    EXPECT_TRUE(evaluate(g, point({{"u", StarNum(7)}})));
}

TEST(Nnf, OrderNegation)
{
    EXPECT_EQ(print(nnf(parse("(not (< a b))"))), "(<= b a)");
    EXPECT_EQ(print(nnf(parse("(not (= a b))"))), "(or (< b a) (< a b))");
    EXPECT_EQ(free_vars(parse("(exists (u) (< u x))")), std::vector<std::string>{"x"});
}

TEST(Simplify, BoundMerging)
{
    EXPECT_EQ(print(parse("(and (< x 1) (< x 2))")), "(< x 1)");
    EXPECT_EQ(print(parse("(or (< x 1) (< x 2))")), "(< x 2)");
    EXPECT_TRUE(is_false(parse("(and (< x 1) (< 1 x))")));
    EXPECT_TRUE(is_true(parse("(or (<= x 1) (< 1 x))")));
    EXPECT_EQ(print(parse("(and (<= x 1) (<= 1 x))")), "(= x 1)");
    EXPECT_EQ(print(parse("(or (< x 1) (= x 1))")), "(<= x 1)");
}

// print then parse gives an equivalent formula; checked pointwise.
TEST(Properties, RoundTripPreservesTruth)
{
    Generator g(11);
    const std::vector<std::string> vars{"a", "b", "c"};
    for (int i = 0; i < 60; ++i) {
        const Formula f = g.boolean(vars, static_cast<int>(g.uniform(1, 6)));
        const Formula h = parse(print(f));
        for (int j = 0; j < 100; ++j) {
            const Assignment p = random_point(g, vars);
            ASSERT_EQ(eval_qf(f, p), eval_qf(h, p)) << print(f);
        }
    }
}

TEST(Properties, SubstitutionLemma)
{
    Generator g(12);
    const std::vector<std::string> vars{"a", "b", "c"};
    for (int i = 0; i < 60; ++i) {
        const Formula f = g.boolean(vars, static_cast<int>(g.uniform(1, 5)));
        std::map<std::string, LinTerm> sigma{{"a", g.term(vars)}, {"c", g.term(vars)}};
        const Formula fs = substitute(f, sigma);
        for (int j = 0; j < 50; ++j) {
            const Assignment p = random_point(g, vars);
            Assignment q = p;
            for (const auto &[v, t] : sigma) {
                q[v] = t.eval(p);
            }
            ASSERT_EQ(eval_qf(fs, p), eval_qf(f, q)) << print(f);
        }
    }
}

TEST(Properties, NnfSoundness)
{
    Generator g(13);
    const std::vector<std::string> vars{"a", "b"};
    for (int i = 0; i < 60; ++i) {
        const Formula f = mk_not(g.boolean(vars, static_cast<int>(g.uniform(2, 6))));
        const Formula n = nnf(f);
        for (int j = 0; j < 50; ++j) {
            const Assignment p = random_point(g, vars);
            ASSERT_EQ(eval_qf(f, p), eval_qf(n, p));
        }
    }
}
