#include <string>

#include <gtest/gtest.h>

#include <tame/cutdef.hpp>

using namespace tame;

namespace
{

DefLinOrder corpus(const std::string &name)
{
    return parse_deflinorder(read_file(std::string(TAME_SOURCE_DIR) + "/corpus/" + name + ".sexp").at(0));
}

const DefLinOrder line = make_order(mk_true(), parse("(<= a1 b1)"), 1);

CutResult check(const DefLinOrder &p, const char *v, const char *expected)
{
    const CutSpec spec{p, parse(v)};
    const CutResult r = cut_definable(spec);
    EXPECT_TRUE(equivalent(r.w, mk_and(p.carrier, parse(expected)))) << print(r.w);
    EXPECT_TRUE(is_downward_closed(p, r.w).cut);
    return r;
}

} // namespace

TEST(IsCut, Examples)
{
    EXPECT_TRUE(is_cut({line, parse("(< a1 (+ 1 eps))")}).cut);
    EXPECT_TRUE(is_cut({corpus("lex-square"), parse("(< a1 (+ 1/2 eps))")}).cut);
    const CutCheck bad = is_cut({line, parse("(or (and (< 0 a1) (< a1 1)) (= a1 omega))")});
    ASSERT_FALSE(bad.cut);
    ASSERT_TRUE(bad.witness.has_value());
    // The witness pair: a <= b, b in W, a not in W.
    const StarNum a = bad.witness->first.at("a1");
    const StarNum b = bad.witness->second.at("a1");
    EXPECT_LE(a, b);
    EXPECT_TRUE(StarNum{} < b && b < StarNum(1));
    EXPECT_FALSE(StarNum{} < a);
    // The pair (-1, 1/2) is such a violation.
    const Formula w = trace_on({line, parse("(or (and (< 0 a1) (< a1 1)) (= a1 omega))")});
    EXPECT_FALSE(evaluate(w, Assignment{{"a1", StarNum(-1)}}));
    EXPECT_TRUE(evaluate(w, Assignment{{"a1", StarNum(ratio(1, 2))}}));
}

TEST(CutDefinable, BaseCase)
{
    const CutResult r = check(line, "(< a1 (+ 1 eps))", "(<= a1 1)");
    EXPECT_EQ(r.omega, std::vector<Rational>{Rational(1)});
    EXPECT_EQ(r.frames.size(), 1u);
    check(line, "(<= a1 (- 2 eps))", "(< a1 2)");
    check(line, "(< a1 omega)", "true");
    check(line, "(< a1 (- 0 omega))", "false");
}

TEST(CutDefinable, LexSquare)
{
    const DefLinOrder sq = corpus("lex-square");
    check(sq, "(or (< a1 1/2) (and (= a1 1/2) (< a2 eps)))", "(< a1 1/2)");
    const CutResult r = check(sq, "(or (< a1 1/2) (and (= a1 1/2) (< a2 (+ 1/3 eps))))",
                              "(or (< a1 1/2) (and (= a1 1/2) (<= a2 1/3)))");
    ASSERT_EQ(r.frames.size(), 2u);
    EXPECT_NE(r.frames[0].lambda.find("partial"), std::string::npos);
    check(sq, "(< a1 (+ 1/2 eps))", "(<= a1 1/2)");
    check(sq, "(< a1 (- 1/2 eps))", "(< a1 1/2)");
}

// Recursion depth and the star constants used by the B formulas.
TEST(CutDefinable, Frames)
{
    const DefLinOrder cube = corpus("lex-cube");
    const CutSpec spec{cube, parse("(or (< a1 1/2) (and (= a1 1/2) (< a2 (+ 1/4 eps))))")};
    const CutResult r = cut_definable(spec);
    EXPECT_TRUE(equivalent(r.w, trace_on(spec)));
    ASSERT_EQ(r.frames.size(), 3u);
    EXPECT_EQ(r.frames[0].dim, 3);
    EXPECT_EQ(r.frames[1].dim, 2);
    EXPECT_EQ(r.frames[2].dim, 1);
    const auto scales = star_scales(spec.v);
    for (const auto &f : r.frames) {
        for (int e : f.b_scales) {
            EXPECT_TRUE(scales.contains(e)) << e;
        }
    }
}

TEST(CutDefinable, AntiDiagonal)
{
    check(corpus("anti-diagonal"), "(or (< (+ a1 a2) 1) (and (= (+ a1 a2) 1) (<= a1 (- 1/3 eps))))",
          "(or (< (+ a1 a2) 1) (and (= (+ a1 a2) 1) (< a1 1/3)))");
}

TEST(CutDefinable, RejectsNonCuts)
{
    EXPECT_THROW(cut_definable({line, parse("(or (and (< 0 a1) (< a1 1)) (= a1 omega))")}), NotACutError);
}

// The hull shortcut is right when V n P* is a cut of P* and wrong on (0,1) u {omega}.
TEST(HullShortcut, AgreesOnCutsAndFailsOnCounterexample)
{
    const CutSpec good{corpus("lex-square"), parse("(or (< a1 1/2) (and (= a1 1/2) (< a2 (+ 1/3 eps))))")};
    EXPECT_TRUE(equivalent(hull_cut(good), cut_definable(good).w));
    const CutSpec bad{line, parse("(or (and (< 0 a1) (< a1 1)) (= a1 omega))")};
    const Formula hull = hull_cut(bad);
    const Formula truth = trace_on(bad);
    EXPECT_FALSE(equivalent(hull, truth));
    EXPECT_TRUE(evaluate(hull, Assignment{{"a1", StarNum(-1)}}));
    EXPECT_FALSE(evaluate(truth, Assignment{{"a1", StarNum(-1)}}));
}

TEST(CutUniform, Families)
{
    const std::vector<StarPoint> xs{{StarNum(0)}, {StarNum(ratio(3, 2))}, {StarNum(-7)}};
    const auto res = cut_definable_uniform(line, parse("(< a1 (+ x eps))"), {"x"}, xs, default_skeletons());
    ASSERT_EQ(res.size(), 3u);
    for (const auto &inst : res) {
        const Rational x = inst.x[0].standard_value();
        EXPECT_TRUE(equivalent(inst.result.w, mk_le(LinTerm::var("a1"), LinTerm(x))));
        EXPECT_EQ(inst.result.omega, std::vector<Rational>{x});
        EXPECT_EQ(inst.result.shape, res[0].result.shape);
    }
    // A star parameter a = q + r eps: closed at q for r > 0, open for r < 0.
    const std::vector<StarPoint> as{{StarNum(1) + StarNum::eps()}, {StarNum(1) - StarNum::eps()}};
    const auto star = cut_definable_uniform(line, parse("(< a1 s)"), {"s"}, as, default_skeletons());
    EXPECT_TRUE(equivalent(star[0].result.w, parse("(<= a1 1)")));
    EXPECT_TRUE(equivalent(star[1].result.w, parse("(< a1 1)")));
    EXPECT_NE(star[0].result.shape, star[1].result.shape);
    // Empty member.
    const auto empty =
        cut_definable_uniform(line, parse("(< a1 s)"), {"s"}, {{-StarNum::omega()}}, default_skeletons());
    EXPECT_TRUE(is_false(empty[0].result.w));
    EXPECT_TRUE(empty[0].result.omega.empty());
}
