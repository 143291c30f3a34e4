#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include <tame/random.hpp>
#include <tame/star_sets.hpp>
#include <tame/syntax.hpp>

using namespace tame;

namespace
{

const StarNum eps = StarNum::eps();
const StarNum omega = StarNum::omega();

StarNum q(long n, long d = 1)
{
    return StarNum(ratio(n, d));
}

// Truth of a standard formula at t = x.
bool std_holds(const Formula &f, const Rational &x)
{
    return eval_qf(f, {{"t", StarNum(x)}});
}

} // namespace

TEST(Star, StandardPart)
{
    EXPECT_EQ(std_part(q(3) + eps * Rational(5)), StdValue(Rational(3)));
    EXPECT_EQ(std_part(q(-2) - eps), StdValue(Rational(-2)));
    EXPECT_EQ(std_part(omega - q(100)), StdValue::pos_inf());
    EXPECT_EQ(std_part(-omega + eps), StdValue::neg_inf());
    EXPECT_EQ(infinitesimal_sign(q(1) - eps), -1);
    EXPECT_EQ(infinitesimal_sign(q(1)), 0);
}

TEST(Star, Order)
{
    EXPECT_LT(StarNum{}, eps);
    EXPECT_LT(eps, q(1, 1000000));
    EXPECT_LT(q(1000000), omega);
    EXPECT_LT(q(1) - eps, q(1));
    EXPECT_LT(eps * Rational(1000), q(1));
    EXPECT_LT(StarNum::scale(-2), eps);
}

TEST(Star, EvalStar)
{
    const Formula f = parse("(and (< 0 t) (< t 1))");
    EXPECT_TRUE(eval_star(f, {{"t", eps}}));
    EXPECT_FALSE(eval_star(f, {{"t", -eps}}));
    EXPECT_TRUE(eval_star(f, {{"t", q(1) - eps}}));
    EXPECT_FALSE(eval_star(f, {{"t", omega}}));
    EXPECT_TRUE(eval_star(parse("(exists (u) (and (< t u) (< u (+ t eps))))"), {{"t", q(0)}}));
    EXPECT_FALSE(eval_star(parse("(exists (u) (and (< 0 u) (< u t)))"), {{"t", q(0)}}));
}

TEST(Star, MuExamples)
{
    EXPECT_EQ(mu_star(parse("(and (< 0 t) (< t (+ 1 eps)))"), "t"), q(1) + eps);
    EXPECT_EQ(mu_star(parse("(and (< 0 t) (< t eps))"), "t"), eps);
    EXPECT_EQ(mu_star(parse("(or (and (< 0 t) (< t 1)) (= t omega))"), "t"), q(1));
    EXPECT_EQ(mu_star(parse("(and (< (- omega) t) (< t omega))"), "t"), omega * Rational(2));
    EXPECT_THROW(mu_star(parse("(< 0 t)"), "t"), UnboundedSetError);
}

// mu(A u B) + mu(A n B) = mu(A) + mu(B), and mu is monotone.
TEST(Star, MuAdditivity)
{
    Generator g(31);
    const Formula box = parse("(and (< (- 0 omega) t) (< t omega))");
    for (int i = 0; i < 40; ++i) {
        const Formula a = mk_and(box, g.star_boolean({"t"}, static_cast<int>(g.uniform(1, 4)), 3));
        const Formula b = mk_and(box, g.star_boolean({"t"}, static_cast<int>(g.uniform(1, 4)), 3));
        const StarNum ma = mu_star(a, "t");
        const StarNum mb = mu_star(b, "t");
        const StarNum mor = mu_star(mk_or(a, b), "t");
        const StarNum mand = mu_star(mk_and(a, b), "t");
        ASSERT_EQ(mor + mand, ma + mb) << print(a) << " / " << print(b);
        EXPECT_LE(mand, ma);
        EXPECT_LE(ma, mor);
    }
}

TEST(Star, StandardPointsExamples)
{
    {
        // (-inf, 1 + eps) has trace (-inf, 1].
        const auto tr = standard_points_1d(parse("(< t (+ 1 eps))"), "t");
        ASSERT_EQ(tr.points, std::vector<Rational>{Rational(1)});
        EXPECT_TRUE(equivalent(tr.formula(), parse("(<= t 1)")));
    }
    {
        // (0,1) u {omega} has trace (0,1).
        const auto tr = standard_points_1d(parse("(or (and (< 0 t) (< t 1)) (= t omega))"), "t");
        EXPECT_TRUE(equivalent(tr.formula(), parse("(and (< 0 t) (< t 1))")));
    }
    {
        // (-eps, eps) has trace {0}; (0, eps) has empty trace.
        EXPECT_TRUE(equivalent(standard_points_1d(parse("(and (< (- 0 eps) t) (< t eps))"), "t").formula(),
                               parse("(= t 0)")));
        EXPECT_TRUE(is_false(standard_points_1d(parse("(and (< 0 t) (< t eps))"), "t").formula()));
    }
    {
        const auto tr = standard_points_1d(parse("(< omega t)"), "t");
        EXPECT_TRUE(tr.points.empty());
        EXPECT_TRUE(is_false(tr.formula()));
    }
}

// The trace formula agrees with the star formula at standard points, both at
// the parameters and on a grid between them.
TEST(Star, StandardPointsRandom)
{
    Generator g(32);
    for (int i = 0; i < 60; ++i) {
        const Formula b = g.star_boolean({"t"}, static_cast<int>(g.uniform(1, 5)), 3);
        const auto tr = standard_points_1d(b, "t");
        const Formula w = tr.formula();
        for (int k = -24; k <= 24; ++k) {
            const Rational x = ratio(k, 4);
            ASSERT_EQ(std_holds(w, x), eval_star(b, {{"t", StarNum(x)}})) << print(b) << " at " << x;
        }
        for (const auto &c : tr.points) {
            ASSERT_EQ(std_holds(w, c), eval_star(b, {{"t", StarNum(c)}})) << print(b);
        }
    }
}

// The atomwise table agrees with direct evaluation at standard points.
TEST(Star, AtomwiseStandardization)
{
    Generator g(33);
    for (int i = 0; i < 60; ++i) {
        const Formula b = g.star_boolean({"t", "s"}, static_cast<int>(g.uniform(1, 5)), 3);
        const Formula w = standardize_atomwise(b);
        EXPECT_FALSE(has_star_constants(w)) << print(w);
        for (int x = -6; x <= 6; ++x) {
            for (int y = -3; y <= 3; ++y) {
                const Assignment env{{"t", q(x, 2)}, {"s", q(y)}};
                ASSERT_EQ(eval_qf(w, env), eval_star(b, env)) << print(b);
            }
        }
    }
    EXPECT_TRUE(equivalent(standardize_atomwise(parse("(<= t (- 1 eps))")), parse("(< t 1)")));
    EXPECT_TRUE(equivalent(standardize_atomwise(parse("(= t eps)")), mk_false()));
    EXPECT_TRUE(is_true(standardize_atomwise(parse("(< t omega)"))));
}

// Standard parts are monotone: a <= b implies std(a) <= std(b).
TEST(Star, StandardPartMonotone)
{
    Generator g(34);
    for (int i = 0; i < 300; ++i) {
        const StarNum a = g.star();
        const StarNum b = g.star();
        if (a <= b) {
            EXPECT_LE(std_part(a), std_part(b)) << a << " " << b;
        } else {
            EXPECT_GE(std_part(a), std_part(b)) << a << " " << b;
        }
    }
}

// A one-variable trace is a finite union of points and open intervals.
TEST(Star, TraceShape)
{
    Generator g(35);
    for (int i = 0; i < 40; ++i) {
        const auto tr = standard_points_1d(g.star_boolean({"t"}, static_cast<int>(g.uniform(1, 4)), 3), "t");
        EXPECT_EQ(tr.between.size(), tr.points.size() + 1);
        EXPECT_EQ(tr.at_point.size(), tr.points.size());
        EXPECT_TRUE(std::is_sorted(tr.points.begin(), tr.points.end()));
    }
}
