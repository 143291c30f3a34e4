#include <gtest/gtest.h>

#include <tame/oracles.hpp>
#include <tame/qe.hpp>
#include <tame/random.hpp>
#include <tame/syntax.hpp>

using namespace tame;

TEST(Qe, Density)
{
    EXPECT_EQ(print(qe_eliminate(parse("(exists (u) (and (< a u) (< u b)))"))), "(< a b)");
}

TEST(Qe, Divisibility)
{
    EXPECT_EQ(print(qe_eliminate(parse("(exists (u) (and (= (* 2 u) y) (< 0 u)))"))), "(< 0 y)");
}

// forall u (u < a -> u < b)  <=>  a <= b, checked against enumeration: a, b
// range over integers in [-10,10] and u over the half-integer grid around
// them, which contains every boundary point and a point in every gap.
TEST(Qe, UniversalImplicationAgainstGrid)
{
    const Formula f = parse("(forall (u) (implies (< u a) (< u b)))");
    const Formula r = qe_eliminate(f);
    EXPECT_TRUE(is_quantifier_free(r));
    for (int a = -10; a <= 10; ++a) {
        for (int b = -10; b <= 10; ++b) {
            bool brute = true;
            for (int h = -22; h <= 22 && brute; ++h) {
                const Rational u = ratio(h, 2);
                if (u < a && !(u < b)) {
                    brute = false;
                }
            }
            Assignment env{{"a", StarNum(a)}, {"b", StarNum(b)}};
            ASSERT_EQ(eval_qf(r, env), brute) << a << " " << b;
        }
    }
    EXPECT_TRUE(equivalent(r, parse("(<= a b)")));
}

TEST(Decide, Examples)
{
    EXPECT_TRUE(decide(parse("(forall (a) (exists (u) (< a u)))")));
    EXPECT_FALSE(decide(parse("(exists (u) (< u u))")));
    EXPECT_TRUE(decide(parse("(and (< 0 eps) (< eps 1/1000000))")));
    EXPECT_THROW(decide(parse("(< x 1)")), FreeVariableError);
}

TEST(Decide, StarQuantifiers)
{
    // Density in M*: there is a point strictly between 0 and eps.
    EXPECT_TRUE(decide(parse("(exists (u) (and (< 0 u) (< u eps)))")));
    EXPECT_FALSE(decide(parse("(exists (u) (and (< omega u) (< u omega)))")));
    EXPECT_TRUE(decide(parse("(forall (u) (implies (< u (- 1 eps)) (< u 1)))")));
}

TEST(Qe, ModelFinding)
{
    const Formula f = parse("(and (< 0 x) (< x y) (= (+ x y) 3))");
    const auto m = find_model(f);
    ASSERT_TRUE(m.has_value());
    EXPECT_TRUE(eval_qf(f, *m));
    EXPECT_FALSE(find_model(parse("(and (< x 0) (< 1 x))")).has_value());
}

TEST(Qe, FourierMotzkinAgreesOnConjunctions)
{
    Generator g(5);
    const std::vector<std::string> vars{"a", "b", "u"};
    for (int i = 0; i < 200; ++i) {
        std::vector<Formula> atoms;
        const int n = static_cast<int>(g.uniform(1, 5));
        for (int k = 0; k < n; ++k) {
            atoms.push_back(g.atom(vars));
        }
        const Formula f = mk_exists("u", mk_and(atoms));
        const Formula vs = qe_eliminate(f);
        const Formula fm = qe_fourier_motzkin(f);
        ASSERT_TRUE(equivalent(vs, fm)) << print(f);
    }
}

// Soundness against the endpoint oracle on random quantified formulas.
TEST(Qe, SoundAgainstEndpointOracle)
{
    Generator g(6);
    const std::vector<std::string> free{"a", "b"};
    EndpointOracle oracle;
    for (int i = 0; i < 60; ++i) {
        const Formula f = g.formula(free, 2, 5);
        const Formula r = qe_eliminate(f);
        ASSERT_TRUE(is_quantifier_free(r));
        for (int j = 0; j < 40; ++j) {
            Assignment env{{"a", StarNum(g.rational(8, 2))}, {"b", StarNum(g.rational(8, 2))}};
            ASSERT_EQ(eval_qf(r, env), oracle.eval(f, env)) << print(f) << "\n => " << print(r);
        }
    }
}

TEST(Qe, SecondPassInShuffledOrderConfirms)
{
    Generator g(7);
    std::mt19937_64 rng(99);
    QeOptions shuffled{&rng};
    for (int i = 0; i < 40; ++i) {
        const Formula f = g.formula({"a"}, 3, 5);
        const Formula r = qe_eliminate(f);
        ASSERT_TRUE(decide(universal_closure(mk_iff(f, r)), shuffled)) << print(f);
    }
}
