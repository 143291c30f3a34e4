#include <algorithm>
#include <map>
#include <vector>

#include <gtest/gtest.h>

#include <tame/cells.hpp>
#include <tame/random.hpp>
#include <tame/semilinear.hpp>
#include <tame/syntax.hpp>

using namespace tame;

namespace
{

Dim dim_of(const char *text, std::vector<std::string> vars)
{
    return dim(parse(text), vars);
}

// Measure of a one-variable formula at a concrete parameter point, computed
// by sorting the boundary values and testing each gap at its midpoint.
Rational brute_measure(const Formula &a, const std::string &u, const Assignment &env)
{
    std::vector<Atom> atoms;
    collect_atoms(a, atoms);
    std::vector<Rational> roots;
    for (const auto &at : atoms) {
        const Rational c = at.term.coeff(u);
        if (c == 0) {
            continue;
        }
        Assignment e = env;
        e[u] = StarNum{};
        roots.push_back(at.term.eval(e).standard_value() * Rational(-1 / c));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    Rational total = 0;
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
        Assignment e = env;
        e[u] = StarNum(Rational((roots[i] + roots[i + 1]) / 2));
        if (eval_qf(a, e)) {
            total += roots[i + 1] - roots[i];
        }
    }
    return total;
}

Rational mu_at(const std::vector<MeasurePiece> &pieces, const Assignment &env)
{
    for (const auto &p : pieces) {
        if (eval_qf(p.guard, env)) {
            return p.value.eval(env).standard_value();
        }
    }
    ADD_FAILURE() << "no measure piece covers the point";
    return -1;
}

} // namespace

TEST(Dim, Examples)
{
    EXPECT_EQ(dim_of("(and (< 0 u) (< u 1) (= v u))", {"u", "v"}), Dim::of(1));
    EXPECT_EQ(dim_of("(and (< 0 u) (< u 1) (< 0 v) (< v 1))", {"u", "v"}), Dim::of(2));
    EXPECT_EQ(dim_of("(and (= u 0) (= u 1))", {"u"}), Dim::empty());
    EXPECT_EQ(dim_of("(and (<= 0 u) (<= u 0) (< v 1))", {"u", "v"}), Dim::of(1));
    EXPECT_LT(Dim::empty(), Dim::of(0));
}

// Invariance under swapping coordinates and under u -> 2u + v + 3.
TEST(Dim, InvariantUnderCoordinateChanges)
{
    Generator g(21);
    const std::vector<std::string> vars{"u", "v", "w"};
    for (int i = 0; i < 40; ++i) {
        const Formula f = g.boolean(vars, static_cast<int>(g.uniform(1, 5)), 3);
        const Dim d = dim(f, vars);
        const Formula swapped = rename(f, {{"u", "v"}, {"v", "u"}});
        EXPECT_EQ(dim(swapped, vars), d) << print(f);
        const Formula sheared =
            substitute(f, "u", LinTerm::var("u", 2) + LinTerm::var("v") + LinTerm(Rational(3)));
        EXPECT_EQ(dim(sheared, vars), d) << print(f);
    }
}

TEST(FiberDim, Examples)
{
    {
        const auto parts = fiber_dim_partition(parse("(and (< 0 u) (< u x))"), {"u"});
        ASSERT_EQ(parts.size(), 2u);
        EXPECT_EQ(parts[0].dim, Dim::empty());
        EXPECT_TRUE(equivalent(parts[0].guard, parse("(<= x 0)")));
        EXPECT_EQ(parts[1].dim, Dim::of(1));
        EXPECT_TRUE(equivalent(parts[1].guard, parse("(< 0 x)")));
    }
    {
        const auto parts = fiber_dim_partition(parse("(= u x)"), {"u"});
        ASSERT_EQ(parts.size(), 1u);
        EXPECT_EQ(parts[0].dim, Dim::of(0));
        EXPECT_TRUE(is_true(parts[0].guard));
    }
    {
        const auto parts = fiber_dim_partition(parse("(and (= x 0) (< 0 u) (< u 1))"), {"u"});
        ASSERT_EQ(parts.size(), 2u);
        EXPECT_EQ(parts[1].dim, Dim::of(1));
        EXPECT_TRUE(equivalent(parts[1].guard, parse("(= x 0)")));
    }
    {
        // A weak inequality that collapses to an equation only for x = 0.
        const auto parts = fiber_dim_partition(parse("(and (<= 0 u) (<= u x))"), {"u"});
        ASSERT_EQ(parts.size(), 3u);
        EXPECT_TRUE(equivalent(parts[1].guard, parse("(= x 0)")));
        EXPECT_EQ(parts[1].dim, Dim::of(0));
    }
}

TEST(CellDecompose, Examples)
{
    {
        const auto d = cell_decompose(parse("(< y x)"), {"y"});
        ASSERT_EQ(d.cells.size(), 1u);
        EXPECT_FALSE(d.cells[0].coords[0].graph);
        EXPECT_FALSE(d.cells[0].coords[0].lower.has_value());
        EXPECT_EQ(*d.cells[0].coords[0].upper, LinTerm::var("x"));
    }
    {
        const Formula s = parse("(or (= y x) (and (< x y) (< y (+ x 1))))");
        const auto d = cell_decompose(s, {"y"});
        ASSERT_EQ(d.cells.size(), 2u);
        EXPECT_EQ(d.cells[0].dim() + d.cells[1].dim(), 1);
        const auto cert = check_decomposition(d, s);
        EXPECT_TRUE(cert.disjoint);
        EXPECT_TRUE(cert.covering);
    }
    {
        const Formula s = parse("(and (< 0 x) (< x 1) (< 0 y) (< y x) (< y (- 1 x)))");
        const auto d = cell_decompose(s, {"x", "y"});
        const auto cert = check_decomposition(d, s);
        EXPECT_TRUE(cert.disjoint);
        EXPECT_TRUE(cert.covering);
        // The upper bound switches from x to 1 - x at x = 1/2.
        bool split = false;
        for (const auto &c : d.cells) {
            if (c.coords[0].graph && c.coords[0].value == LinTerm(Rational(1, 2))) {
                split = true;
            }
        }
        EXPECT_TRUE(split);
        EXPECT_EQ(dim(s, {"x", "y"}), Dim::of(2));
    }
}

TEST(CellDecompose, RandomCertificates)
{
    Generator g(22);
    const std::vector<std::string> vars{"u", "v"};
    for (int i = 0; i < 15; ++i) {
        const Formula s = g.boolean(vars, static_cast<int>(g.uniform(1, 4)), 3);
        const auto d = cell_decompose(s, vars);
        const auto cert = check_decomposition(d, s);
        ASSERT_TRUE(cert.disjoint) << print(s);
        ASSERT_TRUE(cert.covering) << print(s);
        int best = -1;
        for (const auto &c : d.cells) {
            best = std::max(best, c.dim());
        }
        EXPECT_EQ(best < 0 ? Dim::empty() : Dim::of(best), dim(s, vars)) << print(s);
    }
}

TEST(Choice, Examples)
{
    auto single = [](const char *text) {
        const Choice c = definable_choice(parse(text), {"u"});
        EXPECT_TRUE(check_choice(c, parse(text)));
        return c;
    };
    {
        const Choice c = single("(and (<= x u) (<= u (+ x 1)))");
        ASSERT_EQ(c.pieces.size(), 1u);
        EXPECT_EQ(c.pieces[0].values[0], LinTerm::var("x"));
    }
    {
        const Choice c = single("(and (< x u) (< u (+ x 2)))");
        ASSERT_EQ(c.pieces.size(), 1u);
        EXPECT_EQ(c.pieces[0].values[0], LinTerm::var("x") + LinTerm(Rational(1)));
    }
    {
        const Choice c = single("(< x u)");
        ASSERT_EQ(c.pieces.size(), 1u);
        EXPECT_EQ(c.pieces[0].values[0], LinTerm::var("x") + LinTerm(Rational(1)));
    }
    {
        // The leftmost component is (0,2); interior points of the set do not split it.
        const Choice c = single("(or (and (< 0 u) (< u 1)) (= u 1) (and (< 1 u) (< u 2)) (= u 5))");
        ASSERT_EQ(c.pieces.size(), 1u);
        EXPECT_EQ(c.pieces[0].values[0], LinTerm(Rational(1)));
    }
}

TEST(Choice, RandomFamilies)
{
    Generator g(23);
    for (int i = 0; i < 25; ++i) {
        const Formula s = g.boolean({"x", "u", "v"}, static_cast<int>(g.uniform(1, 4)), 3);
        const Choice c = definable_choice(s, {"u", "v"});
        ASSERT_TRUE(check_choice(c, s)) << print(s);
    }
}

TEST(Mu, Examples)
{
    {
        const auto m = mu_function(parse("(and (< 0 u) (< u x))"), "u");
        EXPECT_EQ(mu_at(m, {{"x", StarNum(3)}}), 3);
        EXPECT_EQ(mu_at(m, {{"x", StarNum(-3)}}), 0);
    }
    {
        const auto m = mu_function(parse("(or (and (< 0 u) (< u 1)) (and (< 2 u) (< u 5)) (= u 7))"), "u");
        ASSERT_EQ(m.size(), 1u);
        EXPECT_EQ(m[0].value, LinTerm(Rational(4)));
    }
    {
        const Formula a = parse("(or (and (< 0 u) (< u x)) (and (< (* 1/2 x) u) (< u x)))");
        const auto m = mu_function(a, "u");
        for (int k = -6; k <= 6; ++k) {
            const Assignment env{{"x", StarNum(ratio(k, 2))}};
            EXPECT_EQ(mu_at(m, env), brute_measure(a, "u", env)) << k;
        }
    }
    EXPECT_THROW(mu_function(parse("(< x u)"), "u"), UnboundedFiberError);
}

// mu(A u B) + mu(A n B) = mu(A) + mu(B) on random bounded families.
TEST(Mu, FiniteAdditivity)
{
    Generator g(24);
    const Formula box = parse("(and (< -5 u) (< u 5))");
    for (int i = 0; i < 25; ++i) {
        const Formula a = mk_and(box, g.boolean({"x", "u"}, static_cast<int>(g.uniform(1, 3)), 3));
        const Formula b = mk_and(box, g.boolean({"x", "u"}, static_cast<int>(g.uniform(1, 3)), 3));
        const auto mu_a = mu_function(a, "u");
        const auto mu_b = mu_function(b, "u");
        const auto mu_or = mu_function(mk_or(a, b), "u");
        const auto mu_and = mu_function(mk_and(a, b), "u");
        for (int k = -8; k <= 8; ++k) {
            const Assignment env{{"x", StarNum(ratio(k, 2))}};
            ASSERT_EQ(mu_at(mu_or, env) + mu_at(mu_and, env), mu_at(mu_a, env) + mu_at(mu_b, env));
            ASSERT_EQ(mu_at(mu_a, env), brute_measure(a, "u", env));
        }
    }
}
