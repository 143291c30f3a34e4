#include <string>

#include <gtest/gtest.h>

#include <tame/io.hpp>
#include <tame/ordkit.hpp>

using namespace tame;

namespace
{

DefLinOrder corpus(const std::string &name)
{
    return parse_deflinorder(read_file(std::string(TAME_SOURCE_DIR) + "/corpus/" + name + ".sexp").at(0));
}

DefLinOrder natural_order(const char *carrier)
{
    return make_order(parse(carrier), parse("(<= a1 b1)"), 1);
}

// A quotient that sends the whole carrier to one point, so that the carrier
// is a single fiber.
MonotoneQuotient single_fiber(const DefLinOrder &p)
{
    MonotoneQuotient mq;
    mq.source = p;
    mq.rho = {p.left, p.arity(), {{mk_true(), std::vector<LinTerm>(p.arity())}}};
    return mq;
}

const std::vector<LinTerm> A = as_terms(tuple_names("a", 2));
const std::vector<LinTerm> B = as_terms(tuple_names("b", 2));

} // namespace

TEST(LinearOrder, Examples)
{
    EXPECT_TRUE(check_linear_order(corpus("lex-square")).ok);
    EXPECT_TRUE(check_linear_order(corpus("anti-diagonal")).ok);
    const auto bad = check_linear_order(corpus("not-an-order"));
    ASSERT_FALSE(bad.ok);
    EXPECT_EQ(bad.failed, "antisymmetry");
    // The witness pair really violates antisymmetry.
    const Assignment &w = bad.witness;
    EXPECT_EQ(w.at("_x1"), w.at("_y1"));
    EXPECT_NE(w.at("_x2"), w.at("_y2"));
}

TEST(LinearOrder, FamiliesAndSentences)
{
    // Order by a1 + a2 with ties by a1, checked against the three axiom sentences directly.
    const DefLinOrder p = corpus("anti-diagonal");
    const auto x = as_terms(tuple_names("x", 2));
    EXPECT_TRUE(decide(universal_closure(mk_implies(mk_and({p.in(A), p.in(B)}), mk_or(p.le(A, B), p.le(B, A))))));
    EXPECT_TRUE(decide(universal_closure(
        mk_implies(mk_and({p.in(A), p.in(B), p.in(x), p.le(A, B), p.le(B, x)}), p.le(A, x)))));
    // A uniform family: the natural order on (0, s), one order per parameter s.
    EXPECT_TRUE(check_linear_order(natural_order("(and (< 0 a1) (< a1 s))")).ok);
}

TEST(Collapse, Examples)
{
    {
        const Collapse c = collapse_finite_intervals(natural_order("(and (< 0 a1) (< a1 1))"));
        EXPECT_TRUE(c.identity);
    }
    {
        const DefLinOrder p = natural_order("(or (and (< 0 a1) (< a1 1)) (= a1 2) (= a1 3) (= a1 4))");
        const Collapse c = collapse_finite_intervals(p);
        EXPECT_FALSE(c.identity);
        EXPECT_EQ(c.class_bound, 3);
        EXPECT_EQ(dim(c.target.carrier_set()), Dim::of(1));
        // 2, 3 and 4 go to one point; the open interval is untouched.
        EXPECT_TRUE(equivalent(c.map.same_image(as_terms({Rational(2)}), as_terms({Rational(4)})), mk_true()));
        EXPECT_TRUE(equivalent(mk_and(p.in(A), mk_and(p.in(B), c.map.same_image({A[0]}, {B[0]}))),
                               mk_and({p.in({A[0]}), p.in({B[0]}),
                                       mk_or(mk_eq(A[0], B[0]), parse("(and (<= 2 a1) (<= 2 b1))"))})));
        // Every interval of the collapsed order is infinite.
        const Formula rel = interval_dim_relation(c.target, 1);
        EXPECT_TRUE(valid(mk_implies(rel, mk_eq(A[0], B[0]))));
    }
    {
        const Collapse c = collapse_finite_intervals(natural_order("(or (= a1 1) (= a1 2) (= a1 3))"));
        EXPECT_EQ(c.class_bound, 3);
        EXPECT_TRUE(valid(mk_implies(mk_and(c.target.in({A[0]}), c.target.in({B[0]})), mk_eq(A[0], B[0]))));
    }
}

TEST(IntervalRelation, LexSquare)
{
    const DefLinOrder p = corpus("lex-square");
    const IntervalDims dims = interval_dims(p);
    const Formula both = mk_and(p.in(A), p.in(B));
    EXPECT_TRUE(equivalent(interval_dim_relation(p, 2, dims), mk_and(both, mk_eq(A[0], B[0]))));
    EXPECT_TRUE(equivalent(interval_dim_relation(p, 1, dims), mk_and(both, tuple_eq(A, B))));
    EXPECT_TRUE(equivalent(interval_dim_relation(p, 3, dims), both));
}

TEST(Quotient, LexSquare)
{
    const DefLinOrder p = corpus("lex-square");
    const MonotoneQuotient mq = quotient_reduce(p);
    EXPECT_TRUE(mq.cert.all());
    EXPECT_EQ(mq.target_dim, Dim::of(1));
    // Fibers are the vertical segments.
    EXPECT_TRUE(equivalent(mk_and({p.in(A), p.in(B), mq.rho.same_image(A, B)}),
                           mk_and({p.in(A), p.in(B), mk_eq(A[0], B[0])})));
}

TEST(Quotient, AntiDiagonal)
{
    const DefLinOrder p = corpus("anti-diagonal");
    const MonotoneQuotient mq = quotient_reduce(p);
    EXPECT_TRUE(mq.cert.all());
    EXPECT_TRUE(equivalent(mk_and({p.in(A), p.in(B), mq.rho.same_image(A, B)}),
                           mk_and({p.in(A), p.in(B), mk_eq(A[0] + A[1], B[0] + B[1])})));
    // Q is order-isomorphic to (0,2) through q -> q1 + q2.
    const DefLinOrder &q = mq.target;
    EXPECT_TRUE(valid(mk_implies(mk_and(q.in(A), q.in(B)), mk_iff(q.le(A, B), mk_le(A[0] + A[1], B[0] + B[1])))));
    EXPECT_TRUE(valid(mk_iff(mk_exists(std::vector<std::string>{"a1", "a2"}, mk_and(q.in(A), parse("(= s (+ a1 a2))"))),
                             parse("(and (< 0 s) (< s 2))"))));
}

TEST(Quotient, LexCubeTwice)
{
    const MonotoneQuotient first = quotient_reduce(corpus("lex-cube"));
    ASSERT_TRUE(first.cert.all());
    EXPECT_EQ(first.target_dim, Dim::of(2));
    const MonotoneQuotient second = quotient_reduce(first.target);
    EXPECT_TRUE(second.cert.all());
    EXPECT_EQ(second.target_dim, Dim::of(1));
    EXPECT_THROW(quotient_reduce(second.target), DimensionError);
}

// With threshold 1 every class of the lexicographic square is a point, so
// the quotient does not lower the dimension.
TEST(Quotient, ThresholdOneDiverges)
{
    const DefLinOrder p = corpus("lex-square");
    const MonotoneQuotient literal = quotient_reduce(p, 1);
    EXPECT_FALSE(literal.cert.dim_drop);
    EXPECT_EQ(literal.target_dim, Dim::of(2));
    EXPECT_TRUE(quotient_reduce(p, 2).cert.dim_drop);
}

TEST(Iota, Examples)
{
    {
        // Vertical segment: the second coordinate is finite-to-one.
        const DefLinOrder p = lex_order(parse("(and (= a1 1/3) (< 0 a2) (< a2 1))"), 2);
        const IotaCoord io = iota_coordinatize(p, single_fiber(p));
        EXPECT_TRUE(is_false(io.part[0]));
        EXPECT_TRUE(equivalent(io.part[1], p.carrier));
        EXPECT_EQ(io.n_bound, 1);
        EXPECT_TRUE(io.injective);
    }
    {
        const DefLinOrder p = lex_order(parse("(and (= a1 a2) (< 0 a2) (< a2 1))"), 2);
        const IotaCoord io = iota_coordinatize(p, single_fiber(p));
        EXPECT_TRUE(equivalent(io.part[0], p.carrier));
        EXPECT_EQ(io.n_bound, 1);
    }
    {
        // A vertical segment and an isolated point: two coordinate classes.
        const DefLinOrder p = lex_order(parse("(or (and (= a1 0) (< 0 a2) (< a2 1)) (and (= a1 5) (= a2 5)))"), 2);
        const IotaCoord io = iota_coordinatize(p, single_fiber(p));
        EXPECT_TRUE(equivalent(io.part[0], parse("(and (= a1 5) (= a2 5))")));
        EXPECT_TRUE(equivalent(io.part[1], parse("(and (= a1 0) (< 0 a2) (< a2 1))")));
        EXPECT_EQ(io.n_bound, 1);
        EXPECT_TRUE(io.injective);
    }
    {
        // Two parallel segments: the first coordinate sees two points, ranked 1 and 2.
        const DefLinOrder p = lex_order(parse("(and (< 0 a1) (< a1 1) (or (= a2 a1) (= a2 (+ a1 3))))"), 2);
        const IotaCoord io = iota_coordinatize(p, single_fiber(p));
        EXPECT_EQ(io.n_bound, 2);
        ASSERT_EQ(io.index[0].size(), 2u);
        EXPECT_TRUE(equivalent(io.index[0][0], parse("(and (< 0 a1) (< a1 1) (= a2 a1))")));
        EXPECT_TRUE(io.injective);
    }
}

TEST(Lemmas, LexSquare)
{
    const DefLinOrder p = corpus("lex-square");
    const IntervalDims dims = interval_dims(p);
    EXPECT_TRUE(full_dim_interval(p, dims).has_value());
    EXPECT_LE(dim(closed_rays_locus(p), p.left), Dim::of(1));
    for (int d = 1; d <= 3; ++d) {
        const Formula rel = interval_dim_relation(p, d, dims);
        EXPECT_TRUE(classes_convex(p, rel));
        for (const auto &piece : class_dims(p, rel)) {
            EXPECT_LT(piece.dim, Dim::of(d));
        }
    }
    const auto cd = class_dims(p, interval_dim_relation(p, 2, dims));
    EXPECT_LT(dim(finite_class_locus(p, cd), p.left), Dim::of(2));
}

// Every ray of (0,1) u {2, 3} is closed in P, while no ray of the
// lexicographic square is.
TEST(Lemmas, ClosedRays)
{
    const DefLinOrder p = natural_order("(or (and (< 0 a1) (< a1 1)) (= a1 2) (= a1 3))");
    EXPECT_TRUE(equivalent(closed_rays_locus(p), p.carrier));
    EXPECT_TRUE(is_false(closed_rays_locus(corpus("lex-square"))));
    // Same on the triangle with the second coordinate reversed.
    const DefLinOrder q = corpus("lex-triangle-reversed");
    EXPECT_FALSE(satisfiable(closed_rays_locus(q)));
}
