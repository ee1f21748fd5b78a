#include <gtest/gtest.h>

#include <vector>

#include "dendrimag/planar_tree.hpp"
#include "dendrimag/prelie_expr.hpp"
#include "dendrimag/rooted_tree.hpp"
#include "dendrimag/sampling.hpp"

using namespace dendrimag;

namespace {

PreLieExpr random_expr(Sampler& s, std::size_t degree)
{
    if (degree == 1) return PreLieExpr::generator();
    const auto k = static_cast<std::size_t>(s.integer(1, static_cast<long>(degree) - 1));
    return PreLieExpr::rhd(random_expr(s, k), random_expr(s, degree - k));
}

} // namespace

TEST(PlanarTrees, EnumerationMatchesCatalan)
{
    FreeDendriform fd;
    for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(fd.enumerate(n).size(), catalan(n)) << n;
    EXPECT_EQ(catalan(3), 5u);
    EXPECT_EQ(catalan(4), 14u);
}

TEST(PlanarTrees, ParseAndPrint)
{
    FreeDendriform fd;
    for (std::size_t n = 1; n <= 4; ++n)
        for (TreeId t : fd.enumerate(n)) EXPECT_EQ(fd.parse(fd.to_string(t)), t);
    EXPECT_EQ(fd.to_string(fd.generator_tree()), "(o^o)");
    EXPECT_THROW(fd.parse("(o^o"), ParseError);
    EXPECT_THROW(fd.parse("x"), ParseError);
}

TEST(PlanarTrees, DegreeTwoProducts)
{
    FreeDendriform fd;
    const auto a = fd.generator();
    const auto p = fd.prec(a, a), q = fd.succ(a, a);
    ASSERT_EQ(p.size(), 1u);
    ASSERT_EQ(q.size(), 1u);
    EXPECT_FALSE(p == q);
    EXPECT_EQ(fd.to_string(p.begin()->first), "(o^(o^o))");
    EXPECT_EQ(fd.to_string(q.begin()->first), "((o^o)^o)");
    EXPECT_EQ(p + q, star(fd, a, a));
}

TEST(PlanarTrees, UnitRules)
{
    FreeDendriform fd;
    UnitalDendriform<FreeDendriform> u(fd);
    const auto a = u.lift(fd.generator());
    EXPECT_EQ(u.prec(a, u.one()).part, fd.generator());
    EXPECT_TRUE(u.is_zero(u.succ(a, u.one())));
    EXPECT_THROW(u.prec(u.one(), u.one()), UndefinedUnitProduct);
    EXPECT_THROW(fd.basis_prec(fd.leaf(), fd.leaf()), UndefinedUnitProduct);
}

TEST(PlanarTrees, AxiomsExhaustiveToDegreeSix)
{
    FreeDendriform fd;
    PreLieView<FreeDendriform> pl(fd);
    std::size_t triples = 0;
    for (std::size_t i = 1; i <= 4; ++i)
        for (std::size_t j = 1; i + j <= 5; ++j)
            for (std::size_t k = 1; i + j + k <= 6; ++k)
                for (TreeId x : fd.enumerate(i))
                    for (TreeId y : fd.enumerate(j))
                        for (TreeId z : fd.enumerate(k)) {
                            const auto a = fd.basis(x), b = fd.basis(y), c = fd.basis(z);
                            for (const auto& r : dendriform_axiom_residuals(fd, a, b, c)) ASSERT_TRUE(r.is_zero());
                            ASSERT_TRUE(left_prelie_residual(pl, a, b, c).is_zero());
                            ASSERT_TRUE(right_prelie_residual(pl, a, b, c).is_zero());
                            ++triples;
                        }
    EXPECT_GT(triples, 0u);
}

TEST(RootedTrees, CanonicalEncoding)
{
    const auto t = RootedTree::parse("a[a,a[a]]");
    EXPECT_EQ(t.encoding(), "a[a,a[a]]");
    EXPECT_EQ(RootedTree::parse("a[a[a],a]"), t);
    EXPECT_EQ(t.degree(), 4u);
    EXPECT_EQ(RootedTree::ladder(3).encoding(), "a[a[a]]");
    EXPECT_THROW(RootedTree::parse("a[a"), ParseError);
    // rooted trees with n vertices: 1, 1, 2, 4, 9, 20
    const std::vector<std::size_t> counts{1, 1, 2, 4, 9, 20};
    for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(enumerate_rooted(n).size(), counts[n - 1]);
}

TEST(RootedTrees, GraftingExamples)
{
    FreePreLie p;
    const auto a = p.generator();
    const auto aa = p.rhd(a, a);
    EXPECT_EQ(aa, RootedComb(RootedTree::ladder(2)));
    // a |> (a |> a): onto the root (cherry) or onto the child (ladder)
    RootedComb expected;
    expected.add_term(RootedTree::parse("a[a,a]"), Rational(1));
    expected.add_term(RootedTree::ladder(3), Rational(1));
    EXPECT_EQ(p.rhd(a, aa), expected);
}

TEST(RootedTrees, PreLieExhaustiveToDegreeSix)
{
    FreePreLie p;
    for (std::size_t i = 1; i <= 4; ++i)
        for (std::size_t j = 1; i + j <= 5; ++j)
            for (std::size_t k = 1; i + j + k <= 6; ++k)
                for (const auto& x : enumerate_rooted(i))
                    for (const auto& y : enumerate_rooted(j))
                        for (const auto& z : enumerate_rooted(k))
                            ASSERT_TRUE(left_prelie_residual(p, RootedComb(x), RootedComb(y), RootedComb(z)).is_zero());
}

TEST(PreLieExpressions, ParseAndDegree)
{
    const auto e = PreLieExpr::parse("((a>a)>a)");
    EXPECT_EQ(e.degree(), 3u);
    EXPECT_EQ(e.left().str(), "(a>a)");
    EXPECT_EQ(e.right().str(), "a");
    EXPECT_THROW(PreLieExpr::parse("(a>a"), ParseError);
    EXPECT_THROW(PreLieExpr::parse("a>a"), ParseError);
}

TEST(PreLieExpressions, GeneratorEvaluation)
{
    FreeDendriform fd;
    EXPECT_EQ(eval_rooted(PreLieExpr::generator()), RootedComb(RootedTree{}));
    EXPECT_EQ(eval_planar(fd, PreLieExpr::generator()), fd.generator());
}

TEST(PreLieExpressions, DisplayedFourTermIdentity)
{
    // (a>a)>(a>a) = ((a>a)>a)>a - (a>(a>a))>a + a>((a>a)>a)
    FreeDendriform fd;
    PreLieComb lhs(PreLieExpr::parse("((a>a)>(a>a))"));
    PreLieComb rhs;
    rhs.add_term(PreLieExpr::parse("(((a>a)>a)>a)"), Rational(1));
    rhs.add_term(PreLieExpr::parse("((a>(a>a))>a)"), Rational(-1));
    rhs.add_term(PreLieExpr::parse("(a>((a>a)>a))"), Rational(1));
    EXPECT_EQ(eval_rooted(lhs), eval_rooted(rhs));
    EXPECT_EQ(eval_planar(fd, lhs), eval_planar(fd, rhs));
}

TEST(PreLieExpressions, RootedEqualityTransfersToPlanar)
{
    FreeDendriform fd;
    Sampler s(11);
    int pairs = 0;
    while (pairs < 100) {
        const auto degree = static_cast<std::size_t>(s.integer(3, 5));
        PreLieComb c;
        for (int t = 0; t < 3; ++t) c.add_term(random_expr(s, degree), s.nonzero_rational());
        const auto nbs = detail::rewrite_neighbors(c);
        if (nbs.empty()) continue;
        const auto& other = nbs[static_cast<std::size_t>(s.integer(0, static_cast<long>(nbs.size()) - 1))];
        ASSERT_EQ(eval_rooted(c), eval_rooted(other));
        ASSERT_EQ(eval_planar(fd, c), eval_planar(fd, other));
        ++pairs;
    }
}

TEST(Counting, SupportAndMonomials)
{
    EXPECT_EQ(monomial_count(PreLieComb{}), 0u);
    EXPECT_EQ(support_count(RootedComb{}), 0u);
    PreLieComb c;
    c.add_term(PreLieExpr::parse("(a>a)"), Rational(1));
    c.add_term(PreLieExpr::parse("(a>a)"), Rational(-1));
    EXPECT_EQ(monomial_count(c), 0u);
}

TEST(Rewrite, DegreeTwoAlreadyMinimal)
{
    const PreLieComb c(PreLieExpr::parse("(a>a)"), Rational(-1, 2));
    EXPECT_EQ(rewrite_reduce(c), c);
}

TEST(Rewrite, BudgetExhaustionCarriesSoundResult)
{
    PreLieComb c;
    c.add_term(PreLieExpr::parse("(((a>a)>a)>a)"), Rational(-1, 8));
    c.add_term(PreLieExpr::parse("((a>(a>a))>a)"), Rational(-1, 24));
    c.add_term(PreLieExpr::parse("(a>((a>a)>a))"), Rational(-1, 24));
    c.add_term(PreLieExpr::parse("((a>a)>(a>a))"), Rational(-1, 24));
    try {
        rewrite_reduce(c, RewriteOptions{1, 2});
        FAIL() << "expected BudgetExhausted";
    } catch (const BudgetExhausted& e) {
        EXPECT_EQ(eval_rooted(e.best()), eval_rooted(c));
    }
}
