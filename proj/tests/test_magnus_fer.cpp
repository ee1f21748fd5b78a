#include <gtest/gtest.h>

#include <set>

#include "dendrimag/free_expansions.hpp"
#include "dendrimag/magnus.hpp"
#include "dendrimag/matrix.hpp"
#include "dendrimag/sampling.hpp"

using namespace dendrimag;

namespace {

PreLieComb comb(std::initializer_list<std::pair<const char*, Rational>> terms)
{
    PreLieComb c;
    for (const auto& [e, q] : terms) c.add_term(PreLieExpr::parse(e), q);
    return c;
}

bool all_zero(const std::vector<std::size_t>& v)
{
    for (auto x : v)
        if (x != 0) return false;
    return true;
}

} // namespace

TEST(Magnus, LowDegreeCoefficients)
{
    const auto omega = magnus_free_raw(4);
    EXPECT_EQ(omega[1], comb({{"a", Rational(1)}}));
    EXPECT_EQ(omega[2], comb({{"(a>a)", Rational(-1, 2)}}));
    EXPECT_EQ(omega[3], comb({{"(a>(a>a))", Rational(1, 12)}, {"((a>a)>a)", Rational(1, 4)}}));
    EXPECT_EQ(omega[4], comb({{"(((a>a)>a)>a)", Rational(-1, 8)},
                              {"((a>(a>a))>a)", Rational(-1, 24)},
                              {"(a>((a>a)>a))", Rational(-1, 24)},
                              {"((a>a)>(a>a))", Rational(-1, 24)}}));
}

TEST(Magnus, FreeComponentBases)
{
    const auto c2 = magnus_free_component(2);
    EXPECT_EQ(c2.rooted, RootedComb(RootedTree::ladder(2), Rational(-1, 2)));
    // running the recursion directly on rooted trees agrees with evaluating the raw form
    FreePreLie p;
    const auto direct = magnus(p, p.generator(), 6);
    for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(direct[n], magnus_free_component(n).rooted) << n;
    EXPECT_THROW(magnus_free_component(9), Error);
}

TEST(Magnus, DegreeFourReduction)
{
    const auto raw = magnus_free_component(4).raw;
    EXPECT_EQ(monomial_count(raw), 4u);
    const auto reduced = rewrite_reduce(raw);
    ASSERT_EQ(monomial_count(reduced), 2u);
    EXPECT_EQ(eval_rooted(reduced), eval_rooted(raw));
    std::set<Rational> abs_coeffs;
    for (const auto& [e, q] : reduced) abs_coeffs.insert(abs(q));
    EXPECT_EQ(abs_coeffs, (std::set<Rational>{Rational(1, 6), Rational(1, 12)}));
}

TEST(Magnus, FreePlanarModelIdentities)
{
    FreeDendriform fd;
    const auto rep = verify_magnus(fd, fd.generator(), 8);
    EXPECT_TRUE(rep.passed()) << rep.to_text();
}

TEST(Magnus, ZeroInput)
{
    AssociativeDendriform<MatrixAlgebra> d(MatrixAlgebra(2));
    PreLieView<decltype(d)> pl(d);
    const auto omega = magnus(pl, MatrixRat(2), 5);
    EXPECT_TRUE(series_is_zero(d, omega));
    EXPECT_TRUE(verify_magnus(d, MatrixRat(2), 5).passed());
}

TEST(Magnus, AssociativeDegeneration)
{
    Sampler s(21);
    MatrixAlgebra alg(3);
    AssociativeDendriform<MatrixAlgebra> d(alg);
    PreLieView<decltype(d)> pl(d);
    const auto a = s.matrix(3);
    const std::size_t N = 8;
    const auto omega = magnus(pl, a, N);
    const auto expected = -series_log(alg, unit_series(alg, N) - monomial(alg, N, 1, a));
    EXPECT_TRUE(series_equal(alg, omega, expected));
    EXPECT_TRUE(series_equal(alg, omega, magnus(pl, a, N, MagnusVariant::right_lhd)));
    const auto rep = verify_magnus(d, a, N);
    EXPECT_TRUE(rep.passed()) << rep.to_text();
}

TEST(Magnus, GeneralInputSeries)
{
    // exp*(Omega'(b)) solves X = 1 + b < X for any b in lambda A[[lambda]]
    FreeDendriform fd;
    UnitalDendriform<FreeDendriform> u(fd);
    PreLieView<FreeDendriform> pl(fd);
    const std::size_t N = 5;
    auto b = monomial(fd, N, 1, fd.generator());
    b[2] = Rational(3) * fd.prec(fd.generator(), fd.generator());
    const auto x = series_exp(u, lift_series(u, magnus_left_rhd(pl, b)));
    const auto residual = x - unit_series(u, N) - series_prec(u, lift_series(u, b), x);
    EXPECT_TRUE(series_is_zero(u, residual));
    EXPECT_TRUE(series_equal(fd, magnus_left_rhd(pl, b), magnus_right_lhd(pl, b)));
}

TEST(Magnus, PowerSumIdentity)
{
    FreeDendriform fd;
    UnitalDendriform<FreeDendriform> u(fd);
    PreLieView<FreeDendriform> pl(fd);
    const auto omega = magnus(pl, fd.generator(), 6);
    for (std::size_t n = 0; n <= 5; ++n) EXPECT_TRUE(series_is_zero(u, power_sum_residual(fd, omega, n))) << n;
}

TEST(Magnus, BetaIntegral)
{
    for (unsigned p = 0; p <= 8; ++p)
        for (unsigned q = 0; q <= 8; ++q)
            EXPECT_EQ(beta_integral_by_expansion(p, q), factorial(p) * factorial(q) / factorial(p + q + 1));
}

TEST(Fer, Depth)
{
    EXPECT_EQ(fer_depth(1), 1u);
    EXPECT_EQ(fer_depth(2), 2u);
    EXPECT_EQ(fer_depth(3), 2u);
    EXPECT_EQ(fer_depth(6), 3u);
    EXPECT_EQ(fer_depth(8), 4u);
}

TEST(Fer, FirstCorrection)
{
    const auto us = fer_free_raw(3);
    ASSERT_EQ(us.size(), 3u);
    EXPECT_EQ(us[0][1], comb({{"a", Rational(1)}}));
    EXPECT_TRUE(us[1][1].is_zero());
    EXPECT_EQ(us[1][2], comb({{"(a>a)", Rational(-1, 2)}}));
    EXPECT_EQ(us[1][3], comb({{"(a>(a>a))", Rational(1, 3)}}));
}

TEST(Fer, LowestDegreesDouble)
{
    FreePreLie p;
    const auto us = fer(p, p.generator(), 8);
    for (std::size_t n = 0; n <= 3; ++n) EXPECT_EQ(lowest_degree(p, us[n]), std::size_t{1} << n) << n;
}

TEST(Fer, FreePlanarModelIdentities)
{
    FreeDendriform fd;
    const auto rep = verify_fer(fd, fd.generator(), 6);
    EXPECT_TRUE(rep.passed()) << rep.to_text();
}

TEST(Fer, AssociativeAndZero)
{
    Sampler s(22);
    AssociativeDendriform<MatrixAlgebra> d(MatrixAlgebra(3));
    EXPECT_TRUE(verify_fer(d, s.matrix(3), 6).passed());
    UnitalDendriform<decltype(d)> u(d);
    PreLieView<decltype(d)> pl(d);
    const auto prod = fer_product(d, fer(pl, MatrixRat(3), 4), false);
    EXPECT_TRUE(series_equal(u, prod, unit_series(u, 4)));
}

TEST(Report, FailuresAreData)
{
    VerificationReport rep("demo");
    rep.add_degrees("ok", {0, 0});
    rep.add_info("informational", false, "differs");
    EXPECT_TRUE(rep.passed());
    rep.add_degrees("bad", {0, 3});
    EXPECT_FALSE(rep.passed());
    EXPECT_NE(rep.to_text().find("[FAIL] demo: bad"), std::string::npos);
    EXPECT_TRUE(all_zero(rep.checks()[0].degree_residuals));
}
