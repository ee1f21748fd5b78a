#include <gtest/gtest.h>

#include "dendrimag/bernoulli.hpp"
#include "dendrimag/dendriform.hpp"
#include "dendrimag/matrix.hpp"
#include "dendrimag/rational.hpp"
#include "dendrimag/sampling.hpp"
#include "dendrimag/series.hpp"

using namespace dendrimag;

namespace {

TruncatedSeries<MatrixRat> random_matrix_series(Sampler& s, std::size_t n, std::size_t order)
{
    MatrixAlgebra alg(n);
    auto out = zero_series(alg, order);
    for (std::size_t k = 1; k <= order; ++k) out[k] = s.matrix(n);
    return out;
}

} // namespace

TEST(Rational, CanonicalForm)
{
    Rational r(6, -4);
    EXPECT_EQ(r.to_string(), "-3/2");
    EXPECT_EQ(Rational(0, 7).to_string(), "0");
    EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
    EXPECT_EQ(Rational::parse("-7"), Rational(-7));
    EXPECT_THROW(Rational::parse("1/0"), ParseError);
    EXPECT_THROW(Rational::parse("x"), ParseError);
    EXPECT_THROW(Rational::parse("1/-2"), ParseError);
}

TEST(Rational, ExactCrossMultiplication)
{
    Sampler s(1);
    for (int i = 0; i < 200; ++i) {
        const long a = s.integer(-50, 50), b = s.integer(1, 50), c = s.integer(-50, 50), d = s.integer(1, 50);
        const Rational sum = Rational(a, b) + Rational(c, d);
        EXPECT_EQ(sum * Rational(b) * Rational(d), Rational(a * d + c * b));
    }
}

TEST(Bernoulli, KnownValues)
{
    EXPECT_EQ(bernoulli(0), Rational(1));
    EXPECT_EQ(bernoulli(1), Rational(-1, 2));
    EXPECT_EQ(bernoulli(2), Rational(1, 6));
    EXPECT_EQ(bernoulli(3), Rational(0));
    EXPECT_EQ(bernoulli(4), Rational(-1, 30));
    // coefficients of z/(e^z - 1)
    EXPECT_EQ(bernoulli_coefficient(1), Rational(-1, 2));
    EXPECT_EQ(bernoulli_coefficient(2), Rational(1, 12));
    EXPECT_EQ(bernoulli_coefficient(4), Rational(-1, 720));
    for (unsigned m = 0; m <= 10; ++m) EXPECT_TRUE(bernoulli(2 * m + 3).is_zero()) << m;
}

TEST(Bernoulli, GeneratingFunction)
{
    // (e^z - 1)/z * z/(e^z - 1) = 1 as power series in z
    const std::size_t n = 12;
    ScalarAlgebra q;
    TruncatedSeries<Rational> f(n, Rational(0)), g(n, Rational(0));
    for (std::size_t k = 0; k <= n; ++k) {
        f[k] = Rational(1) / factorial(static_cast<unsigned>(k + 1));
        g[k] = bernoulli(static_cast<unsigned>(k)) / factorial(static_cast<unsigned>(k));
    }
    EXPECT_TRUE(series_equal(q, series_mul(q, f, g), unit_series(q, n)));
}

TEST(Series, ScalarExpLog)
{
    ScalarAlgebra q;
    const auto lam = monomial(q, 3, 1, Rational(1));
    const auto e = series_exp(q, lam);
    EXPECT_EQ(e[0], Rational(1));
    EXPECT_EQ(e[1], Rational(1));
    EXPECT_EQ(e[2], Rational(1, 2));
    EXPECT_EQ(e[3], Rational(1, 6));

    const auto l = series_log(q, unit_series(q, 3) + lam);
    EXPECT_EQ(l[1], Rational(1));
    EXPECT_EQ(l[2], Rational(-1, 2));
    EXPECT_EQ(l[3], Rational(1, 3));

    EXPECT_TRUE(series_equal(q, series_exp(q, zero_series(q, 4)), unit_series(q, 4)));
    EXPECT_TRUE(series_is_zero(q, series_log(q, unit_series(q, 4))));
}

TEST(Series, DomainErrors)
{
    ScalarAlgebra q;
    EXPECT_THROW(series_exp(q, unit_series(q, 3)), NonNilpotentInput);
    EXPECT_THROW(series_log(q, zero_series(q, 3)), BadConstantTerm);
    EXPECT_THROW(bch(q, unit_series(q, 2), zero_series(q, 2)), NonNilpotentInput);
}

TEST(Series, MatrixExpLogRoundTrip)
{
    Sampler s(2);
    MatrixAlgebra alg(3);
    for (int i = 0; i < 50; ++i) {
        const auto x = random_matrix_series(s, 3, 6);
        EXPECT_TRUE(series_equal(alg, series_log(alg, series_exp(alg, x)), x));
        const auto one_plus = unit_series(alg, 6) + x;
        EXPECT_TRUE(series_equal(alg, series_exp(alg, series_log(alg, one_plus)), one_plus));
    }
}

TEST(Series, Truncation)
{
    ScalarAlgebra q;
    const auto e = series_exp(q, monomial(q, 6, 1, Rational(1)));
    const auto e3 = series_exp(q, monomial(q, 3, 1, Rational(1)));
    EXPECT_TRUE(series_equal(q, e.truncated(3), e3));
    EXPECT_THROW(e3.truncated(4), Error);
}

TEST(Bch, TrivialCases)
{
    ScalarAlgebra q;
    Sampler s(3);
    MatrixAlgebra alg(3);
    const auto x = random_matrix_series(s, 3, 5);
    EXPECT_TRUE(series_is_zero(alg, bch(alg, x, zero_series(alg, 5))));
    EXPECT_TRUE(series_is_zero(alg, bch(alg, x, -x)));
    const auto a = monomial(q, 5, 1, Rational(3, 2)), b = monomial(q, 5, 2, Rational(-2));
    EXPECT_TRUE(series_is_zero(q, bch(q, a, b)));
}

TEST(Bch, SecondOrderIsHalfCommutator)
{
    Sampler s(4);
    MatrixAlgebra alg(3);
    for (int i = 0; i < 20; ++i) {
        const MatrixRat x = s.matrix(3), y = s.matrix(3);
        const auto b = bch(alg, monomial(alg, 2, 1, x), monomial(alg, 2, 1, y));
        // exp(x)exp(y) to second order: 1 + x + y + x^2/2 + xy + y^2/2; log subtracts (x+y)^2/2
        const MatrixRat expected = x * y - Rational(1, 2) * (x * y + y * x);
        EXPECT_EQ(b[2], expected);
        EXPECT_EQ(b[2], Rational(1, 2) * commutator(x, y));
        EXPECT_TRUE(b[1].is_zero());
    }
}

// ---------------------------------------------------------------------------
// dendriform_core on the associative degeneration of 3x3 matrices

TEST(UnitAdjunction, Rules)
{
    MatrixAlgebra alg(2);
    AssociativeDendriform<MatrixAlgebra> d(alg);
    UnitalDendriform<AssociativeDendriform<MatrixAlgebra>> u(d);
    const MatrixRat a{{1, 2}, {3, 4}};
    EXPECT_EQ(u.prec(u.lift(a), u.one()).part, a);
    EXPECT_TRUE(u.is_zero(u.prec(u.one(), u.lift(a))));
    EXPECT_EQ(u.succ(u.one(), u.lift(a)).part, a);
    EXPECT_TRUE(u.is_zero(u.succ(u.lift(a), u.one())));
    EXPECT_THROW(u.prec(u.one(), u.one()), UndefinedUnitProduct);
    EXPECT_THROW(u.succ(u.one(), u.one()), UndefinedUnitProduct);
    const auto oo = u.mul(u.one(), u.one());
    EXPECT_EQ(oo.scalar, Rational(1));
    EXPECT_TRUE(oo.part.is_zero());
    EXPECT_EQ(u.mul(u.lift(a), u.one()).part, a);
}

TEST(Degeneration, PreLieIsMinusReversedProduct)
{
    Sampler s(5);
    AssociativeDendriform<MatrixAlgebra> d(MatrixAlgebra(3));
    for (int i = 0; i < 50; ++i) {
        const auto a = s.matrix(3), b = s.matrix(3);
        EXPECT_EQ(prelie_rhd(d, a, b), -(b * a));
    }
}

TEST(Degeneration, AxiomsAndPreLie)
{
    Sampler s(6);
    AssociativeDendriform<MatrixAlgebra> d(MatrixAlgebra(3));
    PreLieView<decltype(d)> pl(d);
    for (int i = 0; i < 200; ++i) {
        const auto a = s.matrix(3), b = s.matrix(3), c = s.matrix(3);
        for (const auto& r : dendriform_axiom_residuals(d, a, b, c)) EXPECT_TRUE(r.is_zero());
        EXPECT_TRUE(associativity_residual(d, a, b, c).is_zero());
        EXPECT_TRUE(left_prelie_residual(pl, a, b, c).is_zero());
        EXPECT_TRUE(right_prelie_residual(pl, a, b, c).is_zero());
        for (const auto& r : bracket_residuals(d, a, b)) EXPECT_TRUE(r.is_zero());
    }
}

TEST(FundamentalEquations, AssociativeSolution)
{
    Sampler s(7);
    MatrixAlgebra alg(3);
    AssociativeDendriform<MatrixAlgebra> d(alg);
    UnitalDendriform<decltype(d)> u(d);
    const auto a = s.matrix(3);
    const auto x = solve_left(d, a, 8);
    MatrixRat power = MatrixRat::identity(3);
    for (std::size_t n = 1; n <= 8; ++n) {
        power = power * a;
        EXPECT_EQ(x[n].part, power);
        EXPECT_TRUE(x[n].scalar.is_zero());
    }
    EXPECT_TRUE(series_is_zero(u, left_equation_residual(d, a, x)));
    EXPECT_TRUE(series_is_zero(u, right_equation_residual(d, a, solve_right(d, a, 8))));

    const auto zero_x = solve_left(d, alg.zero(), 4);
    EXPECT_TRUE(series_equal(u, zero_x, unit_series(u, 4)));
}

TEST(FundamentalEquations, WordsAndTruncationCoherence)
{
    Sampler s(8);
    AssociativeDendriform<MatrixAlgebra> d(MatrixAlgebra(2));
    UnitalDendriform<decltype(d)> u(d);
    const auto a = s.matrix(2);
    const auto x8 = solve_left(d, a, 8);
    EXPECT_TRUE(series_equal(u, x8.truncated(5), solve_left(d, a, 5)));
    for (std::size_t n = 0; n <= 8; ++n) {
        const auto w = word_left(d, a, n);
        EXPECT_EQ(w.scalar, x8[n].scalar);
        EXPECT_EQ(w.part, x8[n].part);
    }
    EXPECT_EQ(word_left(d, a, 0).scalar, Rational(1));
    EXPECT_EQ(word_left(d, a, 1).part, a);
    EXPECT_EQ(word_left(d, a, 2).part, d.prec(a, a));
    EXPECT_TRUE(word_right(d, a, 2).part.is_zero());
}
