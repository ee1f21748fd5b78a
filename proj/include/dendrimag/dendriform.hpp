#pragma once

// Dendriform, tridendriform and pre-Lie contracts, the unit adjunction
// A-bar = A + Q.1, word power sums and the two fundamental equations
//   X = 1 + lambda a < X,      Y = 1 - lambda Y > a.

#include <array>
#include <concepts>
#include <cstddef>
#include <utility>

#include "dendrimag/errors.hpp"
#include "dendrimag/rational.hpp"
#include "dendrimag/series.hpp"

namespace dendrimag {

/// Two half-products prec (<) and succ (>) on a coefficient space. The
/// axioms are not checked by the type system; see dendriform_axiom_residuals.
template <class D>
concept Dendriform = CoefficientSpace<D> && requires(const D& d, const typename D::value_type& x) {
    { d.prec(x, x) } -> std::convertible_to<typename D::value_type>;
    { d.succ(x, x) } -> std::convertible_to<typename D::value_type>;
};

template <class T>
concept Tridendriform = CoefficientSpace<T> && requires(const T& t, const typename T::value_type& x) {
    { t.lt(x, x) } -> std::convertible_to<typename T::value_type>;
    { t.gt(x, x) } -> std::convertible_to<typename T::value_type>;
    { t.dot(x, x) } -> std::convertible_to<typename T::value_type>;
};

/// Left pre-Lie product rhd on a coefficient space.
template <class P>
concept LeftPreLie = CoefficientSpace<P> && requires(const P& p, const typename P::value_type& x) {
    { p.rhd(x, x) } -> std::convertible_to<typename P::value_type>;
};

/// Right pre-Lie product lhd on a coefficient space.
template <class P>
concept RightPreLie = CoefficientSpace<P> && requires(const P& p, const typename P::value_type& x) {
    { p.lhd(x, x) } -> std::convertible_to<typename P::value_type>;
};

/// True when the instance declares itself commutative (Zinbiel: x > y = y < x).
template <Dendriform D>
constexpr bool declares_commutative(const D& d)
{
    if constexpr (requires { d.commutative(); })
        return d.commutative();
    else
        return false;
}

template <Dendriform D>
typename D::value_type star(const D& d, const typename D::value_type& a, const typename D::value_type& b)
{
    return d.prec(a, b) + d.succ(a, b);
}

/// a |> b := a > b - b < a
template <Dendriform D>
typename D::value_type prelie_rhd(const D& d, const typename D::value_type& a, const typename D::value_type& b)
{
    return d.succ(a, b) - d.prec(b, a);
}

/// a <| b := a < b - b > a
template <Dendriform D>
typename D::value_type prelie_lhd(const D& d, const typename D::value_type& a, const typename D::value_type& b)
{
    return d.prec(a, b) - d.succ(b, a);
}

/// The pre-Lie products induced by a dendriform structure, exposed as a
/// coefficient space of its own so generic recursions can run on it.
template <Dendriform D>
class PreLieView {
public:
    using value_type = typename D::value_type;
    explicit PreLieView(const D& d) : d_(&d) {}
    [[nodiscard]] value_type zero() const { return d_->zero(); }
    [[nodiscard]] bool is_zero(const value_type& x) const { return d_->is_zero(x); }
    [[nodiscard]] std::size_t support_size(const value_type& x) const { return d_->support_size(x); }
    [[nodiscard]] value_type rhd(const value_type& a, const value_type& b) const { return prelie_rhd(*d_, a, b); }
    [[nodiscard]] value_type lhd(const value_type& a, const value_type& b) const { return prelie_lhd(*d_, a, b); }
    [[nodiscard]] const D& dendriform() const { return *d_; }

private:
    const D* d_;
};

/// Dendriform structure (prec := lt + dot, succ := gt) of a tridendriform one.
template <Tridendriform T>
class TridendAsDend {
public:
    using value_type = typename T::value_type;
    explicit TridendAsDend(const T& t) : t_(&t) {}
    [[nodiscard]] value_type zero() const { return t_->zero(); }
    [[nodiscard]] bool is_zero(const value_type& x) const { return t_->is_zero(x); }
    [[nodiscard]] std::size_t support_size(const value_type& x) const { return t_->support_size(x); }
    [[nodiscard]] value_type prec(const value_type& a, const value_type& b) const
    {
        return t_->lt(a, b) + t_->dot(a, b);
    }
    [[nodiscard]] value_type succ(const value_type& a, const value_type& b) const { return t_->gt(a, b); }

private:
    const T* t_;
};

template <Tridendriform T>
TridendAsDend<T> tridend_to_dend(const T& t)
{
    return TridendAsDend<T>(t);
}

template <Tridendriform T>
typename T::value_type tridend_star(const T& t, const typename T::value_type& a, const typename T::value_type& b)
{
    return t.lt(a, b) + t.gt(a, b) + t.dot(a, b);
}

/// Any associative algebra as a dendriform algebra with prec = product, succ = 0.
template <AlgebraSpace S>
class AssociativeDendriform {
public:
    using value_type = typename S::value_type;
    explicit AssociativeDendriform(S s) : s_(std::move(s)) {}
    [[nodiscard]] value_type zero() const { return s_.zero(); }
    [[nodiscard]] bool is_zero(const value_type& x) const { return s_.is_zero(x); }
    [[nodiscard]] std::size_t support_size(const value_type& x) const { return s_.support_size(x); }
    [[nodiscard]] value_type prec(const value_type& a, const value_type& b) const { return s_.mul(a, b); }
    [[nodiscard]] value_type succ(const value_type&, const value_type&) const { return s_.zero(); }
    [[nodiscard]] const S& algebra() const { return s_; }

private:
    S s_;
};

// ---------------------------------------------------------------------------
// Unit adjunction

/// scalar * 1 + part, an element of A-bar.
template <class E>
struct Unital {
    Rational scalar;
    E part;

    friend Unital operator+(const Unital& a, const Unital& b) { return {a.scalar + b.scalar, a.part + b.part}; }
    friend Unital operator-(const Unital& a, const Unital& b) { return {a.scalar - b.scalar, a.part - b.part}; }
    friend Unital operator-(const Unital& a) { return {-a.scalar, -a.part}; }
    friend Unital operator*(const Rational& q, const Unital& a) { return {q * a.scalar, q * a.part}; }
};

/// A-bar for a dendriform D: the associative algebra (A-bar, *) plus the
/// partially defined half-products. Satisfies AlgebraSpace, so exp*, log*
/// and products of series work on it directly.
template <Dendriform D>
class UnitalDendriform {
public:
    using element_type = typename D::value_type;
    using value_type = Unital<element_type>;

    explicit UnitalDendriform(const D& d) : d_(&d) {}

    [[nodiscard]] const D& dendriform() const { return *d_; }
    [[nodiscard]] value_type zero() const { return {Rational(0), d_->zero()}; }
    [[nodiscard]] value_type one() const { return {Rational(1), d_->zero()}; }
    [[nodiscard]] value_type lift(const element_type& x) const { return {Rational(0), x}; }
    [[nodiscard]] bool is_zero(const value_type& x) const { return x.scalar.is_zero() && d_->is_zero(x.part); }
    [[nodiscard]] std::size_t support_size(const value_type& x) const
    {
        return (x.scalar.is_zero() ? 0 : 1) + d_->support_size(x.part);
    }

    /// a < 1 = a, 1 < a = 0; 1 < 1 is undefined.
    [[nodiscard]] value_type prec(const value_type& a, const value_type& b) const
    {
        if (!a.scalar.is_zero() && !b.scalar.is_zero())
            throw UndefinedUnitProduct("1 < 1 is not defined");
        return {Rational(0), d_->prec(a.part, b.part) + b.scalar * a.part};
    }

    /// 1 > a = a, a > 1 = 0; 1 > 1 is undefined.
    [[nodiscard]] value_type succ(const value_type& a, const value_type& b) const
    {
        if (!a.scalar.is_zero() && !b.scalar.is_zero())
            throw UndefinedUnitProduct("1 > 1 is not defined");
        return {Rational(0), d_->succ(a.part, b.part) + a.scalar * b.part};
    }

    /// The associative product, total on A-bar: a*1 = 1*a = a, 1*1 = 1.
    [[nodiscard]] value_type mul(const value_type& a, const value_type& b) const
    {
        return {a.scalar * b.scalar, a.scalar * b.part + b.scalar * a.part + star(*d_, a.part, b.part)};
    }

private:
    const D* d_;
};

template <Dendriform D>
typename UnitalDendriform<D>::value_type half_prec(const UnitalDendriform<D>& u,
                                                   const typename UnitalDendriform<D>::value_type& a,
                                                   const typename UnitalDendriform<D>::value_type& b)
{
    return u.prec(a, b);
}

template <Dendriform D>
typename UnitalDendriform<D>::value_type half_succ(const UnitalDendriform<D>& u,
                                                   const typename UnitalDendriform<D>::value_type& a,
                                                   const typename UnitalDendriform<D>::value_type& b)
{
    return u.succ(a, b);
}

/// Series-level half-products (Cauchy extension of prec / succ).
template <Dendriform D>
auto series_prec(const UnitalDendriform<D>& u, const TruncatedSeries<typename UnitalDendriform<D>::value_type>& a,
                 const TruncatedSeries<typename UnitalDendriform<D>::value_type>& b)
{
    using U = typename UnitalDendriform<D>::value_type;
    return series_product(a, b, u.zero(), [&](const U& x, const U& y) { return u.prec(x, y); });
}

template <Dendriform D>
auto series_succ(const UnitalDendriform<D>& u, const TruncatedSeries<typename UnitalDendriform<D>::value_type>& a,
                 const TruncatedSeries<typename UnitalDendriform<D>::value_type>& b)
{
    using U = typename UnitalDendriform<D>::value_type;
    return series_product(a, b, u.zero(), [&](const U& x, const U& y) { return u.succ(x, y); });
}

/// Lifts a carrier series into A-bar[[lambda]] (zero unit parts).
template <Dendriform D>
auto lift_series(const UnitalDendriform<D>& u, const TruncatedSeries<typename D::value_type>& s)
{
    using E = typename D::value_type;
    return s.map([&](const E& x) { return u.lift(x); });
}

// ---------------------------------------------------------------------------
// Word power sums and the fundamental equations

/// w^(0) = 1, w^(n) = a < w^(n-1).
template <Dendriform D>
Unital<typename D::value_type> word_left(const D& d, const typename D::value_type& a, std::size_t n)
{
    UnitalDendriform<D> u(d);
    auto w = u.one();
    for (std::size_t k = 0; k < n; ++k) w = u.prec(u.lift(a), w);
    return w;
}

/// w^(0) = 1, w^(n) = w^(n-1) > a.
template <Dendriform D>
Unital<typename D::value_type> word_right(const D& d, const typename D::value_type& a, std::size_t n)
{
    UnitalDendriform<D> u(d);
    auto w = u.one();
    for (std::size_t k = 0; k < n; ++k) w = u.succ(w, u.lift(a));
    return w;
}

/// X = sum_n lambda^n w^(n)_<(a), the solution of X = 1 + lambda a < X.
template <Dendriform D>
TruncatedSeries<Unital<typename D::value_type>> solve_left(const D& d, const typename D::value_type& a,
                                                           std::size_t order)
{
    UnitalDendriform<D> u(d);
    TruncatedSeries<Unital<typename D::value_type>> x(order, u.zero());
    x[0] = u.one();
    for (std::size_t n = 1; n <= order; ++n) x[n] = u.prec(u.lift(a), x[n - 1]);
    return x;
}

/// Y = sum_n (-lambda)^n w^(n)_>(a), the solution of Y = 1 - lambda Y > a.
template <Dendriform D>
TruncatedSeries<Unital<typename D::value_type>> solve_right(const D& d, const typename D::value_type& a,
                                                            std::size_t order)
{
    UnitalDendriform<D> u(d);
    TruncatedSeries<Unital<typename D::value_type>> y(order, u.zero());
    y[0] = u.one();
    for (std::size_t n = 1; n <= order; ++n) y[n] = -u.succ(y[n - 1], u.lift(a));
    return y;
}

/// X - 1 - lambda a < X, which must vanish for the output of solve_left.
template <Dendriform D>
auto left_equation_residual(const D& d, const typename D::value_type& a,
                            const TruncatedSeries<Unital<typename D::value_type>>& x)
{
    UnitalDendriform<D> u(d);
    const auto la = monomial(u, x.order(), 1, u.lift(a));
    return x - unit_series(u, x.order()) - series_prec(u, la, x);
}

/// Y - 1 + lambda Y > a.
template <Dendriform D>
auto right_equation_residual(const D& d, const typename D::value_type& a,
                             const TruncatedSeries<Unital<typename D::value_type>>& y)
{
    UnitalDendriform<D> u(d);
    const auto la = monomial(u, y.order(), 1, u.lift(a));
    return y - unit_series(u, y.order()) + series_succ(u, y, la);
}

// ---------------------------------------------------------------------------
// Identity residuals (all must be zero in a valid instance)

/// (a<b)<c - a<(b*c),  (a>b)<c - a>(b<c),  a>(b>c) - (a*b)>c
template <Dendriform D>
std::array<typename D::value_type, 3> dendriform_axiom_residuals(const D& d, const typename D::value_type& a,
                                                                 const typename D::value_type& b,
                                                                 const typename D::value_type& c)
{
    return {d.prec(d.prec(a, b), c) - d.prec(a, star(d, b, c)),
            d.prec(d.succ(a, b), c) - d.succ(a, d.prec(b, c)),
            d.succ(a, d.succ(b, c)) - d.succ(star(d, a, b), c)};
}

template <Tridendriform T>
std::array<typename T::value_type, 7> tridendriform_axiom_residuals(const T& t, const typename T::value_type& x,
                                                                     const typename T::value_type& y,
                                                                     const typename T::value_type& z)
{
    return {t.lt(t.lt(x, y), z) - t.lt(x, tridend_star(t, y, z)),
            t.lt(t.gt(x, y), z) - t.gt(x, t.lt(y, z)),
            t.gt(tridend_star(t, x, y), z) - t.gt(x, t.gt(y, z)),
            t.dot(t.gt(x, y), z) - t.gt(x, t.dot(y, z)),
            t.dot(t.lt(x, y), z) - t.dot(x, t.gt(y, z)),
            t.lt(t.dot(x, y), z) - t.dot(x, t.lt(y, z)),
            t.dot(t.dot(x, y), z) - t.dot(x, t.dot(y, z))};
}

template <Dendriform D>
typename D::value_type associativity_residual(const D& d, const typename D::value_type& a,
                                              const typename D::value_type& b, const typename D::value_type& c)
{
    return star(d, star(d, a, b), c) - star(d, a, star(d, b, c));
}

/// (a|>b)|>c - a|>(b|>c) - (b|>a)|>c + b|>(a|>c)
template <LeftPreLie P>
typename P::value_type left_prelie_residual(const P& p, const typename P::value_type& a,
                                            const typename P::value_type& b, const typename P::value_type& c)
{
    return p.rhd(p.rhd(a, b), c) - p.rhd(a, p.rhd(b, c)) - p.rhd(p.rhd(b, a), c) + p.rhd(b, p.rhd(a, c));
}

/// (a<|b)<|c - a<|(b<|c) - (a<|c)<|b + a<|(c<|b)
template <RightPreLie P>
typename P::value_type right_prelie_residual(const P& p, const typename P::value_type& a,
                                             const typename P::value_type& b, const typename P::value_type& c)
{
    return p.lhd(p.lhd(a, b), c) - p.lhd(a, p.lhd(b, c)) - p.lhd(p.lhd(a, c), b) + p.lhd(a, p.lhd(c, b));
}

/// [a,b] via *, |> and <| must coincide: returns (star - rhd, star - lhd).
template <Dendriform D>
std::array<typename D::value_type, 2> bracket_residuals(const D& d, const typename D::value_type& a,
                                                        const typename D::value_type& b)
{
    const auto by_star = star(d, a, b) - star(d, b, a);
    const auto by_rhd = prelie_rhd(d, a, b) - prelie_rhd(d, b, a);
    const auto by_lhd = prelie_lhd(d, a, b) - prelie_lhd(d, b, a);
    return {by_star - by_rhd, by_star - by_lhd};
}

/// x > y - y < x; zero on every pair for a commutative (Zinbiel) instance.
template <Dendriform D>
typename D::value_type zinbiel_residual(const D& d, const typename D::value_type& x, const typename D::value_type& y)
{
    return d.succ(x, y) - d.prec(y, x);
}

} // namespace dendrimag
