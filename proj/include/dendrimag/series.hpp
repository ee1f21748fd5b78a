#pragma once

// Truncated formal power series in a grading parameter (lambda) over a
// pluggable coefficient space, plus exp/log/BCH in an associative ambient
// algebra. Every series carries its order bound N and all arithmetic drops
// degrees above N.

#include <concepts>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dendrimag/errors.hpp"
#include "dendrimag/rational.hpp"

namespace dendrimag {

/// A coefficient space names a value type closed under +, -, and rational
/// scaling, and supplies its own zero (matrices need a dimension for that).
template <class S>
concept CoefficientSpace = requires(const S& s, const typename S::value_type& x, const Rational& q) {
    { s.zero() } -> std::convertible_to<typename S::value_type>;
    { s.is_zero(x) } -> std::convertible_to<bool>;
    { s.support_size(x) } -> std::convertible_to<std::size_t>;
    { x + x } -> std::convertible_to<typename S::value_type>;
    { x - x } -> std::convertible_to<typename S::value_type>;
    { -x } -> std::convertible_to<typename S::value_type>;
    { q * x } -> std::convertible_to<typename S::value_type>;
};

/// Associative unital algebra over the rationals.
template <class S>
concept AlgebraSpace = CoefficientSpace<S> && requires(const S& s, const typename S::value_type& x) {
    { s.one() } -> std::convertible_to<typename S::value_type>;
    { s.mul(x, x) } -> std::convertible_to<typename S::value_type>;
};

template <class T>
class TruncatedSeries {
public:
    using value_type = T;

    TruncatedSeries(std::size_t order, const T& zero) : coeffs_(order + 1, zero) {}
    explicit TruncatedSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) throw Error("series needs at least the constant coefficient");
    }

    [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
    [[nodiscard]] const T& operator[](std::size_t n) const { return coeffs_.at(n); }
    [[nodiscard]] T& operator[](std::size_t n) { return coeffs_.at(n); }
    [[nodiscard]] const std::vector<T>& coeffs() const { return coeffs_; }

    /// Drops every degree above m (m <= order).
    [[nodiscard]] TruncatedSeries truncated(std::size_t m) const
    {
        if (m > order()) throw Error("cannot raise the order of a truncated series");
        return TruncatedSeries(std::vector<T>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(m) + 1));
    }

    /// Coefficientwise image under a linear map.
    template <class F>
    [[nodiscard]] auto map(F&& f) const -> TruncatedSeries<std::decay_t<std::invoke_result_t<F&, const T&>>>
    {
        using U = std::decay_t<std::invoke_result_t<F&, const T&>>;
        std::vector<U> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(f(c));
        return TruncatedSeries<U>(std::move(out));
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o)
    {
        check_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o)
    {
        check_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator-(const TruncatedSeries& a)
    {
        return a.map([](const T& c) -> T { return -c; });
    }
    friend TruncatedSeries operator*(const Rational& q, const TruncatedSeries& a)
    {
        return a.map([&](const T& c) -> T { return q * c; });
    }

private:
    void check_order(const TruncatedSeries& o) const
    {
        if (o.order() != order()) throw Error("series order mismatch");
    }

    std::vector<T> coeffs_;
};

/// Truncated Cauchy product with an arbitrary bilinear coefficient operation.
/// Terms whose degree would exceed the order are never evaluated.
template <class T, class U, class Z, class Op>
auto series_product(const TruncatedSeries<T>& a, const TruncatedSeries<U>& b, const Z& zero, Op&& op)
{
    if (a.order() != b.order()) throw Error("series order mismatch");
    TruncatedSeries<Z> out(a.order(), zero);
    for (std::size_t i = 0; i <= a.order(); ++i)
        for (std::size_t j = 0; i + j <= a.order(); ++j) out[i + j] = out[i + j] + op(a[i], b[j]);
    return out;
}

template <CoefficientSpace S>
TruncatedSeries<typename S::value_type> zero_series(const S& space, std::size_t order)
{
    return TruncatedSeries<typename S::value_type>(order, space.zero());
}

template <AlgebraSpace S>
TruncatedSeries<typename S::value_type> unit_series(const S& space, std::size_t order)
{
    auto out = zero_series(space, order);
    out[0] = space.one();
    return out;
}

/// lambda^k * x as a series of the given order.
template <CoefficientSpace S>
TruncatedSeries<typename S::value_type> monomial(const S& space, std::size_t order, std::size_t k,
                                                 const typename S::value_type& x)
{
    auto out = zero_series(space, order);
    if (k <= order) out[k] = x;
    return out;
}

template <CoefficientSpace S>
bool series_is_zero(const S& space, const TruncatedSeries<typename S::value_type>& s)
{
    for (const auto& c : s.coeffs())
        if (!space.is_zero(c)) return false;
    return true;
}

template <CoefficientSpace S>
bool series_equal(const S& space, const TruncatedSeries<typename S::value_type>& a,
                  const TruncatedSeries<typename S::value_type>& b)
{
    return a.order() == b.order() && series_is_zero(space, a - b);
}

/// Per-degree support sizes of a - b; all zero iff the series agree.
template <CoefficientSpace S>
std::vector<std::size_t> degree_residuals(const S& space, const TruncatedSeries<typename S::value_type>& a,
                                          const TruncatedSeries<typename S::value_type>& b)
{
    std::vector<std::size_t> out;
    const auto diff = a - b;
    for (const auto& c : diff.coeffs()) out.push_back(space.support_size(c));
    return out;
}

/// Lowest degree with a nonzero coefficient, or order + 1 for the zero series.
template <CoefficientSpace S>
std::size_t lowest_degree(const S& space, const TruncatedSeries<typename S::value_type>& s)
{
    for (std::size_t n = 0; n <= s.order(); ++n)
        if (!space.is_zero(s[n])) return n;
    return s.order() + 1;
}

template <AlgebraSpace S>
TruncatedSeries<typename S::value_type> series_mul(const S& space, const TruncatedSeries<typename S::value_type>& a,
                                                   const TruncatedSeries<typename S::value_type>& b)
{
    using T = typename S::value_type;
    return series_product(a, b, space.zero(), [&](const T& x, const T& y) { return space.mul(x, y); });
}

/// sum_{n=0}^{N} s^n / n!, requires s in lambda A[[lambda]].
template <AlgebraSpace S>
TruncatedSeries<typename S::value_type> series_exp(const S& space, const TruncatedSeries<typename S::value_type>& s)
{
    if (!space.is_zero(s[0])) throw NonNilpotentInput("exp of a series with nonzero constant term");
    auto result = unit_series(space, s.order());
    auto term = result;
    for (std::size_t n = 1; n <= s.order(); ++n) {
        term = Rational(1, static_cast<long>(n)) * series_mul(space, term, s);
        result += term;
    }
    return result;
}

/// log(1 + x) = -sum_{n>0} (-1)^n x^n / n, requires constant term equal to the unit.
template <AlgebraSpace S>
TruncatedSeries<typename S::value_type> series_log(const S& space, const TruncatedSeries<typename S::value_type>& s)
{
    if (!space.is_zero(s[0] - space.one())) throw BadConstantTerm("log of a series whose constant term is not 1");
    const auto x = s - unit_series(space, s.order());
    auto result = zero_series(space, s.order());
    auto power = x;
    for (std::size_t n = 1; n <= s.order(); ++n) {
        const Rational c(n % 2 == 1 ? 1 : -1, static_cast<long>(n));
        result += c * power;
        power = series_mul(space, power, x);
    }
    return result;
}

/// BCH(x, y) = log(exp(x) exp(y)) - x - y, evaluated in the ambient algebra.
template <AlgebraSpace S>
TruncatedSeries<typename S::value_type> bch(const S& space, const TruncatedSeries<typename S::value_type>& x,
                                            const TruncatedSeries<typename S::value_type>& y)
{
    if (!space.is_zero(x[0]) || !space.is_zero(y[0]))
        throw NonNilpotentInput("BCH arguments must have zero constant term");
    return series_log(space, series_mul(space, series_exp(space, x), series_exp(space, y))) - x - y;
}

/// The rationals as a one-dimensional algebra; handy for scalar series.
struct ScalarAlgebra {
    using value_type = Rational;
    [[nodiscard]] Rational zero() const { return Rational(0); }
    [[nodiscard]] Rational one() const { return Rational(1); }
    [[nodiscard]] bool is_zero(const Rational& x) const { return x.is_zero(); }
    [[nodiscard]] std::size_t support_size(const Rational& x) const { return x.is_zero() ? 0 : 1; }
    [[nodiscard]] Rational mul(const Rational& a, const Rational& b) const { return a * b; }
};

} // namespace dendrimag
