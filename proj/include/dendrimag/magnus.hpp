#pragma once

// Pre-Lie Magnus and Fer recursions, generic over the pre-Lie structure, and
// their verification against the fundamental dendriform equations.
//
//   Omega' = sum_m B_m/m! L_|>[Omega']^m (lambda a)
//          = sum_m (-1)^m B_m/m! R_<|[Omega']^m (lambda a)
//   U'_0 = lambda a,  U'_{n+1} = sum_{l>0} (-1)^l l/(l+1)! L_|>[U'_n]^l (U'_n)
//
// with X = exp*(Omega') = prod_n exp*(U'_n) solving X = 1 + lambda a < X.

#include <cstddef>
#include <string>
#include <vector>

#include "dendrimag/bernoulli.hpp"
#include "dendrimag/dendriform.hpp"
#include "dendrimag/report.hpp"
#include "dendrimag/series.hpp"

namespace dendrimag {

enum class MagnusVariant { right_lhd, left_rhd };

namespace detail {

// Solves omega = input + sum_{m>=1} coeff(m) * Op[omega]^m(input) degree by
// degree. Op[omega](t) = sum_{i+j} op(omega_i, t_j); each application raises
// the degree, so the degree-n coefficient needs omega below n only.
template <CoefficientSpace S, class Op, class Coeff>
TruncatedSeries<typename S::value_type> graded_fixed_point(const S& space,
                                                           const TruncatedSeries<typename S::value_type>& input,
                                                           Op&& op, Coeff&& coeff)
{
    if (!space.is_zero(input[0])) throw NonNilpotentInput("Magnus input must lie in lambda A[[lambda]]");
    const std::size_t order = input.order();
    auto omega = zero_series(space, order);
    // powers[m] = Op[omega]^m(input), filled one degree at a time
    std::vector<TruncatedSeries<typename S::value_type>> powers(order + 1, zero_series(space, order));
    powers[0] = input;
    for (std::size_t n = 1; n <= order; ++n) {
        auto value = input[n];
        for (std::size_t m = 1; m < n; ++m) {
            auto acc = space.zero();
            for (std::size_t i = 1; i < n; ++i) {
                const auto& w = omega[i];
                const auto& t = powers[m - 1][n - i];
                if (space.is_zero(w) || space.is_zero(t)) continue;
                acc = acc + op(w, t);
            }
            powers[m][n] = acc;
            const Rational c = coeff(m);
            if (!c.is_zero() && !space.is_zero(acc)) value = value + c * acc;
        }
        omega[n] = value;
    }
    return omega;
}

} // namespace detail

/// Omega' from the L_|> form, for an arbitrary input series in lambda A[[lambda]].
template <LeftPreLie P>
TruncatedSeries<typename P::value_type> magnus_left_rhd(const P& p, const TruncatedSeries<typename P::value_type>& input)
{
    using E = typename P::value_type;
    return detail::graded_fixed_point(
        p, input, [&](const E& w, const E& t) { return p.rhd(w, t); },
        [](std::size_t m) { return bernoulli_coefficient(static_cast<unsigned>(m)); });
}

/// Omega' from the R_<| form.
template <RightPreLie P>
TruncatedSeries<typename P::value_type> magnus_right_lhd(const P& p,
                                                         const TruncatedSeries<typename P::value_type>& input)
{
    using E = typename P::value_type;
    return detail::graded_fixed_point(
        p, input, [&](const E& w, const E& t) { return p.lhd(t, w); },
        [](std::size_t m) {
            const Rational c = bernoulli_coefficient(static_cast<unsigned>(m));
            return m % 2 == 0 ? c : -c;
        });
}

/// Omega'(lambda a) truncated at lambda^order.
template <class P>
TruncatedSeries<typename P::value_type> magnus(const P& p, const typename P::value_type& a, std::size_t order,
                                               MagnusVariant variant = MagnusVariant::left_rhd)
{
    const auto input = monomial(p, order, 1, a);
    if (variant == MagnusVariant::left_rhd) {
        if constexpr (LeftPreLie<P>)
            return magnus_left_rhd(p, input);
        else
            throw Error("instance has no left pre-Lie product");
    }
    if constexpr (RightPreLie<P>)
        return magnus_right_lhd(p, input);
    else
        throw Error("instance has no right pre-Lie product");
}

/// One Fer step: sum_{l>0} (-1)^l l/(l+1)! L_|>[u]^l(u).
template <LeftPreLie P>
TruncatedSeries<typename P::value_type> fer_next(const P& p, const TruncatedSeries<typename P::value_type>& u)
{
    using E = typename P::value_type;
    auto out = zero_series(p, u.order());
    auto term = u;
    for (std::size_t l = 1; l <= u.order(); ++l) {
        term = series_product(u, term, p.zero(), [&](const E& x, const E& y) {
            return (p.is_zero(x) || p.is_zero(y)) ? p.zero() : p.rhd(x, y);
        });
        if (series_is_zero(p, term)) break;
        const Rational c = Rational(l % 2 == 0 ? 1 : -1) * Rational(static_cast<long>(l)) / factorial(static_cast<unsigned>(l + 1));
        out += c * term;
    }
    return out;
}

/// floor(log2 order) + 1
inline std::size_t fer_depth(std::size_t order)
{
    std::size_t k = 0;
    while ((std::size_t{2} << k) <= order) ++k;
    return k + 1;
}

/// U'_0, ..., U'_k with k = fer_depth(order); U'_n starts at degree 2^n, so
/// the last one vanishes modulo lambda^(order+1).
template <LeftPreLie P>
std::vector<TruncatedSeries<typename P::value_type>> fer(const P& p, const typename P::value_type& a, std::size_t order)
{
    std::vector<TruncatedSeries<typename P::value_type>> us{monomial(p, order, 1, a)};
    const std::size_t k = fer_depth(order);
    for (std::size_t n = 0; n < k; ++n) us.push_back(fer_next(p, us.back()));
    return us;
}

// ---------------------------------------------------------------------------
// Verification in a dendriform instance

template <Dendriform D>
VerificationReport verify_magnus(const D& d, const typename D::value_type& a, std::size_t order)
{
    VerificationReport rep("magnus");
    PreLieView<D> pl(d);
    UnitalDendriform<D> u(d);
    const auto omega = magnus(pl, a, order, MagnusVariant::left_rhd);
    const auto omega_r = magnus(pl, a, order, MagnusVariant::right_lhd);
    rep.add_degrees("L_rhd and R_lhd recursions agree", degree_residuals(d, omega, omega_r));
    rep.add_flag("lambda^1 coefficient is a", order < 1 || d.is_zero(omega[1] - a));

    const auto lifted = lift_series(u, omega);
    rep.add_degrees("exp*(Omega') = X", degree_residuals(u, series_exp(u, lifted), solve_left(d, a, order)));
    rep.add_degrees("exp*(-Omega') = Y", degree_residuals(u, series_exp(u, -lifted), solve_right(d, a, order)));
    return rep;
}

/// Ordered product exp*(U'_0) * exp*(U'_1) * ... (or reversed, with -U'_n).
template <Dendriform D>
auto fer_product(const D& d, const std::vector<TruncatedSeries<typename D::value_type>>& us, bool reversed)
{
    UnitalDendriform<D> u(d);
    auto prod = unit_series(u, us.front().order());
    if (!reversed) {
        for (const auto& un : us) prod = series_mul(u, prod, series_exp(u, lift_series(u, un)));
    } else {
        for (const auto& un : us) prod = series_mul(u, series_exp(u, -lift_series(u, un)), prod);
    }
    return prod;
}

/// The Fer step written with half-products:
///   (exp*(-U) - 1) < exp*(U) + exp*(-U) > U < exp*(U).
template <Dendriform D>
auto fer_two_term(const D& d, const TruncatedSeries<typename D::value_type>& un)
{
    UnitalDendriform<D> u(d);
    const auto lu = lift_series(u, un);
    const auto e_minus = series_exp(u, -lu);
    const auto e_plus = series_exp(u, lu);
    const auto first = series_prec(u, e_minus - unit_series(u, un.order()), e_plus);
    const auto second = series_prec(u, series_succ(u, e_minus, lu), e_plus);
    return first + second;
}

template <Dendriform D>
VerificationReport verify_fer(const D& d, const typename D::value_type& a, std::size_t order)
{
    VerificationReport rep("fer");
    PreLieView<D> pl(d);
    UnitalDendriform<D> u(d);
    const auto us = fer(pl, a, order);
    rep.add_degrees("ordered product of exp*(U'_n) = X",
                    degree_residuals(u, fer_product(d, us, false), solve_left(d, a, order)));
    rep.add_degrees("reversed product of exp*(-U'_n) = Y",
                    degree_residuals(u, fer_product(d, us, true), solve_right(d, a, order)));
    for (std::size_t n = 0; n + 1 < us.size(); ++n) {
        rep.add_degrees("two-term form of U'_" + std::to_string(n + 1) + " matches the pre-Lie form",
                        degree_residuals(u, fer_two_term(d, us[n]), lift_series(u, us[n + 1])));
    }
    return rep;
}

/// sum_{p+q=n} W^{*p} > W < W^{*q} - W^{*(n+1)} for a series W in lambda A[[lambda]].
template <Dendriform D>
auto power_sum_residual(const D& d, const TruncatedSeries<typename D::value_type>& w, std::size_t n)
{
    UnitalDendriform<D> u(d);
    const auto lw = lift_series(u, w);
    std::vector<TruncatedSeries<Unital<typename D::value_type>>> powers{unit_series(u, w.order())};
    for (std::size_t k = 1; k <= n + 1; ++k) powers.push_back(series_mul(u, powers.back(), lw));
    auto acc = zero_series(u, w.order());
    for (std::size_t p = 0; p <= n; ++p) acc += series_prec(u, series_succ(u, powers[p], lw), powers[n - p]);
    return acc - powers[n + 1];
}

/// int_0^1 (1-s)^q s^p ds by binomial expansion of (1-s)^q.
inline Rational beta_integral_by_expansion(unsigned p, unsigned q)
{
    Rational acc(0);
    for (unsigned k = 0; k <= q; ++k) {
        const Rational term = binomial(q, k) / Rational(static_cast<long>(p + k + 1));
        acc += k % 2 == 0 ? term : -term;
    }
    return acc;
}

} // namespace dendrimag
