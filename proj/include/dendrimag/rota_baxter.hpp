#pragma once

// Rota-Baxter algebras of weight theta,
//   R(a)R(b) = R(R(a)b + aR(b) + theta ab),   R~ := -theta id - R,
// the tridendriform / dendriform / pre-Lie structures they induce, and the
// identity suite built on them (exponential solutions, Fer products,
// Atkinson's factorization, Spitzer's identities and the chi_theta map).
//
// Unit convention on the adjoined dendriform unit: R(1) = 1, R~(1) = -1.

#include <concepts>
#include <cstddef>
#include <string>
#include <vector>

#include "dendrimag/dendriform.hpp"
#include "dendrimag/magnus.hpp"
#include "dendrimag/report.hpp"
#include "dendrimag/sampling.hpp"
#include "dendrimag/series.hpp"

namespace dendrimag {

template <class R>
concept RotaBaxterAlgebra = AlgebraSpace<R> && requires(const R& r, const typename R::value_type& x) {
    { r.apply(x) } -> std::convertible_to<typename R::value_type>;
    { r.weight() } -> std::convertible_to<Rational>;
};

/// An instance that can draw random carrier elements.
template <class R>
concept SampledRotaBaxter = RotaBaxterAlgebra<R> && requires(const R& r, Sampler& s) {
    { r.sample(s) } -> std::convertible_to<typename R::value_type>;
};

template <RotaBaxterAlgebra R>
typename R::value_type rb_tilde(const R& r, const typename R::value_type& x)
{
    return -(r.weight() * x) - r.apply(x);
}

/// R(a)R(b) - R(R(a)b + aR(b) + theta ab)
template <RotaBaxterAlgebra R>
typename R::value_type rb_residual(const R& r, const typename R::value_type& a, const typename R::value_type& b)
{
    const auto ra = r.apply(a), rb = r.apply(b);
    return r.mul(ra, rb) - r.apply(r.mul(ra, b) + r.mul(a, rb) + r.weight() * r.mul(a, b));
}

/// The same algebra with R~ in place of R (again Rota-Baxter of weight theta).
template <RotaBaxterAlgebra R>
class RBTilde : public R {
public:
    explicit RBTilde(R r) : R(std::move(r)) {}
    [[nodiscard]] typename R::value_type apply(const typename R::value_type& x) const
    {
        return rb_tilde(static_cast<const R&>(*this), x);
    }
};

/// a < b = aR(b),  a > b = R(a)b,  a . b = theta ab.
template <RotaBaxterAlgebra R>
class RBTridendriform {
public:
    using value_type = typename R::value_type;
    explicit RBTridendriform(R r) : r_(std::move(r)) {}
    [[nodiscard]] const R& rb() const { return r_; }
    [[nodiscard]] value_type zero() const { return r_.zero(); }
    [[nodiscard]] bool is_zero(const value_type& x) const { return r_.is_zero(x); }
    [[nodiscard]] std::size_t support_size(const value_type& x) const { return r_.support_size(x); }
    [[nodiscard]] value_type lt(const value_type& a, const value_type& b) const { return r_.mul(a, r_.apply(b)); }
    [[nodiscard]] value_type gt(const value_type& a, const value_type& b) const { return r_.mul(r_.apply(a), b); }
    [[nodiscard]] value_type dot(const value_type& a, const value_type& b) const
    {
        return r_.weight() * r_.mul(a, b);
    }

private:
    R r_;
};

/// a < b = aR(b) + theta ab = -aR~(b),  a > b = R(a)b.
template <RotaBaxterAlgebra R>
class RBDendriform {
public:
    using value_type = typename R::value_type;
    explicit RBDendriform(R r) : r_(std::move(r)) {}
    [[nodiscard]] const R& rb() const { return r_; }
    [[nodiscard]] value_type zero() const { return r_.zero(); }
    [[nodiscard]] bool is_zero(const value_type& x) const { return r_.is_zero(x); }
    [[nodiscard]] std::size_t support_size(const value_type& x) const { return r_.support_size(x); }
    [[nodiscard]] value_type prec(const value_type& a, const value_type& b) const
    {
        return r_.mul(a, r_.apply(b)) + r_.weight() * r_.mul(a, b);
    }
    [[nodiscard]] value_type succ(const value_type& a, const value_type& b) const { return r_.mul(r_.apply(a), b); }
    [[nodiscard]] bool commutative() const
    {
        if constexpr (requires { r_.commutative(); })
            return r_.commutative();
        else
            return false;
    }

private:
    R r_;
};

/// [R(a), b] - theta ba, the closed form of the induced left pre-Lie product.
template <RotaBaxterAlgebra R>
typename R::value_type rb_prelie(const R& r, const typename R::value_type& a, const typename R::value_type& b)
{
    const auto ra = r.apply(a);
    return r.mul(ra, b) - r.mul(b, ra) - r.weight() * r.mul(b, a);
}

/// a *_theta b = aR(b) + R(a)b + theta ab
template <RotaBaxterAlgebra R>
typename R::value_type double_product(const R& r, const typename R::value_type& a, const typename R::value_type& b)
{
    return r.mul(a, r.apply(b)) + r.mul(r.apply(a), b) + r.weight() * r.mul(a, b);
}

// ---------------------------------------------------------------------------
// Operators on series and on the unital extension

template <RotaBaxterAlgebra R>
TruncatedSeries<typename R::value_type> rb_apply_series(const R& r, const TruncatedSeries<typename R::value_type>& s)
{
    return s.map([&](const typename R::value_type& x) { return r.apply(x); });
}

template <RotaBaxterAlgebra R>
TruncatedSeries<typename R::value_type> rb_tilde_series(const R& r, const TruncatedSeries<typename R::value_type>& s)
{
    return s.map([&](const typename R::value_type& x) { return rb_tilde(r, x); });
}

/// R on scalar * 1 + x, with R(1) = 1.
template <RotaBaxterAlgebra R>
typename R::value_type rb_apply_unital(const R& r, const Unital<typename R::value_type>& x)
{
    return x.scalar * r.one() + r.apply(x.part);
}

/// R~ on scalar * 1 + x, with R~(1) = -1.
template <RotaBaxterAlgebra R>
typename R::value_type rb_tilde_unital(const R& r, const Unital<typename R::value_type>& x)
{
    return -(x.scalar * r.one()) + rb_tilde(r, x.part);
}

// ---------------------------------------------------------------------------
// Hat equations and chi_theta

enum class HatSide { X, Y };

/// X^ = 1 - lambda R~(a X^)  or  Y^ = 1 - lambda R(Y^ a), solved degree by degree.
template <RotaBaxterAlgebra R>
TruncatedSeries<typename R::value_type> solve_hat(const R& r, const typename R::value_type& a, HatSide side,
                                                  std::size_t order)
{
    auto out = unit_series(r, order);
    for (std::size_t n = 1; n <= order; ++n) {
        out[n] = side == HatSide::X ? -rb_tilde(r, r.mul(a, out[n - 1])) : -r.apply(r.mul(out[n - 1], a));
    }
    return out;
}

/// Y = 1 + lambda R(a Y), the series of iterated operators R(aR(a...R(a))).
template <RotaBaxterAlgebra R>
TruncatedSeries<typename R::value_type> iterated_rb_series(const R& r, const typename R::value_type& a,
                                                           std::size_t order)
{
    auto out = unit_series(r, order);
    for (std::size_t n = 1; n <= order; ++n) out[n] = r.apply(r.mul(a, out[n - 1]));
    return out;
}

enum class ChiVariant { two_sided, one_sided };

/// chi_theta(alpha) from
///   two_sided: chi = alpha + (1/theta) BCH(R chi, R~ chi)
///   one_sided: chi = alpha + (1/theta) BCH(theta alpha, R chi)
/// Each pass fixes one more degree, since BCH terms have degree >= 2.
template <RotaBaxterAlgebra R>
TruncatedSeries<typename R::value_type> chi_theta(const R& r, const TruncatedSeries<typename R::value_type>& alpha,
                                                  ChiVariant variant = ChiVariant::two_sided)
{
    const Rational theta = r.weight();
    if (theta.is_zero()) throw ZeroWeight("chi_theta needs a nonzero weight; use the Magnus recursion at weight 0");
    if (!r.is_zero(alpha[0])) throw NonNilpotentInput("chi_theta input must lie in lambda A[[lambda]]");
    const Rational inv = theta.inverse();
    auto chi = alpha;
    for (std::size_t pass = 1; pass < alpha.order(); ++pass) {
        const auto rchi = rb_apply_series(r, chi);
        const auto correction = variant == ChiVariant::two_sided ? bch(r, rchi, rb_tilde_series(r, chi))
                                                                 : bch(r, theta * alpha, rchi);
        chi = alpha + inv * correction;
    }
    return chi;
}

/// -log(1 - theta lambda a)/theta, the input of chi_theta matching Omega'_theta(lambda a).
template <RotaBaxterAlgebra R>
TruncatedSeries<typename R::value_type> spitzer_alpha(const R& r, const typename R::value_type& a, std::size_t order)
{
    const Rational theta = r.weight();
    if (theta.is_zero()) return monomial(r, order, 1, a);
    const auto one_minus = unit_series(r, order) - monomial(r, order, 1, theta * a);
    return -(theta.inverse() * series_log(r, one_minus));
}

/// (1 - exp(-theta alpha))/theta, the inverse of spitzer_alpha: chi(alpha) = Omega'_theta(spitzer_input(alpha)).
/// With `literal_sign` the exponent is +theta alpha instead, which does not invert spitzer_alpha.
template <RotaBaxterAlgebra R>
TruncatedSeries<typename R::value_type> spitzer_input(const R& r, const TruncatedSeries<typename R::value_type>& alpha,
                                                      bool literal_sign = false)
{
    const Rational theta = r.weight();
    if (theta.is_zero()) return literal_sign ? -alpha : alpha;
    const Rational e = literal_sign ? theta : -theta;
    return theta.inverse() * (unit_series(r, alpha.order()) - series_exp(r, e * alpha));
}

// ---------------------------------------------------------------------------
// Identity suites

template <RotaBaxterAlgebra R>
auto rb_magnus(const R& r, const typename R::value_type& a, std::size_t order)
{
    RBDendriform<R> d(r);
    PreLieView<RBDendriform<R>> pl(d);
    return magnus(pl, a, order);
}

/// Sampled identities of one instance: the Rota-Baxter relation for R and R~,
/// the induced tridendriform, dendriform and pre-Lie structures, the double
/// product homomorphisms and the unit convention.
template <SampledRotaBaxter R>
VerificationReport check_rb_instance(const R& r, std::size_t samples, std::uint64_t seed, const std::string& title)
{
    VerificationReport rep(title);
    Sampler s(seed);
    RBTridendriform<R> t(r);
    RBDendriform<R> d(r);
    PreLieView<RBDendriform<R>> pl(d);
    RBTilde<R> tilde(r);
    UnitalDendriform<RBDendriform<R>> u(d);

    std::size_t f_rb = 0, f_tilde = 0, f_tri = 0, f_dend = 0, f_assoc = 0, f_prec = 0, f_rhd = 0, f_prelie = 0,
                f_hom = 0, f_unit = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const auto a = r.sample(s), b = r.sample(s), c = r.sample(s);
        f_rb += !r.is_zero(rb_residual(r, a, b));
        f_tilde += !r.is_zero(rb_residual(tilde, a, b));
        for (const auto& x : tridendriform_axiom_residuals(t, a, b, c))
            if (!r.is_zero(x)) {
                ++f_tri;
                break;
            }
        for (const auto& x : dendriform_axiom_residuals(d, a, b, c))
            if (!r.is_zero(x)) {
                ++f_dend;
                break;
            }
        f_assoc += !r.is_zero(tridend_star(t, tridend_star(t, a, b), c) - tridend_star(t, a, tridend_star(t, b, c)));
        f_prec += !r.is_zero(d.prec(a, b) + r.mul(a, rb_tilde(r, b)));
        f_rhd += !r.is_zero(pl.rhd(a, b) - rb_prelie(r, a, b));
        f_prelie += !r.is_zero(left_prelie_residual(pl, a, b, c));
        const auto ab = double_product(r, a, b);
        f_hom += !r.is_zero(r.apply(ab) - r.mul(r.apply(a), r.apply(b))) ||
                 !r.is_zero(rb_tilde(r, ab) + r.mul(rb_tilde(r, a), rb_tilde(r, b)));
        // 1 > x = R(1) x and x < 1 = -x R~(1)
        f_unit += !r.is_zero(u.succ(u.one(), u.lift(a)).part - r.mul(rb_apply_unital(r, u.one()), a)) ||
                  !r.is_zero(u.prec(u.lift(a), u.one()).part + r.mul(a, rb_tilde_unital(r, u.one())));
    }
    rep.add_samples("Rota-Baxter relation for R", samples, f_rb);
    rep.add_samples("Rota-Baxter relation for R~ = -theta id - R", samples, f_tilde);
    rep.add_samples("seven tridendriform axioms", samples, f_tri);
    rep.add_samples("induced dendriform axioms", samples, f_dend);
    rep.add_samples("associativity of the tridendriform sum", samples, f_assoc);
    rep.add_samples("a < b = -a R~(b)", samples, f_prec);
    rep.add_samples("a |> b = [R(a), b] - theta ba", samples, f_rhd);
    rep.add_samples("left pre-Lie identity", samples, f_prelie);
    rep.add_samples("R and -R~ are homomorphisms of the double product", samples, f_hom);
    rep.add_samples("unit convention R(1) = 1, R~(1) = -1", samples, f_unit);
    return rep;
}

/// Exponential and product solutions of the hat equations, and R(exp*(lambda a)) = exp(lambda R(a)).
template <RotaBaxterAlgebra R>
VerificationReport check_rb_solutions(const R& r, const typename R::value_type& a, std::size_t order,
                                      const std::string& title)
{
    VerificationReport rep(title);
    RBDendriform<R> d(r);
    UnitalDendriform<RBDendriform<R>> u(d);
    PreLieView<RBDendriform<R>> pl(d);
    rep.merge(verify_magnus(d, a, order));

    const auto omega = magnus(pl, a, order);
    const auto x_hat = solve_hat(r, a, HatSide::X, order);
    const auto y_hat = solve_hat(r, a, HatSide::Y, order);
    rep.add_degrees("X^ = exp(-R~ Omega')", degree_residuals(r, series_exp(r, -rb_tilde_series(r, omega)), x_hat));
    rep.add_degrees("Y^ = exp(-R Omega')", degree_residuals(r, series_exp(r, -rb_apply_series(r, omega)), y_hat));

    // X^ and Y^ are the images of the dendriform solutions
    const auto x = solve_left(d, a, order);
    const auto y = solve_right(d, a, order);
    rep.add_degrees("X^ = -R~(X)", degree_residuals(r, x.map([&](const auto& v) { return -rb_tilde_unital(r, v); }), x_hat));
    rep.add_degrees("Y^ = R(Y)", degree_residuals(r, y.map([&](const auto& v) { return rb_apply_unital(r, v); }), y_hat));

    const auto us = fer(pl, a, order);
    auto fwd = unit_series(r, order), bwd = unit_series(r, order);
    for (const auto& un : us) {
        fwd = series_mul(r, fwd, series_exp(r, -rb_tilde_series(r, un)));
        bwd = series_mul(r, series_exp(r, -rb_apply_series(r, un)), bwd);
    }
    rep.add_degrees("ordered product of exp(-R~ U'_n) = X^", degree_residuals(r, fwd, x_hat));
    rep.add_degrees("reversed product of exp(-R U'_n) = Y^", degree_residuals(r, bwd, y_hat));

    const auto ex = series_exp(u, monomial(u, order, 1, u.lift(a)));
    rep.add_degrees("R(exp*(lambda a)) = exp(lambda R(a))",
                    degree_residuals(r, ex.map([&](const auto& v) { return rb_apply_unital(r, v); }),
                                     series_exp(r, monomial(r, order, 1, r.apply(a)))));
    rep.add_degrees("-R~(exp*(lambda a)) = exp(-lambda R~(a))",
                    degree_residuals(r, ex.map([&](const auto& v) { return -rb_tilde_unital(r, v); }),
                                     series_exp(r, monomial(r, order, 1, -rb_tilde(r, a)))));
    return rep;
}

/// Y^ (1 - theta lambda a) X^ = 1  and  1 - theta lambda a = exp(R Omega') exp(R~ Omega').
template <RotaBaxterAlgebra R>
VerificationReport atkinson_check(const R& r, const typename R::value_type& a, std::size_t order,
                                  const std::string& title = "atkinson")
{
    VerificationReport rep(title);
    const auto one = unit_series(r, order);
    const auto middle = one - monomial(r, order, 1, r.weight() * a);
    const auto x_hat = solve_hat(r, a, HatSide::X, order);
    const auto y_hat = solve_hat(r, a, HatSide::Y, order);
    rep.add_degrees("Y^ (1 - theta lambda a) X^ = 1",
                    degree_residuals(r, series_mul(r, series_mul(r, y_hat, middle), x_hat), one));
    const auto omega = rb_magnus(r, a, order);
    rep.add_degrees("1 - theta lambda a = exp(R Omega') exp(R~ Omega')",
                    degree_residuals(r, series_mul(r, series_exp(r, rb_apply_series(r, omega)),
                                                   series_exp(r, rb_tilde_series(r, omega))),
                                     middle));
    return rep;
}

/// Commutative instances: sum_n lambda^n R(aR(a...R(a))) = exp(R(log(1 + theta lambda a)/theta)),
/// read as exp(lambda R(a)) at weight 0.
template <RotaBaxterAlgebra R>
VerificationReport spitzer_classical_check(const R& r, const typename R::value_type& a, std::size_t order,
                                           const std::string& title = "spitzer")
{
    VerificationReport rep(title);
    const Rational theta = r.weight();
    auto beta = monomial(r, order, 1, a);
    if (!theta.is_zero())
        beta = theta.inverse() * series_log(r, unit_series(r, order) + monomial(r, order, 1, theta * a));
    rep.add_degrees(theta.is_zero() ? "Y = exp(lambda R(a))" : "Y = exp(R(log(1 + theta lambda a)/theta))",
                    degree_residuals(r, iterated_rb_series(r, a, order), series_exp(r, rb_apply_series(r, beta))));
    return rep;
}

/// chi_theta and the non-commutative Spitzer identity:
///   Omega'_theta(lambda a) = chi(-log(1 - theta lambda a)/theta),
///   chi(alpha) = Omega'_theta((1 - exp(theta alpha))/theta) for the given alphas,
///   exp(-theta alpha) = exp(R chi) exp(R~ chi),
///   1 + lambda R(aY) = Y = exp(R chi(log(1 + theta lambda a)/theta)).
template <RotaBaxterAlgebra R>
VerificationReport spitzer_noncommutative_check(const R& r, const typename R::value_type& a, std::size_t order,
                                                const std::vector<TruncatedSeries<typename R::value_type>>& alphas,
                                                const std::string& title = "chi")
{
    VerificationReport rep(title);
    const Rational theta = r.weight();
    RBDendriform<R> d(r);
    PreLieView<RBDendriform<R>> pl(d);

    const auto alpha = spitzer_alpha(r, a, order);
    const auto chi = chi_theta(r, alpha, ChiVariant::two_sided);
    rep.add_degrees("two-sided and one-sided chi recursions agree",
                    degree_residuals(r, chi, chi_theta(r, alpha, ChiVariant::one_sided)));
    rep.add_degrees("exp(-theta alpha) = exp(R chi) exp(R~ chi)",
                    degree_residuals(r, series_exp(r, -(theta * alpha)),
                                     series_mul(r, series_exp(r, rb_apply_series(r, chi)),
                                                series_exp(r, rb_tilde_series(r, chi)))));
    rep.add_degrees("Omega'_theta(lambda a) = chi(-log(1 - theta lambda a)/theta)",
                    degree_residuals(r, magnus(pl, a, order), chi));
    rep.add_degrees("Y^ = exp(-R chi(alpha))",
                    degree_residuals(r, solve_hat(r, a, HatSide::Y, order),
                                     series_exp(r, -rb_apply_series(r, chi))));

    const auto beta = theta.inverse() * series_log(r, unit_series(r, order) + monomial(r, order, 1, theta * a));
    rep.add_degrees("1 + lambda R(aY) = exp(R chi(log(1 + theta lambda a)/theta))",
                    degree_residuals(r, iterated_rb_series(r, a, order),
                                     series_exp(r, rb_apply_series(r, chi_theta(r, beta)))));

    std::vector<std::size_t> worst(order + 1, 0);
    bool literal_holds = true;
    for (const auto& al : alphas) {
        const auto chi_al = chi_theta(r, al);
        const auto res = degree_residuals(r, chi_al, magnus_left_rhd(pl, spitzer_input(r, al)));
        for (std::size_t n = 0; n < res.size(); ++n) worst[n] = std::max(worst[n], res[n]);
        literal_holds = literal_holds && series_equal(r, chi_al, magnus_left_rhd(pl, spitzer_input(r, al, true)));
    }
    rep.add_degrees("chi(alpha) = Omega'_theta((1 - exp(-theta alpha))/theta) on " + std::to_string(alphas.size()) +
                        " random alphas",
                    worst);
    rep.add_info("sign variant (1 - exp(+theta alpha))/theta", literal_holds,
                 literal_holds ? "also holds" : "does not hold; already differs at lambda^1 (gives -alpha)");
    return rep;
}

/// Weight 0: the pre-Lie recursion against the classical one written with
/// ad_{R(Omega')}, and Psi = exp(R Omega') solving Psi = 1 + lambda R(a Psi).
template <RotaBaxterAlgebra R>
VerificationReport weight_zero_bridge_check(const R& r, const typename R::value_type& a, std::size_t order,
                                            const std::string& title = "weight 0")
{
    using E = typename R::value_type;
    VerificationReport rep(title);
    if (!r.weight().is_zero()) throw Error("weight_zero_bridge_check needs a weight-0 instance");
    const auto classical = detail::graded_fixed_point(
        r, monomial(r, order, 1, a),
        [&](const E& w, const E& t) {
            const auto rw = r.apply(w);
            return r.mul(rw, t) - r.mul(t, rw);
        },
        [](std::size_t m) { return bernoulli_coefficient(static_cast<unsigned>(m)); });
    const auto omega = rb_magnus(r, a, order);
    rep.add_degrees("pre-Lie recursion = classical recursion with ad_{R(Omega')}", degree_residuals(r, omega, classical));
    const auto psi = series_exp(r, rb_apply_series(r, omega));
    const auto rhs = unit_series(r, order) +
                     rb_apply_series(r, series_mul(r, monomial(r, order, 1, a), psi));
    rep.add_degrees("exp(R Omega') solves Psi = 1 + lambda R(a Psi)", degree_residuals(r, psi, rhs));
    return rep;
}

} // namespace dendrimag
