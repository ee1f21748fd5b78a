#pragma once

// Three exact Rota-Baxter instances:
//   TriangularRB  strictly upper triangular projection on n x n matrices
//                 (weight -1), optionally rescaled by mu (weight -mu);
//   GridRB        Riemann-type summation on a uniform grid of spacing h;
//   PolyIntegrationRB  R(p)(t) = int_0^t p(s) ds on matrix polynomials (weight 0).
// Plus the grid finite difference and the polynomial integration helpers.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "dendrimag/errors.hpp"
#include "dendrimag/matrix.hpp"
#include "dendrimag/rational.hpp"
#include "dendrimag/report.hpp"
#include "dendrimag/sampling.hpp"

namespace dendrimag {

// ---------------------------------------------------------------------------
// Triangular projection

/// Strictly upper triangular part. Its image and the complementary lower
/// triangular matrices (diagonal included) are both subalgebras.
inline MatrixRat triangular_project(const MatrixRat& m)
{
    MatrixRat out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = i + 1; j < m.dim(); ++j) out(i, j) = m(i, j);
    return out;
}

class TriangularRB : public MatrixAlgebra {
public:
    explicit TriangularRB(std::size_t n, Rational mu = Rational(1)) : MatrixAlgebra(n), mu_(std::move(mu)) {}

    /// mu P with mu = -theta, which has weight theta.
    static TriangularRB with_weight(std::size_t n, const Rational& theta)
    {
        if (theta.is_zero()) throw ZeroWeight("a rescaled projection cannot have weight 0");
        return TriangularRB(n, -theta);
    }

    [[nodiscard]] MatrixRat apply(const MatrixRat& m) const { return mu_ * triangular_project(m); }
    [[nodiscard]] Rational weight() const { return -mu_; }
    [[nodiscard]] MatrixRat sample(Sampler& s) const { return s.matrix(dim()); }

private:
    Rational mu_;
};

// ---------------------------------------------------------------------------
// Grid sequences

/// Values f(h), f(2h), ..., f(Mh); reads outside this window return 0.
struct GridSeq {
    std::vector<Rational> values;

    GridSeq() = default;
    explicit GridSeq(std::size_t m) : values(m) {}
    explicit GridSeq(std::vector<Rational> v) : values(std::move(v)) {}

    [[nodiscard]] std::size_t size() const { return values.size(); }
    /// f(mh) for m >= 1; zero outside 1..M.
    [[nodiscard]] Rational at(long m) const
    {
        if (m < 1 || m > static_cast<long>(values.size())) return Rational(0);
        return values[static_cast<std::size_t>(m - 1)];
    }
    [[nodiscard]] bool is_zero() const
    {
        return std::all_of(values.begin(), values.end(), [](const Rational& r) { return r.is_zero(); });
    }
    /// Drops trailing zeros (sequences are finitely supported).
    [[nodiscard]] GridSeq trimmed() const
    {
        auto v = values;
        while (!v.empty() && v.back().is_zero()) v.pop_back();
        return GridSeq(std::move(v));
    }

    friend GridSeq operator+(const GridSeq& a, const GridSeq& b) { return zip(a, b, [](const auto& x, const auto& y) { return x + y; }); }
    friend GridSeq operator-(const GridSeq& a, const GridSeq& b) { return zip(a, b, [](const auto& x, const auto& y) { return x - y; }); }
    friend GridSeq operator-(GridSeq a)
    {
        for (auto& v : a.values) v = -v;
        return a;
    }
    friend GridSeq operator*(const Rational& q, GridSeq a)
    {
        for (auto& v : a.values) v *= q;
        return a;
    }
    friend bool operator==(const GridSeq& a, const GridSeq& b) { return a.trimmed().values == b.trimmed().values; }

    /// Pointwise product.
    friend GridSeq pointwise(const GridSeq& a, const GridSeq& b)
    {
        return zip(a, b, [](const auto& x, const auto& y) { return x * y; });
    }

private:
    template <class F>
    static GridSeq zip(const GridSeq& a, const GridSeq& b, F&& f)
    {
        const std::size_t n = std::max(a.size(), b.size());
        GridSeq out(n);
        for (std::size_t i = 0; i < n; ++i)
            out.values[i] = f(a.at(static_cast<long>(i) + 1), b.at(static_cast<long>(i) + 1));
        return out;
    }
};

enum class GridSum {
    inclusive,  ///< R_h(f)(mh) = sum_{n=1}^{m} h f(nh), weight -h
    strict,     ///< R'_h(f)(mh) = sum_{n=1}^{m-1} h f(nh), weight h
    forward     ///< S(f)(mh) = sum_{n>=1} h f((m+n)h), weight h
};

inline GridSeq grid_sum(const GridSeq& f, const Rational& h, GridSum which)
{
    const std::size_t m = f.size();
    GridSeq out(m);
    Rational acc(0);
    if (which == GridSum::forward) {
        for (std::size_t i = m; i-- > 0;) {
            out.values[i] = acc;
            acc += h * f.values[i];
        }
        return out;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (which == GridSum::strict) out.values[i] = acc;
        acc += h * f.values[i];
        if (which == GridSum::inclusive) out.values[i] = acc;
    }
    return out;
}

/// (df)(x) = (f(x - h) - f(x))/h on the window 1..M+1 (f vanishes outside 1..M).
inline GridSeq finite_difference(const GridSeq& f, const Rational& h)
{
    GridSeq out(f.size() + 1);
    const Rational inv = h.inverse();
    for (std::size_t i = 0; i < out.size(); ++i) {
        const long x = static_cast<long>(i) + 1;
        out.values[i] = inv * (f.at(x - 1) - f.at(x));
    }
    return out;
}

/// Grid sequences of fixed length M with pointwise product and one of the summation operators.
class GridRB {
public:
    using value_type = GridSeq;
    GridRB(std::size_t m, Rational h, GridSum which) : m_(m), h_(std::move(h)), which_(which)
    {
        if (m_ == 0) throw Error("grid needs at least one point");
        if (h_.sign() <= 0) throw Error("grid spacing must be positive");
    }

    [[nodiscard]] std::size_t points() const { return m_; }
    [[nodiscard]] const Rational& spacing() const { return h_; }
    [[nodiscard]] GridSum kind() const { return which_; }

    [[nodiscard]] GridSeq zero() const { return GridSeq(m_); }
    [[nodiscard]] GridSeq one() const { return GridSeq(std::vector<Rational>(m_, Rational(1))); }
    [[nodiscard]] bool is_zero(const GridSeq& f) const { return f.is_zero(); }
    [[nodiscard]] std::size_t support_size(const GridSeq& f) const
    {
        return static_cast<std::size_t>(
            std::count_if(f.values.begin(), f.values.end(), [](const Rational& r) { return !r.is_zero(); }));
    }
    [[nodiscard]] GridSeq mul(const GridSeq& a, const GridSeq& b) const { return pointwise(a, b); }
    [[nodiscard]] GridSeq apply(const GridSeq& f) const { return grid_sum(f, h_, which_); }
    [[nodiscard]] Rational weight() const { return which_ == GridSum::inclusive ? -h_ : h_; }
    [[nodiscard]] bool commutative() const { return true; }
    [[nodiscard]] GridSeq sample(Sampler& s) const
    {
        GridSeq f(m_);
        for (auto& v : f.values) v = s.rational();
        return f;
    }

private:
    std::size_t m_;
    Rational h_;
    GridSum which_;
};

/// d(fg) = d(f)g + f d(g) + h d(f)d(g) and S(df) = f on `samples` random sequences.
inline VerificationReport grid_operator_check(const Rational& h, std::size_t length, std::size_t samples,
                                              std::uint64_t seed)
{
    VerificationReport rep("grid operators");
    Sampler s(seed);
    std::size_t f_skew = 0, f_inv = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        GridSeq f(length), g(length);
        for (auto& v : f.values) v = s.rational();
        for (auto& v : g.values) v = s.rational();
        const auto df = finite_difference(f, h), dg = finite_difference(g, h);
        const auto lhs = finite_difference(pointwise(f, g), h);
        const auto rhs = pointwise(df, g) + pointwise(f, dg) + h * pointwise(df, dg);
        f_skew += !(lhs == rhs);
        f_inv += !(grid_sum(df, h, GridSum::forward) == f);
    }
    rep.add_samples("skewderivation rule d(fg) = d(f)g + f d(g) + h d(f) d(g)", samples, f_skew);
    rep.add_samples("S(d f) = f", samples, f_inv);
    return rep;
}

// ---------------------------------------------------------------------------
// Matrix polynomials and integration

/// A(t) = sum_j c_j t^j with n x n rational matrix coefficients; no trailing zero coefficients.
class MatPoly {
public:
    MatPoly() = default;
    explicit MatPoly(std::size_t n) : n_(n) {}
    MatPoly(std::size_t n, std::vector<MatrixRat> coeffs) : n_(n), c_(std::move(coeffs))
    {
        for (const auto& m : c_)
            if (m.dim() != n_) throw DimensionMismatch("polynomial coefficient has the wrong dimension");
        normalize();
    }
    /// Scalar polynomial from its coefficients.
    static MatPoly scalar(std::vector<Rational> coeffs)
    {
        std::vector<MatrixRat> c;
        for (auto& q : coeffs) c.push_back(MatrixRat{{q}});
        return MatPoly(1, std::move(c));
    }
    static MatPoly constant(const MatrixRat& m) { return MatPoly(m.dim(), {m}); }

    [[nodiscard]] std::size_t dim() const { return n_; }
    [[nodiscard]] const std::vector<MatrixRat>& coeffs() const { return c_; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    /// Degree of the polynomial; -1 for zero.
    [[nodiscard]] long degree() const { return static_cast<long>(c_.size()) - 1; }
    [[nodiscard]] MatrixRat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : MatrixRat(n_); }
    [[nodiscard]] std::size_t nonzeros() const
    {
        std::size_t n = 0;
        for (const auto& m : c_) n += m.nonzeros();
        return n;
    }

    friend MatPoly operator+(const MatPoly& a, const MatPoly& b) { return combine(a, b, Rational(1)); }
    friend MatPoly operator-(const MatPoly& a, const MatPoly& b) { return combine(a, b, Rational(-1)); }
    friend MatPoly operator-(MatPoly a)
    {
        for (auto& m : a.c_) m = -m;
        return a;
    }
    friend MatPoly operator*(const Rational& q, MatPoly a)
    {
        for (auto& m : a.c_) m = q * m;
        a.normalize();
        return a;
    }
    friend MatPoly operator*(const MatPoly& a, const MatPoly& b)
    {
        check(a, b);
        MatPoly out(a.n_);
        if (a.is_zero() || b.is_zero()) return out;
        out.c_.assign(a.c_.size() + b.c_.size() - 1, MatrixRat(a.n_));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
        out.normalize();
        return out;
    }
    friend bool operator==(const MatPoly& a, const MatPoly& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

private:
    static void check(const MatPoly& a, const MatPoly& b)
    {
        if (a.n_ != b.n_) throw DimensionMismatch("matrix polynomial dimensions differ");
    }
    static MatPoly combine(const MatPoly& a, const MatPoly& b, const Rational& sign)
    {
        check(a, b);
        MatPoly out(a.n_);
        out.c_.resize(std::max(a.c_.size(), b.c_.size()), MatrixRat(a.n_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out.c_[i] += sign * b.c_[i];
        out.normalize();
        return out;
    }
    void normalize()
    {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::size_t n_ = 0;
    std::vector<MatrixRat> c_;
};

/// int_0^t p(s) ds
inline MatPoly poly_integrate(const MatPoly& p)
{
    if (p.is_zero()) return p;
    std::vector<MatrixRat> c{MatrixRat(p.dim())};
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
        c.push_back(Rational(1, static_cast<long>(k) + 1) * p.coeffs()[k]);
    return MatPoly(p.dim(), std::move(c));
}

class PolyIntegrationRB {
public:
    using value_type = MatPoly;
    explicit PolyIntegrationRB(std::size_t n, std::size_t sample_degree = 2) : n_(n), sample_degree_(sample_degree) {}

    [[nodiscard]] std::size_t dim() const { return n_; }
    [[nodiscard]] MatPoly zero() const { return MatPoly(n_); }
    [[nodiscard]] MatPoly one() const { return MatPoly::constant(MatrixRat::identity(n_)); }
    [[nodiscard]] bool is_zero(const MatPoly& p) const { return p.is_zero(); }
    [[nodiscard]] std::size_t support_size(const MatPoly& p) const { return p.nonzeros(); }
    [[nodiscard]] MatPoly mul(const MatPoly& a, const MatPoly& b) const { return a * b; }
    [[nodiscard]] MatPoly apply(const MatPoly& p) const { return poly_integrate(p); }
    [[nodiscard]] Rational weight() const { return Rational(0); }
    [[nodiscard]] bool commutative() const { return n_ == 1; }
    [[nodiscard]] MatPoly sample(Sampler& s) const
    {
        std::vector<MatrixRat> c;
        for (std::size_t k = 0; k <= sample_degree_; ++k) c.push_back(s.matrix(n_, 2));
        return MatPoly(n_, std::move(c));
    }

private:
    std::size_t n_;
    std::size_t sample_degree_;
};

/// I(a)^n - n! I(a I(a ... I(a))) for n = 1..max_n (scalar polynomial a).
inline VerificationReport ibp_power_check(const MatPoly& a, std::size_t max_n)
{
    if (a.dim() != 1) throw DimensionMismatch("the power identity is stated for scalar polynomials");
    VerificationReport rep("integration by parts");
    std::vector<std::size_t> residuals;
    const MatPoly ia = poly_integrate(a);
    MatPoly power = MatPoly::constant(MatrixRat::identity(1));
    MatPoly nested = MatPoly::constant(MatrixRat::identity(1));
    for (std::size_t n = 1; n <= max_n; ++n) {
        power = power * ia;
        nested = poly_integrate(a * nested);
        residuals.push_back((power - factorial(static_cast<unsigned>(n)) * nested).nonzeros());
    }
    rep.add_degrees("I(a)^n = n! I(a I(a ... I(a)))", residuals);
    return rep;
}

} // namespace dendrimag
