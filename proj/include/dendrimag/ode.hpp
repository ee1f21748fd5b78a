#pragma once

// Floating-point Magnus and Fer integrators for Phi' = A(t) Phi, Phi(0) = 1,
// with A a polynomial matrix.
//
// Each step shifts A to the local variable s in [0, h] and runs the generic
// pre-Lie recursions from magnus.hpp in the weight-zero Rota-Baxter algebra of
// polynomial matrices: R = integral from 0, w |> t = [R(w), t]. Integrals are
// exact, so the only approximations are the grade truncation and rounding.
//
// Grade vs step size: a grade-d term of Omega' integrates to O(h^d). The
// grade-2 term is a commutator and is O(h^3), so grade <= 1 leaves a local
// error O(h^3) (global order 2) and grade <= 3 leaves O(h^5) (global order 4).
// Fer works the same way: U'_1 starts at grade 2, and U'_2 at grade 4.

#include <Eigen/Dense>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "dendrimag/errors.hpp"
#include "dendrimag/magnus.hpp"
#include "dendrimag/rational.hpp"

namespace dendrimag {

using FloatMatrix = Eigen::MatrixXd;

inline void require_finite(const FloatMatrix& m, const char* what)
{
    if (!m.allFinite()) throw NonFinite(std::string(what) + ": non-finite entry");
}

/// sum_j A_j t^j with square FloatMatrix coefficients, no trailing zero coefficients.
class FloatMatrixPoly {
public:
    explicit FloatMatrixPoly(std::size_t dim = 0) : dim_(dim) {}
    FloatMatrixPoly(std::size_t dim, std::vector<FloatMatrix> coeffs) : dim_(dim), coeffs_(std::move(coeffs))
    {
        for (const auto& c : coeffs_)
            if (static_cast<std::size_t>(c.rows()) != dim_ || static_cast<std::size_t>(c.cols()) != dim_)
                throw DimensionMismatch("polynomial coefficient has wrong shape");
        normalize();
    }
    static FloatMatrixPoly constant(const FloatMatrix& m)
    {
        return FloatMatrixPoly(static_cast<std::size_t>(m.rows()), {m});
    }

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const std::vector<FloatMatrix>& coeffs() const { return coeffs_; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial
    [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    [[nodiscard]] FloatMatrix coeff(std::size_t j) const
    {
        return j < coeffs_.size() ? coeffs_[j] : FloatMatrix::Zero(dim_, dim_);
    }

    [[nodiscard]] FloatMatrix operator()(double t) const
    {
        FloatMatrix acc = FloatMatrix::Zero(dim_, dim_);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    /// A(t0 + s) as a polynomial in s.
    [[nodiscard]] FloatMatrixPoly shifted(double t0) const
    {
        std::vector<FloatMatrix> out(coeffs_.size(), FloatMatrix::Zero(dim_, dim_));
        // Horner in the shifted variable: p(s) = (...(A_d (s + t0) + A_{d-1})(s + t0) + ...)
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            for (std::size_t k = out.size() - 1; k > 0; --k) out[k] = out[k - 1] + t0 * out[k];
            out[0] = t0 * out[0] + *it;
        }
        return FloatMatrixPoly(dim_, std::move(out));
    }

    /// integral from 0 to t
    [[nodiscard]] FloatMatrixPoly integral() const
    {
        std::vector<FloatMatrix> out{FloatMatrix::Zero(dim_, dim_)};
        for (std::size_t j = 0; j < coeffs_.size(); ++j) out.push_back(coeffs_[j] / static_cast<double>(j + 1));
        return FloatMatrixPoly(dim_, std::move(out));
    }

    friend FloatMatrixPoly operator+(const FloatMatrixPoly& a, const FloatMatrixPoly& b)
    {
        check(a, b);
        std::vector<FloatMatrix> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = a.coeff(j) + b.coeff(j);
        return FloatMatrixPoly(a.dim_, std::move(out));
    }
    friend FloatMatrixPoly operator-(const FloatMatrixPoly& a) { return -1.0 * a; }
    friend FloatMatrixPoly operator-(const FloatMatrixPoly& a, const FloatMatrixPoly& b) { return a + (-b); }
    friend FloatMatrixPoly operator*(double c, const FloatMatrixPoly& a)
    {
        std::vector<FloatMatrix> out;
        for (const auto& m : a.coeffs_) out.push_back(c * m);
        return FloatMatrixPoly(a.dim_, std::move(out));
    }
    friend FloatMatrixPoly operator*(const Rational& c, const FloatMatrixPoly& a) { return c.to_double() * a; }
    friend FloatMatrixPoly operator*(const FloatMatrixPoly& a, const FloatMatrixPoly& b)
    {
        check(a, b);
        if (a.is_zero() || b.is_zero()) return FloatMatrixPoly(a.dim_);
        std::vector<FloatMatrix> out(a.coeffs_.size() + b.coeffs_.size() - 1, FloatMatrix::Zero(a.dim_, a.dim_));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return FloatMatrixPoly(a.dim_, std::move(out));
    }

private:
    static void check(const FloatMatrixPoly& a, const FloatMatrixPoly& b)
    {
        if (a.dim_ != b.dim_) throw DimensionMismatch("polynomial dimensions differ");
    }
    void normalize()
    {
        while (!coeffs_.empty() && (coeffs_.back().array() == 0.0).all()) coeffs_.pop_back();
    }

    std::size_t dim_;
    std::vector<FloatMatrix> coeffs_;
};

/// Weight-zero pre-Lie algebra of polynomial matrices: w |> t = [int w, t].
class FloatPolyPreLie {
public:
    using value_type = FloatMatrixPoly;
    explicit FloatPolyPreLie(std::size_t dim) : dim_(dim) {}
    [[nodiscard]] FloatMatrixPoly zero() const { return FloatMatrixPoly(dim_); }
    [[nodiscard]] bool is_zero(const FloatMatrixPoly& x) const { return x.is_zero(); }
    [[nodiscard]] std::size_t support_size(const FloatMatrixPoly& x) const { return x.coeffs().size(); }
    [[nodiscard]] FloatMatrixPoly rhd(const FloatMatrixPoly& w, const FloatMatrixPoly& t) const
    {
        const auto rw = w.integral();
        return rw * t - t * rw;
    }

private:
    std::size_t dim_;
};

// ---------------------------------------------------------------------------
// matrix exponential: scaling and squaring with the [13/13] Pade approximant

inline FloatMatrix matrix_exp(const FloatMatrix& a)
{
    if (a.rows() != a.cols()) throw DimensionMismatch("matrix_exp needs a square matrix");
    require_finite(a, "matrix_exp input");
    const Eigen::Index n = a.rows();
    if (n == 0) return a;
    static constexpr double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                                   1187353796428800.0,  129060195264000.0,   10559470521600.0,
                                   670442572800.0,      33522128640.0,       1323241920.0,
                                   40840800.0,          960960.0,            16380.0,
                                   182.0,               1.0};
    constexpr double theta13 = 5.371920351148152;
    const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
    int s = 0;
    if (norm > theta13) s = static_cast<int>(std::ceil(std::log2(norm / theta13)));
    const FloatMatrix x = a / std::ldexp(1.0, s);
    const FloatMatrix id = FloatMatrix::Identity(n, n);
    const FloatMatrix x2 = x * x, x4 = x2 * x2, x6 = x4 * x2;
    const FloatMatrix u =
        x * (x6 * (b[13] * x6 + b[11] * x4 + b[9] * x2) + b[7] * x6 + b[5] * x4 + b[3] * x2 + b[1] * id);
    const FloatMatrix v = x6 * (b[12] * x6 + b[10] * x4 + b[8] * x2) + b[6] * x6 + b[4] * x4 + b[2] * x2 + b[0] * id;
    FloatMatrix r = (v - u).partialPivLu().solve(v + u);
    for (int i = 0; i < s; ++i) r = r * r;
    require_finite(r, "matrix_exp result");
    return r;
}

// ---------------------------------------------------------------------------
// single steps

namespace detail {

inline TruncatedSeries<FloatMatrixPoly> graded_input(const FloatMatrixPoly& a, std::size_t grade)
{
    return monomial(FloatPolyPreLie(a.dim()), grade, 1, a);
}

/// sum of all grades of R(series), evaluated at s = h
inline FloatMatrix integrated_sum(const TruncatedSeries<FloatMatrixPoly>& s, double h)
{
    FloatMatrixPoly acc(s[0].dim());
    for (std::size_t k = 0; k <= s.order(); ++k) acc = acc + s[k];
    return acc.integral()(h);
}

inline void check_step(const FloatMatrixPoly& a, double h)
{
    if (!(h > 0.0) || !std::isfinite(h)) throw Error("step size must be positive and finite");
    for (const auto& c : a.coeffs()) require_finite(c, "A(t) coefficient");
}

} // namespace detail

/// Truncation grade used by each Magnus order.
inline std::size_t magnus_grade(int order)
{
    if (order == 2) return 1;
    if (order == 4) return 3;
    throw Error("Magnus order must be 2 or 4");
}

/// Omega over [t0, t0 + h] truncated at the grade for `order`.
inline FloatMatrix magnus_omega(const FloatMatrixPoly& a, double t0, double h, int order)
{
    detail::check_step(a, h);
    const std::size_t g = magnus_grade(order);
    const FloatPolyPreLie pl(a.dim());
    const auto omega = magnus_left_rhd(pl, detail::graded_input(a.shifted(t0), g));
    const FloatMatrix out = detail::integrated_sum(omega, h);
    require_finite(out, "Magnus exponent");
    return out;
}

inline FloatMatrix magnus_step(const FloatMatrixPoly& a, double t0, double h, int order)
{
    return matrix_exp(magnus_omega(a, t0, h, order));
}

/// exp(int U'_0) exp(int U'_1) ... with `exponentials` factors; U'_1 kept through grade 3.
inline FloatMatrix fer_step(const FloatMatrixPoly& a, double t0, double h, int exponentials)
{
    detail::check_step(a, h);
    if (exponentials != 1 && exponentials != 2) throw Error("Fer exponential count must be 1 or 2");
    const std::size_t g = exponentials == 1 ? 1 : 3;
    const FloatPolyPreLie pl(a.dim());
    std::vector<TruncatedSeries<FloatMatrixPoly>> us{detail::graded_input(a.shifted(t0), g)};
    if (exponentials == 2) us.push_back(fer_next(pl, us.back()));
    FloatMatrix out = FloatMatrix::Identity(static_cast<Eigen::Index>(a.dim()), static_cast<Eigen::Index>(a.dim()));
    for (const auto& u : us) out = out * matrix_exp(detail::integrated_sum(u, h));
    return out;
}

// ---------------------------------------------------------------------------
// multi-step integration

enum class OdeMethod { magnus2, magnus4, fer1, fer2 };

inline std::string method_name(OdeMethod m)
{
    switch (m) {
    case OdeMethod::magnus2: return "magnus2";
    case OdeMethod::magnus4: return "magnus4";
    case OdeMethod::fer1: return "fer1";
    case OdeMethod::fer2: return "fer2";
    }
    return "?";
}

inline OdeMethod parse_method(const std::string& s)
{
    for (auto m : {OdeMethod::magnus2, OdeMethod::magnus4, OdeMethod::fer1, OdeMethod::fer2})
        if (method_name(m) == s) return m;
    throw ParseError("unknown method '" + s + "'");
}

/// nominal global order
inline int method_order(OdeMethod m) { return (m == OdeMethod::magnus4 || m == OdeMethod::fer2) ? 4 : 2; }
inline int method_exponentials(OdeMethod m) { return m == OdeMethod::fer2 ? 2 : 1; }

inline FloatMatrix method_step(const FloatMatrixPoly& a, double t0, double h, OdeMethod m)
{
    switch (m) {
    case OdeMethod::magnus2: return magnus_step(a, t0, h, 2);
    case OdeMethod::magnus4: return magnus_step(a, t0, h, 4);
    case OdeMethod::fer1: return fer_step(a, t0, h, 1);
    case OdeMethod::fer2: return fer_step(a, t0, h, 2);
    }
    throw Error("unknown method");
}

struct StepResult {
    FloatMatrix phi;                  // Phi(T)
    std::vector<FloatMatrix> steps;   // Phi(t_{k+1} <- t_k)
    OdeMethod method{};
    int order = 0;
    int exponentials = 0;
};

inline StepResult integrate(const FloatMatrixPoly& a, double horizon, std::size_t steps, OdeMethod m)
{
    if (steps < 1) throw Error("steps must be at least 1");
    if (!(horizon > 0.0)) throw Error("horizon must be positive");
    StepResult r;
    r.method = m;
    r.order = method_order(m);
    r.exponentials = method_exponentials(m);
    const auto d = static_cast<Eigen::Index>(a.dim());
    r.phi = FloatMatrix::Identity(d, d);
    const double h = horizon / static_cast<double>(steps);
    for (std::size_t k = 0; k < steps; ++k) {
        r.steps.push_back(method_step(a, static_cast<double>(k) * h, h, m));
        r.phi = r.steps.back() * r.phi;
    }
    require_finite(r.phi, "solution");
    return r;
}

inline double max_norm_diff(const FloatMatrix& x, const FloatMatrix& y) { return (x - y).cwiseAbs().maxCoeff(); }

struct ConvergenceRow {
    std::size_t steps;
    double h;
    double error;
    double slope_window;  // slope against the previous row; NaN for the first row
};

struct ConvergenceStudy {
    std::vector<ConvergenceRow> rows;
    double slope = 0;  // least-squares slope of log(error) against log(h)
};

/// Reference: magnus4 with 64x the largest step count.
inline FloatMatrix reference_solution(const FloatMatrixPoly& a, double horizon, std::size_t max_steps)
{
    return integrate(a, horizon, 64 * max_steps, OdeMethod::magnus4).phi;
}

inline double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double den = n * sxx - sx * sx;
    if (den == 0.0) throw DegenerateFit("step sizes do not vary");
    return (n * sxy - sx * sy) / den;
}

/// Errors below this are rounding noise and cannot carry a slope.
inline constexpr double fit_floor = 1e-13;

inline ConvergenceStudy convergence_study(const FloatMatrixPoly& a, double horizon, OdeMethod m,
                                          std::vector<std::size_t> step_counts)
{
    if (step_counts.size() < 4) throw DegenerateFit("need at least 4 step counts");
    std::sort(step_counts.begin(), step_counts.end());
    const double ratio = static_cast<double>(step_counts[1]) / static_cast<double>(step_counts[0]);
    for (std::size_t i = 1; i < step_counts.size(); ++i) {
        const double q = static_cast<double>(step_counts[i]) / static_cast<double>(step_counts[i - 1]);
        if (step_counts[i - 1] == 0 || std::abs(q - ratio) > 1e-12 || ratio <= 1.0)
            throw DegenerateFit("step counts must form a geometric sequence");
    }
    const FloatMatrix ref = reference_solution(a, horizon, step_counts.back());
    ConvergenceStudy st;
    std::vector<double> lx, ly;
    for (std::size_t n : step_counts) {
        const double h = horizon / static_cast<double>(n);
        const double err = max_norm_diff(integrate(a, horizon, n, m).phi, ref);
        double window = std::nan("");
        if (!st.rows.empty() && err > 0 && st.rows.back().error > 0)
            window = std::log(err / st.rows.back().error) / std::log(h / st.rows.back().h);
        st.rows.push_back({n, h, err, window});
        if (!(err > fit_floor)) throw DegenerateFit("error at machine precision; no measurable order");
        lx.push_back(std::log(h));
        ly.push_back(std::log(err));
    }
    st.slope = least_squares_slope(lx, ly);
    return st;
}

inline double convergence_order(const FloatMatrixPoly& a, double horizon, OdeMethod m,
                                 const std::vector<std::size_t>& step_counts)
{
    return convergence_study(a, horizon, m, step_counts).slope;
}

/// |det Phi(T) - exp(int_0^T trace A)| / exp(int_0^T trace A)
inline double liouville_error(const FloatMatrixPoly& a, double horizon, const FloatMatrix& phi)
{
    const double tr_int = a.integral()(horizon).trace();
    const double expected = std::exp(tr_int);
    return std::abs(phi.determinant() - expected) / expected;
}

/// shortest round-trip representation
inline std::string format_double(double x)
{
    if (std::isnan(x)) return "";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

inline void write_convergence_csv(std::ostream& os, const ConvergenceStudy& st)
{
    os << "steps,h,error,slope_window\n";
    for (const auto& r : st.rows)
        os << r.steps << ',' << format_double(r.h) << ',' << format_double(r.error) << ','
           << format_double(r.slope_window) << '\n';
}

/// Fixed noncommuting 2x2 test problem on [0, 1]:
///   A(t) = [[0, 1], [-1, 0]] + t [[1, 0], [0, -1/2]] + t^2 [[0, 0], [2, 0]]
inline FloatMatrixPoly test_problem()
{
    FloatMatrix a0(2, 2), a1(2, 2), a2(2, 2);
    a0 << 0, 1, -1, 0;
    a1 << 1, 0, 0, -0.5;
    a2 << 0, 0, 2, 0;
    return FloatMatrixPoly(2, {a0, a1, a2});
}

} // namespace dendrimag
