#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "dendrimag/errors.hpp"
#include "dendrimag/rational.hpp"

namespace dendrimag {

/// Dense square matrix over the rationals.
class MatrixRat {
public:
    MatrixRat() = default;
    explicit MatrixRat(std::size_t n) : n_(n), a_(n * n) {}
    MatrixRat(std::initializer_list<std::initializer_list<Rational>> rows) : n_(rows.size()), a_()
    {
        a_.reserve(n_ * n_);
        for (const auto& r : rows) {
            if (r.size() != n_) throw DimensionMismatch("matrix literal must be square");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }

    static MatrixRat identity(std::size_t n)
    {
        MatrixRat m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }

    [[nodiscard]] std::size_t dim() const { return n_; }
    [[nodiscard]] const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    [[nodiscard]] Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

    [[nodiscard]] bool is_zero() const
    {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }
    [[nodiscard]] std::size_t nonzeros() const
    {
        std::size_t k = 0;
        for (const auto& x : a_) k += x.is_zero() ? 0 : 1;
        return k;
    }

    MatrixRat& operator+=(const MatrixRat& o)
    {
        check(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    MatrixRat& operator-=(const MatrixRat& o)
    {
        check(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    friend MatrixRat operator+(MatrixRat a, const MatrixRat& b) { return a += b; }
    friend MatrixRat operator-(MatrixRat a, const MatrixRat& b) { return a -= b; }
    friend MatrixRat operator-(MatrixRat a)
    {
        for (auto& x : a.a_) x = -x;
        return a;
    }
    friend MatrixRat operator*(const Rational& q, MatrixRat a)
    {
        for (auto& x : a.a_) x *= q;
        return a;
    }
    friend MatrixRat operator*(const MatrixRat& a, const MatrixRat& b)
    {
        a.check(b);
        const std::size_t n = a.n_;
        MatrixRat c(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j) c.a_[i * n + j] += aik * b(k, j);
            }
        return c;
    }
    friend bool operator==(const MatrixRat& a, const MatrixRat& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

private:
    void check(const MatrixRat& o) const
    {
        if (o.n_ != n_)
            throw DimensionMismatch("matrix dimensions " + std::to_string(n_) + " and " + std::to_string(o.n_));
    }

    std::size_t n_ = 0;
    std::vector<Rational> a_;
};

inline MatrixRat commutator(const MatrixRat& a, const MatrixRat& b) { return a * b - b * a; }

/// Full matrix algebra M_n(Q).
class MatrixAlgebra {
public:
    using value_type = MatrixRat;
    explicit MatrixAlgebra(std::size_t n) : n_(n) {}
    [[nodiscard]] std::size_t dim() const { return n_; }
    [[nodiscard]] MatrixRat zero() const { return MatrixRat(n_); }
    [[nodiscard]] MatrixRat one() const { return MatrixRat::identity(n_); }
    [[nodiscard]] bool is_zero(const MatrixRat& m) const { return m.is_zero(); }
    [[nodiscard]] std::size_t support_size(const MatrixRat& m) const { return m.nonzeros(); }
    [[nodiscard]] MatrixRat mul(const MatrixRat& a, const MatrixRat& b) const { return a * b; }

private:
    std::size_t n_;
};

} // namespace dendrimag
