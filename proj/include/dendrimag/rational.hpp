#pragma once

// Exact rational scalars. Thin value wrapper over GMP's mpq_class that keeps
// every value canonical (lowest terms, positive denominator, zero == 0/1).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dendrimag/errors.hpp"

namespace dendrimag {

class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT: implicit by design of a scalar type
    Rational(int v) : q_(static_cast<long>(v)) {}
    Rational(long num, long den)
    {
        if (den == 0) throw ParseError("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "p" or "p/q" (optional leading sign on p, q > 0 after canonicalization).
    static Rational parse(std::string_view s)
    {
        auto trim = [](std::string_view v) {
            while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
            while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
            return v;
        };
        s = trim(s);
        auto valid_int = [](std::string_view v) {
            if (!v.empty() && (v.front() == '-' || v.front() == '+')) v.remove_prefix(1);
            if (v.empty()) return false;
            for (char c : v)
                if (c < '0' || c > '9') return false;
            return true;
        };
        auto slash = s.find('/');
        std::string_view num = s.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
        if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
            throw ParseError("malformed rational '" + std::string(s) + "'");
        mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
        mpz_class d(std::string(den), 10);
        if (d == 0) throw ParseError("rational with zero denominator '" + std::string(s) + "'");
        mpq_class q(n, d);
        q.canonicalize();
        return Rational(std::move(q));
    }

    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] int sign() const { return sgn(q_); }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
    [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }
    [[nodiscard]] double to_double() const { return q_.get_d(); }
    [[nodiscard]] const mpq_class& raw() const { return q_; }

    [[nodiscard]] std::string to_string() const
    {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    [[nodiscard]] Rational inverse() const
    {
        if (is_zero()) throw std::domain_error("inverse of zero rational");
        return Rational(mpq_class(1) / q_);
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero()) throw std::domain_error("division by zero rational");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class q_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Integer power with exponent >= 0.
inline Rational pow(const Rational& base, unsigned exp)
{
    Rational out(1);
    for (unsigned i = 0; i < exp; ++i) out *= base;
    return out;
}

inline Rational factorial(unsigned n)
{
    mpz_class f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return Rational(mpq_class(f));
}

inline Rational binomial(unsigned n, unsigned k)
{
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(mpq_class(b));
}

} // namespace dendrimag
