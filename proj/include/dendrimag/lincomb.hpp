#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <utility>

#include "dendrimag/rational.hpp"

namespace dendrimag {

/// Finitely supported function from basis objects to rationals. Zero
/// coefficients are never stored, so equality is map equality.
template <class Key, class Compare = std::less<Key>>
class LinComb {
public:
    using key_type = Key;
    using map_type = std::map<Key, Rational, Compare>;

    LinComb() = default;
    explicit LinComb(const Key& k, Rational c = Rational(1)) { add_term(k, std::move(c)); }

    void add_term(const Key& k, const Rational& c)
    {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    [[nodiscard]] Rational coefficient(const Key& k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] const map_type& terms() const { return terms_; }
    [[nodiscard]] auto begin() const { return terms_.begin(); }
    [[nodiscard]] auto end() const { return terms_.end(); }

    LinComb& operator+=(const LinComb& o)
    {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o)
    {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    /// this += q * o
    LinComb& axpy(const Rational& q, const LinComb& o)
    {
        if (q.is_zero()) return *this;
        for (const auto& [k, c] : o.terms_) add_term(k, q * c);
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator-(LinComb a)
    {
        for (auto& [k, c] : a.terms_) c = -c;
        return a;
    }
    friend LinComb operator*(const Rational& q, LinComb a)
    {
        if (q.is_zero()) return LinComb{};
        for (auto& [k, c] : a.terms_) c *= q;
        return a;
    }
    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

private:
    map_type terms_;
};

/// Bilinear extension of an operation on basis objects that itself returns
/// a linear combination.
template <class K1, class C1, class K2, class C2, class Out, class F>
Out bilinear(const LinComb<K1, C1>& x, const LinComb<K2, C2>& y, F&& basis_op)
{
    Out out;
    for (const auto& [k1, c1] : x)
        for (const auto& [k2, c2] : y) out.axpy(c1 * c2, basis_op(k1, k2));
    return out;
}

} // namespace dendrimag
