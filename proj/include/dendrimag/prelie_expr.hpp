#pragma once

// Formal pre-Lie monomials over the single generator a: fully parenthesized
// binary expressions "a" | "(E>E)" with ">" standing for |>. Their rational
// combinations form the free magmatic algebra; evaluating them in the free
// pre-Lie algebra (rooted trees) or in the free dendriform algebra (planar
// trees) applies the pre-Lie relation implicitly.

#include <cstddef>
#include <optional>
#include <set>
#include <tuple>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dendrimag/dendriform.hpp"
#include "dendrimag/errors.hpp"
#include "dendrimag/lincomb.hpp"
#include "dendrimag/planar_tree.hpp"
#include "dendrimag/rooted_tree.hpp"

namespace dendrimag {

class PreLieExpr {
public:
    PreLieExpr() : repr_("a") {}

    static PreLieExpr generator() { return {}; }
    static PreLieExpr rhd(const PreLieExpr& l, const PreLieExpr& r)
    {
        return PreLieExpr("(" + l.repr_ + ">" + r.repr_ + ")");
    }

    static PreLieExpr parse(std::string_view s)
    {
        if (!well_formed(s)) throw ParseError("malformed pre-Lie expression '" + std::string(s) + "'");
        return PreLieExpr(std::string(s));
    }

    [[nodiscard]] const std::string& str() const { return repr_; }
    [[nodiscard]] bool is_generator() const { return repr_ == "a"; }
    [[nodiscard]] std::size_t degree() const
    {
        std::size_t n = 0;
        for (char c : repr_) n += c == 'a' ? 1 : 0;
        return n;
    }
    [[nodiscard]] PreLieExpr left() const { return PreLieExpr(repr_.substr(1, split() - 1)); }
    [[nodiscard]] PreLieExpr right() const
    {
        const std::size_t k = split();
        return PreLieExpr(repr_.substr(k + 1, repr_.size() - k - 2));
    }

    friend bool operator<(const PreLieExpr& a, const PreLieExpr& b) { return a.repr_ < b.repr_; }
    friend bool operator==(const PreLieExpr& a, const PreLieExpr& b) { return a.repr_ == b.repr_; }

    /// Position of the top-level '>' of a compound expression.
    [[nodiscard]] std::size_t split() const
    {
        if (is_generator()) throw std::logic_error("the generator has no operands");
        return top_split(repr_, 0, repr_.size());
    }

    /// Top-level '>' of the compound expression occupying s[begin, end).
    static std::size_t top_split(std::string_view s, std::size_t begin, std::size_t end)
    {
        int depth = 0;
        for (std::size_t i = begin; i < end; ++i) {
            if (s[i] == '(') ++depth;
            else if (s[i] == ')') --depth;
            else if (s[i] == '>' && depth == 1) return i;
        }
        throw std::logic_error("no top-level operator");
    }

private:
    explicit PreLieExpr(std::string s) : repr_(std::move(s)) {}

    static bool well_formed(std::string_view s)
    {
        std::size_t pos = 0;
        auto rec = [&](auto&& self) -> bool {
            if (pos >= s.size()) return false;
            if (s[pos] == 'a') {
                ++pos;
                return true;
            }
            if (s[pos] != '(') return false;
            ++pos;
            if (!self(self)) return false;
            if (pos >= s.size() || s[pos] != '>') return false;
            ++pos;
            if (!self(self)) return false;
            if (pos >= s.size() || s[pos] != ')') return false;
            ++pos;
            return true;
        };
        return rec(rec) && pos == s.size();
    }

    std::string repr_;
};

using PreLieComb = LinComb<PreLieExpr>;

/// Free magmatic algebra on one generator: |> is purely formal, so running
/// the Magnus/Fer recursions here yields the raw monomials they produce.
class FormalPreLie {
public:
    using value_type = PreLieComb;
    [[nodiscard]] PreLieComb generator() const { return PreLieComb(PreLieExpr::generator()); }
    [[nodiscard]] PreLieComb zero() const { return {}; }
    [[nodiscard]] bool is_zero(const PreLieComb& x) const { return x.is_zero(); }
    [[nodiscard]] std::size_t support_size(const PreLieComb& x) const { return x.size(); }
    [[nodiscard]] PreLieComb rhd(const PreLieComb& a, const PreLieComb& b) const
    {
        return bilinear<PreLieExpr, std::less<PreLieExpr>, PreLieExpr, std::less<PreLieExpr>, PreLieComb>(
            a, b, [](const PreLieExpr& x, const PreLieExpr& y) { return PreLieComb(PreLieExpr::rhd(x, y)); });
    }
};

/// Evaluation in the free pre-Lie algebra (rooted trees, grafting).
inline RootedComb eval_rooted(const PreLieExpr& e)
{
    if (e.is_generator()) return RootedComb(RootedTree{});
    return rt_graft(eval_rooted(e.left()), eval_rooted(e.right()));
}

inline RootedComb eval_rooted(const PreLieComb& c)
{
    RootedComb out;
    for (const auto& [e, q] : c) out.axpy(q, eval_rooted(e));
    return out;
}

/// Evaluation in the free dendriform algebra with a |> b = a > b - b < a.
inline PlanarComb eval_planar(const FreeDendriform& fd, const PreLieExpr& e)
{
    if (e.is_generator()) return fd.generator();
    return prelie_rhd(fd, eval_planar(fd, e.left()), eval_planar(fd, e.right()));
}

inline PlanarComb eval_planar(const FreeDendriform& fd, const PreLieComb& c)
{
    PlanarComb out;
    for (const auto& [e, q] : c) out.axpy(q, eval_planar(fd, e));
    return out;
}

inline std::size_t monomial_count(const PreLieComb& c) { return c.size(); }

template <class Key, class Compare>
std::size_t support_count(const LinComb<Key, Compare>& c)
{
    return c.size();
}

/// "c1 e1 + c2 e2 + ..." with signed rational coefficients; "0" when empty.
inline std::string format_comb(const PreLieComb& c)
{
    if (c.is_zero()) return "0";
    std::string out;
    for (const auto& [e, q] : c) {
        if (!out.empty()) out += " + ";
        out += q.to_string() + " " + e.str();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Term reduction by rewriting with the left pre-Lie relation

/// Thrown by rewrite_reduce when the state budget runs out; carries the
/// best (sound) combination found so far.
class BudgetExhausted : public Error {
public:
    BudgetExhausted(PreLieComb best, std::size_t explored)
        : Error("rewrite budget exhausted after " + std::to_string(explored) + " states"), best_(std::move(best))
    {
    }
    [[nodiscard]] const PreLieComb& best() const { return best_; }

private:
    PreLieComb best_;
};

namespace detail {

inline std::string comb_key(const PreLieComb& c)
{
    std::string k;
    for (const auto& [e, q] : c) k += q.to_string() + ":" + e.str() + ";";
    return k;
}

// Every combination reachable from c by one application of
//   (x|>y)|>z - x|>(y|>z) - (y|>x)|>z + y|>(x|>z) = 0
// to a subterm of one monomial, eliminating that subterm.
inline std::vector<PreLieComb> rewrite_neighbors(const PreLieComb& c)
{
    std::vector<PreLieComb> out;
    for (const auto& [mono, coef] : c) {
        const std::string& m = mono.str();
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] != '(') continue;
            // subterm occupies [i, j)
            int depth = 0;
            std::size_t j = i;
            for (; j < m.size(); ++j) {
                if (m[j] == '(') ++depth;
                else if (m[j] == ')' && --depth == 0) break;
            }
            ++j;
            const std::string_view whole(m);
            const std::size_t k = PreLieExpr::top_split(whole, i, j);
            const std::string lhs(whole.substr(i + 1, k - i - 1));
            const std::string rhs(whole.substr(k + 1, j - k - 2));
            const std::string before(whole.substr(0, i));
            const std::string after(whole.substr(j));
            auto in_context = [&](const std::string& sub) { return PreLieExpr::parse(before + sub + after); };
            auto op = [](const std::string& a, const std::string& b) { return "(" + a + ">" + b + ")"; };

            // (x, y, z, sign of the subterm in the relation)
            std::vector<std::tuple<std::string, std::string, std::string, int>> matches;
            if (lhs.front() == '(') {
                const std::size_t s = PreLieExpr::top_split(lhs, 0, lhs.size());
                const std::string u = lhs.substr(1, s - 1), v = lhs.substr(s + 1, lhs.size() - s - 2);
                matches.emplace_back(u, v, rhs, +1);  // (x|>y)|>z
                matches.emplace_back(v, u, rhs, -1);  // (y|>x)|>z
            }
            if (rhs.front() == '(') {
                const std::size_t s = PreLieExpr::top_split(rhs, 0, rhs.size());
                const std::string v = rhs.substr(1, s - 1), w = rhs.substr(s + 1, rhs.size() - s - 2);
                matches.emplace_back(lhs, v, w, -1);  // x|>(y|>z)
                matches.emplace_back(v, lhs, w, +1);  // y|>(x|>z)
            }
            for (const auto& [x, y, z, sigma] : matches) {
                if (x == y) continue;  // relation is formally trivial
                PreLieComb next = c;
                const Rational f = -coef * Rational(sigma);
                next.add_term(in_context(op(op(x, y), z)), f);
                next.add_term(in_context(op(x, op(y, z))), -f);
                next.add_term(in_context(op(op(y, x), z)), -f);
                next.add_term(in_context(op(y, op(x, z))), f);
                out.push_back(std::move(next));
            }
        }
    }
    return out;
}

} // namespace detail

struct RewriteOptions {
    std::size_t budget = 200000;  ///< maximum number of states examined
    std::size_t lookahead = 2;    ///< rewrite depth explored before committing
};

/// Greedy reduction of the number of monomials using the pre-Lie relation.
///
/// From the current combination, all combinations within `lookahead`
/// rewrites are examined; the search moves to the smallest strictly better
/// one (ties broken by the textual key) and repeats until no improvement is
/// in reach. Sound by construction and re-checked in the rooted-tree model;
/// minimality is not guaranteed.
inline PreLieComb rewrite_reduce(const PreLieComb& input, RewriteOptions opts = {})
{
    const RootedComb target = eval_rooted(input);
    auto checked = [&](const PreLieComb& c) {
        if (!(eval_rooted(c) == target)) throw std::logic_error("rewrite_reduce produced an unsound result");
        return c;
    };

    PreLieComb best = input;
    std::size_t explored = 0;
    while (true) {
        std::set<std::string> seen{detail::comb_key(best)};
        std::vector<PreLieComb> frontier{best};
        std::optional<PreLieComb> improvement;
        for (std::size_t depth = 0; depth < opts.lookahead && !frontier.empty() && !improvement; ++depth) {
            std::vector<PreLieComb> level;
            for (const auto& state : frontier) {
                for (auto& nb : detail::rewrite_neighbors(state)) {
                    if (!seen.insert(detail::comb_key(nb)).second) continue;
                    if (++explored > opts.budget) throw BudgetExhausted(checked(best), explored - 1);
                    level.push_back(std::move(nb));
                }
            }
            for (const auto& cand : level) {
                if (cand.size() >= best.size()) continue;
                if (!improvement || cand.size() < improvement->size() ||
                    (cand.size() == improvement->size() && detail::comb_key(cand) < detail::comb_key(*improvement)))
                    improvement = cand;
            }
            frontier = std::move(level);
        }
        if (!improvement) return checked(best);
        best = std::move(*improvement);
    }
}

} // namespace dendrimag
